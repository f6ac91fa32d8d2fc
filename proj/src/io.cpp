#include "heffter/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace heffter {

namespace {

using nlohmann::json;

std::string column_token(const SparseSquareArray& a, int r, int c) {
  auto v = a.at({r, c});
  return v ? std::to_string(*v) : std::string(".");
}

}  // namespace

std::string to_text(const ArrayDocument& doc) {
  const SparseSquareArray& a = doc.array;
  int n = a.order();
  // align columns for readability
  std::size_t width = 1;
  for (const auto& [p, v] : a.cells()) width = std::max(width, std::to_string(v).size());
  std::ostringstream out;
  out << n << ' ' << doc.declared_k << '\n';
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      std::string tok = column_token(a, r, c);
      if (c > 1) out << ' ';
      out << std::string(width - std::min(width, tok.size()), ' ') << tok;
    }
    out << '\n';
  }
  return out.str();
}

ArrayDocument from_text(const std::string& text) {
  std::istringstream in(text);
  long long n = 0, k = 0;
  std::string header;
  if (!std::getline(in, header)) throw error(errc::parse_error, "empty input");
  {
    std::istringstream hs(header);
    if (!(hs >> n >> k)) throw error(errc::parse_error, "header must be \"n k\"");
    std::string extra;
    if (hs >> extra) throw error(errc::parse_error, "trailing tokens after \"n k\" header");
  }
  if (n < 1 || n > 100000) throw error(errc::parse_error, "order out of range");
  if (k < 0 || k > n) throw error(errc::parse_error, "declared k out of range");
  ArrayDocument doc;
  doc.array = SparseSquareArray(static_cast<int>(n));
  doc.declared_k = static_cast<int>(k);
  for (int r = 1; r <= n; ++r) {
    std::string line;
    if (!std::getline(in, line))
      throw error(errc::parse_error, "expected " + std::to_string(n) + " rows");
    std::istringstream ls(line);
    std::string tok;
    for (int c = 1; c <= n; ++c) {
      if (!(ls >> tok))
        throw error(errc::parse_error, "row " + std::to_string(r) + " holds fewer than " +
                                           std::to_string(n) + " tokens");
      if (tok == ".") continue;
      std::int64_t v = 0;
      try {
        std::size_t used = 0;
        v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw error(errc::parse_error, "bad token \"" + tok + "\" in row " + std::to_string(r));
      }
      if (v == 0)
        throw error(errc::parse_error, "zero entry in row " + std::to_string(r) +
                                           "; empty cells are written \".\"");
      doc.array.set({r, c}, v);
    }
    std::string extra;
    if (ls >> extra)
      throw error(errc::parse_error, "row " + std::to_string(r) + " holds more than " +
                                         std::to_string(n) + " tokens");
  }
  std::string rest;
  while (std::getline(in, rest))
    if (!rest.empty() && rest.find_first_not_of(" \t\r") != std::string::npos)
      throw error(errc::parse_error, "unexpected content after the matrix");
  return doc;
}

std::string to_json(const ArrayDocument& doc) {
  json j;
  j["n"] = doc.array.order();
  j["k"] = doc.declared_k;
  json cells = json::array();
  for (const auto& [p, v] : doc.array.cells())  // map order = row-major
    cells.push_back({{"row", p.row}, {"col", p.col}, {"value", v}});
  j["cells"] = std::move(cells);
  if (!doc.masks.empty()) {
    json masks = json::object();
    for (const auto& [name, set] : doc.masks) {
      json arr = json::array();
      for (Position p : set.cells) arr.push_back({{"row", p.row}, {"col", p.col}});
      masks[name] = std::move(arr);
    }
    j["masks"] = std::move(masks);
  }
  return j.dump(2);
}

ArrayDocument from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw error(errc::parse_error, e.what());
  }
  try {
    ArrayDocument doc;
    int n = j.at("n").get<int>();
    if (n < 1) throw error(errc::parse_error, "order must be positive");
    doc.array = SparseSquareArray(n);
    doc.declared_k = j.at("k").get<int>();
    for (const auto& c : j.at("cells")) {
      std::int64_t v = c.at("value").get<std::int64_t>();
      if (v == 0) throw error(errc::parse_error, "zero entry in cells");
      doc.array.set({c.at("row").get<int>(), c.at("col").get<int>()}, v);
    }
    if (j.contains("masks")) {
      for (const auto& [name, arr] : j.at("masks").items()) {
        CellSet set{n, {}};
        for (const auto& c : arr) set.cells.insert({c.at("row").get<int>(), c.at("col").get<int>()});
        doc.masks[name] = std::move(set);
      }
    }
    return doc;
  } catch (const json::exception& e) {
    throw error(errc::parse_error, e.what());
  } catch (const error& e) {
    if (e.code() == errc::parse_error) throw;
    throw error(errc::parse_error, e.what());
  }
}

std::string report_to_json(const VerificationReport& rep) {
  json j;
  j["valid"] = rep.valid();
  j["n"] = rep.n;
  j["k"] = rep.k;
  j["modulus"] = rep.modulus;
  j["integer_mode"] = rep.integer_mode;
  auto line = [](const auto& v) { return json(std::vector(v.begin() + 1, v.end())); };
  if (!rep.row_fill.empty()) {
    j["row_fill"] = line(rep.row_fill);
    j["col_fill"] = line(rep.col_fill);
    j["row_sums"] = line(rep.row_sums);
    j["col_sums"] = line(rep.col_sums);
  }
  if (!rep.row_residues.empty()) {
    j["row_residues"] = line(rep.row_residues);
    j["col_residues"] = line(rep.col_residues);
  }
  j["support_missing"] = rep.missing;
  json dup = json::array();
  for (auto [x, c] : rep.duplicated) dup.push_back({{"value", x}, {"count", c}});
  j["support_duplicated"] = std::move(dup);
  json viol = json::array();
  for (const auto& v : rep.violations) viol.push_back({{"clause", v.clause}, {"message", v.message}});
  j["violations"] = std::move(viol);
  return j.dump(2);
}

std::string report_to_text(const VerificationReport& rep) {
  std::ostringstream out;
  if (rep.k >= 0) {
    out << (rep.integer_mode ? "integer Heffter check" : "Heffter check") << ": n = " << rep.n
        << ", k = " << rep.k << ", modulus 2nk+1 = " << rep.modulus << '\n';
  } else {
    out << "block check: n = " << rep.n << '\n';
  }
  out << "verdict: " << (rep.valid() ? "VALID" : "INVALID") << '\n';
  for (const auto& v : rep.violations) out << "  " << v.clause << ": " << v.message << '\n';
  return out.str();
}

}  // namespace heffter
