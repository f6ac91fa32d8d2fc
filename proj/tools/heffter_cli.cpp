// Command-line front end for the heffter shared library. Exit codes:
// 0 success / valid, 1 error or failed check, 2 out of scope.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "heffter.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitOutOfScope = 2;

struct ArrayHandle {
  heffter_array* a = nullptr;
  ~ArrayHandle() { heffter_array_free(a); }
};

struct ReportHandle {
  heffter_report* r = nullptr;
  ~ReportHandle() { heffter_report_free(r); }
};

std::string take_string(char* s) {
  std::string out = s ? s : "";
  heffter_string_free(s);
  return out;
}

int write_output(const std::string& content, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return kExitOk;
  }
  std::ofstream out(path);
  out << content;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitError;
  }
  return kExitOk;
}

int serialize(const heffter_array* a, const std::string& format, const std::string& path) {
  char* buf = nullptr;
  int rc = format == "json" ? heffter_array_to_json(a, &buf) : heffter_array_to_text(a, &buf);
  if (rc != HEFFTER_OK) {
    std::cerr << "error: " << heffter_last_error() << "\n";
    return kExitError;
  }
  return write_output(take_string(buf), path);
}

int load_array(const std::string& path, heffter_array** out) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    return kExitError;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  // sniff the format: JSON documents start with '{'
  std::size_t first = text.find_first_not_of(" \t\r\n");
  int rc = (first != std::string::npos && text[first] == '{')
               ? heffter_array_from_json(text.c_str(), out)
               : heffter_array_from_text(text.c_str(), out);
  if (rc != HEFFTER_OK) {
    std::cerr << "error: " << heffter_last_error() << "\n";
    return kExitError;
  }
  return kExitOk;
}

const char* case_name(int verdict) {
  switch (verdict) {
    case HEFFTER_CASE_A: return "CaseA";
    case HEFFTER_CASE_B: return "CaseB";
    case HEFFTER_CASE_C: return "CaseC";
    case HEFFTER_CASE_D: return "CaseD";
    case HEFFTER_CASE_E: return "CaseE";
    case HEFFTER_INTEGER_CASE: return "IntegerCase";
    case HEFFTER_FULL_SQUARE: return "FullSquare";
    default: return "Invalid";
  }
}

int cmd_generate(long n, long k, const std::string& format, const std::string& output) {
  ArrayHandle h;
  int rc = heffter_generate(n, k, &h.a);
  if (rc == HEFFTER_ERR_OUT_OF_SCOPE) {
    int verdict = 0;
    char reason[256] = {0};
    heffter_classify(n, k, &verdict, reason, sizeof reason);
    std::cerr << "out of scope (" << case_name(verdict) << "): " << reason << "\n";
    return kExitOutOfScope;
  }
  if (rc != HEFFTER_OK) {
    std::cerr << "error: " << heffter_last_error() << "\n";
    return kExitError;
  }
  return serialize(h.a, format, output);
}

int cmd_classify(long n, long k) {
  int verdict = 0;
  char reason[256] = {0};
  if (heffter_classify(n, k, &verdict, reason, sizeof reason) != HEFFTER_OK) {
    std::cerr << "error: " << heffter_last_error() << "\n";
    return kExitError;
  }
  std::cout << case_name(verdict) << ": " << reason << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& path, long k, bool integer_mode, bool as_json) {
  ArrayHandle h;
  if (int rc = load_array(path, &h.a); rc != kExitOk) return rc;
  ReportHandle rep;
  if (heffter_verify(h.a, k, integer_mode ? 1 : 0, &rep.r) != HEFFTER_OK) {
    std::cerr << "error: " << heffter_last_error() << "\n";
    return kExitError;
  }
  char* buf = nullptr;
  int rc = as_json ? heffter_report_to_json(rep.r, &buf) : heffter_report_to_text(rep.r, &buf);
  if (rc != HEFFTER_OK) {
    std::cerr << "error: " << heffter_last_error() << "\n";
    return kExitError;
  }
  std::cout << take_string(buf);
  if (as_json) std::cout << "\n";
  return heffter_report_valid(rep.r) ? kExitOk : kExitError;
}

struct SweepRow {
  long n, k;
  std::string verdict;
  long long modulus = 0;
  bool built = false;
  bool valid = false;
  double millis = 0.0;
};

int cmd_sweep(long max_n, const std::string& report_path, unsigned jobs) {
  if (max_n < 6) {
    std::cerr << "error: sweep needs max_n >= 6\n";
    return kExitError;
  }
  std::vector<std::pair<long, long>> pairs;
  for (long n = 4; n <= max_n; ++n)
    for (long k = 3; k < n; ++k) pairs.push_back({n, k});

  std::vector<SweepRow> rows(pairs.size());
  std::atomic<std::size_t> next{0};
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());

  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < pairs.size(); i = next.fetch_add(1)) {
      auto [n, k] = pairs[i];
      SweepRow& row = rows[i];
      row.n = n;
      row.k = k;
      int verdict = 0;
      heffter_classify(n, k, &verdict, nullptr, 0);
      row.verdict = case_name(verdict);
      if (verdict > HEFFTER_CASE_E) continue;  // no construction attempted
      auto t0 = std::chrono::steady_clock::now();
      ArrayHandle h;
      if (heffter_generate(n, k, &h.a) != HEFFTER_OK) continue;
      row.built = true;
      ReportHandle rep;
      if (heffter_verify(h.a, k, 0, &rep.r) != HEFFTER_OK) continue;
      row.valid = heffter_report_valid(rep.r) != 0;
      row.modulus = heffter_report_modulus(rep.r);
      row.millis =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  // rows are already in (n, k) order by construction
  std::ostringstream csv;
  csv << "n,k,case,modulus,verdict,millis\n";
  std::size_t in_scope = 0, valid = 0;
  for (const auto& row : rows) {
    bool scope = row.verdict.rfind("Case", 0) == 0;
    csv << row.n << ',' << row.k << ',' << row.verdict << ',';
    if (scope) {
      ++in_scope;
      valid += row.valid ? 1 : 0;
      csv << row.modulus << ',' << (row.valid ? "valid" : "INVALID") << ',' << row.millis;
    } else {
      csv << ",skipped,";
    }
    csv << '\n';
  }
  if (int rc = write_output(csv.str(), report_path); rc != kExitOk) return rc;
  std::cerr << "sweep: " << valid << "/" << in_scope << " in-scope pairs valid (max n = " << max_n
            << ")\n";
  return valid == in_scope ? kExitOk : kExitError;
}

int cmd_search(long n, long k, unsigned long long nodes, long long millis,
               const std::string& format, const std::string& output) {
  int outcome = 0;
  ArrayHandle h;
  if (heffter_search(n, k, nodes, millis, &outcome, &h.a) != HEFFTER_OK) {
    std::cerr << "error: " << heffter_last_error() << "\n";
    return kExitError;
  }
  switch (outcome) {
    case HEFFTER_SEARCH_FOUND:
      return serialize(h.a, format, output);
    case HEFFTER_SEARCH_EXHAUSTED:
      std::cerr << "exhausted: no H(" << n << ";" << k << ") exists\n";
      return kExitOutOfScope;
    default:
      std::cerr << "budget exceeded before the search space was covered\n";
      return kExitError;
  }
}

int cmd_fixtures_list() {
  long count = heffter_fixture_count();
  for (long i = 0; i < count; ++i) {
    char buf[64] = {0};
    heffter_fixture_name(i, buf, sizeof buf);
    std::cout << buf << "\n";
  }
  return kExitOk;
}

int cmd_fixtures_dump(const std::string& name, long k, const std::string& format,
                      const std::string& output) {
  ArrayHandle h;
  if (heffter_fixture_get(name.c_str(), k, &h.a) != HEFFTER_OK) {
    std::cerr << "error: " << heffter_last_error() << "\n";
    return kExitError;
  }
  return serialize(h.a, format, output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heffter array construction engine and verifier"};
  app.require_subcommand(1);

  long n = 0, k = 0;
  std::string format = "text", output, path, name, report_path;
  long verify_k = 0;
  bool integer_mode = false, as_json = false;
  long max_n = 0;
  unsigned jobs = 0;
  unsigned long long nodes = 1'000'000'000ULL;
  long long millis = -1;
  long fixture_k = 0;

  auto* gen = app.add_subcommand("generate", "construct an H(n;k)");
  gen->add_option("n", n, "order")->required();
  gen->add_option("k", k, "filled cells per row and column")->required();
  gen->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  gen->add_option("-o,--output", output, "output file (default: stdout)");

  auto* cls = app.add_subcommand("classify", "classify parameters (n, k)");
  cls->add_option("n", n, "order")->required();
  cls->add_option("k", k, "filled cells per row and column")->required();

  auto* ver = app.add_subcommand("verify", "verify an array file against the definition");
  ver->add_option("file", path, "array file (text or json)")->required();
  ver->add_option("-k,--k", verify_k, "expected fill count (default: inferred)");
  ver->add_flag("--integer", integer_mode, "require exact zero line sums");
  ver->add_flag("--json", as_json, "emit the report as JSON");

  auto* swp = app.add_subcommand("sweep", "generate+verify every in-scope pair with n <= max_n");
  swp->add_option("max_n", max_n, "largest order (>= 6)")->required();
  swp->add_option("-o,--report", report_path, "CSV report path (default: stdout)");
  swp->add_option("-j,--jobs", jobs, "worker threads (default: hardware)");

  auto* sea = app.add_subcommand("search", "backtracking existence search (small n)");
  sea->add_option("n", n, "order")->required();
  sea->add_option("k", k, "filled cells per row and column")->required();
  sea->add_option("--nodes", nodes, "node budget");
  sea->add_option("--time-ms", millis, "wall-clock budget in ms (-1: none)");
  sea->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sea->add_option("-o,--output", output, "output file (default: stdout)");

  auto* fix = app.add_subcommand("fixtures", "embedded reference arrays");
  auto* fix_list = fix->add_subcommand("list", "list fixture names");
  auto* fix_dump = fix->add_subcommand("dump", "dump one fixture");
  fix_dump->add_option("name", name, "fixture name, e.g. \"H(7;3)\"")->required();
  fix_dump->add_option("--k", fixture_k, "k for parametric fixtures");
  fix_dump->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  fix_dump->add_option("-o,--output", output, "output file (default: stdout)");
  fix->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  if (gen->parsed()) return cmd_generate(n, k, format, output);
  if (cls->parsed()) return cmd_classify(n, k);
  if (ver->parsed()) return cmd_verify(path, verify_k, integer_mode, as_json);
  if (swp->parsed()) return cmd_sweep(max_n, report_path, jobs);
  if (sea->parsed()) return cmd_search(n, k, nodes, millis, format, output);
  if (fix->parsed()) {
    if (fix_list->parsed()) return cmd_fixtures_list();
    if (fix_dump->parsed()) return cmd_fixtures_dump(name, fixture_k, format, output);
  }
  return kExitError;
}
