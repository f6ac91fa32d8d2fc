#include "heffter.h"

#include <cstring>
#include <string>

#include "heffter/constructions.hpp"
#include "heffter/fixtures.hpp"
#include "heffter/io.hpp"
#include "heffter/oracle.hpp"
#include "heffter/verify.hpp"

using namespace heffter;

struct heffter_array {
  ArrayDocument doc;
};

struct heffter_report {
  VerificationReport rep;
};

namespace {

thread_local std::string g_last_error = "no error";

int set_error(int status, const std::string& msg) {
  g_last_error = msg;
  return status;
}

int status_of(const error& e) {
  switch (e.code()) {
    case errc::parse_error: return HEFFTER_ERR_PARSE;
    case errc::unknown_fixture: return HEFFTER_ERR_UNKNOWN_FIXTURE;
    case errc::missing_parameter: return HEFFTER_ERR_MISSING_PARAMETER;
    case errc::invalid_argument:
    case errc::out_of_range: return HEFFTER_ERR_INVALID_ARGUMENT;
    case errc::internal: return HEFFTER_ERR_INTERNAL;
    default: return HEFFTER_ERR_CONSTRUCTION;
  }
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const error& e) {
    return set_error(status_of(e), e.what());
  } catch (const std::exception& e) {
    return set_error(HEFFTER_ERR_INTERNAL, e.what());
  }
}

int copy_string(const std::string& s, char** out) {
  char* buf = new char[s.size() + 1];
  std::memcpy(buf, s.c_str(), s.size() + 1);
  *out = buf;
  return HEFFTER_OK;
}

void copy_to(const std::string& s, char* buf, size_t len) {
  if (!buf || len == 0) return;
  size_t n = std::min(len - 1, s.size());
  std::memcpy(buf, s.data(), n);
  buf[n] = '\0';
}

int case_code(CaseVerdict v) {
  switch (v) {
    case CaseVerdict::case_a: return HEFFTER_CASE_A;
    case CaseVerdict::case_b: return HEFFTER_CASE_B;
    case CaseVerdict::case_c: return HEFFTER_CASE_C;
    case CaseVerdict::case_d: return HEFFTER_CASE_D;
    case CaseVerdict::case_e: return HEFFTER_CASE_E;
    case CaseVerdict::integer_case: return HEFFTER_INTEGER_CASE;
    case CaseVerdict::full_square: return HEFFTER_FULL_SQUARE;
    case CaseVerdict::invalid: return HEFFTER_INVALID_PARAMS;
  }
  return HEFFTER_INVALID_PARAMS;
}

// Infers a uniform fill count; throws when lines disagree.
int inferred_k(const SparseSquareArray& a) {
  int n = a.order();
  int k = a.row_fill(1);
  for (int i = 1; i <= n; ++i)
    if (a.row_fill(i) != k || a.col_fill(i) != k)
      throw error(errc::invalid_argument,
                  "fill counts are not uniform; pass k explicitly");
  return k;
}

}  // namespace

extern "C" {

const char* heffter_version(void) { return "1.0.0"; }

const char* heffter_last_error(void) { return g_last_error.c_str(); }

int heffter_classify(long n, long k, int* verdict, char* reason, size_t reason_len) {
  return guarded([&]() -> int {
    CaseClassification c = classify(n, k);
    if (verdict) *verdict = case_code(c.verdict);
    copy_to(c.reason, reason, reason_len);
    return HEFFTER_OK;
  });
}

int heffter_generate(long n, long k, heffter_array** out) {
  return guarded([&]() -> int {
    if (!out) return set_error(HEFFTER_ERR_INVALID_ARGUMENT, "out is NULL");
    *out = nullptr;
    GenerateResult res = generate(n, k);
    if (!res.array) return set_error(HEFFTER_ERR_OUT_OF_SCOPE, res.classification.reason);
    auto* a = new heffter_array;
    a->doc.array = std::move(*res.array);
    a->doc.declared_k = static_cast<int>(k);
    *out = a;
    return HEFFTER_OK;
  });
}

void heffter_array_free(heffter_array* a) { delete a; }

long heffter_array_order(const heffter_array* a) { return a ? a->doc.array.order() : 0; }

long heffter_array_fill(const heffter_array* a) { return a ? a->doc.declared_k : 0; }

long heffter_array_cell_count(const heffter_array* a) {
  return a ? static_cast<long>(a->doc.array.cell_count()) : 0;
}

int heffter_array_cell(const heffter_array* a, long index, long* row, long* col,
                       long long* value) {
  if (!a || index < 0 || index >= static_cast<long>(a->doc.array.cell_count()))
    return set_error(HEFFTER_ERR_INVALID_ARGUMENT, "cell index out of range");
  auto it = a->doc.array.cells().begin();
  std::advance(it, index);
  if (row) *row = it->first.row;
  if (col) *col = it->first.col;
  if (value) *value = it->second;
  return HEFFTER_OK;
}

long long heffter_array_value_at(const heffter_array* a, long row, long col) {
  if (!a) return 0;
  auto v = a->doc.array.at({static_cast<int>(row), static_cast<int>(col)});
  return v ? *v : 0;
}

long heffter_array_mask_cells(const heffter_array* a, const char* mask_name) {
  if (!a || !mask_name) return -1;
  auto it = a->doc.masks.find(mask_name);
  return it == a->doc.masks.end() ? -1 : static_cast<long>(it->second.cells.size());
}

int heffter_array_to_text(const heffter_array* a, char** out) {
  return guarded([&]() -> int { return copy_string(to_text(a->doc), out); });
}

int heffter_array_to_json(const heffter_array* a, char** out) {
  return guarded([&]() -> int { return copy_string(to_json(a->doc), out); });
}

int heffter_array_from_text(const char* text, heffter_array** out) {
  return guarded([&]() -> int {
    if (!text || !out) return set_error(HEFFTER_ERR_INVALID_ARGUMENT, "NULL argument");
    auto* a = new heffter_array;
    try {
      a->doc = from_text(text);
    } catch (...) {
      delete a;
      throw;
    }
    *out = a;
    return HEFFTER_OK;
  });
}

int heffter_array_from_json(const char* json, heffter_array** out) {
  return guarded([&]() -> int {
    if (!json || !out) return set_error(HEFFTER_ERR_INVALID_ARGUMENT, "NULL argument");
    auto* a = new heffter_array;
    try {
      a->doc = from_json(json);
    } catch (...) {
      delete a;
      throw;
    }
    *out = a;
    return HEFFTER_OK;
  });
}

void heffter_string_free(char* s) { delete[] s; }

int heffter_verify(const heffter_array* a, long k, int integer_mode, heffter_report** out) {
  return guarded([&]() -> int {
    if (!a || !out) return set_error(HEFFTER_ERR_INVALID_ARGUMENT, "NULL argument");
    int kk = k > 0 ? static_cast<int>(k) : inferred_k(a->doc.array);
    auto* r = new heffter_report;
    r->rep = integer_mode ? verify_integer_heffter(a->doc.array, kk)
                          : verify_heffter(a->doc.array, kk);
    *out = r;
    return HEFFTER_OK;
  });
}

void heffter_report_free(heffter_report* r) { delete r; }

int heffter_report_valid(const heffter_report* r) { return r && r->rep.valid() ? 1 : 0; }

long long heffter_report_modulus(const heffter_report* r) { return r ? r->rep.modulus : 0; }

long heffter_report_violation_count(const heffter_report* r) {
  return r ? static_cast<long>(r->rep.violations.size()) : 0;
}

int heffter_report_violation(const heffter_report* r, long index, char* buf, size_t buf_len) {
  if (!r || index < 0 || index >= static_cast<long>(r->rep.violations.size()))
    return set_error(HEFFTER_ERR_INVALID_ARGUMENT, "violation index out of range");
  const auto& v = r->rep.violations[index];
  copy_to(v.clause + ": " + v.message, buf, buf_len);
  return HEFFTER_OK;
}

int heffter_report_to_json(const heffter_report* r, char** out) {
  return guarded([&]() -> int { return copy_string(report_to_json(r->rep), out); });
}

int heffter_report_to_text(const heffter_report* r, char** out) {
  return guarded([&]() -> int { return copy_string(report_to_text(r->rep), out); });
}

int heffter_search(long n, long k, unsigned long long max_nodes, long long max_millis,
                   int* outcome, heffter_array** out) {
  return guarded([&]() -> int {
    SearchBudget budget;
    budget.max_nodes = max_nodes;
    budget.max_millis = max_millis;
    SearchResult res = search(static_cast<int>(n), static_cast<int>(k), budget);
    if (outcome) {
      switch (res.outcome) {
        case SearchOutcome::found: *outcome = HEFFTER_SEARCH_FOUND; break;
        case SearchOutcome::exhausted: *outcome = HEFFTER_SEARCH_EXHAUSTED; break;
        case SearchOutcome::budget_exceeded: *outcome = HEFFTER_SEARCH_BUDGET_EXCEEDED; break;
      }
    }
    if (out) {
      *out = nullptr;
      if (res.array) {
        auto* a = new heffter_array;
        a->doc.array = std::move(*res.array);
        a->doc.declared_k = static_cast<int>(k);
        *out = a;
      }
    }
    return HEFFTER_OK;
  });
}

long heffter_fixture_count(void) { return static_cast<long>(list_fixtures().size()); }

int heffter_fixture_name(long index, char* buf, size_t buf_len) {
  auto names = list_fixtures();
  if (index < 0 || index >= static_cast<long>(names.size()))
    return set_error(HEFFTER_ERR_INVALID_ARGUMENT, "fixture index out of range");
  copy_to(names[index], buf, buf_len);
  return HEFFTER_OK;
}

int heffter_fixture_get(const char* name, long k, heffter_array** out) {
  return guarded([&]() -> int {
    if (!name || !out) return set_error(HEFFTER_ERR_INVALID_ARGUMENT, "NULL argument");
    Fixture fx = get_fixture(name, k > 0 ? std::optional<int>(static_cast<int>(k)) : std::nullopt);
    auto* a = new heffter_array;
    a->doc.array = std::move(fx.array);
    a->doc.declared_k = fx.fill_k;
    a->doc.masks = std::move(fx.masks);
    *out = a;
    return HEFFTER_OK;
  });
}

}  // extern "C"
