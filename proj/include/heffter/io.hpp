#pragma once

#include <map>

#include "heffter/cycles.hpp"
#include "heffter/types.hpp"
#include "heffter/verify.hpp"

namespace heffter {

// An array plus the metadata the file formats carry: the declared per-line
// fill count and optional named cell masks (used by fixture dumps).
struct ArrayDocument {
  SparseSquareArray array{1};
  int declared_k = 0;
  std::map<std::string, CellSet> masks;
};

// Text format: header line "n k", then n lines of n whitespace-separated
// tokens, each a signed decimal integer or "." for an empty cell. Masks are
// not representable in text. Zero tokens and malformed dimensions are
// parse errors.
std::string to_text(const ArrayDocument& doc);
ArrayDocument from_text(const std::string& text);

// JSON format: {"n", "k", "cells":[{"row","col","value"}...]} with cells in
// row-major order, plus "masks": {name: [{"row","col"}...]} when present.
std::string to_json(const ArrayDocument& doc);
ArrayDocument from_json(const std::string& text);

std::string report_to_json(const VerificationReport& rep);
std::string report_to_text(const VerificationReport& rep);

}  // namespace heffter
