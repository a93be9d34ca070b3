#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "niggli/exact.hpp"
#include "niggli/g6.hpp"

namespace niggli {

// A linear subspace of G6 written as six symbolic entries, e.g.
// "(r, r, s, -r+u, 0, -2r/3)". Each named parameter owns one basis column.
struct SubspacePattern {
  std::vector<char> parameters;          // in order of first appearance
  std::vector<RationalVector6> columns;  // one column per parameter

  int free_parameters() const { return static_cast<int>(parameters.size()); }
  // Exact projector onto the span of the columns.
  G6Matrix projector() const;
  G6Vector evaluate(const std::vector<double>& values) const;
};

// Accepts ASCII '-' and U+2212 for minus, optional spaces and parentheses.
// Throws ParseError on anything else.
SubspacePattern parse_pattern(std::string_view text);

// Canonical text for the span of the rows: reduced echelon basis, pivots
// named r, s, t, u, v, w in order. "(r,r,s,r,r,r)".
std::string format_pattern(const std::vector<RationalVector6>& spanning_rows);

}  // namespace niggli
