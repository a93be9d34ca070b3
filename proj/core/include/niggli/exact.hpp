#pragma once

#include <array>
#include <vector>

#include "niggli/boundaries.hpp"
#include "niggli/g6.hpp"

namespace niggli {

using RationalVector6 = std::array<Rational, 6>;

// Reduced row echelon form of the stacked rows; zero rows are dropped and
// pivots receives the pivot column of each remaining row.
std::vector<RationalVector6> row_echelon(std::vector<RationalVector6> rows,
                                         std::vector<int>* pivots = nullptr);

int exact_rank(const std::vector<RationalVector6>& rows);

// Orthogonal projector onto the span of the rows (zero matrix for none).
G6Matrix projector_onto_span(const std::vector<RationalVector6>& rows);

// Orthogonal projector onto {g : form.g = 0 for every form}.
G6Matrix projector_onto_solutions(const std::vector<LinearForm>& forms);

RationalVector6 to_rational(const LinearForm& form);
RationalVector6 to_rational(const std::array<std::int64_t, 6>& v);

}  // namespace niggli
