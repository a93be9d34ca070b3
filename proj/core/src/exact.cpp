#include "niggli/exact.hpp"

#include <utility>

namespace niggli {

std::vector<RationalVector6> row_echelon(std::vector<RationalVector6> rows,
                                         std::vector<int>* pivots) {
  std::vector<int> piv;
  std::size_t r = 0;
  for (int col = 0; col < 6 && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && is_zero(rows[p][col])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational lead = rows[r][col];
    for (auto& x : rows[r]) x /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || is_zero(rows[i][col])) continue;
      const Rational f = rows[i][col];
      for (int j = 0; j < 6; ++j) rows[i][j] -= f * rows[r][j];
    }
    piv.push_back(col);
    ++r;
  }
  rows.resize(r);
  if (pivots) *pivots = std::move(piv);
  return rows;
}

int exact_rank(const std::vector<RationalVector6>& rows) {
  return static_cast<int>(row_echelon(rows).size());
}

G6Matrix projector_onto_span(const std::vector<RationalVector6>& rows) {
  const auto b = row_echelon(rows);
  const std::size_t k = b.size();
  G6Matrix p;
  if (k == 0) return p;
  // P = B^T (B B^T)^{-1} B, with the Gram inverse by Gauss-Jordan.
  std::vector<std::vector<Rational>> gram(k, std::vector<Rational>(2 * k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Rational s(0);
      for (int c = 0; c < 6; ++c) s += b[i][c] * b[j][c];
      gram[i][j] = s;
    }
    gram[i][k + i] = 1;
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (is_zero(gram[piv][col])) ++piv;
    std::swap(gram[col], gram[piv]);
    const Rational lead = gram[col][col];
    for (auto& x : gram[col]) x /= lead;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == col || is_zero(gram[i][col])) continue;
      const Rational f = gram[i][col];
      for (std::size_t j = 0; j < 2 * k; ++j) gram[i][j] -= f * gram[col][j];
    }
  }
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) {
      Rational s(0);
      for (std::size_t i = 0; i < k; ++i) {
        if (is_zero(b[i][r])) continue;
        for (std::size_t j = 0; j < k; ++j)
          s += b[i][r] * gram[i][k + j] * b[j][c];
      }
      p(r, c) = s;
    }
  return p;
}

RationalVector6 to_rational(const LinearForm& form) {
  RationalVector6 v;
  for (int i = 0; i < 6; ++i) v[i] = form[i];
  return v;
}

RationalVector6 to_rational(const std::array<std::int64_t, 6>& x) {
  RationalVector6 v;
  for (int i = 0; i < 6; ++i) v[i] = x[i];
  return v;
}

G6Matrix projector_onto_solutions(const std::vector<LinearForm>& forms) {
  std::vector<RationalVector6> rows;
  for (const auto& f : forms) rows.push_back(to_rational(f));
  return G6Matrix::identity() - projector_onto_span(rows);
}

}  // namespace niggli
