#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/rational.hpp>

#include "niggli/error.hpp"

namespace niggli {

using Rational = boost::rational<std::int64_t>;

// boost::rational<int64_t> compared against a plain int recurses in some
// Boost releases; compare through the numerator instead.
inline bool is_zero(const Rational& x) { return x.numerator() == 0; }
inline bool is_negative(const Rational& x) { return x.numerator() < 0; }

using NumericMatrix = Eigen::Matrix<double, 6, 6>;
using NumericVector = Eigen::Matrix<double, 6, 1>;

// Edge lengths in any length unit, angles in degrees.
struct CellParams {
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;
  double alpha = 90.0;
  double beta = 90.0;
  double gamma = 90.0;
};

// Throws InvalidCell naming the first violated invariant.
void validate(const CellParams& cell);

// (a.a, b.b, c.c, 2 b.c, 2 a.c, 2 a.b). Indexing is zero-based: g[0] is g1.
class G6Vector {
 public:
  G6Vector() = default;
  G6Vector(double g1, double g2, double g3, double g4, double g5, double g6)
      : g_{g1, g2, g3, g4, g5, g6} {}
  explicit G6Vector(const std::array<double, 6>& g) : g_(g) {}
  explicit G6Vector(const NumericVector& v);

  double operator[](std::size_t i) const { return g_[i]; }
  double& operator[](std::size_t i) { return g_[i]; }
  const std::array<double, 6>& values() const { return g_; }
  NumericVector to_eigen() const;

  double dot(const G6Vector& o) const;
  double norm() const;
  double max_abs() const;

  G6Vector& operator+=(const G6Vector& o);
  G6Vector& operator-=(const G6Vector& o);
  G6Vector& operator*=(double s);
  friend G6Vector operator+(G6Vector l, const G6Vector& r) { return l += r; }
  friend G6Vector operator-(G6Vector l, const G6Vector& r) { return l -= r; }
  friend G6Vector operator*(G6Vector v, double s) { return v *= s; }
  friend G6Vector operator*(double s, G6Vector v) { return v *= s; }
  bool operator==(const G6Vector&) const = default;

  // Parses six whitespace- or comma-separated numbers.
  static G6Vector parse(std::string_view text);

 private:
  std::array<double, 6> g_{};
};

std::ostream& operator<<(std::ostream& os, const G6Vector& g);

// True when every component agrees to rel * max(|x|, |y|, 1e-300-floored scale).
bool approx_equal(const G6Vector& x, const G6Vector& y, double rel);

// 3x3 integer matrix whose rows give the new edges in terms of the old ones:
// row 0 = (1,1,0) means a' = a + b.
class BasisTransform {
 public:
  using Rows = std::array<std::array<int, 3>, 3>;

  BasisTransform();  // identity
  explicit BasisTransform(const Rows& rows) : m_(rows) {}
  static BasisTransform identity() { return {}; }

  int operator()(int r, int c) const { return m_[r][c]; }
  const Rows& rows() const { return m_; }
  int determinant() const;
  // (this * rhs): apply rhs first, then this.
  BasisTransform operator*(const BasisTransform& rhs) const;
  BasisTransform operator-() const;
  bool operator==(const BasisTransform&) const = default;
  bool is_identity() const { return *this == BasisTransform(); }

  std::string to_string() const;  // "a' = -b, b' = -a, c' = -c" style rows

 private:
  Rows m_;
};

// Exact 6x6 rational matrix acting on column G6 vectors.
class G6Matrix {
 public:
  G6Matrix();  // zero
  static G6Matrix identity();
  static G6Matrix from_integers(const std::array<std::int64_t, 36>& row_major);

  const Rational& operator()(int r, int c) const { return m_[r * 6 + c]; }
  Rational& operator()(int r, int c) { return m_[r * 6 + c]; }

  G6Matrix operator*(const G6Matrix& rhs) const;
  G6Matrix operator+(const G6Matrix& rhs) const;
  G6Matrix operator-(const G6Matrix& rhs) const;
  G6Vector operator*(const G6Vector& g) const;
  G6Matrix transpose() const;
  Rational trace() const;
  bool is_integer() const;
  bool operator==(const G6Matrix& o) const { return m_ == o.m_; }
  bool operator!=(const G6Matrix& o) const { return !(*this == o); }
  // Lexicographic on row-major entries; makes G6Matrix usable as a map key.
  bool operator<(const G6Matrix& o) const;

  NumericMatrix to_numeric() const;

  // Row notation with rows separated by '/'. Each entry is a digit, an
  // optionally signed digit ("-1"), or a parenthesized fraction "(4/5)".
  // A leading '-' or a following combining overline/macron (U+0305, U+0304)
  // negates an entry, so "011̅100" and "01-100" both read 0,1,-1,1,0,0.
  static G6Matrix parse(std::string_view text);
  // Compact inverse of parse: single digits where possible, '-' for negation.
  std::string to_string() const;

 private:
  std::array<Rational, 36> m_;
};

std::ostream& operator<<(std::ostream& os, const G6Matrix& m);

// Throws InvalidCell (identifying the invariant) on bad input.
G6Vector cell_to_g6(const CellParams& cell);
// Throws NotPositiveDefinite when the metric is not positive definite.
CellParams g6_to_cell(const G6Vector& g);

// det [[g1, g6/2, g5/2], [g6/2, g2, g4/2], [g5/2, g4/2, g3]]; equals V^2.
double metric_determinant(const G6Vector& g);

// Sylvester's criterion on the metric tensor, leading minors compared
// against rel_tol times the matching power of max|g_i|.
bool is_positive_definite(const G6Vector& g, double rel_tol = 1e-12);

// The unique N with cell_to_g6(m-transformed edges) = N * cell_to_g6(edges).
G6Matrix g6_matrix_from_basis(const BasisTransform& m);

// Integer row-major variant used on hot paths.
std::array<std::int64_t, 36> g6_integer_matrix_from_basis(
    const BasisTransform& m);

}  // namespace niggli
