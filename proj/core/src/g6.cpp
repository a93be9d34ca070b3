#include "niggli/g6.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <vector>

namespace niggli {

namespace {

constexpr double kDegree = std::numbers::pi / 180.0;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

void validate(const CellParams& cell) {
  const double edges[3] = {cell.a, cell.b, cell.c};
  const char* edge_names[3] = {"a", "b", "c"};
  for (int i = 0; i < 3; ++i) {
    if (!(edges[i] > 0.0) || !std::isfinite(edges[i]))
      throw InvalidCell(std::string("edge ") + edge_names[i] +
                        " must be positive and finite, got " + fmt(edges[i]));
  }
  const double angles[3] = {cell.alpha, cell.beta, cell.gamma};
  const char* angle_names[3] = {"alpha", "beta", "gamma"};
  for (int i = 0; i < 3; ++i) {
    if (!(angles[i] > 0.0 && angles[i] < 180.0))
      throw InvalidCell(std::string(angle_names[i]) +
                        " must lie strictly between 0 and 180 degrees, got " +
                        fmt(angles[i]));
  }
  const double sum = cell.alpha + cell.beta + cell.gamma;
  if (!(sum < 360.0))
    throw InvalidCell("alpha + beta + gamma must be below 360 degrees, got " +
                      fmt(sum));
  for (int i = 0; i < 3; ++i) {
    if (!(angles[i] < sum - angles[i]))
      throw InvalidCell(std::string(angle_names[i]) +
                        " must be below the sum of the other two angles");
  }
}

G6Vector::G6Vector(const NumericVector& v) {
  for (int i = 0; i < 6; ++i) g_[i] = v[i];
}

NumericVector G6Vector::to_eigen() const {
  NumericVector v;
  for (int i = 0; i < 6; ++i) v[i] = g_[i];
  return v;
}

double G6Vector::dot(const G6Vector& o) const {
  double s = 0.0;
  for (int i = 0; i < 6; ++i) s += g_[i] * o.g_[i];
  return s;
}

double G6Vector::norm() const { return std::sqrt(dot(*this)); }

double G6Vector::max_abs() const {
  double m = 0.0;
  for (double x : g_) m = std::max(m, std::abs(x));
  return m;
}

G6Vector& G6Vector::operator+=(const G6Vector& o) {
  for (int i = 0; i < 6; ++i) g_[i] += o.g_[i];
  return *this;
}

G6Vector& G6Vector::operator-=(const G6Vector& o) {
  for (int i = 0; i < 6; ++i) g_[i] -= o.g_[i];
  return *this;
}

G6Vector& G6Vector::operator*=(double s) {
  for (double& x : g_) x *= s;
  return *this;
}

G6Vector G6Vector::parse(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::replace(s.begin(), s.end(), '(', ' ');
  std::replace(s.begin(), s.end(), ')', ' ');
  std::istringstream is(s);
  std::array<double, 6> g{};
  for (int i = 0; i < 6; ++i) {
    if (!(is >> g[i]))
      throw ParseError("expected six numbers, got \"" + std::string(text) +
                       "\"");
  }
  std::string rest;
  if (is >> rest)
    throw ParseError("expected six numbers, got extra text \"" + rest + "\"");
  return G6Vector(g);
}

std::ostream& operator<<(std::ostream& os, const G6Vector& g) {
  os << '(';
  for (int i = 0; i < 6; ++i) os << (i ? ", " : "") << g[i];
  return os << ')';
}

bool approx_equal(const G6Vector& x, const G6Vector& y, double rel) {
  const double scale = std::max({x.max_abs(), y.max_abs(), 1e-300});
  for (int i = 0; i < 6; ++i)
    if (std::abs(x[i] - y[i]) > rel * scale) return false;
  return true;
}

BasisTransform::BasisTransform()
    : m_{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}} {}

int BasisTransform::determinant() const {
  return m_[0][0] * (m_[1][1] * m_[2][2] - m_[1][2] * m_[2][1]) -
         m_[0][1] * (m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0]) +
         m_[0][2] * (m_[1][0] * m_[2][1] - m_[1][1] * m_[2][0]);
}

BasisTransform BasisTransform::operator*(const BasisTransform& rhs) const {
  Rows r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += m_[i][k] * rhs.m_[k][j];
  return BasisTransform(r);
}

BasisTransform BasisTransform::operator-() const {
  Rows r = m_;
  for (auto& row : r)
    for (int& x : row) x = -x;
  return BasisTransform(r);
}

std::string BasisTransform::to_string() const {
  static const char* edge = "abc";
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (i) out += ", ";
    out += edge[i];
    out += "' = ";
    bool first = true;
    for (int j = 0; j < 3; ++j) {
      const int k = m_[i][j];
      if (k == 0) continue;
      if (k < 0)
        out += first ? "-" : " - ";
      else if (!first)
        out += " + ";
      if (std::abs(k) != 1) out += std::to_string(std::abs(k));
      out += edge[j];
      first = false;
    }
    if (first) out += "0";
  }
  return out;
}

G6Matrix::G6Matrix() { m_.fill(Rational(0)); }

G6Matrix G6Matrix::identity() {
  G6Matrix m;
  for (int i = 0; i < 6; ++i) m(i, i) = 1;
  return m;
}

G6Matrix G6Matrix::from_integers(const std::array<std::int64_t, 36>& rm) {
  G6Matrix m;
  for (int i = 0; i < 36; ++i) m.m_[i] = rm[i];
  return m;
}

G6Matrix G6Matrix::operator*(const G6Matrix& rhs) const {
  G6Matrix r;
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 6; ++k) {
      const Rational& a = (*this)(i, k);
      if (is_zero(a)) continue;
      for (int j = 0; j < 6; ++j) r(i, j) += a * rhs(k, j);
    }
  return r;
}

G6Matrix G6Matrix::operator+(const G6Matrix& rhs) const {
  G6Matrix r;
  for (int i = 0; i < 36; ++i) r.m_[i] = m_[i] + rhs.m_[i];
  return r;
}

G6Matrix G6Matrix::operator-(const G6Matrix& rhs) const {
  G6Matrix r;
  for (int i = 0; i < 36; ++i) r.m_[i] = m_[i] - rhs.m_[i];
  return r;
}

G6Vector G6Matrix::operator*(const G6Vector& g) const {
  G6Vector r;
  for (int i = 0; i < 6; ++i) {
    double s = 0.0;
    for (int j = 0; j < 6; ++j) s += boost::rational_cast<double>((*this)(i, j)) * g[j];
    r[i] = s;
  }
  return r;
}

G6Matrix G6Matrix::transpose() const {
  G6Matrix r;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) r(i, j) = (*this)(j, i);
  return r;
}

Rational G6Matrix::trace() const {
  Rational t(0);
  for (int i = 0; i < 6; ++i) t += (*this)(i, i);
  return t;
}

bool G6Matrix::is_integer() const {
  return std::all_of(m_.begin(), m_.end(),
                     [](const Rational& x) { return x.denominator() == 1; });
}

bool G6Matrix::operator<(const G6Matrix& o) const {
  for (int i = 0; i < 36; ++i) {
    if (m_[i] != o.m_[i]) return m_[i] < o.m_[i];
  }
  return false;
}

NumericMatrix G6Matrix::to_numeric() const {
  NumericMatrix n;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      n(i, j) = boost::rational_cast<double>((*this)(i, j));
  return n;
}

namespace {

// Combining overline (U+0305) or combining macron (U+0304) in UTF-8.
bool is_overbar(std::string_view s, std::size_t pos) {
  return pos + 1 < s.size() && static_cast<unsigned char>(s[pos]) == 0xCC &&
         (static_cast<unsigned char>(s[pos + 1]) == 0x85 ||
          static_cast<unsigned char>(s[pos + 1]) == 0x84);
}

std::vector<Rational> parse_row(std::string_view row, std::string_view whole) {
  std::vector<Rational> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("bad matrix notation \"" + std::string(whole) + "\": " +
                     why);
  };
  while (i < row.size()) {
    const char ch = row[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++i;
      continue;
    }
    bool negative = false;
    if (ch == '-') {
      negative = true;
      ++i;
      if (i >= row.size()) fail("dangling '-'");
    }
    Rational value;
    if (row[i] == '(') {
      const std::size_t close = row.find(')', i);
      if (close == std::string_view::npos) fail("unclosed '('");
      std::string inner(row.substr(i + 1, close - i - 1));
      const std::size_t slash = inner.find('/');
      try {
        if (slash == std::string::npos) {
          value = Rational(std::stoll(inner));
        } else {
          value = Rational(std::stoll(inner.substr(0, slash)),
                           std::stoll(inner.substr(slash + 1)));
        }
      } catch (const std::exception&) {
        fail("bad fraction \"" + inner + "\"");
      }
      i = close + 1;
    } else if (std::isdigit(static_cast<unsigned char>(row[i]))) {
      value = Rational(row[i] - '0');
      ++i;
    } else {
      fail(std::string("unexpected character '") + row[i] + "'");
    }
    while (is_overbar(row, i)) {
      negative = !negative;
      i += 2;
    }
    out.push_back(negative ? -value : value);
  }
  return out;
}

}  // namespace

G6Matrix G6Matrix::parse(std::string_view text) {
  G6Matrix m;
  std::size_t start = 0;
  int r = 0;
  // Rows are split on '/' outside parentheses.
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      if (text[i] != '/' || depth > 0) continue;
    }
    if (r >= 6)
      throw ParseError("bad matrix notation \"" + std::string(text) +
                       "\": more than six rows");
    const auto row = parse_row(text.substr(start, i - start), text);
    if (row.size() != 6)
      throw ParseError("bad matrix notation \"" + std::string(text) +
                       "\": row " + std::to_string(r + 1) + " has " +
                       std::to_string(row.size()) + " entries");
    for (int c = 0; c < 6; ++c) m(r, c) = row[c];
    ++r;
    start = i + 1;
  }
  if (r != 6)
    throw ParseError("bad matrix notation \"" + std::string(text) +
                     "\": expected six rows");
  return m;
}

std::string G6Matrix::to_string() const {
  std::string out;
  for (int i = 0; i < 6; ++i) {
    if (i) out += '/';
    for (int j = 0; j < 6; ++j) {
      Rational x = (*this)(i, j);
      if (is_negative(x)) {
        out += '-';
        x = -x;
      }
      if (x.denominator() == 1 && x.numerator() < 10) {
        out += static_cast<char>('0' + x.numerator());
      } else if (x.denominator() == 1) {
        out += "(" + std::to_string(x.numerator()) + ")";
      } else {
        out += "(" + std::to_string(x.numerator()) + "/" +
               std::to_string(x.denominator()) + ")";
      }
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const G6Matrix& m) {
  return os << m.to_string();
}

G6Vector cell_to_g6(const CellParams& cell) {
  validate(cell);
  const double ca = std::cos(cell.alpha * kDegree);
  const double cb = std::cos(cell.beta * kDegree);
  const double cg = std::cos(cell.gamma * kDegree);
  return {cell.a * cell.a,        cell.b * cell.b,
          cell.c * cell.c,        2.0 * cell.b * cell.c * ca,
          2.0 * cell.a * cell.c * cb, 2.0 * cell.a * cell.b * cg};
}

double metric_determinant(const G6Vector& g) {
  const double g11 = g[0], g22 = g[1], g33 = g[2];
  const double g23 = g[3] / 2, g13 = g[4] / 2, g12 = g[5] / 2;
  return g11 * (g22 * g33 - g23 * g23) - g12 * (g12 * g33 - g23 * g13) +
         g13 * (g12 * g23 - g22 * g13);
}

bool is_positive_definite(const G6Vector& g, double rel_tol) {
  for (double x : g.values())
    if (!std::isfinite(x)) return false;
  const double s = g.max_abs();
  if (s == 0.0) return false;
  const double minor1 = g[0];
  const double minor2 = g[0] * g[1] - g[5] * g[5] / 4;
  const double minor3 = metric_determinant(g);
  return minor1 > rel_tol * s && minor2 > rel_tol * s * s &&
         minor3 > rel_tol * s * s * s;
}

CellParams g6_to_cell(const G6Vector& g) {
  if (!is_positive_definite(g)) {
    std::ostringstream os;
    os.precision(17);
    os << "metric tensor of " << g << " is not positive definite"
       << " (determinant " << metric_determinant(g) << ")";
    throw NotPositiveDefinite(os.str());
  }
  CellParams c;
  c.a = std::sqrt(g[0]);
  c.b = std::sqrt(g[1]);
  c.c = std::sqrt(g[2]);
  auto angle = [](double cosine) {
    return std::acos(std::clamp(cosine, -1.0, 1.0)) / kDegree;
  };
  c.alpha = angle(g[3] / (2 * c.b * c.c));
  c.beta = angle(g[4] / (2 * c.a * c.c));
  c.gamma = angle(g[5] / (2 * c.a * c.b));
  return c;
}

std::array<std::int64_t, 36> g6_integer_matrix_from_basis(
    const BasisTransform& m) {
  // Twice the metric entry G_kl as a coefficient row over (g1..g6):
  // 2 G_kk = 2 g_k, 2 G_12 = g6, 2 G_13 = g5, 2 G_23 = g4.
  static constexpr int kOffDiagonal[3][3] = {{-1, 5, 4}, {5, -1, 3}, {4, 3, -1}};
  auto twice_metric = [&](int i, int j, std::int64_t* row) {
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) {
        const std::int64_t w = std::int64_t{m(i, k)} * m(j, l);
        if (w == 0) continue;
        if (k == l)
          row[k] += 2 * w;
        else
          row[kOffDiagonal[k][l]] += w;
      }
  };
  std::array<std::int64_t, 36> n{};
  for (int i = 0; i < 3; ++i) {
    std::int64_t row[6] = {};
    twice_metric(i, i, row);
    for (int c = 0; c < 6; ++c) n[i * 6 + c] = row[c] / 2;
  }
  const int pairs[3][2] = {{1, 2}, {0, 2}, {0, 1}};
  for (int p = 0; p < 3; ++p) {
    std::int64_t row[6] = {};
    twice_metric(pairs[p][0], pairs[p][1], row);
    for (int c = 0; c < 6; ++c) n[(3 + p) * 6 + c] = row[c];
  }
  return n;
}

G6Matrix g6_matrix_from_basis(const BasisTransform& m) {
  return G6Matrix::from_integers(g6_integer_matrix_from_basis(m));
}

}  // namespace niggli
