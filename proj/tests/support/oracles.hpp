#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library except for the plain value types.

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "niggli/g6.hpp"

namespace oracle {

using Mat3 = Eigen::Matrix3d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Vec6 = Eigen::Matrix<double, 6, 1>;

inline Mat3 metric(const niggli::G6Vector& g) {
  Mat3 m;
  m << g[0], g[5] / 2, g[4] / 2,
       g[5] / 2, g[1], g[3] / 2,
       g[4] / 2, g[3] / 2, g[2];
  return m;
}

inline niggli::G6Vector from_metric(const Mat3& m) {
  return {m(0, 0), m(1, 1), m(2, 2), 2 * m(1, 2), 2 * m(0, 2), 2 * m(0, 1)};
}

// Rows of t give the new edges in terms of the old ones.
inline niggli::G6Vector transform(const std::array<std::array<int, 3>, 3>& t,
                                  const niggli::G6Vector& g) {
  Mat3 a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = t[i][j];
  return from_metric(a * metric(g) * a.transpose());
}

// 6x6 matrix of the same transformation, read off column by column from the
// images of the unit G6 vectors (the map is linear in g).
inline Mat6 g6_matrix(const std::array<std::array<int, 3>, 3>& t) {
  Mat6 n;
  for (int j = 0; j < 6; ++j) {
    std::array<double, 6> e{};
    e[j] = 1.0;
    const niggli::G6Vector col = transform(t, niggli::G6Vector(e));
    for (int i = 0; i < 6; ++i) n(i, j) = col[i];
  }
  return n;
}

inline niggli::G6Vector g6_of_cell(double a, double b, double c, double al, double be,
                                   double ga) {
  const double d = M_PI / 180.0;
  return {a * a, b * b, c * c, 2 * b * c * std::cos(al * d), 2 * a * c * std::cos(be * d),
          2 * a * b * std::cos(ga * d)};
}

inline bool positive_definite(const niggli::G6Vector& g) {
  Eigen::LLT<Mat3> llt(metric(g));
  return llt.info() == Eigen::Success && metric(g).determinant() > 1e-9 * std::pow(g.max_abs(), 3);
}

// Random valid cell: edges uniform in [lo, hi], angles uniform in
// (amin, amax) degrees, rejected unless V / (abc) >= 0.1 so that disguised copies stay
// well away from the degenerate set.
template <class Rng>
niggli::G6Vector random_cell(Rng& rng, double lo = 1.0, double hi = 10.0, double amin = 1.0,
                             double amax = 179.0) {
  std::uniform_real_distribution<double> edge(lo, hi), angle(amin, amax);
  for (;;) {
    const auto g = g6_of_cell(edge(rng), edge(rng), edge(rng), angle(rng), angle(rng),
                              angle(rng));
    if (positive_definite(g) && metric(g).determinant() >= 0.01 * g[0] * g[1] * g[2]) return g;
  }
}

// Random unimodular 3x3 integer matrix as a product of elementary shears,
// sign flips and swaps.
template <class Rng>
std::array<std::array<int, 3>, 3> random_unimodular(Rng& rng, int steps = 6) {
  Eigen::Matrix3i m = Eigen::Matrix3i::Identity();
  std::uniform_int_distribution<int> pick(0, 2), kind(0, 2), k(-2, 2);
  for (int s = 0; s < steps; ++s) {
    Eigen::Matrix3i e = Eigen::Matrix3i::Identity();
    const int i = pick(rng);
    int j = pick(rng);
    while (j == i) j = pick(rng);
    switch (kind(rng)) {
      case 0: e(i, j) = k(rng); break;
      case 1: e(i, i) = -1; e(j, j) = -1; break;
      default:  // swap two edges, reverse the third
        e(i, i) = 0; e(j, j) = 0; e(i, j) = 1; e(j, i) = 1; e(3 - i - j, 3 - i - j) = -1;
        break;
    }
    m = e * m;
  }
  std::array<std::array<int, 3>, 3> out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = m(i, j);
  return out;
}

// Orthogonal projector onto {g : n.g = 0 for every row n}.
inline Mat6 null_projector(const std::vector<Vec6>& normals) {
  if (normals.empty()) return Mat6::Identity();
  Eigen::MatrixXd n(normals.size(), 6);
  for (std::size_t i = 0; i < normals.size(); ++i) n.row(static_cast<Eigen::Index>(i)) = normals[i];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(n, Eigen::ComputeFullV);
  Mat6 p = Mat6::Identity();
  const auto& sv = svd.singularValues();
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv[k] > 1e-12 * sv[0]) p -= svd.matrixV().col(k) * svd.matrixV().col(k).transpose();
  return p;
}

inline Vec6 form(double c1, double c2, double c3, double c4, double c5, double c6) {
  Vec6 v;
  v << c1, c2, c3, c4, c5, c6;
  return v;
}

struct PrintedCase {
  char symbol;
  std::array<std::array<int, 3>, 3> e3;
  std::string m;
  std::string p;
};

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

inline std::vector<PrintedCase> load_printed_cases(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<PrintedCase> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string part; std::getline(ss, part, '|');) f.push_back(trim(part));
    if (f.size() != 4) throw std::runtime_error("bad line: " + line);
    PrintedCase c;
    c.symbol = f[0][0];
    std::string rows = f[1];
    for (char& ch : rows)
      if (ch == ';') ch = ' ';
    std::stringstream rs(rows);
    for (auto& r : c.e3)
      for (int& x : r) rs >> x;
    c.m = f[2];
    c.p = f[3];
    out.push_back(c);
  }
  return out;
}

}  // namespace oracle
