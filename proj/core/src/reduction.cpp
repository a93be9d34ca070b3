#include "niggli/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace niggli {

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::Acute: return "+++";
    case Branch::Obtuse: return "---";
    case Branch::Mixed: return "mixed";
  }
  return "?";
}

std::string_view describe(NiggliCondition c) {
  switch (c) {
    case NiggliCondition::G1NonNegative: return "0 <= g1";
    case NiggliCondition::G1LeG2: return "g1 <= g2";
    case NiggliCondition::G2LeG3: return "g2 <= g3";
    case NiggliCondition::Abs4LeG2: return "|g4| <= g2";
    case NiggliCondition::Abs5LeG1: return "|g5| <= g1";
    case NiggliCondition::Abs6LeG1: return "|g6| <= g1";
    case NiggliCondition::G3LeSum: return "g3 <= g1+g2+g3+g4+g5+g6";
    case NiggliCondition::SingleBranch: return "g4,g5,g6 all > 0 or all <= 0";
    case NiggliCondition::EqualG1G2: return "if g1 = g2 then |g4| <= |g5|";
    case NiggliCondition::EqualG2G3: return "if g2 = g3 then |g5| <= |g6|";
    case NiggliCondition::G4EqG2: return "if g4 = g2 then g6 <= 2g5";
    case NiggliCondition::G5EqG1: return "if g5 = g1 then g6 <= 2g4";
    case NiggliCondition::G6EqG1: return "if g6 = g1 then g5 <= 2g4";
    case NiggliCondition::G4EqMinusG2: return "if g4 = -g2 then g6 = 0";
    case NiggliCondition::G5EqMinusG1: return "if g5 = -g1 then g6 = 0";
    case NiggliCondition::G6EqMinusG1: return "if g6 = -g1 then g5 = 0";
    case NiggliCondition::G3EqSum:
      return "if g3 = g1+g2+g3+g4+g5+g6 then 2g1 + 2g5 + g6 <= 0";
  }
  return "?";
}

std::string_view to_string(ReductionStep s) {
  switch (s) {
    case ReductionStep::SwapAB: return "swap-ab";
    case ReductionStep::SwapBC: return "swap-bc";
    case ReductionStep::SignsAcute: return "signs+++";
    case ReductionStep::SignsObtuse: return "signs---";
    case ReductionStep::ReduceG4: return "reduce-g4";
    case ReductionStep::ReduceG5: return "reduce-g5";
    case ReductionStep::ReduceG6: return "reduce-g6";
    case ReductionStep::BodyDiagonal: return "body-diagonal";
  }
  return "?";
}

namespace {

// x = y means |x - y| <= tol * max(|x|, |y|, s) with s the largest edge
// term; strict comparisons are the complements. The predicate and the
// reducer share this object so a reduced vector never triggers a step.
struct Fuzzy {
  double tol;
  double s;

  Fuzzy(const G6Vector& g, double t)
      : tol(t), s(std::max({g[0], g[1], g[2]})) {}

  double eps(double x, double y) const {
    return tol * std::max({std::abs(x), std::abs(y), s});
  }
  bool eq(double x, double y) const { return std::abs(x - y) <= eps(x, y); }
  bool lt(double x, double y) const { return x < y - eps(x, y); }
  bool gt(double x, double y) const { return lt(y, x); }
};

Branch branch_with(const Fuzzy& f, const G6Vector& g) {
  const int positive = f.gt(g[3], 0) + f.gt(g[4], 0) + f.gt(g[5], 0);
  if (positive == 3) return Branch::Acute;
  if (positive == 0) return Branch::Obtuse;
  return Branch::Mixed;
}

template <typename Sink>
void check_conditions(const G6Vector& g, double tol, Sink&& fail) {
  const Fuzzy f(g, tol);
  const double A = g[0], B = g[1], C = g[2];
  const double xi = g[3], eta = g[4], zeta = g[5];
  const double sum5 = A + B + xi + eta + zeta;
  using NC = NiggliCondition;
  if (f.lt(A, 0)) fail(NC::G1NonNegative);
  if (f.gt(A, B)) fail(NC::G1LeG2);
  if (f.gt(B, C)) fail(NC::G2LeG3);
  if (f.gt(std::abs(xi), B)) fail(NC::Abs4LeG2);
  if (f.gt(std::abs(eta), A)) fail(NC::Abs5LeG1);
  if (f.gt(std::abs(zeta), A)) fail(NC::Abs6LeG1);
  if (f.lt(sum5, 0)) fail(NC::G3LeSum);
  if (branch_with(f, g) == Branch::Mixed) fail(NC::SingleBranch);
  if (f.eq(A, B) && f.gt(std::abs(xi), std::abs(eta))) fail(NC::EqualG1G2);
  if (f.eq(B, C) && f.gt(std::abs(eta), std::abs(zeta))) fail(NC::EqualG2G3);
  if (f.eq(xi, B) && f.gt(zeta, 2 * eta)) fail(NC::G4EqG2);
  if (f.eq(eta, A) && f.gt(zeta, 2 * xi)) fail(NC::G5EqG1);
  if (f.eq(zeta, A) && f.gt(eta, 2 * xi)) fail(NC::G6EqG1);
  if (f.eq(xi, -B) && !f.eq(zeta, 0)) fail(NC::G4EqMinusG2);
  if (f.eq(eta, -A) && !f.eq(zeta, 0)) fail(NC::G5EqMinusG1);
  if (f.eq(zeta, -A) && !f.eq(eta, 0)) fail(NC::G6EqMinusG1);
  if (f.eq(sum5, 0) && f.gt(2 * (A + eta) + zeta, 0)) fail(NC::G3EqSum);
}

struct NoSteps {
  void operator()(ReductionStep) {}
};

G6Vector apply_integer(const std::array<std::int64_t, 36>& n,
                       const G6Vector& g) {
  G6Vector r;
  for (int i = 0; i < 6; ++i) {
    double s = 0.0;
    for (int j = 0; j < 6; ++j) s += static_cast<double>(n[i * 6 + j]) * g[j];
    r[i] = s;
  }
  return r;
}

// Diagonal sign change giving (g4, g5, g6) the multipliers (m4, m5, m6),
// whose product must be +1. Negating all three edges keeps the multipliers
// and fixes the determinant at +1.
BasisTransform sign_change([[maybe_unused]] int m4, int m5, int m6) {
  // g4 scales by j*k, g5 by i*k, g6 by i*j. With i = 1: k = m5, j = m6,
  // and m4 = m5 * m6 follows from the product rule.
  int i = 1, j = m6, k = m5;
  if (i * j * k < 0) {
    i = -i;
    j = -j;
    k = -k;
  }
  return BasisTransform({{{i, 0, 0}, {0, j, 0}, {0, 0, k}}});
}

// One pass of the iterative scheme. Returns true when a step changed the
// basis; the caller recomputes g from the accumulated transform.
template <typename StepSink>
bool reduce_pass(const G6Vector& g, double tol, BasisTransform& step,
                 StepSink&& record) {
  const Fuzzy f(g, tol);
  const double A = g[0], B = g[1], C = g[2];
  const double xi = g[3], eta = g[4], zeta = g[5];

  if (f.gt(A, B) || (f.eq(A, B) && f.gt(std::abs(xi), std::abs(eta)))) {
    step = BasisTransform({{{0, -1, 0}, {-1, 0, 0}, {0, 0, -1}}});
    record(ReductionStep::SwapAB);
    return true;
  }
  if (f.gt(B, C) || (f.eq(B, C) && f.gt(std::abs(eta), std::abs(zeta)))) {
    step = BasisTransform({{{-1, 0, 0}, {0, 0, -1}, {0, -1, 0}}});
    record(ReductionStep::SwapBC);
    return true;
  }

  const double sg[3] = {xi, eta, zeta};
  int sign[3];
  int zeros = 0, negatives = 0;
  for (int i = 0; i < 3; ++i) {
    sign[i] = f.gt(sg[i], 0) ? 1 : (f.lt(sg[i], 0) ? -1 : 0);
    zeros += sign[i] == 0;
    negatives += sign[i] < 0;
  }
  if (zeros == 0 && negatives % 2 == 0) {
    if (negatives > 0) {
      step = sign_change(sign[0], sign[1], sign[2]);
      record(ReductionStep::SignsAcute);
      return true;
    }
  } else {
    int m[3];
    int product = 1;
    int free_slot = -1;
    bool change = false;
    for (int i = 0; i < 3; ++i) {
      if (sign[i] == 0) {
        m[i] = 1;
        free_slot = i;
      } else {
        m[i] = -sign[i];
        change |= m[i] < 0;
      }
      product *= m[i];
    }
    if (product < 0) m[free_slot] = -1;
    if (change) {
      step = sign_change(m[0], m[1], m[2]);
      record(ReductionStep::SignsObtuse);
      return true;
    }
  }

  if (f.gt(std::abs(xi), B) || (f.eq(xi, B) && f.gt(zeta, 2 * eta)) ||
      (f.eq(xi, -B) && !f.eq(zeta, 0))) {
    const int s = xi > 0 ? 1 : -1;
    step = BasisTransform({{{1, 0, 0}, {0, 1, 0}, {0, -s, 1}}});
    record(ReductionStep::ReduceG4);
    return true;
  }
  if (f.gt(std::abs(eta), A) || (f.eq(eta, A) && f.gt(zeta, 2 * xi)) ||
      (f.eq(eta, -A) && !f.eq(zeta, 0))) {
    const int s = eta > 0 ? 1 : -1;
    step = BasisTransform({{{1, 0, 0}, {0, 1, 0}, {-s, 0, 1}}});
    record(ReductionStep::ReduceG5);
    return true;
  }
  if (f.gt(std::abs(zeta), A) || (f.eq(zeta, A) && f.gt(eta, 2 * xi)) ||
      (f.eq(zeta, -A) && !f.eq(eta, 0))) {
    const int s = zeta > 0 ? 1 : -1;
    step = BasisTransform({{{1, 0, 0}, {-s, 1, 0}, {0, 0, 1}}});
    record(ReductionStep::ReduceG6);
    return true;
  }
  const double sum5 = A + B + xi + eta + zeta;
  if (f.lt(sum5, 0) || (f.eq(sum5, 0) && f.gt(2 * (A + eta) + zeta, 0))) {
    step = BasisTransform({{{1, 0, 0}, {0, 1, 0}, {1, 1, 1}}});
    record(ReductionStep::BodyDiagonal);
    return true;
  }
  (void)C;
  return false;
}

template <typename StepSink>
G6Vector reduce_impl(const G6Vector& g0, const ReduceOptions& options,
                     BasisTransform& total, int& iterations,
                     StepSink&& record, std::vector<ReductionStep>* recent) {
  total = BasisTransform::identity();
  G6Vector g = g0;
  iterations = 0;
  BasisTransform step;
  while (reduce_pass(g, options.tol, step, record)) {
    if (++iterations > options.max_iterations) {
      std::ostringstream os;
      os.precision(17);
      os << "Niggli reduction of " << g0 << " did not converge after "
         << options.max_iterations << " iterations";
      if (recent && !recent->empty()) {
        os << "; last steps:";
        const std::size_t n = recent->size();
        for (std::size_t i = n > 3 ? n - 3 : 0; i < n; ++i)
          os << ' ' << to_string((*recent)[i]);
      }
      throw NonConvergence(os.str());
    }
    total = step * total;
    g = apply_integer(g6_integer_matrix_from_basis(total), g0);
  }
  return g;
}

void require_valid(const G6Vector& g) {
  if (!is_positive_definite(g)) {
    std::ostringstream os;
    os.precision(17);
    os << "invalid cell " << g << ": metric tensor is not positive definite";
    throw InvalidCell(os.str());
  }
}

}  // namespace

Branch branch_of(const G6Vector& g, double tol) {
  return branch_with(Fuzzy(g, tol), g);
}

NiggliReport is_niggli_reduced(const G6Vector& g, double tol) {
  require_valid(g);
  NiggliReport report;
  check_conditions(g, tol, [&](NiggliCondition c) {
    report.failed_conditions.push_back(c);
  });
  report.satisfied = report.failed_conditions.empty();
  report.branch = branch_of(g, tol);
  return report;
}

bool satisfies_niggli(const G6Vector& g, double tol) {
  bool ok = true;
  check_conditions(g, tol, [&](NiggliCondition) { ok = false; });
  return ok;
}

ReductionResult niggli_reduce(const G6Vector& g, const ReduceOptions& options) {
  require_valid(g);
  ReductionResult r;
  std::vector<ReductionStep> steps;
  r.reduced = reduce_impl(
      g, options, r.basis_transform, r.iterations,
      [&](ReductionStep s) { steps.push_back(s); }, &steps);
  r.steps = std::move(steps);
  r.g6_transform = g6_matrix_from_basis(r.basis_transform);
  return r;
}

G6Vector reduce_fast(const G6Vector& g, BasisTransform& total,
                     const ReduceOptions& options) {
  int iterations = 0;
  return reduce_impl(g, options, total, iterations, NoSteps{}, nullptr);
}

}  // namespace niggli
