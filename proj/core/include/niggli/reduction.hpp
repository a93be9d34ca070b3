#pragma once

#include <string_view>
#include <vector>

#include "niggli/g6.hpp"

namespace niggli {

inline constexpr double kDefaultTolerance = 1e-9;

// Sign regime of (g4, g5, g6). A vector with all three zero is Obtuse.
enum class Branch { Acute, Obtuse, Mixed };
std::string_view to_string(Branch b);  // "+++", "---", "mixed"

// Every condition of the reduced-cell definition, including the conditional
// equality sub-conditions.
enum class NiggliCondition {
  G1NonNegative,         // 0 <= g1
  G1LeG2,                // g1 <= g2
  G2LeG3,                // g2 <= g3
  Abs4LeG2,              // |g4| <= g2
  Abs5LeG1,              // |g5| <= g1
  Abs6LeG1,              // |g6| <= g1
  G3LeSum,               // g3 <= g1 + g2 + g3 + g4 + g5 + g6
  SingleBranch,          // g4, g5, g6 all > 0 or all <= 0
  EqualG1G2,             // g1 = g2  =>  |g4| <= |g5|
  EqualG2G3,             // g2 = g3  =>  |g5| <= |g6|
  G4EqG2,                // g4 = g2  =>  g6 <= 2 g5
  G5EqG1,                // g5 = g1  =>  g6 <= 2 g4
  G6EqG1,                // g6 = g1  =>  g5 <= 2 g4
  G4EqMinusG2,           // g4 = -g2 =>  g6 = 0
  G5EqMinusG1,           // g5 = -g1 =>  g6 = 0
  G6EqMinusG1,           // g6 = -g1 =>  g5 = 0
  G3EqSum,               // g3 = sum =>  2 g1 + 2 g5 + g6 <= 0
};
std::string_view describe(NiggliCondition c);

struct NiggliReport {
  bool satisfied = true;
  std::vector<NiggliCondition> failed_conditions;
  Branch branch = Branch::Obtuse;
};

// Throws InvalidCell when g is not positive definite.
NiggliReport is_niggli_reduced(const G6Vector& g,
                               double tol = kDefaultTolerance);
// Same predicate without diagnostics or the validity check.
bool satisfies_niggli(const G6Vector& g, double tol = kDefaultTolerance);
Branch branch_of(const G6Vector& g, double tol = kDefaultTolerance);

enum class ReductionStep {
  SwapAB,        // g1 > g2 or the g1 = g2 tie-break
  SwapBC,        // g2 > g3 or the g2 = g3 tie-break
  SignsAcute,    // make g4, g5, g6 all positive
  SignsObtuse,   // make g4, g5, g6 all non-positive
  ReduceG4,      // c' = c -/+ b
  ReduceG5,      // c' = c -/+ a
  ReduceG6,      // b' = b -/+ a
  BodyDiagonal,  // c' = a + b + c
};
std::string_view to_string(ReductionStep s);

struct ReductionResult {
  G6Vector reduced;
  BasisTransform basis_transform;
  G6Matrix g6_transform;
  std::vector<ReductionStep> steps;
  int iterations = 0;
};

struct ReduceOptions {
  double tol = kDefaultTolerance;
  int max_iterations = 1000;
};

// Throws InvalidCell or NonConvergence (with the last three steps).
ReductionResult niggli_reduce(const G6Vector& g,
                              const ReduceOptions& options = {});
inline ReductionResult niggli_reduce(const G6Vector& g, double tol) {
  return niggli_reduce(g, ReduceOptions{tol});
}

// Reduction without step bookkeeping or the exact G6 matrix; returns the
// reduced vector and writes the total basis transform. No validity check.
G6Vector reduce_fast(const G6Vector& g, BasisTransform& total,
                     const ReduceOptions& options = {});

// Test oracle: tries every determinant +1 basis transform with entries in
// [-entry_bound, entry_bound] and keeps the reduced candidate minimal in
// (g1, g2, g3, g4, g5, g6). Throws NoCandidate if none is reduced.
G6Vector brute_force_reduce(const G6Vector& g, int entry_bound = 2,
                            double tol = kDefaultTolerance);

// All determinant +1 transforms with entries bounded by entry_bound
// (cached per bound).
const std::vector<BasisTransform>& unimodular_transforms(int entry_bound);

}  // namespace niggli
