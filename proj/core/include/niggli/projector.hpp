#pragma once

#include <span>
#include <vector>

#include "niggli/boundaries.hpp"
#include "niggli/g6.hpp"

namespace niggli {

// Symmetric idempotent 6x6 matrix in floating point.
class NumericProjector {
 public:
  // Checks |P^2 - P|_F <= 1e-9 and |P - P^T|_F <= 1e-12; throws
  // InconsistentProjector otherwise.
  explicit NumericProjector(const NumericMatrix& p);
  static NumericProjector identity();
  static NumericProjector from_exact(const G6Matrix& p);
  static NumericProjector onto_hyperplane(const LinearForm& form);

  const NumericMatrix& matrix() const { return p_; }
  G6Vector apply(const G6Vector& g) const;
  double idempotence_error() const;  // |P^2 - P|_F
  double symmetry_error() const;     // |P - P^T|_F

 private:
  struct Unchecked {};
  NumericProjector(const NumericMatrix& p, Unchecked) : p_(p) {}
  NumericMatrix p_;
};

// SVD of the stacked samples. Right singular vectors whose singular value
// falls below small_sv_threshold * (largest) form A; returns I - A^T A.
// Throws InsufficientSamples (< 6 samples) or RankAmbiguity when the ratio
// between the last retained and first discarded singular value is < 10.
NumericProjector projector_from_samples(std::span<const G6Vector> samples,
                                        double small_sv_threshold = 1e-6);

// Product of the case projectors with the flat-pair substitution, then
// repeated squaring until |P^2 - P|_F <= 1e-12. Throws NonConvergence after
// 64 squarings, PreconditionError on an empty list.
NumericProjector intersect_projectors(std::span<const CaseId> cases);
NumericProjector intersect_projectors(CaseSet cases);
// Same iteration on arbitrary projectors (no substitution).
NumericProjector intersect_projectors(std::span<const NumericProjector> ps);

// Count of eigenvalues within 1e-6 of 1; throws InconsistentProjector when
// that count differs from round(trace).
int projector_dimension(const NumericProjector& p);

// Frobenius norm of the difference.
double distance(const NumericProjector& a, const NumericProjector& b);

}  // namespace niggli
