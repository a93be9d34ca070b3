#include "niggli/projector.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace niggli {

NumericProjector::NumericProjector(const NumericMatrix& p) : p_(p) {
  const double idem = idempotence_error();
  const double sym = symmetry_error();
  if (!(idem <= 1e-9) || !(sym <= 1e-12)) {
    std::ostringstream os;
    os << "matrix is not a projector: |P^2 - P| = " << idem
       << ", |P - P^T| = " << sym;
    throw InconsistentProjector(os.str());
  }
}

NumericProjector NumericProjector::identity() {
  return NumericProjector(NumericMatrix::Identity(), Unchecked{});
}

NumericProjector NumericProjector::from_exact(const G6Matrix& p) {
  return NumericProjector(p.to_numeric());
}

NumericProjector NumericProjector::onto_hyperplane(const LinearForm& form) {
  return from_exact(hyperplane_projector(form));
}

G6Vector NumericProjector::apply(const G6Vector& g) const {
  return G6Vector(NumericVector(p_ * g.to_eigen()));
}

double NumericProjector::idempotence_error() const {
  return (p_ * p_ - p_).norm();
}

double NumericProjector::symmetry_error() const {
  return (p_ - p_.transpose()).norm();
}

NumericProjector projector_from_samples(std::span<const G6Vector> samples,
                                        double small_sv_threshold) {
  if (samples.size() < 6)
    throw InsufficientSamples("projector recovery needs at least 6 samples, got " +
                              std::to_string(samples.size()));
  Eigen::MatrixXd s(static_cast<Eigen::Index>(samples.size()), 6);
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (int j = 0; j < 6; ++j) s(static_cast<Eigen::Index>(i), j) = samples[i][j];

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(s, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double largest = sv[0];
  if (!(largest > 0.0)) throw RankAmbiguity("all samples are zero");

  int retained = 0;
  while (retained < 6 && sv[retained] >= small_sv_threshold * largest) ++retained;
  if (retained < 6) {
    const double next = std::max(sv[retained], 1e-300 * largest);
    const double ratio = sv[retained - 1] / next;
    if (ratio < 10.0) {
      std::ostringstream os;
      os << "no clear singular-value gap: sigma_" << retained << " / sigma_"
         << retained + 1 << " = " << ratio;
      throw RankAmbiguity(os.str());
    }
  }

  NumericMatrix a = NumericMatrix::Zero();
  for (int k = retained; k < 6; ++k) a.row(k) = svd.matrixV().col(k).transpose();
  NumericMatrix p = NumericMatrix::Identity() - a.transpose() * a;
  p = 0.5 * (p + p.transpose()).eval();
  return NumericProjector(p);
}

namespace {

NumericProjector converge(NumericMatrix q) {
  for (int i = 0; i <= 64; ++i) {
    const NumericMatrix q2 = q * q;
    if ((q2 - q).norm() <= 1e-12) {
      const NumericMatrix sym = 0.5 * (q2 + q2.transpose());
      return NumericProjector(sym);
    }
    if (i == 64) break;
    q = q2;
  }
  throw NonConvergence("projector intersection did not converge after 64 squarings");
}

}  // namespace

NumericProjector intersect_projectors(std::span<const NumericProjector> ps) {
  if (ps.empty()) throw PreconditionError("intersect_projectors needs at least one projector");
  NumericMatrix q = NumericMatrix::Identity();
  for (const auto& p : ps) q = q * p.matrix();
  return converge(q);
}

NumericProjector intersect_projectors(std::span<const CaseId> cases) {
  if (cases.empty()) throw PreconditionError("intersect_projectors needs at least one case");
  std::vector<NumericProjector> factors;
  factors.reserve(cases.size());
  std::vector<CaseId> seen;
  for (CaseId id : cases) {
    bool substituted = false;
    for (const FlatPair& fp : flat_pairs()) {
      const CaseId partner = id == fp.first ? fp.second
                             : id == fp.second ? fp.first
                                               : id;
      if (partner == id) continue;
      if (std::find(seen.begin(), seen.end(), partner) != seen.end()) {
        factors.push_back(NumericProjector::onto_hyperplane(fp.division));
        substituted = true;
      }
    }
    if (!substituted)
      factors.push_back(NumericProjector::from_exact(boundary_case(id).projector));
    seen.push_back(id);
  }
  return intersect_projectors(std::span<const NumericProjector>(factors));
}

NumericProjector intersect_projectors(CaseSet cases) {
  const auto members = cases.members();
  return intersect_projectors(std::span<const CaseId>(members));
}

int projector_dimension(const NumericProjector& p) {
  Eigen::SelfAdjointEigenSolver<NumericMatrix> es(p.matrix());
  int count = 0;
  for (int i = 0; i < 6; ++i)
    if (std::abs(es.eigenvalues()[i] - 1.0) <= 1e-6) ++count;
  const double trace = p.matrix().trace();
  if (count != static_cast<int>(std::lround(trace))) {
    std::ostringstream os;
    os << "eigenvalue count " << count << " disagrees with trace " << trace;
    throw InconsistentProjector(os.str());
  }
  return count;
}

double distance(const NumericProjector& a, const NumericProjector& b) {
  return (a.matrix() - b.matrix()).norm();
}

}  // namespace niggli
