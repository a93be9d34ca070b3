#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "niggli/boundaries.hpp"
#include "niggli/g6.hpp"
#include "niggli/projector.hpp"

namespace niggli {

struct PolytopeRecord {
  // Every case whose closed region contains the polytope. This set is the
  // class key: two generator sets are equivalent when they cut out the same
  // face of the closed cone.
  CaseSet generators;
  int dimension = 0;
  G6Matrix exact_projector;  // onto the linear span of the face
  NumericProjector canonical_projector = NumericProjector::identity();
  // Plain product of the generators' hyperplane projectors (with the flat
  // substitution). Its dimension can exceed the face dimension when the
  // cone inequalities force extra equalities.
  int hyperplane_dimension = 0;
  // Irredundant presentations: generator subsets of size <= the search cap
  // reaching this class with no proper subset doing so.
  std::vector<CaseSet> equivalents;
  std::uint64_t presentations = 0;  // all subsets reaching the class
  std::string subspace_pattern;
  // Witness probing.
  bool populated = false;
  bool probe_inconclusive = false;
  std::uint64_t probes = 0;
  std::uint64_t reduced_neighbors = 0;
  std::map<G6Matrix, std::uint64_t> witness_matrices;
};

struct EnumerateOptions {
  std::uint64_t probe_budget = 10000;  // per class; 0 skips probing
  double tol = kDefaultTolerance;
  std::uint64_t seed = 1;
  int threads = 0;
  int max_subset_size = 8;
  double perturbation_scale = 1e-4;
  double step_back = 0.25;
};

struct EnumerationSummary {
  std::vector<PolytopeRecord> polytopes;  // by dimension desc, then key
  std::map<int, int> census;              // dimension -> count
  std::uint64_t subsets_examined = 0;
  std::uint64_t nondegenerate_subsets = 0;
  int rejected_empty = 0;       // classes with no point in the closed cone
  int rejected_zero_edge = 0;   // classes forcing g1 = 0 (hence g2 or g3)
  int rejected_unpopulated = 0;
  std::vector<std::string> warnings;
};

EnumerationSummary enumerate_polytopes(const EnumerateOptions& options = {});

// Class of one generator set, without probing. Returns nullopt when the set
// is rejected as empty or zero-edge.
std::optional<PolytopeRecord> classify_generators(CaseSet cases);

struct OneDEntry {
  std::string generators;  // "12679ACD"
  std::string pattern;     // "(r,r,r,r,r,r)"
};
// The fourteen one-dimensional polytopes with their principal generators.
const std::vector<OneDEntry>& one_d_catalog();

}  // namespace niggli
