#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "niggli/g6.hpp"
#include "niggli/projector.hpp"
#include "niggli/random.hpp"
#include "niggli/reduction.hpp"

namespace niggli {

struct ProbeConfig {
  std::uint64_t seed = 1;
  std::uint64_t trials = 0;
  double perturbation_scale = 1e-4;  // radius relative to |g|
  CellDistribution cells;
  // Set for the lower-dimensional process: the random vector is projected
  // onto this subspace before reduction.
  std::optional<NumericProjector> boundary_projector;
  // Inward step before a full 6-D perturbation, as a fraction of the
  // perturbation radius. Without it the perturbation is projected onto the
  // boundary subspace.
  std::optional<double> step_back;
  double tol = kDefaultTolerance;
  int threads = 0;  // 0: hardware concurrency
  std::uint64_t chunk_size = 4096;
};

// Census of total reduction transforms, keyed by the exact G6 matrix.
struct MatrixCensus {
  struct Entry {
    std::uint64_t count = 0;
    // Earliest perturbed probe that produced this matrix, and its trial.
    G6Vector example;
    std::uint64_t example_trial = 0;
  };

  std::map<G6Matrix, Entry> entries;
  std::uint64_t total_trials = 0;
  std::uint64_t identity_discards = 0;   // transform was the unit matrix
  std::uint64_t invalid_discards = 0;    // perturbed or projected vector invalid

  std::uint64_t discarded() const { return identity_discards + invalid_discards; }
  std::uint64_t counted() const;
  void merge(const MatrixCensus& other);
  // Descending by count; ties broken by the matrix order.
  std::vector<std::pair<G6Matrix, std::uint64_t>> sorted() const;
};

// Random cells are reduced, perturbed and reduced again; the census counts
// the non-identity reduction matrices. Throws PreconditionError for zero trials or a
// non-positive perturbation scale, GeneratorStarvation when more than 99%
// of random draws are invalid cells.
MatrixCensus probe_5d(const ProbeConfig& config);

// The same census with every random cell projected onto a boundary
// polytope first; needs config.boundary_projector. Throws
// ProjectionInvalidatesAll when more than 99% of projected vectors are not
// valid cells.
MatrixCensus probe_boundary(const ProbeConfig& config);

// Perturbations around fixed seed points that lie on a face of the closed
// cone; each seed is first moved step_back * radius along `inward`.
struct WitnessConfig {
  std::uint64_t seed = 1;
  std::uint64_t probes = 0;
  double perturbation_scale = 1e-4;
  double step_back = 0.25;
  double tol = kDefaultTolerance;
};

struct WitnessResult {
  std::uint64_t probes = 0;
  std::uint64_t reduced_neighbors = 0;  // probes already Niggli reduced
  std::uint64_t invalid = 0;
  std::map<std::array<std::int64_t, 36>, std::uint64_t> matrices;
};

// Probe k uses seed_points[k % size] and inward[k % size].
WitnessResult witness_probe(std::span<const G6Vector> seed_points,
                            std::span<const G6Vector> inward,
                            const WitnessConfig& config);

struct ZScoreEntry {
  std::size_t index = 0;  // position in the input
  double tau = 0;
  double z = 0;
  bool flagged = false;  // z < -1
};

struct ZScoreReport {
  std::vector<ZScoreEntry> retained;  // descending population
  std::size_t cutoff_index = 0;       // first dropped position in sorted order
  double mean = 0;
  double sigma = 0;  // sample standard deviation
};

// Sorts descending, cuts at the first drop by strictly more than 10x, and
// scores the retained head. Throws PreconditionError on empty input and
// DegenerateVariance when the head has zero sample deviation.
ZScoreReport zscore_analysis(std::span<const std::uint64_t> populations);
// Indices refer to census.sorted().
ZScoreReport zscore_analysis(const MatrixCensus& census);

}  // namespace niggli
