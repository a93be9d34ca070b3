#pragma once

#include <cstdint>
#include <random>

#include "niggli/g6.hpp"

namespace niggli {

using Rng = std::mt19937_64;

// splitmix64 finalizer over (seed, index); gives independent per-stream seeds
// so chunked parallel runs reproduce a serial run.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);
inline Rng make_stream(std::uint64_t seed, std::uint64_t index) {
  return Rng(derive_seed(seed, index));
}

// Edges uniform in [edge_min, edge_max]; angles uniform in
// (angle_min, angle_max) degrees, rejected until the cell is valid.
struct CellDistribution {
  double edge_min = 1.0;
  double edge_max = 100.0;
  double angle_min = 0.0;
  double angle_max = 180.0;
};

// One draw; returns false when the draw is not a valid cell.
bool try_random_cell(Rng& rng, const CellDistribution& dist, CellParams& out);

// Uniform direction on the unit sphere of G6.
G6Vector random_direction(Rng& rng);
// Isotropic Gaussian with expected squared norm scale^2.
G6Vector random_gaussian(Rng& rng, double scale);
// Uniform point in the ball of the given radius.
G6Vector random_in_ball(Rng& rng, double radius);

}  // namespace niggli
