#include "niggli/random.hpp"

#include <cmath>

namespace niggli {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

bool try_random_cell(Rng& rng, const CellDistribution& dist, CellParams& out) {
  std::uniform_real_distribution<double> edge(dist.edge_min, dist.edge_max);
  std::uniform_real_distribution<double> angle(dist.angle_min, dist.angle_max);
  out.a = edge(rng);
  out.b = edge(rng);
  out.c = edge(rng);
  out.alpha = angle(rng);
  out.beta = angle(rng);
  out.gamma = angle(rng);
  const double sum = out.alpha + out.beta + out.gamma;
  if (!(out.alpha > 0 && out.beta > 0 && out.gamma > 0 && sum < 360.0 &&
        2 * out.alpha < sum && 2 * out.beta < sum && 2 * out.gamma < sum))
    return false;
  return is_positive_definite(cell_to_g6(out));
}

G6Vector random_direction(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    G6Vector v(n(rng), n(rng), n(rng), n(rng), n(rng), n(rng));
    const double len = v.norm();
    if (len > 1e-12) return v * (1.0 / len);
  }
}

G6Vector random_gaussian(Rng& rng, double scale) {
  std::normal_distribution<double> n(0.0, scale / std::sqrt(6.0));
  return G6Vector(n(rng), n(rng), n(rng), n(rng), n(rng), n(rng));
}

G6Vector random_in_ball(Rng& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return random_direction(rng) * (radius * std::pow(u(rng), 1.0 / 6.0));
}

}  // namespace niggli
