#include "niggli/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "niggli/cone.hpp"

namespace niggli {

using IntMatrix = std::array<std::int64_t, 36>;

std::uint64_t MatrixCensus::counted() const {
  std::uint64_t n = 0;
  for (const auto& [m, e] : entries) n += e.count;
  return n;
}

void MatrixCensus::merge(const MatrixCensus& other) {
  for (const auto& [m, e] : other.entries) {
    auto [it, inserted] = entries.try_emplace(m, e);
    if (inserted) continue;
    it->second.count += e.count;
    if (e.example_trial < it->second.example_trial) {
      it->second.example = e.example;
      it->second.example_trial = e.example_trial;
    }
  }
  total_trials += other.total_trials;
  identity_discards += other.identity_discards;
  invalid_discards += other.invalid_discards;
}

std::vector<std::pair<G6Matrix, std::uint64_t>> MatrixCensus::sorted() const {
  std::vector<std::pair<G6Matrix, std::uint64_t>> out;
  out.reserve(entries.size());
  for (const auto& [m, e] : entries) out.emplace_back(m, e.count);
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return out;
}

namespace {

constexpr int kMaxDrawsPerTrial = 1000;

bool is_identity(const IntMatrix& m) {
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c)
      if (m[r * 6 + c] != (r == c ? 1 : 0)) return false;
  return true;
}

G6Matrix to_matrix(const IntMatrix& m) { return G6Matrix::from_integers(m); }

// Normalized interior direction of the chamber that g violates least.
G6Vector inward_direction(const G6Vector& g) {
  const auto& cone = NiggliCone::instance();
  double best = -1e300;
  const ConeChamber* pick = nullptr;
  for (const auto& ch : cone.chambers()) {
    double worst = 1e300;
    for (const auto& f : ch.inequalities) worst = std::min(worst, evaluate(f, g) / norm(f));
    if (worst > best) {
      best = worst;
      pick = &ch;
    }
  }
  G6Vector d;
  for (int i = 0; i < 6; ++i) d[i] = static_cast<double>(pick->interior_direction[i]);
  return d * (1.0 / d.norm());
}

struct ChunkCensus {
  std::map<IntMatrix, MatrixCensus::Entry> entries;
  std::uint64_t trials = 0;
  std::uint64_t identity = 0;
  std::uint64_t invalid = 0;
  std::uint64_t draws = 0;
  std::uint64_t rejected_draws = 0;
  std::uint64_t projections = 0;
  std::uint64_t rejected_projections = 0;
  bool starved = false;
};

void run_chunk(const ProbeConfig& cfg, std::uint64_t chunk, ChunkCensus& out) {
  Rng rng = make_stream(cfg.seed, chunk);
  const std::uint64_t begin = chunk * cfg.chunk_size;
  const std::uint64_t end = std::min(cfg.trials, begin + cfg.chunk_size);
  const ReduceOptions ro{cfg.tol, 1000};
  const bool boundary = cfg.boundary_projector.has_value();

  for (std::uint64_t trial = begin; trial < end; ++trial) {
    ++out.trials;
    // A valid random cell.
    CellParams cell;
    int draws = 0;
    bool ok = false;
    while (draws < kMaxDrawsPerTrial) {
      ++draws;
      if (try_random_cell(rng, cfg.cells, cell)) {
        ok = true;
        break;
      }
    }
    out.draws += static_cast<std::uint64_t>(draws);
    out.rejected_draws += static_cast<std::uint64_t>(ok ? draws - 1 : draws);
    if (!ok) {
      out.starved = true;
      return;
    }
    G6Vector g = cell_to_g6(cell);

    // Optionally pin the cell to the boundary polytope.
    if (boundary) {
      ++out.projections;
      g = cfg.boundary_projector->apply(g);
      if (!is_positive_definite(g)) {
        ++out.rejected_projections;
        ++out.invalid;
        continue;
      }
    }

    // Reduce, then perturb the reduced point.
    BasisTransform t;
    G6Vector r;
    try {
      r = reduce_fast(g, t, ro);
    } catch (const NonConvergence&) {
      ++out.invalid;
      continue;
    }

    const double radius = cfg.perturbation_scale * r.norm();
    G6Vector delta;
    if (boundary && !cfg.step_back) {
      delta = cfg.boundary_projector->apply(random_gaussian(rng, radius));
    } else {
      if (cfg.step_back) r += inward_direction(r) * (*cfg.step_back * radius);
      delta = random_gaussian(rng, radius);
    }
    const G6Vector p = r + delta;

    // Re-reduce and keep the matrix unless it is the identity.
    if (!is_positive_definite(p)) {
      ++out.invalid;
      continue;
    }
    try {
      reduce_fast(p, t, ro);
    } catch (const NonConvergence&) {
      ++out.invalid;
      continue;
    }
    const IntMatrix m = g6_integer_matrix_from_basis(t);
    if (is_identity(m)) {
      ++out.identity;
      continue;
    }
    auto [it, inserted] = out.entries.try_emplace(m);
    if (inserted) {
      it->second.example = p;
      it->second.example_trial = trial;
    }
    ++it->second.count;
  }
}

MatrixCensus run_probe(const ProbeConfig& cfg) {
  if (cfg.trials == 0) throw PreconditionError("probe needs at least one trial");
  if (!(cfg.perturbation_scale > 0))
    throw PreconditionError("perturbation scale must be positive");
  if (cfg.chunk_size == 0) throw PreconditionError("chunk size must be positive");
  if (cfg.step_back && !(*cfg.step_back >= 0))
    throw PreconditionError("step back must be non-negative");

  const std::uint64_t chunks = (cfg.trials + cfg.chunk_size - 1) / cfg.chunk_size;
  std::vector<ChunkCensus> results(chunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) run_chunk(cfg, c, results[c]);
  };
  unsigned n = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                               : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::uint64_t>(n, chunks));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  MatrixCensus census;
  std::uint64_t draws = 0, rejected = 0, projections = 0, bad_projections = 0;
  bool starved = false;
  for (const auto& r : results) {
    MatrixCensus part;
    for (const auto& [m, e] : r.entries) part.entries.emplace(to_matrix(m), e);
    part.total_trials = r.trials;
    part.identity_discards = r.identity;
    part.invalid_discards = r.invalid;
    census.merge(part);
    draws += r.draws;
    rejected += r.rejected_draws;
    projections += r.projections;
    bad_projections += r.rejected_projections;
    starved |= r.starved;
  }
  if (starved || (draws > 0 && static_cast<double>(rejected) > 0.99 * static_cast<double>(draws))) {
    std::ostringstream os;
    os << "cell generator starved: " << rejected << " of " << draws
       << " random draws were not valid cells";
    throw GeneratorStarvation(os.str());
  }
  if (projections > 0 &&
      static_cast<double>(bad_projections) > 0.99 * static_cast<double>(projections)) {
    std::ostringstream os;
    os << "projection invalidated " << bad_projections << " of " << projections
       << " vectors";
    throw ProjectionInvalidatesAll(os.str());
  }
  return census;
}

}  // namespace

MatrixCensus probe_5d(const ProbeConfig& config) {
  if (config.boundary_projector)
    throw PreconditionError("probe_5d takes no boundary projector; use probe_boundary");
  return run_probe(config);
}

MatrixCensus probe_boundary(const ProbeConfig& config) {
  if (!config.boundary_projector)
    throw PreconditionError("probe_boundary needs a boundary projector");
  return run_probe(config);
}

WitnessResult witness_probe(std::span<const G6Vector> seed_points,
                            std::span<const G6Vector> inward,
                            const WitnessConfig& cfg) {
  if (seed_points.empty() || seed_points.size() != inward.size())
    throw PreconditionError("witness probing needs matching seed points and directions");
  WitnessResult out;
  Rng rng = make_stream(cfg.seed, 0);
  const ReduceOptions ro{cfg.tol, 1000};
  for (std::uint64_t k = 0; k < cfg.probes; ++k) {
    const std::size_t i = k % seed_points.size();
    const double radius = cfg.perturbation_scale * seed_points[i].norm();
    const G6Vector p = seed_points[i] + inward[i] * (cfg.step_back * radius) +
                       random_in_ball(rng, radius);
    ++out.probes;
    if (!is_positive_definite(p)) {
      ++out.invalid;
      continue;
    }
    if (satisfies_niggli(p, cfg.tol)) {
      ++out.reduced_neighbors;
      continue;
    }
    BasisTransform t;
    try {
      reduce_fast(p, t, ro);
    } catch (const NonConvergence&) {
      ++out.invalid;
      continue;
    }
    const IntMatrix m = g6_integer_matrix_from_basis(t);
    if (!is_identity(m)) ++out.matrices[m];
  }
  return out;
}

ZScoreReport zscore_analysis(std::span<const std::uint64_t> populations) {
  if (populations.empty()) throw PreconditionError("z-score analysis needs populations");
  std::vector<std::size_t> order(populations.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return populations[a] > populations[b];
  });

  std::size_t cut = order.size();
  for (std::size_t i = 1; i < order.size(); ++i) {
    const double prev = static_cast<double>(populations[order[i - 1]]);
    const double cur = static_cast<double>(populations[order[i]]);
    if (prev > 10.0 * cur) {
      cut = i;
      break;
    }
  }

  ZScoreReport rep;
  rep.cutoff_index = cut;
  double sum = 0;
  for (std::size_t i = 0; i < cut; ++i) sum += static_cast<double>(populations[order[i]]);
  rep.mean = sum / static_cast<double>(cut);
  double ss = 0;
  for (std::size_t i = 0; i < cut; ++i) {
    const double d = static_cast<double>(populations[order[i]]) - rep.mean;
    ss += d * d;
  }
  rep.sigma = cut > 1 ? std::sqrt(ss / static_cast<double>(cut - 1)) : 0.0;
  if (!(rep.sigma > 0)) {
    std::ostringstream os;
    os << "retained head of " << cut << " populations has zero deviation";
    throw DegenerateVariance(os.str());
  }
  for (std::size_t i = 0; i < cut; ++i) {
    ZScoreEntry e;
    e.index = order[i];
    e.tau = static_cast<double>(populations[order[i]]);
    e.z = (e.tau - rep.mean) / rep.sigma;
    e.flagged = e.z < -1.0;
    rep.retained.push_back(e);
  }
  return rep;
}

ZScoreReport zscore_analysis(const MatrixCensus& census) {
  std::vector<std::uint64_t> pops;
  for (const auto& [m, n] : census.sorted()) pops.push_back(n);
  return zscore_analysis(pops);
}

}  // namespace niggli
