#include "niggli/polytope_lab.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "niggli/cone.hpp"
#include "niggli/exact.hpp"
#include "niggli/montecarlo.hpp"
#include "niggli/pattern.hpp"
#include "niggli/random.hpp"

namespace niggli {

namespace {

constexpr int kSeedsPerChamber = 8;

PolytopeRecord make_record(const NiggliCone& cone, CaseSet key, const ConeFace& face) {
  PolytopeRecord rec;
  rec.generators = key;
  rec.dimension = cone.dimension(face);
  rec.exact_projector = cone.span_projector(face);
  rec.canonical_projector = NumericProjector::from_exact(rec.exact_projector);
  const NumericProjector hyper = intersect_projectors(key);
  rec.hyperplane_dimension = projector_dimension(hyper);
  const NumericMatrix& s = rec.canonical_projector.matrix();
  if ((hyper.matrix() * s - s).norm() > 1e-9)
    throw std::logic_error("face of " + key.to_string() +
                           " leaves the intersection of its hyperplanes");
  std::vector<RationalVector6> rows;
  for (const auto& r : cone.rays(face)) rows.push_back(to_rational(r));
  rec.subspace_pattern = format_pattern(rows);
  return rec;
}

// Relative-interior points of the face in each chamber where it is full
// dimensional, paired with that chamber's inward direction.
void witness_seeds(const NiggliCone& cone, const ConeFace& face, Rng& rng,
                   std::vector<G6Vector>& points, std::vector<G6Vector>& inward) {
  std::uniform_real_distribution<double> w(0.2, 1.0);
  for (int h : cone.full_dimensional_chambers(face)) {
    const ConeChamber& ch = cone.chambers()[h];
    G6Vector in;
    for (int i = 0; i < 6; ++i) in[i] = static_cast<double>(ch.interior_direction[i]);
    in *= 1.0 / in.norm();
    for (int k = 0; k < kSeedsPerChamber; ++k) {
      G6Vector x;
      for (std::size_t i = 0; i < ch.rays.size(); ++i) {
        if (!(face.masks()[h] >> i & 1ull)) continue;
        const double a = w(rng);
        for (int j = 0; j < 6; ++j) x[j] += a * static_cast<double>(ch.rays[i][j]);
      }
      x *= 100.0 / x.max_abs();
      points.push_back(x);
      inward.push_back(in);
    }
  }
}

void probe_record(const NiggliCone& cone, const ConeFace& face,
                  const EnumerateOptions& opt, PolytopeRecord& rec) {
  Rng rng = make_stream(opt.seed, 0x10000u + rec.generators.mask());
  std::vector<G6Vector> points, inward;
  witness_seeds(cone, face, rng, points, inward);
  if (points.empty()) return;
  WitnessConfig wc;
  wc.seed = derive_seed(opt.seed, rec.generators.mask());
  wc.probes = opt.probe_budget;
  wc.perturbation_scale = opt.perturbation_scale;
  wc.step_back = opt.step_back;
  wc.tol = opt.tol;
  const WitnessResult wr = witness_probe(points, inward, wc);
  rec.probes = wr.probes;
  rec.reduced_neighbors = wr.reduced_neighbors;
  for (const auto& [m, n] : wr.matrices) rec.witness_matrices[G6Matrix::from_integers(m)] = n;
  rec.populated = wr.reduced_neighbors > 0;
  rec.probe_inconclusive = !rec.populated;
}

}  // namespace

std::optional<PolytopeRecord> classify_generators(CaseSet cases) {
  if (cases.empty()) throw PreconditionError("generator set is empty");
  const auto& cone = NiggliCone::instance();
  const ConeFace face = cone.face(cases);
  if (face.empty() || cone.forces_zero_edge(face)) return std::nullopt;
  const CaseSet key = cone.containing_cases(face);
  PolytopeRecord rec = make_record(cone, key, face);
  rec.equivalents.push_back(cases);
  return rec;
}

EnumerationSummary enumerate_polytopes(const EnumerateOptions& opt) {
  if (opt.max_subset_size < 1 || opt.max_subset_size > 15)
    throw PreconditionError("subset size cap must lie in 1..15");
  const auto& cone = NiggliCone::instance();
  EnumerationSummary sum;

  // Closure of every subset; the class key of a subset is its closure.
  std::vector<std::uint16_t> closure(0x8000, 0);
  for (unsigned m = 1; m < 0x8000; ++m)
    closure[m] = cone.closure(CaseSet(static_cast<std::uint16_t>(m))).mask();

  struct Group {
    std::vector<CaseSet> irredundant;
    std::uint64_t presentations = 0;
  };
  std::map<std::uint16_t, Group> groups;
  for (unsigned m = 1; m < 0x8000; ++m) {
    const CaseSet s(static_cast<std::uint16_t>(m));
    if (s.size() > opt.max_subset_size) continue;
    ++sum.subsets_examined;
    Group& g = groups[closure[m]];
    ++g.presentations;
    bool irredundant = true;
    for (CaseId id : s.members()) {
      CaseSet t = s;
      t.erase(id);
      if (!t.empty() && closure[t.mask()] == closure[m]) {
        irredundant = false;
        break;
      }
    }
    if (irredundant) g.irredundant.push_back(s);
  }

  std::vector<std::pair<CaseSet, ConeFace>> classes;
  std::vector<std::uint64_t> presentations;
  std::vector<std::vector<CaseSet>> irredundant;
  for (auto& [mask, g] : groups) {
    const CaseSet key(mask);
    const ConeFace face = cone.face(key);
    if (face.empty()) {
      ++sum.rejected_empty;
      continue;
    }
    if (cone.forces_zero_edge(face)) {
      ++sum.rejected_zero_edge;
      continue;
    }
    classes.emplace_back(key, face);
    presentations.push_back(g.presentations);
    std::sort(g.irredundant.begin(), g.irredundant.end());
    irredundant.push_back(std::move(g.irredundant));
  }

  std::vector<PolytopeRecord> records(classes.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < classes.size();) {
      try {
        PolytopeRecord rec = make_record(cone, classes[i].first, classes[i].second);
        rec.presentations = presentations[i];
        rec.equivalents = irredundant[i];
        if (opt.probe_budget > 0) probe_record(cone, classes[i].second, opt, rec);
        records[i] = std::move(rec);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  unsigned n = opt.threads > 0 ? static_cast<unsigned>(opt.threads)
                               : std::max(1u, std::thread::hardware_concurrency());
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  for (auto& rec : records) {
    if (opt.probe_budget > 0 && rec.probe_inconclusive) {
      sum.warnings.push_back("no Niggli-reduced neighbor among " +
                             std::to_string(rec.probes) + " probes of " +
                             rec.generators.to_string());
      if (rec.witness_matrices.empty()) {
        ++sum.rejected_unpopulated;
        continue;
      }
    }
    sum.nondegenerate_subsets += rec.presentations;
    ++sum.census[rec.dimension];
    sum.polytopes.push_back(std::move(rec));
  }
  std::stable_sort(sum.polytopes.begin(), sum.polytopes.end(),
                   [](const PolytopeRecord& a, const PolytopeRecord& b) {
                     if (a.dimension != b.dimension) return a.dimension > b.dimension;
                     return a.generators < b.generators;
                   });
  return sum;
}

const std::vector<OneDEntry>& one_d_catalog() {
  static const std::vector<OneDEntry> table = {
      {"12679ACD", "(r,r,r,r,r,r)"},  {"12345", "(r,r,r,0,0,0)"},
      {"1234CD", "(r,r,r,0,0,r)"},    {"1234E", "(r,r,r,0,0,-r)"},
      {"12359A", "(r,r,r,0,r,0)"},    {"1235B", "(r,r,r,0,-r,0)"},
      {"123AD", "(r,r,r,0,r,r)"},     {"123BEF", "(r,r,r,0,-r,-r)"},
      {"124567", "(r,r,r,r,0,0)"},    {"12458", "(r,r,r,-r,0,0)"},
      {"1247C", "(r,r,r,r,0,r)"},     {"1248EF", "(r,r,r,-r,0,-r)"},
      {"12569", "(r,r,r,r,r,0)"},     {"1258BF", "(r,r,r,-r,-r,0)"},
  };
  return table;
}

}  // namespace niggli
