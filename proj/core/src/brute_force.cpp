#include <map>
#include <mutex>
#include <sstream>

#include "niggli/reduction.hpp"

namespace niggli {

namespace {

struct TransformTable {
  std::vector<BasisTransform> bases;
  std::vector<std::array<std::int16_t, 36>> g6;
};

const TransformTable& table_for(int bound) {
  static std::mutex mutex;
  static std::map<int, TransformTable> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(bound);
  if (it != cache.end()) return it->second;

  TransformTable t;
  const int n = 2 * bound + 1;
  int total = 1;
  for (int i = 0; i < 9; ++i) total *= n;
  for (int code = 0; code < total; ++code) {
    BasisTransform::Rows rows{};
    int c = code;
    for (int i = 0; i < 9; ++i) {
      rows[i / 3][i % 3] = c % n - bound;
      c /= n;
    }
    BasisTransform m(rows);
    if (m.determinant() != 1) continue;
    const auto big = g6_integer_matrix_from_basis(m);
    std::array<std::int16_t, 36> small{};
    for (int i = 0; i < 36; ++i) small[i] = static_cast<std::int16_t>(big[i]);
    t.bases.push_back(m);
    t.g6.push_back(small);
  }
  return cache.emplace(bound, std::move(t)).first->second;
}

}  // namespace

const std::vector<BasisTransform>& unimodular_transforms(int entry_bound) {
  if (entry_bound < 1 || entry_bound > 3)
    throw PreconditionError("entry_bound must be 1, 2 or 3");
  return table_for(entry_bound).bases;
}

G6Vector brute_force_reduce(const G6Vector& g, int entry_bound, double tol) {
  if (entry_bound < 1 || entry_bound > 3)
    throw PreconditionError("entry_bound must be 1, 2 or 3");
  if (!is_positive_definite(g)) throw InvalidCell("invalid cell for oracle");
  const TransformTable& t = table_for(entry_bound);
  bool found = false;
  G6Vector best;
  for (const auto& n : t.g6) {
    G6Vector c;
    for (int i = 0; i < 6; ++i) {
      double s = 0.0;
      for (int j = 0; j < 6; ++j) s += n[i * 6 + j] * g[j];
      c[i] = s;
    }
    if (!satisfies_niggli(c, tol)) continue;
    if (!found || c.values() < best.values()) {
      best = c;
      found = true;
    }
  }
  if (!found) {
    std::ostringstream os;
    os.precision(17);
    os << "no reduced candidate for " << g << " with entries bounded by "
       << entry_bound;
    throw NoCandidate(os.str());
  }
  return best;
}

}  // namespace niggli
