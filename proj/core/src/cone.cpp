#include "niggli/cone.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "niggli/exact.hpp"

namespace niggli {

bool ConeFace::empty() const {
  return std::all_of(masks_.begin(), masks_.end(),
                     [](std::uint64_t m) { return m == 0; });
}

bool ConeFace::is_subset_of(const ConeFace& o) const {
  for (std::size_t i = 0; i < masks_.size(); ++i)
    if (masks_[i] & ~o.masks_[i]) return false;
  return true;
}

ConeFace ConeFace::operator&(const ConeFace& o) const {
  std::vector<std::uint64_t> m(masks_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = masks_[i] & o.masks_[i];
  return ConeFace(std::move(m));
}

namespace {

std::int64_t dot(const LinearForm& f, const IntVector6& r) {
  std::int64_t s = 0;
  for (int i = 0; i < 6; ++i) s += std::int64_t{f[i]} * r[i];
  return s;
}

// Bareiss fraction-free determinant.
std::int64_t determinant(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t n = a.size();
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Generator of the null space of five forms when they have rank five.
bool null_direction(const std::vector<LinearForm>& rows, IntVector6& out) {
  for (int skip = 0; skip < 6; ++skip) {
    std::vector<std::vector<std::int64_t>> m(5, std::vector<std::int64_t>(5));
    for (int r = 0; r < 5; ++r)
      for (int c = 0, k = 0; c < 6; ++c)
        if (c != skip) m[r][k++] = rows[r][c];
    const std::int64_t d = determinant(m);
    out[skip] = (skip % 2 == 0) ? d : -d;
  }
  std::int64_t g = 0;
  for (auto x : out) g = std::gcd(g, x);
  if (g == 0) return false;
  for (auto& x : out) x /= g;
  return true;
}

std::vector<IntVector6> extreme_rays(const std::vector<LinearForm>& ineq) {
  const int m = static_cast<int>(ineq.size());
  std::set<IntVector6> found;
  std::vector<int> idx(5);
  // Iterate all 5-subsets of the inequalities.
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + 5, true);
  do {
    std::vector<LinearForm> rows;
    for (int i = 0; i < m; ++i)
      if (pick[i]) rows.push_back(ineq[i]);
    IntVector6 v;
    if (!null_direction(rows, v)) continue;
    for (int sign : {1, -1}) {
      IntVector6 r = v;
      for (auto& x : r) x *= sign;
      if (std::all_of(ineq.begin(), ineq.end(),
                      [&](const LinearForm& f) { return dot(f, r) >= 0; }))
        found.insert(r);
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return {found.begin(), found.end()};
}

std::vector<LinearForm> acute_base() {
  return {{1, 0, 0, 0, 0, 0},  {-1, 1, 0, 0, 0, 0}, {0, -1, 1, 0, 0, 0},
          {0, 0, 0, 1, 0, 0},  {0, 0, 0, 0, 1, 0},  {0, 0, 0, 0, 0, 1},
          {0, 1, 0, -1, 0, 0}, {1, 0, 0, 0, -1, 0}, {1, 0, 0, 0, 0, -1}};
}

std::vector<LinearForm> obtuse_base() {
  return {{1, 0, 0, 0, 0, 0},  {-1, 1, 0, 0, 0, 0}, {0, -1, 1, 0, 0, 0},
          {0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1},
          {0, 1, 0, 1, 0, 0},  {1, 0, 0, 0, 1, 0},  {1, 0, 0, 0, 0, 1},
          {1, 1, 0, 1, 1, 1}};
}

enum class Kind { Equal, AtLeast };

std::uint64_t region_mask(const ConeChamber& ch,
                          const std::vector<std::pair<LinearForm, Kind>>& cs) {
  std::uint64_t mask = ch.rays.size() == 64 ? ~0ull : (1ull << ch.rays.size()) - 1;
  // Each constraint must be sign-definite on the face cut out so far, so
  // that the region stays a face and is generated by the surviving rays.
  for (const auto& [form, kind] : cs) {
    bool pos = false, neg = false;
    for (std::size_t i = 0; i < ch.rays.size(); ++i) {
      if (!(mask >> i & 1ull)) continue;
      const auto v = dot(form, ch.rays[i]);
      pos |= v > 0;
      neg |= v < 0;
    }
    if (pos && neg)
      throw std::logic_error("case region is not a face of chamber " + ch.label);
    for (std::size_t i = 0; i < ch.rays.size(); ++i) {
      const auto v = dot(form, ch.rays[i]);
      const bool keep = kind == Kind::Equal ? v == 0 : v >= 0;
      if (!keep) mask &= ~(1ull << i);
    }
  }
  return mask;
}

}  // namespace

NiggliCone::NiggliCone() {
  const char* names = "456";
  std::array<int, 3> order{0, 1, 2};  // positions of g4, g5, g6 (3, 4, 5)
  do {
    ConeChamber ch;
    ch.branch = Branch::Acute;
    ch.inequalities = acute_base();
    ch.label = "+++ g";
    for (int k = 0; k < 3; ++k) {
      if (k) ch.label += ">=g";
      ch.label += names[order[k]];
    }
    for (int k = 0; k < 2; ++k) {
      LinearForm f{};
      f[3 + order[k]] = 1;
      f[3 + order[k + 1]] = -1;
      ch.inequalities.push_back(f);
    }
    chambers_.push_back(std::move(ch));
  } while (std::next_permutation(order.begin(), order.end()));
  {
    ConeChamber ch;
    ch.branch = Branch::Obtuse;
    ch.label = "---";
    ch.inequalities = obtuse_base();
    chambers_.push_back(std::move(ch));
  }
  for (auto& ch : chambers_) {
    ch.rays = extreme_rays(ch.inequalities);
    if (ch.rays.size() > 64) throw std::logic_error("too many rays in " + ch.label);
    ch.interior_direction = {};
    for (const auto& r : ch.rays)
      for (int i = 0; i < 6; ++i) ch.interior_direction[i] += r[i];
  }

  for (const BoundaryCase& bc : boundary_cases()) {
    std::vector<std::uint64_t> masks;
    for (const auto& ch : chambers_) {
      std::vector<std::pair<LinearForm, Kind>> cs;
      if (bc.branch == BranchRestriction::AcuteOnly && ch.branch != Branch::Acute)
        for (const auto& f : acute_base()) cs.emplace_back(f, Kind::AtLeast);
      if (bc.branch == BranchRestriction::ObtuseOnly && ch.branch != Branch::Obtuse)
        for (const auto& f : obtuse_base()) cs.emplace_back(f, Kind::AtLeast);
      cs.emplace_back(bc.condition, Kind::Equal);
      if (bc.qualifier) cs.emplace_back(*bc.qualifier, Kind::AtLeast);
      masks.push_back(region_mask(ch, cs));
    }
    case_faces_.emplace_back(std::move(masks));
  }
}

const NiggliCone& NiggliCone::instance() {
  static const NiggliCone cone;
  return cone;
}

ConeFace NiggliCone::full() const {
  std::vector<std::uint64_t> m;
  for (const auto& ch : chambers_)
    m.push_back(ch.rays.size() == 64 ? ~0ull : (1ull << ch.rays.size()) - 1);
  return ConeFace(std::move(m));
}

ConeFace NiggliCone::face(CaseSet cases) const {
  ConeFace f = full();
  for (CaseId id : cases.members()) f = f & case_face(id);
  return f;
}

CaseSet NiggliCone::containing_cases(const ConeFace& f) const {
  CaseSet out;
  for (const BoundaryCase& bc : boundary_cases())
    if (f.is_subset_of(case_face(bc.id))) out.insert(bc.id);
  return out;
}

std::vector<IntVector6> NiggliCone::rays(const ConeFace& f) const {
  std::set<IntVector6> out;
  for (std::size_t h = 0; h < chambers_.size(); ++h)
    for (std::size_t i = 0; i < chambers_[h].rays.size(); ++i)
      if (f.masks()[h] >> i & 1ull) out.insert(chambers_[h].rays[i]);
  return {out.begin(), out.end()};
}

int NiggliCone::dimension(const ConeFace& f) const {
  std::vector<RationalVector6> rows;
  for (const auto& r : rays(f)) rows.push_back(to_rational(r));
  return exact_rank(rows);
}

bool NiggliCone::forces_zero_edge(const ConeFace& f) const {
  const auto rs = rays(f);
  return std::all_of(rs.begin(), rs.end(),
                     [](const IntVector6& r) { return r[0] == 0; });
}

G6Matrix NiggliCone::span_projector(const ConeFace& f) const {
  std::vector<RationalVector6> rows;
  for (const auto& r : rays(f)) rows.push_back(to_rational(r));
  return projector_onto_span(rows);
}

std::vector<int> NiggliCone::full_dimensional_chambers(const ConeFace& f) const {
  const int dim = dimension(f);
  std::vector<int> out;
  for (std::size_t h = 0; h < chambers_.size(); ++h) {
    std::vector<RationalVector6> rows;
    for (std::size_t i = 0; i < chambers_[h].rays.size(); ++i)
      if (f.masks()[h] >> i & 1ull) rows.push_back(to_rational(chambers_[h].rays[i]));
    if (!rows.empty() && exact_rank(rows) == dim) out.push_back(static_cast<int>(h));
  }
  return out;
}

}  // namespace niggli
