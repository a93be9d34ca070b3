#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "niggli/boundaries.hpp"
#include "niggli/g6.hpp"

namespace niggli {

using IntVector6 = std::array<std::int64_t, 6>;

// A convex polyhedral piece of the closed Niggli cone. The all-acute half is
// cut into six pieces by the order of g4, g5, g6 so that every case region
// (including the qualified halves of 6/7, 9/A, C/D) meets each piece in a
// face; the all-obtuse half is one piece.
struct ConeChamber {
  Branch branch;
  std::string label;
  std::vector<LinearForm> inequalities;  // form.g >= 0
  std::vector<IntVector6> rays;          // primitive extreme rays
  IntVector6 interior_direction;         // sum of the rays
};

// A face of the closed cone, stored as the subset of each chamber's rays
// that it contains.
class ConeFace {
 public:
  ConeFace() = default;
  explicit ConeFace(std::vector<std::uint64_t> masks) : masks_(std::move(masks)) {}

  const std::vector<std::uint64_t>& masks() const { return masks_; }
  bool empty() const;
  bool is_subset_of(const ConeFace& o) const;
  ConeFace operator&(const ConeFace& o) const;
  bool operator==(const ConeFace&) const = default;

 private:
  std::vector<std::uint64_t> masks_;
};

class NiggliCone {
 public:
  static const NiggliCone& instance();

  std::span<const ConeChamber> chambers() const { return chambers_; }
  // Closure of the case's region within the closed cone.
  const ConeFace& case_face(CaseId id) const { return case_faces_[id.index()]; }
  ConeFace face(CaseSet cases) const;
  ConeFace full() const;
  // Every case whose closed region contains the face.
  CaseSet containing_cases(const ConeFace& f) const;
  CaseSet closure(CaseSet cases) const { return containing_cases(face(cases)); }

  // Distinct rays of the face across chambers.
  std::vector<IntVector6> rays(const ConeFace& f) const;
  int dimension(const ConeFace& f) const;
  // True when every ray has g1 = 0, i.e. the face lies in the zero-edge set.
  bool forces_zero_edge(const ConeFace& f) const;
  // Exact projector onto the linear span of the face.
  G6Matrix span_projector(const ConeFace& f) const;
  // Chambers whose part of the face has the face's full dimension.
  std::vector<int> full_dimensional_chambers(const ConeFace& f) const;

 private:
  NiggliCone();
  std::vector<ConeChamber> chambers_;
  std::vector<ConeFace> case_faces_;
};

}  // namespace niggli
