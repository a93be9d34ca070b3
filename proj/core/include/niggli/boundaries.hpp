#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "niggli/g6.hpp"
#include "niggli/reduction.hpp"

namespace niggli {

// Integer coefficients (c1..c6) of the linear form c.g.
using LinearForm = std::array<int, 6>;

double evaluate(const LinearForm& form, const G6Vector& g);
double norm(const LinearForm& form);
std::string to_string(const LinearForm& form);  // "g1 - g2"

// One of the fifteen five-dimensional boundary cases, named by the
// hexadecimal digits 1..F.
class CaseId {
 public:
  static CaseId from_number(int n);    // throws UnknownCase unless 1..15
  static CaseId parse(char symbol);    // '1'..'9', 'A'..'F' (either case)
  static CaseId parse(std::string_view symbol);

  constexpr int number() const { return n_; }
  constexpr int index() const { return n_ - 1; }
  char symbol() const;
  auto operator<=>(const CaseId&) const = default;

 private:
  constexpr explicit CaseId(int n) : n_(n) {}
  int n_;
};

// Set of case ids, stored as a 15-bit mask (bit i is case i + 1).
class CaseSet {
 public:
  constexpr CaseSet() = default;
  constexpr explicit CaseSet(std::uint16_t mask) : mask_(mask & 0x7fff) {}
  CaseSet(std::initializer_list<CaseId> ids);
  // Accepts "1679ACD", "1,6,7" or "1 6 7".
  static CaseSet parse(std::string_view text);
  static constexpr CaseSet all() { return CaseSet(0x7fff); }

  bool contains(CaseId id) const { return mask_ >> id.index() & 1u; }
  void insert(CaseId id) { mask_ |= static_cast<std::uint16_t>(1u << id.index()); }
  void erase(CaseId id) { mask_ &= static_cast<std::uint16_t>(~(1u << id.index())); }
  int size() const;
  bool empty() const { return mask_ == 0; }
  std::uint16_t mask() const { return mask_; }
  std::vector<CaseId> members() const;
  bool is_subset_of(CaseSet o) const { return (mask_ & ~o.mask_) == 0; }

  CaseSet operator|(CaseSet o) const { return CaseSet(mask_ | o.mask_); }
  CaseSet operator&(CaseSet o) const { return CaseSet(mask_ & o.mask_); }
  bool operator==(const CaseSet&) const = default;
  // Orders by size, then by the symbol string.
  bool operator<(const CaseSet& o) const;

  std::string to_string() const;  // "1679ACD"; "" for the empty set

 private:
  std::uint16_t mask_ = 0;
};

enum class BoundaryClass { EqualEdge, NinetyDegree, FaceDiagonal, BodyDiagonal };
std::string_view to_string(BoundaryClass c);

enum class BranchRestriction { Both, AcuteOnly, ObtuseOnly };
std::string_view to_string(BranchRestriction r);

struct BoundaryCase {
  CaseId id;
  BoundaryClass boundary_class;
  LinearForm condition;               // hyperplane condition.g = 0
  std::optional<LinearForm> qualifier;  // closed half: qualifier.g >= 0
  BranchRestriction branch;
  BasisTransform e3;                  // right-handed presentation
  G6Matrix transform;                 // M
  G6Matrix projector;                 // P
  // Primed condition(s); empty when the special subspace is empty.
  std::vector<LinearForm> primed;
  // Extra conditions of the hat subspace when it differs from condition +
  // primed (the ninety-degree cases share g4 = g5 = g6 = 0).
  std::vector<LinearForm> hat;
  std::string_view condition_text;
  std::string_view primed_text;
};

std::span<const BoundaryCase> boundary_cases();
const BoundaryCase& boundary_case(CaseId id);

// Flat pairs share a hyperplane and are divided by a second hyperplane.
struct FlatPair {
  CaseId first;
  CaseId second;
  LinearForm division;  // g5 = g6 for 6/7, g4 = g6 for 9/A, g4 = g5 for C/D
};
std::span<const FlatPair> flat_pairs();

// |n.g| with n the unit normal of the case hyperplane.
double boundary_distance(CaseId id, const G6Vector& g);
// Closure semantics: distance and qualifier within tol * max|g_i|, and the
// signs of g4, g5, g6 compatible with the case's branch.
bool on_boundary(CaseId id, const G6Vector& g, double tol = kDefaultTolerance);
G6Vector apply_boundary_transform(CaseId id, const G6Vector& g);
G6Vector project_to_boundary(CaseId id, const G6Vector& g);
// Case condition and primed condition(s) both hold; always false for cases
// with an empty special subspace.
bool special_subspace_fixed(CaseId id, const G6Vector& g,
                            double tol = kDefaultTolerance);
// Case condition and the hat conditions hold (g4 = g5 = g6 = 0 for 3, 4, 5).
bool in_hat_subspace(CaseId id, const G6Vector& g,
                     double tol = kDefaultTolerance);

// Exact projector I - n n^T / (n.n) onto the hyperplane form.g = 0.
G6Matrix hyperplane_projector(const LinearForm& form);

}  // namespace niggli
