#pragma once

#include <array>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "niggli/boundaries.hpp"
#include "niggli/g6.hpp"
#include "niggli/pattern.hpp"
#include "niggli/projector.hpp"

namespace niggli {

// Cases and primed conditions of a generator expression such as "12F2'F'".
struct GeneratorExpression {
  CaseSet cases;
  CaseSet primed;
};

// Reads the first term of a printed expression ("2ADA′ = 2ÂD" reads 2ADA′).
// A case symbol followed by ' or U+2032 is a primed condition.
GeneratorExpression parse_generator_expression(std::string_view text);

struct CharacterEntry {
  std::string roof_symbol;     // "44A"
  int it_character = 0;        // 1..44
  std::string bravais;         // "cP"
  std::string subspace_pattern;
  std::string generator_expression;  // as printed
  int free_params = 0;
  // True when every parameter must be non-negative. False for the two
  // pattern pairs printed for two characters each (10/14, 20/25), which the
  // table does not separate by sign.
  bool signed_parameters = true;

  GeneratorExpression generators() const;
  SubspacePattern pattern() const;
  // intersect_projectors over the cases (flat substitution included) and the
  // hyperplanes of the primed conditions.
  NumericProjector projector() const;
};

// The 42 non-triclinic rows, in printed order.
std::span<const CharacterEntry> character_table();
// Throws PreconditionError for an unknown Roof symbol; returns the first row
// for symbols printed twice.
const CharacterEntry& character_by_roof(std::string_view roof);
const CharacterEntry& character_by_number(int it_character);

inline constexpr double kInfeasible = std::numeric_limits<double>::infinity();

// |g - P g| for the entry's projector, or kInfeasible when the projected
// point leaves the closed Niggli cone or needs a negative parameter.
double character_distance(const CharacterEntry& entry, const G6Vector& g);

struct CharacterMatch {
  const CharacterEntry* entry = nullptr;
  double distance = kInfeasible;
  G6Vector projected;
  bool match = false;  // distance <= tol * max|g_i|
};

struct Classification {
  G6Vector input;
  double tol = kDefaultTolerance;
  std::vector<CharacterMatch> ranked;  // by distance, free params, table order
};

// Throws NotReduced (naming the failed condition) when g is not Niggli
// reduced, InvalidCell when it is not a cell.
Classification classify(const G6Vector& g, double tol = 1e-6);

// 2g1 = g5+g6, 2g2 = g4+g6, 2g3 = g4+g5, g4 = g5, g5 = g6, g4 = g5/2.
std::array<bool, 6> hosoya_conditions(const G6Vector& g, double tol = kDefaultTolerance);
const std::array<LinearForm, 6>& hosoya_forms();

}  // namespace niggli
