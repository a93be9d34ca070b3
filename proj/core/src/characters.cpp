#include "niggli/characters.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "niggli/cone.hpp"

namespace niggli {

GeneratorExpression parse_generator_expression(std::string_view text) {
  const auto eq = text.find('=');
  std::string_view head = text.substr(0, eq);
  GeneratorExpression out;
  CaseId last = CaseId::from_number(1);
  bool have_last = false;
  for (std::size_t i = 0; i < head.size(); ++i) {
    const char c = head[i];
    const bool prime_ascii = c == '\'';
    const bool prime_utf8 = static_cast<unsigned char>(c) == 0xE2 && i + 2 < head.size() &&
                            static_cast<unsigned char>(head[i + 1]) == 0x80 &&
                            static_cast<unsigned char>(head[i + 2]) == 0xB2;
    if (prime_ascii || prime_utf8) {
      if (!have_last) throw ParseError("prime without a case in '" + std::string(text) + "'");
      out.cases.erase(last);
      out.primed.insert(last);
      have_last = false;
      if (prime_utf8) i += 2;
      continue;
    }
    if (c == ' ') continue;
    last = CaseId::parse(c);
    have_last = true;
    out.cases.insert(last);
  }
  // A primed symbol such as 2' in "122'" also names case 2 itself.
  for (CaseId id : out.primed.members())
    if (head.find(id.symbol()) != head.rfind(id.symbol())) out.cases.insert(id);
  if (out.cases.empty() && out.primed.empty())
    throw ParseError("empty generator expression");
  return out;
}

namespace {

// clang-format off
const std::vector<CharacterEntry>& table_rows() {
  struct Row {
    const char* roof;
    int character;
    const char* bravais;
    const char* pattern;
    const char* expression;
  };
  static const std::vector<CharacterEntry> rows = [] {
    static const Row printed[] = {
      {"44A", 3, "cP", "(r,r,r,0,0,0)", "12345 = 123̂ = 124̂ = 125̂"},
      {"44C", 1, "cF", "(r,r,r,r,r,r)", "12679ACD"},
      {"44B", 5, "cI", "(r,r,r,-2r/3,-2r/3,-2r/3)", "12F2′F′ = 12F̂"},
      {"45A", 11, "tP", "(r,r,s,0,0,0)", "1345 = 13̂ = 14 = 15̂"},
      {"45B", 21, "tP", "(r,s,s,0,0,0)", "2345 = 23̂ = 24̂ = 25̂"},
      {"45D", 6, "tI", "(r,r,r,-r+s,-r+s,-2s)", "12FF′ = 12F̂"},
      {"45D", 7, "tI", "(r,r,r,-2s,-r+s,-r+s)", "12F2′ = 12F̂"},
      {"45C", 15, "tI", "(r,r,s,-r,-r,0)", "158BF"},
      {"45E", 18, "tI", "(r,s,s,r/2,r,r)", "2ADA′ = 2ÂD"},
      {"48A", 12, "hP", "(r,r,s,0,0,-r)", "134E"},
      {"48B", 22, "hP", "(r,s,s,-s,0,0)", "2458"},
      {"49C", 2, "hR", "(r,r,r,s,s,s)", "121′2′ = 12̂"},
      {"49D", 4, "hR", "(r,r,r,-s,-s,-s)", "121′2′ = 12̂"},
      {"49B", 9, "hR", "(r,r,s,r,r,r)", "1679ACD"},
      {"49E", 24, "hR", "(r,s,s,-s+r/3,-2r/3,-2r/3)", "2F2′F′ = 2F̂"},
      {"50C", 32, "oP", "(r,s,t,0,0,0)", "345 = 3̂ = 4̂ = 5̂"},
      {"50D", 13, "oC", "(r,r,s,0,0,-t)", "134"},
      {"50E", 23, "oC", "(r,s,s,-t,0,0)", "245"},
      {"50A", 36, "oC", "(r,s,t,0,-r,0)", "35B"},
      {"50B", 38, "oC", "(r,s,t,0,0,-r)", "34E"},
      {"50F", 40, "oC", "(r,s,t,-s,0,0)", "458"},
      {"51A", 16, "oF", "(r,r,s,-t,-t,-2r+2t)", "1F1′ = 1F̂"},
      {"51B", 26, "oF", "(r,s,t,r/2,r,r)", "ADA′ = ÂD"},
      {"52A", 8, "oI", "(r,r,r,-s,-t,-2r+s+t)", "12F"},
      {"52B", 19, "oI", "(r,s,s,t,r,r)", "29C = 2AD"},
      {"52C", 42, "oI", "(r,s,t,-s,-r,0)", "58BF"},
      {"53A", 33, "mP", "(r,s,t,0,-u,0)", "35"},
      {"53B", 35, "mP", "(r,s,t,-u,0,0)", "45"},
      {"53C", 34, "mP", "(r,s,t,0,0,-u)", "34"},
      {"55A", 10, "mC", "(r,r,s,t,t,u)", "11′ = 1̂"},
      {"55A", 14, "mC", "(r,r,s,t,t,u)", "11′ = 1̂"},
      {"57B", 17, "mC", "(r,r,s,-t,-u,-2r+t+u)", "1F"},
      {"55B", 20, "mC", "(r,s,s,t,u,u)", "22′ = 2̂"},
      {"55B", 25, "mC", "(r,s,s,t,u,u)", "22′ = 2̂"},
      {"57C", 27, "mC", "(r,s,t,u,r,r)", "9C = AD"},
      {"56A", 28, "mC", "(r,s,t,u,r,2u)", "AA′ = Â"},
      {"56C", 29, "mC", "(r,s,t,u,2u,r)", "DD′ = D̂"},
      {"56B", 30, "mC", "(r,s,t,s,u,2u)", "77′ = 7̂"},
      {"54C", 37, "mC", "(r,s,t,-u,-r,0)", "5B"},
      {"54A", 39, "mC", "(r,s,t,-u,0,-r)", "4E"},
      {"54B", 41, "mC", "(r,s,t,-s,-u,0)", "58"},
      {"57A", 43, "mC", "(r,s,t,-s+u,-r+u,-2u)", "FF′ = F̂"},
    };
    std::vector<CharacterEntry> t;
    for (const Row& r : printed) {
      CharacterEntry e;
      e.roof_symbol = r.roof;
      e.it_character = r.character;
      e.bravais = r.bravais;
      e.subspace_pattern = r.pattern;
      e.generator_expression = r.expression;
      t.push_back(std::move(e));
    }
    for (auto& e : t) {
      e.free_params = parse_pattern(e.subspace_pattern).free_parameters();
      const auto shared = std::count_if(t.begin(), t.end(), [&](const CharacterEntry& o) {
        return o.subspace_pattern == e.subspace_pattern;
      });
      e.signed_parameters = shared == 1;
    }
    return t;
  }();
  return rows;
}
// clang-format on

// Per-entry numeric data derived once.
struct Derived {
  NumericProjector projector = NumericProjector::identity();
  Eigen::Matrix<double, Eigen::Dynamic, 6> solve;  // parameters = solve * q
};

const std::vector<Derived>& derived() {
  static const std::vector<Derived> d = [] {
    std::vector<Derived> out;
    for (const auto& e : table_rows()) {
      Derived x;
      // The exact span of the pattern; the generator projector agrees with
      // it but carries the rounding of repeated squaring.
      const SubspacePattern pat = e.pattern();
      x.projector = NumericProjector::from_exact(pat.projector());
      Eigen::Matrix<double, 6, Eigen::Dynamic> b(6, pat.free_parameters());
      for (int k = 0; k < pat.free_parameters(); ++k)
        for (int i = 0; i < 6; ++i) b(i, k) = boost::rational_cast<double>(pat.columns[k][i]);
      x.solve = (b.transpose() * b).inverse() * b.transpose();
      out.push_back(std::move(x));
    }
    return out;
  }();
  return d;
}

std::size_t index_of(const CharacterEntry& entry) {
  const auto rows = character_table();
  const auto* p = &entry;
  if (p < rows.data() || p >= rows.data() + rows.size())
    throw PreconditionError("character entry is not from character_table()");
  return static_cast<std::size_t>(p - rows.data());
}

bool in_closed_cone(const G6Vector& q, double slack) {
  for (const auto& ch : NiggliCone::instance().chambers()) {
    bool ok = true;
    for (const auto& f : ch.inequalities)
      if (evaluate(f, q) / norm(f) < -slack) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

double evaluate_entry(std::size_t i, const G6Vector& g, G6Vector& q) {
  const CharacterEntry& e = table_rows()[i];
  const Derived& d = derived()[i];
  q = d.projector.apply(g);
  const double scale = std::max(g.max_abs(), 1e-300);
  double dist = (g - q).norm();
  // Rounding noise of the projector; exact members report zero so that ties
  // fall through to the parameter count.
  if (dist <= 1e-12 * scale) dist = 0.0;
  const double slack = dist + 1e-9 * scale;
  if (!in_closed_cone(q, slack)) return kInfeasible;
  if (e.signed_parameters) {
    const Eigen::VectorXd params = d.solve * q.to_eigen();
    for (Eigen::Index k = 0; k < params.size(); ++k)
      if (params[k] < -slack) return kInfeasible;
  }
  return dist;
}

}  // namespace

GeneratorExpression CharacterEntry::generators() const {
  return parse_generator_expression(generator_expression);
}

SubspacePattern CharacterEntry::pattern() const { return parse_pattern(subspace_pattern); }

NumericProjector CharacterEntry::projector() const {
  const GeneratorExpression ge = generators();
  std::vector<NumericProjector> factors;
  if (!ge.cases.empty()) factors.push_back(intersect_projectors(ge.cases));
  for (CaseId id : ge.primed.members())
    for (const LinearForm& f : boundary_case(id).primed)
      factors.push_back(NumericProjector::onto_hyperplane(f));
  return intersect_projectors(std::span<const NumericProjector>(factors));
}

std::span<const CharacterEntry> character_table() { return table_rows(); }

const CharacterEntry& character_by_roof(std::string_view roof) {
  for (const auto& e : table_rows())
    if (e.roof_symbol == roof) return e;
  throw PreconditionError("unknown Roof/Niggli symbol '" + std::string(roof) + "'");
}

const CharacterEntry& character_by_number(int it_character) {
  for (const auto& e : table_rows())
    if (e.it_character == it_character) return e;
  throw PreconditionError("no table row for lattice character " + std::to_string(it_character));
}

double character_distance(const CharacterEntry& entry, const G6Vector& g) {
  G6Vector q;
  return evaluate_entry(index_of(entry), g, q);
}

Classification classify(const G6Vector& g, double tol) {
  const NiggliReport rep = is_niggli_reduced(g, tol);
  if (!rep.satisfied) {
    std::ostringstream os;
    os.precision(17);
    os << g << " is not Niggli reduced; failed:";
    for (auto c : rep.failed_conditions) os << ' ' << describe(c) << ';';
    throw NotReduced(os.str());
  }
  Classification out;
  out.input = g;
  out.tol = tol;
  const auto& rows = table_rows();
  const double scale = std::max(g.max_abs(), 1e-300);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CharacterMatch m;
    m.entry = &rows[i];
    m.distance = evaluate_entry(i, g, m.projected);
    m.match = m.distance <= tol * scale;
    out.ranked.push_back(m);
  }
  std::stable_sort(out.ranked.begin(), out.ranked.end(),
                   [](const CharacterMatch& a, const CharacterMatch& b) {
                     if (a.distance != b.distance) return a.distance < b.distance;
                     return a.entry->free_params < b.entry->free_params;
                   });
  return out;
}

const std::array<LinearForm, 6>& hosoya_forms() {
  static const std::array<LinearForm, 6> forms = {{
      {2, 0, 0, 0, -1, -1},
      {0, 2, 0, -1, 0, -1},
      {0, 0, 2, -1, -1, 0},
      {0, 0, 0, 1, -1, 0},
      {0, 0, 0, 0, 1, -1},
      {0, 0, 0, 2, -1, 0},
  }};
  return forms;
}

std::array<bool, 6> hosoya_conditions(const G6Vector& g, double tol) {
  std::array<bool, 6> out{};
  const double scale = std::max(g.max_abs(), 1e-300);
  for (int i = 0; i < 6; ++i)
    out[i] = std::abs(evaluate(hosoya_forms()[i], g)) <= tol * scale;
  return out;
}

}  // namespace niggli
