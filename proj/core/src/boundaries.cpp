#include "niggli/boundaries.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <numeric>

namespace niggli {

double evaluate(const LinearForm& form, const G6Vector& g) {
  double s = 0.0;
  for (int i = 0; i < 6; ++i) s += form[i] * g[i];
  return s;
}

double norm(const LinearForm& form) {
  double s = 0.0;
  for (int c : form) s += double(c) * c;
  return std::sqrt(s);
}

std::string to_string(const LinearForm& form) {
  std::string out;
  for (int i = 0; i < 6; ++i) {
    const int c = form[i];
    if (c == 0) continue;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += "g" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

CaseId CaseId::from_number(int n) {
  if (n < 1 || n > 15)
    throw UnknownCase("unknown boundary case " + std::to_string(n) +
                      " (expected 1-9 or A-F)");
  return CaseId(n);
}

CaseId CaseId::parse(char symbol) {
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(symbol)));
  if (c >= '1' && c <= '9') return CaseId(c - '0');
  if (c >= 'A' && c <= 'F') return CaseId(c - 'A' + 10);
  throw UnknownCase(std::string("unknown boundary case '") + symbol +
                    "' (expected 1-9 or A-F)");
}

CaseId CaseId::parse(std::string_view symbol) {
  if (symbol.size() != 1)
    throw UnknownCase("unknown boundary case \"" + std::string(symbol) +
                      "\" (expected 1-9 or A-F)");
  return parse(symbol[0]);
}

char CaseId::symbol() const {
  return n_ < 10 ? static_cast<char>('0' + n_) : static_cast<char>('A' + n_ - 10);
}

CaseSet::CaseSet(std::initializer_list<CaseId> ids) {
  for (CaseId id : ids) insert(id);
}

CaseSet CaseSet::parse(std::string_view text) {
  CaseSet s;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '{' || c == '}') continue;
    s.insert(CaseId::parse(c));
  }
  return s;
}

int CaseSet::size() const { return std::popcount(mask_); }

std::vector<CaseId> CaseSet::members() const {
  std::vector<CaseId> out;
  for (int n = 1; n <= 15; ++n)
    if (mask_ >> (n - 1) & 1u) out.push_back(CaseId::from_number(n));
  return out;
}

bool CaseSet::operator<(const CaseSet& o) const {
  if (size() != o.size()) return size() < o.size();
  return to_string() < o.to_string();
}

std::string CaseSet::to_string() const {
  std::string out;
  for (CaseId id : members()) out += id.symbol();
  return out;
}

std::string_view to_string(BoundaryClass c) {
  switch (c) {
    case BoundaryClass::EqualEdge: return "equal-edge";
    case BoundaryClass::NinetyDegree: return "ninety-degree";
    case BoundaryClass::FaceDiagonal: return "face-diagonal";
    case BoundaryClass::BodyDiagonal: return "body-diagonal";
  }
  return "?";
}

std::string_view to_string(BranchRestriction r) {
  switch (r) {
    case BranchRestriction::Both: return "both";
    case BranchRestriction::AcuteOnly: return "+++";
    case BranchRestriction::ObtuseOnly: return "---";
  }
  return "?";
}

G6Matrix hyperplane_projector(const LinearForm& form) {
  std::int64_t nn = 0;
  for (int c : form) nn += std::int64_t{c} * c;
  if (nn == 0) throw PreconditionError("zero hyperplane normal");
  G6Matrix p = G6Matrix::identity();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      p(i, j) -= Rational(std::int64_t{form[i]} * form[j], nn);
  return p;
}

namespace {

using Rows = BasisTransform::Rows;

// Printed matrices in row notation ('-' stands for the overbar).
namespace printed {
constexpr const char* M1 = "010000/100000/001000/000010/000100/000001";
constexpr const char* M2 = "100000/001000/010000/000100/000001/000010";
constexpr const char* M3 = "100000/010000/001000/000100/0000-10/00000-1";
constexpr const char* M4 = "100000/010000/001000/000-100/000010/00000-1";
constexpr const char* M5 = "100000/010000/001000/000-100/0000-10/000001";
constexpr const char* M6 = "100000/010000/011-100/0-20100/0000-11/00000-1";
constexpr const char* M7 = "100000/010000/011-100/020-100/0000-11/000001";
constexpr const char* M8 = "100000/010000/011100/020100/0000-1-1/00000-1";
constexpr const char* M9 = "100000/010000/1010-10/000-101/-200010/00000-1";
constexpr const char* MA = "100000/010000/1010-10/000-101/2000-10/000001";
constexpr const char* MB = "100000/010000/101010/000-10-1/200010/00000-1";
constexpr const char* MC = "100000/11000-1/001000/000-110/0000-10/-200001";
constexpr const char* MD = "100000/11000-1/001000/000-110/000010/20000-1";
constexpr const char* ME = "100000/110001/001000/000-1-10/0000-10/200001";
constexpr const char* MF = "100000/010000/111111/0-20-10-1/-2000-1-1/000001";

constexpr const char* P1 =
    "(1/2)(1/2)0000/(1/2)(1/2)0000/001000/000100/000010/000001";
constexpr const char* P2 =
    "100000/0(1/2)(1/2)000/0(1/2)(1/2)000/000100/000010/000001";
constexpr const char* P3 = "100000/010000/001000/000000/000010/000001";
constexpr const char* P4 = "100000/010000/001000/000100/000000/000001";
constexpr const char* P5 = "100000/010000/001000/000100/000010/000000";
constexpr const char* P67 =
    "100000/0(1/2)0(1/2)00/001000/0(1/2)0(1/2)00/000010/000001";
constexpr const char* P8 =
    "100000/0(1/2)0(-1/2)00/001000/0(-1/2)0(1/2)00/000010/000001";
constexpr const char* P9A =
    "(1/2)000(1/2)0/010000/001000/000100/(1/2)000(1/2)0/000001";
constexpr const char* PB =
    "(1/2)000(-1/2)0/010000/001000/000100/(-1/2)000(1/2)0/000001";
constexpr const char* PCD =
    "(1/2)0000(1/2)/010000/001000/000100/000010/(1/2)0000(1/2)";
constexpr const char* PE =
    "(1/2)0000(-1/2)/010000/001000/000100/000010/(-1/2)0000(1/2)";
constexpr const char* PF =
    "(4/5)(-1/5)0(-1/5)(-1/5)(-1/5)/(-1/5)(4/5)0(-1/5)(-1/5)(-1/5)/"
    "001000/(-1/5)(-1/5)0(4/5)(-1/5)(-1/5)/(-1/5)(-1/5)0(-1/5)(4/5)(-1/5)/"
    "(-1/5)(-1/5)0(-1/5)(-1/5)(4/5)";
}  // namespace printed

struct Spec {
  int number;
  BoundaryClass cls;
  LinearForm condition;
  std::optional<LinearForm> qualifier;
  BranchRestriction branch;
  Rows e3;
  const char* m;
  const char* p;
  std::vector<LinearForm> primed;
  std::vector<LinearForm> hat;
  std::string_view condition_text;
  std::string_view primed_text;
};

std::vector<BoundaryCase> build_catalog() {
  using BC = BoundaryClass;
  using BR = BranchRestriction;
  const LinearForm g4zero{0, 0, 0, 1, 0, 0};
  const LinearForm g5zero{0, 0, 0, 0, 1, 0};
  const LinearForm g6zero{0, 0, 0, 0, 0, 1};
  const std::vector<LinearForm> orthogonal{g4zero, g5zero, g6zero};

  const std::vector<Spec> specs = {
      {1, BC::EqualEdge, {1, -1, 0, 0, 0, 0}, std::nullopt, BR::Both,
       {{{0, -1, 0}, {-1, 0, 0}, {0, 0, -1}}}, printed::M1, printed::P1,
       {{0, 0, 0, 1, -1, 0}}, {}, "g1 = g2", "g4 = g5"},
      {2, BC::EqualEdge, {0, 1, -1, 0, 0, 0}, std::nullopt, BR::Both,
       {{{-1, 0, 0}, {0, 0, -1}, {0, -1, 0}}}, printed::M2, printed::P2,
       {{0, 0, 0, 0, 1, -1}}, {}, "g2 = g3", "g5 = g6"},
      {3, BC::NinetyDegree, g4zero, std::nullopt, BR::Both,
       {{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}}, printed::M3, printed::P3,
       {g5zero, g6zero}, orthogonal, "g4 = 0", "g5 = g6 = 0"},
      {4, BC::NinetyDegree, g5zero, std::nullopt, BR::Both,
       {{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}}, printed::M4, printed::P4,
       {g4zero, g6zero}, orthogonal, "g5 = 0", "g4 = g6 = 0"},
      {5, BC::NinetyDegree, g6zero, std::nullopt, BR::Both,
       {{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}}, printed::M5, printed::P5,
       {g4zero, g5zero}, orthogonal, "g6 = 0", "g4 = g5 = 0"},
      {6, BC::FaceDiagonal, {0, 1, 0, -1, 0, 0}, LinearForm{0, 0, 0, 0, 1, -1},
       BR::AcuteOnly, {{{1, 0, 0}, {0, -1, 0}, {0, 1, -1}}}, printed::M6,
       printed::P67, {}, {}, "g2 = g4, g5 >= g6", ""},
      {7, BC::FaceDiagonal, {0, 1, 0, -1, 0, 0}, LinearForm{0, 0, 0, 0, -1, 1},
       BR::AcuteOnly, {{{-1, 0, 0}, {0, -1, 0}, {0, -1, 1}}}, printed::M7,
       printed::P67, {{0, 0, 0, 0, 2, -1}}, {}, "g2 = g4, g5 < g6",
       "g5 = g6/2"},
      {8, BC::FaceDiagonal, {0, 1, 0, 1, 0, 0}, std::nullopt, BR::ObtuseOnly,
       {{{1, 0, 0}, {0, -1, 0}, {0, -1, -1}}}, printed::M8, printed::P8, {},
       {}, "g2 = -g4", ""},
      {9, BC::FaceDiagonal, {1, 0, 0, 0, -1, 0}, LinearForm{0, 0, 0, 1, 0, -1},
       BR::AcuteOnly, {{{-1, 0, 0}, {0, 1, 0}, {1, 0, -1}}}, printed::M9,
       printed::P9A, {}, {}, "g1 = g5, g4 >= g6", ""},
      {10, BC::FaceDiagonal, {1, 0, 0, 0, -1, 0}, LinearForm{0, 0, 0, -1, 0, 1},
       BR::AcuteOnly, {{{-1, 0, 0}, {0, -1, 0}, {-1, 0, 1}}}, printed::MA,
       printed::P9A, {{0, 0, 0, 2, 0, -1}}, {}, "g1 = g5, g4 < g6",
       "g4 = g6/2"},
      {11, BC::FaceDiagonal, {1, 0, 0, 0, 1, 0}, std::nullopt, BR::ObtuseOnly,
       {{{-1, 0, 0}, {0, 1, 0}, {-1, 0, -1}}}, printed::MB, printed::PB, {},
       {}, "g1 = -g5", ""},
      {12, BC::FaceDiagonal, {1, 0, 0, 0, 0, -1}, LinearForm{0, 0, 0, 1, -1, 0},
       BR::AcuteOnly, {{{-1, 0, 0}, {1, -1, 0}, {0, 0, 1}}}, printed::MC,
       printed::PCD, {}, {}, "g1 = g6, g4 >= g5", ""},
      {13, BC::FaceDiagonal, {1, 0, 0, 0, 0, -1}, LinearForm{0, 0, 0, -1, 1, 0},
       BR::AcuteOnly, {{{-1, 0, 0}, {-1, 1, 0}, {0, 0, -1}}}, printed::MD,
       printed::PCD, {{0, 0, 0, 2, -1, 0}}, {}, "g1 = g6, g4 < g5",
       "g4 = g5/2"},
      {14, BC::FaceDiagonal, {1, 0, 0, 0, 0, 1}, std::nullopt, BR::ObtuseOnly,
       {{{-1, 0, 0}, {-1, -1, 0}, {0, 0, 1}}}, printed::ME, printed::PE, {},
       {}, "g1 = -g6", ""},
      {15, BC::BodyDiagonal, {1, 1, 0, 1, 1, 1}, std::nullopt, BR::ObtuseOnly,
       {{{-1, 0, 0}, {0, -1, 0}, {1, 1, 1}}}, printed::MF, printed::PF,
       {{1, -1, 0, -1, 1, 0}}, {}, "g1 + g2 + g3 + g4 + g5 + g6 = g3",
       "g1 - g2 - g4 + g5 = 0"},
  };

  std::vector<BoundaryCase> out;
  out.reserve(specs.size());
  for (const Spec& s : specs) {
    out.push_back(BoundaryCase{CaseId::from_number(s.number), s.cls,
                               s.condition, s.qualifier, s.branch,
                               BasisTransform(s.e3), G6Matrix::parse(s.m),
                               G6Matrix::parse(s.p), s.primed, s.hat,
                               s.condition_text, s.primed_text});
  }
  return out;
}

double scale_of(const G6Vector& g) { return std::max(g.max_abs(), 1e-300); }

bool forms_hold(const std::vector<LinearForm>& forms, const G6Vector& g,
                double tol) {
  const double s = scale_of(g);
  return std::all_of(forms.begin(), forms.end(), [&](const LinearForm& f) {
    return std::abs(evaluate(f, g)) <= tol * s * norm(f);
  });
}

}  // namespace

std::span<const BoundaryCase> boundary_cases() {
  static const std::vector<BoundaryCase> catalog = build_catalog();
  return catalog;
}

const BoundaryCase& boundary_case(CaseId id) {
  return boundary_cases()[static_cast<std::size_t>(id.index())];
}

std::span<const FlatPair> flat_pairs() {
  static const std::array<FlatPair, 3> pairs = {
      FlatPair{CaseId::parse('6'), CaseId::parse('7'), {0, 0, 0, 0, 1, -1}},
      FlatPair{CaseId::parse('9'), CaseId::parse('A'), {0, 0, 0, 1, 0, -1}},
      FlatPair{CaseId::parse('C'), CaseId::parse('D'), {0, 0, 0, 1, -1, 0}},
  };
  return pairs;
}

double boundary_distance(CaseId id, const G6Vector& g) {
  const LinearForm& n = boundary_case(id).condition;
  return std::abs(evaluate(n, g)) / norm(n);
}

bool on_boundary(CaseId id, const G6Vector& g, double tol) {
  const BoundaryCase& bc = boundary_case(id);
  const double eps = tol * scale_of(g);
  if (boundary_distance(id, g) > eps) return false;
  if (bc.qualifier && evaluate(*bc.qualifier, g) < -eps * norm(*bc.qualifier))
    return false;
  switch (bc.branch) {
    case BranchRestriction::Both:
      return true;
    case BranchRestriction::AcuteOnly:
      return g[3] >= -eps && g[4] >= -eps && g[5] >= -eps;
    case BranchRestriction::ObtuseOnly:
      return g[3] <= eps && g[4] <= eps && g[5] <= eps;
  }
  return false;
}

G6Vector apply_boundary_transform(CaseId id, const G6Vector& g) {
  return boundary_case(id).transform * g;
}

G6Vector project_to_boundary(CaseId id, const G6Vector& g) {
  return boundary_case(id).projector * g;
}

bool special_subspace_fixed(CaseId id, const G6Vector& g, double tol) {
  const BoundaryCase& bc = boundary_case(id);
  if (bc.primed.empty()) return false;
  return forms_hold({bc.condition}, g, tol) && forms_hold(bc.primed, g, tol);
}

bool in_hat_subspace(CaseId id, const G6Vector& g, double tol) {
  const BoundaryCase& bc = boundary_case(id);
  if (bc.primed.empty()) return false;
  const auto& extra = bc.hat.empty() ? bc.primed : bc.hat;
  return forms_hold({bc.condition}, g, tol) && forms_hold(extra, g, tol);
}

}  // namespace niggli
