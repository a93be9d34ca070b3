#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "niggli/boundaries.hpp"
#include "niggli/characters.hpp"
#include "niggli/cone.hpp"
#include "niggli/g6.hpp"
#include "niggli/montecarlo.hpp"
#include "niggli/polytope_lab.hpp"
#include "niggli/projector.hpp"
#include "niggli/reduction.hpp"
#include "svg_plot.hpp"

namespace niggli::cli {

namespace {

using json = nlohmann::ordered_json;

// Command-line misuse that CLI11 itself cannot see (bad case lists, empty
// input, unreadable files).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  double tol = kDefaultTolerance;
  bool json = false;
  std::optional<unsigned long long> seed;
  int threads = 0;
};

struct InputOptions {
  std::vector<std::string> values;
  std::string file;
  bool cell = false;
};

struct Seed {
  unsigned long long value;
  std::string source;
};

Seed resolve_seed(const Common& c) {
  if (c.seed) return {*c.seed, "--seed"};
  if (const char* env = std::getenv("NIGGLI_SEED"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw UsageError(std::string("NIGGLI_SEED is not an integer: ") + env);
    return {v, "NIGGLI_SEED"};
  }
  return {kDefaultSeed, "default"};
}

json to_json(const G6Vector& g) {
  json a = json::array();
  for (double x : g.values()) a.push_back(x);
  return a;
}

json to_json(const BasisTransform& t) {
  json a = json::array();
  for (const auto& row : t.rows()) a.push_back(json(row));
  return a;
}

std::string case_label(const G6Matrix& m) {
  for (const auto& bc : boundary_cases())
    if (bc.transform == m) return std::string(1, bc.id.symbol());
  return "";
}

CaseSet parse_cases(const std::string& text) {
  try {
    const CaseSet s = CaseSet::parse(text);
    if (s.empty()) throw UsageError("empty case list");
    return s;
  } catch (const UnknownCase& e) {
    throw UsageError(e.what());
  }
}

G6Vector parse_input(const std::string& text, bool cell) {
  const G6Vector raw = G6Vector::parse(text);
  if (!cell) return raw;
  CellParams p{raw[0], raw[1], raw[2], raw[3], raw[4], raw[5]};
  return cell_to_g6(p);
}

std::vector<G6Vector> read_inputs(const InputOptions& io, std::istream& in) {
  std::vector<G6Vector> out;
  if (!io.values.empty()) {
    std::string joined;
    for (const auto& v : io.values) joined += v + " ";
    out.push_back(parse_input(joined, io.cell));
    return out;
  }
  std::ifstream file;
  std::istream* src = &in;
  if (!io.file.empty()) {
    file.open(io.file);
    if (!file) throw UsageError("cannot read " + io.file);
    src = &file;
  }
  for (std::string line; std::getline(*src, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse_input(line, io.cell));
  }
  if (out.empty()) throw UsageError("no input vectors");
  return out;
}

void add_input_options(CLI::App* sub, InputOptions& io) {
  sub->add_option("values", io.values,
                  "G6 vector \"g1 g2 g3 g4 g5 g6\" (or a b c alpha beta gamma with --cell)");
  sub->add_option("--file", io.file, "Read one vector per line from a file");
  sub->add_flag("--cell", io.cell, "Input is a b c alpha beta gamma in degrees");
}

void add_common(CLI::App* sub, Common& c, bool randomized) {
  sub->add_option("--tol", c.tol, "Relative tolerance")->check(CLI::PositiveNumber);
  sub->add_flag("--json", c.json, "Machine-readable output");
  if (randomized) {
    sub->add_option("--seed", c.seed, "Random seed (overrides NIGGLI_SEED)");
    sub->add_option("--threads", c.threads, "Worker threads, 0 for all cores")
        ->check(CLI::NonNegativeNumber);
  }
}

// ---- reduce ---------------------------------------------------------------

int cmd_reduce(const Common& c, const InputOptions& io, std::istream& in, std::ostream& out) {
  for (const G6Vector& g : read_inputs(io, in)) {
    const ReductionResult r = niggli_reduce(g, c.tol);
    json j;
    j["input_g6"] = to_json(g);
    j["reduced_g6"] = to_json(r.reduced);
    j["basis_transform"] = to_json(r.basis_transform);
    j["g6_transform"] = r.g6_transform.to_string();
    json steps = json::array();
    for (auto s : r.steps) steps.push_back(std::string(to_string(s)));
    j["steps"] = steps;
    j["iterations"] = r.iterations;
    j["branch"] = std::string(to_string(branch_of(r.reduced, c.tol)));
    out << j.dump() << "\n";
  }
  return kExitOk;
}

// ---- boundaries -----------------------------------------------------------

int cmd_boundaries(const Common& c, const InputOptions& io, std::istream& in,
                   std::ostream& out) {
  for (const G6Vector& g : read_inputs(io, in)) {
    if (c.json) {
      json rows = json::array();
      for (const auto& bc : boundary_cases()) {
        json r;
        r["case"] = std::string(1, bc.id.symbol());
        r["condition"] = std::string(bc.condition_text);
        r["distance"] = boundary_distance(bc.id, g);
        r["on_boundary"] = on_boundary(bc.id, g, c.tol);
        r["special_subspace"] = special_subspace_fixed(bc.id, g, c.tol);
        r["hat_subspace"] = in_hat_subspace(bc.id, g, c.tol);
        rows.push_back(r);
      }
      out << json{{"g6", to_json(g)}, {"tol", c.tol}, {"cases", rows}}.dump() << "\n";
      continue;
    }
    out << "g6 " << g << "  tol " << c.tol << "\n";
    out << "case  distance        on  special  hat  condition\n";
    for (const auto& bc : boundary_cases()) {
      out << "  " << bc.id.symbol() << "   " << std::setw(14) << std::left
          << boundary_distance(bc.id, g) << std::right << "  "
          << (on_boundary(bc.id, g, c.tol) ? "yes" : "no ") << " "
          << (special_subspace_fixed(bc.id, g, c.tol) ? "yes    " : "no     ") << "  "
          << (in_hat_subspace(bc.id, g, c.tol) ? "yes" : "no ") << "  " << bc.condition_text
          << "\n";
    }
  }
  return kExitOk;
}

// ---- classify -------------------------------------------------------------

int cmd_classify(const Common& c, const InputOptions& io, int top, std::istream& in,
                 std::ostream& out) {
  for (const G6Vector& g : read_inputs(io, in)) {
    const G6Vector reduced = niggli_reduce(g, c.tol).reduced;
    const Classification cl = classify(reduced, c.tol);
    const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(top), cl.ranked.size());
    if (c.json) {
      json rows = json::array();
      for (std::size_t i = 0; i < n; ++i) {
        const auto& m = cl.ranked[i];
        json r;
        r["roof_symbol"] = m.entry->roof_symbol;
        r["it_character"] = m.entry->it_character;
        r["bravais"] = m.entry->bravais;
        r["pattern"] = m.entry->subspace_pattern;
        r["distance"] = std::isfinite(m.distance) ? json(m.distance) : json(nullptr);
        r["match"] = m.match;
        r["projected_g6"] = to_json(m.projected);
        rows.push_back(r);
      }
      out << json{{"input_g6", to_json(g)}, {"reduced_g6", to_json(reduced)},
                  {"tol", c.tol}, {"candidates", rows}}
                 .dump()
          << "\n";
      continue;
    }
    out << "reduced " << reduced << "\n";
    out << "roof  IT  type  distance      match  pattern\n";
    for (std::size_t i = 0; i < n; ++i) {
      const auto& m = cl.ranked[i];
      std::ostringstream d;
      if (std::isfinite(m.distance)) d << m.distance;
      else d << "infeasible";
      out << std::left << std::setw(6) << m.entry->roof_symbol << std::setw(4)
          << m.entry->it_character << std::setw(6) << m.entry->bravais << std::setw(14)
          << d.str() << std::setw(7) << (m.match ? "yes" : "no") << m.entry->subspace_pattern
          << std::right << "\n";
    }
    if (n > 0 && !cl.ranked.front().match) out << "no match within tolerance: triclinic\n";
  }
  return kExitOk;
}

// ---- census ---------------------------------------------------------------

struct CensusOptions {
  std::uint64_t trials = 1000000;
  double perturbation = 1e-4;
  double edge_min = 1.0;
  double edge_max = 100.0;
  std::string boundary;
  std::optional<double> step_back;
  int top = 30;
  std::string plot;
};

int cmd_census(const Common& c, const CensusOptions& o, std::ostream& out) {
  const Seed seed = resolve_seed(c);
  ProbeConfig pc;
  pc.seed = seed.value;
  pc.trials = o.trials;
  pc.perturbation_scale = o.perturbation;
  pc.cells.edge_min = o.edge_min;
  pc.cells.edge_max = o.edge_max;
  pc.step_back = o.step_back;
  pc.tol = c.tol;
  pc.threads = c.threads;
  if (!o.boundary.empty()) pc.boundary_projector = intersect_projectors(parse_cases(o.boundary));
  const MatrixCensus census = pc.boundary_projector ? probe_boundary(pc) : probe_5d(pc);
  const auto sorted = census.sorted();

  std::optional<ZScoreReport> z;
  std::string z_error;
  try {
    z = zscore_analysis(census);
  } catch (const DomainError& e) {
    z_error = e.what();
  } catch (const PreconditionError& e) {
    z_error = e.what();
  }
  std::map<std::size_t, const ZScoreEntry*> z_at;
  if (z)
    for (const auto& e : z->retained) z_at[e.index] = &e;

  const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(o.top), sorted.size());
  if (c.json) {
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json r;
      r["matrix"] = sorted[i].first.to_string();
      r["count"] = sorted[i].second;
      r["case"] = case_label(sorted[i].first);
      if (auto it = z_at.find(i); it != z_at.end()) r["z"] = it->second->z;
      rows.push_back(r);
    }
    json j;
    j["seed"] = seed.value;
    j["seed_source"] = seed.source;
    j["trials"] = census.total_trials;
    j["counted"] = census.counted();
    j["identity_discards"] = census.identity_discards;
    j["invalid_discards"] = census.invalid_discards;
    j["distinct_matrices"] = census.entries.size();
    if (z) {
      j["zscore"] = {{"cutoff_index", z->cutoff_index}, {"mean", z->mean}, {"sigma", z->sigma}};
    } else {
      j["zscore"] = {{"error", z_error}};
    }
    j["matrices"] = rows;
    out << j.dump() << "\n";
  } else {
    out << "# seed " << seed.value << " (" << seed.source << ")\n";
    out << "# trials " << census.total_trials << ", counted " << census.counted()
        << ", identity discards " << census.identity_discards << ", invalid "
        << census.invalid_discards << ", distinct matrices " << census.entries.size() << "\n";
    if (z)
      out << "# head of " << z->cutoff_index << " above the first >10x drop, mean " << z->mean
          << ", sigma " << z->sigma << "\n";
    else
      out << "# z-scores unavailable: " << z_error << "\n";
    out << "rank  count      case  z        matrix\n";
    for (std::size_t i = 0; i < n; ++i) {
      std::ostringstream zs;
      if (auto it = z_at.find(i); it != z_at.end())
        zs << std::fixed << std::setprecision(2) << it->second->z
           << (it->second->flagged ? "*" : "");
      else
        zs << "-";
      const std::string label = case_label(sorted[i].first);
      out << std::left << std::setw(6) << i + 1 << std::setw(11) << sorted[i].second
          << std::setw(6) << (label.empty() ? "-" : label) << std::setw(9) << zs.str()
          << sorted[i].first.to_string() << std::right << "\n";
    }
  }
  if (!o.plot.empty()) {
    std::ofstream svg(o.plot);
    if (!svg) throw UsageError("cannot write " + o.plot);
    std::vector<Bar> bars;
    for (std::size_t i = 0; i < n; ++i) {
      const std::string label = case_label(sorted[i].first);
      bars.push_back({label.empty() ? "#" + std::to_string(i + 1) : "M" + label,
                      static_cast<double>(sorted[i].second)});
    }
    write_log_bar_chart(svg, bars,
                        "Reduction matrix populations, " + std::to_string(census.total_trials) +
                            " trials, seed " + std::to_string(seed.value));
  }
  return kExitOk;
}

// ---- enumerate ------------------------------------------------------------

struct EnumerateCliOptions {
  std::uint64_t budget = 10000;
  int max_size = 8;
  std::string golden;
  std::string write;
};

json catalog_json(const EnumerationSummary& s) {
  json census = json::object();
  for (int d = 5; d >= 1; --d) census[std::to_string(d)] = s.census.count(d) ? s.census.at(d) : 0;
  json polys = json::array();
  for (const auto& p : s.polytopes) {
    json eq = json::array();
    for (const auto& e : p.equivalents) eq.push_back(e.to_string());
    polys.push_back({{"generators", p.generators.to_string()},
                     {"dimension", p.dimension},
                     {"pattern", p.subspace_pattern},
                     {"equivalents", eq}});
  }
  return {{"total", s.polytopes.size()}, {"census", census}, {"polytopes", polys}};
}

int cmd_enumerate(const Common& c, const EnumerateCliOptions& o, std::ostream& out,
                  std::ostream& err) {
  const Seed seed = resolve_seed(c);
  EnumerateOptions eo;
  eo.probe_budget = o.budget;
  eo.tol = c.tol;
  eo.seed = seed.value;
  eo.threads = c.threads;
  eo.max_subset_size = o.max_size;
  const EnumerationSummary s = enumerate_polytopes(eo);
  const json catalog = catalog_json(s);

  if (c.json) {
    out << json{{"seed", seed.value}, {"seed_source", seed.source}}.dump() << "\n";
    for (const auto& p : s.polytopes) {
      json eq = json::array();
      for (const auto& e : p.equivalents) eq.push_back(e.to_string());
      json mats = json::array();
      for (const auto& [m, n] : p.witness_matrices)
        mats.push_back({{"matrix", m.to_string()}, {"count", n}});
      out << json{{"generators", p.generators.to_string()},
                  {"dimension", p.dimension},
                  {"pattern", p.subspace_pattern},
                  {"hyperplane_dimension", p.hyperplane_dimension},
                  {"equivalents", eq},
                  {"presentations", p.presentations},
                  {"populated", p.populated},
                  {"probes", p.probes},
                  {"reduced_neighbors", p.reduced_neighbors},
                  {"witness_matrices", mats}}
                 .dump()
          << "\n";
    }
    out << json{{"summary",
                 {{"total", s.polytopes.size()},
                  {"census", catalog["census"]},
                  {"subsets_examined", s.subsets_examined},
                  {"nondegenerate_subsets", s.nondegenerate_subsets},
                  {"rejected_empty", s.rejected_empty},
                  {"rejected_zero_edge", s.rejected_zero_edge},
                  {"rejected_unpopulated", s.rejected_unpopulated}}}}
                 .dump()
          << "\n";
  } else {
    out << "# seed " << seed.value << " (" << seed.source << "), probe budget " << o.budget
        << "\n";
    out << "dim  generators  pattern                      witnesses  equivalents\n";
    for (const auto& p : s.polytopes) {
      std::string eq;
      for (const auto& e : p.equivalents) eq += (eq.empty() ? "" : " ") + e.to_string();
      out << std::left << std::setw(5) << p.dimension << std::setw(12)
          << p.generators.to_string() << std::setw(29) << p.subspace_pattern << std::setw(11)
          << p.witness_matrices.size() << eq << std::right << "\n";
    }
    out << "# census";
    for (int d = 5; d >= 1; --d) out << " " << d << ":" << catalog["census"][std::to_string(d)];
    out << "  total " << s.polytopes.size() << "\n";
    out << "# subsets " << s.subsets_examined << ", rejected classes: empty " << s.rejected_empty
        << ", zero edge " << s.rejected_zero_edge << ", unpopulated " << s.rejected_unpopulated
        << "\n";
  }
  for (const auto& w : s.warnings) err << "warning: " << w << "\n";

  if (!o.write.empty()) {
    std::ofstream f(o.write);
    if (!f) throw UsageError("cannot write " + o.write);
    f << catalog.dump(1) << "\n";
  }
  if (!o.golden.empty()) {
    std::ifstream f(o.golden);
    if (!f) throw UsageError("cannot read " + o.golden);
    json golden;
    try {
      golden = json::parse(f);
    } catch (const json::parse_error& e) {
      throw UsageError(o.golden + ": " + e.what());
    }
    if (golden != catalog) {
      err << "catalog differs from " << o.golden << "\n";
      if (golden.value("census", json()) != catalog["census"])
        err << "  census " << golden.value("census", json()).dump() << " expected, got "
            << catalog["census"].dump() << "\n";
      return kExitDomain;
    }
    err << "catalog matches " << o.golden << "\n";
  }
  return kExitOk;
}

// ---- project --------------------------------------------------------------

int cmd_project(const Common& c, const std::string& cases_text, std::ostream& out) {
  const CaseSet cases = parse_cases(cases_text);
  const NumericProjector p = intersect_projectors(cases);
  const int dim = projector_dimension(p);
  const auto face = classify_generators(cases);
  if (c.json) {
    json rows = json::array();
    for (int i = 0; i < 6; ++i) {
      json r = json::array();
      for (int k = 0; k < 6; ++k) r.push_back(p.matrix()(i, k));
      rows.push_back(r);
    }
    json j;
    j["cases"] = cases.to_string();
    j["projector"] = rows;
    j["dimension"] = dim;
    if (face) {
      j["polytope"] = {{"generators", face->generators.to_string()},
                       {"dimension", face->dimension},
                       {"pattern", face->subspace_pattern}};
    } else {
      j["polytope"] = nullptr;
    }
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << "projector for " << cases.to_string() << " (dimension " << dim << ")\n";
  out << std::fixed << std::setprecision(6);
  for (int i = 0; i < 6; ++i) {
    for (int k = 0; k < 6; ++k) out << std::setw(11) << p.matrix()(i, k);
    out << "\n";
  }
  out.unsetf(std::ios::floatfield);
  if (face)
    out << "polytope " << face->generators.to_string() << ", dimension " << face->dimension
        << ", subspace " << face->subspace_pattern << "\n";
  else
    out << "no admissible polytope: the intersection is empty or forces a zero edge\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Niggli reduction geometry in G6"};
  app.name(args.empty() ? "niggli" : args.front());
  app.require_subcommand(1);

  Common common;
  InputOptions io;
  int top = 5;
  CensusOptions co;
  EnumerateCliOptions eo;
  std::string cases;

  auto* reduce = app.add_subcommand("reduce", "Niggli-reduce cells");
  add_common(reduce, common, false);
  add_input_options(reduce, io);

  auto* bounds = app.add_subcommand("boundaries", "Distances to the fifteen boundary cases");
  add_common(bounds, common, false);
  add_input_options(bounds, io);

  auto* cls = app.add_subcommand("classify", "Rank lattice characters for a cell");
  add_common(cls, common, false);
  add_input_options(cls, io);
  cls->add_option("--top", top, "Candidates to print")->check(CLI::PositiveNumber);

  auto* census = app.add_subcommand("census", "Monte Carlo census of reduction matrices");
  add_common(census, common, true);
  census->add_option("--trials", co.trials, "Number of trials")->check(CLI::PositiveNumber);
  census->add_option("--perturbation", co.perturbation, "Perturbation scale relative to |g|")
      ->check(CLI::PositiveNumber);
  census->add_option("--edge-min", co.edge_min, "Smallest random edge")->check(CLI::PositiveNumber);
  census->add_option("--edge-max", co.edge_max, "Largest random edge")->check(CLI::PositiveNumber);
  census->add_option("--boundary", co.boundary, "Probe the intersection of these cases, e.g. 1,2");
  census->add_option("--step-back", co.step_back,
                     "Step into the cone by this fraction of the perturbation, then perturb in 6-D")
      ->check(CLI::NonNegativeNumber);
  census->add_option("--top", co.top, "Rows to print")->check(CLI::PositiveNumber);
  census->add_option("--plot", co.plot, "Write a log-scale population chart (SVG)");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate the boundary polytope catalog");
  add_common(enumerate, common, true);
  enumerate->add_option("--budget", eo.budget, "Witness probes per class (0 skips probing)");
  enumerate->add_option("--max-size", eo.max_size, "Largest generator subset")
      ->check(CLI::Range(1, 15));
  enumerate->add_option("--golden", eo.golden, "Compare with a catalog file; exit 1 on mismatch");
  enumerate->add_option("--write", eo.write, "Write the catalog file");

  auto* project = app.add_subcommand("project", "Intersection projector of boundary cases");
  add_common(project, common, false);
  project->add_option("--cases", cases, "Case list, e.g. 1,2,F")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    for (auto* sub : app.get_subcommands())
      if (sub->parsed()) {
        err << sub->help();
        return kExitUsage;
      }
    err << app.help();
    return kExitUsage;
  }

  try {
    if (reduce->parsed()) return cmd_reduce(common, io, in, out);
    if (bounds->parsed()) return cmd_boundaries(common, io, in, out);
    if (cls->parsed()) return cmd_classify(common, io, top, in, out);
    if (census->parsed()) return cmd_census(common, co, out);
    if (enumerate->parsed()) return cmd_enumerate(common, eo, out, err);
    if (project->parsed()) return cmd_project(common, cases, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  try {
    return run(args, std::cin, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace niggli::cli
