#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "seplat/error.hpp"
#include "seplat/graph.hpp"
#include "seplat/io.hpp"
#include "seplat/lattice.hpp"
#include "seplat/markov.hpp"
#include "seplat/separation.hpp"
#include "seplat/sweep.hpp"

namespace seplat::cli {
namespace {

using nlohmann::json;

// Raised when a command detects that the library broke one of its own
// guarantees (e.g. a minimal separator that does not separate).
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_literal(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t plus = text.find('+', start);
    out.push_back(text.substr(start, plus - start));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  for (const auto& s : out) {
    if (s.empty()) throw Error(ErrorCode::Parse, "empty element in set literal '" + text + "'");
  }
  return out;
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : "+") + l;
  return out.empty() ? "{}" : out;
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(6) << v;
  return s.str();
}

struct Common {
  std::string graph;
  std::string format = "text";
  bool json() const { return format == "json"; }
};

io::GraphDocument load(const std::string& path) { return io::graph_from_json(io::read_file(path)); }

ColliderConvention parse_convention(const std::string& s) {
  if (s == "inclusive") return ColliderConvention::Inclusive;
  if (s == "strict") return ColliderConvention::Strict;
  throw Error(ErrorCode::Parse, "unknown convention '" + s + "'");
}

std::optional<lattice::Window> window_from(const std::vector<std::optional<int>>& bounds) {
  if (std::ranges::none_of(bounds, [](const auto& b) { return b.has_value(); })) return std::nullopt;
  if (!std::ranges::all_of(bounds, [](const auto& b) { return b.has_value(); })) {
    throw Error(ErrorCode::InvalidQuery, "all four window bounds are required");
  }
  return lattice::Window{*bounds[0], *bounds[1], *bounds[2], *bounds[3]};
}

// lattice gen ---------------------------------------------------------------

struct LatticeGen {
  std::string kind;
  std::optional<int> imin, imax, jmin, jmax, kmin, kmax, mmin, mmax;
  std::string out;
};

int lattice_gen(const LatticeGen& o, std::ostream& out) {
  const lattice::CellKind kind = lattice::parse_kind(o.kind);
  const auto diamond = window_from({o.imin, o.imax, o.jmin, o.jmax});
  const auto box = window_from({o.kmin, o.kmax, o.mmin, o.mmax});
  const auto& w = kind == lattice::CellKind::Diamond ? diamond : box;
  const auto& other = kind == lattice::CellKind::Diamond ? box : diamond;
  if (!w || other) {
    throw Error(ErrorCode::InvalidQuery, kind == lattice::CellKind::Diamond
                                             ? "diamond windows take --imin --imax --jmin --jmax"
                                             : "box windows take --kmin --kmax --mmin --mmax");
  }
  if (!w->valid()) throw Error(ErrorCode::InvalidQuery, "empty window");
  const io::GraphDocument doc = io::lattice_document(kind, *w);
  const std::string text = io::to_json(doc);
  if (o.out.empty()) {
    out << text;
  } else {
    io::write_file(o.out, text);
    out << "vertices " << doc.graph.size() << "\ndirected " << doc.graph.directed_count()
        << "\nbidirected " << doc.graph.bidirected_count() << "\n";
  }
  return kTrue;
}

// sep check / sep minimal ---------------------------------------------------

struct SepCheck {
  std::string a, b, c;
  bool oracle = false;
  std::string convention = "inclusive";
};

int sep_check(const Common& common, const SepCheck& o, std::ostream& out) {
  const MixedGraph g = load(common.graph).graph;
  const SeparationQuery q{g.index_of(o.a), g.index_of(o.b), g.to_set(split_literal(o.c)),
                          parse_convention(o.convention)};
  const SeparationVerdict v = o.oracle ? is_separated_oracle(g, q) : is_separated(g, q);
  const std::string witness = v.witness ? format_path(g, *v.witness) : "";
  if (common.json()) {
    json j{{"separated", v.separated}};
    j["witness"] = v.witness ? json(witness) : json(nullptr);
    out << j.dump() << "\n";
  } else {
    out << (v.separated ? "separated" : "connected") << "\n";
    if (v.witness) out << "witness: " << witness << "\n";
  }
  return v.separated ? kTrue : kFalse;
}

struct SepMinimal {
  std::string a, b;
};

int sep_minimal(const Common& common, const SepMinimal& o, std::ostream& out) {
  const MixedGraph g = load(common.graph).graph;
  const VertexIndex a = g.index_of(o.a), b = g.index_of(o.b);
  const auto s = minimal_separator(g, a, b);
  if (!s) {
    if (common.json()) {
      out << json{{"minimal", nullptr}}.dump() << "\n";
    } else {
      out << "no separating set within the ancestors of " << o.a << " and " << o.b << "\n";
    }
    return kFalse;
  }
  if (!is_separated(g, {a, b, *s}).separated) throw InternalError("minimal set does not separate");
  json removals = json::object();
  for (VertexIndex v : *s) {
    VertexSet smaller = *s;
    smaller.erase(v);
    const auto verdict = is_separated(g, {a, b, smaller});
    if (verdict.separated) throw InternalError("set is not minimal at " + g.label(v));
    removals[g.label(v)] = format_path(g, *verdict.witness);
  }
  const std::string literal = join_labels(g.labels_of(*s));
  if (common.json()) {
    out << json{{"minimal", g.labels_of(*s)}, {"separates", true}, {"removals", removals}}.dump()
        << "\n";
  } else {
    out << "minimal: " << literal << "\nseparates: yes\n";
    for (const auto& [label, path] : removals.items()) {
      out << "without " << label << ": connected via " << path.get<std::string>() << "\n";
    }
  }
  return kTrue;
}

// shield check --------------------------------------------------------------

struct ShieldCheck {
  std::string a, b, region;
  std::string variant = "l3c";
};

int shield_check(const Common& common, const ShieldCheck& o, std::ostream& out) {
  const io::GraphDocument doc = load(common.graph);
  const lattice::CellKind kind = doc.cell_kind();
  const lattice::Cell a = lattice::Cell::parse(o.a), b = lattice::Cell::parse(o.b);
  const lattice::Region region = lattice::Region::parse(o.region);
  if (a.kind != kind || b.kind != kind || region.kind() != kind) {
    throw Error(ErrorCode::KindMismatch, "cells must match the graph's lattice kind");
  }
  const lattice::ShieldVerdict v =
      lattice::shielder_off(region, a, b, lattice::parse_variant(o.variant), *doc.window);
  const MixedGraph& g = doc.graph;
  const VertexSet cond = lattice::region_to_vertexset(g, region);
  const SeparationVerdict sep = is_separated(g, {g.index_of(a.label()), g.index_of(b.label()), cond});
  if (common.json()) {
    json j{{"l1", v.l1}, {"l2", v.l2}, {"l3", v.l3}, {"variant", lattice::to_string(v.variant)},
           {"shielder_off", v.shielder_off}, {"separated", sep.separated}};
    j["witness"] = sep.witness ? json(format_path(g, *sep.witness)) : json(nullptr);
    out << j.dump() << "\n";
  } else {
    out << "l1 " << v.l1 << "\nl2 " << v.l2 << "\nl3 " << v.l3 << " ("
        << lattice::to_string(v.variant) << ")\nshielder_off " << v.shielder_off << "\n"
        << (sep.separated ? "separated" : "connected") << "\n";
    if (sep.witness) out << "witness: " << format_path(g, *sep.witness) << "\n";
  }
  return v.shielder_off ? kTrue : kFalse;
}

// prop1 verify --------------------------------------------------------------

struct Prop1 {
  std::string a, b;
  std::string variant = "l3c";
  std::optional<std::size_t> max_cells;
  std::size_t cap = lattice::kDefaultCandidateCap;
  std::string report;
};

int prop1_verify(const Common& common, const Prop1& o, std::ostream& out) {
  const io::GraphDocument doc = load(common.graph);
  const lattice::CellKind kind = doc.cell_kind();
  const lattice::Cell a = lattice::Cell::parse(o.a), b = lattice::Cell::parse(o.b);
  if (a.kind != kind || b.kind != kind) throw Error(ErrorCode::KindMismatch, "probe cells");
  const std::size_t max_cells =
      o.max_cells.value_or(lattice::geo_ancestors(a, *doc.window).size());
  const lattice::SweepReport r = lattice::prop1_sweep(
      doc.graph, a, b, *doc.window, lattice::parse_variant(o.variant), max_cells, o.cap);
  if (!o.report.empty()) io::write_file(o.report, lattice::sweep_csv(doc.graph, r));

  std::vector<json> counter;
  for (std::size_t idx : r.counterexamples) {
    counter.push_back({{"region", r.rows[idx].region.literal()},
                       {"witness", format_path(doc.graph, *r.rows[idx].verdict.witness)}});
  }
  if (common.json()) {
    out << json{{"candidates", r.rows.size()},
                {"shielder_off", r.shielder_off_count},
                {"counterexamples", counter},
                {"divergences", r.divergences.size()}}
               .dump()
        << "\n";
  } else {
    out << "candidates " << r.rows.size() << "\nshielder_off " << r.shielder_off_count
        << "\ncounterexamples " << counter.size() << "\ndivergences " << r.divergences.size()
        << "\n";
    for (const auto& c : counter) {
      out << "counterexample " << c["region"].get<std::string>() << " via "
          << c["witness"].get<std::string>() << "\n";
    }
  }
  return counter.empty() ? kTrue : kFalse;
}

// mc ------------------------------------------------------------------------

struct Mc {
  std::string a, b;
  std::optional<std::string> c;
  std::size_t trials = 200;
  std::size_t attempts = 500;
  std::size_t queries = 20;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  double threshold = 0.01;
  std::string variant = "l3c";
  std::size_t max_cells = 9;
  std::string cpts;
  std::vector<std::string> regions;
  std::string out;
  std::string report;
};

struct SoundnessQuery {
  VertexIndex a, b;
  VertexSet cond;
};

std::vector<SoundnessQuery> soundness_queries(const MixedGraph& g, const markov::LatentExpansion& e,
                                              const Mc& o) {
  auto closure_size = [&](VertexIndex a, VertexIndex b, const VertexSet& cond) {
    VertexSet targets{e.dag.index_of(g.label(a)), e.dag.index_of(g.label(b))};
    for (VertexIndex v : cond) targets.insert(e.dag.index_of(g.label(v)));
    return relatives(e.dag, targets, Relation::AncestorsInclusive).size();
  };
  std::vector<SoundnessQuery> queries;
  if (!o.a.empty() || !o.b.empty()) {
    SoundnessQuery q{g.index_of(o.a), g.index_of(o.b), {}};
    if (o.c) {
      q.cond = g.to_set(split_literal(*o.c));
    } else {
      const auto s = minimal_separator(g, q.a, q.b);
      if (!s) throw Error(ErrorCode::InvalidQuery, "no separating set to test");
      q.cond = *s;
    }
    if (!is_separated(g, {q.a, q.b, q.cond}).separated) {
      throw Error(ErrorCode::InvalidQuery, "the query is not separated; nothing to test");
    }
    queries.push_back(q);
    return queries;
  }
  if (g.size() < 2) return queries;
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<VertexIndex> pick(0, g.size() - 1);
  std::set<std::tuple<VertexIndex, VertexIndex, VertexSet>> seen;
  for (std::size_t tries = 0; tries < 200 * o.queries && queries.size() < o.queries; ++tries) {
    VertexIndex a = pick(rng), b = pick(rng);
    if (a == b || g.adjacent(a, b)) continue;
    if (a > b) std::swap(a, b);
    VertexSet cond;
    if (tries % 2 == 0) {
      const auto s = minimal_separator(g, a, b);
      if (!s) continue;
      cond = *s;
    } else {
      VertexSet pool = relatives(g, {a, b}, Relation::Ancestors);
      pool.erase(a);
      pool.erase(b);
      std::bernoulli_distribution keep(0.5);
      for (VertexIndex v : pool) {
        if (keep(rng)) cond.insert(v);
      }
    }
    if (closure_size(a, b, cond) > 16) continue;
    if (!seen.insert({a, b, cond}).second) continue;
    if (!is_separated(g, {a, b, cond}).separated) continue;
    queries.push_back({a, b, cond});
  }
  return queries;
}

int mc_soundness(const Common& common, const Mc& o, std::ostream& out) {
  const MixedGraph g = load(common.graph).graph;
  const markov::LatentExpansion e = markov::latent_expansion(g);
  const auto queries = soundness_queries(g, e, o);
  std::vector<double> worst(queries.size(), 0.0);
  std::vector<std::size_t> atoms(queries.size(), 0);
  for (std::size_t t = 0; t < o.trials; ++t) {
    const markov::CptSet cpts = markov::random_cpts(e.dag, o.seed + t);
    for (std::size_t k = 0; k < queries.size(); ++k) {
      const auto& q = queries[k];
      std::vector<std::string> cond = g.labels_of(q.cond);
      std::vector<std::string> targets{g.label(q.a), g.label(q.b)};
      targets.insert(targets.end(), cond.begin(), cond.end());
      const markov::Distribution d = markov::ancestral_joint(e.dag, cpts, targets, e.latent);
      const markov::CiCheck c =
          markov::variable_ci_violation(d, {g.label(q.a)}, {g.label(q.b)}, cond);
      worst[k] = std::max(worst[k], c.max_violation);
      atoms[k] += c.atoms_checked;
    }
  }
  std::size_t violations = 0;
  double overall = 0.0;
  std::ostringstream csv;
  csv << "query;atoms_checked;max_violation;verdict\n";
  for (std::size_t k = 0; k < queries.size(); ++k) {
    const bool ok = worst[k] <= o.tol;
    violations += !ok;
    overall = std::max(overall, worst[k]);
    csv << g.label(queries[k].a) << "|" << g.label(queries[k].b) << "|"
        << join_labels(g.labels_of(queries[k].cond)) << ";" << atoms[k] << ";" << worst[k] << ";"
        << (ok ? "independent" : "VIOLATION") << "\n";
  }
  if (!o.report.empty()) io::write_file(o.report, csv.str());
  if (common.json()) {
    out << json{{"trials", o.trials},
                {"queries", queries.size()},
                {"violations", violations},
                {"max_violation", overall}}
               .dump()
        << "\n";
  } else {
    out << "trials " << o.trials << "\nqueries " << queries.size() << "\nviolations "
        << violations << "\nmax_violation " << fmt(overall) << "\n";
  }
  return violations == 0 ? kTrue : kFalse;
}

int mc_witness(const Common& common, const Mc& o, std::ostream& out) {
  const MixedGraph g = load(common.graph).graph;
  const auto cond = split_literal(o.c.value_or(""));
  const auto w = markov::find_dependence_witness(g, o.a, o.b, cond, o.attempts, o.threshold, o.seed);
  if (!w) {
    if (common.json()) {
      out << json{{"witness", false}, {"attempts", o.attempts}}.dump() << "\n";
    } else {
      out << "no witness in " << o.attempts << " attempts\n";
    }
    return kFalse;
  }
  if (!o.out.empty()) io::write_file(o.out, io::cpts_to_json(w->cpts));
  if (common.json()) {
    out << json{{"witness", true}, {"attempt", w->attempt}, {"violation", w->violation}}.dump()
        << "\n";
  } else {
    out << "witness found at attempt " << w->attempt << "\nviolation " << fmt(w->violation)
        << "\n";
    if (!o.out.empty()) out << "cpts written to " << o.out << "\n";
  }
  return kTrue;
}

int mc_local_causality(const Common& common, const Mc& o, std::ostream& out) {
  const io::GraphDocument doc = load(common.graph);
  const lattice::CellKind kind = doc.cell_kind();
  const markov::LatentExpansion e = markov::latent_expansion(doc.graph);
  markov::LocalCausalityOptions options;
  options.probes = {{lattice::Cell::parse(o.a), lattice::Cell::parse(o.b)}};
  options.max_cells = o.max_cells;
  for (const auto& r : o.regions) options.extra_regions.push_back(lattice::Region::parse(r));
  const lattice::L3Variant variant = lattice::parse_variant(o.variant);

  std::vector<markov::CptSet> models;
  if (!o.cpts.empty()) {
    models.push_back(io::cpts_from_json(io::read_file(o.cpts)));
  } else {
    for (std::size_t t = 0; t < o.trials; ++t) models.push_back(markov::random_cpts(e.dag, o.seed + t));
  }
  std::size_t shielder_failures = 0, other_failures = 0, regions = 0, atoms = 0, correlated = 0;
  double worst = 0.0;
  std::vector<json> failures;
  for (const auto& cpts : models) {
    const auto r = markov::is_locally_causal(kind, *doc.window, cpts, variant, o.tol, options);
    for (const auto& p : r.probes) {
      regions += p.shielder_off_regions;
      atoms += p.atoms_checked;
      correlated += p.correlated;
      worst = std::max(worst, p.max_violation);
    }
    for (const auto& f : r.failures) {
      (f.shielder_off ? shielder_failures : other_failures)++;
      failures.push_back({{"region", f.region}, {"shielder_off", f.shielder_off},
                          {"violation", f.violation}});
    }
  }
  const bool local = shielder_failures == 0;
  if (common.json()) {
    out << json{{"models", models.size()},          {"shielder_off_regions", regions},
                {"atoms_checked", atoms},            {"correlated_models", correlated},
                {"max_violation", worst},            {"failures", failures},
                {"locally_causal", local}}
               .dump()
        << "\n";
  } else {
    out << "models " << models.size() << "\nshielder_off_regions " << regions
        << "\natoms_checked " << atoms << "\ncorrelated_models " << correlated
        << "\nmax_violation " << fmt(worst) << "\nscreening_failures " << shielder_failures
        << "\nnon_shielder_off_failures " << other_failures << "\n"
        << (local ? "locally causal" : "NOT locally causal") << "\n";
  }
  return local ? kTrue : kFalse;
}

// export dot ----------------------------------------------------------------

int export_dot(const Common& common, const std::string& path, std::ostream& out) {
  const std::string dot = io::to_dot(load(common.graph).graph);
  if (path.empty()) {
    out << dot;
  } else {
    io::write_file(path, dot);
  }
  return kTrue;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separation, shielder-off regions and local causality on spacetime lattices",
               "seplat"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", common.graph, "Graph JSON file")->required();
  };

  auto* lattice_cmd = app.add_subcommand("lattice", "Lattice graphs")->require_subcommand(1);
  LatticeGen gen;
  auto* gen_cmd = lattice_cmd->add_subcommand("gen", "Build a lattice graph");
  gen_cmd->add_option("--kind", gen.kind, "diamond or box")->required();
  gen_cmd->add_option("--imin", gen.imin);
  gen_cmd->add_option("--imax", gen.imax);
  gen_cmd->add_option("--jmin", gen.jmin);
  gen_cmd->add_option("--jmax", gen.jmax);
  gen_cmd->add_option("--kmin", gen.kmin);
  gen_cmd->add_option("--kmax", gen.kmax);
  gen_cmd->add_option("--mmin", gen.mmin);
  gen_cmd->add_option("--mmax", gen.mmax);
  gen_cmd->add_option("--out", gen.out, "Output file (stdout if omitted)");

  auto* sep_cmd = app.add_subcommand("sep", "Separation queries")->require_subcommand(1);
  SepCheck check;
  auto* check_cmd = sep_cmd->add_subcommand("check", "Is A separated from B given C?");
  add_graph(check_cmd);
  check_cmd->add_option("--a", check.a)->required();
  check_cmd->add_option("--b", check.b)->required();
  check_cmd->add_option("--c", check.c, "Conditioning set, labels joined by '+'");
  check_cmd->add_flag("--oracle", check.oracle, "Use simple-path enumeration");
  check_cmd->add_option("--convention", check.convention)
      ->check(CLI::IsMember({"inclusive", "strict"}));
  SepMinimal minimal;
  auto* minimal_cmd = sep_cmd->add_subcommand("minimal", "Minimal separating set");
  add_graph(minimal_cmd);
  minimal_cmd->add_option("--a", minimal.a)->required();
  minimal_cmd->add_option("--b", minimal.b)->required();

  auto* shield_cmd = app.add_subcommand("shield", "Shielder-off predicates")->require_subcommand(1);
  ShieldCheck shield;
  auto* shield_check_cmd = shield_cmd->add_subcommand("check", "Evaluate L1, L2 and L3");
  add_graph(shield_check_cmd);
  shield_check_cmd->add_option("--a", shield.a)->required();
  shield_check_cmd->add_option("--b", shield.b)->required();
  shield_check_cmd->add_option("--region", shield.region)->required();
  shield_check_cmd->add_option("--variant", shield.variant)->check(CLI::IsMember({"l3c", "l3q"}));

  auto* prop1_cmd = app.add_subcommand("prop1", "Shielder-off sweeps")->require_subcommand(1);
  Prop1 prop1;
  auto* verify_cmd = prop1_cmd->add_subcommand("verify", "Check every shielder-off candidate");
  add_graph(verify_cmd);
  verify_cmd->add_option("--a", prop1.a)->required();
  verify_cmd->add_option("--b", prop1.b)->required();
  verify_cmd->add_option("--variant", prop1.variant)->check(CLI::IsMember({"l3c", "l3q"}));
  verify_cmd->add_option("--max-cells", prop1.max_cells);
  verify_cmd->add_option("--cap", prop1.cap, "Maximum number of candidates");
  verify_cmd->add_option("--report", prop1.report, "CSV report file");

  auto* mc_cmd = app.add_subcommand("mc", "Probabilistic experiments")->require_subcommand(1);
  Mc mc;
  auto* soundness_cmd = mc_cmd->add_subcommand("soundness", "Separated implies independent");
  add_graph(soundness_cmd);
  soundness_cmd->add_option("--a", mc.a);
  soundness_cmd->add_option("--b", mc.b);
  soundness_cmd->add_option("--c", mc.c);
  soundness_cmd->add_option("--trials", mc.trials);
  soundness_cmd->add_option("--queries", mc.queries, "Random queries when --a/--b are omitted");
  soundness_cmd->add_option("--seed", mc.seed);
  soundness_cmd->add_option("--tol", mc.tol);
  soundness_cmd->add_option("--report", mc.report, "CSV report file");
  auto* witness_cmd = mc_cmd->add_subcommand("witness", "Search CPTs exhibiting dependence");
  add_graph(witness_cmd);
  witness_cmd->add_option("--a", mc.a)->required();
  witness_cmd->add_option("--b", mc.b)->required();
  witness_cmd->add_option("--c", mc.c);
  witness_cmd->add_option("--attempts", mc.attempts);
  witness_cmd->add_option("--threshold", mc.threshold);
  witness_cmd->add_option("--seed", mc.seed);
  witness_cmd->add_option("--out", mc.out, "Write the witness CPTs here");
  auto* local_cmd = mc_cmd->add_subcommand("local-causality", "Screening-off sweep");
  add_graph(local_cmd);
  local_cmd->add_option("--a", mc.a)->required();
  local_cmd->add_option("--b", mc.b)->required();
  local_cmd->add_option("--variant", mc.variant)->check(CLI::IsMember({"l3c", "l3q"}));
  local_cmd->add_option("--max-cells", mc.max_cells);
  local_cmd->add_option("--trials", mc.trials)->default_val(1);
  local_cmd->add_option("--seed", mc.seed);
  local_cmd->add_option("--tol", mc.tol);
  local_cmd->add_option("--cpts", mc.cpts, "CPT JSON file instead of random models");
  local_cmd->add_option("--region", mc.regions, "Extra region to check (repeatable)");

  auto* export_cmd = app.add_subcommand("export", "Export graphs")->require_subcommand(1);
  std::string dot_out;
  auto* dot_cmd = export_cmd->add_subcommand("dot", "Graphviz DOT");
  add_graph(dot_cmd);
  dot_cmd->add_option("--out", dot_out);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kUsage;
  }

  try {
    if (gen_cmd->parsed()) return lattice_gen(gen, out);
    if (check_cmd->parsed()) return sep_check(common, check, out);
    if (minimal_cmd->parsed()) return sep_minimal(common, minimal, out);
    if (shield_check_cmd->parsed()) return shield_check(common, shield, out);
    if (verify_cmd->parsed()) return prop1_verify(common, prop1, out);
    if (soundness_cmd->parsed()) return mc_soundness(common, mc, out);
    if (witness_cmd->parsed()) return mc_witness(common, mc, out);
    if (local_cmd->parsed()) return mc_local_causality(common, mc, out);
    if (dot_cmd->parsed()) return export_dot(common, dot_out, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == ErrorCode::SeparatedInput ? kFalse : kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace seplat::cli
