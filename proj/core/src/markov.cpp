#include "seplat/markov.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>

#include "seplat/error.hpp"
#include "seplat/separation.hpp"

namespace seplat::markov {

LatentExpansion latent_expansion(const MixedGraph& g) {
  std::vector<std::string> vertices = g.labels();
  std::set<std::string> taken(vertices.begin(), vertices.end());
  std::vector<LabelPair> directed;
  for (const auto& [u, v] : g.directed_edges()) directed.emplace_back(g.label(u), g.label(v));

  LatentExpansion out;
  for (const auto& [u, v] : g.bidirected_edges()) {
    std::string name = "latent:" + g.label(u) + "|" + g.label(v);
    while (taken.contains(name)) name += '\'';
    taken.insert(name);
    vertices.push_back(name);
    directed.emplace_back(name, g.label(u));
    directed.emplace_back(name, g.label(v));
    out.latent.push_back(name);
  }
  std::sort(out.latent.begin(), out.latent.end());
  out.dag = MixedGraph::build(std::move(vertices), directed, {});
  return out;
}

CptSet random_cpts(const MixedGraph& dag, std::uint64_t seed, CptStyle style) {
  if (dag.bidirected_count() > 0) {
    throw Error(ErrorCode::InvalidQuery, "CPTs need a graph without bidirected edges");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.05, 0.95);
  std::bernoulli_distribution coin(0.5);
  CptSet out;
  for (VertexIndex v = 0; v < dag.size(); ++v) {
    Cpt cpt;
    for (VertexIndex p : dag.parents(v)) cpt.parents.push_back(dag.label(p));
    cpt.p1.resize(std::size_t{1} << cpt.parents.size());
    for (double& x : cpt.p1) x = style == CptStyle::Uniform ? uniform(rng) : (coin(rng) ? 0.95 : 0.05);
    out.emplace(dag.label(v), std::move(cpt));
  }
  return out;
}

void validate_cpts(const MixedGraph& dag, const CptSet& cpts) {
  for (VertexIndex v = 0; v < dag.size(); ++v) {
    const auto it = cpts.find(dag.label(v));
    if (it == cpts.end()) throw Error(ErrorCode::UnknownVertex, "no CPT for " + dag.label(v));
    const Cpt& cpt = it->second;
    std::vector<std::string> expected;
    for (VertexIndex p : dag.parents(v)) expected.push_back(dag.label(p));
    std::vector<std::string> given = cpt.parents;
    std::sort(given.begin(), given.end());
    if (given != expected) {
      throw Error(ErrorCode::InvalidQuery, "CPT parents do not match graph at " + dag.label(v));
    }
    if (cpt.p1.size() != (std::size_t{1} << cpt.parents.size())) {
      throw Error(ErrorCode::InvalidQuery, "CPT for " + dag.label(v) + " has wrong row count");
    }
    for (double x : cpt.p1) {
      if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(ErrorCode::InvalidQuery, "CPT entry outside [0,1] at " + dag.label(v));
      }
    }
  }
  for (const auto& [label, cpt] : cpts) {
    if (!dag.find(label)) throw Error(ErrorCode::UnknownVertex, "CPT for unknown vertex " + label);
  }
}

Distribution::Distribution(std::vector<std::string> variables, std::vector<double> probabilities)
    : variables_(std::move(variables)), probabilities_(std::move(probabilities)) {
  if (!std::is_sorted(variables_.begin(), variables_.end()) ||
      std::adjacent_find(variables_.begin(), variables_.end()) != variables_.end()) {
    throw Error(ErrorCode::InvalidQuery, "distribution variables must be sorted and unique");
  }
  if (variables_.size() >= 64 || probabilities_.size() != (std::size_t{1} << variables_.size())) {
    throw Error(ErrorCode::InvalidQuery, "probability table does not cover all assignments");
  }
}

std::size_t Distribution::position(std::string_view variable) const {
  const auto it = std::lower_bound(variables_.begin(), variables_.end(), variable);
  if (it == variables_.end() || *it != variable) {
    throw Error(ErrorCode::UnknownVertex, std::string(variable));
  }
  return static_cast<std::size_t>(it - variables_.begin());
}

bool Distribution::has(std::string_view variable) const {
  return std::binary_search(variables_.begin(), variables_.end(), variable);
}

double Distribution::probability(const EventRef& event) const {
  std::size_t mask = 0;
  std::size_t want = 0;
  for (const auto& [label, value] : event.values) {
    if (value != 0 && value != 1) throw Error(ErrorCode::InvalidQuery, "binary values only");
    const std::size_t bit = std::size_t{1} << position(label);
    mask |= bit;
    if (value) want |= bit;
  }
  double p = 0.0;
  for (std::size_t i = 0; i < probabilities_.size(); ++i) {
    if ((i & mask) == want) p += probabilities_[i];
  }
  return p;
}

double Distribution::total() const {
  double s = 0.0;
  for (double p : probabilities_) s += p;
  return s;
}

Distribution Distribution::marginal(const std::vector<std::string>& keep) const {
  std::vector<std::string> vars = keep;
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  std::vector<std::size_t> pos;
  for (const auto& v : vars) pos.push_back(position(v));
  std::vector<double> out(std::size_t{1} << vars.size(), 0.0);
  for (std::size_t i = 0; i < probabilities_.size(); ++i) {
    std::size_t j = 0;
    for (std::size_t k = 0; k < pos.size(); ++k) j |= ((i >> pos[k]) & 1U) << k;
    out[j] += probabilities_[i];
  }
  return Distribution(std::move(vars), std::move(out));
}

Distribution ancestral_joint(const MixedGraph& dag, const CptSet& cpts,
                             const std::vector<std::string>& targets,
                             const std::vector<std::string>& latent, std::size_t budget) {
  if (dag.bidirected_count() > 0) {
    throw Error(ErrorCode::InvalidQuery, "joint needs a graph without bidirected edges");
  }
  const VertexSet closure = relatives(dag, dag.to_set(targets), Relation::AncestorsInclusive);
  if (closure.size() > budget) {
    throw Error(ErrorCode::BudgetExceeded, std::to_string(closure.size()) +
                                               " variables to enumerate, budget " +
                                               std::to_string(budget));
  }
  const std::set<std::string> hidden(latent.begin(), latent.end());

  // Enumeration order: topological order restricted to the closure.
  std::vector<VertexIndex> order;
  for (VertexIndex v : topological_order(dag)) {
    if (closure.contains(v)) order.push_back(v);
  }
  const std::size_t n = order.size();
  std::vector<std::size_t> slot(dag.size(), 0);
  for (std::size_t k = 0; k < n; ++k) slot[order[k]] = k;

  std::vector<std::string> observed;
  for (VertexIndex v : closure) {
    if (!hidden.contains(dag.label(v))) observed.push_back(dag.label(v));
  }
  std::sort(observed.begin(), observed.end());
  std::vector<int> out_bit(n, -1);
  for (std::size_t k = 0; k < n; ++k) {
    const auto it = std::lower_bound(observed.begin(), observed.end(), dag.label(order[k]));
    if (it != observed.end() && *it == dag.label(order[k])) {
      out_bit[k] = static_cast<int>(it - observed.begin());
    }
  }

  struct Factor {
    std::vector<std::size_t> parent_slots;  // in Cpt::parents order
    const std::vector<double>* p1;
  };
  std::vector<Factor> factors(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::string& label = dag.label(order[k]);
    const auto it = cpts.find(label);
    if (it == cpts.end()) throw Error(ErrorCode::UnknownVertex, "no CPT for " + label);
    for (const auto& p : it->second.parents) {
      const VertexIndex pv = dag.index_of(p);
      if (!dag.has_directed(pv, order[k])) {
        throw Error(ErrorCode::InvalidQuery, "CPT parent " + p + " is not a parent of " + label);
      }
      factors[k].parent_slots.push_back(slot[pv]);
    }
    if (it->second.p1.size() != (std::size_t{1} << it->second.parents.size()) ||
        it->second.parents.size() != dag.parents(order[k]).size()) {
      throw Error(ErrorCode::InvalidQuery, "malformed CPT for " + label);
    }
    factors[k].p1 = &it->second.p1;
  }

  std::vector<double> probs(std::size_t{1} << observed.size(), 0.0);
  const std::size_t assignments = std::size_t{1} << n;
  for (std::size_t mask = 0; mask < assignments; ++mask) {
    double p = 1.0;
    std::size_t out = 0;
    for (std::size_t k = 0; k < n && p > 0.0; ++k) {
      std::size_t row = 0;
      const auto& ps = factors[k].parent_slots;
      for (std::size_t q = 0; q < ps.size(); ++q) row |= ((mask >> ps[q]) & 1U) << q;
      const double p1 = (*factors[k].p1)[row];
      const bool one = (mask >> k) & 1U;
      p *= one ? p1 : 1.0 - p1;
      if (one && out_bit[k] >= 0) out |= std::size_t{1} << out_bit[k];
    }
    probs[out] += p;
  }
  return Distribution(std::move(observed), std::move(probs));
}

Distribution joint(const MixedGraph& dag, const CptSet& cpts, const std::vector<std::string>& latent,
                   std::size_t budget) {
  return ancestral_joint(dag, cpts, dag.labels(), latent, budget);
}

namespace {

void require_disjoint(const std::vector<std::string>& x, const std::vector<std::string>& y,
                      const std::vector<std::string>& z) {
  std::set<std::string> seen;
  for (const auto* group : {&x, &y, &z}) {
    std::set<std::string> local(group->begin(), group->end());
    for (const auto& v : local) {
      if (!seen.insert(v).second) throw Error(ErrorCode::DisjointnessViolation, v);
    }
  }
}

std::vector<std::string> labels_of(const EventRef& e) {
  std::vector<std::string> out;
  for (const auto& [label, value] : e.values) out.push_back(label);
  return out;
}

}  // namespace

CiCheck ci_violation(const Distribution& d, const EventRef& a, const EventRef& b,
                     const std::vector<std::string>& cond) {
  require_disjoint(labels_of(a), labels_of(b), cond);
  auto event_bits = [&](const EventRef& e) {
    std::pair<std::size_t, std::size_t> mw{0, 0};
    for (const auto& [label, value] : e.values) {
      if (value != 0 && value != 1) throw Error(ErrorCode::InvalidQuery, "binary values only");
      const std::size_t bit = std::size_t{1} << d.position(label);
      mw.first |= bit;
      if (value) mw.second |= bit;
    }
    return mw;
  };
  const auto [mask_a, want_a] = event_bits(a);
  const auto [mask_b, want_b] = event_bits(b);
  std::vector<std::size_t> cond_pos;
  for (const auto& c : cond) cond_pos.push_back(d.position(c));

  const std::size_t atoms = std::size_t{1} << cond_pos.size();
  std::vector<double> pc(atoms, 0.0), pa(atoms, 0.0), pb(atoms, 0.0), pab(atoms, 0.0);
  const auto& probs = d.probabilities();
  for (std::size_t i = 0; i < probs.size(); ++i) {
    std::size_t atom = 0;
    for (std::size_t k = 0; k < cond_pos.size(); ++k) atom |= ((i >> cond_pos[k]) & 1U) << k;
    const double p = probs[i];
    const bool in_a = (i & mask_a) == want_a;
    const bool in_b = (i & mask_b) == want_b;
    pc[atom] += p;
    if (in_a) pa[atom] += p;
    if (in_b) pb[atom] += p;
    if (in_a && in_b) pab[atom] += p;
  }
  CiCheck out;
  for (std::size_t atom = 0; atom < atoms; ++atom) {
    if (!(pc[atom] > 0.0)) continue;
    ++out.atoms_checked;
    const double v =
        std::abs(pab[atom] / pc[atom] - (pa[atom] / pc[atom]) * (pb[atom] / pc[atom]));
    out.max_violation = std::max(out.max_violation, v);
  }
  return out;
}

bool cond_indep(const Distribution& d, const EventRef& a, const EventRef& b,
                const std::vector<std::string>& cond, double tol) {
  return ci_violation(d, a, b, cond).max_violation <= tol;
}

CiCheck variable_ci_violation(const Distribution& d, const std::vector<std::string>& a_vars,
                              const std::vector<std::string>& b_vars,
                              const std::vector<std::string>& cond) {
  require_disjoint(a_vars, b_vars, cond);
  std::vector<std::string> keep = a_vars;
  keep.insert(keep.end(), b_vars.begin(), b_vars.end());
  keep.insert(keep.end(), cond.begin(), cond.end());
  const Distribution small = d.marginal(keep);
  CiCheck worst;
  for (std::size_t va = 0; va < (std::size_t{1} << a_vars.size()); ++va) {
    for (std::size_t vb = 0; vb < (std::size_t{1} << b_vars.size()); ++vb) {
      EventRef ea, eb;
      for (std::size_t k = 0; k < a_vars.size(); ++k) {
        ea.values.emplace_back(a_vars[k], static_cast<int>((va >> k) & 1U));
      }
      for (std::size_t k = 0; k < b_vars.size(); ++k) {
        eb.values.emplace_back(b_vars[k], static_cast<int>((vb >> k) & 1U));
      }
      const CiCheck c = ci_violation(small, ea, eb, cond);
      worst.max_violation = std::max(worst.max_violation, c.max_violation);
      worst.atoms_checked = c.atoms_checked;
    }
  }
  return worst;
}

CmcReport check_cmc(const Distribution& d, const MixedGraph& dag, double tol) {
  CmcReport report;
  for (VertexIndex v = 0; v < dag.size(); ++v) {
    const VertexSet descendants = relatives(dag, {v}, Relation::Descendants);
    std::vector<std::string> parents;
    for (VertexIndex p : dag.parents(v)) parents.push_back(dag.label(p));
    for (VertexIndex w = 0; w < dag.size(); ++w) {
      if (w == v || descendants.contains(w) || dag.has_directed(w, v)) continue;
      ++report.checks;
      const CiCheck c = variable_ci_violation(d, {dag.label(v)}, {dag.label(w)}, parents);
      if (c.max_violation > tol) {
        report.violations.push_back({dag.label(v), dag.label(w), c.max_violation});
      }
    }
  }
  return report;
}

bool LocalCausalityReport::locally_causal() const {
  return std::ranges::none_of(failures, [](const ScreeningFailure& f) { return f.shielder_off; });
}

LocalCausalityReport is_locally_causal(lattice::CellKind kind, const lattice::Window& w,
                                       const CptSet& cpts, lattice::L3Variant variant, double tol,
                                       const LocalCausalityOptions& options) {
  const MixedGraph graph = lattice::build_graph(kind, w);
  const LatentExpansion expanded = latent_expansion(graph);
  validate_cpts(expanded.dag, cpts);

  LocalCausalityReport report;
  for (const auto& [a, b] : options.probes) {
    std::vector<lattice::Region> shielding;
    lattice::enumerate_shielder_off(
        a, b, w, variant, options.max_cells,
        [&](const lattice::Region& r, const lattice::ShieldVerdict& v) {
          if (v.shielder_off) shielding.push_back(r);
        },
        options.candidate_cap);

    std::vector<std::string> targets{a.label(), b.label()};
    for (const auto& group : {std::cref(shielding), std::cref(options.extra_regions)}) {
      for (const auto& r : group.get()) {
        for (const auto& c : r.cells()) targets.push_back(c.label());
      }
    }
    const Distribution d =
        ancestral_joint(expanded.dag, cpts, targets, expanded.latent, options.budget);

    ProbeResult probe;
    probe.a = a.label();
    probe.b = b.label();
    probe.correlation = variable_ci_violation(d, {probe.a}, {probe.b}, {}).max_violation;
    probe.correlated = probe.correlation > tol;

    auto check = [&](const lattice::Region& r, bool is_shielder_off) {
      const std::vector<std::string> cond = graph.labels_of(lattice::region_to_vertexset(graph, r));
      const CiCheck c = variable_ci_violation(d, {probe.a}, {probe.b}, cond);
      ++probe.regions_checked;
      probe.atoms_checked += c.atoms_checked;
      if (is_shielder_off) probe.max_violation = std::max(probe.max_violation, c.max_violation);
      if (c.max_violation > tol) {
        report.failures.push_back({probe.a, probe.b, r.literal(), is_shielder_off, c.max_violation});
      }
    };
    for (const auto& r : shielding) {
      ++probe.shielder_off_regions;
      check(r, true);
    }
    for (const auto& r : options.extra_regions) {
      check(r, lattice::shielder_off(r, a, b, variant, w).shielder_off);
    }
    report.probes.push_back(std::move(probe));
  }
  return report;
}

std::optional<Witness> find_dependence_witness(const MixedGraph& g, const std::string& a,
                                               const std::string& b,
                                               const std::vector<std::string>& cond,
                                               std::size_t attempts, double threshold,
                                               std::uint64_t seed) {
  const VertexIndex va = g.index_of(a);
  const VertexIndex vb = g.index_of(b);
  if (is_separated(g, {va, vb, g.to_set(cond)}).separated) {
    throw Error(ErrorCode::SeparatedInput,
                "the conditioning set separates " + a + " and " + b + "; no witness exists");
  }
  const LatentExpansion expanded = latent_expansion(g);
  std::vector<std::string> targets{a, b};
  targets.insert(targets.end(), cond.begin(), cond.end());
  for (std::size_t i = 0; i < attempts; ++i) {
    const CptStyle style = i % 2 == 0 ? CptStyle::Uniform : CptStyle::Extremal;
    CptSet cpts = random_cpts(expanded.dag, seed + i, style);
    const Distribution d = ancestral_joint(expanded.dag, cpts, targets, expanded.latent);
    const double v = variable_ci_violation(d, {a}, {b}, cond).max_violation;
    if (v > threshold) return Witness{std::move(cpts), v, i};
  }
  return std::nullopt;
}

}  // namespace seplat::markov
