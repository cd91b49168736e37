#ifndef SEPLAT_MARKOV_HPP
#define SEPLAT_MARKOV_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seplat/graph.hpp"
#include "seplat/lattice.hpp"

// Exact semantics for binary Bayesian networks over (latent-expanded) graphs.
namespace seplat::markov {

inline constexpr std::size_t kEnumerationBudget = 22;

struct LatentExpansion {
  MixedGraph dag;
  std::vector<std::string> latent;  // sorted labels of the added vertices
};

// Each bidirected edge {u,v} becomes a fresh latent w with w -> u, w -> v.
LatentExpansion latent_expansion(const MixedGraph& g);

// p1[mask] = P(vertex = 1 | parents), bit k of mask = value of parents[k].
struct Cpt {
  std::vector<std::string> parents;
  std::vector<double> p1;

  bool operator==(const Cpt&) const = default;
};

using CptSet = std::map<std::string, Cpt>;

enum class CptStyle {
  Uniform,   // entries uniform in [0.05, 0.95]
  Extremal,  // entries 0.05 or 0.95 with equal odds
};

// Deterministic per (graph, seed, style). Throws InvalidQuery on graphs with
// bidirected edges.
CptSet random_cpts(const MixedGraph& dag, std::uint64_t seed, CptStyle style = CptStyle::Uniform);

// Throws unless every vertex has a table whose parents match the graph and
// whose entries lie in [0,1].
void validate_cpts(const MixedGraph& dag, const CptSet& cpts);

// An event: each listed variable takes the given value.
struct EventRef {
  std::vector<std::pair<std::string, int>> values;
};

/// Joint probability table over binary variables. Bit k of an index holds
/// the value of variables()[k]; variables are sorted by label.
class Distribution {
 public:
  Distribution(std::vector<std::string> variables, std::vector<double> probabilities);

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<double>& probabilities() const { return probabilities_; }
  std::size_t position(std::string_view variable) const;
  bool has(std::string_view variable) const;

  double probability(const EventRef& event) const;
  double total() const;
  Distribution marginal(const std::vector<std::string>& keep) const;

 private:
  std::vector<std::string> variables_;
  std::vector<double> probabilities_;
};

// Product of CPT factors over all vertices of dag, latents summed out.
// BudgetExceeded beyond `budget` enumerated vertices.
Distribution joint(const MixedGraph& dag, const CptSet& cpts,
                   const std::vector<std::string>& latent = {},
                   std::size_t budget = kEnumerationBudget);

// Same, restricted to the ancestral closure of targets; the margin of an
// ancestral set factorizes over its own CPTs.
Distribution ancestral_joint(const MixedGraph& dag, const CptSet& cpts,
                             const std::vector<std::string>& targets,
                             const std::vector<std::string>& latent = {},
                             std::size_t budget = kEnumerationBudget);

struct CiCheck {
  double max_violation = 0.0;
  std::size_t atoms_checked = 0;  // conditioning atoms with p(C) > 0
};

// max over atoms C with p(C) > 0 of |p(A and B | C) - p(A | C) p(B | C)|.
// A, B and cond must be pairwise disjoint.
CiCheck ci_violation(const Distribution& d, const EventRef& a, const EventRef& b,
                     const std::vector<std::string>& cond);

bool cond_indep(const Distribution& d, const EventRef& a, const EventRef& b,
                const std::vector<std::string>& cond, double tol);

// Worst case over every value assignment of the a and b variables.
CiCheck variable_ci_violation(const Distribution& d, const std::vector<std::string>& a_vars,
                              const std::vector<std::string>& b_vars,
                              const std::vector<std::string>& cond);

struct CmcViolation {
  std::string vertex;
  std::string non_descendant;
  double violation = 0.0;
};

struct CmcReport {
  std::size_t checks = 0;
  std::vector<CmcViolation> violations;
};

// Each vertex against each non-descendant outside its parents, given its
// parents. d must cover every vertex of dag.
CmcReport check_cmc(const Distribution& d, const MixedGraph& dag, double tol);

struct ScreeningFailure {
  std::string a;
  std::string b;
  std::string region;
  bool shielder_off = false;
  double violation = 0.0;
};

struct ProbeResult {
  std::string a;
  std::string b;
  double correlation = 0.0;  // max |p(ab) - p(a)p(b)| over values
  bool correlated = false;
  std::size_t regions_checked = 0;
  std::size_t shielder_off_regions = 0;
  std::size_t atoms_checked = 0;
  double max_violation = 0.0;  // over shielder-off regions
};

struct LocalCausalityOptions {
  std::vector<std::pair<lattice::Cell, lattice::Cell>> probes;
  std::size_t max_cells = 9;
  // Checked in addition to the enumerated shielder-off regions.
  std::vector<lattice::Region> extra_regions;
  std::size_t candidate_cap = lattice::kDefaultCandidateCap;
  std::size_t budget = kEnumerationBudget;
};

struct LocalCausalityReport {
  std::vector<ProbeResult> probes;
  std::vector<ScreeningFailure> failures;
  bool locally_causal() const;  // no failure on a shielder-off region
};

// Screening-off check for every probe pair, every enumerated shielder-off
// region and every positive-probability atom of that region. cpts are
// indexed by the latent expansion of the lattice graph.
LocalCausalityReport is_locally_causal(lattice::CellKind kind, const lattice::Window& w,
                                       const CptSet& cpts, lattice::L3Variant variant, double tol,
                                       const LocalCausalityOptions& options);

struct Witness {
  CptSet cpts;  // over latent_expansion(g).dag
  double violation = 0.0;
  std::size_t attempt = 0;
};

// Random-restart search for CPTs under which a and b are dependent given
// cond. Attempt i draws random_cpts(seed + i) and alternates Uniform and
// Extremal styles. Throws SeparatedInput when cond separates a and b.
std::optional<Witness> find_dependence_witness(const MixedGraph& g, const std::string& a,
                                               const std::string& b,
                                               const std::vector<std::string>& cond,
                                               std::size_t attempts, double threshold,
                                               std::uint64_t seed);

}  // namespace seplat::markov

#endif  // SEPLAT_MARKOV_HPP
