#ifndef SEPLAT_SEPARATION_HPP
#define SEPLAT_SEPARATION_HPP

#include <optional>
#include <vector>

#include "seplat/graph.hpp"

namespace seplat {

// Which vertices may act as open colliders.
// Inclusive: collider in C or an ancestor of C (the standard criterion).
// Strict: collider a proper ancestor of C, i.e. in Anc(C) with C itself excluded.
enum class ColliderConvention { Inclusive, Strict };

struct SeparationQuery {
  VertexIndex a = 0;
  VertexIndex b = 0;
  VertexSet cond;
  ColliderConvention convention = ColliderConvention::Inclusive;
};

struct SeparationVerdict {
  bool separated = false;
  std::optional<Path> witness;  // present iff connected
};

/// True iff every interior non-collider of p lies outside cond and every
/// interior collider lies in the convention's collider set. Bidirected edge
/// ends count as arrowheads.
bool path_is_connecting(const MixedGraph& g, const Path& p, const VertexSet& cond,
                        ColliderConvention convention = ColliderConvention::Inclusive);

/// Reference decision by enumeration of simple paths (up to |V|-1 edges).
/// Prefixes that are already blocked at an interior vertex are not extended.
SeparationVerdict is_separated_oracle(const MixedGraph& g, const SeparationQuery& q);

/// d-/m-separation by reachability over (vertex, arrival mark) states;
/// O(|V| + |E|) states and transitions. A directed edge u -> v leaves a tail
/// mark at u and a head at v; a bidirected edge leaves heads at both ends.
/// A vertex can be passed as a non-collider when it is outside cond and as a
/// collider when it is in the collider set.
SeparationVerdict is_separated(const MixedGraph& g, const SeparationQuery& q);

// Greedy shrink from An({a,b}) \ {a,b}, repeated until no single vertex can
// be dropped. std::nullopt when that start set does not separate.
std::optional<VertexSet> minimal_separator(const MixedGraph& g, VertexIndex a, VertexIndex b);

/// Graph analogue of a shielder-off region: cond lies in Anc(a), and every
/// directed path from a common ancestor of a and b into a meets cond.
bool is_graph_shielder_off_set(const MixedGraph& g, VertexIndex a, VertexIndex b,
                               const VertexSet& cond);

struct TheoremRow {
  VertexSet candidate;
  bool shielder_off = false;
  SeparationVerdict verdict;
};

struct TheoremReport {
  std::vector<TheoremRow> rows;
  std::size_t shielder_off_count = 0;
  std::size_t separated_count = 0;
  std::vector<std::size_t> counterexamples;  // row indices: shielder-off but connected
};

TheoremReport verify_separation_theorem(const MixedGraph& g, VertexIndex a, VertexIndex b,
                                        const std::vector<VertexSet>& candidates);

}  // namespace seplat

#endif  // SEPLAT_SEPARATION_HPP
