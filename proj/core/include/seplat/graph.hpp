#ifndef SEPLAT_GRAPH_HPP
#define SEPLAT_GRAPH_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace seplat {

// Vertices are addressed by their rank in the lexicographic order of labels,
// so index order and label order coincide.
using VertexIndex = std::size_t;
using VertexSet = std::set<VertexIndex>;
using LabelPair = std::pair<std::string, std::string>;

// Orientation of an edge as seen when walking from one endpoint to the other.
// Forward: u -> v, Backward: u <- v, Bidirected: u <-> v.
enum class EdgeKind { Forward, Backward, Bidirected };

struct Incidence {
  VertexIndex other;
  EdgeKind kind;
};

struct Path {
  std::vector<VertexIndex> vertices;
  std::vector<EdgeKind> edges;

  std::size_t length() const { return edges.size(); }
  bool operator==(const Path&) const = default;
};

enum class Relation { Parents, Ancestors, AncestorsInclusive, Descendants, Collaterals };

/// Mixed acyclic graph: directed edges plus bidirected (spouse) edges.
///
/// Immutable once built. build() validates labels, endpoints, self-loops,
/// duplicate edges and acyclicity of the directed part.
class MixedGraph {
 public:
  MixedGraph() = default;

  static MixedGraph build(std::vector<std::string> vertices,
                          const std::vector<LabelPair>& directed,
                          const std::vector<LabelPair>& bidirected);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  const std::string& label(VertexIndex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<VertexIndex> find(std::string_view label) const;
  VertexIndex index_of(std::string_view label) const;
  VertexSet to_set(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const VertexSet& set) const;

  const std::vector<VertexIndex>& parents(VertexIndex v) const { return parents_.at(v); }
  const std::vector<VertexIndex>& children(VertexIndex v) const { return children_.at(v); }
  const std::vector<VertexIndex>& spouses(VertexIndex v) const { return spouses_.at(v); }
  // Incident edges sorted by (neighbour, kind).
  const std::vector<Incidence>& incident(VertexIndex v) const { return incident_.at(v); }

  bool has_directed(VertexIndex from, VertexIndex to) const;
  bool has_bidirected(VertexIndex u, VertexIndex v) const;
  bool adjacent(VertexIndex u, VertexIndex v) const;

  // Sorted by (from, to) / (smaller, larger).
  std::vector<std::pair<VertexIndex, VertexIndex>> directed_edges() const;
  std::vector<std::pair<VertexIndex, VertexIndex>> bidirected_edges() const;
  std::size_t directed_count() const { return directed_count_; }
  std::size_t bidirected_count() const { return bidirected_count_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexIndex> index_;
  std::vector<std::vector<VertexIndex>> parents_;
  std::vector<std::vector<VertexIndex>> children_;
  std::vector<std::vector<VertexIndex>> spouses_;
  std::vector<std::vector<Incidence>> incident_;
  std::size_t directed_count_ = 0;
  std::size_t bidirected_count_ = 0;
};

VertexSet relatives(const MixedGraph& g, const VertexSet& s, Relation kind);

// Ties broken by label order. Throws CycleError if the directed part is cyclic.
std::vector<VertexIndex> topological_order(const MixedGraph& g);

// Depth-first enumeration of simple paths with at most max_len edges, in
// (neighbour index, edge kind) order. The visitor returns false to stop.
void for_each_simple_path(const MixedGraph& g, VertexIndex a, VertexIndex b, std::size_t max_len,
                          const std::function<bool(const Path&)>& visit);
std::vector<Path> simple_paths(const MixedGraph& g, VertexIndex a, VertexIndex b,
                               std::size_t max_len);

// Throws InvalidPath unless consecutive vertices are joined by the named edge
// and no vertex repeats.
void validate_path(const MixedGraph& g, const Path& p);

// "a -> c <- b <-> d"
std::string format_path(const MixedGraph& g, const Path& p);

}  // namespace seplat

#endif  // SEPLAT_GRAPH_HPP
