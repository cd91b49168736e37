#include "seplat/graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <sstream>

#include "seplat/error.hpp"

namespace seplat {

namespace {

bool contains(const std::vector<VertexIndex>& xs, VertexIndex x) {
  return std::binary_search(xs.begin(), xs.end(), x);
}

int kind_rank(EdgeKind k) { return static_cast<int>(k); }

}  // namespace

MixedGraph MixedGraph::build(std::vector<std::string> vertices,
                             const std::vector<LabelPair>& directed,
                             const std::vector<LabelPair>& bidirected) {
  MixedGraph g;
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].empty()) throw Error(ErrorCode::InvalidLabel, "empty vertex label");
    if (i > 0 && vertices[i] == vertices[i - 1]) {
      throw Error(ErrorCode::DuplicateVertex, vertices[i]);
    }
    g.index_.emplace(vertices[i], i);
  }
  g.labels_ = std::move(vertices);
  const std::size_t n = g.labels_.size();
  g.parents_.assign(n, {});
  g.children_.assign(n, {});
  g.spouses_.assign(n, {});
  g.incident_.assign(n, {});

  std::set<std::pair<VertexIndex, VertexIndex>> seen_directed;
  for (const auto& [u_label, v_label] : directed) {
    const VertexIndex u = g.index_of(u_label);
    const VertexIndex v = g.index_of(v_label);
    if (u == v) throw Error(ErrorCode::SelfLoop, u_label + " -> " + v_label);
    if (!seen_directed.emplace(u, v).second) {
      throw Error(ErrorCode::DuplicateEdge, u_label + " -> " + v_label);
    }
    g.parents_[v].push_back(u);
    g.children_[u].push_back(v);
    g.incident_[u].push_back({v, EdgeKind::Forward});
    g.incident_[v].push_back({u, EdgeKind::Backward});
  }
  std::set<std::pair<VertexIndex, VertexIndex>> seen_bidirected;
  for (const auto& [u_label, v_label] : bidirected) {
    const VertexIndex u = g.index_of(u_label);
    const VertexIndex v = g.index_of(v_label);
    if (u == v) throw Error(ErrorCode::SelfLoop, u_label + " <-> " + v_label);
    if (!seen_bidirected.emplace(std::min(u, v), std::max(u, v)).second) {
      throw Error(ErrorCode::DuplicateEdge, u_label + " <-> " + v_label);
    }
    g.spouses_[u].push_back(v);
    g.spouses_[v].push_back(u);
    g.incident_[u].push_back({v, EdgeKind::Bidirected});
    g.incident_[v].push_back({u, EdgeKind::Bidirected});
  }
  g.directed_count_ = seen_directed.size();
  g.bidirected_count_ = seen_bidirected.size();

  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.parents_[v].begin(), g.parents_[v].end());
    std::sort(g.children_[v].begin(), g.children_[v].end());
    std::sort(g.spouses_[v].begin(), g.spouses_[v].end());
    std::sort(g.incident_[v].begin(), g.incident_[v].end(),
              [](const Incidence& x, const Incidence& y) {
                if (x.other != y.other) return x.other < y.other;
                return kind_rank(x.kind) < kind_rank(y.kind);
              });
  }
  topological_order(g);  // throws on cycles
  return g;
}

std::optional<VertexIndex> MixedGraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexIndex MixedGraph::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw Error(ErrorCode::UnknownVertex, std::string(label));
}

VertexSet MixedGraph::to_set(const std::vector<std::string>& labels) const {
  VertexSet out;
  for (const auto& l : labels) out.insert(index_of(l));
  return out;
}

std::vector<std::string> MixedGraph::labels_of(const VertexSet& set) const {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (VertexIndex v : set) out.push_back(label(v));
  return out;
}

bool MixedGraph::has_directed(VertexIndex from, VertexIndex to) const {
  return contains(children_.at(from), to);
}

bool MixedGraph::has_bidirected(VertexIndex u, VertexIndex v) const {
  return contains(spouses_.at(u), v);
}

bool MixedGraph::adjacent(VertexIndex u, VertexIndex v) const {
  return has_directed(u, v) || has_directed(v, u) || has_bidirected(u, v);
}

std::vector<std::pair<VertexIndex, VertexIndex>> MixedGraph::directed_edges() const {
  std::vector<std::pair<VertexIndex, VertexIndex>> out;
  out.reserve(directed_count_);
  for (VertexIndex u = 0; u < size(); ++u) {
    for (VertexIndex v : children_[u]) out.emplace_back(u, v);
  }
  return out;
}

std::vector<std::pair<VertexIndex, VertexIndex>> MixedGraph::bidirected_edges() const {
  std::vector<std::pair<VertexIndex, VertexIndex>> out;
  out.reserve(bidirected_count_);
  for (VertexIndex u = 0; u < size(); ++u) {
    for (VertexIndex v : spouses_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

VertexSet closure(const MixedGraph& g, const VertexSet& s, bool upward) {
  std::vector<char> seen(g.size(), 0);
  std::deque<VertexIndex> frontier;
  for (VertexIndex v : s) {
    if (v >= g.size()) throw Error(ErrorCode::UnknownVertex, "index " + std::to_string(v));
    frontier.push_back(v);
  }
  while (!frontier.empty()) {
    const VertexIndex v = frontier.front();
    frontier.pop_front();
    for (VertexIndex w : upward ? g.parents(v) : g.children(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        frontier.push_back(w);
      }
    }
  }
  VertexSet out;
  for (VertexIndex v = 0; v < g.size(); ++v) {
    if (seen[v] && !s.contains(v)) out.insert(v);
  }
  return out;
}

}  // namespace

VertexSet relatives(const MixedGraph& g, const VertexSet& s, Relation kind) {
  switch (kind) {
    case Relation::Parents: {
      VertexSet out;
      for (VertexIndex v : s) {
        if (v >= g.size()) throw Error(ErrorCode::UnknownVertex, "index " + std::to_string(v));
        out.insert(g.parents(v).begin(), g.parents(v).end());
      }
      return out;
    }
    case Relation::Ancestors:
      return closure(g, s, true);
    case Relation::AncestorsInclusive: {
      VertexSet out = closure(g, s, true);
      out.insert(s.begin(), s.end());
      return out;
    }
    case Relation::Descendants:
      return closure(g, s, false);
    case Relation::Collaterals: {
      const VertexSet anc = closure(g, s, true);
      const VertexSet des = closure(g, s, false);
      VertexSet out;
      for (VertexIndex v = 0; v < g.size(); ++v) {
        if (!anc.contains(v) && !des.contains(v) && !s.contains(v)) out.insert(v);
      }
      return out;
    }
  }
  return {};
}

std::vector<VertexIndex> topological_order(const MixedGraph& g) {
  std::vector<std::size_t> indegree(g.size());
  std::priority_queue<VertexIndex, std::vector<VertexIndex>, std::greater<>> ready;
  for (VertexIndex v = 0; v < g.size(); ++v) {
    indegree[v] = g.parents(v).size();
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<VertexIndex> order;
  order.reserve(g.size());
  while (!ready.empty()) {
    const VertexIndex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (VertexIndex w : g.children(v)) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (order.size() != g.size()) {
    for (VertexIndex v = 0; v < g.size(); ++v) {
      if (indegree[v] > 0) throw Error(ErrorCode::Cycle, "directed cycle through " + g.label(v));
    }
  }
  return order;
}

void for_each_simple_path(const MixedGraph& g, VertexIndex a, VertexIndex b, std::size_t max_len,
                          const std::function<bool(const Path&)>& visit) {
  if (a >= g.size() || b >= g.size()) throw Error(ErrorCode::UnknownVertex, "path endpoint");
  if (a == b) throw Error(ErrorCode::InvalidQuery, "path endpoints coincide");
  std::vector<char> on_path(g.size(), 0);
  Path current;
  current.vertices.push_back(a);
  on_path[a] = 1;
  bool stop = false;

  std::function<void(VertexIndex)> extend = [&](VertexIndex v) {
    for (const Incidence& inc : g.incident(v)) {
      if (stop) return;
      if (on_path[inc.other]) continue;
      current.vertices.push_back(inc.other);
      current.edges.push_back(inc.kind);
      if (inc.other == b) {
        if (!visit(current)) stop = true;
      } else if (current.length() < max_len) {
        on_path[inc.other] = 1;
        extend(inc.other);
        on_path[inc.other] = 0;
      }
      current.vertices.pop_back();
      current.edges.pop_back();
    }
  };
  if (max_len > 0) extend(a);
}

std::vector<Path> simple_paths(const MixedGraph& g, VertexIndex a, VertexIndex b,
                               std::size_t max_len) {
  std::vector<Path> out;
  for_each_simple_path(g, a, b, max_len, [&](const Path& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

void validate_path(const MixedGraph& g, const Path& p) {
  if (p.edges.empty() || p.vertices.size() != p.edges.size() + 1) {
    throw Error(ErrorCode::InvalidPath, "path needs n+1 vertices for n >= 1 edges");
  }
  std::vector<char> seen(g.size(), 0);
  for (VertexIndex v : p.vertices) {
    if (v >= g.size()) throw Error(ErrorCode::InvalidPath, "vertex out of range");
    if (seen[v]) throw Error(ErrorCode::InvalidPath, "repeated vertex " + g.label(v));
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const VertexIndex u = p.vertices[i];
    const VertexIndex v = p.vertices[i + 1];
    bool ok = false;
    switch (p.edges[i]) {
      case EdgeKind::Forward: ok = g.has_directed(u, v); break;
      case EdgeKind::Backward: ok = g.has_directed(v, u); break;
      case EdgeKind::Bidirected: ok = g.has_bidirected(u, v); break;
    }
    if (!ok) throw Error(ErrorCode::InvalidPath, "no such edge " + g.label(u) + " / " + g.label(v));
  }
}

std::string format_path(const MixedGraph& g, const Path& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (i > 0) {
      switch (p.edges[i - 1]) {
        case EdgeKind::Forward: out << " -> "; break;
        case EdgeKind::Backward: out << " <- "; break;
        case EdgeKind::Bidirected: out << " <-> "; break;
      }
    }
    out << g.label(p.vertices[i]);
  }
  return out.str();
}

}  // namespace seplat
