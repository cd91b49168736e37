#include "seplat/separation.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "seplat/error.hpp"

namespace seplat {

namespace {

// Mark left at the vertex we walk away from.
bool head_at_near(EdgeKind k) { return k != EdgeKind::Forward; }
// Mark left at the vertex we walk into.
bool head_at_far(EdgeKind k) { return k != EdgeKind::Backward; }

void check_query(const MixedGraph& g, const SeparationQuery& q) {
  if (q.a >= g.size() || q.b >= g.size()) throw Error(ErrorCode::UnknownVertex, "query endpoint");
  if (q.a == q.b) throw Error(ErrorCode::InvalidQuery, "a == b");
  for (VertexIndex c : q.cond) {
    if (c >= g.size()) throw Error(ErrorCode::UnknownVertex, "conditioning vertex");
  }
  if (q.cond.contains(q.a) || q.cond.contains(q.b)) {
    throw Error(ErrorCode::InvalidQuery, "endpoint inside conditioning set");
  }
}

std::vector<char> collider_mask(const MixedGraph& g, const VertexSet& cond,
                                ColliderConvention convention) {
  const Relation r = convention == ColliderConvention::Inclusive ? Relation::AncestorsInclusive
                                                                 : Relation::Ancestors;
  std::vector<char> mask(g.size(), 0);
  for (VertexIndex v : relatives(g, cond, r)) mask[v] = 1;
  return mask;
}

std::vector<char> member_mask(const MixedGraph& g, const VertexSet& s) {
  std::vector<char> mask(g.size(), 0);
  for (VertexIndex v : s) mask[v] = 1;
  return mask;
}

bool passable(bool in_head, bool out_head, bool in_cond, bool in_collider_set) {
  return (in_head && out_head) ? in_collider_set : !in_cond;
}

// Search for a simple connecting path, extending only unblocked prefixes.
std::optional<Path> find_connecting_path(const MixedGraph& g, const SeparationQuery& q,
                                         const std::vector<char>& in_cond,
                                         const std::vector<char>& colliders) {
  std::vector<char> on_path(g.size(), 0);
  Path current;
  current.vertices.push_back(q.a);
  on_path[q.a] = 1;
  std::optional<Path> found;

  std::function<void(VertexIndex)> extend = [&](VertexIndex v) {
    for (const Incidence& inc : g.incident(v)) {
      if (found) return;
      if (on_path[inc.other]) continue;
      if (v != q.a) {
        const bool in_head = head_at_far(current.edges.back());
        if (!passable(in_head, head_at_near(inc.kind), in_cond[v], colliders[v])) continue;
      }
      current.vertices.push_back(inc.other);
      current.edges.push_back(inc.kind);
      if (inc.other == q.b) {
        found = current;
      } else {
        on_path[inc.other] = 1;
        extend(inc.other);
        on_path[inc.other] = 0;
      }
      current.vertices.pop_back();
      current.edges.pop_back();
    }
  };
  extend(q.a);
  return found;
}

}  // namespace

bool path_is_connecting(const MixedGraph& g, const Path& p, const VertexSet& cond,
                        ColliderConvention convention) {
  validate_path(g, p);
  if (cond.contains(p.vertices.front()) || cond.contains(p.vertices.back())) {
    throw Error(ErrorCode::InvalidQuery, "path endpoint inside conditioning set");
  }
  const auto colliders = collider_mask(g, cond, convention);
  for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
    const VertexIndex v = p.vertices[i];
    const bool collider = head_at_far(p.edges[i - 1]) && head_at_near(p.edges[i]);
    if (collider ? !colliders[v] : cond.contains(v)) return false;
  }
  return true;
}

SeparationVerdict is_separated_oracle(const MixedGraph& g, const SeparationQuery& q) {
  check_query(g, q);
  const auto colliders = collider_mask(g, q.cond, q.convention);
  const auto in_cond = member_mask(g, q.cond);
  SeparationVerdict verdict{true, std::nullopt};

  std::vector<char> on_path(g.size(), 0);
  Path current;
  current.vertices.push_back(q.a);
  on_path[q.a] = 1;
  const std::size_t max_len = g.size() - 1;

  // Plain enumeration; a prefix with a blocked interior vertex cannot be
  // completed into a connecting path, so it is dropped early.
  std::function<void(VertexIndex)> extend = [&](VertexIndex v) {
    for (const Incidence& inc : g.incident(v)) {
      if (verdict.witness) return;
      if (on_path[inc.other]) continue;
      if (current.length() > 0) {
        const bool collider = head_at_far(current.edges.back()) && head_at_near(inc.kind);
        if (collider ? !colliders[v] : in_cond[v]) continue;
      }
      current.vertices.push_back(inc.other);
      current.edges.push_back(inc.kind);
      if (inc.other == q.b) {
        if (path_is_connecting(g, current, q.cond, q.convention)) verdict.witness = current;
      } else if (current.length() < max_len) {
        on_path[inc.other] = 1;
        extend(inc.other);
        on_path[inc.other] = 0;
      }
      current.vertices.pop_back();
      current.edges.pop_back();
    }
  };
  extend(q.a);
  verdict.separated = !verdict.witness.has_value();
  return verdict;
}

SeparationVerdict is_separated(const MixedGraph& g, const SeparationQuery& q) {
  check_query(g, q);
  const auto colliders = collider_mask(g, q.cond, q.convention);
  const auto in_cond = member_mask(g, q.cond);

  // State = 2 * vertex + (arrived with an arrowhead ? 1 : 0).
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  const std::size_t n_states = 2 * g.size();
  std::vector<std::size_t> came_from(n_states, kNone);
  std::vector<EdgeKind> came_by(n_states, EdgeKind::Forward);
  std::vector<char> visited(n_states, 0);
  std::deque<std::size_t> frontier;
  std::size_t hit = kNone;

  auto push = [&](std::size_t from, VertexIndex to, EdgeKind kind) {
    const std::size_t s = 2 * to + (head_at_far(kind) ? 1 : 0);
    if (visited[s]) return;
    visited[s] = 1;
    came_from[s] = from;
    came_by[s] = kind;
    if (to == q.b && hit == kNone) hit = s;
    frontier.push_back(s);
  };

  const std::size_t origin = n_states;  // sentinel predecessor
  for (const Incidence& inc : g.incident(q.a)) push(origin, inc.other, inc.kind);
  while (!frontier.empty() && hit == kNone) {
    const std::size_t s = frontier.front();
    frontier.pop_front();
    const VertexIndex v = s / 2;
    if (v == q.b) continue;
    const bool in_head = (s % 2) == 1;
    for (const Incidence& inc : g.incident(v)) {
      if (inc.other == q.a) continue;
      if (!passable(in_head, head_at_near(inc.kind), in_cond[v], colliders[v])) continue;
      push(s, inc.other, inc.kind);
    }
  }

  if (hit == kNone) return {true, std::nullopt};

  Path walk;
  for (std::size_t s = hit; s != origin; s = came_from[s]) {
    walk.vertices.push_back(s / 2);
    walk.edges.push_back(came_by[s]);
  }
  walk.vertices.push_back(q.a);
  std::reverse(walk.vertices.begin(), walk.vertices.end());
  std::reverse(walk.edges.begin(), walk.edges.end());

  std::vector<char> seen(g.size(), 0);
  bool simple = true;
  for (VertexIndex v : walk.vertices) {
    if (seen[v]) simple = false;
    seen[v] = 1;
  }
  if (simple) return {false, std::move(walk)};
  // A shortest connecting walk that revisits a vertex; recover a simple path.
  auto path = find_connecting_path(g, q, in_cond, colliders);
  if (!path) throw std::logic_error("reachability found a connecting walk but no simple path");
  return {false, std::move(path)};
}

std::optional<VertexSet> minimal_separator(const MixedGraph& g, VertexIndex a, VertexIndex b) {
  if (a >= g.size() || b >= g.size()) throw Error(ErrorCode::UnknownVertex, "query endpoint");
  if (a == b) throw Error(ErrorCode::InvalidQuery, "a == b");
  if (g.adjacent(a, b)) {
    throw Error(ErrorCode::AdjacentVertices, g.label(a) + " and " + g.label(b));
  }
  VertexSet current = relatives(g, {a, b}, Relation::AncestorsInclusive);
  current.erase(a);
  current.erase(b);
  if (!is_separated(g, {a, b, current}).separated) return std::nullopt;

  for (bool changed = true; changed;) {
    changed = false;
    const VertexSet snapshot = current;
    for (VertexIndex v : snapshot) {
      VertexSet trial = current;
      trial.erase(v);
      if (is_separated(g, {a, b, trial}).separated) {
        current = std::move(trial);
        changed = true;
      }
    }
  }
  return current;
}

bool is_graph_shielder_off_set(const MixedGraph& g, VertexIndex a, VertexIndex b,
                               const VertexSet& cond) {
  if (a >= g.size() || b >= g.size()) throw Error(ErrorCode::UnknownVertex, "query endpoint");
  if (cond.contains(a) || cond.contains(b)) {
    throw Error(ErrorCode::InvalidQuery, "endpoint inside conditioning set");
  }
  const VertexSet anc_a = relatives(g, {a}, Relation::Ancestors);
  const VertexSet anc_b = relatives(g, {b}, Relation::Ancestors);
  if (a == b || anc_a.contains(b) || anc_b.contains(a)) {
    throw Error(ErrorCode::NotCollateral, g.label(a) + " and " + g.label(b));
  }
  for (VertexIndex c : cond) {
    if (!anc_a.contains(c)) return false;
  }
  // Walk up from a without entering cond; any common ancestor reached this
  // way has a directed path to a that avoids cond.
  std::vector<char> seen(g.size(), 0);
  std::deque<VertexIndex> frontier{a};
  while (!frontier.empty()) {
    const VertexIndex v = frontier.front();
    frontier.pop_front();
    for (VertexIndex p : g.parents(v)) {
      if (seen[p] || cond.contains(p)) continue;
      if (anc_b.contains(p)) return false;
      seen[p] = 1;
      frontier.push_back(p);
    }
  }
  return true;
}

TheoremReport verify_separation_theorem(const MixedGraph& g, VertexIndex a, VertexIndex b,
                                        const std::vector<VertexSet>& candidates) {
  TheoremReport report;
  report.rows.reserve(candidates.size());
  for (const VertexSet& c : candidates) {
    TheoremRow row;
    row.candidate = c;
    row.shielder_off = is_graph_shielder_off_set(g, a, b, c);
    row.verdict = is_separated(g, {a, b, c});
    if (row.shielder_off) ++report.shielder_off_count;
    if (row.verdict.separated) ++report.separated_count;
    if (row.shielder_off && !row.verdict.separated) {
      report.counterexamples.push_back(report.rows.size());
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace seplat
