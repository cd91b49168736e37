#include "seplat/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <set>

#include "seplat/error.hpp"

namespace seplat::lattice {

const char* to_string(CellKind kind) { return kind == CellKind::Diamond ? "diamond" : "box"; }

CellKind parse_kind(std::string_view text) {
  if (text == "diamond") return CellKind::Diamond;
  if (text == "box") return CellKind::Box;
  throw Error(ErrorCode::Parse, "unknown lattice kind '" + std::string(text) + "'");
}

std::string Cell::label() const {
  return std::string(kind == CellKind::Diamond ? "d(" : "b(") + std::to_string(row) + "," +
         std::to_string(col) + ")";
}

Cell Cell::parse(std::string_view label) {
  auto fail = [&] { throw Error(ErrorCode::Parse, "bad cell label '" + std::string(label) + "'"); };
  if (label.size() < 6 || label[1] != '(' || label.back() != ')') fail();
  Cell c;
  if (label[0] == 'd') {
    c.kind = CellKind::Diamond;
  } else if (label[0] == 'b') {
    c.kind = CellKind::Box;
  } else {
    fail();
  }
  const std::string_view body = label.substr(2, label.size() - 3);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) fail();
  auto parse_int = [&](std::string_view s, int& out) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) fail();
  };
  parse_int(body.substr(0, comma), c.row);
  parse_int(body.substr(comma + 1), c.col);
  return c;
}

std::vector<Cell> window_cells(CellKind kind, const Window& w) {
  std::vector<Cell> out;
  if (!w.valid()) return out;
  for (int r = w.row_min; r <= w.row_max; ++r) {
    for (int c = w.col_min; c <= w.col_max; ++c) out.push_back({kind, r, c});
  }
  return out;
}

const char* to_string(CausalRelation r) {
  switch (r) {
    case CausalRelation::PastOf: return "past_of_b";
    case CausalRelation::FutureOf: return "future_of_b";
    case CausalRelation::Spacelike: return "spacelike";
  }
  return "?";
}

namespace {

void require_same_kind(const Cell& a, const Cell& b) {
  if (a.kind != b.kind) throw Error(ErrorCode::KindMismatch, a.label() + " vs " + b.label());
}

// Cell a meets the causal past of cell b.
bool meets_past(const Cell& a, const Cell& b) {
  if (a.kind == CellKind::Diamond) return a.row <= b.row && a.col <= b.col;
  const int dt = b.row - a.row;
  if (dt < 0) return false;
  return std::abs(a.col - b.col) <= dt + 1;
}

// Cell a lies entirely inside the causal past of cell b.
bool inside_past(const Cell& a, const Cell& b) {
  if (a.kind == CellKind::Diamond) return a.row <= b.row && a.col <= b.col;
  const int dt = b.row - a.row;
  return dt >= 0 && std::abs(a.col - b.col) <= dt;
}

}  // namespace

CausalRelation causal_relation(const Cell& a, const Cell& b) {
  require_same_kind(a, b);
  if (a == b) throw Error(ErrorCode::InvalidQuery, "causal relation of a cell with itself");
  if (a.kind == CellKind::Diamond) {
    if (a.row <= b.row && a.col <= b.col) return CausalRelation::PastOf;
    if (a.row >= b.row && a.col >= b.col) return CausalRelation::FutureOf;
    return CausalRelation::Spacelike;
  }
  // Same-row boxes only touch each other's pasts mutually; that is spacelike.
  if (a.row < b.row && meets_past(a, b)) return CausalRelation::PastOf;
  if (b.row < a.row && meets_past(b, a)) return CausalRelation::FutureOf;
  return CausalRelation::Spacelike;
}

bool mutual_past_contact(const Cell& a, const Cell& b) {
  require_same_kind(a, b);
  return a.kind == CellKind::Box && a.row == b.row && std::abs(a.col - b.col) == 1;
}

std::vector<Cell> direct_parents(const Cell& c) {
  if (c.kind == CellKind::Diamond) {
    return {diamond(c.row - 1, c.col - 1), diamond(c.row - 1, c.col), diamond(c.row, c.col - 1)};
  }
  return {box(c.row - 1, c.col - 1), box(c.row - 1, c.col), box(c.row - 1, c.col + 1)};
}

std::vector<Cell> direct_parents(const Cell& c, const Window& w) {
  std::vector<Cell> out;
  for (const Cell& p : direct_parents(c)) {
    if (w.contains(p)) out.push_back(p);
  }
  return out;
}

bool is_boundary_cell(const Cell& c, const Window& w) {
  return std::ranges::any_of(direct_parents(c), [&](const Cell& p) { return !w.contains(p); });
}

std::vector<Cell> spouses(const Cell& c) {
  if (c.kind == CellKind::Diamond) return {};
  return {box(c.row, c.col - 1), box(c.row, c.col + 1)};
}

MixedGraph build_graph(CellKind kind, const Window& w) {
  std::vector<std::string> vertices;
  std::vector<LabelPair> directed;
  std::vector<LabelPair> bidirected;
  for (const Cell& c : window_cells(kind, w)) {
    vertices.push_back(c.label());
    for (const Cell& p : direct_parents(c, w)) directed.emplace_back(p.label(), c.label());
    for (const Cell& s : spouses(c)) {
      if (w.contains(s) && c < s) bidirected.emplace_back(c.label(), s.label());
    }
  }
  return MixedGraph::build(std::move(vertices), directed, bidirected);
}

std::vector<Cell> geo_ancestors(const Cell& c, const Window& w) {
  std::vector<Cell> out;
  for (const Cell& x : window_cells(c.kind, w)) {
    if (x != c && meets_past(x, c)) out.push_back(x);
  }
  return out;
}

std::vector<Cell> sort_by_label(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end(),
            [](const Cell& x, const Cell& y) { return x.label() < y.label(); });
  return cells;
}

Region::Region(std::vector<Cell> cells) : cells_(sort_by_label(std::move(cells))) {
  if (cells_.empty()) throw Error(ErrorCode::InvalidQuery, "empty region");
  for (const Cell& c : cells_) require_same_kind(cells_.front(), c);
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

Region Region::parse(std::string_view literal) {
  std::vector<Cell> cells;
  std::size_t start = 0;
  while (start <= literal.size()) {
    const auto plus = literal.find('+', start);
    const auto end = plus == std::string_view::npos ? literal.size() : plus;
    cells.push_back(Cell::parse(literal.substr(start, end - start)));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return Region(std::move(cells));
}

bool Region::contains(const Cell& c) const {
  return std::find(cells_.begin(), cells_.end(), c) != cells_.end();
}

std::string Region::literal() const {
  std::string out;
  for (const Cell& c : cells_) {
    if (!out.empty()) out += '+';
    out += c.label();
  }
  return out;
}

const char* to_string(L3Variant v) { return v == L3Variant::Quantum ? "l3q" : "l3c"; }

L3Variant parse_variant(std::string_view text) {
  if (text == "l3q" || text == "L3Q") return L3Variant::Quantum;
  if (text == "l3c" || text == "L3C") return L3Variant::Classical;
  throw Error(ErrorCode::Parse, "unknown L3 variant '" + std::string(text) + "'");
}

bool l1_past(const Region& region, const Cell& a) {
  return std::ranges::all_of(region.cells(), [&](const Cell& c) {
    require_same_kind(c, a);
    return c != a && inside_past(c, a);
  });
}

bool l2_shields(const Region& region, const Cell& a, const Window& w) {
  require_same_kind(region.cells().front(), a);
  std::set<Cell> seen{a};
  std::deque<Cell> frontier{a};
  while (!frontier.empty()) {
    const Cell c = frontier.front();
    frontier.pop_front();
    if (is_boundary_cell(c, w)) return false;
    for (const Cell& p : direct_parents(c)) {
      if (region.contains(p) || !seen.insert(p).second) continue;
      frontier.push_back(p);
    }
  }
  return true;
}

namespace {

bool in_box_past(const Cell& c, double t, double x) {
  const double reach = c.row + 1 - t;
  return reach > 0 && x > c.col - reach && x < c.col + 1 + reach;
}

// Region boundaries sit on t = n and x +- t = n; samples at quarter steps
// offset by (1/16, 1/8) never land on them.
bool box_covers_common_past(const Region& region, const Cell& a, const Cell& b) {
  int lowest = region.cells().front().row;
  for (const Cell& c : region.cells()) lowest = std::min(lowest, c.row);
  const double apex_time = std::min(a.row, b.row) + 1;
  for (double t = lowest - 2 + 1.0 / 16; t < apex_time; t += 0.25) {
    const double reach_a = a.row + 1 - t;
    const double reach_b = b.row + 1 - t;
    const double lo = std::max(a.col - reach_a, b.col - reach_b);
    const double hi = std::min(a.col + 1 + reach_a, b.col + 1 + reach_b);
    if (lo >= hi) continue;
    for (double x = std::floor(lo * 4) / 4 + 1.0 / 8; x < hi; x += 0.25) {
      if (x <= lo) continue;
      const bool covered = std::ranges::any_of(
          region.cells(), [&](const Cell& c) { return in_box_past(c, t, x); });
      if (!covered) return false;
    }
  }
  return true;
}

}  // namespace

bool l3_region(const Region& region, const Cell& a, const Cell& b, L3Variant variant) {
  require_same_kind(a, b);
  for (const Cell& c : region.cells()) require_same_kind(c, a);
  if (a == b || causal_relation(a, b) != CausalRelation::Spacelike) {
    throw Error(ErrorCode::NotSpacelike, a.label() + " and " + b.label());
  }
  if (variant == L3Variant::Quantum) {
    return std::ranges::all_of(region.cells(), [&](const Cell& c) {
      return c != b && causal_relation(c, b) == CausalRelation::Spacelike;
    });
  }
  if (a.kind == CellKind::Diamond) {
    const int i0 = std::min(a.row, b.row);
    const int j0 = std::min(a.col, b.col);
    return std::ranges::any_of(region.cells(),
                               [&](const Cell& c) { return c.row >= i0 && c.col >= j0; });
  }
  return box_covers_common_past(region, a, b);
}

ShieldVerdict shielder_off(const Region& region, const Cell& a, const Cell& b, L3Variant variant,
                           const Window& w) {
  if (region.contains(a) || region.contains(b)) {
    throw Error(ErrorCode::InvalidQuery, "region contains a probe cell");
  }
  ShieldVerdict v;
  v.variant = variant;
  v.l3 = l3_region(region, a, b, variant);
  v.l1 = l1_past(region, a);
  v.l2 = l2_shields(region, a, w);
  v.shielder_off = v.l1 && v.l2 && v.l3;
  return v;
}

std::size_t candidate_count(std::size_t n, std::size_t max_cells) {
  std::size_t total = 0;
  std::size_t binom = 1;  // C(n, s)
  for (std::size_t s = 1; s <= std::min(n, max_cells); ++s) {
    binom = binom * (n - s + 1) / s;
    total += binom;
    if (total > (std::size_t{1} << 62)) break;
  }
  return total;
}

void enumerate_shielder_off(const Cell& a, const Cell& b, const Window& w, L3Variant variant,
                            std::size_t max_cells,
                            const std::function<void(const Region&, const ShieldVerdict&)>& emit,
                            std::size_t cap) {
  require_same_kind(a, b);
  if (a == b || causal_relation(a, b) != CausalRelation::Spacelike) {
    throw Error(ErrorCode::NotSpacelike, a.label() + " and " + b.label());
  }
  std::vector<Cell> pool;
  for (const Cell& c : geo_ancestors(a, w)) {
    if (c != b) pool.push_back(c);
  }
  pool = sort_by_label(std::move(pool));
  const std::size_t total = candidate_count(pool.size(), max_cells);
  if (total > cap) {
    throw Error(ErrorCode::BudgetExceeded, std::to_string(total) + " candidate regions exceed cap " +
                                               std::to_string(cap));
  }
  const std::size_t n = pool.size();
  for (std::size_t size = 1; size <= std::min(n, max_cells); ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<Cell> cells;
      cells.reserve(size);
      for (std::size_t i : pick) cells.push_back(pool[i]);
      const Region region(std::move(cells));
      emit(region, shielder_off(region, a, b, variant, w));
      // next combination
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t k = i; k < size; ++k) pick[k] = pick[k - 1] + 1;
    }
  }
}

VertexSet region_to_vertexset(const MixedGraph& g, const Region& region) {
  VertexSet out;
  for (const Cell& c : region.cells()) {
    const auto v = g.find(c.label());
    if (!v) throw Error(ErrorCode::UnknownCell, c.label());
    out.insert(*v);
  }
  return out;
}

}  // namespace seplat::lattice
