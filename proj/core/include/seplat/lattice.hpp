#ifndef SEPLAT_LATTICE_HPP
#define SEPLAT_LATTICE_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "seplat/graph.hpp"

// Partitions of 1+1 Minkowski spacetime into unit cells and the causal
// structure they induce.
//
// Diamond cell (i,j) is the half-open square [i,i+1) x [j,j+1) in light-cone
// coordinates (u,v) = (t-x, t+x). Box cell (k,m) is [k,k+1) x [m,m+1) in
// (t,x). The causal past of box (k,m) is
//   PC(k,m) = {(t,x) : t < k+1, m-(k+1-t) < x < m+1+(k+1-t)}
// and the causal past of diamond (i,j) is the quadrant {u < i+1, v < j+1}.
namespace seplat::lattice {

enum class CellKind { Diamond, Box };

const char* to_string(CellKind kind);
CellKind parse_kind(std::string_view text);

struct Cell {
  CellKind kind = CellKind::Diamond;
  int row = 0;  // i (diamond) or k (box)
  int col = 0;  // j (diamond) or m (box)

  // "d(i,j)" or "b(k,m)"
  std::string label() const;
  static Cell parse(std::string_view label);

  auto operator<=>(const Cell&) const = default;
};

inline Cell diamond(int i, int j) { return {CellKind::Diamond, i, j}; }
inline Cell box(int k, int m) { return {CellKind::Box, k, m}; }

// Inclusive bounds on (row, col).
struct Window {
  int row_min = 0;
  int row_max = 0;
  int col_min = 0;
  int col_max = 0;

  bool valid() const { return row_min <= row_max && col_min <= col_max; }
  bool contains(const Cell& c) const {
    return c.row >= row_min && c.row <= row_max && c.col >= col_min && c.col <= col_max;
  }
  std::size_t cell_count() const {
    return valid() ? static_cast<std::size_t>(row_max - row_min + 1) *
                         static_cast<std::size_t>(col_max - col_min + 1)
                   : 0;
  }
  bool operator==(const Window&) const = default;
};

std::vector<Cell> window_cells(CellKind kind, const Window& w);

enum class CausalRelation { PastOf, FutureOf, Spacelike };

const char* to_string(CausalRelation r);

// Relation of a to b for distinct cells of one kind.
CausalRelation causal_relation(const Cell& a, const Cell& b);

// Same-row box neighbours: each cell meets the other's causal past.
bool mutual_past_contact(const Cell& a, const Cell& b);

// Cells reachable from c by a causal curve that enters no third cell.
std::vector<Cell> direct_parents(const Cell& c);
std::vector<Cell> direct_parents(const Cell& c, const Window& w);
// A cell with some direct parent outside the window.
bool is_boundary_cell(const Cell& c, const Window& w);

std::vector<Cell> spouses(const Cell& c);

// One vertex per in-window cell, labelled Cell::label().
MixedGraph build_graph(CellKind kind, const Window& w);

// In-window cells other than c that intersect the causal past of c.
std::vector<Cell> geo_ancestors(const Cell& c, const Window& w);

// A nonempty set of cells of one kind, kept sorted by label.
class Region {
 public:
  explicit Region(std::vector<Cell> cells);
  // "d(0,3)+d(0,4)+d(1,3)"
  static Region parse(std::string_view literal);

  CellKind kind() const { return cells_.front().kind; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool contains(const Cell& c) const;
  std::string literal() const;

 private:
  std::vector<Cell> cells_;
};

std::vector<Cell> sort_by_label(std::vector<Cell> cells);

enum class L3Variant { Quantum, Classical };

const char* to_string(L3Variant v);
L3Variant parse_variant(std::string_view text);

// Every cell of the region lies inside the causal past of a.
bool l1_past(const Region& region, const Cell& a);

// Discrete causal shadow: walking backwards through direct parents from a,
// never stepping onto the region, no boundary cell of the window is reached.
bool l2_shields(const Region& region, const Cell& a, const Window& w);

// Quantum: every cell spacelike to b. Classical: the causal past of the
// region covers the common past of a and b (closed form for diamonds, raster
// test for boxes).
bool l3_region(const Region& region, const Cell& a, const Cell& b, L3Variant variant);

struct ShieldVerdict {
  bool l1 = false;
  bool l2 = false;
  bool l3 = false;
  L3Variant variant = L3Variant::Classical;
  bool shielder_off = false;
};

ShieldVerdict shielder_off(const Region& region, const Cell& a, const Cell& b, L3Variant variant,
                           const Window& w);

inline constexpr std::size_t kDefaultCandidateCap = std::size_t{1} << 20;

// Number of nonempty subsets of at most max_cells elements out of n.
std::size_t candidate_count(std::size_t n, std::size_t max_cells);

// All nonempty subsets of geo_ancestors(a) (minus b) with at most max_cells
// cells, by size and then in lexicographic combination order. Throws
// BudgetExceeded before emitting anything if the count exceeds cap.
void enumerate_shielder_off(const Cell& a, const Cell& b, const Window& w, L3Variant variant,
                            std::size_t max_cells,
                            const std::function<void(const Region&, const ShieldVerdict&)>& emit,
                            std::size_t cap = kDefaultCandidateCap);

// Throws UnknownCell when a cell has no vertex in g.
VertexSet region_to_vertexset(const MixedGraph& g, const Region& region);

}  // namespace seplat::lattice

#endif  // SEPLAT_LATTICE_HPP
