#include <gtest/gtest.h>

#include <algorithm>

#include "seplat/error.hpp"
#include "seplat/lattice.hpp"
#include "seplat/separation.hpp"
#include "seplat/sweep.hpp"
#include "test_support.hpp"

namespace seplat::lattice {
namespace {

const Window kDiamondFixture{0, 5, 0, 5};
const Window kBoxFixture{0, 5, 0, 8};

std::vector<Cell> diamonds(std::initializer_list<std::pair<int, int>> coords) {
  std::vector<Cell> out;
  for (auto [i, j] : coords) out.push_back(diamond(i, j));
  return out;
}

std::vector<Cell> boxes(std::initializer_list<std::pair<int, int>> coords) {
  std::vector<Cell> out;
  for (auto [k, m] : coords) out.push_back(box(k, m));
  return out;
}

std::vector<Cell> sorted(std::vector<Cell> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(Cell, LabelsRoundTrip) {
  EXPECT_EQ(diamond(1, 4).label(), "d(1,4)");
  EXPECT_EQ(box(2, -1).label(), "b(2,-1)");
  EXPECT_EQ(Cell::parse("b(2,-1)"), box(2, -1));
  EXPECT_EQ(Cell::parse("d(10,3)"), diamond(10, 3));
  EXPECT_THROW(Cell::parse("x(1,2)"), Error);
  EXPECT_THROW(Cell::parse("d(1,2"), Error);
  EXPECT_THROW(Cell::parse("d(1,,2)"), Error);
}

TEST(CausalRelation, Examples) {
  EXPECT_EQ(causal_relation(diamond(0, 1), diamond(1, 0)), CausalRelation::Spacelike);
  EXPECT_EQ(causal_relation(diamond(0, 1), diamond(1, 1)), CausalRelation::PastOf);
  EXPECT_EQ(causal_relation(diamond(1, 1), diamond(0, 1)), CausalRelation::FutureOf);
  EXPECT_EQ(causal_relation(box(2, 0), box(3, 4)), CausalRelation::Spacelike);
  EXPECT_EQ(causal_relation(box(2, 1), box(3, 2)), CausalRelation::PastOf);
  EXPECT_EQ(causal_relation(box(3, 1), box(3, 2)), CausalRelation::Spacelike);
  EXPECT_TRUE(mutual_past_contact(box(3, 1), box(3, 2)));
  EXPECT_FALSE(mutual_past_contact(box(3, 2), box(3, 4)));
}

TEST(CausalRelation, Errors) {
  try {
    causal_relation(diamond(0, 0), box(1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::KindMismatch);
  }
}

// Closed forms against point sampling of the half-open cells.
TEST(CausalRelation, AgreesWithSampledGeometry) {
  for (CellKind kind : {CellKind::Diamond, CellKind::Box}) {
    const auto cells = window_cells(kind, {0, 4, 0, 4});
    for (const Cell& a : cells) {
      for (const Cell& b : cells) {
        if (a == b) continue;
        const bool a_meets = testing::sampled_meets_past(a, b);
        const bool b_meets = testing::sampled_meets_past(b, a);
        CausalRelation expected = CausalRelation::Spacelike;
        if (a_meets && !b_meets) expected = CausalRelation::PastOf;
        if (b_meets && !a_meets) expected = CausalRelation::FutureOf;
        ASSERT_EQ(causal_relation(a, b), expected) << a.label() << " vs " << b.label();
        ASSERT_EQ(causal_relation(b, a) == CausalRelation::PastOf,
                  causal_relation(a, b) == CausalRelation::FutureOf);
        ASSERT_EQ(mutual_past_contact(a, b), a_meets && b_meets);
      }
    }
  }
}

TEST(DirectParents, Examples) {
  EXPECT_EQ(sorted(direct_parents(diamond(2, 2))), sorted(diamonds({{1, 2}, {2, 1}, {1, 1}})));
  EXPECT_EQ(sorted(direct_parents(box(3, 0))), sorted(boxes({{2, -1}, {2, 0}, {2, 1}})));
  EXPECT_TRUE(direct_parents(diamond(0, 0), kDiamondFixture).empty());
  EXPECT_TRUE(is_boundary_cell(diamond(0, 0), kDiamondFixture));
  EXPECT_TRUE(is_boundary_cell(diamond(3, 0), kDiamondFixture));
  EXPECT_FALSE(is_boundary_cell(diamond(1, 1), kDiamondFixture));
  EXPECT_TRUE(is_boundary_cell(box(3, 0), kBoxFixture));
  EXPECT_FALSE(is_boundary_cell(box(3, 1), kBoxFixture));
}

TEST(Spouses, Examples) {
  EXPECT_EQ(sorted(spouses(box(3, 2))), sorted(boxes({{3, 1}, {3, 3}})));
  EXPECT_TRUE(spouses(diamond(1, 1)).empty());
}

TEST(BuildGraph, Counts) {
  const MixedGraph d3 = build_graph(CellKind::Diamond, {0, 2, 0, 2});
  EXPECT_EQ(d3.size(), 9u);
  EXPECT_EQ(d3.directed_count(), 16u);
  EXPECT_EQ(d3.bidirected_count(), 0u);
  const MixedGraph b3 = build_graph(CellKind::Box, {0, 2, 0, 2});
  EXPECT_EQ(b3.size(), 9u);
  EXPECT_EQ(b3.directed_count(), 14u);
  EXPECT_EQ(b3.bidirected_count(), 6u);
  const MixedGraph d1 = build_graph(CellKind::Diamond, {0, 0, 0, 0});
  EXPECT_EQ(d1.size(), 1u);
  EXPECT_EQ(d1.directed_count() + d1.bidirected_count(), 0u);
  EXPECT_TRUE(b3.has_bidirected(b3.index_of("b(1,0)"), b3.index_of("b(1,1)")));
  EXPECT_TRUE(b3.has_directed(b3.index_of("b(0,0)"), b3.index_of("b(1,1)")));
}

TEST(GeoAncestors, Examples) {
  const auto anc = geo_ancestors(diamond(1, 4), kDiamondFixture);
  EXPECT_EQ(anc.size(), 9u);
  for (const Cell& c : anc) EXPECT_TRUE(c.row <= 1 && c.col <= 4);
  EXPECT_TRUE(geo_ancestors(diamond(0, 0), kDiamondFixture).empty());
  const auto box_anc = geo_ancestors(box(3, 0), kBoxFixture);
  EXPECT_NE(std::find(box_anc.begin(), box_anc.end(), box(2, 2)), box_anc.end());
}

TEST(GeoAncestors, DiamondGraphAncestorsMatch) {
  const MixedGraph g = build_graph(CellKind::Diamond, kDiamondFixture);
  for (const Cell& c : window_cells(CellKind::Diamond, kDiamondFixture)) {
    const auto geo = geo_ancestors(c, kDiamondFixture);
    const VertexSet graph = relatives(g, {g.index_of(c.label())}, Relation::Ancestors);
    VertexSet expected;
    for (const Cell& a : geo) expected.insert(g.index_of(a.label()));
    ASSERT_EQ(graph, expected) << c.label();
  }
}

TEST(GeoAncestors, BoxGraphAncestorsAreAStrictSubset) {
  const MixedGraph g = build_graph(CellKind::Box, kBoxFixture);
  bool strict_somewhere = false;
  for (const Cell& c : window_cells(CellKind::Box, kBoxFixture)) {
    VertexSet geo;
    for (const Cell& a : geo_ancestors(c, kBoxFixture)) geo.insert(g.index_of(a.label()));
    const VertexSet graph = relatives(g, {g.index_of(c.label())}, Relation::Ancestors);
    ASSERT_TRUE(std::includes(geo.begin(), geo.end(), graph.begin(), graph.end())) << c.label();
    strict_somewhere = strict_somewhere || graph.size() < geo.size();
  }
  EXPECT_TRUE(strict_somewhere);
  const VertexSet anc30 = relatives(g, {g.index_of("b(3,0)")}, Relation::Ancestors);
  EXPECT_FALSE(anc30.contains(g.index_of("b(2,2)")));
}

TEST(Region, ParseAndOrder) {
  const Region r = Region::parse("d(1,3)+d(0,4)+d(0,3)");
  EXPECT_EQ(r.literal(), "d(0,3)+d(0,4)+d(1,3)");
  EXPECT_EQ(r.size(), 3u);
  EXPECT_TRUE(r.contains(diamond(0, 4)));
  EXPECT_THROW(Region::parse(""), Error);
  EXPECT_THROW(Region::parse("d(0,3)+b(0,4)"), Error);
  EXPECT_THROW(Region(std::vector<Cell>{}), Error);
}

TEST(L1, Examples) {
  EXPECT_TRUE(l1_past(Region(diamonds({{0, 3}, {0, 4}, {1, 3}})), diamond(1, 4)));
  EXPECT_FALSE(l1_past(Region(diamonds({{2, 3}})), diamond(1, 4)));
  EXPECT_FALSE(l1_past(Region(boxes({{2, 2}})), box(3, 0)));
  EXPECT_TRUE(l1_past(Region(boxes({{2, 1}, {1, 2}})), box(3, 0)));
  EXPECT_THROW(l1_past(Region(boxes({{2, 2}})), diamond(3, 0)), Error);
}

TEST(L1, BoxAgreesWithSampledContainment) {
  const Cell a = box(4, 4);
  for (const Cell& c : window_cells(CellKind::Box, {0, 5, 0, 8})) {
    if (c == a) continue;
    bool inside = true;
    for (int p = 0; p < 16 && inside; ++p) {
      for (int q = 0; q < 16 && inside; ++q) {
        inside = testing::point_in_past(a, c.row + (p + 0.37) / 16, c.col + (q + 0.61) / 16);
      }
    }
    ASSERT_EQ(l1_past(Region({c}), a), inside) << c.label();
  }
}

TEST(L2, Examples) {
  const Cell a = diamond(1, 4);
  EXPECT_TRUE(l2_shields(Region(diamonds({{0, 3}, {0, 4}, {1, 3}})), a, kDiamondFixture));
  EXPECT_TRUE(l2_shields(Region(diamonds({{0, 4}, {0, 3}, {0, 2}, {1, 2}})), a, kDiamondFixture));
  EXPECT_FALSE(l2_shields(Region(diamonds({{1, 3}})), a, kDiamondFixture));
  EXPECT_FALSE(l2_shields(Region(diamonds({{0, 0}, {0, 1}, {1, 0}})), a, kDiamondFixture));
}

TEST(L2, ParentsAlwaysShieldInteriorCells) {
  for (CellKind kind : {CellKind::Diamond, CellKind::Box}) {
    const Window w = kind == CellKind::Diamond ? kDiamondFixture : kBoxFixture;
    for (const Cell& c : window_cells(kind, w)) {
      if (is_boundary_cell(c, w)) continue;
      ASSERT_TRUE(l2_shields(Region(direct_parents(c)), c, w)) << c.label();
    }
  }
}

TEST(L3, Examples) {
  const Cell a = diamond(1, 4), b = diamond(4, 1);
  EXPECT_TRUE(l3_region(Region(diamonds({{1, 3}})), a, b, L3Variant::Classical));
  EXPECT_FALSE(l3_region(Region(diamonds({{0, 0}, {0, 1}, {1, 0}})), a, b, L3Variant::Classical));
  EXPECT_TRUE(l3_region(Region(diamonds({{1, 3}})), a, b, L3Variant::Quantum));
  EXPECT_FALSE(l3_region(Region(diamonds({{0, 0}})), a, b, L3Variant::Quantum));
  try {
    l3_region(Region(diamonds({{0, 0}})), diamond(1, 1), diamond(2, 2), L3Variant::Classical);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSpacelike);
  }
}

TEST(L3, DiamondClosedFormAgreesWithRaster) {
  const Cell a = diamond(1, 4), b = diamond(4, 1);
  const auto pool = geo_ancestors(a, kDiamondFixture);
  for (std::size_t mask = 1; mask < (std::size_t{1} << pool.size()); ++mask) {
    std::vector<Cell> cells;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (mask & (std::size_t{1} << k)) cells.push_back(pool[k]);
    }
    ASSERT_EQ(l3_region(Region(cells), a, b, L3Variant::Classical),
              testing::diamond_l3c_raster(cells, a, b))
        << Region(cells).literal();
  }
}

TEST(L3, BoxClassicalExamples) {
  const Cell a = box(4, 2), b = box(4, 6);
  // The common past is the triangle 1+t < x < 8-t with apex at t = 3.5.
  EXPECT_TRUE(l3_region(Region(boxes({{3, 3}})), a, b, L3Variant::Classical));
  EXPECT_TRUE(l3_region(Region(boxes({{3, 4}})), a, b, L3Variant::Classical));
  EXPECT_FALSE(l3_region(Region(boxes({{3, 2}})), a, b, L3Variant::Classical));
  EXPECT_FALSE(l3_region(Region(boxes({{2, 3}, {2, 4}, {2, 5}})), a, b, L3Variant::Classical));
  EXPECT_FALSE(l3_region(Region(boxes({{1, 4}})), a, b, L3Variant::Classical));
}

TEST(ShielderOff, Examples) {
  const Cell a = diamond(1, 4), b = diamond(4, 1);
  const auto par = shielder_off(Region(direct_parents(a)), a, b, L3Variant::Classical,
                                kDiamondFixture);
  EXPECT_TRUE(par.l1 && par.l2 && par.l3 && par.shielder_off);
  EXPECT_TRUE(shielder_off(Region(diamonds({{0, 4}, {0, 3}, {0, 2}, {1, 2}})), a, b,
                           L3Variant::Classical, kDiamondFixture)
                  .shielder_off);
  const auto deep = shielder_off(Region(diamonds({{0, 0}, {0, 1}, {1, 0}})), a, b,
                                 L3Variant::Classical, kDiamondFixture);
  EXPECT_TRUE(deep.l1);
  EXPECT_FALSE(deep.l2);
  EXPECT_FALSE(deep.l3);
  EXPECT_FALSE(deep.shielder_off);
}

TEST(Enumerate, DiamondFixtureCounts) {
  const Cell a = diamond(1, 4), b = diamond(4, 1);
  std::size_t total = 0, classical = 0;
  bool staircase = false;
  std::vector<std::string> classical_sets;
  enumerate_shielder_off(a, b, kDiamondFixture, L3Variant::Classical, 9,
                         [&](const Region& r, const ShieldVerdict& v) {
                           ++total;
                           if (!v.shielder_off) return;
                           ++classical;
                           classical_sets.push_back(r.literal());
                           staircase = staircase ||
                                       r.literal() == "d(0,2)+d(0,3)+d(0,4)+d(1,2)";
                         });
  EXPECT_EQ(total, 511u);
  EXPECT_EQ(classical, 84u);
  EXPECT_TRUE(staircase);

  std::size_t quantum = 0;
  enumerate_shielder_off(a, b, kDiamondFixture, L3Variant::Quantum, 9,
                         [&](const Region& r, const ShieldVerdict& v) {
                           if (!v.shielder_off) return;
                           ++quantum;
                           EXPECT_NE(std::find(classical_sets.begin(), classical_sets.end(),
                                               r.literal()),
                                     classical_sets.end());
                         });
  EXPECT_EQ(quantum, 5u);
}

TEST(Enumerate, DeterministicOrderAndEdgeCases) {
  const Cell a = diamond(1, 4), b = diamond(4, 1);
  std::vector<std::string> first, second;
  enumerate_shielder_off(a, b, kDiamondFixture, L3Variant::Classical, 2,
                         [&](const Region& r, const ShieldVerdict&) { first.push_back(r.literal()); });
  enumerate_shielder_off(a, b, kDiamondFixture, L3Variant::Classical, 2,
                         [&](const Region& r, const ShieldVerdict&) { second.push_back(r.literal()); });
  EXPECT_EQ(first, second);
  EXPECT_EQ(first.size(), 9u + 36u);
  EXPECT_EQ(first.front(), "d(0,0)");

  std::size_t none = 0;
  enumerate_shielder_off(a, b, kDiamondFixture, L3Variant::Classical, 0,
                         [&](const Region&, const ShieldVerdict&) { ++none; });
  EXPECT_EQ(none, 0u);

  try {
    enumerate_shielder_off(a, b, kDiamondFixture, L3Variant::Classical, 9,
                           [&](const Region&, const ShieldVerdict&) { ++none; }, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  EXPECT_EQ(none, 0u);
  EXPECT_EQ(candidate_count(28, 5), 122437u);
  EXPECT_EQ(candidate_count(9, 9), 511u);
}

TEST(RegionToVertexSet, Examples) {
  const MixedGraph d = build_graph(CellKind::Diamond, kDiamondFixture);
  EXPECT_EQ(d.labels_of(region_to_vertexset(d, Region(direct_parents(diamond(1, 4))))),
            (std::vector<std::string>{"d(0,3)", "d(0,4)", "d(1,3)"}));
  const MixedGraph bg = build_graph(CellKind::Box, kBoxFixture);
  EXPECT_EQ(bg.labels_of(region_to_vertexset(bg, Region(boxes({{2, 0}, {2, 1}})))),
            (std::vector<std::string>{"b(2,0)", "b(2,1)"}));
  try {
    region_to_vertexset(d, Region(diamonds({{9, 9}})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownCell);
  }
}

// Frozen from a networkx sweep with a 1/8-step raster for L3C.
TEST(Sweep, DiamondFixture) {
  const MixedGraph g = build_graph(CellKind::Diamond, kDiamondFixture);
  const auto report =
      prop1_sweep(g, diamond(1, 4), diamond(4, 1), kDiamondFixture, L3Variant::Classical, 9);
  EXPECT_EQ(report.rows.size(), 511u);
  EXPECT_EQ(report.shielder_off_count, 84u);
  EXPECT_TRUE(report.counterexamples.empty());
  // Every lattice shielder-off region is graph shielder-off; the other 268
  // graph shielder-off sets fail some L-requirement.
  EXPECT_EQ(report.divergences.size(), 268u);
  for (const auto& row : report.rows) {
    if (row.shield.shielder_off) EXPECT_TRUE(row.graph_shielder_off);
  }
}

TEST(Sweep, BoxFixtureReproducesOracle) {
  const MixedGraph g = build_graph(CellKind::Box, kBoxFixture);
  const auto classical =
      prop1_sweep(g, box(4, 2), box(4, 6), kBoxFixture, L3Variant::Classical, 5);
  EXPECT_EQ(classical.rows.size(), 122437u);
  EXPECT_EQ(classical.shielder_off_count, 175u);
  ASSERT_EQ(classical.counterexamples.size(), 3u);
  std::vector<std::string> found;
  for (std::size_t idx : classical.counterexamples) {
    found.push_back(classical.rows[idx].region.literal());
  }
  EXPECT_EQ(found, (std::vector<std::string>{"b(2,0)+b(2,1)+b(2,2)+b(2,3)+b(3,3)",
                                             "b(2,0)+b(2,1)+b(2,2)+b(3,2)+b(3,3)",
                                             "b(2,1)+b(2,2)+b(2,3)+b(3,1)+b(3,3)"}));

  const auto quantum = prop1_sweep(g, box(4, 2), box(4, 6), kBoxFixture, L3Variant::Quantum, 5);
  EXPECT_EQ(quantum.shielder_off_count, 23u);
  ASSERT_EQ(quantum.counterexamples.size(), 1u);
  EXPECT_EQ(quantum.rows[quantum.counterexamples[0]].region.literal(),
            "b(2,0)+b(2,1)+b(2,2)+b(3,2)+b(3,3)");
}

TEST(Sweep, Csv) {
  const MixedGraph g = build_graph(CellKind::Diamond, kDiamondFixture);
  const auto report =
      prop1_sweep(g, diamond(1, 4), diamond(4, 1), kDiamondFixture, L3Variant::Classical, 1);
  const std::string csv = sweep_csv(g, report);
  EXPECT_EQ(csv.rfind("candidate_set;l1;l2;l3;shielder_off;separated;witness\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 10);
}

}  // namespace
}  // namespace seplat::lattice
