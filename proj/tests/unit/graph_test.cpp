#include <gtest/gtest.h>

#include <random>

#include "seplat/error.hpp"
#include "seplat/graph.hpp"
#include "seplat/lattice.hpp"
#include "test_support.hpp"

namespace seplat {
namespace {

MixedGraph chain() { return MixedGraph::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {}); }

std::set<std::string> labels(const MixedGraph& g, const VertexSet& s) {
  const auto v = g.labels_of(s);
  return {v.begin(), v.end()};
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no seplat::Error thrown";
  return ErrorCode::Parse;
}

TEST(BuildGraph, ChainDag) {
  const MixedGraph g = chain();
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.directed_count(), 2u);
  EXPECT_EQ(g.bidirected_count(), 0u);
  EXPECT_TRUE(g.has_directed(g.index_of("a"), g.index_of("b")));
  EXPECT_FALSE(g.has_directed(g.index_of("b"), g.index_of("a")));
}

TEST(BuildGraph, SpousePair) {
  const MixedGraph g = MixedGraph::build({"a", "b"}, {}, {{"a", "b"}});
  EXPECT_EQ(g.bidirected_count(), 1u);
  EXPECT_TRUE(g.has_bidirected(1, 0));
  EXPECT_TRUE(g.adjacent(0, 1));
}

TEST(BuildGraph, Errors) {
  EXPECT_EQ(code_of([] { MixedGraph::build({"a", "b"}, {{"a", "b"}, {"b", "a"}}, {}); }),
            ErrorCode::Cycle);
  EXPECT_EQ(code_of([] { MixedGraph::build({"a", "b"}, {{"a", "b"}, {"a", "b"}}, {}); }),
            ErrorCode::DuplicateEdge);
  EXPECT_EQ(code_of([] { MixedGraph::build({"a", "b"}, {}, {{"a", "b"}, {"b", "a"}}); }),
            ErrorCode::DuplicateEdge);
  EXPECT_EQ(code_of([] { MixedGraph::build({"a"}, {{"a", "z"}}, {}); }), ErrorCode::UnknownVertex);
  EXPECT_EQ(code_of([] { MixedGraph::build({"a"}, {{"a", "a"}}, {}); }), ErrorCode::SelfLoop);
  EXPECT_EQ(code_of([] { MixedGraph::build({"a"}, {}, {{"a", "a"}}); }), ErrorCode::SelfLoop);
  EXPECT_EQ(code_of([] { MixedGraph::build({"a", "a"}, {}, {}); }), ErrorCode::DuplicateVertex);
  EXPECT_EQ(code_of([] { MixedGraph::build({""}, {}, {}); }), ErrorCode::InvalidLabel);
}

TEST(BuildGraph, DirectedAndBidirectedMayShareAPair) {
  const MixedGraph g = MixedGraph::build({"a", "b"}, {{"a", "b"}}, {{"a", "b"}});
  EXPECT_EQ(g.incident(0).size(), 2u);
}

TEST(Relatives, ChainAncestors) {
  const MixedGraph g = chain();
  EXPECT_EQ(labels(g, relatives(g, {g.index_of("c")}, Relation::Ancestors)),
            (std::set<std::string>{"a", "b"}));
  EXPECT_EQ(labels(g, relatives(g, {g.index_of("c")}, Relation::AncestorsInclusive)),
            (std::set<std::string>{"a", "b", "c"}));
  EXPECT_EQ(labels(g, relatives(g, {g.index_of("a")}, Relation::Descendants)),
            (std::set<std::string>{"b", "c"}));
  EXPECT_EQ(labels(g, relatives(g, {g.index_of("c")}, Relation::Parents)),
            (std::set<std::string>{"b"}));
}

TEST(Relatives, ColliderCollaterals) {
  const MixedGraph g = MixedGraph::build({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}, {});
  EXPECT_EQ(labels(g, relatives(g, {g.index_of("a")}, Relation::Collaterals)),
            (std::set<std::string>{"b"}));
}

TEST(Relatives, BidirectedEdgesDoNotCarryAncestry) {
  const MixedGraph g = MixedGraph::build({"a", "b"}, {}, {{"a", "b"}});
  EXPECT_TRUE(relatives(g, {0}, Relation::Ancestors).empty());
  EXPECT_EQ(relatives(g, {0}, Relation::Collaterals), VertexSet{1});
}

TEST(Relatives, UnknownVertex) {
  const MixedGraph g = chain();
  EXPECT_EQ(code_of([&] { relatives(g, {7}, Relation::Ancestors); }), ErrorCode::UnknownVertex);
  EXPECT_EQ(code_of([&] { g.index_of("zz"); }), ErrorCode::UnknownVertex);
}

TEST(Relatives, DiamondAncestorsMatchCoordinateFormula) {
  const lattice::Window w{0, 3, 0, 3};
  const MixedGraph g = lattice::build_graph(lattice::CellKind::Diamond, w);
  const auto anc = labels(g, relatives(g, {g.index_of("d(2,2)")}, Relation::Ancestors));
  std::set<std::string> expected;
  for (int i = 0; i <= 2; ++i) {
    for (int j = 0; j <= 2; ++j) {
      if (i != 2 || j != 2) expected.insert(lattice::diamond(i, j).label());
    }
  }
  EXPECT_EQ(anc.size(), 8u);
  EXPECT_EQ(anc, expected);
}

TEST(TopologicalOrder, Basics) {
  const MixedGraph g = chain();
  EXPECT_EQ(g.labels_of({}).size(), 0u);
  const auto order = topological_order(g);
  ASSERT_EQ(order.size(), 3u);
  EXPECT_EQ(g.label(order[0]), "a");
  EXPECT_EQ(g.label(order[2]), "c");

  const MixedGraph edgeless = MixedGraph::build({"b", "a"}, {}, {});
  const auto o2 = topological_order(edgeless);
  EXPECT_EQ(g.label(0), "a");
  EXPECT_EQ(edgeless.label(o2[0]), "a");
  EXPECT_EQ(edgeless.label(o2[1]), "b");
}

TEST(TopologicalOrder, DiamondThreeByThreeRespectsEveryEdge) {
  const MixedGraph g = lattice::build_graph(lattice::CellKind::Diamond, {0, 2, 0, 2});
  const auto order = topological_order(g);
  ASSERT_EQ(order.size(), 9u);
  std::vector<std::size_t> pos(g.size());
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
  for (const auto& [u, v] : g.directed_edges()) EXPECT_LT(pos[u], pos[v]);
}

TEST(SimplePaths, Collider) {
  const MixedGraph g = MixedGraph::build({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}, {});
  const auto paths = simple_paths(g, g.index_of("a"), g.index_of("b"), 2);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(format_path(g, paths[0]), "a -> c <- b");
}

TEST(SimplePaths, Triangle) {
  const MixedGraph g =
      MixedGraph::build({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}}, {});
  const auto paths = simple_paths(g, g.index_of("a"), g.index_of("c"), 5);
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(format_path(g, paths[0]), "a -> b -> c");
  EXPECT_EQ(format_path(g, paths[1]), "a -> c");
}

TEST(SimplePaths, ParallelEdgesOfDifferentKindAreDistinctPaths) {
  const MixedGraph g = MixedGraph::build({"a", "b"}, {{"a", "b"}}, {{"a", "b"}});
  EXPECT_EQ(simple_paths(g, 0, 1, 1).size(), 2u);
}

TEST(SimplePaths, DiamondCountMatchesIndependentRecount) {
  const MixedGraph g = lattice::build_graph(lattice::CellKind::Diamond, {0, 2, 0, 2});
  const auto paths = simple_paths(g, g.index_of("d(0,0)"), g.index_of("d(2,2)"), 4);
  const std::size_t expected =
      testing::count_simple_paths(testing::diamond_adjacency(3), "d(0,0)", "d(2,2)", 4);
  EXPECT_EQ(expected, 17u);  // networkx all_simple_paths(cutoff=4) agrees
  EXPECT_EQ(paths.size(), expected);
}

TEST(SimplePaths, Errors) {
  const MixedGraph g = chain();
  EXPECT_EQ(code_of([&] { simple_paths(g, 0, 9, 3); }), ErrorCode::UnknownVertex);
  EXPECT_EQ(code_of([&] { simple_paths(g, 0, 0, 3); }), ErrorCode::InvalidQuery);
}

TEST(ValidatePath, RejectsBrokenPaths) {
  const MixedGraph g = chain();
  EXPECT_EQ(code_of([&] { validate_path(g, Path{{0, 2}, {EdgeKind::Forward}}); }),
            ErrorCode::InvalidPath);
  EXPECT_EQ(code_of([&] { validate_path(g, Path{{0}, {}}); }), ErrorCode::InvalidPath);
  EXPECT_EQ(code_of([&] {
              validate_path(g, Path{{0, 1, 0}, {EdgeKind::Forward, EdgeKind::Backward}});
            }),
            ErrorCode::InvalidPath);
  EXPECT_NO_THROW(validate_path(g, Path{{2, 1}, {EdgeKind::Backward}}));
}

// Properties over random mixed graphs.
TEST(GraphProperties, RandomGraphs) {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 60; ++trial) {
    const MixedGraph g = testing::random_mixed_graph(rng, 3 + trial % 7, 0.35);
    const auto order = topological_order(g);
    std::vector<std::size_t> pos(g.size());
    for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
    for (const auto& [u, v] : g.directed_edges()) ASSERT_LT(pos[u], pos[v]);

    for (VertexIndex v = 0; v < g.size(); ++v) {
      const VertexSet anc = relatives(g, {v}, Relation::Ancestors);
      const VertexSet par = relatives(g, {v}, Relation::Parents);
      for (VertexIndex p : par) ASSERT_TRUE(anc.contains(p));
      for (VertexIndex w = 0; w < g.size(); ++w) {
        ASSERT_EQ(anc.contains(w), relatives(g, {w}, Relation::Descendants).contains(v));
      }
    }
    if (g.size() >= 2) {
      for (const Path& p : simple_paths(g, 0, g.size() - 1, g.size() - 1)) {
        ASSERT_EQ(p.vertices.front(), 0u);
        ASSERT_EQ(p.vertices.back(), g.size() - 1);
        ASSERT_NO_THROW(validate_path(g, p));
      }
    }
  }
}

}  // namespace
}  // namespace seplat
