#include <gtest/gtest.h>

#include "cayley/graph.hpp"
#include "corpus.hpp"

namespace cayley {
namespace {

using testing::cyclic_graph;

TEST(ConnectionSet, Invariants) {
  const auto z6 = AbelianGroup::cyclic(6);
  EXPECT_THROW(ConnectionSet(z6, {}), InvalidArgument);
  EXPECT_THROW(ConnectionSet(z6, {GroupElement{0}, GroupElement{3}}), InvariantViolation);
  EXPECT_THROW(ConnectionSet(z6, {GroupElement{1}}), InvariantViolation);
  EXPECT_THROW(ConnectionSet(z6, {GroupElement{7}}), InvalidArgument);
  const ConnectionSet c(z6, {GroupElement{5}, GroupElement{1}, GroupElement{1}});
  EXPECT_EQ(c.size(), 2);
  EXPECT_EQ(c.elements()[0], GroupElement{1});
}

TEST(CayleyGraph, NeighborsAndAdjacency) {
  const auto g = cyclic_graph(8, {1, 7, 4});
  EXPECT_EQ(g.degree(), 3);
  EXPECT_EQ(g.neighbors(0), (std::vector<int64_t>{1, 4, 7}));
  EXPECT_TRUE(g.adjacent(2, 6));
  EXPECT_FALSE(g.adjacent(2, 5));
  for (int64_t u = 0; u < 8; ++u)
    for (int64_t v = 0; v < 8; ++v) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
}

TEST(CayleyGraph, Stats) {
  const auto quarter = graph_stats(cyclic_graph(20, {4, 8, 12, 16}));
  EXPECT_EQ(quarter.component_count, 4);
  EXPECT_FALSE(quarter.diameter.has_value());

  const auto prime = graph_stats(cyclic_graph(20, {2, 6, 14, 18}));
  EXPECT_TRUE(prime.bipartite);
  EXPECT_EQ(prime.component_count, 2);

  const auto c7 = graph_stats(cyclic_graph(7, {1, 6}));
  EXPECT_TRUE(c7.connected());
  EXPECT_FALSE(c7.bipartite);
  EXPECT_EQ(c7.diameter, 3);

  const auto c8 = graph_stats(cyclic_graph(8, {1, 7}));
  EXPECT_TRUE(c8.bipartite);
  EXPECT_EQ(c8.diameter, 4);
}

TEST(CayleyGraph, DiameterMatchesAllPairsBfs) {
  for (const auto& [name, g] : testing::corpus()) {
    if (g.vertex_count() > 64) continue;
    const auto d = diameter(g);
    if (!d) continue;
    int64_t worst = 0;
    for (int64_t s = 0; s < g.vertex_count(); ++s) {
      std::vector<int64_t> dist(static_cast<size_t>(g.vertex_count()), -1);
      std::vector<int64_t> queue{s};
      dist[static_cast<size_t>(s)] = 0;
      for (size_t h = 0; h < queue.size(); ++h)
        for (int64_t v : g.neighbors(queue[h]))
          if (dist[static_cast<size_t>(v)] < 0) {
            dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(queue[h])] + 1;
            queue.push_back(v);
          }
      for (int64_t x : dist) worst = std::max(worst, x);
    }
    EXPECT_EQ(*d, worst) << name;
  }
}

TEST(Srg, KnownParameters) {
  const auto k5 = srg_check(cyclic_graph(5, {1, 2, 3, 4}));
  ASSERT_EQ(k5.status, SrgStatus::kStronglyRegular);
  EXPECT_EQ(*k5.params, (SrgParameters{5, 4, 3, 0}));

  const auto c5 = srg_check(cyclic_graph(5, {1, 4}));
  ASSERT_EQ(c5.status, SrgStatus::kStronglyRegular);
  EXPECT_EQ(*c5.params, (SrgParameters{5, 2, 0, 1}));

  EXPECT_EQ(srg_check(cyclic_graph(6, {1, 5})).status, SrgStatus::kNotStronglyRegular);
  EXPECT_EQ(srg_check(cyclic_graph(10, {2, 4, 6, 8})).status, SrgStatus::kDisconnected);

  const auto ex2 = srg_check(CayleyGraph::build(
      AbelianGroup({4, 4}), {{2, 0}, {0, 2}, {1, 2}, {2, 1}, {3, 2}, {2, 3}}));
  ASSERT_EQ(ex2.status, SrgStatus::kStronglyRegular);
  EXPECT_EQ(*ex2.params, (SrgParameters{16, 6, 2, 2}));
}

TEST(Srg, AgreesWithCommonNeighborCount) {
  const auto g = cyclic_graph(13, {1, 3, 4, 9, 10, 12});  // Paley(13)
  const auto r = srg_check(g);
  ASSERT_EQ(r.status, SrgStatus::kStronglyRegular);
  EXPECT_EQ(*r.params, (SrgParameters{13, 6, 2, 3}));
  EXPECT_EQ(g.common_neighbors(0, 1), 2);
  EXPECT_EQ(g.common_neighbors(0, 2), 3);
}

}  // namespace
}  // namespace cayley
