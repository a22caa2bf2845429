#include "kneser/connectivity.hpp"

#include <gtest/gtest.h>

#include <set>

#include "kneser/errors.hpp"
#include "kneser/kneser_graph.hpp"
#include "oracles.hpp"

namespace kneser {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::make_graph;

// Each path runs from u to v along edges, and no two paths share an
// interior vertex.
void expect_internally_disjoint(const Graph& g, Vertex u, Vertex v,
                                const std::vector<std::vector<Vertex>>& paths) {
  std::set<Vertex> interior;
  std::size_t direct = 0;
  for (const auto& p : paths) {
    ASSERT_GE(p.size(), 2u);
    EXPECT_EQ(p.front(), u);
    EXPECT_EQ(p.back(), v);
    if (p.size() == 2) ++direct;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) EXPECT_TRUE(g.adjacent(p[i], p[i + 1]));
    for (std::size_t i = 1; i + 1 < p.size(); ++i) EXPECT_TRUE(interior.insert(p[i]).second);
  }
  EXPECT_LE(direct, 1u);
}

TEST(MaxFlowTest, SeriesAndParallel) {
  FlowNetwork series(3, 0, 2);
  series.add_arc(0, 1, 5);
  series.add_arc(1, 2, 2);
  EXPECT_EQ(max_flow(series).value, 2);

  FlowNetwork parallel(4, 0, 3);
  parallel.add_arc(0, 1, 1);
  parallel.add_arc(0, 2, 1);
  parallel.add_arc(1, 3, 1);
  parallel.add_arc(2, 3, 5);
  parallel.add_arc(1, 2, 3);
  const auto r = max_flow(parallel);
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.cut_capacity, 2);
  EXPECT_TRUE(r.source_side[0]);
  EXPECT_FALSE(r.source_side[3]);
}

TEST(MaxFlowTest, Disconnected) {
  FlowNetwork net(3, 0, 2);
  net.add_arc(0, 1, 4);
  EXPECT_EQ(max_flow(net).value, 0);
}

TEST(MaxFlowTest, CompleteGraphArcs) {
  // Unit arcs both ways on K4: three arc-disjoint routes from 0 to 3.
  FlowNetwork net(4, 0, 3);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) net.add_arc(i, j, 1);
  const auto r = max_flow(net);
  EXPECT_EQ(r.value, 3);
  for (std::size_t a = 0; a < net.arcs().size(); ++a) {
    EXPECT_GE(r.arc_flow[a], 0);
    EXPECT_LE(r.arc_flow[a], net.arcs()[a].capacity);
  }
}

TEST(MaxFlowTest, Errors) {
  EXPECT_THROW(FlowNetwork(2, 1, 1), DomainError);
  FlowNetwork net(2, 0, 1);
  EXPECT_THROW(net.add_arc(0, 1, -1), DomainError);
}

TEST(LocalConnectivityTest, Examples) {
  EXPECT_EQ(local_vertex_connectivity(cycle_graph(6), 0, 3), 2u);
  EXPECT_EQ(local_vertex_connectivity(testing::path_graph(4), 0, 3), 1u);
  EXPECT_EQ(local_vertex_connectivity(make_graph(4, {{0, 1}, {2, 3}}), 0, 3), 0u);
  const auto kg = build_bipartite_kneser(5, 2);
  for (Vertex v = 1; v < kg.half(); ++v) EXPECT_EQ(local_vertex_connectivity(kg.graph(), 0, v), 3u);
}

TEST(LocalConnectivityTest, Errors) {
  EXPECT_THROW(local_vertex_connectivity(cycle_graph(5), 0, 1), AdjacencyError);
  EXPECT_THROW(local_vertex_connectivity(cycle_graph(5), 2, 2), DomainError);
}

TEST(VertexConnectivityTest, Examples) {
  EXPECT_EQ(vertex_connectivity(complete_graph(4)), 3u);
  EXPECT_EQ(vertex_connectivity(cycle_graph(7)), 2u);
  EXPECT_EQ(vertex_connectivity(make_graph(4, {{0, 1}, {2, 3}})), 0u);
  EXPECT_EQ(vertex_connectivity(make_graph(1, {})), 0u);
  EXPECT_EQ(vertex_connectivity(testing::star_graph(4)), 1u);
}

TEST(VertexConnectivityTest, BipartiteKneserEqualsDegree) {
  EXPECT_EQ(vertex_connectivity(build_bipartite_kneser(4, 1).graph()), 3u);
  EXPECT_EQ(vertex_connectivity(build_bipartite_kneser(5, 2).graph()), 3u);
  EXPECT_EQ(vertex_connectivity(build_bipartite_kneser(6, 2).graph()), 6u);
  EXPECT_EQ(vertex_connectivity(build_bipartite_kneser(7, 3).graph()), 4u);
}

TEST(VertexConnectivityTest, MatchesBruteForceOnCorpus) {
  for (const auto& [name, g] : testing::small_corpus(9)) {
    EXPECT_EQ(vertex_connectivity(g), testing::brute_force_vertex_connectivity(g)) << name;
  }
}

TEST(MengerTest, Cycle) {
  const auto g = cycle_graph(6);
  const auto paths = menger_certificate(g, 0, 3);
  EXPECT_EQ(paths.size(), 2u);
  expect_internally_disjoint(g, 0, 3, paths);
}

TEST(MengerTest, H41SingletonPair) {
  const auto kg = build_bipartite_kneser(4, 1);
  const auto u = kg.vertex_of_subset(Subset::from_elements(4, {1}));
  const auto v = kg.vertex_of_subset(Subset::from_elements(4, {2}));
  const auto paths = menger_certificate(kg.graph(), u, v);
  EXPECT_EQ(paths.size(), 3u);
  expect_internally_disjoint(kg.graph(), u, v, paths);
}

TEST(MengerTest, AdjacentPairs) {
  const auto k2 = complete_graph(2);
  EXPECT_EQ(menger_certificate(k2, 0, 1), (std::vector<std::vector<Vertex>>{{0, 1}}));
  const auto k4 = complete_graph(4);
  const auto paths = menger_certificate(k4, 0, 1);
  EXPECT_EQ(paths.size(), 3u);
  EXPECT_EQ(paths.front(), (std::vector<Vertex>{0, 1}));
  expect_internally_disjoint(k4, 0, 1, paths);
}

TEST(MengerTest, CountMatchesLocalConnectivityOnCorpus) {
  for (const auto& [name, g] : testing::small_corpus(9)) {
    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v)) continue;
        const auto paths = menger_certificate(g, u, v);
        EXPECT_EQ(paths.size(), local_vertex_connectivity(g, u, v)) << name;
        expect_internally_disjoint(g, u, v, paths);
      }
    }
  }
}

}  // namespace
}  // namespace kneser
