#include <gengraph/gengraph.hpp>

#include "support/planar_oracle.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

using namespace gengraph;
using gengraph::oracle::planar_oracle;

namespace {

std::vector<Edge> all_pairs(std::size_t n) {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) out.push_back({u, v});
  return out;
}

SimpleGraph graph_from_mask(std::size_t n, const std::vector<Edge>& pairs, std::uint32_t mask) {
  SimpleGraph g(n);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (mask >> i & 1u) g.add_edge(pairs[i].first, pairs[i].second);
  return g;
}

bool certificate_ok(const SimpleGraph& g, const PlanarityVerdict& v) {
  if (v.planar) return v.embedding && !v.witness && is_valid_planar_embedding(*v.embedding, g);
  return v.witness && !v.embedding && is_kuratowski_subdivision(g, *v.witness);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvariantViolated;
}

}  // namespace

TEST(IsPlanar, SmallExamples) {
  const auto k5 = is_planar(complete_graph(5));
  EXPECT_FALSE(k5.planar);
  ASSERT_TRUE(k5.witness);
  EXPECT_EQ(k5.witness->kind, KuratowskiKind::K5);
  EXPECT_EQ(k5.witness->edges.size(), 10u);
  EXPECT_TRUE(is_planar(complete_graph(4)).planar);
  EXPECT_FALSE(is_planar(generating_graph(build_group("C:2 x C:6"))).planar);
  EXPECT_TRUE(is_planar(SimpleGraph(0)).planar);
  EXPECT_TRUE(is_planar(SimpleGraph(3)).planar);
}

TEST(EulerBound, Examples) {
  EXPECT_FALSE(euler_bound(9, 24));
  EXPECT_TRUE(euler_bound(6, 12));
  EXPECT_TRUE(euler_bound(3, 3));
  EXPECT_TRUE(euler_bound(2, 1));
}

TEST(EulerBound, FailureImpliesNonPlanar) {
  for (const auto& g : extended_corpus(24)) {
    if (g.order() < 2) continue;
    const auto gamma = generating_graph(g);
    if (!euler_bound(gamma.vertex_count(), gamma.edge_count())) EXPECT_FALSE(is_planar_graph(gamma)) << g.name();
  }
}

TEST(Faces, Examples) {
  const auto k4 = complete_graph(4);
  const auto v = is_planar(k4);
  ASSERT_TRUE(v.embedding);
  EXPECT_EQ(faces_from_rotation(*v.embedding, k4), 4u);

  const auto edge = SimpleGraph::from_edges(2, {{0, 1}});
  EXPECT_EQ(faces_from_rotation(RotationEmbedding{{{1}, {0}}}, edge), 1u);

  const auto k3 = complete_graph(3);
  EXPECT_EQ(faces_from_rotation(RotationEmbedding{{{1, 2}, {2, 0}, {0, 1}}}, k3), 2u);
}

TEST(Faces, NonPlanarRotationFailsEulerCheck) {
  // K4 with one rotation flipped gives a torus embedding: 2 faces.
  const auto k4 = complete_graph(4);
  const RotationEmbedding good{{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}};
  ASSERT_TRUE(is_valid_planar_embedding(good, k4));
  RotationEmbedding bad = good;
  std::swap(bad.rotation[0][1], bad.rotation[0][2]);
  std::swap(bad.rotation[1][1], bad.rotation[1][2]);
  EXPECT_FALSE(is_valid_planar_embedding(bad, k4));
}

TEST(Faces, MalformedRotation) {
  const auto k3 = complete_graph(3);
  EXPECT_EQ(code_of([&] { faces_from_rotation(RotationEmbedding{{{1}, {0, 2}, {0, 1}}}, k3); }),
            ErrorCode::MalformedRotation);
  EXPECT_EQ(code_of([&] { faces_from_rotation(RotationEmbedding{{{1, 2}, {0, 2}}}, k3); }),
            ErrorCode::MalformedRotation);
  EXPECT_EQ(code_of([&] { faces_from_rotation(RotationEmbedding{{{1, 1}, {2, 0}, {0, 1}}}, k3); }),
            ErrorCode::MalformedRotation);
}

TEST(Witness, Examples) {
  const auto c7 = kuratowski_witness(generating_graph(cyclic_group(7)));
  EXPECT_EQ(c7.kind, KuratowskiKind::K5);

  const auto k33 = complete_bipartite_graph(3, 3);
  const auto w = kuratowski_witness(k33);
  EXPECT_EQ(w.kind, KuratowskiKind::K33);
  EXPECT_EQ(w.edges, k33.edges());

  const auto k6 = complete_graph(6);
  const auto w6 = kuratowski_witness(k6);
  for (auto [u, v] : w6.edges) EXPECT_TRUE(k6.has_edge(u, v));
  EXPECT_TRUE(is_kuratowski_subdivision(k6, w6));

  EXPECT_EQ(code_of([] { kuratowski_witness(complete_graph(4)); }), ErrorCode::InputPlanar);
}

TEST(Witness, SubdivisionIsRecognised) {
  // K3,3 with one edge subdivided by a new vertex 6.
  auto edges = complete_bipartite_graph(3, 3).edges();
  edges.erase(edges.begin());
  edges.push_back({0, 6});
  edges.push_back({3, 6});
  const auto g = SimpleGraph::from_edges(7, edges);
  const auto w = kuratowski_witness(g);
  EXPECT_EQ(w.kind, KuratowskiKind::K33);
  EXPECT_EQ(w.edges.size(), 10u);
  EXPECT_EQ(w.branch_vertices.size(), 6u);
}

TEST(Witness, IsEdgeMinimal) {
  std::mt19937_64 rng(11);
  std::size_t checked = 0;
  for (int t = 0; t < 200 && checked < 40; ++t) {
    const auto g = random_graph(8 + t % 3, 0.55, rng);
    const auto v = is_planar(g);
    if (v.planar) continue;
    ++checked;
    const auto witness_graph = SimpleGraph::from_edges(g.vertex_count(), v.witness->edges);
    for (auto [a, b] : v.witness->edges) {
      auto smaller = witness_graph;
      smaller.remove_edge(a, b);
      ASSERT_TRUE(is_planar_graph(smaller));
      ASSERT_TRUE(planar_oracle(smaller));
    }
  }
  EXPECT_GT(checked, 0u);
}

TEST(Oracle, Examples) {
  for (std::uint32_t mask = 0; mask < 64; ++mask) EXPECT_TRUE(planar_oracle(graph_from_mask(4, all_pairs(4), mask)));
  EXPECT_FALSE(planar_oracle(complete_graph(5)));
  EXPECT_FALSE(planar_oracle(complete_bipartite_graph(3, 3)));
  EXPECT_TRUE(planar_oracle(complete_graph(4)));
  EXPECT_FALSE(planar_oracle(generating_graph(cyclic_group(7))));
}

TEST(Agreement, AllLabelledGraphsUpToSixVertices) {
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto pairs = all_pairs(n);
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      const auto g = graph_from_mask(n, pairs, mask);
      const auto v = is_planar(g);
      ASSERT_EQ(v.planar, planar_oracle(g)) << to_edge_list(g);
      ASSERT_TRUE(certificate_ok(g, v)) << to_edge_list(g);
    }
  }
}

TEST(Agreement, AllLabelledGraphsOnSevenVertices) {
  // A 7-vertex graph has a K5/K3,3 minor iff it has one as a subgraph or
  // some single-edge contraction (a 6-vertex graph) has one. The 6-vertex
  // answers come from the brute-force oracle, tabulated by edge mask.
  const auto pairs6 = all_pairs(6);
  std::vector<std::uint8_t> nonplanar6(1u << pairs6.size());
  std::vector<std::vector<int>> pair_index6(6, std::vector<int>(6, -1));
  for (std::size_t i = 0; i < pairs6.size(); ++i) {
    pair_index6[pairs6[i].first][pairs6[i].second] = static_cast<int>(i);
    pair_index6[pairs6[i].second][pairs6[i].first] = static_cast<int>(i);
  }
  for (std::uint32_t mask = 0; mask < nonplanar6.size(); ++mask)
    nonplanar6[mask] = !planar_oracle(graph_from_mask(6, pairs6, mask));

  const auto pairs7 = all_pairs(7);
  std::size_t planar_count = 0;
  for (std::uint32_t mask = 0; mask < (1u << pairs7.size()); ++mask) {
    oracle::MaskGraph adj(7);
    for (std::size_t i = 0; i < pairs7.size(); ++i)
      if (mask >> i & 1u) {
        adj[pairs7[i].first] |= static_cast<std::uint16_t>(1u << pairs7[i].second);
        adj[pairs7[i].second] |= static_cast<std::uint16_t>(1u << pairs7[i].first);
      }
    bool nonplanar = std::popcount(mask) >= 9 && oracle::contains_k5_or_k33(adj);
    for (std::size_t i = 0; i < pairs7.size() && !nonplanar && std::popcount(mask) >= 10; ++i) {
      if (!(mask >> i & 1u)) continue;
      const auto c = oracle::contract(adj, static_cast<int>(pairs7[i].first), static_cast<int>(pairs7[i].second));
      std::uint32_t m6 = 0;
      for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
          if (c[u] >> v & 1u) m6 |= 1u << pair_index6[u][v];
      nonplanar = nonplanar6[m6];
    }
    const bool lr = is_planar_graph(graph_from_mask(7, pairs7, mask));
    ASSERT_EQ(lr, !nonplanar) << "mask " << mask;
    planar_count += lr;
  }
  // Sanity: most labelled 7-vertex graphs are non-planar, but far from all.
  EXPECT_GT(planar_count, 100000u);
  EXPECT_LT(planar_count, (1u << 21));
}

TEST(Agreement, SeededRandomGraphs) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> size(8, 10);
  std::uniform_real_distribution<double> density(0.15, 0.75);
  for (int t = 0; t < 300; ++t) {
    const auto g = random_graph(size(rng), density(rng), rng);
    const auto v = is_planar(g);
    ASSERT_EQ(v.planar, planar_oracle(g)) << to_edge_list(g);
    ASSERT_TRUE(certificate_ok(g, v)) << to_edge_list(g);
  }
}

TEST(Agreement, CatalogGraphsAndSubgraphMonotonicity) {
  std::mt19937_64 rng(5);
  for (const auto& g : extended_corpus(24)) {
    if (g.order() < 2) continue;
    const auto gamma = generating_graph(g);
    const auto v = is_planar(gamma);
    ASSERT_TRUE(certificate_ok(gamma, v)) << g.name();
    if (!v.planar) continue;
    // Deleting edges from a planar graph keeps it planar.
    auto h = gamma;
    for (auto [a, b] : gamma.edges())
      if (rng() % 2) {
        h.remove_edge(a, b);
        ASSERT_TRUE(is_planar_graph(h)) << g.name();
      }
  }
}

TEST(Agreement, DisconnectedAndIsolatedVertices) {
  // Two disjoint K4 plus isolated vertices: planar, embedding valid.
  std::vector<Edge> edges;
  for (std::size_t base : {0, 5})
    for (std::size_t u = 0; u < 4; ++u)
      for (std::size_t v = u + 1; v < 4; ++v) edges.push_back({base + u, base + v});
  const auto g = SimpleGraph::from_edges(11, edges);
  const auto v = is_planar(g);
  EXPECT_TRUE(v.planar);
  EXPECT_TRUE(certificate_ok(g, v));
  EXPECT_EQ(count_components_with_edges(g), 2u);
  // A K5 component next to a planar one: non-planar.
  auto h = SimpleGraph::from_edges(11, edges);
  for (std::size_t u = 4; u < 9; ++u)
    for (std::size_t w = u + 1; w < 9; ++w) h.add_edge(u, w);
  const auto vh = is_planar(h);
  EXPECT_FALSE(vh.planar);
  EXPECT_TRUE(certificate_ok(h, vh));
}
