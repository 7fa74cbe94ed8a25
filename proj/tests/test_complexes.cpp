#include "mrect/complexes.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "mrect/errors.hpp"
#include "oracles.hpp"

using namespace mrect;

TEST(FacePoset, RectangleAtOne) {
  const auto p = face_poset_rect(1);
  EXPECT_EQ(p.f_vector(), (std::vector<std::size_t>{4, 4, 1}));
  EXPECT_EQ(p.euler_characteristic(), 1);
}

TEST(FacePoset, CensusMatchesBruteForce) {
  for (int n = 1; n <= 3; ++n) {
    const auto p = face_poset_rect(n);
    const auto census = oracle::rect_census(n);
    const auto f = p.f_vector();
    ASSERT_EQ(f.size(), census.size());
    for (const auto& [dim, count] : census) EXPECT_EQ(static_cast<long long>(f[static_cast<std::size_t>(dim)]), count);
    EXPECT_EQ(p.euler_characteristic(), 1);
  }
}

TEST(FacePoset, CoversAreGraded) {
  const auto p = face_poset_rect(2);
  for (const auto& [lo, hi] : p.covers) {
    EXPECT_EQ(p.dims[lo] + 1, p.dims[hi]);
    EXPECT_TRUE(leq_rect(p.elements[lo], p.elements[hi]));
  }
}

TEST(FacePoset, Guarded) {
  EXPECT_THROW(face_poset_rect(kMaxFacePosetN + 1), ResourceLimitError);
  EXPECT_THROW(verify_dual_graph(kMaxDualGraphN + 1), ResourceLimitError);
}

TEST(FacePoset, LinearIsSimplexBoundaryClosure) {
  for (int n = 1; n <= 6; ++n) {
    const auto p = face_poset_linear(n);
    EXPECT_EQ(p.elements.size(), (std::size_t{1} << (n + 1)) - 1);
    EXPECT_EQ(p.euler_characteristic(), 1);
  }
}

TEST(DualGraph, EqualsOverlayOfCayleyGraphs) {
  for (int n = 1; n <= 4; ++n) {
    const auto r = verify_dual_graph(n);
    EXPECT_TRUE(r.equal) << r.discrepancy;
    EXPECT_EQ(static_cast<long long>(r.dual_vertices), oracle::factorial(n));
    EXPECT_EQ(static_cast<long long>(r.dual_edges), oracle::factorial(n) * (n - 1));
  }
}

TEST(DualGraph, EveryVertexHasDegreeTwiceNMinusOne) {
  const auto g = dual_graph(4);
  for (const auto& v : g.vertices()) EXPECT_EQ(g.degree(v), 6u);
}

TEST(Prism, LowerSetIsTriangularPrism) {
  const auto a = RectComposition::validate({{0, 1, 2, 0}, {0, 2, 3, 1}, {0, 2, 3, 2}});
  const auto p = lower_set(a);
  EXPECT_EQ(p.f_vector(), (std::vector<std::size_t>{6, 9, 5, 1}));
  EXPECT_EQ(p.euler_characteristic(), 1);
}

TEST(Prism, RealizationIsRightTriangleTimesSegment) {
  const auto a = RectComposition::validate({{0, 1, 2, 0}, {0, 2, 3, 1}, {0, 2, 3, 2}});
  const auto g = realize_biorthoscheme(a);
  EXPECT_TRUE(g.consistent(1e-9));
  auto idx = [&](const std::string& k) {
    return static_cast<std::size_t>(std::find(g.keys.begin(), g.keys.end(), k) - g.keys.begin());
  };
  EXPECT_NEAR(g.distance_squared(idx("1,1"), idx("1,2")), 5.0, 1e-9);
  EXPECT_NEAR(g.distance_squared(idx("1,2"), idx("1,3")), 8.0, 1e-9);
  EXPECT_NEAR(g.distance_squared(idx("1,1"), idx("1,3")), 13.0, 1e-9);
  EXPECT_NEAR(g.distance_squared(idx("1,1"), idx("2,1")), 6.0, 1e-9);
  EXPECT_NEAR(g.distance_squared(idx("1,2"), idx("2,3")), 6.0 + 8.0, 1e-9);
}

TEST(Permutahedron, HexagonAtThree) {
  const auto g = permutahedron(3, 0, 4, {1, 2, 3});
  ASSERT_EQ(g.keys.size(), 6u);
  for (const auto& c : g.coords) EXPECT_NEAR(c[0] + c[1] + c[2], 6.0, 1e-9);
  EXPECT_EQ(g.edges.size(), 6u);
  for (const auto& e : g.edges) EXPECT_NEAR(std::sqrt(g.distance_squared(e.u, e.v)), std::sqrt(2.0), 1e-9);
  EXPECT_EQ(g.skeleton(), cayley_graph(3, Side::right));
}

TEST(Permutahedron, LargerNIsRightCayleyGraph) {
  const auto g = permutahedron(4, 0, 10, {1, 3, 4, 8});
  EXPECT_TRUE(g.consistent());
  EXPECT_EQ(g.skeleton(), cayley_graph(4, Side::right));
}

TEST(Permutahedron, RejectsBadBasepoints) {
  EXPECT_THROW(permutahedron(3, 0, 4, {1, 1, 3}), InputError);
  EXPECT_THROW(permutahedron(3, 0, 4, {1, 2, 5}), InputError);
  EXPECT_THROW(permutahedron(3, 0, 4, {1, 2}), InputError);
}

TEST(Tetra, VertexCountAndBoundary) {
  for (int n = 1; n <= 6; ++n) {
    const auto t = tetra_graph(n);
    EXPECT_EQ(static_cast<long long>(t.graph.vertex_count()), oracle::binomial(n + 3, 3));
    const auto boundary = tetra_boundary(t);
    EXPECT_EQ(boundary.size(), static_cast<std::size_t>(4 * n));
    const auto cycle = t.graph.induced(boundary);
    EXPECT_EQ(cycle.edge_count(), static_cast<std::size_t>(4 * n));
    for (const auto& v : cycle.vertices()) EXPECT_EQ(cycle.degree(v), 2u);
  }
}

TEST(Tetra, EdgesAreUnitMovesInTheEmbedding) {
  const auto t = tetra_graph(3);
  for (const auto& e : t.graph.edges()) {
    const auto& p = t.coordinates.at(e.u);
    const auto& q = t.coordinates.at(e.v);
    int d2 = 0;
    for (int i = 0; i < 3; ++i) d2 += (p[static_cast<std::size_t>(i)] - q[static_cast<std::size_t>(i)]) *
                                      (p[static_cast<std::size_t>(i)] - q[static_cast<std::size_t>(i)]);
    EXPECT_EQ(d2, 8);
  }
}

TEST(Tetra, GenericSpineIsSubgraph) {
  const auto z = Multiset2D::make(0, 5, 0, 5, {{1, 2, 1}, {2, 3, 1}, {3, 1, 1}, {4, 4, 1}});
  const auto skel = spine_skeleton(spine_rect(comp2d(z)));
  const auto t = tetra_graph(4);
  std::multiset<GraphEdge> have(t.graph.edges().begin(), t.graph.edges().end());
  for (const auto& v : skel.vertices()) EXPECT_TRUE(t.graph.has_vertex(v)) << v;
  for (const auto& e : skel.edges()) {
    EXPECT_EQ(have.count(e), 1u) << e.u << " - " << e.v;
  }
}
