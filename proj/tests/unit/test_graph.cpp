#include <doctest.h>

#include "walklab/error.hpp"
#include "walklab/generators.hpp"
#include "walklab/graph.hpp"
#include "walklab/spectral.hpp"

using namespace walklab;

TEST_CASE("loops count once per multiplicity in degree and diagonal") {
  auto g = GraphBuilder(1).add_loop(0, 3).build();
  CHECK(g.degree(0) == 3);
  CHECK(g.multiplicity(0, 0) == 3);
  CHECK(g.has_loops());
}

TEST_CASE("multiplicity is symmetric and degrees sum multiplicities") {
  auto g = GraphBuilder(3).add_edge(0, 1, 2).add_edge(2, 1, 2).build();
  CHECK(g.multiplicity(1, 0) == 2);
  CHECK(g.multiplicity(0, 2) == 0);
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(1) == 4);
  CHECK(g.degree(2) == 2);
  CHECK_FALSE(g.is_simple());
  CHECK(g.max_degree() == 4);
}

TEST_CASE("regular_degree") {
  CHECK(cycle(5).regular_degree() == 2u);
  CHECK_FALSE(path(4).regular_degree().has_value());
}

TEST_CASE("vertex set normalizes members and rejects bad input") {
  VertexSet s(6, {4, 1, 3});
  CHECK(s.size() == 3);
  CHECK(s[0] == 1);
  CHECK(s.contains(4));
  CHECK_FALSE(s.contains(0));
  CHECK(s.index_of(3) == 1u);
  CHECK(s.with(0).size() == 4);
  CHECK_THROWS_AS(VertexSet(3, {0, 5}), PreconditionError);
  auto comp = s.complement();
  REQUIRE(comp.has_value());
  CHECK(comp->size() == 3);
}

TEST_CASE("induced subgraph") {
  SUBCASE("K4 on two vertices is an edge") {
    auto sub = induced_subgraph(complete(4), VertexSet(4, {0, 1}));
    CHECK(sub.graph.size() == 2);
    CHECK(sub.graph.multiplicity(0, 1) == 1);
    CHECK(sub.graph.degree(0) == 1);
  }
  SUBCASE("three consecutive cycle vertices form a path") {
    auto sub = induced_subgraph(cycle(5), VertexSet(5, {0, 1, 2}));
    CHECK(sub.graph.edges().size() == 2);
    CHECK(sub.graph.degree(1) == 2);
    CHECK(sub.graph.degree(0) == 1);
  }
  SUBCASE("lollipop clique") {
    auto g = lollipop(3, 2);
    auto sub = induced_subgraph(g, VertexSet(g.size(), {0, 1, 2, 3}));
    CHECK(sub.graph.regular_degree() == 3u);
  }
}

TEST_CASE("boundary") {
  auto b = boundary(cycle(8), VertexSet(8, {0, 1, 2, 3}));
  CHECK(b.vertices == VertexSet(8, {0, 3}));
  CHECK(b.edge_count == 2);

  auto k5 = boundary(complete(5), VertexSet(5, {0, 1}));
  CHECK(k5.vertices.size() == 2);
  CHECK(k5.edge_count == 6);

  auto g = lollipop(3, 2);
  auto lb = boundary(g, VertexSet(g.size(), {0, 1, 2, 3}));
  CHECK(lb.vertices == VertexSet(g.size(), {lollipop_attach_vertex(3)}));
  CHECK(lb.edge_count == 1);

  CHECK_THROWS_AS(boundary(cycle(4), VertexSet::all(4)), PreconditionError);
}

TEST_CASE("lazy transform shifts the normalized spectrum to (lambda+1)/2") {
  auto edge = lazy_transform(path(2));
  CHECK(edge.loop_multiplicity(0) == 1);
  auto ev = spectrum(edge, MatrixKind::normalized_adjacency).eigenvalues;
  CHECK(ev(0) == doctest::Approx(1.0));
  CHECK(ev(1) == doctest::Approx(0.0));

  auto c4 = spectrum(lazy_transform(cycle(4)), MatrixKind::normalized_adjacency).eigenvalues;
  CHECK(c4(0) == doctest::Approx(1.0));
  CHECK(c4(1) == doctest::Approx(0.5));
  CHECK(c4(2) == doctest::Approx(0.5));
  CHECK(c4(3) == doctest::Approx(0.0));

  auto k3 = spectrum(lazy_transform(complete(3)), MatrixKind::normalized_adjacency).eigenvalues;
  CHECK(k3(1) == doctest::Approx(0.25));
  CHECK(k3(2) == doctest::Approx(0.25));
}

TEST_CASE("graph statistics") {
  auto c8 = graph_stats(cycle(8));
  CHECK(c8.connected);
  CHECK(c8.diameter == 4u);
  CHECK(c8.max_degree == 2);

  auto empty = graph_stats(GraphBuilder(2).build());
  CHECK_FALSE(empty.connected);
  CHECK_FALSE(empty.diameter.has_value());

  auto k5 = graph_stats(complete(5));
  CHECK(k5.diameter == 1u);
  CHECK(k5.max_degree == 4);
}

TEST_CASE("bipartiteness and subset connectivity") {
  CHECK(is_bipartite(cycle(6)));
  CHECK_FALSE(is_bipartite(cycle(5)));
  CHECK(is_connected_subset(cycle(8), VertexSet(8, {7, 0, 1})));
  CHECK_FALSE(is_connected_subset(cycle(8), VertexSet(8, {0, 2})));
  auto d = bfs_distances(path(4), 0);
  CHECK(d[3] == 3);
}
