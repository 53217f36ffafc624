#include <doctest.h>

#include "support/oracles.hpp"
#include "walklab/electric.hpp"
#include "walklab/error.hpp"
#include "walklab/generators.hpp"

using namespace walklab;

TEST_CASE("series and parallel resistances") {
  CHECK(effective_resistance(multipath(5, 1), 0, 4) == doctest::Approx(4.0));
  CHECK(effective_resistance(cycle(4), 0, 1) == doctest::Approx(0.75));
  CHECK(effective_resistance(multipath(3, 2), 0, 2) == doctest::Approx(1.0));
  CHECK_THROWS_AS(effective_resistance(GraphBuilder(2).build(), 0, 1), PreconditionError);
}

TEST_CASE("resistance matches a pseudo-inverse oracle") {
  Rng rng(8);
  for (int rep = 0; rep < 20; ++rep) {
    auto g = oracle::random_connected(6 + rep, rep, rng);
    const auto a = static_cast<Vertex>(rng.below(g.size()));
    auto b = static_cast<Vertex>(rng.below(g.size()));
    if (a == b) b = static_cast<Vertex>((b + 1) % g.size());
    CHECK(effective_resistance(g, a, b) == doctest::Approx(oracle::resistance_pinv(g, a, b)).epsilon(1e-9));
  }
}

TEST_CASE("voltages are harmonic with grounded source") {
  auto sol = solve_voltages(cycle(6), 0, 3);
  CHECK(sol.f[0] == doctest::Approx(0.0));
  CHECK(sol.f[3] == doctest::Approx(1.0));
  CHECK(sol.f[1] == doctest::Approx(1.0 / 3.0));
  CHECK(sol.residual < 1e-10);
  CHECK(sol.flow_out == doctest::Approx(1.0 / effective_resistance(cycle(6), 0, 3)));
}

TEST_CASE("contraction") {
  auto c = contract(cycle(4), VertexSet(4, {1, 3}));
  CHECK(c.graph.size() == 3);
  CHECK(c.graph.multiplicity(c.merged, c.to_contracted[0]) == 2);
  CHECK(c.graph.multiplicity(c.merged, c.to_contracted[2]) == 2);

  auto k = contract(complete(4), VertexSet(4, {2, 3}));
  CHECK(k.graph.size() == 3);
  CHECK(k.graph.multiplicity(k.merged, k.to_contracted[0]) == 2);
  CHECK(k.graph.multiplicity(k.to_contracted[0], k.to_contracted[1]) == 1);
  CHECK_FALSE(k.graph.has_loops());

  auto single = contract(cycle(5), VertexSet(5, {2}));
  CHECK(single.graph.edges().size() == 5);
  CHECK_THROWS_AS(contract(cycle(3), VertexSet::all(3)), PreconditionError);
}

TEST_CASE("hitting probabilities") {
  CHECK(hitting_prob(multipath(5, 1), 1, VertexSet(5, {4}), VertexSet(5, {0})) == doctest::Approx(0.25));
  CHECK(hitting_prob(star(4), 0, VertexSet(5, {1, 2, 3, 4}), std::nullopt) == doctest::Approx(1.0));
  CHECK(hitting_prob(cycle(4), 1, VertexSet(4, {2}), VertexSet(4, {0})) == doctest::Approx(0.5));
  CHECK(hitting_prob(path(5), 0, VertexSet(5, {4}), VertexSet(5, {2})) == 0.0);
  CHECK_THROWS_AS(hitting_prob(cycle(4), 1, VertexSet(4, {1}), std::nullopt), PreconditionError);

  Rng rng(21);
  for (int rep = 0; rep < 15; ++rep) {
    auto g = oracle::random_connected(7 + rep % 5, rep, rng);
    const auto x = static_cast<Vertex>(0);
    const auto t = static_cast<Vertex>(g.size() - 1);
    const auto z = static_cast<Vertex>(1 + rng.below(g.size() - 2));
    CHECK(hitting_prob(g, x, VertexSet(g.size(), {t}), VertexSet(g.size(), {z})) ==
          doctest::Approx(oracle::hitting_value_iteration(g, x, {t}, {z})).epsilon(1e-8));
  }
}

TEST_CASE("high-voltage boundary neighbor") {
  SUBCASE("path inside the 8-cycle") {
    auto res = find_high_voltage_boundary_neighbor(cycle(8), VertexSet(8, {0, 1, 2, 3, 4}), 2);
    CHECK((res.x == 1 || res.x == 3));
    for (const auto& c : res.checks) CHECK_MESSAGE(c.acceptable(), c.name);
    CHECK(res.f_x == doctest::Approx(hitting_prob(cycle(8), res.x, VertexSet(8, {0, 4}), VertexSet(8, {2}))));
  }
  SUBCASE("target on the boundary") {
    auto res = find_high_voltage_boundary_neighbor(cycle(8), VertexSet(8, {0, 1, 2}), 0);
    CHECK(res.mode == "boundary-max");
    CHECK(res.x == 0);
  }
  SUBCASE("multiplicity-one subpath of a larger cycle") {
    auto g = cycle(12);
    auto res = find_high_voltage_boundary_neighbor(g, VertexSet(12, {2, 3, 4, 5, 6, 7}), 4);
    CHECK(res.f_x >= 1.0 / (2.0 * 36.0));
    for (const auto& c : res.checks) CHECK_MESSAGE(c.acceptable(), c.name);
  }
}
