#include <doctest.h>

#include "support/oracles.hpp"
#include "walklab/error.hpp"
#include "walklab/generators.hpp"
#include "walklab/perron_lab.hpp"

#include <cmath>

using namespace walklab;

TEST_CASE("perturbation bound worked instances") {
  auto c = perturbation_bound(cycle(8), VertexSet(8, {0, 1}), 1, 2);
  CHECK(c.verdict == Verdict::pass);
  CHECK(c.rhs == doctest::Approx(0.5 * (0.5 + std::sqrt(0.25 + 0.25 * 0.5))));
  CHECK(c.lhs == doctest::Approx(std::sqrt(2.0) / 2));

  auto k8 = perturbation_bound(complete(8), VertexSet(8, {0, 1}), 1, 2, MatrixKind::adjacency);
  CHECK(k8.verdict == Verdict::pass);
  CHECK(k8.rhs == doctest::Approx(0.5 * (1 + std::sqrt(1.5))));
  CHECK(k8.lhs == doctest::Approx(std::sqrt(2.0)));

  CHECK_THROWS_AS(perturbation_bound(cycle(8), VertexSet(8, {0, 1}), 1, 5), PreconditionError);
}

TEST_CASE("support extension") {
  auto t = extend_support(cycle(8), VertexSet(8, {0, 1}), ExtensionStrategy::electric);
  CHECK(t.final_set.size() == 4);
  CHECK(t.final_lambda1 == doctest::Approx(std::cos(M_PI / 5)));
  for (const auto& c : t.checks) CHECK_MESSAGE(c.acceptable(), c.name);

  auto a = extend_support(complete(8), VertexSet(8, {0, 1}), ExtensionStrategy::argmax);
  CHECK(a.final_set.size() == 4);
  CHECK(a.final_lambda1 >= 1 + std::log(2.0) / 6);
  for (const auto& c : a.checks) CHECK_MESSAGE(c.acceptable(), c.name);

  CHECK_THROWS_AS(extend_support(cycle(8), VertexSet(8, {0}), ExtensionStrategy::electric), PreconditionError);
}

TEST_CASE("large Perron entry near the boundary") {
  auto r = electric_theorem_check(cycle(8), VertexSet(8, {0, 1, 2, 3}));
  CHECK(r.acceptable());
  auto r2 = electric_theorem_check(cycle(8), VertexSet(8, {3, 4}));
  CHECK(r2.acceptable());
  auto g = lollipop(4, 8);
  auto r3 = electric_theorem_check(g, VertexSet(g.size(), {0, 1, 2, 3, 4, 5}));
  CHECK(r3.acceptable());
  CHECK_THROWS_AS(electric_theorem_check(cycle(5), VertexSet::all(5)), PreconditionError);

  Rng rng(4);
  for (int rep = 0; rep < 25; ++rep) {
    auto h = oracle::random_connected(8 + rep % 7, rep % 6, rng);
    auto s = oracle::random_connected_subset(h, 2 + rep % 4, rng);
    auto rep_report = electric_theorem_check(h, VertexSet(h.size(), s));
    for (const auto& c : rep_report.checks) CHECK_MESSAGE(c.acceptable(), c.name);
  }
}

TEST_CASE("Perron entry at a low-degree vertex") {
  auto star_check = irregular_corollary_check(star(3));
  CHECK(star_check.verdict == Verdict::pass);
  CHECK(star_check.lhs == doctest::Approx(1 / std::sqrt(6.0)).epsilon(1e-9));
  CHECK(star_check.rhs == doctest::Approx(1 / (9 * std::sqrt(3.0) * 32)));
  CHECK(irregular_corollary_check(path(5)).verdict == Verdict::pass);
  CHECK(irregular_corollary_check(lollipop(4, 8)).verdict == Verdict::pass);
  CHECK_THROWS_WITH(irregular_corollary_check(cycle(6)), doctest::Contains("corollary requires irregular"));
}
