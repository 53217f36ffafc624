#include <doctest.h>

#include "support/oracles.hpp"
#include "walklab/error.hpp"
#include "walklab/generators.hpp"
#include "walklab/walks.hpp"

#include <cmath>

using namespace walklab;

TEST_CASE("return probabilities") {
  CHECK(closed_walk_prob(cycle(4), 0, 2) == doctest::Approx(0.5));
  CHECK(closed_walk_prob(cycle(4), 0, 4) == doctest::Approx(0.5));
  CHECK(closed_walk_prob(lollipop(3, 4), 2, 0) == doctest::Approx(1.0));
  CHECK(return_probability(complete(3), 0, 3) == doctest::Approx(0.25));
  CHECK_THROWS_AS(closed_walk_prob(cycle(4), 0, 3), PreconditionError);
}

TEST_CASE("exact support profile on the 4-cycle") {
  auto p = support_profile_exact(cycle(4), 0, 4);
  CHECK(p.total_closed == doctest::Approx(0.5));
  CHECK(p.conditional(2) == doctest::Approx(0.25));
  CHECK(p.by_support.at(3) / p.total_closed == doctest::Approx(0.5));
  CHECK(p.by_support.at(4) / p.total_closed == doctest::Approx(0.25));
  CHECK(p.exact_cumulative(4) == mpq_class(1, 2));
  CHECK(p.exact_cumulative(2) == mpq_class(1, 8));
}

TEST_CASE("exact support profile small cases") {
  auto e = support_profile_exact(path(2), 0, 2);
  CHECK(e.conditional(2) == doctest::Approx(1.0));
  auto k3 = support_profile_exact(complete(3), 0, 2);
  CHECK(k3.total_closed == doctest::Approx(0.5));
  CHECK(k3.conditional(2) == doctest::Approx(1.0));
}

TEST_CASE("exact profile agrees with brute-force enumeration") {
  Rng rng(17);
  for (int rep = 0; rep < 12; ++rep) {
    auto g = oracle::random_connected(4 + rep % 4, rep % 5, rng);
    if (rep % 3 == 0) g = lazy_transform(g);
    const auto x = static_cast<Vertex>(rng.below(g.size()));
    const std::size_t len = 2 + 2 * (rep % 3);
    auto p = support_profile_exact(g, x, len);
    auto truth = oracle::support_masses(g, x, len);
    for (const auto& [s, mass] : truth) {
      mpq_class got(p.exact_numerators.count(s) ? p.exact_numerators.at(s) : mpz_class(0), p.denominator);
      got.canonicalize();
      CHECK(got == mass);
    }
    auto counts = support_profile_exact(g, x, len, WalkWeight::count);
    auto truth_counts = oracle::support_counts(g, x, len);
    for (const auto& [s, c] : truth_counts) CHECK(counts.exact_numerators.at(s) == c);
  }
}

TEST_CASE("sampler") {
  Rng rng(5);
  auto w = sample_closed_walk(path(2), 0, 2, rng);
  CHECK(w.vertices == std::vector<Vertex>{0, 1, 0});

  int first_one = 0;
  for (int i = 0; i < 2000; ++i) first_one += sample_closed_walk(complete(3), 0, 2, rng).vertices[1] == 1;
  CHECK(std::abs(first_one - 1000) < 150);

  CHECK_THROWS_AS(ClosedWalkSampler(path(3), 0, 3), PreconditionError);
}

TEST_CASE("Monte Carlo profile") {
  auto mc = support_profile_mc(cycle(4), 0, 4, 100000, 1);
  CHECK(mc.conditional(3) >= 0.49);
  CHECK(mc.conditional(3) <= 0.51);
  CHECK_THROWS_WITH(support_profile_mc(cycle(4), 0, 4, 0, 1), doctest::Contains("empty sample"));

  auto a = support_profile_mc(cycle(6), 0, 6, 5000, 9, 3);
  auto b = support_profile_mc(cycle(6), 0, 6, 5000, 9, 3);
  CHECK(a.sample_counts == b.sample_counts);
}

TEST_CASE("lollipop mean support agrees with exact DP") {
  auto g = lollipop(4, 8);
  const auto v = lollipop_attach_vertex(4);
  auto exact = support_profile_exact(g, v, 20);
  double mean = 0.0;
  for (const auto& [s, m] : exact.by_support) mean += static_cast<double>(s) * m / exact.total_closed;
  auto mc = support_profile_mc(g, v, 20, 10000, 3);
  CHECK(mean >= mc.mean_support_ci95.first);
  CHECK(mean <= mc.mean_support_ci95.second);
}

TEST_CASE("tree closed-walk counts") {
  CHECK(tree_closed_walk_count(3, 1) == 3);
  CHECK(tree_closed_walk_count(3, 2) == 15);
  CHECK(tree_closed_walk_count(3, 3) == 87);
  for (std::size_t d = 2; d <= 5; ++d)
    for (std::size_t k = 1; k <= 4; ++k) CHECK(tree_closed_walk_count(d, k) == oracle::tree_walks_bruteforce(d, k));
}

TEST_CASE("cyclesup range handling") {
  auto c12 = cyclesup_check(cycle(12), 0, 5, 1, CyclesupVariant::normalized);
  CHECK(c12.verdict == Verdict::vacuous);

  auto k8 = cyclesup_check(complete(8), 0, 8, 2, CyclesupVariant::highdeg);
  CHECK(k8.verdict == Verdict::vacuous);
  CHECK_FALSE(cyclesup_in_range(complete(8), 8, 2, CyclesupVariant::highdeg));
  CHECK(k8.lhs > 0.0);

  auto lazy_edge = cyclesup_check(lazy_transform(path(2)), 0, 3, 1, CyclesupVariant::normalized);
  CHECK(lazy_edge.verdict == Verdict::vacuous);
  CHECK(lazy_edge.inputs.contains("P_s"));
}

TEST_CASE("Wilson interval") {
  auto [lo, hi] = wilson_interval(50, 100);
  CHECK(lo < 0.5);
  CHECK(hi > 0.5);
  CHECK(wilson_interval(0, 10).first == 0.0);
}
