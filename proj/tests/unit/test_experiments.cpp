#include <doctest.h>

#include "walklab/error.hpp"
#include "walklab/experiments.hpp"
#include "walklab/generators.hpp"

#include <cmath>

using namespace walklab;

TEST_CASE("deletion pipeline on a random cubic graph") {
  auto g = random_regular(200, 3, 7);
  auto r = deletion_pipeline(g, {.variant = DeletionVariant::normalized, .seed = 7});
  for (const auto& c : r.checks) CHECK_MESSAGE(c.acceptable(), c.name);
  auto again = deletion_pipeline(g, {.variant = DeletionVariant::normalized, .seed = 7});
  CHECK(to_json(r).dump() == to_json(again).dump());
}

TEST_CASE("deletion pipeline edge cases") {
  auto c = deletion_pipeline(cycle(64), {});
  CHECK_FALSE(c.failed());
  auto k5 = deletion_pipeline(complete(5), {});
  CHECK_FALSE(k5.failed());
  bool vacuous = false;
  for (const auto& ch : k5.checks) vacuous |= ch.verdict == Verdict::vacuous;
  CHECK(vacuous);
  CHECK(k5.data.contains("k"));
  CHECK_THROWS_AS(deletion_pipeline(GraphBuilder(3).add_edge(0, 1).build(), {}), PreconditionError);
}

TEST_CASE("connected subsets and the gamma bound") {
  CHECK(connected_subsets_containing(cycle(8), 0, 3).size() == 3);
  auto c = gamma_enumeration_check(cycle(8), 0, 3);
  CHECK(c.rhs == 3);
  CHECK(c.lhs == 64);
  CHECK(c.verdict == Verdict::pass);
  CHECK(gamma_enumeration_check(complete(4), 0, 2).rhs == 3);
  CHECK(gamma_enumeration_check(complete(4), 0, 1).rhs == 1);
}

TEST_CASE("walk transfer") {
  auto checks = walk_transfer_check(cycle(8), VertexSet(8, {0, 1, 2, 3}), 0, 2, 4, 2);
  for (const auto& c : checks) CHECK_MESSAGE(c.acceptable(), c.name);
  auto same = walk_transfer_check(cycle(8), VertexSet(8, {0, 1, 2, 3}), 1, 1, 4, 2);
  for (const auto& c : same) CHECK_MESSAGE(c.acceptable(), c.name);
  auto smoke = walk_transfer_check(cycle(6), VertexSet(6, {0, 1}), 0, 1, 2, 1);
  for (const auto& c : smoke) CHECK_MESSAGE(c.acceptable(), c.name);
  CHECK_THROWS_AS(walk_transfer_check(cycle(8), VertexSet(8, {0, 1}), 0, 1, 3, 2), PreconditionError);
}

TEST_CASE("lollipop report") {
  auto small = lollipop_report(3, 2, 2, {});
  CHECK(small.acceptable());
  auto r = lollipop_report(4, 8, 10, {0, 2, 3, 4});
  CHECK_FALSE(r.failed());
  CHECK(r.data["psi_v"].get<double>() == doctest::Approx(0.4628).epsilon(1e-3));
}

TEST_CASE("mangrove report") {
  auto r = mangrove_report(4, {16});
  CHECK(r.acceptable());
  auto many = mangrove_report(4, {16, 32, 64, 128});
  CHECK(many.acceptable());
  const double slope = many.data["slope"].get<double>();
  CHECK(slope >= -2.8);
  CHECK(slope <= -2.2);
}

TEST_CASE("Ramanujan trace bound") {
  auto k33 = ramanujan_trace_bound(complete_bipartite(3, 3), 2, 0.5);
  CHECK_FALSE(k33.failed());
  CHECK(k33.data["trace_exact"].get<std::string>() == "162");
  auto c = ramanujan_trace_bound(cycle(12), 3, 0.0);
  CHECK_FALSE(c.failed());
  CHECK_THROWS_AS(ramanujan_trace_bound(cycle(5), 2, 0.0), PreconditionError);
}
