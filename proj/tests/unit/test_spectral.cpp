#include <doctest.h>

#include "walklab/error.hpp"
#include "walklab/generators.hpp"
#include "walklab/spectral.hpp"

#include <cmath>

using namespace walklab;

namespace {
Eigen::VectorXd eigs(const Multigraph& g, MatrixKind k) { return spectrum(g, k).eigenvalues; }
}  // namespace

TEST_CASE("principal submatrix keeps ambient degrees") {
  auto m = matrix_view(cycle(8), MatrixKind::normalized_adjacency, VertexSet(8, {0, 1})).matrix;
  CHECK(m.rows() == 2);
  CHECK(m(0, 1) == doctest::Approx(0.5));
  CHECK(m(0, 0) == 0.0);

  auto k3 = matrix_view(complete(3), MatrixKind::normalized_adjacency).matrix;
  CHECK(k3(0, 1) == doctest::Approx(0.5));
  CHECK(k3(2, 2) == 0.0);

  auto g = lollipop(3, 2);
  auto a = matrix_view(g, MatrixKind::adjacency, VertexSet(g.size(), {0, 1, 2, 3})).matrix;
  CHECK(a.sum() == doctest::Approx(12.0));
}

TEST_CASE("small closed-form spectra") {
  auto k3 = eigs(complete(3), MatrixKind::normalized_adjacency);
  CHECK(k3(0) == doctest::Approx(1.0));
  CHECK(k3(1) == doctest::Approx(-0.5));
  CHECK(k3(2) == doctest::Approx(-0.5));

  auto c4 = eigs(cycle(4), MatrixKind::normalized_adjacency);
  CHECK(c4(0) == doctest::Approx(1.0));
  CHECK(std::abs(c4(1)) < 1e-12);
  CHECK(c4(3) == doctest::Approx(-1.0));

  CHECK(eigs(multipath(3, 2), MatrixKind::adjacency)(0) == doctest::Approx(2 * std::sqrt(2.0)));

  // transition matrix is similar to the normalized one
  auto g = lollipop(4, 3);
  auto p = eigs(g, MatrixKind::transition);
  auto n = eigs(g, MatrixKind::normalized_adjacency);
  CHECK((p - n).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("eig_sym rejects bad matrices") {
  Eigen::MatrixXd asym(2, 2);
  asym << 0, 1, 0, 0;
  CHECK_THROWS_AS(eig_sym(asym), PreconditionError);
  CHECK_THROWS_AS(eig_sym(Eigen::MatrixXd(2, 3)), PreconditionError);
}

TEST_CASE("eigenvalue multiplicity in an interval") {
  auto c4 = eigs(cycle(4), MatrixKind::normalized_adjacency);
  CHECK(multiplicity(c4, Interval(-0.1, 0.1), 0.0) == 2);
  CHECK(multiplicity(eigs(complete_bipartite(3, 3), MatrixKind::adjacency), Interval(0, 0), 1e-9) == 4);
  CHECK(multiplicity(eigs(complete(5), MatrixKind::normalized_adjacency), Interval(-0.25, -0.25), 1e-9) == 4);
  CHECK_THROWS(Interval(1.0, 0.0));
}

TEST_CASE("Perron vectors") {
  SUBCASE("one edge in a max-degree-2 host") {
    auto p = perron(cycle(6), VertexSet(6, {2, 3}), MatrixKind::normalized_adjacency);
    CHECK(p.lambda1 == doctest::Approx(0.5));
  }
  SUBCASE("star adjacency") {
    auto p = perron(star(3), VertexSet::all(4), MatrixKind::adjacency);
    CHECK(p.lambda1 == doctest::Approx(std::sqrt(3.0)));
    CHECK(p.at(0) == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(p.at(1) == doctest::Approx(1 / std::sqrt(6.0)));
  }
  SUBCASE("path inside the 8-cycle") {
    auto p = perron(cycle(8), VertexSet(8, {0, 1, 2, 3}), MatrixKind::normalized_adjacency);
    CHECK(p.lambda1 == doctest::Approx(std::cos(M_PI / 5)));
    CHECK((p.vector.array() > 0).all());
    CHECK(p.vector.norm() == doctest::Approx(1.0));
  }
  SUBCASE("disconnected subset is rejected") {
    CHECK_THROWS_AS(perron(cycle(8), VertexSet(8, {0, 2}), MatrixKind::normalized_adjacency), PreconditionError);
  }
}

TEST_CASE("test-vector lower bound on lambda2") {
  auto c8 = rayleigh_lambda2_lower_bound(cycle(8));
  CHECK(c8.bound == doctest::Approx(0.5));
  CHECK(c8.lambda2 == doctest::Approx(std::cos(M_PI / 4)));

  auto c12 = rayleigh_lambda2_lower_bound(cycle(12));
  CHECK(c12.bound == doctest::Approx(0.5));
  CHECK(c12.lambda2 == doctest::Approx(std::cos(M_PI / 6)));

  auto p9 = rayleigh_lambda2_lower_bound(path(9));
  CHECK(p9.bound <= p9.lambda2 + 1e-12);
  CHECK(p9.bound >= 0.5 - 1e-12);

  CHECK_THROWS_AS(rayleigh_lambda2_lower_bound(complete(5)), PreconditionError);
}

TEST_CASE("closed walk traces") {
  auto c4 = trace_power(cycle(4), MatrixKind::adjacency, 4, TraceMode::exact_integer);
  REQUIRE(c4.exact.has_value());
  CHECK(*c4.exact == 32);
  CHECK(trace_power(complete(3), MatrixKind::adjacency, 2, TraceMode::exact_integer).value == 6.0);
  CHECK(trace_power(cycle(4), MatrixKind::normalized_adjacency, 4, TraceMode::floating).value ==
        doctest::Approx(2.0));
  CHECK(trace_power(cycle(5), MatrixKind::adjacency, 6, TraceMode::floating).value ==
        doctest::Approx(trace_power(cycle(5), MatrixKind::adjacency, 6, TraceMode::exact_integer).value));
  CHECK_THROWS_AS(trace_power(cycle(4), MatrixKind::normalized_adjacency, 4, TraceMode::exact_integer),
                  PreconditionError);
}

TEST_CASE("Cauchy interlacing check") {
  auto k5 = interlacing_check(complete(5), VertexSet(5, {4}), Interval(-0.25, -0.25));
  CHECK(k5.verdict == Verdict::pass);
  CHECK(k5.lhs == 4);
  CHECK(k5.rhs == 4);

  CHECK(interlacing_check(cycle(4), VertexSet(4, {0}), Interval(-1, 1)).verdict == Verdict::pass);
  auto edge = interlacing_check(path(2), VertexSet(2, {0}), Interval(1, 1));
  CHECK(edge.verdict == Verdict::pass);
  CHECK(edge.lhs == 1);
}
