#include <doctest.h>

#include "support/oracles.hpp"
#include "walklab/generators.hpp"
#include "walklab/kernels.hpp"
#include "walklab/spectral.hpp"

#include <vector>

using namespace walklab;
using namespace walklab::kernels;

TEST_CASE("omp matvec matches the serial reference bit for bit") {
  Rng rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    auto g = oracle::random_connected(50 + 10 * rep, 40, rng);
    for (const auto& m : {normalized_adjacency_csr(g), step_csr(g)}) {
      std::vector<double> x(g.size());
      for (auto& v : x) v = rng.uniform();
      std::vector<double> ys(g.size()), yo(g.size());
      serial::matvec(m, x, ys);
      omp::matvec(m, x, yo);
      CHECK(ys == yo);
    }
  }
}

TEST_CASE("normalized csr agrees with the dense view") {
  auto g = lollipop(3, 3);
  auto csr = normalized_adjacency_csr(g);
  auto dense = matrix_view(g, MatrixKind::normalized_adjacency).matrix;
  for (std::size_t j = 0; j < g.size(); ++j) {
    std::vector<double> e(g.size(), 0.0), y(g.size());
    e[j] = 1.0;
    serial::matvec(csr, e, y);
    for (std::size_t i = 0; i < g.size(); ++i)
      CHECK(y[i] == doctest::Approx(dense(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
  }
}

TEST_CASE("integer matmul kernels agree and power counts walks") {
  auto a = adjacency_int(cycle(6));
  CHECK(serial::int_matmul(a, a) == omp::int_matmul(a, a));
  auto a4 = int_matrix_power(adjacency_int(cycle(4)), 4);
  mpz_class trace = 0;
  for (std::size_t i = 0; i < 4; ++i) trace += a4(i, i);
  CHECK(trace == 32);
  auto k = int_matrix_power(adjacency_int(complete(4)), 0);
  CHECK(k(2, 2) == 1);
  CHECK(k(1, 2) == 0);
}
