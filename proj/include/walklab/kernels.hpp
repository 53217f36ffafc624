#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

#include "walklab/graph.hpp"

// Data-parallel inner loops. Every kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::omp with the same
// signature; tests hold them equal and walklab_bench times them.
namespace walklab::kernels {

struct CsrMatrix {
  std::size_t rows = 0;
  std::vector<std::size_t> row_ptr;
  std::vector<Vertex> cols;
  std::vector<double> values;
};

/// Ã(u,v) = mult(u,v) / sqrt(deg u deg v).
CsrMatrix normalized_adjacency_csr(const Multigraph& g);
/// Row v holds one SRW step from v: mult(v,w) / deg(v).
CsrMatrix step_csr(const Multigraph& g);

/// Dense square matrix of arbitrary-precision integers, row-major.
struct IntMatrix {
  std::size_t n = 0;
  std::vector<mpz_class> data;

  explicit IntMatrix(std::size_t size = 0) : n(size), data(size * size, 0) {}
  mpz_class& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix adjacency_int(const Multigraph& g);

namespace serial {
void matvec(const CsrMatrix& m, std::span<const double> x, std::span<double> y);
IntMatrix int_matmul(const IntMatrix& a, const IntMatrix& b);
}  // namespace serial

namespace omp {
void matvec(const CsrMatrix& m, std::span<const double> x, std::span<double> y);
IntMatrix int_matmul(const IntMatrix& a, const IntMatrix& b);
}  // namespace omp

/// A^p by repeated squaring on the OpenMP kernel.
IntMatrix int_matrix_power(const IntMatrix& a, std::size_t p);

}  // namespace walklab::kernels
