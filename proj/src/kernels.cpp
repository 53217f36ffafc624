#include "walklab/kernels.hpp"

#include <cmath>

#include "walklab/error.hpp"

namespace walklab::kernels {

namespace {

template <typename Weight>
CsrMatrix build_csr(const Multigraph& g, Weight weight) {
  CsrMatrix m;
  m.rows = g.size();
  m.row_ptr.reserve(g.size() + 1);
  m.row_ptr.push_back(0);
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (const Neighbor& nb : g.neighbors(static_cast<Vertex>(v))) {
      m.cols.push_back(nb.to);
      m.values.push_back(weight(static_cast<Vertex>(v), nb));
    }
    m.row_ptr.push_back(m.cols.size());
  }
  return m;
}

void check_shapes(const CsrMatrix& m, std::span<const double> x, std::span<double> y) {
  if (x.size() != m.rows || y.size() != m.rows) throw PreconditionError("matvec size mismatch");
}

}  // namespace

CsrMatrix normalized_adjacency_csr(const Multigraph& g) {
  return build_csr(g, [&](Vertex v, const Neighbor& nb) {
    return static_cast<double>(nb.mult) /
           std::sqrt(static_cast<double>(g.degree(v)) * static_cast<double>(g.degree(nb.to)));
  });
}

CsrMatrix step_csr(const Multigraph& g) {
  return build_csr(g, [&](Vertex v, const Neighbor& nb) {
    return static_cast<double>(nb.mult) / static_cast<double>(g.degree(v));
  });
}

IntMatrix adjacency_int(const Multigraph& g) {
  IntMatrix a(g.size());
  for (const auto& [key, mult] : g.edges()) {
    a(key.first, key.second) = mult;
    a(key.second, key.first) = mult;
  }
  return a;
}

namespace serial {

void matvec(const CsrMatrix& m, std::span<const double> x, std::span<double> y) {
  check_shapes(m, x, y);
  for (std::size_t i = 0; i < m.rows; ++i) {
    double acc = 0.0;
    for (std::size_t k = m.row_ptr[i]; k < m.row_ptr[i + 1]; ++k) acc += m.values[k] * x[m.cols[k]];
    y[i] = acc;
  }
}

IntMatrix int_matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.n != b.n) throw PreconditionError("int_matmul size mismatch");
  IntMatrix c(a.n);
  for (std::size_t i = 0; i < a.n; ++i) {
    for (std::size_t k = 0; k < a.n; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < a.n; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

}  // namespace serial

namespace omp {

void matvec(const CsrMatrix& m, std::span<const double> x, std::span<double> y) {
  check_shapes(m, x, y);
  const auto rows = static_cast<std::ptrdiff_t>(m.rows);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    double acc = 0.0;
    for (std::size_t k = m.row_ptr[i]; k < m.row_ptr[i + 1]; ++k) acc += m.values[k] * x[m.cols[k]];
    y[i] = acc;
  }
}

IntMatrix int_matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.n != b.n) throw PreconditionError("int_matmul size mismatch");
  IntMatrix c(a.n);
  const auto n = static_cast<std::ptrdiff_t>(a.n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    mpz_class term;
    for (std::size_t k = 0; k < a.n; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < a.n; ++j) {
        mpz_mul(term.get_mpz_t(), a(i, k).get_mpz_t(), b(k, j).get_mpz_t());
        c(i, j) += term;
      }
    }
  }
  return c;
}

}  // namespace omp

IntMatrix int_matrix_power(const IntMatrix& a, std::size_t p) {
  IntMatrix result(a.n);
  for (std::size_t i = 0; i < a.n; ++i) result(i, i) = 1;
  IntMatrix base = a;
  while (p > 0) {
    if (p & 1U) result = omp::int_matmul(result, base);
    p >>= 1U;
    if (p > 0) base = omp::int_matmul(base, base);
  }
  return result;
}

}  // namespace walklab::kernels
