#pragma once

#include <Eigen/Dense>
#include <gmpxx.h>
#include <json.hpp>

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "walklab/check.hpp"
#include "walklab/graph.hpp"

namespace walklab {

enum class MatrixKind { adjacency, normalized_adjacency, transition };

std::string_view to_string(MatrixKind k);
/// Accepts "A"/"adjacency", "N"/"normalized", "P"/"transition".
MatrixKind parse_matrix_kind(std::string_view text);

/// Principal submatrix of a full-graph matrix. Degrees always come from the
/// whole graph, never from the induced subgraph. The transition kind is held
/// through its symmetrization Ã_S plus the degree vector.
struct MatrixView {
  MatrixKind kind = MatrixKind::normalized_adjacency;
  Eigen::MatrixXd matrix;
  Eigen::VectorXd degrees;
  std::vector<Vertex> members;

  /// P_S = D_S^{1/2} Ã_S D_S^{-1/2} (columns sum to at most one).
  Eigen::MatrixXd transition() const;
};

MatrixView matrix_view(const Multigraph& g, MatrixKind kind,
                       const std::optional<VertexSet>& subset = std::nullopt);

struct SpectralResult {
  /// Descending.
  Eigen::VectorXd eigenvalues;
  /// Orthonormal columns matching eigenvalues.
  Eigen::MatrixXd eigenvectors;
  /// max_i ||M v_i - λ_i v_i||.
  double residual = 0.0;
  /// max |V^T V - I|.
  double orthogonality_error = 0.0;
};

inline constexpr std::size_t kMaxDenseDimension = 4096;

/// Full decomposition of a symmetric matrix (dimension at most 4096).
SpectralResult eig_sym(const Eigen::MatrixXd& m);

SpectralResult spectrum(const Multigraph& g, MatrixKind kind,
                        const std::optional<VertexSet>& subset = std::nullopt);

nlohmann::json to_json(const SpectralResult& r, bool with_vectors = false);

/// Closed interval [lo, hi].
struct Interval {
  double lo;
  double hi;
  Interval(double lo_, double hi_);
};

/// 1e-8 * max(1, |λ_1|).
double default_multiplicity_tol(const Eigen::VectorXd& descending);

/// Number of eigenvalues in [lo - tol, hi + tol].
std::size_t multiplicity(const Eigen::VectorXd& eigenvalues, const Interval& interval, double tol);

struct PerronResult {
  double lambda1 = 0.0;
  /// Positive unit vector, indexed like `members`.
  Eigen::VectorXd vector;
  std::vector<Vertex> members;
  double residual = 0.0;
  /// λ_1 - λ_2 of the submatrix (infinite for a single vertex).
  double gap = 0.0;

  double at(Vertex v) const;
};

/// Perron pair of the principal submatrix on S. For the transition kind the
/// vector is the right Perron vector D^{1/2} ψ_S / ||D^{1/2} ψ_S|| of P_S.
/// Throws when the induced subgraph on S is disconnected.
PerronResult perron(const Multigraph& g, const VertexSet& s, MatrixKind kind);

/// Largest-eigenvalue data of an arbitrary symmetric nonnegative matrix whose
/// graph is connected.
PerronResult perron_of_matrix(const Eigen::MatrixXd& m, std::vector<Vertex> members);

struct Lambda2Bound {
  /// Rayleigh quotient of φ after projecting out the top eigenvector of Ã.
  double bound = 0.0;
  /// Rayleigh quotient of φ as built (+1 on one edge, -1 on the other).
  double raw = 0.0;
  std::pair<Vertex, Vertex> first_edge;
  std::pair<Vertex, Vertex> second_edge;
  Eigen::VectorXd phi;
  double lambda2 = 0.0;
};

/// Test-vector lower bound on λ_2(Ã) from two edges at distance >= 2.
/// Requires a connected graph of diameter >= 4.
Lambda2Bound rayleigh_lambda2_lower_bound(const Multigraph& g);

enum class TraceMode { exact_integer, floating };

struct TraceValue {
  double value = 0.0;
  std::optional<mpz_class> exact;
};

inline constexpr std::size_t kExactTraceMemoryCap = 256ULL << 20;

/// tr(M^length). Exact mode (adjacency only) uses big-integer matrix powers
/// and throws CapacityError past the 256 MiB cap; floating mode sums λ^length.
TraceValue trace_power(const Multigraph& g, MatrixKind kind, std::size_t length, TraceMode mode);
double trace_power(const Eigen::VectorXd& eigenvalues, std::size_t length);

/// Cauchy interlacing on Ã: m_G(I) <= m_sub(I) + |D| where the submatrix is
/// Ã restricted to V \ D.
CertifiedCheck interlacing_check(const Multigraph& g, const VertexSet& deleted,
                                 const Interval& interval, double tol = kCertificateTol);

}  // namespace walklab
