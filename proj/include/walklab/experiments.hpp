#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "walklab/check.hpp"
#include "walklab/graph.hpp"

namespace walklab {

enum class DeletionVariant { normalized, highdeg };

struct DeletionOptions {
  DeletionVariant variant = DeletionVariant::normalized;
  std::uint64_t seed = 0;
  /// Independent deletions tried; the one with the smallest trace is kept.
  std::size_t retries = 1;
  /// Replaces the formula for s when set.
  std::optional<std::size_t> s_override;
};

/// Random deletion of ceil(cn/s) vertices followed by every inequality of
/// the trace chain, evaluated on the realized principal submatrix.
Report deletion_pipeline(const Multigraph& g, const DeletionOptions& options);

/// Number of connected s-vertex sets containing x against Δ^{2s}.
CertifiedCheck gamma_enumeration_check(const Multigraph& g, Vertex x, std::size_t s);

/// Connected s-subsets containing x, each sorted; used by the check above.
std::vector<std::vector<Vertex>> connected_subsets_containing(const Multigraph& g, Vertex x, std::size_t s);

/// Transfer of closed walks from z to x inside T, and the pigeonhole bound
/// for the best z. Returns both checks in that order.
std::vector<CertifiedCheck> walk_transfer_check(const Multigraph& g, const VertexSet& t, Vertex x, Vertex z,
                                                std::size_t k, std::size_t s);

/// Perron entry at the attach vertex and the exact depth-fraction bound for
/// each ℓ in `ells`, on lollipop(d, n) with walks of length 2k.
Report lollipop_report(std::size_t d, std::size_t n, std::size_t k, const std::vector<std::size_t>& ells);

/// Quotient-model checks for mangrove(d, n) over a grid of n, plus the
/// log-log slope of the leaf entry.
Report mangrove_report(std::size_t d, const std::vector<std::size_t>& ns);

/// Trace-based lower bound on the number of adjacency eigenvalues in
/// [b, λ2] of a bipartite d-regular graph.
Report ramanujan_trace_bound(const Multigraph& g, std::size_t k, double b);

}  // namespace walklab
