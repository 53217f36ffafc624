#pragma once

#include <json.hpp>

#include <vector>

#include "walklab/check.hpp"
#include "walklab/graph.hpp"
#include "walklab/spectral.hpp"

namespace walklab {

/// Adds v and the single entry (u, v) to the principal submatrix on S and
/// compares its top eigenvalue with the one-vertex perturbation bound.
/// `kind` is normalized_adjacency or adjacency.
CertifiedCheck perturbation_bound(const Multigraph& g, const VertexSet& s, Vertex u, Vertex v,
                                  MatrixKind kind = MatrixKind::normalized_adjacency);

enum class ExtensionStrategy {
  /// Ã, u = boundary vertex with the largest Perron entry.
  electric,
  /// A, u = vertex of S with the largest Perron entry (must have an outside neighbour).
  argmax
};

struct ExtensionStep {
  VertexSet set;
  Vertex u;
  Vertex v;
  double lambda1;
  double guaranteed_increment;
};

struct ExtensionTrace {
  ExtensionStrategy strategy = ExtensionStrategy::electric;
  std::vector<ExtensionStep> steps;
  VertexSet final_set;
  double initial_lambda1 = 0.0;
  double final_lambda1 = 0.0;
  std::vector<CertifiedCheck> checks;
};

/// Grows S one vertex at a time until it has 2|S| vertices.
ExtensionTrace extend_support(const Multigraph& g, const VertexSet& s, ExtensionStrategy strategy);

nlohmann::json to_json(const ExtensionTrace& trace);

/// Boundary Perron entry against the main and the resistance-refined bound,
/// plus the electrical step that backs them.
Report electric_theorem_check(const Multigraph& g, const VertexSet& s);

/// Largest adjacency Perron entry over vertices of non-maximal degree
/// against 1 / (Δ^2 λ1(A) |V|^{5/2}).
CertifiedCheck irregular_corollary_check(const Multigraph& h);

}  // namespace walklab
