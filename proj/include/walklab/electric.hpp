#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "walklab/check.hpp"
#include "walklab/graph.hpp"

namespace walklab {

// Every edge is a unit resistor; a multiedge of multiplicity m is m resistors
// in parallel. Loops carry no current.

/// Two-point effective resistance through a grounded Laplacian solve.
double effective_resistance(const Multigraph& g, Vertex a, Vertex b);

struct VoltageSolution {
  /// f[v] in [0, 1] with f[s] = 0 and f[t] = 1.
  std::vector<double> f;
  Vertex s = 0;
  Vertex t = 0;
  /// Current leaving t, which equals the current entering s.
  double flow_out = 0.0;
  /// Max Kirchhoff violation over vertices other than s and t.
  double residual = 0.0;
};

/// Voltages with s grounded and t held at one.
VoltageSolution solve_voltages(const Multigraph& g, Vertex s, Vertex t);

struct Contraction {
  Multigraph graph;
  /// Id of the merged vertex (always the last one).
  Vertex merged;
  /// to_contracted[v] for every original vertex; members of B map to merged.
  std::vector<Vertex> to_contracted;
};

/// Merges B into one vertex. Edges inside B vanish, edges into B are
/// redirected to the merged vertex with multiplicities summed.
Contraction contract(const Multigraph& g, const VertexSet& b);

/// P_x(hit target before taboo) for the SRW on g. Zero when x cannot reach
/// the target while avoiding the taboo set.
double hitting_prob(const Multigraph& g, Vertex x, const VertexSet& target,
                    const std::optional<VertexSet>& taboo);

struct HighVoltageNeighbor {
  Vertex x = 0;
  double f_x = 0.0;
  /// "electric" normally, "boundary-max" when t itself is a boundary vertex.
  std::string mode;
  std::vector<CertifiedCheck> checks;
  nlohmann::json data;
};

/// Contracts the boundary B of S to s, drives unit voltage from s to t and
/// returns the neighbor of s inside S \ B carrying the largest current.
HighVoltageNeighbor find_high_voltage_boundary_neighbor(const Multigraph& g, const VertexSet& s, Vertex t);

}  // namespace walklab
