#include "walklab/electric.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "walklab/error.hpp"

namespace walklab {

namespace {

using Triplet = Eigen::Triplet<double>;

/// Vertices reachable from `start` without entering a blocked vertex.
std::vector<bool> reachable_avoiding(const Multigraph& g, Vertex start, const std::vector<bool>& blocked) {
  std::vector<bool> seen(g.size(), false);
  std::deque<Vertex> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (const Neighbor& nb : g.neighbors(v)) {
      if (seen[nb.to] || blocked[nb.to]) continue;
      seen[nb.to] = true;
      queue.push_back(nb.to);
    }
  }
  return seen;
}

/// Solves L_UU h_U = rhs for a set of unknowns U given as a membership mask
/// where L is the loop-free Laplacian. `boundary_value[w]` is used for w not in U.
std::vector<double> harmonic_extension(const Multigraph& g, const std::vector<bool>& unknown,
                                       const std::vector<double>& boundary_value) {
  const std::size_t n = g.size();
  std::vector<Eigen::Index> index(n, -1);
  Eigen::Index m = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (unknown[v]) index[v] = m++;
  std::vector<double> h = boundary_value;
  if (m == 0) return h;

  std::vector<Triplet> triplets;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
  for (std::size_t v = 0; v < n; ++v) {
    if (!unknown[v]) continue;
    double diag = 0.0;
    for (const Neighbor& nb : g.neighbors(static_cast<Vertex>(v))) {
      if (nb.to == v) continue;
      const auto c = static_cast<double>(nb.mult);
      diag += c;
      if (unknown[nb.to])
        triplets.emplace_back(index[v], index[nb.to], -c);
      else
        rhs(index[v]) += c * boundary_value[nb.to];
    }
    triplets.emplace_back(index[v], index[v], diag);
  }
  Eigen::SparseMatrix<double> lap(m, m);
  lap.setFromTriplets(triplets.begin(), triplets.end());
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(lap);
  if (solver.info() != Eigen::Success) throw ConvergenceError("Laplacian factorization failed");
  const Eigen::VectorXd sol = solver.solve(rhs);
  if (solver.info() != Eigen::Success) throw ConvergenceError("Laplacian solve failed");
  for (std::size_t v = 0; v < n; ++v)
    if (unknown[v]) h[v] = sol(index[v]);
  return h;
}

double net_current(const Multigraph& g, const std::vector<double>& f, Vertex v) {
  double out = 0.0;
  for (const Neighbor& nb : g.neighbors(v))
    if (nb.to != v) out += static_cast<double>(nb.mult) * (f[v] - f[nb.to]);
  return out;
}

}  // namespace

VoltageSolution solve_voltages(const Multigraph& g, Vertex s, Vertex t) {
  if (s >= g.size() || t >= g.size()) throw PreconditionError("vertex out of range");
  if (s == t) throw PreconditionError("source and sink must differ");
  std::vector<bool> blocked(g.size(), false);
  const auto component = reachable_avoiding(g, t, blocked);
  if (!component[s]) throw PreconditionError("source and sink lie in different components");

  std::vector<bool> unknown(g.size(), false);
  for (std::size_t v = 0; v < g.size(); ++v) unknown[v] = component[v] && v != s && v != t;
  std::vector<double> fixed(g.size(), 0.0);
  fixed[t] = 1.0;

  VoltageSolution sol;
  sol.s = s;
  sol.t = t;
  sol.f = harmonic_extension(g, unknown, fixed);
  sol.flow_out = net_current(g, sol.f, t);
  for (std::size_t v = 0; v < g.size(); ++v)
    if (unknown[v]) sol.residual = std::max(sol.residual, std::abs(net_current(g, sol.f, static_cast<Vertex>(v))));
  return sol;
}

double effective_resistance(const Multigraph& g, Vertex a, Vertex b) {
  const auto sol = solve_voltages(g, a, b);
  return 1.0 / sol.flow_out;
}

Contraction contract(const Multigraph& g, const VertexSet& b) {
  if (b.parent_size() != g.size()) throw PreconditionError("vertex set belongs to another graph");
  if (b.is_full()) throw PreconditionError("cannot contract every vertex");
  const std::size_t kept = g.size() - b.size();
  Contraction out{Multigraph(1, {}), static_cast<Vertex>(kept), std::vector<Vertex>(g.size())};
  Vertex next = 0;
  for (std::size_t v = 0; v < g.size(); ++v)
    out.to_contracted[v] = b.contains(static_cast<Vertex>(v)) ? out.merged : next++;
  GraphBuilder builder(kept + 1);
  for (const auto& [uv, m] : g.edges()) {
    const Vertex u = out.to_contracted[uv.first];
    const Vertex v = out.to_contracted[uv.second];
    if (u == out.merged && v == out.merged) continue;
    builder.add_edge(u, v, m);
  }
  out.graph = builder.build();
  return out;
}

double hitting_prob(const Multigraph& g, Vertex x, const VertexSet& target, const std::optional<VertexSet>& taboo) {
  if (x >= g.size()) throw PreconditionError("vertex out of range");
  if (target.parent_size() != g.size() || (taboo && taboo->parent_size() != g.size()))
    throw PreconditionError("vertex set belongs to another graph");
  std::vector<bool> blocked(g.size(), false);
  std::vector<double> value(g.size(), 0.0);
  for (Vertex v : target.members()) {
    blocked[v] = true;
    value[v] = 1.0;
  }
  if (taboo) {
    for (Vertex v : taboo->members()) {
      if (blocked[v]) throw PreconditionError("target and taboo must be disjoint");
      blocked[v] = true;
    }
  }
  if (blocked[x]) throw PreconditionError("start vertex must lie outside target and taboo");

  const auto region = reachable_avoiding(g, x, blocked);
  bool touches_target = false;
  bool touches_any = false;
  for (std::size_t v = 0; v < g.size() && !touches_target; ++v) {
    if (!region[v]) continue;
    for (const Neighbor& nb : g.neighbors(static_cast<Vertex>(v))) {
      if (!blocked[nb.to]) continue;
      touches_any = true;
      if (value[nb.to] == 1.0) touches_target = true;
    }
  }
  if (!touches_target || !touches_any) return 0.0;
  return harmonic_extension(g, region, value)[x];
}

HighVoltageNeighbor find_high_voltage_boundary_neighbor(const Multigraph& g, const VertexSet& s, Vertex t) {
  if (s.parent_size() != g.size()) throw PreconditionError("vertex set belongs to another graph");
  if (!s.contains(t)) throw PreconditionError("t must lie in S");
  if (!is_connected_subset(g, s)) throw PreconditionError("S must induce a connected subgraph");
  const auto bd = boundary(g, s);

  HighVoltageNeighbor out;
  out.data["boundary"] = std::vector<Vertex>(bd.vertices.members().begin(), bd.vertices.members().end());
  out.data["t"] = t;
  if (bd.vertices.contains(t)) {
    out.x = t;
    out.f_x = 1.0;
    out.mode = "boundary-max";
    return out;
  }

  const auto k = contract(g, bd.vertices);
  const Vertex sink = k.to_contracted[t];
  const auto volt = solve_voltages(k.graph, k.merged, sink);
  const auto deg_s = k.graph.degree(k.merged) - k.graph.loop_multiplicity(k.merged);

  // Largest voltage among the merged vertex's neighbours, smallest id on ties.
  Vertex best = 0;
  double best_f = -1.0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (bd.vertices.contains(static_cast<Vertex>(v))) continue;
    const Vertex kv = k.to_contracted[v];
    if (k.graph.multiplicity(kv, k.merged) == 0) continue;
    if (volt.f[kv] > best_f) {
      best_f = volt.f[kv];
      best = static_cast<Vertex>(v);
    }
  }
  out.x = best;
  out.f_x = best_f;
  out.mode = "electric";

  const double size = static_cast<double>(s.size());
  const double reff = 1.0 / volt.flow_out;
  const double hit = best == t ? 1.0 : hitting_prob(g, best, VertexSet(g.size(), {t}), bd.vertices);
  const nlohmann::json inputs{{"x", best}, {"t", t}, {"S_size", s.size()}, {"deg_K_s", deg_s}};
  out.checks.push_back(certify("ohm_flow_bound", "f(x) >= 1/(|S| deg_K(s))", best_f,
                               1.0 / (size * static_cast<double>(deg_s)), kCertificateTol, true, inputs));
  out.checks.push_back(certify("ohm_delta_bound", "f(x) >= 1/(Delta |S|^2)", best_f,
                               1.0 / (static_cast<double>(g.max_degree()) * size * size), kCertificateTol, true,
                               inputs));
  out.checks.push_back(certify("hitting_identity", "|f(x) - P_x(tau_t < tau_B)| <= 1e-7", 1e-7,
                               std::abs(best_f - hit), 0.0, true, inputs));
  out.checks.push_back(certify("resistance_vs_size", "|S| >= Reff_K(s,t)", size, reff, kCertificateTol, true,
                               inputs));
  out.data["f_x"] = best_f;
  out.data["hitting_probability"] = hit;
  out.data["reff_K"] = reff;
  out.data["flow"] = volt.flow_out;
  out.data["voltage_residual"] = volt.residual;
  out.data["deg_K_s"] = deg_s;
  out.data["boundary_edge_count"] = bd.edge_count;
  return out;
}

}  // namespace walklab
