#include "walklab/perron_lab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "walklab/electric.hpp"
#include "walklab/error.hpp"

namespace walklab {

namespace {

constexpr double kStepTol = 1e-10;

double delta_of(const Multigraph& g) { return static_cast<double>(g.max_degree()); }

/// Vertex of `candidates` with the largest Perron entry; smallest id on ties.
Vertex argmax_entry(const PerronResult& p, std::span<const Vertex> candidates) {
  Vertex best = candidates.front();
  double best_value = p.at(best);
  for (Vertex c : candidates) {
    const double value = p.at(c);
    if (value > best_value) {
      best_value = value;
      best = c;
    }
  }
  return best;
}

std::optional<Vertex> smallest_outside_neighbor(const Multigraph& g, const VertexSet& s, Vertex u) {
  for (const Neighbor& nb : g.neighbors(u))
    if (!s.contains(nb.to)) return nb.to;
  return std::nullopt;
}

/// Max effective resistance over pairs of the induced subgraph on S.
double max_pairwise_resistance(const Multigraph& g, const VertexSet& s) {
  const auto m = static_cast<Eigen::Index>(s.size());
  if (m < 2) return 0.0;
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (const Neighbor& nb : g.neighbors(s[static_cast<std::size_t>(i)])) {
      const auto j = s.index_of(nb.to);
      if (!j || static_cast<Eigen::Index>(*j) == i) continue;
      lap(i, static_cast<Eigen::Index>(*j)) -= static_cast<double>(nb.mult);
      lap(i, i) += static_cast<double>(nb.mult);
    }
  }
  const double inv = 1.0 / static_cast<double>(m);
  const Eigen::MatrixXd green = (lap + Eigen::MatrixXd::Constant(m, m, inv)).inverse();
  double best = 0.0;
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = a + 1; b < m; ++b) best = std::max(best, green(a, a) + green(b, b) - 2 * green(a, b));
  return best;
}

/// Edges from B to vertices outside B, loops excluded.
Multiplicity contracted_degree(const Multigraph& g, const VertexSet& b) {
  Multiplicity total = 0;
  for (Vertex v : b.members())
    for (const Neighbor& nb : g.neighbors(v))
      if (!b.contains(nb.to)) total += nb.mult;
  return total;
}

/// Δ λ1 ψ(u) >= ψ(x) for the high-voltage x and its best boundary neighbour u.
std::optional<CertifiedCheck> transition_chain_check(const Multigraph& g, const VertexSet& s,
                                                     const PerronResult& p, Vertex t,
                                                     std::vector<CertifiedCheck>* electric_checks,
                                                     nlohmann::json* data) {
  const auto found = find_high_voltage_boundary_neighbor(g, s, t);
  if (electric_checks)
    electric_checks->insert(electric_checks->end(), found.checks.begin(), found.checks.end());
  if (data) {
    (*data)["electric_mode"] = found.mode;
    (*data)["electric"] = found.data;
  }
  if (found.mode != "electric") return std::nullopt;
  const auto bd = boundary(g, s);
  std::vector<Vertex> adjacent;
  for (const Neighbor& nb : g.neighbors(found.x))
    if (bd.vertices.contains(nb.to)) adjacent.push_back(nb.to);
  const Vertex u = argmax_entry(p, adjacent);
  return certify("transition_perron_chain", "Delta lambda1 psi_S(u) >= psi_S(x)",
                 delta_of(g) * p.lambda1 * p.at(u), p.at(found.x), kCertificateTol, true,
                 {{"x", found.x}, {"u", u}, {"f_x", found.f_x}});
}

}  // namespace

CertifiedCheck perturbation_bound(const Multigraph& g, const VertexSet& s, Vertex u, Vertex v, MatrixKind kind) {
  if (kind == MatrixKind::transition) throw PreconditionError("perturbation_bound supports A and normalized kinds");
  if (!s.contains(u)) throw PreconditionError("u must lie in S");
  if (v >= g.size() || s.contains(v)) throw PreconditionError("v must be a vertex outside S");
  const Multiplicity mult = g.multiplicity(u, v);
  if (mult == 0) throw PreconditionError("(u,v) is not an edge");

  const auto p = perron(g, s, kind);
  const auto view = matrix_view(g, kind, s);
  const auto m = view.matrix.rows();
  Eigen::MatrixXd grown = Eigen::MatrixXd::Zero(m + 1, m + 1);
  grown.topLeftCorner(m, m) = view.matrix;
  const auto iu = static_cast<Eigen::Index>(*s.index_of(u));
  const double du = static_cast<double>(g.degree(u));
  const double dv = static_cast<double>(g.degree(v));
  const double entry = kind == MatrixKind::adjacency ? static_cast<double>(mult)
                                                      : static_cast<double>(mult) / std::sqrt(du * dv);
  grown(iu, m) = grown(m, iu) = entry;
  const double lhs = eig_sym(grown).eigenvalues(0);

  const double lambda = p.lambda1;
  const double psi_u = p.at(u);
  const double delta = delta_of(g);
  double rhs = 0.0;
  nlohmann::json inputs{{"S_size", s.size()}, {"u", u}, {"v", v}, {"kind", to_string(kind)},
                        {"lambda1_S", lambda}, {"psi_u", psi_u}};
  if (kind == MatrixKind::adjacency) {
    rhs = 0.5 * (lambda + std::sqrt(lambda * lambda + psi_u * psi_u));
  } else {
    rhs = 0.5 * (lambda + std::sqrt(lambda * lambda + psi_u * psi_u / (du * dv)));
    inputs["rhs_delta_form"] = 0.5 * (lambda + std::sqrt(lambda * lambda + psi_u * psi_u / (delta * delta)));
  }
  return certify("perturbation_lambda1", "lambda1(S') >= (lambda1 + sqrt(lambda1^2 + w psi_S(u)^2)) / 2", lhs,
                 rhs, kCertificateTol, true, std::move(inputs));
}

ExtensionTrace extend_support(const Multigraph& g, const VertexSet& s, ExtensionStrategy strategy) {
  const std::size_t start = s.size();
  if (start < 2) throw PreconditionError("extend_support needs |S| >= 2");
  if (!is_connected_subset(g, s)) throw PreconditionError("S must induce a connected subgraph");
  const bool electric = strategy == ExtensionStrategy::electric;
  if (electric ? 2 * start >= g.size() : 2 * start > g.size())
    throw PreconditionError("extend_support needs |S| < n/2");
  const MatrixKind kind = electric ? MatrixKind::normalized_adjacency : MatrixKind::adjacency;
  const double delta = delta_of(g);

  ExtensionTrace trace{
      .strategy = strategy, .steps = {}, .final_set = s, .initial_lambda1 = 0.0, .final_lambda1 = 0.0, .checks = {}};
  VertexSet current = s;
  auto p = perron(g, current, kind);
  trace.initial_lambda1 = p.lambda1;
  for (std::size_t i = 0; i < start; ++i) {
    const double size = static_cast<double>(current.size());
    Vertex u;
    double increment;
    if (electric) {
      const auto bd = boundary(g, current);
      u = argmax_entry(p, bd.vertices.members());
      increment = 1.0 / (6.0 * std::pow(delta, 7) * std::pow(size, 5));
      trace.checks.push_back(certify("boundary_entry", "psi_S(u) >= 1/(Delta^{5/2} lambda1 |S|^{5/2})", p.at(u),
                                     1.0 / (std::pow(delta, 2.5) * p.lambda1 * std::pow(size, 2.5)),
                                     kCertificateTol, true, {{"step", i}, {"u", u}}));
      const Vertex t = argmax_entry(p, current.members());
      if (auto chain = transition_chain_check(g, current, p, t, nullptr, nullptr)) {
        chain->inputs["step"] = i;
        trace.checks.push_back(*chain);
      }
    } else {
      u = argmax_entry(p, current.members());
      increment = 1.0 / (6.0 * p.lambda1 * p.lambda1 * size);
    }
    const auto v = smallest_outside_neighbor(g, current, u);
    if (!v) throw PreconditionError("vertex " + std::to_string(u) + " has no neighbour outside the set");
    trace.steps.push_back({current, u, *v, p.lambda1, increment});

    current = current.with(*v);
    const auto next = perron(g, current, kind);
    const nlohmann::json step_inputs{{"step", i}, {"u", u}, {"v", *v}};
    trace.checks.push_back(certify("step_monotone", "lambda1(S_{i+1}) >= lambda1(S_i)", next.lambda1, p.lambda1,
                                   kStepTol, true, step_inputs));
    trace.checks.push_back(certify("step_increment", "lambda1(S_{i+1}) >= lambda1(S_i) + increment", next.lambda1,
                                   p.lambda1 + increment, kStepTol, true, step_inputs));
    p = next;
  }
  trace.final_set = current;
  trace.final_lambda1 = p.lambda1;

  const double l0 = trace.initial_lambda1;
  const double sd = static_cast<double>(start);
  const nlohmann::json inputs{{"s", start}, {"max_degree", g.max_degree()}, {"lambda1_S", l0}};
  if (electric) {
    trace.checks.push_back(certify("extension_factor", "lambda1(T) >= lambda1(S) (1 + 5/(128 Delta^7 s^4))",
                                   p.lambda1, l0 * (1.0 + 5.0 / (128.0 * std::pow(delta, 7) * std::pow(sd, 4))),
                                   kCertificateTol, true, inputs));
  } else {
    trace.checks.push_back(certify("extension_additive", "lambda1(A_T) >= lambda1 + log 2/(6 lambda1^2)",
                                   p.lambda1, l0 + std::numbers::ln2 / (6.0 * l0 * l0), kCertificateTol, true,
                                   inputs));
    trace.checks.push_back(certify("extension_factor", "lambda1(A_T) >= lambda1 (1 + 1/(10 lambda1^3))", p.lambda1,
                                   l0 * (1.0 + 1.0 / (10.0 * l0 * l0 * l0)), kCertificateTol, true, inputs));
  }
  return trace;
}

nlohmann::json to_json(const ExtensionTrace& trace) {
  auto steps = nlohmann::json::array();
  for (const auto& st : trace.steps) {
    steps.push_back({{"set", std::vector<Vertex>(st.set.members().begin(), st.set.members().end())},
                     {"u", st.u},
                     {"v", st.v},
                     {"lambda1", st.lambda1},
                     {"guaranteed_increment", st.guaranteed_increment}});
  }
  return {{"strategy", trace.strategy == ExtensionStrategy::electric ? "electric" : "argmax"},
          {"steps", std::move(steps)},
          {"final_set", std::vector<Vertex>(trace.final_set.members().begin(), trace.final_set.members().end())},
          {"initial_lambda1", trace.initial_lambda1},
          {"final_lambda1", trace.final_lambda1},
          {"checks", to_json(trace.checks)}};
}

Report electric_theorem_check(const Multigraph& g, const VertexSet& s) {
  if (s.is_full()) throw PreconditionError("electric theorem needs S to be a proper subset");
  const auto p = perron(g, s, MatrixKind::normalized_adjacency);
  const Vertex t = argmax_entry(p, s.members());
  const auto bd = boundary(g, s);
  const Vertex u = argmax_entry(p, bd.vertices.members());
  const double ratio = p.at(u) / p.at(t);
  const double delta = delta_of(g);
  const double size = static_cast<double>(s.size());
  const Multiplicity deg_k = contracted_degree(g, bd.vertices);
  const double r = max_pairwise_resistance(g, s);

  Report rep;
  rep.name = "electric-thm";
  rep.params = {{"S", std::vector<Vertex>(s.members().begin(), s.members().end())}};
  const nlohmann::json inputs{{"u", u}, {"t", t}, {"S_size", s.size()}};
  rep.checks.push_back(certify("electric_main", "psi_S(u)/psi_S(t) >= 1/(Delta^{5/2} lambda1 |S|^2)", ratio,
                               1.0 / (std::pow(delta, 2.5) * p.lambda1 * size * size), kCertificateTol, true,
                               inputs));
  rep.checks.push_back(certify("electric_entry", "psi_S(u) >= 1/(Delta^{5/2} lambda1 |S|^{5/2})", p.at(u),
                               1.0 / (std::pow(delta, 2.5) * p.lambda1 * std::pow(size, 2.5)), kCertificateTol,
                               true, inputs));
  const bool remark_defined = s.size() >= 2 && deg_k > 0;
  const double remark_rhs =
      remark_defined ? 1.0 / (std::pow(delta, 1.5) * p.lambda1 * static_cast<double>(deg_k) * r) : 0.0;
  rep.checks.push_back(certify("electric_remark", "psi_S(u)/psi_S(t) >= 1/(Delta^{3/2} lambda1 deg_K(s) R)", ratio,
                               remark_rhs, kCertificateTol, remark_defined, inputs));
  if (!bd.vertices.contains(t)) {
    if (auto chain = transition_chain_check(g, s, p, t, &rep.checks, &rep.data)) rep.checks.push_back(*chain);
  } else {
    rep.data["electric_mode"] = "boundary-max";
  }
  rep.data["lambda1"] = p.lambda1;
  rep.data["t"] = t;
  rep.data["u"] = u;
  rep.data["ratio"] = ratio;
  rep.data["boundary"] = std::vector<Vertex>(bd.vertices.members().begin(), bd.vertices.members().end());
  rep.data["boundary_edge_count"] = bd.edge_count;
  rep.data["deg_K_s"] = deg_k;
  rep.data["R"] = r;
  return rep;
}

CertifiedCheck irregular_corollary_check(const Multigraph& h) {
  if (h.size() < 2) throw PreconditionError("corollary needs at least two vertices");
  if (!is_connected(h)) throw PreconditionError("corollary needs a connected graph");
  if (h.regular_degree()) throw PreconditionError("corollary requires irregular");
  const auto phi = perron(h, VertexSet::all(h.size()), MatrixKind::adjacency);
  const double delta = delta_of(h);
  Vertex best = 0;
  double best_value = -1.0;
  for (std::size_t v = 0; v < h.size(); ++v) {
    if (h.degree(static_cast<Vertex>(v)) == h.max_degree()) continue;
    if (phi.vector(static_cast<Eigen::Index>(v)) > best_value) {
      best_value = phi.vector(static_cast<Eigen::Index>(v));
      best = static_cast<Vertex>(v);
    }
  }
  const double n = static_cast<double>(h.size());
  return certify("irregular_corollary", "max_{deg u < Delta} phi(u) >= 1/(Delta^2 lambda1(A) |V|^{5/2})",
                 best_value, 1.0 / (delta * delta * phi.lambda1 * std::pow(n, 2.5)), kCertificateTol, true,
                 {{"u", best}, {"lambda1", phi.lambda1}, {"n", h.size()}, {"max_degree", h.max_degree()}});
}

}  // namespace walklab
