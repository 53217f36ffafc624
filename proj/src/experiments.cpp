#include "walklab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <string>

#include "walklab/error.hpp"
#include "walklab/generators.hpp"
#include "walklab/rng.hpp"
#include "walklab/spectral.hpp"
#include "walklab/walks.hpp"

namespace walklab {

namespace {

std::vector<Vertex> members_of(const VertexSet& s) { return {s.members().begin(), s.members().end()}; }

/// Fisher-Yates prefix: `count` distinct vertices, sorted.
std::vector<Vertex> random_deletion(std::size_t n, std::size_t count, Rng& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  for (std::size_t i = 0; i < count; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(order[i], order[j]);
  }
  order.resize(count);
  std::sort(order.begin(), order.end());
  return order;
}

/// Σ_i V(x,i)^2 λ_i^p from a full decomposition.
double diagonal_power(const SpectralResult& r, Eigen::Index x, std::size_t p) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < r.eigenvalues.size(); ++i) {
    const double v = r.eigenvectors(x, i);
    sum += v * v * std::pow(r.eigenvalues(i), static_cast<double>(p));
  }
  return sum;
}

}  // namespace

Report deletion_pipeline(const Multigraph& input, const DeletionOptions& options) {
  if (!is_connected(input)) throw PreconditionError("deletion pipeline needs a connected graph");
  if (input.max_degree() < 2) throw PreconditionError("deletion pipeline needs max degree >= 2");
  if (options.retries == 0) throw PreconditionError("retries must be positive");
  const bool highdeg = options.variant == DeletionVariant::highdeg;
  if (highdeg && (!input.is_simple() || !input.regular_degree()))
    throw PreconditionError("highdeg variant needs a simple regular graph");

  Report rep;
  rep.name = "deletion";
  rep.params = {{"seed", options.seed},
                {"variant", highdeg ? "highdeg" : "normalized"},
                {"retries", options.retries},
                {"n", input.size()}};
  if (options.s_override) rep.params["s_override"] = *options.s_override;

  auto spec = spectrum(input, MatrixKind::normalized_adjacency);
  const bool lazy = std::abs(spec.eigenvalues(spec.eigenvalues.size() - 1)) > spec.eigenvalues(1);
  const Multigraph g = lazy ? lazy_transform(input) : input;
  if (lazy) spec = spectrum(g, MatrixKind::normalized_adjacency);

  const std::size_t n = g.size();
  const double nd = static_cast<double>(n);
  const double delta = static_cast<double>(g.max_degree());
  const double log_delta_n = std::log(nd) / std::log(delta);
  const auto k = static_cast<std::size_t>(std::ceil(log_delta_n / 3.0));
  const double c = k > 0 ? 2.0 * std::log(static_cast<double>(k)) : 0.0;
  const double kd = static_cast<double>(k);
  double s_formula = 0.0;
  if (highdeg) {
    const double d = static_cast<double>(*input.regular_degree());
    s_formula = std::min(0.125 * std::pow(kd / std::log(d), 0.25), d / 2.0);
  } else {
    const double lead = lazy ? 1.0 / 11.0 : 0.25;
    s_formula = lead * std::pow(kd / (std::pow(delta, 7) * std::log(delta)), 0.2);
  }
  const bool s_floor_binds = !options.s_override && std::floor(s_formula) < 1.0;
  const std::size_t s =
      options.s_override ? *options.s_override : std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(s_formula)));
  if (s == 0) throw PreconditionError("s must be positive");
  const double eps = c / (2.0 * log_delta_n);
  const double d_raw = std::ceil(c * nd / static_cast<double>(s));
  const bool capped = d_raw > nd - 1.0;
  const auto deletions = static_cast<std::size_t>(std::min(d_raw, nd - 1.0));
  const auto stats = graph_stats(g);
  const double lambda2 = spec.eigenvalues(1);

  rep.data = {{"lazy", lazy},
              {"max_degree", g.max_degree()},
              {"k", k},
              {"walk_length", 2 * k},
              {"c", c},
              {"s", s},
              {"s_formula", s_formula},
              {"s_floor_binds", s_floor_binds},
              {"epsilon", eps},
              {"deletions", deletions},
              {"deletions_uncapped", d_raw},
              {"deletions_capped", capped},
              {"diameter", stats.diameter ? nlohmann::json(*stats.diameter) : nlohmann::json(nullptr)},
              {"lambda2", lambda2},
              {"lambda_min", spec.eigenvalues(spec.eigenvalues.size() - 1)}};

  if (*stats.diameter < 4 || k < 2 || deletions == 0) {
    rep.data["status"] = "vacuous-regime";
    rep.checks.push_back(certify("regime", "diameter >= 4 and k >= 2 and D >= 1",
                                 static_cast<double>(*stats.diameter), 4.0, 0.0, false,
                                 {{"k", k}, {"deletions", deletions}}));
    return rep;
  }
  rep.data["status"] = "evaluated";

  const std::size_t walk = 2 * k;
  const double tol = default_multiplicity_tol(spec.eigenvalues);
  const Interval window(std::min((1.0 - eps) * lambda2, lambda2), lambda2);
  const auto m_g = multiplicity(spec.eigenvalues, window, tol);
  const double tr_g = trace_power(spec.eigenvalues, walk);

  std::vector<Vertex> best_deleted;
  Eigen::VectorXd best_eigs;
  double best_trace = std::numeric_limits<double>::infinity();
  std::size_t best_round = 0;
  for (std::size_t r = 0; r < options.retries; ++r) {
    Rng rng = Rng::substream(options.seed, r);
    auto deleted = random_deletion(n, deletions, rng);
    const auto kept = VertexSet(n, deleted).complement();
    const auto eigs = spectrum(g, MatrixKind::normalized_adjacency, *kept).eigenvalues;
    const double tr = trace_power(eigs, walk);
    if (tr < best_trace) {
      best_trace = tr;
      best_deleted = std::move(deleted);
      best_eigs = eigs;
      best_round = r;
    }
  }
  const auto m_h = multiplicity(best_eigs, window, 2.0 * tol);
  const double tr_h = best_trace;
  const double lower = static_cast<double>(m_h) * std::pow((1.0 - eps) * lambda2, static_cast<double>(walk));
  const double upper = nd * std::pow(lambda2, static_cast<double>(walk)) + 1.0;
  const double rel = kCertificateTol * std::max(1.0, tr_g);

  rep.checks.push_back(certify("trace_lower", "tr(A_H^{2k}) >= m' (1-eps)^{2k} lambda2^{2k}", tr_h, lower, rel));
  rep.checks.push_back(certify("trace_dominance", "tr(A_G^{2k}) >= tr(A_H^{2k})", tr_g, tr_h, rel));
  rep.checks.push_back(certify("trace_upper", "n lambda2^{2k} + 1 >= tr(A_G^{2k})", upper, tr_g, rel));
  rep.checks.push_back(certify("cauchy_interlacing", "m' + D >= m_G(I)", static_cast<double>(m_h + deletions),
                               static_cast<double>(m_g), 0.0));
  const auto rayleigh = rayleigh_lambda2_lower_bound(g);
  rep.checks.push_back(certify("lambda2_rayleigh", "lambda2 >= projected Rayleigh quotient of phi", lambda2,
                               rayleigh.bound, kCertificateTol, true,
                               {{"raw", rayleigh.raw},
                                {"first_edge", {rayleigh.first_edge.first, rayleigh.first_edge.second}},
                                {"second_edge", {rayleigh.second_edge.first, rayleigh.second_edge.second}}}));
  if (g.regular_degree())
    rep.checks.push_back(certify("lambda2_inverse_degree", "lambda2 >= 1/Delta", lambda2, 1.0 / delta));
  rep.checks.push_back(certify("lambda2_power", "n lambda2^{2k} >= 1",
                               nd * std::pow(lambda2, static_cast<double>(walk)), 1.0));

  rep.data["interval"] = {window.lo, window.hi};
  rep.data["multiplicity_tol"] = tol;
  rep.data["m_G"] = m_g;
  rep.data["m_prime"] = m_h;
  rep.data["trace_G"] = tr_g;
  rep.data["trace_H"] = tr_h;
  rep.data["deleted"] = best_deleted;
  rep.data["chosen_round"] = best_round;
  rep.data["rayleigh_raw"] = rayleigh.raw;
  rep.data["rayleigh_projected"] = rayleigh.bound;
  return rep;
}

std::vector<std::vector<Vertex>> connected_subsets_containing(const Multigraph& g, Vertex x, std::size_t s) {
  if (x >= g.size()) throw PreconditionError("vertex out of range");
  if (s == 0) throw PreconditionError("s must be positive");
  std::set<std::vector<Vertex>> layer{{x}};
  for (std::size_t size = 1; size < s; ++size) {
    std::set<std::vector<Vertex>> next;
    for (const auto& set : layer) {
      for (Vertex v : set) {
        for (const Neighbor& nb : g.neighbors(v)) {
          if (std::binary_search(set.begin(), set.end(), nb.to)) continue;
          auto grown = set;
          grown.insert(std::upper_bound(grown.begin(), grown.end(), nb.to), nb.to);
          next.insert(std::move(grown));
        }
      }
    }
    layer.swap(next);
  }
  return {layer.begin(), layer.end()};
}

CertifiedCheck gamma_enumeration_check(const Multigraph& g, Vertex x, std::size_t s) {
  const double budget = std::pow(static_cast<double>(g.max_degree()), 2.0 * static_cast<double>(s));
  if (budget > 1e7) throw CapacityError("Delta^{2s} exceeds the 1e7 enumeration budget");
  const auto count = connected_subsets_containing(g, x, s).size();
  return certify("gamma_count", "Delta^{2s} >= |Gamma_x^s|", budget, static_cast<double>(count), 0.0, true,
                 {{"x", x}, {"s", s}, {"count", count}});
}

std::vector<CertifiedCheck> walk_transfer_check(const Multigraph& g, const VertexSet& t, Vertex x, Vertex z,
                                                std::size_t k, std::size_t s) {
  if (t.size() != 2 * s) throw PreconditionError("walk transfer needs |T| = 2s");
  if (2 * k < 4 * s) throw PreconditionError("walk transfer needs 2k >= 4s");
  if (!t.contains(x) || !t.contains(z)) throw PreconditionError("x and z must lie in T");
  if (!is_connected_subset(g, t)) throw PreconditionError("T must induce a connected subgraph");
  const auto r = spectrum(g, MatrixKind::normalized_adjacency, t);
  const auto ix = static_cast<Eigen::Index>(*t.index_of(x));
  const auto iz = static_cast<Eigen::Index>(*t.index_of(z));
  const std::size_t short_len = 2 * k - 4 * s;
  const double delta = static_cast<double>(g.max_degree());

  std::vector<CertifiedCheck> out;
  const double lhs = diagonal_power(r, ix, 2 * k);
  const double rhs = std::pow(delta, -4.0 * static_cast<double>(s)) * diagonal_power(r, iz, short_len);
  out.push_back(certify("xz_walks", "e_x A_T^{2k} e_x >= Delta^{-4s} e_z A_T^{2k-4s} e_z", lhs, rhs,
                        kCertificateTol * std::max(1.0, rhs), true, {{"x", x}, {"z", z}, {"k", k}, {"s", s}}));

  Eigen::Index best = 0;
  double best_value = -1.0;
  for (Eigen::Index i = 0; i < r.eigenvalues.size(); ++i) {
    const double value = diagonal_power(r, i, short_len);
    if (value > best_value) {
      best_value = value;
      best = i;
    }
  }
  const double pigeon = std::pow(r.eigenvalues(0), static_cast<double>(short_len)) / static_cast<double>(2 * s);
  out.push_back(certify("trace_pigeonhole", "max_z e_z A_T^{2k-4s} e_z >= lambda1(A_T)^{2k-4s} / (2s)", best_value,
                        pigeon, kCertificateTol, true,
                        {{"z", t[static_cast<std::size_t>(best)]}, {"k", k}, {"s", s}}));
  return out;
}

Report lollipop_report(std::size_t d, std::size_t n, std::size_t k, const std::vector<std::size_t>& ells) {
  if (d < 3) throw PreconditionError("lollipop report needs d >= 3");
  const auto g = lollipop(d, n);
  const Vertex v = lollipop_attach_vertex(d);
  const auto phi = perron(g, VertexSet::all(g.size()), MatrixKind::adjacency);
  const double psi_v = phi.at(v);
  const double lambda1 = phi.lambda1;
  const double kd = static_cast<double>(k);
  const double ell_star = 2.0 * std::log(kd) / std::log(lambda1 / 2.0);

  Report rep;
  rep.name = "lollipop";
  rep.params = {{"d", d}, {"n", n}, {"k", k}, {"walk_length", 2 * k}, {"ells", ells}};
  rep.checks.push_back(certify("attach_entry", "psi(v) >= 1/sqrt(d+2)", psi_v,
                               1.0 / std::sqrt(static_cast<double>(d) + 2.0)));
  rep.data = {{"lambda1", lambda1}, {"psi_v", psi_v}, {"ell_star", ell_star}, {"vertex_count", g.size()}};
  if (ells.empty()) return rep;

  const auto counts = support_profile_exact(g, v, 2 * k, WalkWeight::count);
  mpz_class total = 0;
  for (const auto& [support, c] : counts.exact_numerators) total += c;
  const double total_d = total.get_d();
  rep.checks.push_back(certify("closed_walk_total", "|gamma_v^{2k}| >= psi(v)^2 lambda1^{2k}", total_d,
                               psi_v * psi_v * std::pow(lambda1, 2.0 * kd), kCertificateTol * total_d));
  rep.data["closed_walks"] = total.get_str();

  auto rows = nlohmann::json::array();
  for (std::size_t ell : ells) {
    mpz_class deep = 0;
    for (const auto& [support, c] : counts.exact_numerators)
      if (support >= ell + d + 1) deep += c;
    mpq_class frac(deep, total);
    frac.canonicalize();
    const double fraction = frac.get_d();
    const double bound = (static_cast<double>(d) + 2.0) * (2.0 * kd + 1.0) *
                         std::pow(4.0, static_cast<double>(ell)) / std::pow(lambda1, 2.0 * static_cast<double>(ell));
    rep.checks.push_back(certify("depth_fraction",
                                 "(d+2)(2k+1) 2^{2l} / lambda1^{2l} >= |gamma^{2k,>=l+d+1}| / |gamma^{2k}|", bound,
                                 fraction, kCertificateTol, static_cast<double>(ell) >= ell_star,
                                 {{"ell", ell}, {"deep_walks", deep.get_str()}}));
    rows.push_back({{"ell", ell}, {"fraction", fraction}, {"fraction_exact", frac.get_str()}, {"bound", bound}});
  }
  rep.data["fractions"] = std::move(rows);
  return rep;
}

Report mangrove_report(std::size_t d, const std::vector<std::size_t>& ns) {
  if (d < 4 || d % 2 != 0) throw PreconditionError("mangrove report needs even d >= 4");
  if (ns.empty()) throw PreconditionError("mangrove report needs at least one n");
  Report rep;
  rep.name = "mangrove";
  rep.params = {{"d", d}, {"n", ns}};
  const double dd = static_cast<double>(d);
  auto rows = nlohmann::json::array();
  std::vector<double> log_n, log_leaf;

  for (std::size_t n : ns) {
    const auto layout = mangrove_layout(d, n);
    if (layout.vertex_count > kMaxDenseDimension) throw CapacityError("mangrove instance exceeds 4096 vertices");
    const auto g = mangrove(d, n);
    const nlohmann::json tag{{"n", n}};

    // Classes: path singletons, then the levels of each tree.
    std::vector<std::vector<Vertex>> classes;
    for (std::size_t i = 0; i < n; ++i) classes.push_back({static_cast<Vertex>(i)});
    for (const auto& tree : layout.levels)
      for (const auto& level : tree) classes.push_back(level);
    std::vector<std::size_t> class_of(g.size());
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (Vertex u : classes[c]) class_of[u] = c;

    const auto m = static_cast<Eigen::Index>(classes.size());
    Eigen::MatrixXd quotient = Eigen::MatrixXd::Zero(m, m);
    double irregularity = 0.0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      std::vector<double> reference;
      for (Vertex u : classes[c]) {
        std::vector<double> row(classes.size(), 0.0);
        for (const Neighbor& nb : g.neighbors(u)) row[class_of[nb.to]] += static_cast<double>(nb.mult);
        if (reference.empty()) {
          reference = row;
        } else {
          for (std::size_t j = 0; j < row.size(); ++j)
            irregularity = std::max(irregularity, std::abs(row[j] - reference[j]));
        }
      }
      for (std::size_t j = 0; j < classes.size(); ++j)
        quotient(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(j)) = reference[j];
    }
    rep.checks.push_back(certify("regular_partition", "max neighbour-count spread within a class <= 0", 0.0,
                                 irregularity, 0.0, true, tag));

    Eigen::VectorXd root_size(m);
    for (Eigen::Index c = 0; c < m; ++c)
      root_size(c) = std::sqrt(static_cast<double>(classes[static_cast<std::size_t>(c)].size()));
    const Eigen::MatrixXd sym = root_size.asDiagonal() * quotient * root_size.cwiseInverse().asDiagonal();
    const auto psi_c = perron_of_matrix(sym, {});
    const auto psi_a = perron(g, VertexSet::all(g.size()), MatrixKind::adjacency);

    double mass_error = 0.0;
    for (Eigen::Index c = 0; c < m; ++c) {
      double mass = 0.0;
      for (Vertex u : classes[static_cast<std::size_t>(c)])
        mass += psi_a.vector(u) * psi_a.vector(u);
      mass_error = std::max(mass_error, std::abs(psi_c.vector(c) * psi_c.vector(c) - mass));
    }
    rep.checks.push_back(certify("mass_identity", "|psi_C(X_i)^2 - sum_{u in X_i} psi_A(u)^2| <= 1e-7", 1e-7,
                                 mass_error, 0.0, true, tag));

    const double lambda1 = psi_a.lambda1;
    const std::size_t ell = layout.depth;
    const double theta = std::acosh(lambda1 / (2.0 * std::sqrt(dd - 1.0)));
    std::vector<double> r;
    double level_spread = 0.0;
    for (const auto& level : layout.levels[0]) {
      const double first = psi_a.vector(level.front());
      for (Vertex u : level) level_spread = std::max(level_spread, std::abs(psi_a.vector(u) - first));
      r.push_back(first);
    }
    double sinh_error = 0.0;
    for (std::size_t i = 0; i <= ell; ++i) {
      const double predicted = std::sinh(static_cast<double>(ell + 1 - i) * theta) *
                               std::pow(dd - 1.0, -0.5 * static_cast<double>(i)) /
                               std::sinh(static_cast<double>(ell + 1) * theta);
      const double actual = r[i] / r[0];
      sinh_error = std::max(sinh_error, std::abs(actual - predicted) / std::abs(predicted));
    }
    rep.checks.push_back(certify("sinh_profile", "max_i |r_i/r_0 - sinh formula| / formula <= 1e-6", 1e-6, sinh_error,
                                 0.0, true, tag));
    const double nd = static_cast<double>(n);
    const double end_ratio = r[ell] / r[0];
    rep.checks.push_back(certify("end_ratio", "3d/n >= r_l / r_0", 3.0 * dd / nd, end_ratio, kCertificateTol, true, tag));
    const double leaf_bound =
        15.0 * dd * dd * std::numbers::pi * std::sqrt(std::log(nd) / std::log(dd)) / std::pow(nd, 2.5);
    rep.checks.push_back(certify("leaf_entry", "15 d^2 pi sqrt(log_d n) / n^{5/2} >= r_l", leaf_bound, r[ell],
                                 kCertificateTol, true, tag));
    rep.checks.push_back(certify("lambda1_path", "lambda1 >= d cos(pi/(n+1))", lambda1,
                                 dd * std::cos(std::numbers::pi / (nd + 1.0)), kCertificateTol, true, tag));
    rep.checks.push_back(certify("lambda1_theta", "lambda1 >= 2 sqrt(d-1)", lambda1, 2.0 * std::sqrt(dd - 1.0),
                                 kCertificateTol, true, tag));

    log_n.push_back(std::log(nd));
    log_leaf.push_back(std::log(r[ell]));
    rows.push_back({{"n", n},
                    {"depth", ell},
                    {"vertex_count", g.size()},
                    {"lambda1", lambda1},
                    {"theta", theta},
                    {"r", r},
                    {"leaf_entry", r[ell]},
                    {"end_ratio", end_ratio},
                    {"mass_error", mass_error},
                    {"sinh_rel_error", sinh_error},
                    {"level_spread", level_spread}});
  }
  rep.data["instances"] = std::move(rows);
  if (log_n.size() >= 2) {
    const double mx = std::accumulate(log_n.begin(), log_n.end(), 0.0) / static_cast<double>(log_n.size());
    const double my = std::accumulate(log_leaf.begin(), log_leaf.end(), 0.0) / static_cast<double>(log_leaf.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < log_n.size(); ++i) {
      sxy += (log_n[i] - mx) * (log_leaf[i] - my);
      sxx += (log_n[i] - mx) * (log_n[i] - mx);
    }
    rep.data["slope"] = sxy / sxx;
  } else {
    rep.data["slope"] = nullptr;
  }
  return rep;
}

Report ramanujan_trace_bound(const Multigraph& g, std::size_t k, double b) {
  const auto reg = g.regular_degree();
  if (!reg || !is_bipartite(g) || !is_connected(g))
    throw PreconditionError("ramanujan bound needs a connected bipartite regular graph");
  const double d = static_cast<double>(*reg);
  const double ram = 2.0 * std::sqrt(d - 1.0);
  if (b < 0.0 || b > ram) throw PreconditionError("b must lie in [0, 2 sqrt(d-1)]");
  const std::size_t walk = 2 * k;
  const auto eigs = spectrum(g, MatrixKind::adjacency).eigenvalues;
  const auto n = static_cast<std::size_t>(eigs.size());
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) worst = std::max(worst, std::abs(eigs(static_cast<Eigen::Index>(i))));
  const bool ramanujan = worst <= ram + 1e-9;

  const auto exact = trace_power(g, MatrixKind::adjacency, walk, TraceMode::exact_integer);
  const double tr_float = trace_power(eigs, walk);
  const double tr = exact.value;
  const double wd = static_cast<double>(walk);
  const double m_lower = (tr - 2.0 * std::pow(d, wd) - static_cast<double>(n - 2) * std::pow(b, wd)) /
                         (2.0 * (std::pow(ram, wd) - std::pow(b, wd)));
  const double lambda2 = eigs(1);
  const std::size_t m_true =
      b <= lambda2 ? multiplicity(eigs, Interval(b, lambda2), 1e-9) : 0;

  Report rep;
  rep.name = "ramanujan";
  rep.params = {{"k", k}, {"walk_length", walk}, {"b", b}, {"n", n}, {"d", *reg}};
  rep.checks.push_back(certify("multiplicity_lower_bound", "m_A([b, lambda2]) >= ceil(m_lower)",
                               static_cast<double>(m_true), std::ceil(m_lower), 0.0, ramanujan && m_lower > 0.0,
                               {{"m_lower", m_lower}, {"ramanujan", ramanujan}}));

  mpz_class tree_total = tree_closed_walk_count(*reg, k) * static_cast<unsigned long>(n);
  auto tree_check = certify("tree_cover", "tr A^{2k} >= n * tree_closed_walk_count(d, k)", tr, tree_total.get_d());
  tree_check.verdict = *exact.exact >= tree_total ? Verdict::pass : Verdict::fail;
  tree_check.inputs = {{"trace_exact", exact.exact->get_str()}, {"tree_total", tree_total.get_str()}};
  rep.checks.push_back(tree_check);
  const double rel_gap = std::abs(tr_float - tr) / std::max(1.0, std::abs(tr));
  rep.checks.push_back(certify("trace_agreement", "|tr_float - tr_exact| / tr_exact <= 1e-8", 1e-8, rel_gap, 0.0));

  rep.data = {{"status", ramanujan ? "ramanujan" : "not-Ramanujan"},
              {"lambda2", lambda2},
              {"max_nontrivial_abs", worst},
              {"trace_exact", exact.exact->get_str()},
              {"trace_float", tr_float},
              {"m_lower", m_lower},
              {"m_true", m_true},
              {"tree_closed_walks_per_vertex", tree_closed_walk_count(*reg, k).get_str()}};
  return rep;
}

}  // namespace walklab
