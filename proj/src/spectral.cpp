#include "walklab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "walklab/error.hpp"
#include "walklab/kernels.hpp"

namespace walklab {

std::string_view to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::adjacency:
      return "adjacency";
    case MatrixKind::normalized_adjacency:
      return "normalized";
    case MatrixKind::transition:
      return "transition";
  }
  return "normalized";
}

MatrixKind parse_matrix_kind(std::string_view text) {
  if (text == "A" || text == "adjacency") return MatrixKind::adjacency;
  if (text == "N" || text == "normalized" || text == "normalized_adjacency")
    return MatrixKind::normalized_adjacency;
  if (text == "P" || text == "transition") return MatrixKind::transition;
  throw PreconditionError("unknown matrix kind '" + std::string(text) + "'");
}

Eigen::MatrixXd MatrixView::transition() const {
  const Eigen::VectorXd sq = degrees.cwiseSqrt();
  return sq.asDiagonal() * matrix * sq.cwiseInverse().asDiagonal();
}

MatrixView matrix_view(const Multigraph& g, MatrixKind kind, const std::optional<VertexSet>& subset) {
  const VertexSet s = subset ? *subset : VertexSet::all(g.size());
  if (s.parent_size() != g.size()) throw PreconditionError("vertex set belongs to another graph");
  MatrixView view;
  view.kind = kind;
  view.members.assign(s.members().begin(), s.members().end());
  const auto m = static_cast<Eigen::Index>(s.size());
  view.matrix = Eigen::MatrixXd::Zero(m, m);
  view.degrees.resize(m);
  for (Eigen::Index i = 0; i < m; ++i) view.degrees(i) = static_cast<double>(g.degree(s[i]));
  for (Eigen::Index i = 0; i < m; ++i) {
    for (const Neighbor& nb : g.neighbors(s[i])) {
      auto j = s.index_of(nb.to);
      if (!j) continue;
      double value = static_cast<double>(nb.mult);
      if (kind != MatrixKind::adjacency)
        value /= std::sqrt(view.degrees(i) * view.degrees(static_cast<Eigen::Index>(*j)));
      view.matrix(i, static_cast<Eigen::Index>(*j)) = value;
    }
  }
  return view;
}

SpectralResult eig_sym(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw PreconditionError("eig_sym requires a square matrix");
  if (m.rows() == 0) throw PreconditionError("eig_sym requires a nonempty matrix");
  if (static_cast<std::size_t>(m.rows()) > kMaxDenseDimension)
    throw CapacityError("eig_sym: dimension exceeds 4096");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw PreconditionError("eig_sym requires a symmetric matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw ConvergenceError("symmetric eigensolver did not converge");
  SpectralResult r;
  r.eigenvalues = solver.eigenvalues().reverse();
  r.eigenvectors = solver.eigenvectors().rowwise().reverse();
  const Eigen::MatrixXd resid = m * r.eigenvectors - r.eigenvectors * r.eigenvalues.asDiagonal();
  r.residual = resid.colwise().norm().maxCoeff();
  const auto n = r.eigenvectors.cols();
  r.orthogonality_error =
      (r.eigenvectors.transpose() * r.eigenvectors - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  const double bound = 1e-9 * std::max(1.0, std::abs(r.eigenvalues(0)));
  if (r.residual > bound || r.orthogonality_error > 1e-9)
    throw ConvergenceError("eigendecomposition residual above contract: " + std::to_string(r.residual));
  return r;
}

SpectralResult spectrum(const Multigraph& g, MatrixKind kind, const std::optional<VertexSet>& subset) {
  return eig_sym(matrix_view(g, kind, subset).matrix);
}

nlohmann::json to_json(const SpectralResult& r, bool with_vectors) {
  nlohmann::json j;
  j["eigenvalues"] = std::vector<double>(r.eigenvalues.data(), r.eigenvalues.data() + r.eigenvalues.size());
  j["residual"] = r.residual;
  if (with_vectors) {
    auto cols = nlohmann::json::array();
    for (Eigen::Index c = 0; c < r.eigenvectors.cols(); ++c) {
      Eigen::VectorXd col = r.eigenvectors.col(c);
      cols.push_back(std::vector<double>(col.data(), col.data() + col.size()));
    }
    j["eigenvectors"] = std::move(cols);
  }
  return j;
}

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (!(lo <= hi)) throw PreconditionError("interval requires lo <= hi");
}

double default_multiplicity_tol(const Eigen::VectorXd& descending) {
  return 1e-8 * std::max(1.0, descending.size() ? std::abs(descending(0)) : 0.0);
}

std::size_t multiplicity(const Eigen::VectorXd& eigenvalues, const Interval& interval, double tol) {
  if (tol < 0) throw PreconditionError("multiplicity tolerance must be nonnegative");
  std::size_t count = 0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const double l = eigenvalues(i);
    if (l >= interval.lo - tol && l <= interval.hi + tol) ++count;
  }
  return count;
}

double PerronResult::at(Vertex v) const {
  auto it = std::lower_bound(members.begin(), members.end(), v);
  if (it == members.end() || *it != v) throw PreconditionError("vertex not in Perron support");
  return vector(it - members.begin());
}

PerronResult perron_of_matrix(const Eigen::MatrixXd& m, std::vector<Vertex> members) {
  const auto r = eig_sym(m);
  PerronResult p;
  p.members = std::move(members);
  p.lambda1 = r.eigenvalues(0);
  p.vector = r.eigenvectors.col(0);
  if (p.vector.sum() < 0) p.vector = -p.vector;
  p.gap = r.eigenvalues.size() > 1 ? r.eigenvalues(0) - r.eigenvalues(1)
                                   : std::numeric_limits<double>::infinity();
  if (p.gap <= 1e-12) throw ConvergenceError("top eigenvalue is not simple");
  if (p.vector.minCoeff() <= 0.0) throw ConvergenceError("Perron vector has a nonpositive entry");
  p.residual = (m * p.vector - p.lambda1 * p.vector).norm();
  if (p.residual > 1e-10 * std::max(1.0, std::abs(p.lambda1)))
    throw ConvergenceError("Perron residual above 1e-10");
  return p;
}

PerronResult perron(const Multigraph& g, const VertexSet& s, MatrixKind kind) {
  if (!is_connected_subset(g, s)) throw PreconditionError("perron requires a connected vertex set");
  auto view = matrix_view(g, kind, s);
  auto p = perron_of_matrix(view.matrix, view.members);
  if (kind == MatrixKind::transition) {
    p.vector = (view.degrees.cwiseSqrt().asDiagonal() * p.vector).normalized();
    p.residual = (view.transition() * p.vector - p.lambda1 * p.vector).norm();
  }
  return p;
}

Lambda2Bound rayleigh_lambda2_lower_bound(const Multigraph& g) {
  const auto stats = graph_stats(g);
  if (!stats.connected) throw PreconditionError("lambda2 bound requires a connected graph");
  if (*stats.diameter < 4)
    throw PreconditionError("vacuous regime: diameter " + std::to_string(*stats.diameter) + " < 4");
  Vertex p = 0;
  std::vector<std::size_t> from_p;
  for (std::size_t v = 0; v < g.size(); ++v) {
    from_p = bfs_distances(g, static_cast<Vertex>(v));
    if (*std::max_element(from_p.begin(), from_p.end()) == *stats.diameter) {
      p = static_cast<Vertex>(v);
      break;
    }
  }
  const auto q = static_cast<Vertex>(std::find(from_p.begin(), from_p.end(), *stats.diameter) - from_p.begin());
  auto first_other = [&](Vertex v) {
    for (const Neighbor& nb : g.neighbors(v))
      if (nb.to != v) return nb.to;
    throw PreconditionError("vertex has no non-loop neighbor");
  };
  Lambda2Bound out;
  out.first_edge = {std::min(p, first_other(p)), std::max(p, first_other(p))};
  out.second_edge = {std::min(q, first_other(q)), std::max(q, first_other(q))};

  const auto view = matrix_view(g, MatrixKind::normalized_adjacency);
  const auto spec = eig_sym(view.matrix);
  out.lambda2 = g.size() > 1 ? spec.eigenvalues(1) : spec.eigenvalues(0);

  Eigen::VectorXd phi = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(g.size()));
  phi(out.first_edge.first) = phi(out.first_edge.second) = 1.0;
  phi(out.second_edge.first) = phi(out.second_edge.second) = -1.0;
  out.phi = phi;
  out.raw = phi.dot(view.matrix * phi) / phi.squaredNorm();
  const Eigen::VectorXd top = spec.eigenvectors.col(0);
  const Eigen::VectorXd projected = phi - top.dot(phi) * top;
  out.bound = projected.dot(view.matrix * projected) / projected.squaredNorm();
  return out;
}

namespace {

std::size_t estimated_exact_trace_bytes(const Multigraph& g, std::size_t length) {
  const double bits = static_cast<double>(length) * std::log2(std::max<double>(2.0, static_cast<double>(g.max_degree()))) + 64.0;
  const double per_entry = bits / 8.0 + 32.0;
  const double n = static_cast<double>(g.size());
  return static_cast<std::size_t>(3.0 * n * n * per_entry);
}

}  // namespace

double trace_power(const Eigen::VectorXd& eigenvalues, std::size_t length) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
    sum += std::pow(eigenvalues(i), static_cast<double>(length));
  return sum;
}

TraceValue trace_power(const Multigraph& g, MatrixKind kind, std::size_t length, TraceMode mode) {
  TraceValue out;
  if (mode == TraceMode::exact_integer) {
    if (kind != MatrixKind::adjacency) throw PreconditionError("exact trace mode requires the adjacency kind");
    if (estimated_exact_trace_bytes(g, length) > kExactTraceMemoryCap)
      throw CapacityError("exact trace exceeds the 256 MiB cap; use floating mode");
    const auto power = kernels::int_matrix_power(kernels::adjacency_int(g), length);
    mpz_class tr = 0;
    for (std::size_t i = 0; i < power.n; ++i) tr += power(i, i);
    out.value = tr.get_d();
    out.exact = std::move(tr);
    return out;
  }
  const auto view_kind = kind == MatrixKind::transition ? MatrixKind::normalized_adjacency : kind;
  out.value = trace_power(spectrum(g, view_kind).eigenvalues, length);
  return out;
}

CertifiedCheck interlacing_check(const Multigraph& g, const VertexSet& deleted, const Interval& interval,
                                 double tol) {
  if (deleted.parent_size() != g.size()) throw PreconditionError("vertex set belongs to another graph");
  const auto kept = deleted.complement();
  if (!kept) throw PreconditionError("interlacing_check requires D to be a proper subset");
  const auto full = spectrum(g, MatrixKind::normalized_adjacency);
  const auto sub = spectrum(g, MatrixKind::normalized_adjacency, *kept);
  const auto m_g = multiplicity(full.eigenvalues, interval, tol);
  const auto m_sub = multiplicity(sub.eigenvalues, interval, 2.0 * tol);
  return certify("cauchy_interlacing", "m_sub(I) + |D| >= m_G(I)",
                 static_cast<double>(m_sub + deleted.size()), static_cast<double>(m_g), tol, true,
                 {{"deleted", deleted.size()},
                  {"lo", interval.lo},
                  {"hi", interval.hi},
                  {"m_G", m_g},
                  {"m_sub", m_sub}});
}

}  // namespace walklab
