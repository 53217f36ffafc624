#include "support/oracles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace oracle {

std::map<std::vector<Vertex>, mpq_class> closed_walk_law(const Multigraph& g, Vertex x, std::size_t length) {
  std::map<std::vector<Vertex>, mpq_class> law;
  std::vector<Vertex> walk{x};
  std::function<void(mpq_class)> dfs = [&](mpq_class weight) {
    if (walk.size() == length + 1) {
      if (walk.back() == x) law[walk] += weight;
      return;
    }
    const Vertex v = walk.back();
    for (std::size_t w = 0; w < g.size(); ++w) {
      const auto m = g.multiplicity(v, static_cast<Vertex>(w));
      if (m == 0) continue;
      walk.push_back(static_cast<Vertex>(w));
      mpq_class step(static_cast<unsigned long>(m), static_cast<unsigned long>(g.degree(v)));
      step.canonicalize();
      dfs(weight * step);
      walk.pop_back();
    }
  };
  dfs(mpq_class(1));
  return law;
}

namespace {
std::size_t support_of(std::vector<Vertex> walk) {
  std::sort(walk.begin(), walk.end());
  return static_cast<std::size_t>(std::unique(walk.begin(), walk.end()) - walk.begin());
}
}  // namespace

std::map<std::size_t, mpq_class> support_masses(const Multigraph& g, Vertex x, std::size_t length) {
  std::map<std::size_t, mpq_class> out;
  for (const auto& [walk, p] : closed_walk_law(g, x, length)) out[support_of(walk)] += p;
  return out;
}

std::map<std::size_t, mpz_class> support_counts(const Multigraph& g, Vertex x, std::size_t length) {
  std::map<std::size_t, mpz_class> out;
  std::vector<Vertex> walk{x};
  std::function<void(const mpz_class&)> dfs = [&](const mpz_class& weight) {
    if (walk.size() == length + 1) {
      if (walk.back() == x) out[support_of(walk)] += weight;
      return;
    }
    const Vertex v = walk.back();
    for (std::size_t w = 0; w < g.size(); ++w) {
      const auto m = g.multiplicity(v, static_cast<Vertex>(w));
      if (m == 0) continue;
      walk.push_back(static_cast<Vertex>(w));
      dfs(weight * static_cast<unsigned long>(m));
      walk.pop_back();
    }
  };
  dfs(mpz_class(1));
  return out;
}

mpz_class tree_walks_bruteforce(std::size_t d, std::size_t k) {
  // parent[v], children[v] of the explicit truncated tree.
  std::vector<std::vector<std::size_t>> adj(1);
  std::vector<std::size_t> frontier{0};
  for (std::size_t depth = 0; depth < k; ++depth) {
    std::vector<std::size_t> next;
    for (std::size_t v : frontier) {
      const std::size_t kids = depth == 0 ? d : d - 1;
      for (std::size_t c = 0; c < kids; ++c) {
        adj.push_back({v});
        adj[v].push_back(adj.size() - 1);
        next.push_back(adj.size() - 1);
      }
    }
    frontier.swap(next);
  }
  mpz_class count = 0;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t v, std::size_t left) {
    if (left == 0) {
      if (v == 0) ++count;
      return;
    }
    for (std::size_t w : adj[v]) dfs(w, left - 1);
  };
  dfs(0, 2 * k);
  return count;
}

double hitting_value_iteration(const Multigraph& g, Vertex x, const std::vector<Vertex>& target,
                               const std::vector<Vertex>& taboo, std::size_t max_iter) {
  std::vector<double> h(g.size(), 0.0);
  std::vector<int> fixed(g.size(), 0);
  for (Vertex t : target) {
    h[t] = 1.0;
    fixed[t] = 1;
  }
  for (Vertex t : taboo) fixed[t] = 1;
  for (std::size_t it = 0; it < max_iter; ++it) {
    double change = 0.0;
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (fixed[v]) continue;
      double acc = 0.0;
      for (std::size_t w = 0; w < g.size(); ++w)
        acc += static_cast<double>(g.multiplicity(static_cast<Vertex>(v), static_cast<Vertex>(w))) * h[w];
      acc /= static_cast<double>(g.degree(static_cast<Vertex>(v)));
      change = std::max(change, std::abs(acc - h[v]));
      h[v] = acc;
    }
    if (change < 1e-15) break;
  }
  return h[x];
}

double resistance_pinv(const Multigraph& g, Vertex a, Vertex b) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [uv, m] : g.edges()) {
    if (uv.first == uv.second) continue;
    const double c = static_cast<double>(m);
    lap(uv.first, uv.first) += c;
    lap(uv.second, uv.second) += c;
    lap(uv.first, uv.second) -= c;
    lap(uv.second, uv.first) -= c;
  }
  const Eigen::MatrixXd pinv = lap.completeOrthogonalDecomposition().pseudoInverse();
  return pinv(a, a) + pinv(b, b) - 2 * pinv(a, b);
}

Multigraph random_connected(std::size_t n, std::size_t extra, walklab::Rng& rng) {
  walklab::GraphBuilder builder(n);
  std::set<std::pair<Vertex, Vertex>> used;
  for (std::size_t v = 1; v < n; ++v) {
    const auto parent = static_cast<Vertex>(rng.below(v));
    builder.add_edge(parent, static_cast<Vertex>(v));
    used.insert({parent, static_cast<Vertex>(v)});
  }
  for (std::size_t i = 0; i < extra && n > 2; ++i) {
    auto p = static_cast<Vertex>(rng.below(n));
    auto q = static_cast<Vertex>(rng.below(n));
    if (p == q) continue;
    if (p > q) std::swap(p, q);
    if (!used.insert({p, q}).second) continue;
    builder.add_edge(p, q);
  }
  return builder.build();
}

std::vector<Vertex> random_connected_subset(const Multigraph& g, std::size_t size, walklab::Rng& rng) {
  std::vector<Vertex> members{static_cast<Vertex>(rng.below(g.size()))};
  while (members.size() < size) {
    std::vector<Vertex> frontier;
    for (Vertex v : members)
      for (const auto& nb : g.neighbors(v))
        if (std::find(members.begin(), members.end(), nb.to) == members.end()) frontier.push_back(nb.to);
    if (frontier.empty()) break;
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    members.push_back(frontier[rng.below(frontier.size())]);
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace oracle
