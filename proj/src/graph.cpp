#include "walklab/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "walklab/error.hpp"

namespace walklab {

Multigraph::Multigraph(std::size_t n, EdgeMap edges) : n_(n), edges_(std::move(edges)) {
  if (n_ == 0) throw PreconditionError("graph must have at least one vertex");
  std::vector<std::size_t> count(n_, 0);
  degree_.assign(n_, 0);
  for (const auto& [key, mult] : edges_) {
    const auto [u, v] = key;
    if (u > v) throw PreconditionError("edge key must satisfy u <= v");
    if (v >= n_) {
      throw PreconditionError("vertex " + std::to_string(v) + " out of range for n=" +
                              std::to_string(n_));
    }
    if (mult == 0) throw PreconditionError("edge multiplicity must be positive");
    if (u == v) {
      has_loops_ = true;
      degree_[u] += mult;
      ++count[u];
    } else {
      degree_[u] += mult;
      degree_[v] += mult;
      ++count[u];
      ++count[v];
    }
  }
  offsets_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + count[v];
  adjacency_.resize(offsets_[n_]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [key, mult] : edges_) {
    const auto [u, v] = key;
    adjacency_[cursor[u]++] = {v, mult};
    if (u != v) adjacency_[cursor[v]++] = {u, mult};
  }
  for (std::size_t v = 0; v < n_; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1],
              [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
  }
  max_degree_ = *std::max_element(degree_.begin(), degree_.end());
}

Multiplicity Multigraph::multiplicity(Vertex u, Vertex v) const {
  auto it = edges_.find({std::min(u, v), std::max(u, v)});
  return it == edges_.end() ? 0 : it->second;
}

std::span<const Neighbor> Multigraph::neighbors(Vertex v) const {
  if (v >= n_) throw PreconditionError("vertex out of range");
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Multigraph::is_simple() const noexcept {
  if (has_loops_) return false;
  return std::all_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.second == 1; });
}

std::optional<Multiplicity> Multigraph::regular_degree() const {
  if (std::all_of(degree_.begin(), degree_.end(), [&](Multiplicity d) { return d == degree_[0]; }))
    return degree_[0];
  return std::nullopt;
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v, Multiplicity mult) {
  if (u >= n_ || v >= n_) throw PreconditionError("vertex out of range in builder");
  if (mult == 0) return *this;
  edges_[{std::min(u, v), std::max(u, v)}] += mult;
  return *this;
}

VertexSet::VertexSet(std::size_t parent_size, std::vector<Vertex> members)
    : parent_size_(parent_size), members_(std::move(members)) {
  if (members_.empty()) throw PreconditionError("vertex set must be nonempty");
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw PreconditionError("vertex set has duplicate members");
  if (members_.back() >= parent_size_) throw PreconditionError("vertex set member out of range");
  if (parent_size_ <= 64) {
    std::uint64_t m = 0;
    for (Vertex v : members_) m |= std::uint64_t{1} << v;
    mask_ = m;
  }
}

VertexSet VertexSet::all(std::size_t parent_size) {
  std::vector<Vertex> m(parent_size);
  for (std::size_t i = 0; i < parent_size; ++i) m[i] = static_cast<Vertex>(i);
  return VertexSet(parent_size, std::move(m));
}

bool VertexSet::contains(Vertex v) const {
  if (mask_) return v < 64 && ((*mask_ >> v) & 1U);
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::optional<std::size_t> VertexSet::index_of(Vertex v) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

VertexSet VertexSet::with(Vertex v) const {
  if (contains(v)) return *this;
  auto m = members_;
  m.push_back(v);
  return VertexSet(parent_size_, std::move(m));
}

std::optional<VertexSet> VertexSet::complement() const {
  std::vector<Vertex> rest;
  for (std::size_t v = 0; v < parent_size_; ++v)
    if (!contains(static_cast<Vertex>(v))) rest.push_back(static_cast<Vertex>(v));
  if (rest.empty()) return std::nullopt;
  return VertexSet(parent_size_, std::move(rest));
}

namespace {

void require_parent(const Multigraph& g, const VertexSet& s) {
  if (s.parent_size() != g.size()) throw PreconditionError("vertex set belongs to another graph");
}

}  // namespace

InducedSubgraph induced_subgraph(const Multigraph& g, const VertexSet& s) {
  require_parent(g, s);
  Multigraph::EdgeMap edges;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (const Neighbor& nb : g.neighbors(s[i])) {
      auto j = s.index_of(nb.to);
      if (j && *j >= i) edges[{static_cast<Vertex>(i), static_cast<Vertex>(*j)}] = nb.mult;
    }
  }
  std::vector<Vertex> map(s.members().begin(), s.members().end());
  return {Multigraph(s.size(), std::move(edges)), std::move(map)};
}

Boundary boundary(const Multigraph& g, const VertexSet& s) {
  require_parent(g, s);
  if (s.is_full()) throw PreconditionError("boundary requires S to be a proper subset");
  std::vector<Vertex> b;
  Multiplicity count = 0;
  for (Vertex v : s.members()) {
    Multiplicity out = 0;
    for (const Neighbor& nb : g.neighbors(v))
      if (!s.contains(nb.to)) out += nb.mult;
    if (out > 0) {
      b.push_back(v);
      count += out;
    }
  }
  if (b.empty()) throw PreconditionError("S has no boundary (graph disconnected from S)");
  return {VertexSet(g.size(), std::move(b)), count};
}

Multigraph lazy_transform(const Multigraph& g) {
  auto edges = g.edges();
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto d = g.degree(static_cast<Vertex>(v));
    if (d > 0) edges[{static_cast<Vertex>(v), static_cast<Vertex>(v)}] += d;
  }
  return Multigraph(g.size(), std::move(edges));
}

std::vector<std::size_t> bfs_distances(const Multigraph& g, Vertex source) {
  std::vector<std::size_t> dist(g.size(), unreachable);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (const Neighbor& nb : g.neighbors(v)) {
      if (dist[nb.to] == unreachable) {
        dist[nb.to] = dist[v] + 1;
        queue.push_back(nb.to);
      }
    }
  }
  return dist;
}

std::vector<std::size_t> bfs_distances_within(const Multigraph& g, const VertexSet& s,
                                              Vertex source) {
  require_parent(g, s);
  auto start = s.index_of(source);
  if (!start) throw PreconditionError("source not in vertex set");
  std::vector<std::size_t> dist(s.size(), unreachable);
  std::deque<Vertex> queue{source};
  dist[*start] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    const std::size_t dv = dist[*s.index_of(v)];
    for (const Neighbor& nb : g.neighbors(v)) {
      auto j = s.index_of(nb.to);
      if (j && dist[*j] == unreachable) {
        dist[*j] = dv + 1;
        queue.push_back(nb.to);
      }
    }
  }
  return dist;
}

bool is_connected(const Multigraph& g) {
  auto d = bfs_distances(g, 0);
  return std::find(d.begin(), d.end(), unreachable) == d.end();
}

bool is_connected_subset(const Multigraph& g, const VertexSet& s) {
  auto d = bfs_distances_within(g, s, s[0]);
  return std::find(d.begin(), d.end(), unreachable) == d.end();
}

bool is_bipartite(const Multigraph& g) {
  if (g.has_loops()) return false;
  std::vector<int> side(g.size(), -1);
  for (std::size_t root = 0; root < g.size(); ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::deque<Vertex> queue{static_cast<Vertex>(root)};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (const Neighbor& nb : g.neighbors(v)) {
        if (side[nb.to] < 0) {
          side[nb.to] = 1 - side[v];
          queue.push_back(nb.to);
        } else if (side[nb.to] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

GraphStats graph_stats(const Multigraph& g) {
  GraphStats st;
  st.max_degree = g.max_degree();
  for (Multiplicity d : g.degrees()) ++st.degree_histogram[d];
  std::size_t diameter = 0;
  st.connected = true;
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto dist = bfs_distances(g, static_cast<Vertex>(v));
    for (std::size_t d : dist) {
      if (d == unreachable) {
        st.connected = false;
        break;
      }
      diameter = std::max(diameter, d);
    }
    if (!st.connected) break;
  }
  if (st.connected) st.diameter = diameter;
  return st;
}

}  // namespace walklab
