#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace walklab {

using Vertex = std::uint32_t;
using Multiplicity = std::uint64_t;

/// One adjacency entry. A loop at v appears in v's list with `to == v`.
struct Neighbor {
  Vertex to;
  Multiplicity mult;
};

/// Undirected multigraph with loops on vertices 0..n-1.
///
/// A loop of multiplicity m at v contributes m to deg(v) and m to A(v,v), so
/// adding deg(v) loops at every vertex turns P into (P + I) / 2.
/// Immutable once built.
class Multigraph {
 public:
  /// Key is (u, v) with u <= v.
  using EdgeMap = std::map<std::pair<Vertex, Vertex>, Multiplicity>;

  Multigraph(std::size_t n, EdgeMap edges);

  std::size_t size() const noexcept { return n_; }
  const EdgeMap& edges() const noexcept { return edges_; }

  Multiplicity multiplicity(Vertex u, Vertex v) const;
  Multiplicity loop_multiplicity(Vertex v) const { return multiplicity(v, v); }
  Multiplicity degree(Vertex v) const { return degree_.at(v); }
  std::span<const Multiplicity> degrees() const noexcept { return degree_; }
  Multiplicity max_degree() const noexcept { return max_degree_; }

  /// Neighbors sorted by id, loops included.
  std::span<const Neighbor> neighbors(Vertex v) const;

  bool has_loops() const noexcept { return has_loops_; }
  /// No loops and no parallel edges.
  bool is_simple() const noexcept;
  /// Common degree when every vertex has the same degree.
  std::optional<Multiplicity> regular_degree() const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  EdgeMap edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::vector<Multiplicity> degree_;
  Multiplicity max_degree_ = 0;
  bool has_loops_ = false;
};

/// Accumulates multiplicities; repeated pairs add up.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : n_(n) {}
  GraphBuilder& add_edge(Vertex u, Vertex v, Multiplicity mult = 1);
  GraphBuilder& add_loop(Vertex v, Multiplicity mult = 1) { return add_edge(v, v, mult); }
  Multigraph build() const { return Multigraph(n_, edges_); }

 private:
  std::size_t n_;
  Multigraph::EdgeMap edges_;
};

/// Sorted, duplicate-free, nonempty subset of a graph's vertices.
class VertexSet {
 public:
  VertexSet(std::size_t parent_size, std::vector<Vertex> members);

  static VertexSet all(std::size_t parent_size);

  std::size_t parent_size() const noexcept { return parent_size_; }
  std::span<const Vertex> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  bool contains(Vertex v) const;
  /// Position of v inside members(), if present.
  std::optional<std::size_t> index_of(Vertex v) const;
  /// Bitmask of members; only for parents with at most 64 vertices.
  std::optional<std::uint64_t> mask() const noexcept { return mask_; }
  bool is_full() const noexcept { return members_.size() == parent_size_; }

  VertexSet with(Vertex v) const;
  /// Vertices of the parent not in this set; nullopt when the set is full.
  std::optional<VertexSet> complement() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.parent_size_ == b.parent_size_ && a.members_ == b.members_;
  }

 private:
  std::size_t parent_size_;
  std::vector<Vertex> members_;
  std::optional<std::uint64_t> mask_;
};

struct InducedSubgraph {
  Multigraph graph;
  /// to_parent[i] is the parent id of vertex i.
  std::vector<Vertex> to_parent;
};

InducedSubgraph induced_subgraph(const Multigraph& g, const VertexSet& s);

struct Boundary {
  VertexSet vertices;
  /// Edges (with multiplicity) from the boundary to V \ S.
  Multiplicity edge_count;
};

/// Vertices of S adjacent to V \ S. Throws when S = V.
Boundary boundary(const Multigraph& g, const VertexSet& s);

/// Adds deg(v) loops at each v: P' = (P + I) / 2 and Ã' = (Ã + I) / 2.
Multigraph lazy_transform(const Multigraph& g);

inline constexpr std::size_t unreachable = static_cast<std::size_t>(-1);

/// Hop distances from `source`, ignoring loops; `unreachable` where no path.
std::vector<std::size_t> bfs_distances(const Multigraph& g, Vertex source);

/// Hop distances from `source` inside the induced subgraph on `s`, indexed by
/// position in s.members().
std::vector<std::size_t> bfs_distances_within(const Multigraph& g, const VertexSet& s,
                                              Vertex source);

bool is_connected(const Multigraph& g);
/// Whether the induced subgraph on s is connected.
bool is_connected_subset(const Multigraph& g, const VertexSet& s);
bool is_bipartite(const Multigraph& g);

struct GraphStats {
  bool connected = false;
  /// nullopt means infinite (disconnected).
  std::optional<std::size_t> diameter;
  Multiplicity max_degree = 0;
  std::map<Multiplicity, std::size_t> degree_histogram;
};

GraphStats graph_stats(const Multigraph& g);

}  // namespace walklab
