#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "walklab/graph.hpp"

namespace walklab {

enum class Family {
  cycle,
  path,
  multipath,
  complete,
  complete_bipartite,
  star,
  random_regular,
  lollipop,
  mangrove
};

std::string_view family_name(Family f);

/// Family plus integer parameters. Parameter names per family:
///   cycle n | path n | multipath n, mult | complete n | complete_bipartite a, b
///   star n (leaves) | random_regular n, d | lollipop d, n | mangrove d, n
struct GeneratorSpec {
  Family family = Family::cycle;
  std::map<std::string, std::int64_t> params;
  std::uint64_t seed = 0;
};

/// Parses "gen:lollipop,d=4,n=8" (the "gen:" prefix is optional). A "seed"
/// key sets GeneratorSpec::seed.
GeneratorSpec parse_generator_spec(std::string_view text);
std::string to_string(const GeneratorSpec& spec);

Multigraph generate(const GeneratorSpec& spec);

Multigraph cycle(std::size_t n);
Multigraph path(std::size_t n);
/// Path on n vertices, consecutive vertices joined by `mult` parallel edges.
Multigraph multipath(std::size_t n, Multiplicity mult);
Multigraph complete(std::size_t n);
/// Parts {0..a-1} and {a..a+b-1}.
Multigraph complete_bipartite(std::size_t a, std::size_t b);
/// K_{1,leaves} with center 0.
Multigraph star(std::size_t leaves);
/// Configuration-model pairing, rejected until simple (at most 1000 rounds).
Multigraph random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

/// K_{d+1} on 0..d plus a pendant path d+1..d+n hung at v = d.
Multigraph lollipop(std::size_t d, std::size_t n);
constexpr Vertex lollipop_attach_vertex(std::size_t d) { return static_cast<Vertex>(d); }
/// u_i for i in 1..n; u_0 is the attach vertex.
constexpr Vertex lollipop_path_vertex(std::size_t d, std::size_t i) {
  return static_cast<Vertex>(d + i);
}

/// Vertex numbering of mangrove(d, n): the multipath is 0..n-1, then the tree
/// hung at vertex 0 in BFS order, then the tree hung at n-1.
struct MangroveLayout {
  std::size_t path_length = 0;
  std::size_t depth = 0;
  /// levels[t][i] are the vertices of tree t at distance i from its root.
  std::array<std::vector<std::vector<Vertex>>, 2> levels;
  std::size_t vertex_count = 0;
};

/// Depth is the smallest l with (d-1)^l >= n.
MangroveLayout mangrove_layout(std::size_t d, std::size_t n);
/// multipath(n, d/2) with a tree at each end: the root is joined to the path
/// end by a d/2-multiedge and has d/2 children, deeper internal vertices have
/// d-1 children. Only the leaves have degree other than d.
Multigraph mangrove(std::size_t d, std::size_t n);

}  // namespace walklab
