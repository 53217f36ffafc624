#pragma once

// Independent reference computations used to freeze expected values. None of
// these reuse the library's own DP, sampler or solver code paths.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "walklab/graph.hpp"
#include "walklab/rng.hpp"

namespace oracle {

using walklab::Multigraph;
using walklab::Vertex;

/// Every closed walk of the given length at x, by depth-first enumeration,
/// with its exact SRW probability.
std::map<std::vector<Vertex>, mpq_class> closed_walk_law(const Multigraph& g, Vertex x, std::size_t length);

/// Exact mass per support size, summed over the walks above.
std::map<std::size_t, mpq_class> support_masses(const Multigraph& g, Vertex x, std::size_t length);

/// Number of closed walks (multiplicity-weighted) per support size.
std::map<std::size_t, mpz_class> support_counts(const Multigraph& g, Vertex x, std::size_t length);

/// Closed walks from the root of a depth-k truncation of the d-regular tree,
/// built explicitly and enumerated recursively.
mpz_class tree_walks_bruteforce(std::size_t d, std::size_t k);

/// P_x(hit target before taboo) by value iteration.
double hitting_value_iteration(const Multigraph& g, Vertex x, const std::vector<Vertex>& target,
                               const std::vector<Vertex>& taboo, std::size_t max_iter = 200000);

/// Effective resistance from the Laplacian pseudo-inverse.
double resistance_pinv(const Multigraph& g, Vertex a, Vertex b);

/// Random connected simple graph: a random tree plus `extra` random edges.
Multigraph random_connected(std::size_t n, std::size_t extra, walklab::Rng& rng);

/// Random connected subset of the given size grown from a random vertex.
std::vector<Vertex> random_connected_subset(const Multigraph& g, std::size_t size, walklab::Rng& rng);

}  // namespace oracle
