#pragma once

#include <gmpxx.h>
#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "walklab/check.hpp"
#include "walklab/graph.hpp"
#include "walklab/rng.hpp"

namespace walklab {

/// P_x(X_steps = x) for the simple random walk, by repeated symmetric
/// mat-vec products with Ã. Any step count is accepted.
double return_probability(const Multigraph& g, Vertex x, std::size_t steps);

/// (Ã^{2k})_{xx}; `length` must be even.
double closed_walk_prob(const Multigraph& g, Vertex x, std::size_t length);

enum class ProfileMode { exact, mc };

/// How the exact DP weighs a step v -> w.
enum class WalkWeight {
  /// mult(v,w) / deg(v): the SRW law.
  probability,
  /// mult(v,w): plain walk counts.
  count
};

/// Joint law of (closed at x, support size) for walks of a fixed length.
/// `by_support[s]` is the unconditional mass of closed walks with support
/// exactly s, so the masses sum to total_closed.
struct SupportProfile {
  Vertex x = 0;
  std::size_t length = 0;
  ProfileMode mode = ProfileMode::exact;
  WalkWeight weight = WalkWeight::probability;
  std::map<std::size_t, double> by_support;
  double total_closed = 0.0;

  // Exact mode: numerator per support over a shared denominator.
  std::map<std::size_t, mpz_class> exact_numerators;
  mpz_class denominator = 1;

  // MC mode.
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::map<std::size_t, std::size_t> sample_counts;
  /// Wilson 95% interval for each conditional frequency P(support = s | closed).
  std::map<std::size_t, std::pair<double, double>> ci95;
  double mean_support = 0.0;
  std::pair<double, double> mean_support_ci95{0.0, 0.0};

  /// Exact mass with support <= s (exact mode only).
  mpq_class exact_cumulative(std::size_t s) const;
  /// Mass with support <= s as a double.
  double cumulative(std::size_t s) const;
  /// P(support = s | closed).
  double conditional(std::size_t s) const;
};

/// Largest vertex count the bitmask DP accepts.
inline constexpr std::size_t kExactProfileMaxVertices = 24;
/// Upper bound on live DP states in one layer.
inline constexpr std::size_t kExactProfileMaxStates = 20'000'000;

/// Exact support profile by DP over (current vertex, visited set).
SupportProfile support_profile_exact(const Multigraph& g, Vertex x, std::size_t length,
                                     WalkWeight weight = WalkWeight::probability);

struct WalkSample {
  std::vector<Vertex> vertices;
  double log_weight = 0.0;

  std::size_t support() const;
};

/// Exact sampler for the SRW bridge from x back to x in `length` steps.
class ClosedWalkSampler {
 public:
  ClosedWalkSampler(const Multigraph& g, Vertex x, std::size_t length);

  WalkSample sample(Rng& rng) const;
  /// P_x(X_length = x).
  double return_probability() const noexcept { return return_probability_; }
  std::size_t length() const noexcept { return length_; }

 private:
  const Multigraph* graph_;
  Vertex x_;
  std::size_t length_;
  /// h_[j][v] is proportional to P_v(X_j = x); each layer scaled to max 1.
  std::vector<std::vector<double>> h_;
  double return_probability_ = 0.0;
};

WalkSample sample_closed_walk(const Multigraph& g, Vertex x, std::size_t length, Rng& rng);

/// Monte Carlo profile from `n_samples` conditioned walks split across
/// `workers` independent streams. Output does not depend on thread count.
SupportProfile support_profile_mc(const Multigraph& g, Vertex x, std::size_t length,
                                  std::size_t n_samples, std::uint64_t seed,
                                  std::size_t workers = 1);

std::pair<double, double> wilson_interval(std::size_t successes, std::size_t trials, double z = 1.959963984540054);

nlohmann::json to_json(const SupportProfile& p);

enum class CyclesupVariant { normalized, highdeg };

/// P_x(W^{2k,s}) against the decay bound relative to P_x(W^{2k,2s}). The
/// inequality is certified in log form: -log(ratio) >= k / (65 Δ^7 s^4)
/// (normalized) or k / (100 s^3) (highdeg). Graphs above the exact DP limit
/// fall back to sampling and may come back inconclusive.
CertifiedCheck cyclesup_check(const Multigraph& g, Vertex x, std::size_t k, std::size_t s,
                              CyclesupVariant variant, std::uint64_t seed = 0,
                              std::size_t mc_samples = 100'000);

/// Range condition of the decay statement for the given instance.
bool cyclesup_in_range(const Multigraph& g, std::size_t k, std::size_t s, CyclesupVariant variant);

/// Closed walks of length 2k from the root of the infinite d-regular tree.
mpz_class tree_closed_walk_count(std::size_t d, std::size_t k);

}  // namespace walklab
