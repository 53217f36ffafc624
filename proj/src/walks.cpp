#include "walklab/walks.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

#include "walklab/error.hpp"
#include "walklab/kernels.hpp"

namespace walklab {

namespace {

void require_vertex(const Multigraph& g, Vertex x) {
  if (x >= g.size()) throw PreconditionError("vertex " + std::to_string(x) + " out of range");
  if (g.degree(x) == 0) throw PreconditionError("walks need a vertex of positive degree");
}

void require_positive_degrees(const Multigraph& g) {
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.degree(static_cast<Vertex>(v)) == 0)
      throw PreconditionError("walks need every vertex to have positive degree");
}

std::string decimal_string(const mpq_class& q) {
  mpf_class f(q, 256);
  mp_exp_t exp = 0;
  std::string digits = f.get_str(exp, 10, 30);
  if (digits.empty()) return "0";
  std::string sign;
  if (digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  if (exp <= 0) return sign + "0." + std::string(static_cast<std::size_t>(-exp), '0') + digits;
  if (static_cast<std::size_t>(exp) >= digits.size())
    return sign + digits + std::string(static_cast<std::size_t>(exp) - digits.size(), '0');
  return sign + digits.substr(0, static_cast<std::size_t>(exp)) + "." + digits.substr(static_cast<std::size_t>(exp));
}

}  // namespace

double return_probability(const Multigraph& g, Vertex x, std::size_t steps) {
  require_vertex(g, x);
  require_positive_degrees(g);
  const auto m = kernels::normalized_adjacency_csr(g);
  std::vector<double> cur(g.size(), 0.0), next(g.size(), 0.0);
  cur[x] = 1.0;
  if (steps % 2 == 0) {
    for (std::size_t i = 0; i < steps / 2; ++i) {
      kernels::omp::matvec(m, cur, next);
      cur.swap(next);
    }
    double sum = 0.0;
    for (double c : cur) sum += c * c;
    return sum;
  }
  for (std::size_t i = 0; i < steps; ++i) {
    kernels::omp::matvec(m, cur, next);
    cur.swap(next);
  }
  return cur[x];
}

double closed_walk_prob(const Multigraph& g, Vertex x, std::size_t length) {
  if (length % 2 != 0) throw PreconditionError("closed_walk_prob expects an even length");
  return return_probability(g, x, length);
}

mpq_class SupportProfile::exact_cumulative(std::size_t s) const {
  if (mode != ProfileMode::exact) throw PreconditionError("exact_cumulative needs an exact profile");
  mpz_class num = 0;
  for (const auto& [support, n] : exact_numerators)
    if (support <= s) num += n;
  mpq_class q(num, denominator);
  q.canonicalize();
  return q;
}

double SupportProfile::cumulative(std::size_t s) const {
  double sum = 0.0;
  for (const auto& [support, mass] : by_support)
    if (support <= s) sum += mass;
  return sum;
}

double SupportProfile::conditional(std::size_t s) const {
  if (total_closed <= 0.0) return 0.0;
  auto it = by_support.find(s);
  return it == by_support.end() ? 0.0 : it->second / total_closed;
}

SupportProfile support_profile_exact(const Multigraph& g, Vertex x, std::size_t length, WalkWeight weight) {
  require_vertex(g, x);
  if (g.size() > kExactProfileMaxVertices)
    throw CapacityError("exact support profile needs n <= 24 (got " + std::to_string(g.size()) +
                        "); use support_profile_mc");
  require_positive_degrees(g);

  const std::size_t n = g.size();
  mpz_class lcm = 1;
  for (std::size_t v = 0; v < n; ++v) {
    mpz_class d = static_cast<unsigned long>(g.degree(static_cast<Vertex>(v)));
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
  }
  // Integer weight of one step out of v, per unit multiplicity.
  std::vector<mpz_class> scale(n);
  for (std::size_t v = 0; v < n; ++v)
    scale[v] = weight == WalkWeight::probability
                   ? mpz_class(lcm / static_cast<unsigned long>(g.degree(static_cast<Vertex>(v))))
                   : mpz_class(1);

  const auto dist = bfs_distances(g, x);
  using Key = std::uint64_t;
  auto key = [](std::uint32_t mask, Vertex v) { return (static_cast<Key>(mask) << 5) | v; };

  std::unordered_map<Key, mpz_class> layer{{key(1u << x, x), mpz_class(1)}};
  for (std::size_t step = 0; step < length; ++step) {
    const std::size_t remaining = length - step - 1;
    std::unordered_map<Key, mpz_class> next;
    next.reserve(layer.size() * 2);
    for (const auto& [k, w] : layer) {
      const auto v = static_cast<Vertex>(k & 31u);
      const auto mask = static_cast<std::uint32_t>(k >> 5);
      for (const Neighbor& nb : g.neighbors(v)) {
        if (dist[nb.to] == unreachable || dist[nb.to] > remaining) continue;
        mpz_class& slot = next[key(mask | (1u << nb.to), nb.to)];
        slot += w * scale[v] * static_cast<unsigned long>(nb.mult);
      }
    }
    if (next.size() > kExactProfileMaxStates)
      throw CapacityError("exact support profile exceeded the state budget; use support_profile_mc");
    layer.swap(next);
  }

  SupportProfile p;
  p.x = x;
  p.length = length;
  p.mode = ProfileMode::exact;
  p.weight = weight;
  if (weight == WalkWeight::probability) mpz_pow_ui(p.denominator.get_mpz_t(), lcm.get_mpz_t(), length);
  for (const auto& [k, w] : layer) {
    if (static_cast<Vertex>(k & 31u) != x) continue;
    const auto support = static_cast<std::size_t>(std::popcount(static_cast<std::uint32_t>(k >> 5)));
    p.exact_numerators[support] += w;
  }
  mpz_class total = 0;
  for (const auto& [support, num] : p.exact_numerators) {
    p.by_support[support] = mpq_class(num, p.denominator).get_d();
    total += num;
  }
  p.total_closed = mpq_class(total, p.denominator).get_d();
  return p;
}

std::size_t WalkSample::support() const {
  std::vector<Vertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

ClosedWalkSampler::ClosedWalkSampler(const Multigraph& g, Vertex x, std::size_t length)
    : graph_(&g), x_(x), length_(length) {
  require_vertex(g, x);
  require_positive_degrees(g);
  const std::size_t n = g.size();
  h_.assign(length + 1, std::vector<double>(n, 0.0));
  h_[0][x] = 1.0;
  for (std::size_t j = 0; j < length; ++j) {
    auto& next = h_[j + 1];
    double top = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      double acc = 0.0;
      for (const Neighbor& nb : g.neighbors(static_cast<Vertex>(v)))
        acc += static_cast<double>(nb.mult) * h_[j][nb.to];
      next[v] = acc / static_cast<double>(g.degree(static_cast<Vertex>(v)));
      top = std::max(top, next[v]);
    }
    if (top > 0.0)
      for (double& e : next) e /= top;
  }
  if (!(h_[length][x] > 0.0))
    throw PreconditionError("no closed walk of length " + std::to_string(length) + " at vertex " +
                            std::to_string(x));
  return_probability_ = walklab::return_probability(g, x, length);
}

WalkSample ClosedWalkSampler::sample(Rng& rng) const {
  WalkSample out;
  out.vertices.reserve(length_ + 1);
  Vertex v = x_;
  out.vertices.push_back(v);
  for (std::size_t i = 0; i < length_; ++i) {
    const auto& h = h_[length_ - i - 1];
    const auto nbs = graph_->neighbors(v);
    double total = 0.0;
    for (const Neighbor& nb : nbs) total += static_cast<double>(nb.mult) * h[nb.to];
    double u = rng.uniform() * total;
    Vertex chosen = nbs.back().to;
    for (const Neighbor& nb : nbs) {
      const double w = static_cast<double>(nb.mult) * h[nb.to];
      if (w <= 0.0) continue;
      chosen = nb.to;
      if (u < w) break;
      u -= w;
    }
    v = chosen;
    out.vertices.push_back(v);
  }
  return out;
}

WalkSample sample_closed_walk(const Multigraph& g, Vertex x, std::size_t length, Rng& rng) {
  return ClosedWalkSampler(g, x, length).sample(rng);
}

std::pair<double, double> wilson_interval(std::size_t successes, std::size_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double centre = (p + z2 / (2 * n)) / (1 + z2 / n);
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / (1 + z2 / n);
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

SupportProfile support_profile_mc(const Multigraph& g, Vertex x, std::size_t length, std::size_t n_samples,
                                  std::uint64_t seed, std::size_t workers) {
  if (n_samples == 0) throw PreconditionError("empty sample");
  if (workers == 0) throw PreconditionError("workers must be positive");
  const ClosedWalkSampler sampler(g, x, length);

  struct Tally {
    std::map<std::size_t, std::size_t> counts;
    double sum = 0.0;
    double sum_sq = 0.0;
  };
  std::vector<Tally> tallies(workers);
  const auto w_count = static_cast<std::int64_t>(workers);
#pragma omp parallel for schedule(static)
  for (std::int64_t w = 0; w < w_count; ++w) {
    const auto idx = static_cast<std::size_t>(w);
    const std::size_t quota = n_samples / workers + (idx < n_samples % workers ? 1 : 0);
    Rng rng = Rng::substream(seed, idx);
    Tally& t = tallies[idx];
    for (std::size_t i = 0; i < quota; ++i) {
      const auto s = sampler.sample(rng).support();
      ++t.counts[s];
      t.sum += static_cast<double>(s);
      t.sum_sq += static_cast<double>(s) * static_cast<double>(s);
    }
  }

  SupportProfile p;
  p.x = x;
  p.length = length;
  p.mode = ProfileMode::mc;
  p.n_samples = n_samples;
  p.seed = seed;
  p.workers = workers;
  p.total_closed = sampler.return_probability();
  double sum = 0.0, sum_sq = 0.0;
  for (const Tally& t : tallies) {
    for (const auto& [s, c] : t.counts) p.sample_counts[s] += c;
    sum += t.sum;
    sum_sq += t.sum_sq;
  }
  const double n = static_cast<double>(n_samples);
  for (const auto& [s, c] : p.sample_counts) {
    p.by_support[s] = p.total_closed * static_cast<double>(c) / n;
    p.ci95[s] = wilson_interval(c, n_samples);
  }
  p.mean_support = sum / n;
  const double var = n > 1 ? std::max(0.0, (sum_sq - n * p.mean_support * p.mean_support) / (n - 1)) : 0.0;
  const double half = 1.959963984540054 * std::sqrt(var / n);
  p.mean_support_ci95 = {p.mean_support - half, p.mean_support + half};
  return p;
}

nlohmann::json to_json(const SupportProfile& p) {
  nlohmann::json j;
  j["x"] = p.x;
  j["length"] = p.length;
  j["mode"] = p.mode == ProfileMode::exact ? "exact" : "mc";
  j["weight"] = p.weight == WalkWeight::probability ? "probability" : "count";
  j["total_closed"] = p.total_closed;
  auto rows = nlohmann::json::array();
  double mean = 0.0;
  for (const auto& [s, mass] : p.by_support) {
    nlohmann::json row{{"support", s}, {"mass", mass}, {"conditional", p.conditional(s)}};
    if (p.mode == ProfileMode::exact) {
      mpq_class q(p.exact_numerators.at(s), p.denominator);
      q.canonicalize();
      row["mass_exact"] = q.get_str();
      row["mass_decimal"] = decimal_string(q);
    } else {
      row["count"] = p.sample_counts.at(s);
      row["ci95"] = {p.ci95.at(s).first, p.ci95.at(s).second};
    }
    mean += static_cast<double>(s) * p.conditional(s);
    rows.push_back(std::move(row));
  }
  j["by_support"] = std::move(rows);
  if (p.mode == ProfileMode::exact) {
    mpz_class total = 0;
    for (const auto& [s, num] : p.exact_numerators) total += num;
    mpq_class q(total, p.denominator);
    q.canonicalize();
    j["total_closed_exact"] = q.get_str();
    j["mean_support"] = mean;
  } else {
    j["n_samples"] = p.n_samples;
    j["seed"] = p.seed;
    j["workers"] = p.workers;
    j["mean_support"] = p.mean_support;
    j["mean_support_ci95"] = {p.mean_support_ci95.first, p.mean_support_ci95.second};
  }
  return j;
}

namespace {

struct HighDegreeShape {
  std::size_t d = 0;
  std::size_t h = 0;
};

HighDegreeShape high_degree_shape(const Multigraph& g) {
  const auto d = g.regular_degree();
  if (!d) throw PreconditionError("highdeg variant requires a regular graph");
  const Multiplicity h = g.loop_multiplicity(0);
  for (const auto& [uv, m] : g.edges()) {
    if (uv.first == uv.second) continue;
    if (m != 1) throw PreconditionError("highdeg variant allows multiplicity only on loops");
  }
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.loop_multiplicity(static_cast<Vertex>(v)) != h)
      throw PreconditionError("highdeg variant requires the same loop count at every vertex");
  return {static_cast<std::size_t>(*d), static_cast<std::size_t>(h)};
}

double cyclesup_threshold(const Multigraph& g, std::size_t k, CyclesupVariant variant) {
  const auto kd = static_cast<double>(k);
  if (variant == CyclesupVariant::normalized) {
    const auto delta = static_cast<double>(g.max_degree());
    return 0.25 * std::pow(kd / (std::pow(delta, 7) * std::log(delta)), 0.2);
  }
  const auto shape = high_degree_shape(g);
  const auto d = static_cast<double>(shape.d);
  return std::min(0.125 * std::pow(kd / std::log(d), 0.25), (d - static_cast<double>(shape.h)) / 2.0);
}

double cyclesup_rate(const Multigraph& g, std::size_t k, std::size_t s, CyclesupVariant variant) {
  const auto kd = static_cast<double>(k);
  const auto sd = static_cast<double>(s);
  if (variant == CyclesupVariant::normalized)
    return kd / (65.0 * std::pow(static_cast<double>(g.max_degree()), 7) * std::pow(sd, 4));
  return kd / (100.0 * std::pow(sd, 3));
}

}  // namespace

bool cyclesup_in_range(const Multigraph& g, std::size_t k, std::size_t s, CyclesupVariant variant) {
  const bool size_ok = variant == CyclesupVariant::highdeg || 2 * k < g.size();
  return size_ok && static_cast<double>(s) <= cyclesup_threshold(g, k, variant);
}

CertifiedCheck cyclesup_check(const Multigraph& g, Vertex x, std::size_t k, std::size_t s,
                              CyclesupVariant variant, std::uint64_t seed, std::size_t mc_samples) {
  if (s == 0) throw PreconditionError("cyclesup_check needs s >= 1");
  const bool in_range = cyclesup_in_range(g, k, s, variant);
  const double threshold = cyclesup_threshold(g, k, variant);
  const double rate = cyclesup_rate(g, k, s, variant);
  const bool normalized = variant == CyclesupVariant::normalized;
  const std::string name = normalized ? "cyclesup_normalized" : "cyclesup_highdeg";
  const std::string statement = normalized
                                    ? "-log(P_x(W^{2k,s}) / P_x(W^{2k,2s})) >= k / (65 Delta^7 s^4)"
                                    : "-log(P_x(W^{2k,s}) / P_x(W^{2k,2s})) >= k / (100 s^3)";
  nlohmann::json inputs{{"x", x},         {"k", k},
                        {"s", s},         {"variant", normalized ? "normalized" : "highdeg"},
                        {"max_degree", g.max_degree()}, {"s_threshold", threshold},
                        {"in_range", in_range}};

  if (g.size() <= kExactProfileMaxVertices) {
    const auto profile = support_profile_exact(g, x, 2 * k);
    const mpq_class low = profile.exact_cumulative(s);
    const mpq_class high = profile.exact_cumulative(2 * s);
    inputs["P_s"] = low.get_d();
    inputs["P_2s"] = high.get_d();
    inputs["P_s_exact"] = low.get_str();
    inputs["P_2s_exact"] = high.get_str();
    inputs["mode"] = "exact";
    const bool sides_positive = sgn(low) > 0 && sgn(high) > 0;
    double neg_log = std::numeric_limits<double>::infinity();
    if (sides_positive) {
      mpq_class diff = low / high - 1;
      diff.canonicalize();
      neg_log = -std::log1p(diff.get_d());
    }
    inputs["exp_bound_factor"] = std::exp(-rate);
    auto check = certify(name, statement, neg_log, rate, kCertificateTol, in_range && sides_positive,
                         std::move(inputs));
    return check;
  }

  const auto profile = support_profile_mc(g, x, 2 * k, mc_samples, seed);
  std::size_t c_low = 0, c_high = 0;
  for (const auto& [support, c] : profile.sample_counts) {
    if (support <= s) c_low += c;
    if (support <= 2 * s) c_high += c;
  }
  const auto low_ci = wilson_interval(c_low, mc_samples);
  const auto high_ci = wilson_interval(c_high, mc_samples);
  inputs["mode"] = "mc";
  inputs["n_samples"] = mc_samples;
  inputs["seed"] = seed;
  inputs["P_s_conditional"] = static_cast<double>(c_low) / static_cast<double>(mc_samples);
  inputs["P_2s_conditional"] = static_cast<double>(c_high) / static_cast<double>(mc_samples);

  CertifiedCheck check;
  check.name = name;
  check.statement = statement;
  check.rhs = rate;
  check.tol = kCertificateTol;
  check.lhs = c_low == 0 ? std::numeric_limits<double>::infinity()
                         : -std::log(static_cast<double>(c_low) / static_cast<double>(c_high));
  check.slack = check.lhs - check.rhs;
  const double worst = low_ci.second / std::max(high_ci.first, std::numeric_limits<double>::min());
  const double best = low_ci.first / high_ci.second;
  inputs["neg_log_ratio_ci95"] = {-std::log(std::min(1.0, worst)), best > 0 ? -std::log(best) : 1e308};
  check.inputs = std::move(inputs);
  if (!in_range || c_high == 0) {
    check.verdict = Verdict::vacuous;
  } else if (-std::log(std::min(1.0, worst)) >= rate - check.tol) {
    check.verdict = Verdict::pass;
  } else if (best > 0 && -std::log(best) < rate - check.tol) {
    check.verdict = Verdict::fail;
  } else {
    check.verdict = Verdict::inconclusive;
  }
  return check;
}

mpz_class tree_closed_walk_count(std::size_t d, std::size_t k) {
  if (d < 2) throw PreconditionError("tree_closed_walk_count needs d >= 2");
  const std::size_t length = 2 * k;
  std::vector<mpz_class> at(k + 2, 0);
  at[0] = 1;
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<mpz_class> next(k + 2, 0);
    for (std::size_t depth = 0; depth <= k; ++depth) {
      if (at[depth] == 0) continue;
      const unsigned long down = depth == 0 ? d : d - 1;
      if (depth + 1 <= k) next[depth + 1] += at[depth] * down;
      if (depth > 0) next[depth - 1] += at[depth];
    }
    at.swap(next);
  }
  return at[0];
}

}  // namespace walklab
