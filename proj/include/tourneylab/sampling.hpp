// Copyright 2026 The tourneylab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tourneylab/bits.hpp"
#include "tourneylab/error.hpp"
#include "tourneylab/hamilton.hpp"
#include "tourneylab/rng.hpp"
#include "tourneylab/tournament.hpp"

namespace tourneylab {

struct SamplePlan {
  double p = 0.5;
  std::uint64_t trials = 1;
  std::uint64_t master_seed = 0;
};

inline void check_plan(const SamplePlan& plan) {
  if (!(plan.p > 0.0 && plan.p < 1.0))
    throw BadParams("p must lie in (0,1), got " + std::to_string(plan.p));
  if (plan.trials < 1) throw BadParams("trials must be at least 1");
}

/// p-biased subset: vertex v joins iff the v-th draw of `rng` falls below the
/// Bernoulli(p) threshold. Consumes exactly n draws.
inline VertexMask sample_mask(std::size_t n, double p, Rng& rng) {
  const std::uint64_t threshold = bernoulli_threshold(p);
  VertexMask m(n);
  auto w = m.words();
  for (std::size_t v = 0; v < n; ++v)
    if (rng() < threshold) w[v / kWordBits] |= Word{1} << (v % kWordBits);
  return m;
}

inline VertexSubset sample_subset(std::size_t n, double p, Rng& rng) {
  if (!(p > 0.0 && p < 1.0)) throw BadParams("p must lie in (0,1)");
  return VertexSubset::from_mask(sample_mask(n, p, rng));
}

inline constexpr double kZ95 = 1.959963984540054;
// Two-sided 99.7% normal quantile.
inline constexpr double kZ997 = 2.967737925342510;

struct Interval {
  double low = 0.0;
  double high = 1.0;
};

/// Wilson score interval for `successes` out of `trials` at quantile z.
inline Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (phat + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  Interval iv{std::max(0.0, centre - half), std::min(1.0, centre + half)};
  // Guard the ordering against rounding at the boundaries.
  iv.low = std::min(iv.low, phat);
  iv.high = std::max(iv.high, phat);
  return iv;
}

struct EstimateReport {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double point_estimate = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  double p = 0.0;
  std::uint64_t master_seed = 0;
  double wall_time = 0.0;  // seconds
};

/// Worker count: `requested` (0 = hardware concurrency), capped by the
/// TOURNEYLAB_THREADS environment variable and by the trial count.
inline unsigned resolve_threads(unsigned requested, std::uint64_t trials) {
  unsigned threads = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TOURNEYLAB_THREADS")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && cap > 0) threads = std::min<unsigned>(threads, static_cast<unsigned>(cap));
  }
  if (trials < threads) threads = static_cast<unsigned>(std::max<std::uint64_t>(1, trials));
  return threads;
}

/// Runs trials 0..trials-1, trial i drawing its subset from
/// trial_rng(master_seed, i), and counts how many satisfy `accept(mask)`.
/// Trials are split into contiguous blocks across threads; the count does
/// not depend on the split.
template <typename Accept>
std::uint64_t count_successes(std::size_t n, const SamplePlan& plan, unsigned threads,
                              Accept&& accept) {
  check_plan(plan);
  threads = resolve_threads(threads, plan.trials);
  std::vector<std::uint64_t> partial(threads, 0);
  auto work = [&](unsigned worker) {
    const std::uint64_t begin = plan.trials * worker / threads;
    const std::uint64_t end = plan.trials * (worker + 1) / threads;
    std::uint64_t hits = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      Rng rng = trial_rng(plan.master_seed, i);
      if (accept(sample_mask(n, plan.p, rng))) ++hits;
    }
    partial[worker] = hits;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  std::uint64_t total = 0;
  for (std::uint64_t h : partial) total += h;
  return total;
}

inline EstimateReport make_report(std::uint64_t successes, const SamplePlan& plan,
                                  double wall_time) {
  EstimateReport r;
  r.successes = successes;
  r.trials = plan.trials;
  r.point_estimate = static_cast<double>(successes) / static_cast<double>(plan.trials);
  const Interval iv = wilson_interval(successes, plan.trials, kZ95);
  r.ci_low = iv.low;
  r.ci_high = iv.high;
  r.p = plan.p;
  r.master_seed = plan.master_seed;
  r.wall_time = wall_time;
  return r;
}

/// Monte Carlo estimate of P[T_p is Hamiltonian]. Each trial tests strong
/// connectivity of T[S] directly on the parent's bit rows, which is the same
/// predicate as is_hamiltonian(induced(T, S)).
inline EstimateReport estimate_hamiltonian_probability(const Tournament& t,
                                                       const SamplePlan& plan,
                                                       unsigned threads = 0) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t hits = count_successes(
      t.size(), plan, threads, [&](const VertexMask& s) { return is_hamiltonian_within(t, s); });
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return make_report(hits, plan, elapsed.count());
}

inline constexpr std::size_t kExactLimit = 20;

/// counts[s] = number of s-element subsets S with T[S] Hamiltonian.
inline std::vector<std::uint64_t> hamiltonian_subset_counts(const Tournament& t) {
  const std::size_t n = t.size();
  if (n > kExactLimit) throw TooLarge(n, kExactLimit);
  std::vector<std::uint32_t> out(n, 0);
  for (Vertex u = 0; u < n; ++u) out[u] = static_cast<std::uint32_t>(t.out_row(u)[0]);

  auto reach = [&](std::uint32_t within, std::uint32_t from, bool forward) {
    std::uint32_t reached = from, frontier = from;
    while (frontier) {
      std::uint32_t fresh = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(f));
        fresh |= forward ? out[v] : ~out[v];
      }
      fresh &= within & ~reached;
      reached |= fresh;
      frontier = fresh;
    }
    return reached;
  };

  std::vector<std::uint64_t> counts(n + 1, 0);
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t s = 0; s < limit; ++s) {
    const int size = std::popcount(s);
    if (size < 3) continue;
    const std::uint32_t src = s & (~s + 1);
    if (reach(s, src, true) == s && reach(s, src, false) == s) ++counts[static_cast<std::size_t>(size)];
  }
  return counts;
}

/// Σ_S p^|S| (1-p)^(n-|S|) [T[S] Hamiltonian], by enumerating all 2^n subsets.
inline double exact_hamiltonian_probability(const Tournament& t, double p) {
  if (!(p > 0.0 && p < 1.0)) throw BadParams("p must lie in (0,1)");
  const std::vector<std::uint64_t> counts = hamiltonian_subset_counts(t);
  const std::size_t n = t.size();
  double total = 0.0;
  for (std::size_t s = 0; s <= n; ++s)
    if (counts[s])
      total += static_cast<double>(counts[s]) * std::pow(p, static_cast<double>(s)) *
               std::pow(1.0 - p, static_cast<double>(n - s));
  return total;
}

/// Probability for a uniformly random subset (p = 1/2).
inline double uniform_subset_probability(const Tournament& t) {
  return exact_hamiltonian_probability(t, 0.5);
}

struct BoundSpec {
  std::size_t n = 0;
  std::size_t t = 0;
  double p = 0.0;
  double bound_value = 0.0;
  bool improved = false;
};

/// 1-(1-p)^t, or 1-(1-p)^(t+1) when n - t ≡ 1 (mod 4).
inline BoundSpec theoretical_bound(std::size_t n, std::size_t t, double p) {
  if (t < 1) throw BadParams("t must be at least 1");
  if (!(p > 0.0 && p < 1.0)) throw BadParams("p must lie in (0,1)");
  if (n < t) throw BadParams("n must be at least t");
  BoundSpec b{n, t, p, 0.0, (n - t) % 4 == 1};
  const double exponent = static_cast<double>(b.improved ? t + 1 : t);
  b.bound_value = 1.0 - std::pow(1.0 - p, exponent);
  return b;
}

}  // namespace tourneylab
