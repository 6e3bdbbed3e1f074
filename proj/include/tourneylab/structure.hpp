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

// Structural machinery for tournaments that carry an almost-directed cut:
//
//   * balanced cut search (exact for n <= 20, degree witness + swap local
//     search beyond),
//   * the cleaning step turning an almost-directed cut into an eps^(1/3)-good
//     partition (A, B, X),
//   * refinement that moves high B->A degree vertices into X,
//   * k-connectors, maximum B->A matchings with a König cover,
//   * the four bad events for a sampled vertex set, and
//   * the low in-degree census used by the stability argument.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tourneylab/bits.hpp"
#include "tourneylab/error.hpp"
#include "tourneylab/hamilton.hpp"
#include "tourneylab/partition.hpp"
#include "tourneylab/rng.hpp"
#include "tourneylab/tournament.hpp"

namespace tourneylab {

// ---------------------------------------------------------------------------
// Goodness

struct GoodnessReport {
  double eps = 0.0;
  bool size_ok = false;       // |A|, |B| >= (1-eps) n / 2
  bool semidegree_ok = false; // δ0(T[A]), δ0(T[B]) >= (1/6 - eps) n
  bool density_ok = false;    // e(A,B) >= (1-eps) |A||B|
  std::size_t e_AB = 0;
  std::size_t e_BA = 0;
  std::size_t size_A = 0;
  std::size_t size_B = 0;
  std::size_t min_semidegree_A = 0;
  std::size_t min_semidegree_B = 0;

  bool good() const { return size_ok && semidegree_ok && density_ok; }
};

inline GoodnessReport goodness(const Tournament& t, const Partition& p, double eps) {
  check_partition(p, t.size());
  const double n = static_cast<double>(t.size());
  const VertexMask a = p.A.mask();
  const VertexMask b = p.B.mask();
  GoodnessReport r;
  r.eps = eps;
  r.size_A = p.A.size();
  r.size_B = p.B.size();
  r.e_AB = t.edges_between(a, b);
  r.e_BA = t.edges_between(b, a);
  r.min_semidegree_A = min_semidegree_within(t, a);
  r.min_semidegree_B = min_semidegree_within(t, b);
  const double min_size = (1.0 - eps) * n / 2.0;
  r.size_ok = static_cast<double>(r.size_A) >= min_size &&
              static_cast<double>(r.size_B) >= min_size;
  const double min_semi = (1.0 / 6.0 - eps) * n;
  r.semidegree_ok = r.size_A > 0 && r.size_B > 0 &&
                    static_cast<double>(r.min_semidegree_A) >= min_semi &&
                    static_cast<double>(r.min_semidegree_B) >= min_semi;
  r.density_ok = static_cast<double>(r.e_AB) >=
                 (1.0 - eps) * static_cast<double>(r.size_A) * static_cast<double>(r.size_B);
  return r;
}

// ---------------------------------------------------------------------------
// Balanced cut search

enum class CutMethod { kExact, kLocalSearch, kDegreeWitness };
enum class CutMode { kAuto, kExact, kHeuristic };

inline const char* to_string(CutMethod m) {
  switch (m) {
    case CutMethod::kExact: return "exact";
    case CutMethod::kLocalSearch: return "local_search";
    case CutMethod::kDegreeWitness: return "degree_witness";
  }
  return "unknown";
}

struct CutResult {
  VertexSubset A;
  VertexSubset B;
  std::size_t e_AB = 0;
  double density = 0.0;  // e(A,B) / (|A||B|)
  CutMethod method = CutMethod::kExact;
};

inline constexpr std::size_t kExactCutLimit = 20;

namespace detail {

inline CutResult make_cut(const Tournament& t, const VertexMask& a, std::size_t e_ab,
                          CutMethod method) {
  VertexMask b = VertexMask::full(t.size());
  b.subtract(a);
  CutResult r{VertexSubset::from_mask(a), VertexSubset::from_mask(b), e_ab, 0.0, method};
  r.density = static_cast<double>(e_ab) /
              (static_cast<double>(r.A.size()) * static_cast<double>(r.B.size()));
  return r;
}

// Sizes of A worth trying: floor(n/2) and, for odd n, ceil(n/2).
inline std::vector<std::size_t> balanced_sizes(std::size_t n) {
  std::vector<std::size_t> s{n / 2};
  if (n % 2 == 1) s.push_back(n / 2 + 1);
  return s;
}

inline CutResult exact_cut(const Tournament& t) {
  const std::size_t n = t.size();
  std::vector<std::uint32_t> out(n);
  for (Vertex v = 0; v < n; ++v) out[v] = static_cast<std::uint32_t>(t.out_row(v)[0]);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::uint32_t best_mask = 0;
  std::size_t best_e = 0;
  double best_density = -1.0;
  for (std::size_t size : balanced_sizes(n)) {
    const double denom = static_cast<double>(size * (n - size));
    // Gosper's hack over all `size`-subsets in increasing order.
    std::uint32_t a = (std::uint32_t{1} << size) - 1;
    while (a <= full) {
      const std::uint32_t b = full & ~a;
      std::size_t e = 0;
      for (std::uint32_t r = a; r; r &= r - 1)
        e += static_cast<std::size_t>(std::popcount(out[static_cast<std::size_t>(std::countr_zero(r))] & b));
      const double d = static_cast<double>(e) / denom;
      if (d > best_density) {
        best_density = d;
        best_e = e;
        best_mask = a;
      }
      const std::uint32_t c = a & (~a + 1);
      const std::uint32_t r = a + c;
      if (r == 0) break;
      a = (((r ^ a) >> 2) / c) | r;
    }
  }
  VertexMask m(n);
  for (Vertex v = 0; v < n; ++v)
    if ((best_mask >> v) & 1u) m.set(v);
  return make_cut(t, m, best_e, CutMethod::kExact);
}

// Swap local search on a fixed-size balanced cut. Maintains in_a[v] =
// |N-(v) ∩ A| and out_b[v] = |N+(v) ∩ B|; swapping a ∈ A with b ∈ B changes
// e(A,B) by (in_a[a] - out_b[a]) + (out_b[b] - in_a[b]) + 1, so the best
// swap is found in O(n).
class SwapSearch {
 public:
  SwapSearch(const Tournament& t, VertexMask a) : t_(t), a_(std::move(a)) {
    const std::size_t n = t.size();
    b_ = VertexMask::full(n);
    b_.subtract(a_);
    in_a_.resize(n);
    out_b_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      in_a_[v] = static_cast<long>(t.in_degree_within(v, a_));
      out_b_[v] = static_cast<long>(t.out_degree_within(v, b_));
    }
    e_ = static_cast<long>(t.edges_between(a_, b_));
  }

  // Returns the number of improving swaps applied.
  std::size_t run() {
    std::size_t swaps = 0;
    const std::size_t n = t_.size();
    while (true) {
      long best_a_gain = std::numeric_limits<long>::min();
      long best_b_gain = std::numeric_limits<long>::min();
      Vertex best_a = 0, best_b = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (a_.test(v)) {
          const long g = in_a_[v] - out_b_[v];
          if (g > best_a_gain) best_a_gain = g, best_a = v;
        } else {
          const long g = out_b_[v] - in_a_[v];
          if (g > best_b_gain) best_b_gain = g, best_b = v;
        }
      }
      if (best_a_gain == std::numeric_limits<long>::min() ||
          best_b_gain == std::numeric_limits<long>::min())
        break;
      const long delta = best_a_gain + best_b_gain + 1;
      if (delta <= 0) break;
      swap(best_a, best_b);
      e_ += delta;
      ++swaps;
    }
    return swaps;
  }

  const VertexMask& a() const { return a_; }
  std::size_t e_ab() const { return static_cast<std::size_t>(e_); }

 private:
  void swap(Vertex a, Vertex b) {
    for (Vertex v = 0; v < t_.size(); ++v) {
      in_a_[v] += (t_.beats(b, v) ? 1 : 0) - (t_.beats(a, v) ? 1 : 0);
      out_b_[v] += (t_.beats(v, a) ? 1 : 0) - (t_.beats(v, b) ? 1 : 0);
    }
    a_.reset(a);
    a_.set(b);
    b_.reset(b);
    b_.set(a);
  }

  const Tournament& t_;
  VertexMask a_;
  VertexMask b_;
  std::vector<long> in_a_;
  std::vector<long> out_b_;
  long e_ = 0;
};

inline VertexMask top_out_degree(const Tournament& t, std::size_t size) {
  std::vector<Vertex> order(t.size());
  for (Vertex v = 0; v < t.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) {
    return t.out_degree(x) > t.out_degree(y);
  });
  VertexMask m(t.size());
  for (std::size_t i = 0; i < size; ++i) m.set(order[i]);
  return m;
}

inline CutResult heuristic_cut(const Tournament& t, std::size_t effort, std::uint64_t seed) {
  const std::size_t n = t.size();
  std::optional<CutResult> best;
  auto consider = [&](const VertexMask& a, std::size_t e, CutMethod method) {
    CutResult c = make_cut(t, a, e, method);
    if (!best || c.density > best->density) best = std::move(c);
  };
  for (std::size_t size : balanced_sizes(n)) {
    // Degree witness: the `size` vertices of largest out-degree.
    SwapSearch witness(t, top_out_degree(t, size));
    consider(witness.a(), witness.e_ab(), CutMethod::kDegreeWitness);
    if (witness.run() > 0) consider(witness.a(), witness.e_ab(), CutMethod::kLocalSearch);

    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v) perm[v] = v;
    for (std::size_t restart = 0; restart < effort; ++restart) {
      Rng rng = trial_rng(seed, 2 * restart + (size == n / 2 ? 0 : 1));
      std::shuffle(perm.begin(), perm.end(), rng);
      VertexMask a(n);
      for (std::size_t i = 0; i < size; ++i) a.set(perm[i]);
      SwapSearch search(t, std::move(a));
      search.run();
      consider(search.a(), search.e_ab(), CutMethod::kLocalSearch);
    }
  }
  return *best;
}

}  // namespace detail

/// Best balanced bipartition (A, B) by e(A,B)/(|A||B|). Exhaustive for
/// n <= 20 under kAuto/kExact; otherwise the degree witness plus `effort`
/// random restarts of swap local search, which carries no optimality
/// guarantee.
inline CutResult balanced_cut_search(const Tournament& t, std::size_t effort,
                                     CutMode mode = CutMode::kAuto, std::uint64_t seed = 0) {
  const std::size_t n = t.size();
  if (n < 2) throw BadParams("balanced cut needs n >= 2");
  const bool exact = mode == CutMode::kExact || (mode == CutMode::kAuto && n <= kExactCutLimit);
  if (exact) {
    if (n > kExactCutLimit) throw TooLarge(n, kExactCutLimit);
    return detail::exact_cut(t);
  }
  return detail::heuristic_cut(t, effort, seed);
}

// ---------------------------------------------------------------------------
// Cleaning an almost-directed cut into a good partition

struct CleanResult {
  Partition partition;
  GoodnessReport report;  // at tolerance eps^(1/3)
  double delta = 0.0;     // eps^(1/2)
  VertexSubset a_minus;   // v ∈ A0 with |N-(v) ∩ A0| <= (1/4 - δ) n
  VertexSubset a_plus;    // v ∈ A0 with |N+(v) ∩ A0| <= n / 5
  VertexSubset b_plus;    // v ∈ B0 with |N+(v) ∩ B0| <= (1/4 - δ) n
  VertexSubset b_minus;   // v ∈ B0 with |N-(v) ∩ B0| <= n / 5
};

inline constexpr double kMaxCleanEps = 0.01;

/// Removes low in/out-degree vertices from both sides of a balanced cut
/// (A0, B0) and reports goodness of the result at tolerance eps^(1/3). The
/// goodness guarantee needs e(A0,B0) >= (1-eps)|A0||B0| and δ0(T) >=
/// floor((n+2)/4); when those fail the report says so.
inline CleanResult clean_to_good_partition(const Tournament& t, const VertexSubset& a0,
                                           const VertexSubset& b0, double eps) {
  const std::size_t n = t.size();
  if (!(eps > 0.0 && eps <= kMaxCleanEps))
    throw BadParams("cleaning needs 0 < eps <= 0.01, got " + std::to_string(eps));
  const Partition cut{a0, b0, VertexSubset(n, {})};
  check_partition(cut, n);
  if (a0.size() > b0.size() + 1 || b0.size() > a0.size() + 1)
    throw BadParams("cut (A0, B0) is not balanced");

  const double delta = std::sqrt(eps);
  const double low_in = (0.25 - delta) * static_cast<double>(n);
  const VertexMask a_mask = a0.mask();
  const VertexMask b_mask = b0.mask();

  std::vector<Vertex> a_minus, a_plus, b_plus, b_minus, a_keep, b_keep, removed;
  for (Vertex v : a0.members()) {
    const bool minus = static_cast<double>(t.in_degree_within(v, a_mask)) <= low_in;
    const bool plus = 5 * t.out_degree_within(v, a_mask) <= n;
    if (minus) a_minus.push_back(v);
    if (plus) a_plus.push_back(v);
    (minus || plus ? removed : a_keep).push_back(v);
  }
  for (Vertex v : b0.members()) {
    const bool plus = static_cast<double>(t.out_degree_within(v, b_mask)) <= low_in;
    const bool minus = 5 * t.in_degree_within(v, b_mask) <= n;
    if (plus) b_plus.push_back(v);
    if (minus) b_minus.push_back(v);
    (minus || plus ? removed : b_keep).push_back(v);
  }
  std::sort(removed.begin(), removed.end());

  CleanResult r;
  r.partition = make_partition(n, std::move(a_keep), std::move(b_keep), std::move(removed));
  r.report = goodness(t, r.partition, std::cbrt(eps));
  r.delta = delta;
  r.a_minus = VertexSubset(n, std::move(a_minus));
  r.a_plus = VertexSubset(n, std::move(a_plus));
  r.b_plus = VertexSubset(n, std::move(b_plus));
  r.b_minus = VertexSubset(n, std::move(b_minus));
  return r;
}

// ---------------------------------------------------------------------------
// Connectors, refinement, matching

/// v is a k-connector if |N+(v) ∩ A| >= k and |N-(v) ∩ B| >= k.
inline VertexSubset k_connectors(const Tournament& t, const Partition& p, std::size_t k) {
  check_partition(p, t.size());
  const VertexMask a = p.A.mask();
  const VertexMask b = p.B.mask();
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.size(); ++v)
    if (t.out_degree_within(v, a) >= k && t.in_degree_within(v, b) >= k) out.push_back(v);
  return VertexSubset(t.size(), std::move(out));
}

struct RefineResult {
  Partition partition;
  // Set when more than t vertices qualify on one side; the partition is then
  // returned unchanged, since t+1 of those vertices are already k-connectors.
  bool connector_shortcut = false;
  std::vector<Vertex> qualifying_b;  // b ∈ B with |N+(b) ∩ A| >= k+t
  std::vector<Vertex> qualifying_a;  // a ∈ A with |N-(a) ∩ B| >= k+t
};

inline RefineResult refine_partition(const Tournament& t, const Partition& p, std::size_t k,
                                     std::size_t slack) {
  check_partition(p, t.size());
  const std::size_t threshold = k + slack;
  const VertexMask a = p.A.mask();
  const VertexMask b = p.B.mask();
  RefineResult r;
  for (Vertex v : p.B.members())
    if (t.out_degree_within(v, a) >= threshold) r.qualifying_b.push_back(v);
  for (Vertex v : p.A.members())
    if (t.in_degree_within(v, b) >= threshold) r.qualifying_a.push_back(v);

  if (r.qualifying_a.size() > slack || r.qualifying_b.size() > slack) {
    r.connector_shortcut = true;
    r.partition = p;
    return r;
  }
  VertexMask moved(t.size());
  for (Vertex v : r.qualifying_a) moved.set(v);
  for (Vertex v : r.qualifying_b) moved.set(v);
  auto keep = [&](const VertexSubset& s) {
    std::vector<Vertex> out;
    for (Vertex v : s.members())
      if (!moved.test(v)) out.push_back(v);
    return out;
  };
  std::vector<Vertex> x = p.X.members();
  moved.for_each([&](Vertex v) { x.push_back(v); });
  std::sort(x.begin(), x.end());
  r.partition = make_partition(t.size(), keep(p.A), keep(p.B), std::move(x));
  return r;
}

struct MatchingCover {
  std::vector<std::pair<Vertex, Vertex>> matching;  // (b, a) with b -> a
  VertexSubset cover;
};

/// Maximum matching of B -> A edges (Hopcroft-Karp) and a minimum vertex
/// cover read off the alternating-reachability set Z from unmatched B
/// vertices: cover = (B \ Z) ∪ (A ∩ Z).
inline MatchingCover max_BA_matching(const Tournament& t, const Partition& p) {
  check_partition(p, t.size());
  const std::vector<Vertex>& left = p.B.members();
  const std::vector<Vertex>& right = p.A.members();
  const std::size_t nl = left.size(), nr = right.size();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::vector<std::vector<std::size_t>> adj(nl);
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nr; ++j)
      if (t.beats(left[i], right[j])) adj[i].push_back(j);

  std::vector<std::size_t> match_l(nl, kNone), match_r(nr, kNone), dist(nl);
  auto bfs = [&] {
    std::vector<std::size_t> queue;
    bool found = false;
    for (std::size_t i = 0; i < nl; ++i) {
      if (match_l[i] == kNone) {
        dist[i] = 0;
        queue.push_back(i);
      } else {
        dist[i] = kNone;
      }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (std::size_t j : adj[u]) {
        const std::size_t w = match_r[j];
        if (w == kNone) {
          found = true;
        } else if (dist[w] == kNone) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  };
  auto dfs = [&](auto&& self, std::size_t u) -> bool {
    for (std::size_t j : adj[u]) {
      const std::size_t w = match_r[j];
      if (w == kNone || (dist[w] == dist[u] + 1 && self(self, w))) {
        match_l[u] = j;
        match_r[j] = u;
        return true;
      }
    }
    dist[u] = kNone;
    return false;
  };
  while (bfs())
    for (std::size_t i = 0; i < nl; ++i)
      if (match_l[i] == kNone) dfs(dfs, i);

  // König: alternating reachability from unmatched left vertices.
  std::vector<bool> z_left(nl, false), z_right(nr, false);
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < nl; ++i)
    if (match_l[i] == kNone) {
      z_left[i] = true;
      stack.push_back(i);
    }
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t j : adj[u]) {
      if (z_right[j] || match_l[u] == j) continue;
      z_right[j] = true;
      const std::size_t w = match_r[j];
      if (w != kNone && !z_left[w]) {
        z_left[w] = true;
        stack.push_back(w);
      }
    }
  }

  MatchingCover mc;
  std::vector<Vertex> cover;
  for (std::size_t i = 0; i < nl; ++i) {
    if (match_l[i] != kNone) mc.matching.emplace_back(left[i], right[match_l[i]]);
    if (!z_left[i]) cover.push_back(left[i]);
  }
  for (std::size_t j = 0; j < nr; ++j)
    if (z_right[j]) cover.push_back(right[j]);
  std::sort(cover.begin(), cover.end());
  mc.cover = VertexSubset(t.size(), std::move(cover));
  return mc;
}

// ---------------------------------------------------------------------------
// Bad events for a sampled set S

struct BadEventFlags {
  bool b1 = false;  // |S ∩ X| >= |S| / 5
  bool b2 = false;  // low semidegree in T[A∩S], T[B∩S] or T[S]
  bool b3 = false;  // no path A∩S -> B∩S inside T[S]
  bool b4 = false;  // no path B∩S -> A∩S inside T[S]

  bool any() const { return b1 || b2 || b3 || b4; }
  friend bool operator==(const BadEventFlags&, const BadEventFlags&) = default;
};

struct PartitionMasks {
  VertexMask a, b, x;
  explicit PartitionMasks(const Partition& p) : a(p.A.mask()), b(p.B.mask()), x(p.X.mask()) {}
};

/// Evaluates the events on the sample mask `s`; empty optional when S misses
/// A or B (events undefined).
inline std::optional<BadEventFlags> bad_events_on(const Tournament& t, const PartitionMasks& p,
                                                  const VertexMask& s) {
  const VertexMask as = p.a & s;
  const VertexMask bs = p.b & s;
  if (as.none() || bs.none()) return std::nullopt;
  const std::size_t size_s = s.count();
  const std::size_t size_a = as.count();
  const std::size_t size_b = bs.count();
  BadEventFlags f;
  f.b1 = 5 * (p.x & s).count() >= size_s;
  f.b2 = 10 * min_semidegree_within(t, as) < 3 * size_a ||
         10 * min_semidegree_within(t, bs) < 3 * size_b ||
         5 * min_semidegree_within(t, s) < size_s;
  f.b3 = (reach_within(t, s, as, true) & bs).none();
  f.b4 = (reach_within(t, s, bs, true) & as).none();
  return f;
}

inline BadEventFlags bad_events(const Tournament& t, const Partition& p, const VertexSubset& s) {
  check_partition(p, t.size());
  if (s.universe_n() != t.size()) throw BadParams("sample universe does not match tournament");
  const VertexMask sm = s.mask();
  if ((p.A.mask() & sm).none()) throw EmptyPart("A");
  if ((p.B.mask() & sm).none()) throw EmptyPart("B");
  return *bad_events_on(t, PartitionMasks(p), sm);
}

struct ImplicationCheck {
  std::optional<BadEventFlags> flags;  // empty when S misses A or B
  bool hamiltonian = false;

  bool all_clear() const { return flags && !flags->any(); }
  // The implication "no bad event => T[S] Hamiltonian".
  bool holds() const { return !all_clear() || hamiltonian; }
};

/// Consistency check of "no bad event implies Hamiltonian" on one sample.
inline ImplicationCheck hamiltonicity_from_no_bad_events(const Tournament& t, const Partition& p,
                                                   const VertexSubset& s) {
  check_partition(p, t.size());
  const VertexMask sm = s.mask();
  ImplicationCheck c;
  c.flags = bad_events_on(t, PartitionMasks(p), sm);
  c.hamiltonian = is_hamiltonian_within(t, sm);
  return c;
}

// ---------------------------------------------------------------------------
// Degree statistics

/// |{v : d-(v) <= beta * n}|.
inline std::size_t low_indegree_census(const Tournament& t, double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw BadParams("beta must lie in (0,1)");
  const double limit = beta * static_cast<double>(t.size());
  std::size_t count = 0;
  for (Vertex v = 0; v < t.size(); ++v)
    if (static_cast<double>(t.in_degree(v)) <= limit) ++count;
  return count;
}

/// Default connector threshold k = ceil(2 log_{1/(1-p^2)}((t+1)/sigma)).
inline std::size_t default_connector_k(double p, std::size_t t, double sigma) {
  if (!(p > 0.0 && p < 1.0)) throw BadParams("p must lie in (0,1)");
  if (!(sigma > 0.0 && sigma < 1.0)) throw BadParams("sigma must lie in (0,1)");
  const double k = 2.0 * std::log((static_cast<double>(t) + 1.0) / sigma) /
                   std::log(1.0 / (1.0 - p * p));
  return static_cast<std::size_t>(std::ceil(k));
}

}  // namespace tourneylab
