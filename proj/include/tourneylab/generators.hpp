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

// Deterministic tournament families: circulant regular tournaments, the
// near-regular even-order variant, transitive and uniformly random
// tournaments, and the three block constructions whose random
// subtournaments are Hamiltonian only when a connecting vertex is sampled.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tourneylab/error.hpp"
#include "tourneylab/partition.hpp"
#include "tourneylab/tournament.hpp"

namespace tourneylab {

namespace detail {

// Circulant orientation on `count` consecutive labels starting at `offset`:
// i -> j iff (j - i) mod count lies in 1..count/2. count must be odd.
inline void orient_rotational(TournamentBuilder& b, Vertex offset, std::size_t count) {
  const std::size_t half = count / 2;
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t d = 1; d <= half; ++d)
      b.orient(offset + static_cast<Vertex>(i),
               offset + static_cast<Vertex>((i + d) % count));
}

inline void orient_near_regular(TournamentBuilder& b, Vertex offset, std::size_t m) {
  if (m % 2 == 1) {
    orient_rotational(b, offset, m);
    return;
  }
  orient_rotational(b, offset, m - 1);
  const Vertex apex = offset + static_cast<Vertex>(m - 1);
  const std::size_t beaten = m / 2;  // ceil((m-1)/2)
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const Vertex u = offset + static_cast<Vertex>(i);
    if (i < beaten)
      b.orient(apex, u);
    else
      b.orient(u, apex);
  }
}

inline void orient_transitive(TournamentBuilder& b, Vertex offset, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      b.orient(offset + static_cast<Vertex>(i), offset + static_cast<Vertex>(j));
}

// Every pair (u in [a0, a0+na), v in [b0, b0+nb)) oriented u -> v.
inline void orient_block(TournamentBuilder& b, Vertex a0, std::size_t na, Vertex b0,
                         std::size_t nb) {
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      b.orient(a0 + static_cast<Vertex>(i), b0 + static_cast<Vertex>(j));
}

inline std::vector<Vertex> label_range(std::size_t first, std::size_t count) {
  std::vector<Vertex> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = static_cast<Vertex>(first + i);
  return v;
}

}  // namespace detail

/// Circulant k-regular tournament on 2k+1 vertices.
inline Tournament rotational_tournament(std::size_t k) {
  if (k < 1) throw BadParams("rotational tournament needs k >= 1");
  TournamentBuilder b(2 * k + 1);
  detail::orient_rotational(b, 0, 2 * k + 1);
  return b.build();
}

/// Tournament on m vertices with minimum semidegree floor((m-1)/2): the
/// rotational tournament for odd m; for even m the rotational tournament on
/// m-1 vertices plus an apex beating the first m/2 of them.
///
/// The seed is accepted for interface stability and currently unused.
inline Tournament near_regular_tournament(std::size_t m,
                                          std::uint64_t /*seed*/ = 0) {
  if (m < 1) throw BadParams("near-regular tournament needs m >= 1");
  TournamentBuilder b(m);
  detail::orient_near_regular(b, 0, m);
  return b.build();
}

inline Tournament transitive_tournament(std::size_t n) {
  if (n < 1) throw BadParams("transitive tournament needs n >= 1");
  TournamentBuilder b(n);
  detail::orient_transitive(b, 0, n);
  return b.build();
}

/// Each pair {i < j} oriented by the top bit of one mt19937_64 draw, pairs in
/// row-major order.
inline Tournament random_tournament(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw BadParams("random tournament needs n >= 1");
  std::mt19937_64 rng(seed);
  TournamentBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto u = static_cast<Vertex>(i);
      const auto v = static_cast<Vertex>(j);
      if (rng() >> 63)
        b.orient(u, v);
      else
        b.orient(v, u);
    }
  return b.build();
}

/// A = 0..2k, B = 2k+1..4k+1; rotational halves, every A-B edge A -> B.
inline Tournament extremal_theorem1_even(std::size_t k) {
  if (k < 1) throw BadParams("theorem1-even needs k >= 1");
  const std::size_t h = 2 * k + 1;
  TournamentBuilder b(2 * h);
  detail::orient_rotational(b, 0, h);
  detail::orient_rotational(b, static_cast<Vertex>(h), h);
  detail::orient_block(b, 0, h, static_cast<Vertex>(h), h);
  return b.build();
}

inline Partition theorem1_even_partition(std::size_t k) {
  const std::size_t h = 2 * k + 1;
  return make_partition(2 * h, detail::label_range(0, h), detail::label_range(h, h), {});
}

/// Same halves as the even family plus a vertex v = 4k+2 with B -> v -> A.
/// Minimum semidegree is k+1; checked on construction.
inline Tournament extremal_theorem1_odd(std::size_t k) {
  if (k < 1) throw BadParams("theorem1-odd needs k >= 1");
  const std::size_t h = 2 * k + 1;
  const auto v = static_cast<Vertex>(2 * h);
  TournamentBuilder b(2 * h + 1);
  detail::orient_rotational(b, 0, h);
  detail::orient_rotational(b, static_cast<Vertex>(h), h);
  detail::orient_block(b, 0, h, static_cast<Vertex>(h), h);
  detail::orient_block(b, static_cast<Vertex>(h), h, v, 1);
  detail::orient_block(b, v, 1, 0, h);
  Tournament t = b.build();
  if (semidegrees(t).min_semidegree != k + 1)
    throw std::logic_error("theorem1-odd construction lost its semidegree k+1");
  return t;
}

inline Partition theorem1_odd_partition(std::size_t k) {
  const std::size_t h = 2 * k + 1;
  return make_partition(2 * h + 1, detail::label_range(0, h), detail::label_range(h, h),
                        {static_cast<Vertex>(2 * h)});
}

struct ExtremalMainSizes {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t x = 0;
};

inline ExtremalMainSizes extremal_main_sizes(std::size_t n, std::size_t t) {
  if (t < 1 || n < t + 6)
    throw BadParams("main family needs t >= 1 and n - t >= 6 (n=" + std::to_string(n) +
                    ", t=" + std::to_string(t) + ")");
  return {(n - t) / 2, (n - t + 1) / 2, t};
}

/// Blocks A = 0..|A|-1, B = next |B| labels, X = last t labels, with
/// A -> B -> X -> A. Near-regular tournaments inside A and B, transitive
/// inside X (the seed is reserved for randomising X and currently unused).
inline Tournament extremal_main(std::size_t n, std::size_t t, std::uint64_t /*seed*/ = 0) {
  const ExtremalMainSizes s = extremal_main_sizes(n, t);
  const auto a0 = Vertex{0};
  const auto b0 = static_cast<Vertex>(s.a);
  const auto x0 = static_cast<Vertex>(s.a + s.b);
  TournamentBuilder b(n);
  detail::orient_near_regular(b, a0, s.a);
  detail::orient_near_regular(b, b0, s.b);
  detail::orient_transitive(b, x0, s.x);
  detail::orient_block(b, a0, s.a, b0, s.b);
  detail::orient_block(b, b0, s.b, x0, s.x);
  detail::orient_block(b, x0, s.x, a0, s.a);
  return b.build();
}

inline Partition extremal_main_partition(std::size_t n, std::size_t t) {
  const ExtremalMainSizes s = extremal_main_sizes(n, t);
  return make_partition(n, detail::label_range(0, s.a), detail::label_range(s.a, s.b),
                        detail::label_range(s.a + s.b, s.x));
}

/// Balanced bipartition of the main family: A topped up with the first
/// floor(n/2) - |A| vertices of X, the remaining X vertices joining B.
inline std::pair<VertexSubset, VertexSubset> extremal_main_natural_cut(std::size_t n,
                                                                       std::size_t t) {
  const ExtremalMainSizes s = extremal_main_sizes(n, t);
  const std::size_t top_up = n / 2 - s.a;
  std::vector<Vertex> a0 = detail::label_range(0, s.a);
  std::vector<Vertex> b0 = detail::label_range(s.a, s.b);
  for (std::size_t i = 0; i < s.x; ++i) {
    const auto v = static_cast<Vertex>(s.a + s.b + i);
    (i < top_up ? a0 : b0).push_back(v);
  }
  return {VertexSubset(n, std::move(a0)), VertexSubset(n, std::move(b0))};
}

enum class ExtremalFamily { kTheorem1Even, kTheorem1Odd, kMainTightness };

struct ExtremalSpec {
  ExtremalFamily family = ExtremalFamily::kMainTightness;
  std::size_t k = 0;  // theorem1 families
  std::size_t n = 0;  // main family
  std::size_t t = 0;  // main family
  std::optional<std::uint64_t> seed;
};

inline Tournament make_extremal(const ExtremalSpec& spec) {
  switch (spec.family) {
    case ExtremalFamily::kTheorem1Even:
      return extremal_theorem1_even(spec.k);
    case ExtremalFamily::kTheorem1Odd:
      return extremal_theorem1_odd(spec.k);
    case ExtremalFamily::kMainTightness:
      return extremal_main(spec.n, spec.t, spec.seed.value_or(0));
  }
  throw BadParams("unknown extremal family");
}

}  // namespace tourneylab
