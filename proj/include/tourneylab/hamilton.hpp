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
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "tourneylab/bits.hpp"
#include "tourneylab/error.hpp"
#include "tourneylab/tournament.hpp"

namespace tourneylab {

// Vertices of `within` reachable from `sources` by directed paths that stay
// inside `within`. Backward search follows in-edges. Iterative frontier
// expansion, O(|within| * n / 64).
inline VertexMask reach_within(const Tournament& t, const VertexMask& within,
                               const VertexMask& sources, bool forward = true) {
  const std::size_t w = t.words_per_row();
  VertexMask reached = sources & within;
  std::vector<Vertex> frontier = reached.to_vector();
  std::vector<Word> fresh(w);
  auto reached_words = reached.words();
  const auto within_words = within.words();
  while (!frontier.empty()) {
    const Vertex v = frontier.back();
    frontier.pop_back();
    const auto row = t.out_row(v);
    for (std::size_t i = 0; i < w; ++i) {
      // In-neighbours of v are the complement of its out-row (minus v itself,
      // which is already reached).
      const Word nbr = forward ? row[i] : ~row[i];
      fresh[i] = nbr & within_words[i] & ~reached_words[i];
      reached_words[i] |= fresh[i];
    }
    bits::for_each(fresh, [&](Vertex u) { frontier.push_back(u); });
  }
  return reached;
}

inline bool is_strongly_connected_within(const Tournament& t,
                                         const VertexMask& within) {
  const std::size_t first = within.first();
  if (first == within.universe()) return false;
  VertexMask src(within.universe());
  src.set(first);
  return reach_within(t, within, src, true) == within &&
         reach_within(t, within, src, false) == within;
}

/// Hamiltonicity of T[within]; fewer than three vertices never qualify.
inline bool is_hamiltonian_within(const Tournament& t, const VertexMask& within) {
  return within.count() >= 3 && is_strongly_connected_within(t, within);
}

struct SccDecomposition {
  std::vector<std::size_t> component_of;
  std::size_t component_count = 0;
  // components[i] lists the vertices of component i; ids follow the
  // condensation order, so every cross edge goes from a lower id to a higher.
  std::vector<std::vector<Vertex>> components;
};

/// Strongly connected components by repeated forward/backward bitset
/// reachability (no recursion). The condensation of a tournament is
/// transitive, which fixes the order of the components uniquely.
inline SccDecomposition scc(const Tournament& t) {
  const std::size_t n = t.size();
  VertexMask remaining = VertexMask::full(n);
  std::vector<VertexMask> found;
  while (remaining.any()) {
    VertexMask src(n);
    src.set(remaining.first());
    VertexMask comp = reach_within(t, remaining, src, true);
    comp &= reach_within(t, remaining, src, false);
    remaining.subtract(comp);
    found.push_back(std::move(comp));
  }
  std::vector<Vertex> rep(found.size());
  for (std::size_t i = 0; i < found.size(); ++i)
    rep[i] = static_cast<Vertex>(found[i].first());
  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return t.beats(rep[a], rep[b]);
  });

  SccDecomposition d;
  d.component_count = found.size();
  d.component_of.assign(n, 0);
  d.components.reserve(found.size());
  for (std::size_t id = 0; id < order.size(); ++id) {
    d.components.push_back(found[order[id]].to_vector());
    for (Vertex v : d.components.back()) d.component_of[v] = id;
  }
  return d;
}

inline bool is_hamiltonian(const Tournament& t) {
  return t.size() >= 3 && is_strongly_connected_within(t, VertexMask::full(t.size()));
}

struct HamiltonCertificate {
  std::vector<Vertex> order;
  friend bool operator==(const HamiltonCertificate&,
                         const HamiltonCertificate&) = default;
};

/// Throws InvalidCertificate at the first failing position: a bad entry at
/// index i, or a missing edge order[i] -> order[i+1 mod n].
inline void check_certificate(const Tournament& t, const HamiltonCertificate& c) {
  const std::size_t n = t.size();
  if (n < 3) throw InvalidCertificate(0, "tournament has fewer than 3 vertices");
  if (c.order.size() != n)
    throw InvalidCertificate(std::min(c.order.size(), n),
                             "expected " + std::to_string(n) + " vertices, got " +
                                 std::to_string(c.order.size()));
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = c.order[i];
    if (v >= n) throw InvalidCertificate(i, "vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw InvalidCertificate(i, "vertex " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex a = c.order[i];
    const Vertex b = c.order[(i + 1) % n];
    if (!t.beats(a, b))
      throw InvalidCertificate(i, "edge " + std::to_string(a) + "->" +
                                      std::to_string(b) + " is reversed");
  }
}

inline bool is_valid_certificate(const Tournament& t, const HamiltonCertificate& c) {
  try {
    check_certificate(t, c);
    return true;
  } catch (const InvalidCertificate&) {
    return false;
  }
}

// Hamilton path by binary insertion: each new vertex slots between a
// predecessor that beats it and a successor it beats.
inline std::vector<Vertex> hamilton_path(const Tournament& t) {
  std::vector<Vertex> path;
  path.reserve(t.size());
  for (Vertex v = 0; v < t.size(); ++v) {
    if (path.empty() || t.beats(v, path.front())) {
      path.insert(path.begin(), v);
    } else if (t.beats(path.back(), v)) {
      path.push_back(v);
    } else {
      std::size_t lo = 0, hi = path.size() - 1;  // path[lo] -> v -> path[hi]
      while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (t.beats(path[mid], v))
          lo = mid;
        else
          hi = mid;
      }
      path.insert(path.begin() + static_cast<std::ptrdiff_t>(hi), v);
    }
  }
  return path;
}

/// Explicit Hamilton cycle, present iff is_hamiltonian(t).
///
/// Starts from a Hamilton path p0..p(n-1), closes the longest prefix cycle
/// p0..pj (pj -> p0), then absorbs the remaining path vertices in order.
/// Vertices dominated by the whole cycle wait in a pending segment; the first
/// later vertex with an out-neighbour c on the cycle splices
/// pred(c) -> pending... -> x -> c. O(n^2).
inline std::optional<HamiltonCertificate> hamilton_cycle(const Tournament& t) {
  const std::size_t n = t.size();
  if (!is_hamiltonian(t)) return std::nullopt;

  const std::vector<Vertex> path = hamilton_path(t);
  std::size_t j = n - 1;
  while (!t.beats(path[j], path[0])) --j;

  std::vector<Vertex> next(n), prev(n);
  std::vector<Vertex> cycle_members(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  for (std::size_t i = 0; i <= j; ++i) {
    next[path[i]] = path[(i + 1) % (j + 1)];
    prev[path[(i + 1) % (j + 1)]] = path[i];
  }
  auto link = [&](Vertex a, Vertex b) {
    next[a] = b;
    prev[b] = a;
  };

  std::vector<Vertex> pending;
  for (std::size_t i = j + 1; i < n; ++i) {
    const Vertex x = path[i];
    bool absorbed = false;
    if (pending.empty()) {
      for (Vertex c : cycle_members) {
        if (t.beats(c, x) && t.beats(x, next[c])) {
          const Vertex after = next[c];
          link(c, x);
          link(x, after);
          absorbed = true;
          break;
        }
      }
    } else {
      for (Vertex c : cycle_members) {
        if (t.beats(x, c)) {
          const Vertex before = prev[c];
          link(before, pending.front());
          for (std::size_t q = 0; q + 1 < pending.size(); ++q)
            link(pending[q], pending[q + 1]);
          link(pending.back(), x);
          link(x, c);
          cycle_members.insert(cycle_members.end(), pending.begin(), pending.end());
          pending.clear();
          absorbed = true;
          break;
        }
      }
    }
    if (absorbed)
      cycle_members.push_back(x);
    else
      pending.push_back(x);
  }
  if (!pending.empty())
    throw std::logic_error("hamilton_cycle: strong tournament left pending vertices");

  HamiltonCertificate cert;
  cert.order.reserve(n);
  Vertex v = path[0];
  for (std::size_t k = 0; k < n; ++k) {
    cert.order.push_back(v);
    v = next[v];
  }
  return cert;
}

inline constexpr std::size_t kBruteForceLimit = 20;

/// Independent Held-Karp oracle: dp[S] is the set of endpoints e such that
/// some Hamilton path of T[S] runs from vertex 0 to e.
inline bool brute_force_hamiltonian(const Tournament& t) {
  const std::size_t n = t.size();
  if (n > kBruteForceLimit) throw TooLarge(n, kBruteForceLimit);
  if (n < 3) return false;
  std::vector<std::uint32_t> pred(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && t.beats(u, v)) pred[v] |= std::uint32_t{1} << u;

  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> dp(std::size_t{1} << n, 0);
  dp[1] = 1;
  for (std::uint32_t s = 1; s <= full; s += 2) {
    const std::uint32_t ends = dp[s];
    if (!ends) continue;
    for (std::uint32_t rest = full & ~s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (ends & pred[static_cast<std::size_t>(v)])
        dp[s | (std::uint32_t{1} << v)] |= std::uint32_t{1} << v;
    }
  }
  return (dp[full] & pred[0]) != 0;
}

inline std::string format_certificate(const HamiltonCertificate& c) {
  std::string out;
  for (std::size_t i = 0; i < c.order.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(c.order[i]);
  }
  return out;
}

/// Parses "v0,v1,...". A trailing newline is tolerated.
inline HamiltonCertificate parse_certificate(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  HamiltonCertificate c;
  if (text.empty()) throw ParseError(1, "empty certificate");
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view tok =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                            : comma - start);
    Vertex v = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size())
      throw ParseError(1, "bad vertex index '" + std::string(tok) + "'");
    c.order.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return c;
}

}  // namespace tourneylab
