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

// Test-only reference implementations. Everything here works from plain
// adjacency lookups (Tournament::beats) and simple loops so that it stays
// independent of the bitset kernels it is compared against.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <vector>

#include "tourneylab.hpp"

namespace tourneylab::oracle {

using Matrix = std::vector<std::vector<int>>;

inline Matrix to_matrix(const Tournament& t) {
  const std::size_t n = t.size();
  Matrix m(n, std::vector<int>(n, 0));
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j) m[i][j] = t.beats(i, j) ? 1 : 0;
  return m;
}

// The code-th labelled tournament on n vertices: bit e of `code` orients the
// e-th pair (i < j, row-major) as i -> j when set.
inline Tournament tournament_from_code(std::size_t n, std::uint64_t code) {
  Matrix m(n, std::vector<int>(n, 0));
  std::size_t e = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++e) {
      if ((code >> e) & 1u)
        m[i][j] = 1;
      else
        m[j][i] = 1;
    }
  return validate(m);
}

// reach[u][v]: v reachable from u (BFS over the matrix, restricted to `in`).
inline std::vector<std::vector<bool>> reachability(const Matrix& m, const std::vector<bool>& in) {
  const std::size_t n = m.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    if (!in[s]) continue;
    std::deque<std::size_t> q{s};
    reach[s][s] = true;
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop_front();
      for (std::size_t v = 0; v < n; ++v)
        if (in[v] && m[u][v] && !reach[s][v]) {
          reach[s][v] = true;
          q.push_back(v);
        }
    }
  }
  return reach;
}

inline std::vector<std::vector<bool>> reachability(const Matrix& m) {
  return reachability(m, std::vector<bool>(m.size(), true));
}

inline bool strongly_connected(const Matrix& m, const std::vector<bool>& in) {
  const auto r = reachability(m, in);
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = 0; v < m.size(); ++v)
      if (in[u] && in[v] && !r[u][v]) return false;
  return true;
}

// Exhaustive maximum matching size over edges b -> a (b in B, a in A).
inline std::size_t brute_force_matching(const Tournament& t, const std::vector<Vertex>& b,
                                        const std::vector<Vertex>& a) {
  std::vector<bool> used(a.size(), false);
  std::function<std::size_t(std::size_t)> best = [&](std::size_t i) -> std::size_t {
    if (i == b.size()) return 0;
    std::size_t result = best(i + 1);
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!used[j] && t.beats(b[i], a[j])) {
        used[j] = true;
        result = std::max(result, 1 + best(i + 1));
        used[j] = false;
      }
    return result;
  };
  return best(0);
}

inline double binomial_pmf(std::size_t n, std::size_t k, double p) {
  return std::exp(std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
                  std::lgamma(static_cast<double>(n - k) + 1) + static_cast<double>(k) * std::log(p) +
                  static_cast<double>(n - k) * std::log1p(-p));
}

}  // namespace tourneylab::oracle
