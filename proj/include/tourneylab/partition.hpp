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

#include <cstddef>
#include <utility>
#include <vector>

#include "tourneylab/bits.hpp"
#include "tourneylab/error.hpp"
#include "tourneylab/tournament.hpp"

namespace tourneylab {

/// Disjoint cover V(T) = A ∪ B ∪ X.
struct Partition {
  VertexSubset A;
  VertexSubset B;
  VertexSubset X;

  std::size_t universe_n() const { return A.universe_n(); }

  friend bool operator==(const Partition&, const Partition&) = default;
};

inline void check_partition(const Partition& p, std::size_t n) {
  if (p.A.universe_n() != n || p.B.universe_n() != n || p.X.universe_n() != n)
    throw BadParams("partition universe does not match tournament size");
  VertexMask seen(n);
  for (const VertexSubset* part : {&p.A, &p.B, &p.X})
    for (Vertex v : part->members()) {
      if (seen.test(v))
        throw BadParams("vertex " + std::to_string(v) + " in two parts");
      seen.set(v);
    }
  if (seen.count() != n) throw BadParams("partition does not cover every vertex");
}

inline Partition make_partition(std::size_t n, std::vector<Vertex> a,
                                std::vector<Vertex> b, std::vector<Vertex> x) {
  Partition p{VertexSubset(n, std::move(a)), VertexSubset(n, std::move(b)),
              VertexSubset(n, std::move(x))};
  check_partition(p, n);
  return p;
}

// X = everything not in A or B.
inline Partition partition_with_rest(std::size_t n, std::vector<Vertex> a,
                                     std::vector<Vertex> b) {
  VertexMask rest = VertexMask::full(n);
  for (Vertex v : a) rest.reset(v);
  for (Vertex v : b) rest.reset(v);
  return make_partition(n, std::move(a), std::move(b), rest.to_vector());
}

}  // namespace tourneylab
