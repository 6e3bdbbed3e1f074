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


#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "tourneylab.hpp"

namespace tourneylab {
namespace {

std::size_t edges_b_to_a(const Tournament& t, const Partition& p) {
  std::size_t e = 0;
  for (Vertex b : p.B.members())
    for (Vertex a : p.A.members()) e += t.beats(b, a);
  return e;
}

TEST(RotationalTest, Examples) {
  const Tournament t1 = rotational_tournament(1);
  EXPECT_TRUE(t1.beats(0, 1) && t1.beats(1, 2) && t1.beats(2, 0));
  const SemidegreeProfile p = semidegrees(rotational_tournament(3));
  for (std::size_t v = 0; v < 7; ++v) EXPECT_EQ(p.out_degrees[v], 3u);
  const Tournament t5 = rotational_tournament(5);
  EXPECT_TRUE(is_hamiltonian(t5));
  EXPECT_EQ(scc(t5).component_count, 1u);
  EXPECT_THROW(rotational_tournament(0), BadParams);
}

TEST(RotationalTest, CyclicShiftIsAutomorphism) {
  for (std::size_t k : {1u, 2u, 6u, 40u}) {
    const Tournament t = rotational_tournament(k);
    const std::size_t n = t.size();
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j)
        ASSERT_EQ(t.beats(i, j), t.beats((i + 1) % n, (j + 1) % n));
  }
}

TEST(NearRegularTest, Examples) {
  EXPECT_EQ(semidegrees(near_regular_tournament(7)).min_semidegree, 3u);
  EXPECT_EQ(semidegrees(near_regular_tournament(8)).min_semidegree, 3u);
  const Tournament t2 = near_regular_tournament(2);
  EXPECT_EQ(t2.size(), 2u);
  EXPECT_EQ(semidegrees(t2).min_semidegree, 0u);
  for (std::size_t m = 1; m <= 60; ++m)
    EXPECT_EQ(semidegrees(near_regular_tournament(m)).min_semidegree, (m - 1) / 2) << m;
}

TEST(TransitiveTest, Examples) {
  EXPECT_FALSE(is_hamiltonian(transitive_tournament(3)));
  EXPECT_EQ(semidegrees(transitive_tournament(5)).min_semidegree, 0u);
  EXPECT_EQ(scc(transitive_tournament(4)).component_count, 4u);
  const Tournament t = transitive_tournament(6);
  for (Vertex i = 0; i < 6; ++i)
    for (Vertex j = 0; j < 6; ++j) EXPECT_EQ(t.beats(i, j), i < j);
}

TEST(RandomTest, DeterministicAndComplete) {
  EXPECT_EQ(random_tournament(50, 9), random_tournament(50, 9));
  EXPECT_NE(random_tournament(50, 9), random_tournament(50, 10));
  const Tournament big = random_tournament(1000, 4);
  std::size_t edges = 0;
  for (Vertex v = 0; v < 1000; ++v) edges += big.out_degree(v);
  EXPECT_EQ(edges, 1000u * 999u / 2u);
}

TEST(RandomTest, MatchesOracleOnSmallInstances) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Tournament t = random_tournament(15, seed);
    EXPECT_EQ(is_hamiltonian(t), brute_force_hamiltonian(t));
  }
}

TEST(SplitHalvesTest, Examples) {
  const Tournament t1 = extremal_theorem1_even(1);
  EXPECT_EQ(t1.size(), 6u);
  EXPECT_FALSE(is_hamiltonian(t1));
  EXPECT_EQ(scc(t1).component_count, 2u);
  EXPECT_EQ(semidegrees(extremal_theorem1_even(2)).min_semidegree, 2u);
  for (std::size_t k : {1u, 3u, 8u})
    EXPECT_EQ(edges_b_to_a(extremal_theorem1_even(k), theorem1_even_partition(k)), 0u);
}

TEST(ApexFamilyTest, Examples) {
  const Tournament t = extremal_theorem1_odd(1);
  EXPECT_EQ(t.size(), 7u);
  EXPECT_TRUE(is_hamiltonian(t));
  const Subtournament without_v = induced(t, VertexSubset(7, {0, 1, 2, 3, 4, 5}));
  EXPECT_FALSE(is_hamiltonian(without_v.tournament));
  EXPECT_EQ(semidegrees(extremal_theorem1_odd(3)).min_semidegree, 4u);
}

TEST(ApexFamilyTest, HamiltonianIffApexSampled) {
  const std::size_t k = 3;
  const Tournament t = extremal_theorem1_odd(k);
  const std::size_t h = 2 * k + 1, n = t.size();
  std::mt19937_64 rng(43);
  int checked = 0;
  while (checked < 300) {
    VertexMask m(n);
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 2) m.set(v);
    bool hits_a = false, hits_b = false;
    for (Vertex v = 0; v < h; ++v) hits_a |= m.test(v);
    for (Vertex v = h; v < 2 * h; ++v) hits_b |= m.test(v);
    if (!hits_a || !hits_b) continue;
    ++checked;
    EXPECT_EQ(is_hamiltonian_within(t, m), m.test(static_cast<Vertex>(2 * h)));
  }
}

TEST(ExtremalMainTest, Sizes) {
  const ExtremalMainSizes s = extremal_main_sizes(43, 2);
  EXPECT_EQ(s.a, 20u);
  EXPECT_EQ(s.b, 21u);
  EXPECT_EQ(s.x, 2u);
  EXPECT_THROW(extremal_main_sizes(7, 2), BadParams);
  EXPECT_THROW(extremal_main_sizes(20, 0), BadParams);
}

TEST(ExtremalMainTest, Examples) {
  const Tournament t = extremal_main(11, 1);
  EXPECT_TRUE(is_hamiltonian(t));
  std::vector<Vertex> no_x;
  for (Vertex v = 0; v < 10; ++v) no_x.push_back(v);
  EXPECT_EQ(scc(induced(t, VertexSubset(11, no_x)).tournament).component_count, 2u);
  EXPECT_EQ(semidegrees(extremal_main(43, 2)).min_semidegree, 11u);
  for (auto [n, x] : {std::pair{11u, 1u}, {43u, 2u}, {60u, 5u}})
    EXPECT_EQ(edges_b_to_a(extremal_main(n, x), extremal_main_partition(n, x)), 0u);
}

// The bound needs X small next to A and B; otherwise the source of X, with
// in-degree |B|, falls below it.
TEST(ExtremalMainTest, SemidegreeLowerBound) {
  for (std::size_t n = 7; n <= 90; ++n)
    for (std::size_t t = 1; 5 * t <= n; ++t)
      ASSERT_GE(semidegrees(extremal_main(n, t)).min_semidegree, (n - t - 2) / 4 + t)
          << n << "," << t;
}

TEST(ExtremalMainTest, HamiltonianNeedsX) {
  const std::size_t n = 40, t = 3;
  const Tournament tt = extremal_main(n, t);
  const Partition p = extremal_main_partition(n, t);
  std::mt19937_64 rng(47);
  int checked = 0;
  while (checked < 100) {
    VertexMask m(n);
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 2) m.set(v);
    if ((m & p.A.mask()).none() || (m & p.B.mask()).none()) continue;
    ++checked;
    if (is_hamiltonian_within(tt, m)) {
      EXPECT_TRUE((m & p.X.mask()).any());
    }
  }
}

TEST(ExtremalMainTest, NaturalCutIsBalanced) {
  const auto [a0, b0] = extremal_main_natural_cut(203, 2);
  EXPECT_EQ(a0.size(), 101u);
  EXPECT_EQ(b0.size(), 102u);
  EXPECT_TRUE(a0.contains(201));
  EXPECT_TRUE(b0.contains(202));
}

TEST(GeneratorsTest, OutputsValidate) {
  std::vector<Tournament> all{rotational_tournament(4), near_regular_tournament(10),
                              transitive_tournament(9), random_tournament(30, 1),
                              extremal_theorem1_even(3), extremal_theorem1_odd(3),
                              extremal_main(30, 4)};
  for (const Tournament& t : all) EXPECT_EQ(validate(oracle::to_matrix(t)), t);
  ExtremalSpec spec;
  spec.family = ExtremalFamily::kTheorem1Odd;
  spec.k = 2;
  EXPECT_EQ(make_extremal(spec), extremal_theorem1_odd(2));
}

}  // namespace
}  // namespace tourneylab
