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


#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "tourneylab.hpp"

namespace tourneylab {
namespace {

// Random tournament with a random three-way split of its vertices.
struct Instance {
  Tournament t;
  Partition p;
};

Instance random_instance(std::mt19937_64& rng, std::size_t n) {
  Tournament t = random_tournament(n, rng());
  std::vector<Vertex> a, b, x;
  for (Vertex v = 0; v < n; ++v) {
    const auto r = rng() % 5;
    (r < 2 ? a : r < 4 ? b : x).push_back(v);
  }
  return {std::move(t), make_partition(n, a, b, x)};
}

std::size_t naive_out_into(const Tournament& t, Vertex v, const VertexSubset& s) {
  std::size_t c = 0;
  for (Vertex u : s.members()) c += t.beats(v, u);
  return c;
}

std::size_t naive_in_from(const Tournament& t, Vertex v, const VertexSubset& s) {
  std::size_t c = 0;
  for (Vertex u : s.members()) c += t.beats(u, v);
  return c;
}

TEST(CutSearchTest, SplitHalvesGiveDensityOne) {
  for (std::size_t k : {1u, 2u, 4u}) {
    const CutResult c = balanced_cut_search(extremal_theorem1_even(k), 4);
    EXPECT_EQ(c.method, CutMethod::kExact);
    EXPECT_DOUBLE_EQ(c.density, 1.0);
    EXPECT_EQ(c.A, theorem1_even_partition(k).A);
  }
  const CutResult big = balanced_cut_search(extremal_theorem1_even(20), 4);
  EXPECT_DOUBLE_EQ(big.density, 1.0);
  EXPECT_EQ(big.A, theorem1_even_partition(20).A);
}

TEST(CutSearchTest, RegularTournamentHasNoAlmostDirectedCut) {
  const CutResult c = balanced_cut_search(rotational_tournament(7), 0, CutMode::kExact);
  EXPECT_LT(c.density, 0.9);
  EXPECT_THROW(balanced_cut_search(rotational_tournament(11), 0, CutMode::kExact), TooLarge);
}

TEST(CutSearchTest, HeuristicMatchesExactOnSmallInstances) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Tournament t = random_tournament(14, seed);
    const CutResult exact = balanced_cut_search(t, 0, CutMode::kExact);
    const CutResult heur = balanced_cut_search(t, 64, CutMode::kHeuristic, seed);
    EXPECT_DOUBLE_EQ(heur.density, exact.density) << seed;
  }
}

TEST(CutSearchTest, ReportedEdgeCountIsCorrect) {
  std::mt19937_64 rng(59);
  for (int iter = 0; iter < 20; ++iter) {
    const std::size_t n = 2 + rng() % 60;
    const Tournament t = random_tournament(n, rng());
    const CutResult c = balanced_cut_search(t, 3, CutMode::kAuto, rng());
    std::size_t e = 0;
    for (Vertex a : c.A.members()) e += naive_out_into(t, a, c.B);
    EXPECT_EQ(c.e_AB, e);
    EXPECT_LE(c.A.size() > c.B.size() ? c.A.size() - c.B.size() : c.B.size() - c.A.size(), 1u);
    EXPECT_EQ(c.A.size() + c.B.size(), n);
  }
}

TEST(CleanTest, MainFamilyNaturalCut) {
  const Tournament t = extremal_main(203, 3);
  const auto [a0, b0] = extremal_main_natural_cut(203, 3);
  const CleanResult r = clean_to_good_partition(t, a0, b0, 1e-3);
  EXPECT_TRUE(r.report.good());
  EXPECT_NEAR(r.report.eps, 0.1, 1e-12);
}

TEST(CleanTest, RegularHalvesLoseNothing) {
  const Tournament t = extremal_theorem1_even(25);
  const Partition halves = theorem1_even_partition(25);
  const CleanResult r = clean_to_good_partition(t, halves.A, halves.B, 0.01);
  EXPECT_TRUE(r.partition.X.empty());
  EXPECT_TRUE(r.a_minus.empty() && r.a_plus.empty() && r.b_plus.empty() && r.b_minus.empty());
  EXPECT_TRUE(r.report.size_ok);
  EXPECT_TRUE(r.report.semidegree_ok);
  EXPECT_TRUE(r.report.density_ok);
  EXPECT_DOUBLE_EQ(r.delta, 0.1);
}

TEST(CleanTest, RemovalBoundsUnderHypotheses) {
  // The odd family with A0 = A + v meets both hypotheses: δ0(T) = k+1 =
  // floor((n+2)/4) and e(A0,B0) = |A||B| >= (1-eps)|A0||B0| once eps >= 1/(|A|+1).
  for (std::size_t k : {60u, 200u, 500u}) {
    const Tournament t = extremal_theorem1_odd(k);
    const Partition p = theorem1_odd_partition(k);
    std::vector<Vertex> a = p.A.members();
    a.push_back(p.X[0]);
    const VertexSubset a0(t.size(), a);
    const std::size_t n = t.size();
    ASSERT_GE(semidegrees(t).min_semidegree, (n + 2) / 4);
    for (double eps : {1e-3, 3e-3, 1e-2}) {
      const double density = static_cast<double>(t.edges_between(a0.mask(), p.B.mask())) /
                             static_cast<double>(a0.size() * p.B.size());
      if (density < 1.0 - eps) continue;
      const CleanResult r = clean_to_good_partition(t, a0, p.B, eps);
      const double dn = r.delta * static_cast<double>(n);
      EXPECT_LE(static_cast<double>(r.a_minus.size()), dn / 4) << k << " " << eps;
      EXPECT_LE(static_cast<double>(r.a_plus.size()), 15 * dn) << k << " " << eps;
      EXPECT_TRUE(r.report.good()) << k << " " << eps;
    }
  }
}

TEST(CleanTest, SparseCutFailsHonestly) {
  const Tournament t = random_tournament(100, 5);
  std::vector<Vertex> a, b;
  for (Vertex v = 0; v < 100; ++v) (v < 50 ? a : b).push_back(v);
  const CleanResult r = clean_to_good_partition(t, VertexSubset(100, a), VertexSubset(100, b), 1e-3);
  EXPECT_FALSE(r.report.density_ok);
  EXPECT_FALSE(r.report.good());
}

TEST(CleanTest, Preconditions) {
  const Tournament t = random_tournament(10, 1);
  const VertexSubset a(10, {0, 1, 2, 3, 4}), b(10, {5, 6, 7, 8, 9});
  EXPECT_THROW(clean_to_good_partition(t, a, b, 0.02), BadParams);
  EXPECT_THROW(clean_to_good_partition(t, a, b, 0.0), BadParams);
  EXPECT_THROW(clean_to_good_partition(t, VertexSubset(10, {0, 1}), VertexSubset(10, {2, 3, 4, 5, 6, 7, 8, 9}), 0.01),
               BadParams);
  EXPECT_THROW(clean_to_good_partition(t, VertexSubset(10, {0, 1, 2, 3}), b, 0.01), BadParams);
}

TEST(GoodnessTest, MatchesDirectCount) {
  const Tournament t = extremal_main(60, 2);
  const Partition p = extremal_main_partition(60, 2);
  const GoodnessReport g = goodness(t, p, 0.1);
  EXPECT_EQ(g.e_BA, 0u);
  EXPECT_EQ(g.e_AB, p.A.size() * p.B.size());
  EXPECT_EQ(g.min_semidegree_A, (p.A.size() - 1) / 2);
  EXPECT_TRUE(g.density_ok);
}

TEST(ConnectorTest, ApexOfOddFamily) {
  const Tournament t = extremal_theorem1_odd(5);
  const Partition p = theorem1_odd_partition(5);
  const VertexSubset c = k_connectors(t, p, 5);
  EXPECT_TRUE(c.contains(22));
  EXPECT_EQ(c.size(), 1u);
}

TEST(ConnectorTest, MainFamilyXVertices) {
  const Tournament t = extremal_main(50, 3);
  const Partition p = extremal_main_partition(50, 3);
  const std::size_t limit = std::min(p.A.size(), p.B.size());
  for (std::size_t k : {std::size_t{1}, limit / 2, limit}) {
    const VertexSubset c = k_connectors(t, p, k);
    for (Vertex x : p.X.members()) EXPECT_TRUE(c.contains(x)) << k;
  }
}

TEST(ConnectorTest, NaiveRecountAndAntitone) {
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 50; ++iter) {
    const Instance in = random_instance(rng, 5 + rng() % 60);
    std::vector<Vertex> prev;
    for (std::size_t k = 0; k < 12; ++k) {
      const VertexSubset c = k_connectors(in.t, in.p, k);
      std::vector<Vertex> expected;
      for (Vertex v = 0; v < in.t.size(); ++v)
        if (naive_out_into(in.t, v, in.p.A) >= k && naive_in_from(in.t, v, in.p.B) >= k)
          expected.push_back(v);
      EXPECT_EQ(c.members(), expected);
      if (k > 0) {
        for (Vertex v : c.members()) EXPECT_TRUE(std::find(prev.begin(), prev.end(), v) != prev.end());
      }
      prev = c.members();
    }
  }
}

TEST(RefineTest, MainFamilyUnchanged) {
  const Tournament t = extremal_main(51, 2);
  const Partition p = extremal_main_partition(51, 2);
  const RefineResult r = refine_partition(t, p, 3, 2);
  EXPECT_FALSE(r.connector_shortcut);
  EXPECT_EQ(r.partition, p);
}

TEST(RefineTest, HighOutDegreeBVertexMovesToX) {
  const std::size_t n = 51, t = 2, k = 3;
  const Tournament base = extremal_main(n, t);
  const Partition p = extremal_main_partition(n, t);
  const Vertex b = p.B[0];
  TournamentBuilder builder(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (i != j && base.beats(i, j)) builder.orient(i, j);
  for (std::size_t i = 0; i < k + t; ++i) builder.orient(b, p.A[i]);
  const Tournament flipped = builder.build();
  const RefineResult r = refine_partition(flipped, p, k, t);
  EXPECT_FALSE(r.connector_shortcut);
  EXPECT_EQ(r.qualifying_b, std::vector<Vertex>{b});
  EXPECT_TRUE(r.partition.X.contains(b));
  EXPECT_FALSE(r.partition.B.contains(b));
  EXPECT_EQ(r.partition.X.size(), t + 1);
}

TEST(RefineTest, PlantedConnectorsShortCircuit) {
  const std::size_t n = 51, t = 2, k = 3;
  const Tournament base = extremal_main(n, t);
  const Partition p = extremal_main_partition(n, t);
  TournamentBuilder builder(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (i != j && base.beats(i, j)) builder.orient(i, j);
  for (std::size_t c = 0; c <= t; ++c)
    for (std::size_t i = 0; i < k + t; ++i) builder.orient(p.B[c], p.A[i]);
  const Tournament planted = builder.build();
  const RefineResult r = refine_partition(planted, p, k, t);
  EXPECT_TRUE(r.connector_shortcut);
  EXPECT_EQ(r.qualifying_b.size(), t + 1);
  EXPECT_EQ(r.partition, p);
  // Each planted vertex has k+t out-neighbours in A and in-neighbours from
  // the rest of B, so it is a k-connector.
  const VertexSubset c = k_connectors(planted, p, k);
  for (Vertex v : r.qualifying_b) EXPECT_TRUE(c.contains(v));
}

TEST(MatchingTest, MainFamilyIsEmpty) {
  const MatchingCover m = max_BA_matching(extremal_main(40, 2), extremal_main_partition(40, 2));
  EXPECT_TRUE(m.matching.empty());
  EXPECT_TRUE(m.cover.empty());
}

TEST(MatchingTest, PlantedPerfectMatching) {
  const std::size_t n = 40, t = 2;
  const Tournament base = extremal_main(n, t);
  const Partition p = extremal_main_partition(n, t);
  TournamentBuilder builder(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (i != j && base.beats(i, j)) builder.orient(i, j);
  for (std::size_t i = 0; i < 5; ++i) builder.orient(p.B[i], p.A[i]);
  const MatchingCover m = max_BA_matching(builder.build(), p);
  EXPECT_GE(m.matching.size(), 5u);
  EXPECT_EQ(m.cover.size(), m.matching.size());
}

TEST(MatchingTest, BruteForceAndKoenig) {
  std::mt19937_64 rng(67);
  for (int iter = 0; iter < 300; ++iter) {
    const Instance in = random_instance(rng, 2 + rng() % 13);
    const MatchingCover m = max_BA_matching(in.t, in.p);
    EXPECT_EQ(m.matching.size(), oracle::brute_force_matching(in.t, in.p.B.members(), in.p.A.members()));
    EXPECT_EQ(m.matching.size(), m.cover.size());
    std::set<Vertex> used;
    for (auto [b, a] : m.matching) {
      EXPECT_TRUE(in.t.beats(b, a));
      EXPECT_TRUE(in.p.B.contains(b) && in.p.A.contains(a));
      EXPECT_TRUE(used.insert(b).second && used.insert(a).second);
    }
    for (Vertex b : in.p.B.members())
      for (Vertex a : in.p.A.members())
        if (in.t.beats(b, a)) {
          EXPECT_TRUE(m.cover.contains(a) || m.cover.contains(b));
        }
  }
}

TEST(BadEventsTest, MainFamilyFullSet) {
  const Tournament t = extremal_main(203, 2);
  const Partition p = extremal_main_partition(203, 2);
  const BadEventFlags f = bad_events(t, p, VertexSubset::all(203));
  EXPECT_FALSE(f.b1 || f.b2 || f.b3 || f.b4);
  const ImplicationCheck c = hamiltonicity_from_no_bad_events(t, p, VertexSubset::all(203));
  EXPECT_TRUE(c.all_clear());
  EXPECT_TRUE(c.hamiltonian);
}

TEST(BadEventsTest, MissingPartIsAnError) {
  const Tournament t = extremal_main(40, 2);
  const Partition p = extremal_main_partition(40, 2);
  EXPECT_THROW(bad_events(t, p, VertexSubset(40, {0, 1, 2})), EmptyPart);
  EXPECT_THROW(bad_events(t, p, VertexSubset(40, {30, 31})), EmptyPart);
  EXPECT_FALSE(hamiltonicity_from_no_bad_events(t, p, VertexSubset(40, {0, 1})).flags);
}

TEST(BadEventsTest, SplitHalvesHaveNoReturnPath) {
  const Tournament t = extremal_theorem1_even(4);
  const Partition p = theorem1_even_partition(4);
  const BadEventFlags f = bad_events(t, p, VertexSubset(18, {0, 1, 2, 9, 10, 11}));
  EXPECT_TRUE(f.b4);
  EXPECT_FALSE(f.b3);
  const ImplicationCheck c = hamiltonicity_from_no_bad_events(t, p, VertexSubset::all(18));
  EXPECT_TRUE(c.flags->b4);
  EXPECT_FALSE(c.hamiltonian);
  EXPECT_TRUE(c.holds());
}

TEST(BadEventsTest, ReachabilityFlagsMatchBfs) {
  std::mt19937_64 rng(71);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 4 + rng() % 40;
    // Bias towards A -> B so that b4 is sometimes set.
    TournamentBuilder builder(n);
    std::vector<int> side(n);
    for (Vertex v = 0; v < n; ++v) side[v] = static_cast<int>(rng() % 3);
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j) {
        bool forward = rng() % 2;
        if (side[i] == 0 && side[j] == 1 && rng() % 8) forward = true;
        if (side[i] == 1 && side[j] == 0 && rng() % 8) forward = false;
        forward ? builder.orient(i, j) : builder.orient(j, i);
      }
    const Tournament t = builder.build();
    std::vector<Vertex> a, b, x, s;
    for (Vertex v = 0; v < n; ++v) {
      (side[v] == 0 ? a : side[v] == 1 ? b : x).push_back(v);
      if (rng() % 3) s.push_back(v);
    }
    const Partition p = make_partition(n, a, b, x);
    const VertexSubset sample(n, s);
    const auto flags = bad_events_on(t, PartitionMasks(p), sample.mask());
    std::vector<bool> in(n, false);
    for (Vertex v : s) in[v] = true;
    bool has_a = false, has_b = false;
    for (Vertex v : s) has_a |= side[v] == 0, has_b |= side[v] == 1;
    ASSERT_EQ(flags.has_value(), has_a && has_b);
    if (!flags) continue;
    const auto reach = oracle::reachability(oracle::to_matrix(t), in);
    bool ab = false, ba = false;
    for (Vertex u : s)
      for (Vertex v : s) {
        if (side[u] == 0 && side[v] == 1 && reach[u][v]) ab = true;
        if (side[u] == 1 && side[v] == 0 && reach[u][v]) ba = true;
      }
    EXPECT_EQ(flags->b3, !ab);
    EXPECT_EQ(flags->b4, !ba);
    std::size_t xs = 0;
    for (Vertex v : s) xs += side[v] == 2;
    EXPECT_EQ(flags->b1, 5 * xs >= s.size());
  }
}

TEST(BadEventsTest, ImplicationHoldsOnSmallSweep) {
  const Tournament t = extremal_main(83, 2);
  const Partition p = extremal_main_partition(83, 2);
  int clear = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng = trial_rng(13, i);
    const ImplicationCheck c = hamiltonicity_from_no_bad_events(t, p, sample_subset(83, 0.5, rng));
    EXPECT_TRUE(c.holds());
    clear += c.all_clear();
  }
  EXPECT_GT(clear, 0);
}

TEST(CensusTest, Examples) {
  EXPECT_EQ(low_indegree_census(rotational_tournament(10), 0.4), 0u);
  EXPECT_EQ(low_indegree_census(transitive_tournament(10), 0.25), 3u);
  // Split halves with k = 25: δ0 = 25 >= (1/4 - δ²) n for δ = 0.075.
  const Tournament t = extremal_theorem1_even(25);
  const double n = static_cast<double>(t.size()), delta = 0.075;
  ASSERT_FALSE(is_hamiltonian(t));
  ASSERT_GE(static_cast<double>(semidegrees(t).min_semidegree), (0.25 - delta * delta) * n);
  EXPECT_GE(static_cast<double>(low_indegree_census(t, 0.25 + 2 * delta)), (0.5 - 2 * delta) * n);
}

TEST(ConnectorKTest, DefaultFormula) {
  const double expected = 2 * std::log(3 / 0.1) / std::log(1 / (1 - 0.25));
  EXPECT_EQ(default_connector_k(0.5, 2, 0.1), static_cast<std::size_t>(std::ceil(expected)));
  EXPECT_THROW(default_connector_k(0.5, 2, 0.0), BadParams);
}

}  // namespace
}  // namespace tourneylab
