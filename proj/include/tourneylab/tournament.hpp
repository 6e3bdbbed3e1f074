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
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "tourneylab/bits.hpp"
#include "tourneylab/error.hpp"

namespace tourneylab {

inline constexpr std::size_t kMaxVertices = std::size_t{1} << 16;

/// Complete oriented graph on vertices 0..n-1.
///
/// Row u of the bit-matrix holds the out-neighbourhood N+(u). Instances are
/// immutable; they are created through validate(), a TournamentBuilder, or a
/// generator, all of which establish the orientation invariants.
class Tournament {
 public:
  Tournament() = default;

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return stride_; }

  bool beats(Vertex u, Vertex v) const { return bits::test(out_row(u), v); }

  std::span<const Word> out_row(Vertex u) const {
    return {rows_.data() + static_cast<std::size_t>(u) * stride_, stride_};
  }

  std::size_t out_degree(Vertex u) const { return bits::popcount(out_row(u)); }
  std::size_t in_degree(Vertex u) const { return n_ - 1 - out_degree(u); }

  // |N+(u) ∩ mask|
  std::size_t out_degree_within(Vertex u, const VertexMask& mask) const {
    return bits::popcount_and(out_row(u), mask.words());
  }
  // |N-(u) ∩ mask|
  std::size_t in_degree_within(Vertex u, const VertexMask& mask) const {
    const std::size_t members = mask.count() - (mask.test(u) ? 1 : 0);
    return members - out_degree_within(u, mask);
  }

  // e(from, to): number of edges a -> b with a in `from`, b in `to`.
  std::size_t edges_between(const VertexMask& from, const VertexMask& to) const {
    std::size_t total = 0;
    from.for_each([&](Vertex a) { total += out_degree_within(a, to); });
    return total;
  }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  friend class TournamentBuilder;

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> rows_;
};

/// Mutable orientation matrix used to assemble a Tournament.
///
/// Every unordered pair must be oriented (exactly once, or re-oriented) before
/// build(); build() re-checks both invariants.
class TournamentBuilder {
 public:
  explicit TournamentBuilder(std::size_t n) {
    if (n < 1) throw BadParams("a tournament needs at least one vertex");
    if (n > kMaxVertices) throw TooLarge(n, kMaxVertices);
    t_.n_ = n;
    t_.stride_ = words_for(n);
    t_.rows_.assign(n * t_.stride_, 0);
  }

  std::size_t size() const { return t_.n_; }

  // Orients the pair {u, v} as u -> v, replacing any previous orientation.
  TournamentBuilder& orient(Vertex u, Vertex v) {
    set_bit(u, v, true);
    set_bit(v, u, false);
    return *this;
  }

  bool beats(Vertex u, Vertex v) const { return t_.beats(u, v); }

  // Raw cell write; build() rejects inconsistent matrices.
  void set_cell(Vertex u, Vertex v, bool value) { set_bit(u, v, value); }

  Tournament build() const {
    check();
    return t_;
  }

 private:
  void set_bit(Vertex u, Vertex v, bool value) {
    Word& w = t_.rows_[static_cast<std::size_t>(u) * t_.stride_ + v / kWordBits];
    const Word b = Word{1} << (v % kWordBits);
    w = value ? (w | b) : (w & ~b);
  }

  void check() const {
    const std::size_t n = t_.n_;
    for (Vertex i = 0; i < n; ++i) {
      if (t_.beats(i, i)) throw DiagonalNonzero(i);
      for (Vertex j = i + 1; j < n; ++j)
        if (t_.beats(i, j) == t_.beats(j, i)) throw PairViolation(i, j);
    }
  }

  Tournament t_;
};

/// Checks a square 0/1 matrix and returns the tournament it describes.
/// Throws MalformedMatrix, DiagonalNonzero or PairViolation naming the first
/// offending cell in row-major order.
template <typename Matrix>
Tournament validate(const Matrix& raw) {
  const std::size_t n = raw.size();
  if (n == 0) throw MalformedMatrix("empty matrix");
  if (n > kMaxVertices) throw TooLarge(n, kMaxVertices);
  for (std::size_t i = 0; i < n; ++i)
    if (raw[i].size() != n)
      throw MalformedMatrix("row " + std::to_string(i) + " has " +
                            std::to_string(raw[i].size()) + " entries, expected " +
                            std::to_string(n));
  TournamentBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto cell = raw[i][j];
      if (cell != 0 && cell != 1)
        throw MalformedMatrix("entry (" + std::to_string(i) + "," +
                              std::to_string(j) + ") is not 0/1");
      if (i == j) {
        if (cell != 0) throw DiagonalNonzero(static_cast<Vertex>(i));
        continue;
      }
      if ((raw[i][j] != 0) == (raw[j][i] != 0))
        throw PairViolation(static_cast<Vertex>(std::min(i, j)),
                            static_cast<Vertex>(std::max(i, j)));
      b.set_cell(static_cast<Vertex>(i), static_cast<Vertex>(j), cell != 0);
    }
  }
  return b.build();
}

inline Tournament validate(const std::vector<std::vector<int>>& raw) {
  return validate<std::vector<std::vector<int>>>(raw);
}

/// Ordered set of distinct vertices of a parent tournament of size
/// universe_n.
class VertexSubset {
 public:
  VertexSubset() = default;

  VertexSubset(std::size_t universe_n, std::vector<Vertex> members)
      : universe_n_(universe_n), members_(std::move(members)) {
    VertexMask seen(universe_n_);
    for (Vertex v : members_) {
      if (v >= universe_n_) throw SubsetOutOfRange(v, universe_n_);
      if (seen.test(v))
        throw BadParams("duplicate vertex " + std::to_string(v) + " in subset");
      seen.set(v);
    }
  }

  static VertexSubset all(std::size_t universe_n) {
    std::vector<Vertex> m(universe_n);
    for (std::size_t i = 0; i < universe_n; ++i) m[i] = static_cast<Vertex>(i);
    return VertexSubset(universe_n, std::move(m));
  }

  static VertexSubset from_mask(const VertexMask& mask) {
    return VertexSubset(mask.universe(), mask.to_vector());
  }

  std::size_t universe_n() const { return universe_n_; }
  const std::vector<Vertex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  VertexMask mask() const {
    VertexMask m(universe_n_);
    for (Vertex v : members_) m.set(v);
    return m;
  }

  bool contains(Vertex v) const {
    return std::find(members_.begin(), members_.end(), v) != members_.end();
  }

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  std::size_t universe_n_ = 0;
  std::vector<Vertex> members_;
};

/// T[S] together with the map from its labels back to the parent's.
struct Subtournament {
  Tournament tournament;
  std::vector<Vertex> parent_label;  // parent_label[i] = S[i]
};

/// Induced subtournament on S, relabelled 0..|S|-1 in S's order.
inline Subtournament induced(const Tournament& t, const VertexSubset& s) {
  if (s.universe_n() != t.size())
    throw BadParams("subset universe " + std::to_string(s.universe_n()) +
                    " does not match tournament size " +
                    std::to_string(t.size()));
  if (s.empty()) throw BadParams("induced subtournament needs a nonempty subset");
  TournamentBuilder b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const auto a = static_cast<Vertex>(i);
      const auto c = static_cast<Vertex>(j);
      if (t.beats(s[i], s[j]))
        b.orient(a, c);
      else
        b.orient(c, a);
    }
  return {b.build(), s.members()};
}

struct SemidegreeProfile {
  std::vector<std::size_t> out_degrees;
  std::vector<std::size_t> in_degrees;
  std::size_t min_semidegree = 0;
  Vertex witness = 0;
};

inline SemidegreeProfile semidegrees(const Tournament& t) {
  SemidegreeProfile p;
  const std::size_t n = t.size();
  p.out_degrees.resize(n);
  p.in_degrees.resize(n);
  p.min_semidegree = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < n; ++v) {
    p.out_degrees[v] = t.out_degree(v);
    p.in_degrees[v] = n - 1 - p.out_degrees[v];
    const std::size_t s = std::min(p.out_degrees[v], p.in_degrees[v]);
    if (s < p.min_semidegree) {
      p.min_semidegree = s;
      p.witness = v;
    }
  }
  return p;
}

/// δ0(T[mask]) computed on the parent's rows; 0 for an empty mask.
inline std::size_t min_semidegree_within(const Tournament& t,
                                         const VertexMask& mask) {
  const std::size_t m = mask.count();
  if (m == 0) return 0;
  std::size_t best = m;
  mask.for_each([&](Vertex v) {
    const std::size_t out = t.out_degree_within(v, mask);
    best = std::min(best, std::min(out, m - 1 - out));
  });
  return best;
}

}  // namespace tourneylab
