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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tourneylab/error.hpp"

namespace tourneylab {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

// Word-span kernels shared by the bit-matrix rows and VertexMask.
namespace bits {

inline bool test(std::span<const Word> w, std::size_t i) {
  return (w[i / kWordBits] >> (i % kWordBits)) & 1u;
}

inline std::size_t popcount(std::span<const Word> w) {
  std::size_t c = 0;
  for (Word x : w) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

inline std::size_t popcount_and(std::span<const Word> a,
                                std::span<const Word> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

// Calls f(index) for every set bit, ascending.
template <typename F>
void for_each(std::span<const Word> w, F&& f) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    Word x = w[i];
    while (x) {
      const int b = std::countr_zero(x);
      f(static_cast<Vertex>(i * kWordBits + static_cast<std::size_t>(b)));
      x &= x - 1;
    }
  }
}

}  // namespace bits

// Fixed-universe set of vertices stored as a bitset.
class VertexMask {
 public:
  VertexMask() = default;
  explicit VertexMask(std::size_t universe)
      : universe_(universe), words_(words_for(universe), 0) {}

  static VertexMask full(std::size_t universe) {
    VertexMask m(universe);
    for (std::size_t i = 0; i < m.words_.size(); ++i) m.words_[i] = ~Word{0};
    m.trim();
    return m;
  }

  std::size_t universe() const { return universe_; }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool test(std::size_t v) const { return bits::test(words_, v); }
  void set(std::size_t v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void reset(std::size_t v) {
    words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }

  std::size_t count() const { return bits::popcount(words_); }
  bool any() const {
    for (Word w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // Lowest member, or universe() if empty.
  std::size_t first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i])
        return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return universe_;
  }

  template <typename F>
  void for_each(F&& f) const {
    bits::for_each(words_, std::forward<F>(f));
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  VertexMask& operator&=(const VertexMask& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexMask& operator|=(const VertexMask& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexMask& subtract(const VertexMask& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexMask operator&(VertexMask a, const VertexMask& b) { return a &= b; }
  friend VertexMask operator|(VertexMask a, const VertexMask& b) { return a |= b; }
  friend bool operator==(const VertexMask&, const VertexMask&) = default;

 private:
  void trim() {
    const std::size_t tail = universe_ % kWordBits;
    if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace tourneylab
