// Copyright 2026 The perc-forge Authors
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
#include <stdexcept>
#include <vector>

namespace percforge {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

/// Fixed-size dense bitset. Bits past size() in the last word are always zero.
class DenseBitset {
 public:
  DenseBitset() = default;
  explicit DenseBitset(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  static DenseBitset full(std::size_t size) {
    DenseBitset b(size);
    b.set_all();
    return b;
  }

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }
  std::span<Word> words() { return words_; }
  std::span<const Word> words() const { return words_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void assign(std::size_t i, bool value) { value ? set(i) : reset(i); }

  void set_all() {
    for (auto& w : words_) w = ~Word{0};
    trim();
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }
  bool all() const { return count() == size_; }

  bool is_subset_of(const DenseBitset& other) const {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  DenseBitset& operator|=(const DenseBitset& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  DenseBitset& operator&=(const DenseBitset& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  DenseBitset& operator-=(const DenseBitset& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend DenseBitset operator|(DenseBitset a, const DenseBitset& b) { return a |= b; }
  friend DenseBitset operator&(DenseBitset a, const DenseBitset& b) { return a &= b; }
  friend DenseBitset operator-(DenseBitset a, const DenseBitset& b) { return a -= b; }
  friend bool operator==(const DenseBitset&, const DenseBitset&) = default;

  /// Indices of set bits, ascending.
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  /// Clears any bits beyond size() in the final word.
  void trim() {
    if (size_ % kWordBits && !words_.empty()) words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
  }

 private:
  void check_same(const DenseBitset& o) const {
    if (o.size_ != size_) throw std::invalid_argument("bitset size mismatch");
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Infected-vertex state of the bootstrap process.
using VertexSet = DenseBitset;
/// Edge subsets indexed by the global edge enumeration.
using EdgeSet = DenseBitset;

}  // namespace percforge
