// Copyright 2026 The shmetric Authors.
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

// Subsets of a finite ground set V = {0, ..., n-1} stored as bit masks.

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace shm {

// Thrown when two objects that must share a ground set do not.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void RequireSameSize(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": ground-set size " +
                            std::to_string(a) + " vs " + std::to_string(b));
  }
}

// A subset of {0, ..., n-1}. Sets with n <= 128 live inline; larger sets use
// heap storage. Bits at positions >= n are always zero.
class ElementSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  ElementSet() = default;
  explicit ElementSet(std::size_t n) : n_(n) {
    if (NumWords() > kInlineWords) heap_.assign(NumWords(), 0);
  }
  ElementSet(std::size_t n, std::initializer_list<std::size_t> members)
      : ElementSet(n) {
    for (std::size_t j : members) insert(j);
  }

  static ElementSet FromIndices(std::size_t n, std::span<const std::size_t> idx) {
    ElementSet s(n);
    for (std::size_t j : idx) s.insert(j);
    return s;
  }
  static ElementSet FromIndices(std::size_t n, const std::vector<std::size_t>& idx) {
    return FromIndices(n, std::span<const std::size_t>(idx));
  }
  // Low n bits of `mask`; requires n <= 64.
  static ElementSet FromMask(std::size_t n, std::uint64_t mask) {
    if (n > kWordBits) throw std::invalid_argument("FromMask requires n <= 64");
    ElementSet s(n);
    if (n == 0) return s;
    s.words()[0] = n == kWordBits ? mask : (mask & ((Word{1} << n) - 1));
    return s;
  }
  static ElementSet Full(std::size_t n) {
    ElementSet s(n);
    for (Word& w : s.words()) w = ~Word{0};
    s.ClearTail();
    return s;
  }

  std::size_t n() const { return n_; }

  bool contains(std::size_t j) const {
    CheckIndex(j);
    return (words()[j / kWordBits] >> (j % kWordBits)) & 1u;
  }
  void insert(std::size_t j) {
    CheckIndex(j);
    words()[j / kWordBits] |= Word{1} << (j % kWordBits);
  }
  void erase(std::size_t j) {
    CheckIndex(j);
    words()[j / kWordBits] &= ~(Word{1} << (j % kWordBits));
  }
  void flip(std::size_t j) {
    CheckIndex(j);
    words()[j / kWordBits] ^= Word{1} << (j % kWordBits);
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (Word w : words()) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (Word w : words()) {
      if (w != 0) return false;
    }
    return true;
  }

  // Mask of the members; requires n <= 64.
  std::uint64_t ToMask() const {
    if (n_ > kWordBits) throw std::invalid_argument("ToMask requires n <= 64");
    return n_ == 0 ? 0 : words()[0];
  }

  std::vector<std::size_t> Indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    ForEach([&](std::size_t j) { out.push_back(j); });
    return out;
  }

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    auto ws = words();
    for (std::size_t w = 0; w < ws.size(); ++w) {
      Word bits = ws[w];
      while (bits != 0) {
        const int t = std::countr_zero(bits);
        fn(w * kWordBits + static_cast<std::size_t>(t));
        bits &= bits - 1;
      }
    }
  }

  ElementSet& operator|=(const ElementSet& o) { return Combine(o, [](Word a, Word b) { return a | b; }); }
  ElementSet& operator&=(const ElementSet& o) { return Combine(o, [](Word a, Word b) { return a & b; }); }
  ElementSet& operator^=(const ElementSet& o) { return Combine(o, [](Word a, Word b) { return a ^ b; }); }
  ElementSet& operator-=(const ElementSet& o) { return Combine(o, [](Word a, Word b) { return a & ~b; }); }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator^(ElementSet a, const ElementSet& b) { return a ^= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  ElementSet Complement() const {
    ElementSet c = *this;
    for (Word& w : c.words()) w = ~w;
    c.ClearTail();
    return c;
  }

  bool IsSubsetOf(const ElementSet& o) const {
    RequireSameSize(n_, o.n_, "IsSubsetOf");
    auto a = words();
    auto b = o.words();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if ((a[i] & ~b[i]) != 0) return false;
    }
    return true;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    if (a.n_ != b.n_) return false;
    auto x = a.words();
    auto y = b.words();
    return std::equal(x.begin(), x.end(), y.begin());
  }

  // Orders by n, then by mask value with the highest word most significant.
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    auto x = a.words();
    auto y = b.words();
    for (std::size_t i = x.size(); i-- > 0;) {
      if (auto c = x[i] <=> y[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  std::span<const Word> words() const {
    if (NumWords() > kInlineWords) return {heap_.data(), heap_.size()};
    return {words_inline_.data(), NumWords()};
  }

  std::string ToString() const {
    std::string s = "{";
    bool first = true;
    ForEach([&](std::size_t j) {
      if (!first) s += ",";
      s += std::to_string(j);
      first = false;
    });
    return s + "}";
  }

 private:
  static constexpr std::size_t kInlineWords = 2;

  std::size_t NumWords() const { return (n_ + kWordBits - 1) / kWordBits; }

  std::span<Word> words() {
    if (NumWords() > kInlineWords) return {heap_.data(), heap_.size()};
    return {words_inline_.data(), NumWords()};
  }

  void CheckIndex(std::size_t j) const {
    if (j >= n_) {
      throw std::out_of_range("element " + std::to_string(j) +
                              " outside ground set of size " + std::to_string(n_));
    }
  }

  void ClearTail() {
    const std::size_t r = n_ % kWordBits;
    if (r != 0) words()[NumWords() - 1] &= (Word{1} << r) - 1;
  }

  template <typename Op>
  ElementSet& Combine(const ElementSet& o, Op op) {
    RequireSameSize(n_, o.n_, "set operation");
    auto a = words();
    auto b = o.words();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = op(a[i], b[i]);
    return *this;
  }

  std::size_t n_ = 0;
  std::array<Word, kInlineWords> words_inline_{};
  std::vector<Word> heap_;
};

// Symmetric difference (A \ B) u (B \ A).
inline ElementSet SymDiff(const ElementSet& a, const ElementSet& b) { return a ^ b; }

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::size_t h = std::hash<std::size_t>{}(s.n());
    for (auto w : s.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace shm
