// Copyright 2026 The Authors.
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

#ifndef VSC_ELEMENT_SET_HPP_
#define VSC_ELEMENT_SET_HPP_

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace vsc {

// Fixed-width bitset over the universe elements 0..size()-1.
//
// All binary operations require both operands to have the same width. Bits
// past size() in the last word are kept zero so that word-wise popcounts and
// comparisons are exact.
class ElementSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  ElementSet() = default;
  explicit ElementSet(std::size_t n) : n_(n), words_(WordCount(n), 0) {}
  ElementSet(std::size_t n, std::initializer_list<std::size_t> elements)
      : ElementSet(n) {
    for (std::size_t e : elements) insert(e);
  }
  ElementSet(std::size_t n, std::span<const std::size_t> elements)
      : ElementSet(n) {
    for (std::size_t e : elements) insert(e);
  }

  static ElementSet Full(std::size_t n) {
    ElementSet s(n);
    for (auto& w : s.words_) w = ~Word{0};
    s.TrimTail();
    return s;
  }

  std::size_t size() const { return n_; }
  std::span<const Word> words() const { return words_; }

  bool contains(std::size_t e) const {
    assert(e < n_);
    return (words_[e / kWordBits] >> (e % kWordBits)) & 1U;
  }
  void insert(std::size_t e) {
    assert(e < n_);
    words_[e / kWordBits] |= Word{1} << (e % kWordBits);
  }
  void erase(std::size_t e) {
    assert(e < n_);
    words_[e / kWordBits] &= ~(Word{1} << (e % kWordBits));
  }

  std::size_t cardinality() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }
  bool full() const { return cardinality() == n_; }

  // |*this \ other|, the marginal gain of *this against a covered set.
  std::size_t count_minus(const ElementSet& other) const {
    assert(n_ == other.n_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & ~other.words_[i]));
    return c;
  }
  std::size_t count_intersection(const ElementSet& other) const {
    assert(n_ == other.n_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }
  bool is_subset_of(const ElementSet& other) const {
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  ElementSet& operator|=(const ElementSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  // Lowest element not in the set, or size() when the set is full.
  std::size_t first_missing() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != ~Word{0}) {
        std::size_t e = i * kWordBits + static_cast<std::size_t>(std::countr_one(words_[i]));
        return e < n_ ? e : n_;
      }
    }
    return n_;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w != 0) {
        f(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  // Members in ascending order.
  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(cardinality());
    for_each([&](std::size_t e) { out.push_back(e); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::size_t>{}(n_);
    for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  static std::size_t WordCount(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }
  void TrimTail() {
    if (n_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (n_ % kWordBits)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<Word> words_;
};

}  // namespace vsc

#endif  // VSC_ELEMENT_SET_HPP_
