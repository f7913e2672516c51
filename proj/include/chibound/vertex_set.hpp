#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

#include "chibound/simd/bitset_kernels.hpp"

namespace chibound {

/// Dense vertex id in [0, n).
using Vertex = int;

/// A subset of a fixed universe [0, universe), stored as 64-bit words.
/// Binary set operations expect both operands to share the same universe.
class VertexSet {
public:
  using word_t = simd::word_t;

  class const_iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, Vertex at) : set_(set), at_(at) {}

    Vertex operator*() const { return at_; }
    const_iterator& operator++() {
      at_ = set_->next(at_);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const { return at_ == other.at_; }

  private:
    const VertexSet* set_ = nullptr;
    Vertex at_ = -1;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  template <typename Range>
  static VertexSet from_range(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }
  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~word_t{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }
  std::span<const word_t> words() const { return words_; }

  bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < universe_ &&
           ((words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u) != 0;
  }
  void insert(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] |= word_t{1} << (v & 63); }
  void erase(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] &= ~(word_t{1} << (v & 63)); }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const { return simd::kernels().popcount(words_); }
  bool empty() const {
    for (word_t w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest member, or -1.
  Vertex first() const { return next_from(0); }
  /// Smallest member greater than v, or -1.
  Vertex next(Vertex v) const { return next_from(static_cast<std::size_t>(v) + 1); }

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, -1}; }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  bool intersects(const VertexSet& other) const {
    return simd::kernels().intersects(words_, other.words_);
  }
  bool is_subset_of(const VertexSet& other) const {
    return simd::kernels().is_subset(words_, other.words_);
  }
  std::size_t intersection_count(const VertexSet& other) const {
    return simd::kernels().and_popcount(words_, other.words_);
  }

  VertexSet& operator&=(const VertexSet& other) {
    simd::kernels().and_assign(words_, other.words_);
    return *this;
  }
  VertexSet& operator|=(const VertexSet& other) {
    simd::kernels().or_assign(words_, other.words_);
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other) {
    simd::kernels().andnot_assign(words_, other.words_);
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Complement within the universe.
  VertexSet complement() const {
    VertexSet out = full(universe_);
    out -= *this;
    return out;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

private:
  Vertex next_from(std::size_t from) const {
    std::size_t wi = from >> 6;
    if (wi >= words_.size()) return -1;
    word_t w = words_[wi] & (~word_t{0} << (from & 63));
    while (true) {
      if (w != 0) return static_cast<Vertex>(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }
  void trim() {
    const std::size_t tail = universe_ & 63;
    if (tail != 0 && !words_.empty()) words_.back() &= (word_t{1} << tail) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<word_t> words_;
};

} // namespace chibound
