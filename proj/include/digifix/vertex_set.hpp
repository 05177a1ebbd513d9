#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace digifix {

using Vertex = std::uint32_t;

/// Fixed-capacity dynamic bitset over vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t capacity)
      : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  std::size_t capacity() const { return capacity_; }

  bool test(Vertex v) const { return (words_[v / 64] >> (v % 64)) & 1U; }
  void set(Vertex v) { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
  void reset(Vertex v) { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

  std::size_t count() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Members in ascending order.
  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w) {
        out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  /// Low 64 bits; only meaningful when capacity() <= 64.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

 private:
  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace digifix
