#pragma once

#include <array>
#include <iterator>
#include <bit>
#include <cstdint>
#include <string>

namespace gpg {

/// Fixed-capacity set of vertex indices backed by a 128-bit mask.
/// Vertex indices must lie in [0, kCapacity). All operations are O(1)
/// except iteration, which is O(words).
class VertexSet {
 public:
  static constexpr int kCapacity = 128;

  constexpr VertexSet() = default;

  static constexpr VertexSet singleton(int v) {
    VertexSet s;
    s.insert(v);
    return s;
  }

  /// All vertices in [0, n).
  static constexpr VertexSet full(int n) {
    VertexSet s;
    if (n <= 0) return s;
    if (n >= 64) {
      s.w_[0] = ~std::uint64_t{0};
      s.w_[1] = (n >= kCapacity) ? ~std::uint64_t{0}
                                 : ((std::uint64_t{1} << (n - 64)) - 1);
    } else {
      s.w_[0] = (std::uint64_t{1} << n) - 1;
    }
    return s;
  }

  constexpr bool contains(int v) const {
    return (w_[v >> 6] >> (v & 63)) & 1;
  }
  constexpr void insert(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  constexpr void erase(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  constexpr int count() const {
    return std::popcount(w_[0]) + std::popcount(w_[1]);
  }
  constexpr bool empty() const { return w_[0] == 0 && w_[1] == 0; }
  constexpr void clear() { w_ = {0, 0}; }

  constexpr bool operator==(const VertexSet&) const = default;

  constexpr VertexSet operator|(const VertexSet& o) const {
    return VertexSet{w_[0] | o.w_[0], w_[1] | o.w_[1]};
  }
  constexpr VertexSet operator&(const VertexSet& o) const {
    return VertexSet{w_[0] & o.w_[0], w_[1] & o.w_[1]};
  }
  constexpr VertexSet operator-(const VertexSet& o) const {
    return VertexSet{w_[0] & ~o.w_[0], w_[1] & ~o.w_[1]};
  }
  constexpr VertexSet& operator|=(const VertexSet& o) {
    w_[0] |= o.w_[0];
    w_[1] |= o.w_[1];
    return *this;
  }
  constexpr VertexSet& operator&=(const VertexSet& o) {
    w_[0] &= o.w_[0];
    w_[1] &= o.w_[1];
    return *this;
  }
  constexpr VertexSet& operator-=(const VertexSet& o) {
    w_[0] &= ~o.w_[0];
    w_[1] &= ~o.w_[1];
    return *this;
  }

  constexpr bool intersects(const VertexSet& o) const {
    return (w_[0] & o.w_[0]) != 0 || (w_[1] & o.w_[1]) != 0;
  }
  constexpr bool is_subset_of(const VertexSet& o) const {
    return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
  }

  /// Smallest member, or -1 if empty.
  constexpr int first() const {
    if (w_[0]) return std::countr_zero(w_[0]);
    if (w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

  /// Smallest member strictly greater than v, or -1 if none. v may be -1.
  constexpr int next_after(int v) const {
    for (int i = v + 1; i < kCapacity;) {
      std::uint64_t word = w_[i >> 6] >> (i & 63);
      if (word) return i + std::countr_zero(word);
      i = (i | 63) + 1;
    }
    return -1;
  }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
    constexpr int operator*() const { return v_; }
    constexpr iterator& operator++() {
      v_ = s_->next_after(v_);
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator& o) const { return v_ == o.v_; }
    constexpr bool operator!=(const iterator& o) const { return v_ != o.v_; }

   private:
    const VertexSet* s_;
    int v_;
  };
  constexpr iterator begin() const { return {this, first()}; }
  constexpr iterator end() const { return {this, -1}; }

  constexpr std::uint64_t word(int i) const { return w_[i]; }

  std::uint64_t hash() const {
    // splitmix64 finalizer over both words
    auto mix = [](std::uint64_t x) {
      x += 0x9e3779b97f4a7c15ULL;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      return x ^ (x >> 31);
    };
    return mix(w_[0] ^ mix(w_[1]));
  }

  std::string to_string() const {
    std::string out = "{";
    bool sep = false;
    for (int v : *this) {
      if (sep) out += ",";
      out += std::to_string(v);
      sep = true;
    }
    return out + "}";
  }

 private:
  constexpr VertexSet(std::uint64_t lo, std::uint64_t hi) : w_{lo, hi} {}
  std::array<std::uint64_t, 2> w_{0, 0};
};

}  // namespace gpg
