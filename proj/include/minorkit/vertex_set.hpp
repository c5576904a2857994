#ifndef MINORKIT_VERTEX_SET_HPP
#define MINORKIT_VERTEX_SET_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace minorkit {

using Vertex = std::uint32_t;

/// Fixed-capacity bitset over vertex ids in [0, 64 * Words).
///
/// Used both as the public set type (Words = 4) and, with Words = 1, as the
/// packed mask inside the search engines, so every operation is constexpr
/// friendly and branch-light.
template <std::size_t Words>
class BasicVertexSet {
 public:
  static constexpr std::size_t capacity = 64 * Words;

  constexpr BasicVertexSet() = default;
  constexpr BasicVertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  static constexpr BasicVertexSet range(Vertex n) {
    BasicVertexSet s;
    for (Vertex v = 0; v < n; ++v) s.insert(v);
    return s;
  }

  static BasicVertexSet from_range(const std::vector<Vertex>& vs) {
    BasicVertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  constexpr void insert(Vertex v) { words_[v >> 6] |= bit(v); }
  constexpr void erase(Vertex v) { words_[v >> 6] &= ~bit(v); }
  constexpr bool contains(Vertex v) const {
    return v < capacity && (words_[v >> 6] & bit(v)) != 0;
  }

  constexpr bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  constexpr std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  /// Smallest member; capacity when empty.
  constexpr Vertex front() const {
    for (std::size_t i = 0; i < Words; ++i)
      if (words_[i]) return static_cast<Vertex>(64 * i + std::countr_zero(words_[i]));
    return capacity;
  }
  /// Largest member; capacity when empty.
  constexpr Vertex back() const {
    for (std::size_t i = Words; i-- > 0;)
      if (words_[i]) return static_cast<Vertex>(64 * i + 63 - std::countl_zero(words_[i]));
    return capacity;
  }

  constexpr bool intersects(const BasicVertexSet& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  constexpr bool is_subset_of(const BasicVertexSet& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  constexpr BasicVertexSet& operator|=(const BasicVertexSet& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  constexpr BasicVertexSet& operator&=(const BasicVertexSet& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  constexpr BasicVertexSet& operator-=(const BasicVertexSet& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend constexpr BasicVertexSet operator|(BasicVertexSet a, const BasicVertexSet& b) { return a |= b; }
  friend constexpr BasicVertexSet operator&(BasicVertexSet a, const BasicVertexSet& b) { return a &= b; }
  friend constexpr BasicVertexSet operator-(BasicVertexSet a, const BasicVertexSet& b) { return a -= b; }
  friend constexpr bool operator==(const BasicVertexSet&, const BasicVertexSet&) = default;
  friend constexpr auto operator<=>(const BasicVertexSet& a, const BasicVertexSet& b) {
    return a.to_vector() <=> b.to_vector();
  }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr iterator(const BasicVertexSet* s, std::size_t word, std::uint64_t rest)
        : set_(s), word_(word), rest_(rest) {
      settle();
    }
    constexpr Vertex operator*() const {
      return static_cast<Vertex>(64 * word_ + std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      settle();
      return *this;
    }
    constexpr iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend constexpr bool operator==(const iterator& a, const iterator& b) {
      return a.word_ == b.word_ && a.rest_ == b.rest_;
    }

   private:
    constexpr void settle() {
      while (rest_ == 0 && word_ + 1 < Words) rest_ = set_->words_[++word_];
      if (rest_ == 0) word_ = Words;
    }
    const BasicVertexSet* set_ = nullptr;
    std::size_t word_ = Words;
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(this, 0, words_[0]); }
  constexpr iterator end() const { return iterator(this, Words, 0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (Vertex v : *this) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
    return out + "}";
  }

  constexpr std::uint64_t word(std::size_t i) const { return words_[i]; }

 private:
  static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v & 63); }
  std::array<std::uint64_t, Words> words_{};
};

/// Public vertex-set type. Vertex ids must be below VertexSet::capacity.
using VertexSet = BasicVertexSet<4>;
inline constexpr Vertex max_vertex_id = VertexSet::capacity - 1;

}  // namespace minorkit

#endif  // MINORKIT_VERTEX_SET_HPP
