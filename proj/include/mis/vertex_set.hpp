#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace mis {

using Vertex = int;

/// Largest supported graph order; one adjacency row is one machine word.
inline constexpr int kMaxOrder = 64;

/// A set of vertex indices in [0, 64), stored as a single 64-bit word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) bits_ |= bit(v);
  }

  /// {0, ..., n-1}.
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  /// Lowest member; undefined on the empty set.
  constexpr Vertex first() const { return std::countr_zero(bits_); }
  /// Exclusive upper bound of the members (0 for the empty set).
  constexpr int span() const { return 64 - std::countl_zero(bits_); }

  constexpr VertexSet with(Vertex v) const { return VertexSet(bits_ | bit(v)); }
  constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~bit(v)); }
  constexpr void insert(Vertex v) { bits_ |= bit(v); }
  constexpr void erase(Vertex v) { bits_ &= ~bit(v); }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  /// Complement within {0, ..., n-1}.
  constexpr VertexSet complement(int n) const { return VertexSet(~bits_ & range(n).bits_); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

  /// Calls f(v) for every member in ascending order.
  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) f(static_cast<Vertex>(std::countr_zero(rest)));
  }

  /// "{0,2,3}"
  std::string to_string() const;

 private:
  static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

  std::uint64_t bits_ = 0;
};

}  // namespace mis
