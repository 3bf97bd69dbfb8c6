#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace nucleus {

/// Fixed-width subset of a small index range [0, 32). Tag distinguishes
/// edge subsets from vertex subsets so the two never mix silently.
template <typename Tag>
class IndexSet {
 public:
  using word_type = std::uint32_t;
  static constexpr int kCapacity = 32;

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(word_type bits) : bits_(bits) {}

  static constexpr IndexSet singleton(int i) { return IndexSet(word_type{1} << i); }
  /// {0, ..., n-1}
  static constexpr IndexSet range(int n) {
    return IndexSet(n >= kCapacity ? ~word_type{0} : (word_type{1} << n) - 1);
  }
  static IndexSet of(std::initializer_list<int> items) {
    IndexSet s;
    for (int i : items) s.insert(i);
    return s;
  }

  constexpr word_type bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  /// Lowest member; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }

  constexpr void insert(int i) { bits_ |= word_type{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(word_type{1} << i); }

  constexpr IndexSet with(int i) const { return IndexSet(bits_ | (word_type{1} << i)); }
  constexpr IndexSet without(int i) const { return IndexSet(bits_ & ~(word_type{1} << i)); }
  constexpr IndexSet toggled(int i) const { return IndexSet(bits_ ^ (word_type{1} << i)); }

  constexpr bool is_subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(IndexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
  constexpr IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
  constexpr IndexSet operator^(IndexSet o) const { return IndexSet(bits_ ^ o.bits_); }
  /// Set difference.
  constexpr IndexSet operator-(IndexSet o) const { return IndexSet(bits_ & ~o.bits_); }
  constexpr IndexSet& operator|=(IndexSet o) { bits_ |= o.bits_; return *this; }
  constexpr IndexSet& operator&=(IndexSet o) { bits_ &= o.bits_; return *this; }

  constexpr auto operator<=>(const IndexSet&) const = default;

  /// Members in ascending order.
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (word_type b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (word_type b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

 private:
  word_type bits_ = 0;
};

/// Largest ground set a complex may live on (membership bitmap is 2^m bits).
inline constexpr int kMaxGroundSize = 26;

struct EdgeTag {};
struct VertexTag {};

/// Subset of edge indices; the face currency of every complex here.
using EdgeSet = IndexSet<EdgeTag>;
/// Subset of vertex labels.
using VertexSet = IndexSet<VertexTag>;

}  // namespace nucleus

template <typename Tag>
struct std::hash<nucleus::IndexSet<Tag>> {
  std::size_t operator()(nucleus::IndexSet<Tag> s) const noexcept {
    return std::hash<std::uint32_t>{}(s.bits());
  }
};
