#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace procphi {

/// A subset of the elements {0, ..., n-1} of a system, stored as a bitmask.
/// Element i is bit i. At most 32 elements are addressable.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr ElementSet all(std::size_t n) {
    return ElementSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }
  static constexpr ElementSet single(std::size_t i) { return ElementSet(std::uint32_t{1} << i); }
  static ElementSet of(const std::vector<std::size_t>& indices) {
    ElementSet s;
    for (auto i : indices) s.bits_ |= std::uint32_t{1} << i;
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet minus(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  /// Complement relative to the first n elements.
  constexpr ElementSet complement(std::size_t n) const { return all(n).minus(*this); }

  /// Ascending element indices.
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// Every subset of this set, in increasing bitmask order (empty set first).
  std::vector<ElementSet> subsets() const {
    std::vector<ElementSet> out;
    out.reserve(std::size_t{1} << size());
    std::uint32_t sub = 0;
    do {
      out.emplace_back(sub);
      sub = (sub - bits_) & bits_;
    } while (sub != 0);
    return out;
  }

  /// Position of element i among this set's elements (i must be a member).
  constexpr std::size_t rank(std::size_t i) const {
    return static_cast<std::size_t>(std::popcount(bits_ & ((std::uint32_t{1} << i) - 1)));
  }

  /// Re-express a subset of this set in this set's local numbering.
  ElementSet localize(ElementSet sub) const {
    ElementSet out;
    for (auto i : sub.indices()) out.bits_ |= std::uint32_t{1} << rank(i);
    return out;
  }
  /// Inverse of localize: map local indices back to the parent's numbering.
  ElementSet globalize(ElementSet local) const {
    const auto idx = indices();
    ElementSet out;
    for (auto k : local.indices()) out.bits_ |= std::uint32_t{1} << idx[k];
    return out;
  }

  constexpr bool operator==(const ElementSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Deterministic preference order used for tie-breaking: fewer elements
/// first, then lexicographically smaller ascending index list.
inline bool smaller_then_lexicographic(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto ia = a.indices();
  const auto ib = b.indices();
  return ia < ib;
}

}  // namespace procphi
