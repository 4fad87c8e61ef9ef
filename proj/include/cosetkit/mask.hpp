#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace cosetkit {

/// A subset of the generator set, one bit per generator in label order.
class GenMask {
 public:
  constexpr GenMask() = default;
  constexpr explicit GenMask(std::uint32_t bits) : bits_(static_cast<std::uint16_t>(bits)) {}

  static constexpr GenMask single(unsigned index) { return GenMask(1u << index); }
  static constexpr GenMask full(unsigned arity) { return GenMask((1u << arity) - 1u); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(unsigned index) const { return (bits_ >> index) & 1u; }
  constexpr bool subset_of(GenMask other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr GenMask operator&(GenMask o) const { return GenMask(bits_ & o.bits_); }
  constexpr GenMask operator|(GenMask o) const { return GenMask(bits_ | o.bits_); }
  constexpr GenMask without(unsigned index) const { return GenMask(bits_ & ~(1u << index)); }
  constexpr GenMask with(unsigned index) const { return GenMask(bits_ | (1u << index)); }

  constexpr auto operator<=>(const GenMask&) const = default;

  /// Indices of the set bits, ascending.
  std::vector<unsigned> indices() const {
    std::vector<unsigned> out;
    for (unsigned i = 0; i < 16; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

 private:
  std::uint16_t bits_ = 0;
};

/// All masks over `arity` generators in ascending numeric order.
inline std::vector<GenMask> all_masks(unsigned arity, bool include_empty = true) {
  std::vector<GenMask> out;
  for (std::uint32_t b = include_empty ? 0u : 1u; b < (1u << arity); ++b) out.emplace_back(b);
  return out;
}

/// Masks ordered by size (ascending or descending), numeric value breaking ties.
inline std::vector<GenMask> masks_by_size(unsigned arity, bool descending, bool include_empty = false) {
  auto out = all_masks(arity, include_empty);
  std::stable_sort(out.begin(), out.end(), [descending](GenMask a, GenMask b) {
    if (a.size() != b.size()) return descending ? a.size() > b.size() : a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace cosetkit
