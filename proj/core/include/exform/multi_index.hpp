#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace exform {

/// Largest ambient dimension representable by the bitmask encoding.
inline constexpr int kMaxDim = 64;

/// Strictly increasing subset of {1..n}, stored as a bitmask (bit i-1 <-> index i).
/// The empty set labels degree-0 forms.
class MultiIndex {
 public:
  constexpr MultiIndex() = default;
  constexpr explicit MultiIndex(std::uint64_t bits) : bits_(bits) {}

  /// Builds from 1-based indices; throws std::invalid_argument unless the list
  /// is strictly increasing and every entry lies in [1, dim].
  static MultiIndex from_indices(std::span<const int> indices, int dim);
  static MultiIndex from_indices(std::initializer_list<int> indices, int dim) {
    return from_indices(std::span<const int>(indices.begin(), indices.size()), dim);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int index) const { return (bits_ >> (index - 1)) & 1U; }
  constexpr int max_index() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

  /// 1-based indices in increasing order.
  std::vector<int> indices() const;

  friend constexpr bool operator==(MultiIndex a, MultiIndex b) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on sorted index lists (for equal lengths); extended to a
/// total order on all subsets by comparing indicator strings with 1 < 0.
struct LexLess {
  constexpr bool operator()(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t diff = a ^ b;
    return diff != 0 && (a & diff & (~diff + 1)) != 0;
  }
  constexpr bool operator()(MultiIndex a, MultiIndex b) const { return (*this)(a.bits(), b.bits()); }
};

/// Sign of the shuffle that sorts the concatenation of two disjoint index sets.
constexpr int shuffle_sign(std::uint64_t left, std::uint64_t right) {
  int inversions = 0;
  std::uint64_t rest = right;
  while (rest != 0) {
    int bit = std::countr_zero(rest);
    rest &= rest - 1;
    std::uint64_t above = bit == 63 ? 0 : (left >> (bit + 1));
    inversions += std::popcount(above);
  }
  return (inversions & 1) ? -1 : 1;
}

/// Number of set bits of `mask` strictly below bit position `bit` (0-based).
constexpr int count_below(std::uint64_t mask, int bit) {
  return std::popcount(mask & ((std::uint64_t{1} << bit) - 1));
}

/// All k-subsets of {1..n} in lexicographic order, as bitmasks.
std::vector<std::uint64_t> lex_subsets(int n, int k);

long long binomial(int n, int k);

}  // namespace exform
