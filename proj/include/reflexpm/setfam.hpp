#pragma once

// Subsets of the ground set [d] = {1, ..., d} encoded as bitmasks
// (bit i-1 set <=> element i present), canonical families of subsets,
// and sublattices of the Boolean lattice 2^[d].

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace reflexpm {

using Mask = std::uint32_t;

inline constexpr int kMaxGroundSize = 16;
inline constexpr int kMaxSublatticeGroundSize = 4;

/// Throws InputError unless 1 <= d <= kMaxGroundSize.
void check_ground_size(int d);

[[nodiscard]] constexpr Mask full_mask(int d) noexcept {
  return static_cast<Mask>((std::uint64_t{1} << d) - 1);
}

/// A subset X of [d].
class Subset {
 public:
  Subset() = default;
  /// Throws InputError when d is out of range or mask >= 2^d.
  Subset(int d, Mask mask);

  /// Builds a subset from 1-based elements; throws InputError on elements
  /// outside [d]. Duplicates are ignored.
  static Subset from_elements(int d, const std::vector<int>& elements);
  static Subset empty(int d) { return {d, 0}; }
  static Subset full(int d) { return {d, full_mask(d)}; }

  [[nodiscard]] int d() const noexcept { return d_; }
  [[nodiscard]] Mask mask() const noexcept { return mask_; }
  [[nodiscard]] int size() const noexcept { return std::popcount(mask_); }
  [[nodiscard]] bool is_empty() const noexcept { return mask_ == 0; }
  [[nodiscard]] bool contains(int element) const noexcept {
    return element >= 1 && element <= d_ && ((mask_ >> (element - 1)) & 1U) != 0;
  }
  [[nodiscard]] bool is_subset_of(const Subset& other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }
  /// Ascending 1-based elements.
  [[nodiscard]] std::vector<int> elements() const;
  /// Smallest element, 0 for the empty set.
  [[nodiscard]] int min_element() const noexcept {
    return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1;
  }

  [[nodiscard]] Subset operator|(const Subset& o) const { return {d_, mask_ | o.mask_}; }
  [[nodiscard]] Subset operator&(const Subset& o) const { return {d_, mask_ & o.mask_}; }

  /// "{1,3}" style rendering.
  [[nodiscard]] std::string to_string() const;

  bool operator==(const Subset&) const = default;
  /// Canonical order: cardinality first, then mask value.
  std::strong_ordering operator<=>(const Subset& o) const noexcept;

 private:
  int d_ = 1;
  Mask mask_ = 0;
};

/// Canonical (cardinality, mask) comparison on raw masks.
[[nodiscard]] inline bool canonical_less(Mask a, Mask b) noexcept {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  return ca != cb ? ca < cb : a < b;
}

/// A duplicate-free, canonically ordered family of subsets of [d].
class SetFamily {
 public:
  /// Throws InputError on a bad ground size or any mask >= 2^d.
  /// The input order and duplicates are normalized away.
  SetFamily(int d, std::vector<Mask> masks);
  SetFamily(int d, const std::vector<Subset>& sets);

  [[nodiscard]] int d() const noexcept { return d_; }
  [[nodiscard]] const std::vector<Mask>& masks() const noexcept { return masks_; }
  [[nodiscard]] std::vector<Subset> sets() const;
  [[nodiscard]] std::size_t size() const noexcept { return masks_.size(); }
  [[nodiscard]] bool contains(Mask mask) const noexcept;
  [[nodiscard]] bool contains(const Subset& s) const noexcept { return contains(s.mask()); }

  /// Copy without the empty set.
  [[nodiscard]] SetFamily without_empty() const;
  /// Copy with the empty set added.
  [[nodiscard]] SetFamily with_empty() const;

  /// "{{},{3},{2,3},{1,2,3}}" style rendering.
  [[nodiscard]] std::string to_string() const;

  bool operator==(const SetFamily&) const = default;
  /// Lexicographic on (d, canonical mask sequence).
  std::strong_ordering operator<=>(const SetFamily& o) const noexcept;

 private:
  int d_;
  std::vector<Mask> masks_;
};

/// True iff the family contains the empty set and [d] and is closed under
/// pairwise union and intersection.
[[nodiscard]] bool is_sublattice(const SetFamily& family);

/// Smallest sublattice of 2^[d] containing `family`.
[[nodiscard]] SetFamily lattice_closure(const SetFamily& family);

/// Visits every sublattice of 2^[d] exactly once, in canonical order
/// (lexicographic on the canonical mask sequence). Capped at
/// d <= kMaxSublatticeGroundSize; larger d raises CapabilityError.
void for_each_sublattice(int d, const std::function<void(const SetFamily&)>& visit);

[[nodiscard]] std::vector<SetFamily> enumerate_sublattices(int d);

/// The chain {}, {d}, {d-1,d}, ..., [d].
[[nodiscard]] SetFamily chain_sublattice(int d);

}  // namespace reflexpm
