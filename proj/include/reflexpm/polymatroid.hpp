#pragma once

// Ground-set rank functions, discrete polymatroids as explicit point sets,
// and the translations between them: closed and inseparable subsets, the
// facet family, the construction of a rank function from a sublattice, and
// transversal polymatroids.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "reflexpm/rational.hpp"
#include "reflexpm/setfam.hpp"

namespace reflexpm {

/// Rank values above this bound are rejected so that every sum of at most
/// 2^16 values stays exact in 64 bits.
inline constexpr std::int64_t kMaxRankValue = std::int64_t{1} << 30;

/// Upper bound on explicitly materialized point sets and search spaces.
inline constexpr std::uint64_t kEnumerationBudget = 10'000'000;

/// Dense table rho(X) indexed by subset mask. Construction only checks the
/// table length; validity is decided by validate_rank.
class RankFunction {
 public:
  /// Throws InputError when d is out of range or values.size() != 2^d.
  RankFunction(int d, std::vector<std::int64_t> values);

  [[nodiscard]] int d() const noexcept { return d_; }
  [[nodiscard]] const std::vector<std::int64_t>& values() const noexcept { return values_; }
  [[nodiscard]] std::int64_t operator[](Mask mask) const { return values_[mask]; }
  [[nodiscard]] std::int64_t operator()(const Subset& x) const { return values_[x.mask()]; }

  bool operator==(const RankFunction&) const = default;
  auto operator<=>(const RankFunction&) const = default;

 private:
  int d_;
  std::vector<std::int64_t> values_;
};

enum class RankViolation {
  kNone,
  kEmptyNonzero,   // rho(empty) != 0; X = Y = empty
  kOutOfRange,     // negative or above kMaxRankValue; X = Y = offending set
  kNotMonotone,    // X subset of Y with rho(X) > rho(Y)
  kNotSubmodular,  // rho(X) + rho(Y) < rho(X u Y) + rho(X n Y)
};

[[nodiscard]] std::string to_string(RankViolation v);

struct RankVerdict {
  bool ok = true;
  /// rho({i}) >= 1 for every i; reported independently of `ok`.
  bool loopless = true;
  RankViolation violation = RankViolation::kNone;
  std::optional<Subset> x;
  std::optional<Subset> y;

  [[nodiscard]] std::string describe() const;
};

/// Checks normalization, range, monotonicity and submodularity, reporting
/// the first violation found. Monotonicity and submodularity are checked
/// through their local forms (single-element extensions), which are
/// equivalent to the pairwise definitions.
[[nodiscard]] RankVerdict validate_rank(int d, const std::vector<std::int64_t>& values);
[[nodiscard]] RankVerdict validate_rank(const RankFunction& rho);

/// Throws InputError unless rho is valid (and loopless, when requested).
void require_valid_rank(const RankFunction& rho, bool loopless);

/// A finite, lexicographically sorted, duplicate-free set of nonnegative
/// integer vectors of length d.
class PointSet {
 public:
  /// Throws InputError on an empty input, a wrong vector length, or a
  /// negative coordinate.
  PointSet(int d, std::vector<IntVector> points);

  [[nodiscard]] int d() const noexcept { return d_; }
  [[nodiscard]] const std::vector<IntVector>& points() const noexcept { return points_; }
  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] bool contains(const IntVector& u) const;

  bool operator==(const PointSet&) const = default;

 private:
  int d_;
  std::vector<IntVector> points_;
};

/// Sum of coordinates.
[[nodiscard]] std::int64_t modulus(const IntVector& u);

/// rho(X) = max over u in P of sum_{i in X} u_i.
[[nodiscard]] RankFunction rank_of_points(const PointSet& points);

/// { u >= 0 integral : sum_{i in X} u_i <= rho(X) for all nonempty X }.
/// Requires a valid rank function; raises CapabilityError when the
/// bounding box exceeds kEnumerationBudget.
[[nodiscard]] PointSet points_of_rank(const RankFunction& rho);

struct PolymatroidVerdict {
  enum class Kind { kNone, kNotDownClosed, kExchange };
  bool ok = true;
  Kind kind = Kind::kNone;
  /// kNotDownClosed: u in P, v <= u missing from P.
  /// kExchange: u, v in P with |u| < |v| and no i with u_i < v_i and
  /// u + e_i in P.
  IntVector u;
  IntVector v;

  [[nodiscard]] std::string describe() const;
};

/// True iff the pair (u, v) violates the exchange axiom in P.
[[nodiscard]] bool violates_exchange(const PointSet& points, const IntVector& u,
                                     const IntVector& v);

/// Checks down-closure, then exchange. The exchange witness is the
/// lexicographically first u admitting a violation, paired with the
/// violating v closest to u in L1 distance (ties broken lexicographically).
[[nodiscard]] PolymatroidVerdict is_discrete_polymatroid(const PointSet& points);

struct BasisReport {
  std::vector<IntVector> bases;  // maximal points, lex-sorted
  std::set<std::int64_t> moduli;
};

[[nodiscard]] BasisReport bases(const PointSet& points);

/// rho(X u {j}) > rho(X) for all j outside X.
[[nodiscard]] bool is_closed(const RankFunction& rho, const Subset& x);
/// Reference form: rho(Y) > rho(X) for every proper superset Y.
[[nodiscard]] bool is_closed_by_supersets(const RankFunction& rho, const Subset& x);

/// No partition X = X1 u X2 into nonempty parts has rho(X) = rho(X1) + rho(X2).
/// Throws InputError for the empty set.
[[nodiscard]] bool is_inseparable(const RankFunction& rho, const Subset& x);

/// Nonempty subsets that are both closed and inseparable, canonically ordered.
[[nodiscard]] SetFamily facet_family(const RankFunction& rho);

/// rho(X) = min{|A| + 1 : X subset of A, A in L} for nonempty X, rho(empty) = 0.
/// Throws InputError unless `lattice` is a sublattice.
[[nodiscard]] RankFunction rank_from_sublattice(const SetFamily& lattice);

/// A multiset of nonempty blocks B_1, ..., B_n of [d] in canonical order.
class Presentation {
 public:
  /// Throws InputError on an empty block or a ground-size mismatch.
  Presentation(int d, std::vector<Mask> blocks);

  [[nodiscard]] int d() const noexcept { return d_; }
  [[nodiscard]] const std::vector<Mask>& blocks() const noexcept { return blocks_; }
  [[nodiscard]] std::string to_string() const;

  bool operator==(const Presentation&) const = default;

 private:
  int d_;
  std::vector<Mask> blocks_;
};

/// {[d], [d], [d-1], ..., [1]}.
[[nodiscard]] Presentation chain_presentation(int d);

/// rho(X) = number of blocks meeting X.
[[nodiscard]] RankFunction transversal_rank(const Presentation& presentation);

/// Down-closure of all sums of unit vectors e_{i_j}, i_j in B_j, over
/// subsets of the blocks.
[[nodiscard]] PointSet transversal_points(const Presentation& presentation);

}  // namespace reflexpm
