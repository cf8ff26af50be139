#pragma once

// Exact polyhedral kernel for small H-polytopes: membership, vertex and
// lattice-point enumeration, irredundant facets, dual polytopes and the
// reflexivity test. All arithmetic is exact.

#include <optional>
#include <vector>

#include "reflexpm/polymatroid.hpp"
#include "reflexpm/rational.hpp"

namespace reflexpm {

/// a . x <= b
struct Inequality {
  IntVector a;
  std::int64_t b = 0;

  bool operator==(const Inequality&) const = default;
};

class HPolytope {
 public:
  /// Throws InputError on a normal of the wrong length or a zero normal.
  HPolytope(int d, std::vector<Inequality> ineqs);

  [[nodiscard]] int d() const noexcept { return d_; }
  [[nodiscard]] const std::vector<Inequality>& ineqs() const noexcept { return ineqs_; }

  bool operator==(const HPolytope&) const = default;

 private:
  int d_;
  std::vector<Inequality> ineqs_;
};

/// Limit on the number of d-subsets of inequalities examined by vertices().
inline constexpr std::uint64_t kVertexBudget = 10'000'000;

/// -x_i <= 0 for every i, then sum_{i in X} x_i <= rho(X) for every
/// nonempty X in canonical order (or only X in facet_family(rho)).
[[nodiscard]] HPolytope independence_hrep(const RankFunction& rho, bool facets_only);

/// Exact evaluation; throws InputError on a dimension mismatch.
[[nodiscard]] bool contains(const HPolytope& h, const RationalVector& x, bool strict);
[[nodiscard]] bool contains(const HPolytope& h, const IntVector& x, bool strict);

[[nodiscard]] bool is_bounded(const HPolytope& h);

/// Vertices, lex-sorted. Throws CapabilityError when the polytope is
/// unbounded or the combinatorial budget is exceeded.
[[nodiscard]] std::vector<RationalVector> vertices(const HPolytope& h);

/// Dimension of the affine hull of the vertex set (-1 when empty).
[[nodiscard]] int affine_dimension(const std::vector<RationalVector>& points);

/// All integer points, lex-sorted. Throws CapabilityError when unbounded.
[[nodiscard]] std::vector<IntVector> lattice_points(const HPolytope& h);

/// Integer points satisfying every inequality strictly.
[[nodiscard]] std::vector<IntVector> interior_lattice_points(const HPolytope& h);

/// The inequalities that are tight on d affinely independent vertices, in
/// their original order and form (repeated facets kept once). Throws
/// CapabilityError for empty or lower-dimensional polytopes.
[[nodiscard]] HPolytope irredundant(const HPolytope& h);

/// A facet with its normal divided by the gcd of its entries.
struct PrimitiveFacet {
  IntVector normal;
  Rational rhs;
};

[[nodiscard]] std::vector<PrimitiveFacet> primitive_facets(const HPolytope& h);

struct ReflexivityReport {
  bool reflexive = false;
  /// All vertices are integral.
  bool lattice_polytope = false;
  /// The interior lattice point at lattice distance one from every facet.
  std::optional<IntVector> center;
};

/// Reflexive iff the polytope is a lattice polytope and some interior
/// lattice point lies at lattice distance exactly one from every facet.
[[nodiscard]] ReflexivityReport is_reflexive_direct(const HPolytope& h);

/// Vertices a / (b - a.c) of the dual polytope about the interior point c,
/// one per primitive facet, lex-sorted. Throws InputError unless c is
/// strictly interior.
[[nodiscard]] std::vector<RationalVector> dual_vertices(const HPolytope& h, const IntVector& center);

struct NonFacetWitness {
  RationalVector point;
  bool inside = false;
  Rational modulus;
};

/// For nonempty X outside facet_family(rho): the point (q/(q-1)) chi_X when
/// q = |X| >= 2, or 3 e_i when X = {i}, with its membership in the
/// independence polytope. Throws InputError when X is in the facet family.
[[nodiscard]] NonFacetWitness non_facet_witness(const RankFunction& rho, const Subset& x);

}  // namespace reflexpm
