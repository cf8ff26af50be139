#include <doctest.h>

#include <random>

#include "reflexpm/classify.hpp"
#include "reflexpm/errors.hpp"
#include "reflexpm/polytope.hpp"

using namespace reflexpm;

namespace {

const RankFunction kChain2(2, {0, 3, 2, 3});

HPolytope box(int d, std::int64_t side) {
  std::vector<Inequality> q;
  for (int i = 0; i < d; ++i) {
    IntVector a(d, 0);
    a[i] = -1;
    q.push_back({a, 0});
    a[i] = 1;
    q.push_back({a, side});
  }
  return {d, q};
}

HPolytope simplex2(std::int64_t k) { return {2, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 1}, k}}}; }

RationalVector rv(std::vector<Rational> v) { return v; }

// Vertices of a 2-dimensional H-polytope by Cramer's rule on every pair.
std::vector<RationalVector> cramer_vertices(const HPolytope& h) {
  std::vector<RationalVector> out;
  const auto& q = h.ineqs();
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      const std::int64_t det = q[i].a[0] * q[j].a[1] - q[i].a[1] * q[j].a[0];
      if (det == 0) continue;
      RationalVector x{Rational(q[i].b * q[j].a[1] - q[i].a[1] * q[j].b, det),
                       Rational(q[i].a[0] * q[j].b - q[i].b * q[j].a[0], det)};
      if (contains(h, x, false)) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("independence_hrep") {
  const auto facets = independence_hrep(kChain2, true);
  CHECK(facets.ineqs() == std::vector<Inequality>{{{-1, 0}, 0}, {{0, -1}, 0}, {{0, 1}, 2}, {{1, 1}, 3}});
  CHECK(independence_hrep(RankFunction(2, {0, 3, 3, 3}), true) == simplex2(3));
  CHECK(independence_hrep(rank_from_sublattice(chain_sublattice(3)), false).ineqs().size() == 10);
  CHECK_THROWS_AS(independence_hrep(RankFunction(1, {0, 0}), false), InputError);
  CHECK_THROWS_AS(HPolytope(2, {{{0, 0}, 1}}), InputError);
  CHECK_THROWS_AS(HPolytope(2, {{{1}, 1}}), InputError);
}

TEST_CASE("contains") {
  const auto h = independence_hrep(kChain2, false);
  CHECK(contains(h, rv({1, 1}), true));
  CHECK_FALSE(contains(h, rv({1, 2}), true));
  CHECK(contains(h, rv({1, 2}), false));
  CHECK(contains(h, IntVector{0, 0}, false));
  CHECK_FALSE(contains(h, rv({Rational(5, 2), Rational(1, 2)}), true));
  const auto top = independence_hrep(RankFunction(3, {0, 4, 4, 4, 4, 4, 4, 4}), false);
  CHECK(contains(top, rv({2, 2, 0}), false));
  CHECK_THROWS_AS((void)contains(h, rv({1}), false), InputError);
}

TEST_CASE("vertices") {
  const auto h = independence_hrep(kChain2, false);
  const auto v = vertices(h);
  CHECK(v == std::vector<RationalVector>{rv({0, 0}), rv({0, 2}), rv({1, 2}), rv({3, 0})});
  CHECK(v == cramer_vertices(h));
  CHECK(vertices(simplex2(3)) == std::vector<RationalVector>{rv({0, 0}), rv({0, 3}), rv({3, 0})});
  for (const auto& x : vertices(reflexive_non_polymatroid_fixture())) CHECK(is_integral(x));

  const HPolytope half(2, {{{2, 2}, 3}, {{-1, 0}, 0}, {{0, -1}, 0}});
  CHECK(vertices(half) == cramer_vertices(half));
  CHECK(vertices(half).back() == rv({Rational(3, 2), 0}));
}

TEST_CASE("boundedness and budgets") {
  CHECK(is_bounded(box(3, 1)));
  CHECK_FALSE(is_bounded(HPolytope(1, {{{-1}, 0}})));
  CHECK_FALSE(is_bounded(HPolytope(2, {{{-1, 0}, 0}, {{1, 0}, 1}})));
  CHECK_FALSE(is_bounded(HPolytope(2, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, -1}, 1}})));
  CHECK_THROWS_AS(vertices(HPolytope(1, {{{-1}, 0}})), CapabilityError);
  CHECK_THROWS_AS(lattice_points(HPolytope(2, {{{-1, 0}, 0}, {{0, -1}, 0}})), CapabilityError);

  std::vector<Inequality> many;
  for (int k = 0; k < 120; ++k) many.push_back({{1, k, 0, 0, 0, 0}, 1});
  CHECK_THROWS_AS(vertices(HPolytope(6, many)), CapabilityError);
}

TEST_CASE("lattice points") {
  const auto h = independence_hrep(kChain2, false);
  CHECK(PointSet(2, lattice_points(h)) == points_of_rank(kChain2));
  CHECK(lattice_points(box(2, 1)).size() == 4);
  const auto ex = lattice_points(reflexive_non_polymatroid_fixture());
  CHECK(std::find(ex.begin(), ex.end(), IntVector{0, 3, 0}) != ex.end());
  CHECK(std::find(ex.begin(), ex.end(), IntVector{1, 2, 1}) != ex.end());
  const HPolytope shifted(1, {{{-1}, 2}, {{1}, 2}});
  CHECK(lattice_points(shifted) == std::vector<IntVector>{{-2}, {-1}, {0}, {1}, {2}});
}

TEST_CASE("irredundant") {
  CHECK(irredundant(independence_hrep(kChain2, false)) == independence_hrep(kChain2, true));
  CHECK(irredundant(box(2, 1)) == box(2, 1));
  const auto sq = irredundant(independence_hrep(RankFunction(2, {0, 2, 2, 4}), false));
  CHECK(sq.ineqs() == std::vector<Inequality>{{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 0}, 2}, {{0, 1}, 2}});
  // Repeated facets, also as positive multiples, are kept once.
  const HPolytope doubled(2, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 1}, 3}, {{2, 2}, 6}});
  CHECK(irredundant(doubled).ineqs().size() == 3);
  const HPolytope flat(2, {{{-1, 0}, 0}, {{1, 0}, 0}, {{0, -1}, 0}, {{0, 1}, 1}});
  CHECK_THROWS_AS(irredundant(flat), CapabilityError);
  const HPolytope empty(1, {{{-1}, -2}, {{1}, 1}});
  CHECK_THROWS_AS(irredundant(empty), CapabilityError);
}

TEST_CASE("interior lattice points") {
  CHECK(interior_lattice_points(independence_hrep(kChain2, false)) == std::vector<IntVector>{{1, 1}});
  CHECK(interior_lattice_points(reflexive_non_polymatroid_fixture()) == std::vector<IntVector>{{1, 1, 1}});
  CHECK(interior_lattice_points(box(2, 1)).empty());
}

TEST_CASE("direct reflexivity") {
  const auto ex = is_reflexive_direct(reflexive_non_polymatroid_fixture());
  CHECK(ex.reflexive);
  CHECK(ex.center == IntVector{1, 1, 1});
  const auto chain = is_reflexive_direct(independence_hrep(kChain2, false));
  CHECK(chain.reflexive);
  CHECK(chain.center == IntVector{1, 1});
  CHECK_FALSE(is_reflexive_direct(box(2, 1)).reflexive);
  CHECK_FALSE(is_reflexive_direct(box(2, 1)).center);
  CHECK(is_reflexive_direct(box(2, 2)).reflexive);
  CHECK_FALSE(is_reflexive_direct(box(2, 3)).reflexive);
  CHECK_FALSE(is_reflexive_direct(simplex2(4)).reflexive);

  // Every facet at distance one from the origin, but the vertex (1/3, 1/3)
  // is fractional: not a lattice polytope, hence not reflexive.
  const HPolytope frac(2, {{{-1, 0}, 1}, {{0, -1}, 1}, {{1, 2}, 1}, {{2, 1}, 1}});
  const auto fr = is_reflexive_direct(frac);
  CHECK_FALSE(fr.lattice_polytope);
  CHECK_FALSE(fr.reflexive);
  CHECK(fr.center == IntVector{0, 0});
}

TEST_CASE("dual vertices") {
  const auto h = independence_hrep(kChain2, false);
  CHECK(dual_vertices(h, {1, 1}) == std::vector<RationalVector>{rv({-1, 0}), rv({0, -1}), rv({0, 1}), rv({1, 1})});
  CHECK(dual_vertices(simplex2(3), {1, 1}) == std::vector<RationalVector>{rv({-1, 0}), rv({0, -1}), rv({1, 1})});
  CHECK(dual_vertices(box(2, 2), {1, 1}) ==
        std::vector<RationalVector>{rv({-1, 0}), rv({0, -1}), rv({0, 1}), rv({1, 0})});
  const auto wide = dual_vertices(box(2, 4), {1, 1});
  CHECK(std::find(wide.begin(), wide.end(), rv({Rational(1, 3), 0})) != wide.end());
  CHECK_THROWS_AS(dual_vertices(h, {0, 0}), InputError);
  CHECK_THROWS_AS(dual_vertices(h, {1}), InputError);
}

TEST_CASE("non-facet witness") {
  const RankFunction top(3, {0, 4, 4, 4, 4, 4, 4, 4});
  const auto w = non_facet_witness(top, Subset::from_elements(3, {1, 2}));
  CHECK(w.point == rv({2, 2, 0}));
  CHECK(w.modulus == Rational(4));
  CHECK(w.inside);
  const auto single = non_facet_witness(kChain2, Subset::from_elements(2, {1}));
  CHECK(single.point == rv({3, 0}));
  CHECK(single.modulus == Rational(3));
  CHECK(single.inside);
  CHECK_THROWS_AS(non_facet_witness(kChain2, Subset::from_elements(2, {2})), InputError);
  CHECK_THROWS_AS(non_facet_witness(kChain2, Subset::empty(2)), InputError);
}

TEST_CASE("witness point bound against facets containing X") {
  // (q/(q-1)) |X| <= |A| + 1 whenever X is a proper subset of A with |X| = q.
  for (int q = 2; q <= 8; ++q) {
    for (int a = q + 1; a <= 10; ++a) {
      CHECK(Rational(q * q, q - 1) <= Rational(a + 1));
    }
  }
}

TEST_CASE("polytope properties over the exhaustive sweep") {
  for (int d = 1; d <= 3; ++d) {
    for (const auto& rho : sweep_rank_functions(d, 2 * d)) {
      const auto h = independence_hrep(rho, false);
      const auto verts = vertices(h);
      CHECK(affine_dimension(verts) == d);
      for (const auto& v : verts) CHECK(is_integral(v));
      CHECK(PointSet(d, lattice_points(h)) == points_of_rank(rho));

      // Facet prediction: the irredundant upper inequalities are exactly
      // those indexed by the facet family; every coordinate bound is a facet.
      const auto irr = irredundant(h);
      const auto expected = independence_hrep(rho, true);
      CHECK(irr == expected);

      Mask cover = 0;
      const auto family = facet_family(rho);
      for (Mask m : family.masks()) cover |= m;
      CHECK(cover == full_mask(d));

      const auto refl = is_reflexive_direct(h);
      if (refl.center) {
        const auto dual = dual_vertices(h, *refl.center);
        const bool integral = std::all_of(dual.begin(), dual.end(), [](const auto& v) { return is_integral(v); });
        CHECK(integral == refl.reflexive);
      }
    }
  }
}

TEST_CASE("oracle equality sampled at d = 4") {
  std::mt19937 gen(5);
  std::vector<RankFunction> sample;
  for_each_sublattice(4, [&](const SetFamily& l) {
    if (gen() % 8 == 0) sample.push_back(rank_from_sublattice(l));
  });
  const Presentation extra(4, {1, 3, 6, 12, 15});
  sample.push_back(transversal_rank(extra));
  for (const auto& rho : sample) {
    const auto h = independence_hrep(rho, false);
    CHECK(PointSet(4, lattice_points(h)) == points_of_rank(rho));
    CHECK(irredundant(h) == independence_hrep(rho, true));
  }
}

TEST_CASE("reflexivity cross-check on shifted and non-polymatroid polytopes") {
  std::vector<HPolytope> hs{box(2, 2), box(3, 2), simplex2(3), reflexive_non_polymatroid_fixture(),
                            HPolytope(2, {{{-1, 0}, 1}, {{0, -1}, 1}, {{1, 1}, 1}}),
                            HPolytope(2, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 2}, 4}})};
  for (const auto& h : hs) {
    const auto r = is_reflexive_direct(h);
    const auto interior = interior_lattice_points(h);
    for (const auto& c : interior) {
      const auto dual = dual_vertices(h, c);
      const bool integral = std::all_of(dual.begin(), dual.end(), [](const auto& v) { return is_integral(v); });
      CHECK(integral == (r.center == c));
    }
  }
}
