#include "reflexpm/polytope.hpp"

#include <algorithm>
#include <numeric>

#include "reflexpm/errors.hpp"

namespace reflexpm {

HPolytope::HPolytope(int d, std::vector<Inequality> ineqs) : d_(d), ineqs_(std::move(ineqs)) {
  check_ground_size(d);
  for (const auto& q : ineqs_) {
    if (q.a.size() != static_cast<std::size_t>(d)) {
      throw InputError("inequality normal has length " + std::to_string(q.a.size()) +
                       ", expected " + std::to_string(d));
    }
    if (std::all_of(q.a.begin(), q.a.end(), [](auto c) { return c == 0; })) {
      throw InputError("inequality with zero normal");
    }
  }
}

HPolytope independence_hrep(const RankFunction& rho, bool facets_only) {
  require_valid_rank(rho, true);
  const int d = rho.d();
  std::vector<Inequality> ineqs;
  for (int i = 0; i < d; ++i) {
    IntVector a(d, 0);
    a[i] = -1;
    ineqs.push_back({std::move(a), 0});
  }
  std::vector<Mask> upper;
  if (facets_only) {
    upper = facet_family(rho).masks();
  } else {
    for (Mask m = 1; m <= full_mask(d); ++m) upper.push_back(m);
    std::sort(upper.begin(), upper.end(), canonical_less);
  }
  for (Mask m : upper) {
    IntVector a(d, 0);
    for (int i = 0; i < d; ++i) a[i] = (m >> i) & 1U;
    ineqs.push_back({std::move(a), rho[m]});
  }
  return {d, std::move(ineqs)};
}

namespace {

void check_dimension(const HPolytope& h, std::size_t n) {
  if (n != static_cast<std::size_t>(h.d())) {
    throw InputError("point of dimension " + std::to_string(n) + " tested against polytope in dimension " +
                     std::to_string(h.d()));
  }
}

// Solves the square system rows[k] . x = rhs[k]; nothing when singular.
std::optional<RationalVector> solve(std::vector<RationalVector> rows, RationalVector rhs) {
  const std::size_t n = rows.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(rows[pivot], rows[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inv = Rational(1) / rows[col][col];
    for (std::size_t j = col; j < n; ++j) rows[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || rows[r][col].is_zero()) continue;
      const Rational f = rows[r][col];
      for (std::size_t j = col; j < n; ++j) rows[r][j] -= f * rows[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

int rank_of(std::vector<RationalVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t j = col; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

// A nonzero vector spanning the kernel of `rows` (d - 1 rows of length d)
// when the rows are linearly independent; nothing otherwise.
std::optional<RationalVector> kernel_vector(std::vector<RationalVector> rows, std::size_t d) {
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < d && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = Rational(1) / rows[r][col];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][col].is_zero()) continue;
      const Rational f = rows[o][col];
      for (std::size_t j = 0; j < d; ++j) rows[o][j] -= f * rows[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }
  if (r + 1 != d) return std::nullopt;
  std::size_t free_col = 0;
  while (free_col < pivot_col.size() && pivot_col[free_col] == free_col) ++free_col;
  RationalVector v(d, Rational(0));
  v[free_col] = 1;
  for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = -rows[i][free_col];
  return v;
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

void check_vertex_budget(const HPolytope& h) {
  const std::size_t m = h.ineqs().size();
  const auto d = static_cast<std::size_t>(h.d());
  if (std::max(binomial(m, d), binomial(m, d - 1)) > static_cast<double>(kVertexBudget)) {
    throw CapabilityError("vertex enumeration over " + std::to_string(m) +
                          " inequalities exceeds the combinatorial budget");
  }
}

// Vertex enumeration without the boundedness check.
std::vector<RationalVector> raw_vertices(const HPolytope& h) {
  const auto d = static_cast<std::size_t>(h.d());
  const auto& ineqs = h.ineqs();
  const std::size_t m = ineqs.size();
  std::vector<RationalVector> out;
  if (m < d) return out;
  std::vector<std::size_t> pick(d);
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<RationalVector> rows(d);
  RationalVector rhs(d);
  while (true) {
    for (std::size_t k = 0; k < d; ++k) {
      rows[k] = to_rational(ineqs[pick[k]].a);
      rhs[k] = ineqs[pick[k]].b;
    }
    if (auto x = solve(rows, rhs); x && contains(h, *x, false)) out.push_back(std::move(*x));

    std::size_t k = d;
    while (k > 0 && pick[k - 1] == m - d + (k - 1)) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Analysis {
  std::vector<RationalVector> verts;
};

// Vertices of a bounded, nonempty, full-dimensional polytope.
Analysis analyze_full(const HPolytope& h) {
  Analysis a{vertices(h)};
  if (a.verts.empty()) throw CapabilityError("polytope is empty");
  if (affine_dimension(a.verts) != h.d()) throw CapabilityError("polytope is not full-dimensional");
  return a;
}

bool tight(const Inequality& q, const RationalVector& x) { return dot(q.a, x) == Rational(q.b); }

PrimitiveFacet primitive(const Inequality& q) {
  std::int64_t g = 0;
  for (auto c : q.a) g = std::gcd(g, c);
  PrimitiveFacet pf{q.a, Rational(q.b, g)};
  for (auto& c : pf.normal) c /= g;
  return pf;
}

std::vector<std::size_t> facet_indices(const HPolytope& h, const std::vector<RationalVector>& verts) {
  std::vector<std::size_t> keep;
  std::vector<PrimitiveFacet> seen;
  for (std::size_t k = 0; k < h.ineqs().size(); ++k) {
    const auto& q = h.ineqs()[k];
    std::vector<RationalVector> on;
    for (const auto& v : verts) {
      if (tight(q, v)) on.push_back(v);
    }
    if (affine_dimension(on) != h.d() - 1) continue;
    PrimitiveFacet pf = primitive(q);
    const bool repeated = std::any_of(seen.begin(), seen.end(), [&](const PrimitiveFacet& s) {
      return s.normal == pf.normal && s.rhs == pf.rhs;
    });
    if (repeated) continue;
    seen.push_back(std::move(pf));
    keep.push_back(k);
  }
  return keep;
}

std::vector<PrimitiveFacet> primitive_of(const HPolytope& h, const std::vector<std::size_t>& idx) {
  std::vector<PrimitiveFacet> out;
  for (auto k : idx) out.push_back(primitive(h.ineqs()[k]));
  return out;
}

}  // namespace

bool contains(const HPolytope& h, const RationalVector& x, bool strict) {
  check_dimension(h, x.size());
  for (const auto& q : h.ineqs()) {
    const Rational lhs = dot(q.a, x);
    const Rational b(q.b);
    if (strict ? !(lhs < b) : !(lhs <= b)) return false;
  }
  return true;
}

bool contains(const HPolytope& h, const IntVector& x, bool strict) {
  check_dimension(h, x.size());
  for (const auto& q : h.ineqs()) {
    const auto lhs = dot(q.a, x);
    if (strict ? !(lhs < q.b) : !(lhs <= q.b)) return false;
  }
  return true;
}

bool is_bounded(const HPolytope& h) {
  check_vertex_budget(h);
  // Bounded iff the recession cone {y : a . y <= 0} is {0}: the normals
  // must have full rank, and no extreme ray (the kernel of d - 1 linearly
  // independent normals, in either orientation) may lie in the cone.
  const auto d = static_cast<std::size_t>(h.d());
  const auto& ineqs = h.ineqs();
  std::vector<RationalVector> all;
  for (const auto& q : ineqs) all.push_back(to_rational(q.a));
  if (rank_of(all) != static_cast<int>(d)) return false;

  const std::size_t m = ineqs.size();
  const std::size_t k = d - 1;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<RationalVector> rows;
    for (auto i : pick) rows.push_back(all[i]);
    if (auto ray = kernel_vector(rows, d)) {
      for (int orientation : {1, -1}) {
        const bool in_cone = std::all_of(ineqs.begin(), ineqs.end(), [&](const Inequality& q) {
          return dot(q.a, *ray) * Rational(orientation) <= Rational(0);
        });
        if (in_cone) return false;
      }
    }
    std::size_t j = k;
    while (j > 0 && pick[j - 1] == m - k + (j - 1)) --j;
    if (j == 0) break;
    ++pick[j - 1];
    for (std::size_t t = j; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }
  return true;
}

std::vector<RationalVector> vertices(const HPolytope& h) {
  if (!is_bounded(h)) throw CapabilityError("polytope is unbounded");
  return raw_vertices(h);
}

int affine_dimension(const std::vector<RationalVector>& points) {
  if (points.empty()) return -1;
  std::vector<RationalVector> diffs;
  for (std::size_t k = 1; k < points.size(); ++k) {
    RationalVector row(points[k].size());
    for (std::size_t i = 0; i < row.size(); ++i) row[i] = points[k][i] - points[0][i];
    diffs.push_back(std::move(row));
  }
  return rank_of(std::move(diffs));
}

std::vector<IntVector> lattice_points(const HPolytope& h) {
  const auto verts = vertices(h);
  const int d = h.d();
  std::vector<IntVector> out;
  if (verts.empty()) return out;
  IntVector lo(d), hi(d);
  double box = 1;
  for (int i = 0; i < d; ++i) {
    Rational mn = verts.front()[i], mx = verts.front()[i];
    for (const auto& v : verts) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = mn.ceil();
    hi[i] = mx.floor();
    box *= static_cast<double>(std::max<std::int64_t>(0, hi[i] - lo[i] + 1));
  }
  if (box > static_cast<double>(kEnumerationBudget)) {
    throw CapabilityError("lattice point bounding box exceeds enumeration budget");
  }
  IntVector x(d);
  auto recurse = [&](auto&& self, int k) -> void {
    if (k == d) {
      if (contains(h, x, false)) out.push_back(x);
      return;
    }
    for (std::int64_t t = lo[k]; t <= hi[k]; ++t) {
      x[k] = t;
      self(self, k + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

std::vector<IntVector> interior_lattice_points(const HPolytope& h) {
  auto pts = lattice_points(h);
  std::erase_if(pts, [&](const IntVector& x) { return !contains(h, x, true); });
  return pts;
}

HPolytope irredundant(const HPolytope& h) {
  const auto a = analyze_full(h);
  std::vector<Inequality> kept;
  for (auto k : facet_indices(h, a.verts)) kept.push_back(h.ineqs()[k]);
  return {h.d(), std::move(kept)};
}

std::vector<PrimitiveFacet> primitive_facets(const HPolytope& h) {
  const auto a = analyze_full(h);
  return primitive_of(h, facet_indices(h, a.verts));
}

ReflexivityReport is_reflexive_direct(const HPolytope& h) {
  const auto a = analyze_full(h);
  const auto facets = primitive_of(h, facet_indices(h, a.verts));
  ReflexivityReport report;
  report.lattice_polytope = std::all_of(a.verts.begin(), a.verts.end(),
                                        [](const RationalVector& v) { return is_integral(v); });
  std::vector<IntVector> centers;
  for (const auto& c : interior_lattice_points(h)) {
    const RationalVector rc = to_rational(c);
    const bool unit = std::all_of(facets.begin(), facets.end(), [&](const PrimitiveFacet& f) {
      return dot(f.normal, rc) == f.rhs - Rational(1);
    });
    if (unit) centers.push_back(c);
  }
  if (centers.size() > 1) throw InternalError("several interior points at unit distance from all facets");
  if (!centers.empty()) {
    report.center = centers.front();
    report.reflexive = report.lattice_polytope;
  }
  return report;
}

std::vector<RationalVector> dual_vertices(const HPolytope& h, const IntVector& center) {
  check_dimension(h, center.size());
  if (!contains(h, center, true)) throw InputError("dual center is not strictly interior");
  const auto rc = to_rational(center);
  std::vector<RationalVector> out;
  for (const auto& f : primitive_facets(h)) {
    const Rational dist = f.rhs - dot(f.normal, rc);
    RationalVector v;
    for (auto c : f.normal) v.push_back(Rational(c) / dist);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NonFacetWitness non_facet_witness(const RankFunction& rho, const Subset& x) {
  if (x.is_empty()) throw InputError("witness requires a nonempty subset");
  if (x.d() != rho.d()) throw InputError("subset ground size does not match rank function");
  if (facet_family(rho).contains(x)) {
    throw InputError("subset " + x.to_string() + " belongs to the facet family");
  }
  const int q = x.size();
  const Rational scale = q == 1 ? Rational(3) : Rational(q, q - 1);
  NonFacetWitness w;
  w.point.assign(rho.d(), Rational(0));
  for (int e : x.elements()) w.point[e - 1] = scale;
  w.modulus = scale * Rational(q);
  w.inside = contains(independence_hrep(rho, false), w.point, false);
  return w;
}

}  // namespace reflexpm
