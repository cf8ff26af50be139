#include "reflexpm/polymatroid.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "reflexpm/errors.hpp"

namespace reflexpm {

RankFunction::RankFunction(int d, std::vector<std::int64_t> values)
    : d_(d), values_(std::move(values)) {
  check_ground_size(d);
  if (values_.size() != (std::size_t{1} << d)) {
    throw InputError("rank table for d=" + std::to_string(d) + " needs " +
                     std::to_string(std::size_t{1} << d) + " values, got " +
                     std::to_string(values_.size()));
  }
}

std::string to_string(RankViolation v) {
  switch (v) {
    case RankViolation::kNone: return "none";
    case RankViolation::kEmptyNonzero: return "empty-nonzero";
    case RankViolation::kOutOfRange: return "out-of-range";
    case RankViolation::kNotMonotone: return "not-monotone";
    case RankViolation::kNotSubmodular: return "not-submodular";
  }
  return "unknown";
}

std::string RankVerdict::describe() const {
  if (ok) return loopless ? "ok" : "ok (not loopless)";
  std::string s = to_string(violation);
  if (x) s += " X=" + x->to_string();
  if (y) s += " Y=" + y->to_string();
  return s;
}

RankVerdict validate_rank(int d, const std::vector<std::int64_t>& values) {
  const RankFunction rho(d, values);
  const Mask full = full_mask(d);
  RankVerdict verdict;
  for (int i = 0; i < d; ++i) {
    if (rho[Mask{1} << i] < 1) verdict.loopless = false;
  }
  auto fail = [&](RankViolation kind, Mask x, Mask y) {
    verdict.ok = false;
    verdict.violation = kind;
    verdict.x = Subset(d, x);
    verdict.y = Subset(d, y);
    return verdict;
  };

  if (rho[0] != 0) return fail(RankViolation::kEmptyNonzero, 0, 0);
  for (Mask m = 0; m <= full; ++m) {
    if (rho[m] < 0 || rho[m] > kMaxRankValue) return fail(RankViolation::kOutOfRange, m, m);
  }
  for (Mask m = 0; m <= full; ++m) {
    for (int i = 0; i < d; ++i) {
      const Mask bit = Mask{1} << i;
      if ((m & bit) == 0 && rho[m] > rho[m | bit]) {
        return fail(RankViolation::kNotMonotone, m, m | bit);
      }
    }
  }
  for (Mask m = 0; m <= full; ++m) {
    for (int i = 0; i < d; ++i) {
      const Mask bi = Mask{1} << i;
      if (m & bi) continue;
      for (int j = i + 1; j < d; ++j) {
        const Mask bj = Mask{1} << j;
        if (m & bj) continue;
        if (rho[m | bi] + rho[m | bj] < rho[m | bi | bj] + rho[m]) {
          return fail(RankViolation::kNotSubmodular, m | bi, m | bj);
        }
      }
    }
  }
  return verdict;
}

RankVerdict validate_rank(const RankFunction& rho) { return validate_rank(rho.d(), rho.values()); }

void require_valid_rank(const RankFunction& rho, bool loopless) {
  const auto verdict = validate_rank(rho);
  if (!verdict.ok) throw InputError("invalid rank function: " + verdict.describe());
  if (loopless && !verdict.loopless) throw InputError("rank function is not loopless");
}

PointSet::PointSet(int d, std::vector<IntVector> points) : d_(d), points_(std::move(points)) {
  check_ground_size(d);
  if (points_.empty()) throw InputError("point set must be nonempty");
  for (const auto& u : points_) {
    if (u.size() != static_cast<std::size_t>(d)) {
      throw InputError("point of length " + std::to_string(u.size()) + " in dimension " +
                       std::to_string(d));
    }
    for (auto c : u) {
      if (c < 0) throw InputError("point set coordinates must be nonnegative");
    }
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(const IntVector& u) const {
  return std::binary_search(points_.begin(), points_.end(), u);
}

std::int64_t modulus(const IntVector& u) {
  std::int64_t s = 0;
  for (auto c : u) s = checked_add(s, c);
  return s;
}

RankFunction rank_of_points(const PointSet& points) {
  const int d = points.d();
  const std::size_t n = std::size_t{1} << d;
  std::vector<std::int64_t> values(n, 0);
  std::vector<std::int64_t> sums(n);
  for (const auto& u : points.points()) {
    sums[0] = 0;
    for (std::size_t m = 1; m < n; ++m) {
      const int low = std::countr_zero(static_cast<Mask>(m));
      sums[m] = checked_add(sums[m & (m - 1)], u[low]);
      values[m] = std::max(values[m], sums[m]);
    }
  }
  return {d, std::move(values)};
}

PointSet points_of_rank(const RankFunction& rho) {
  require_valid_rank(rho, false);
  const int d = rho.d();
  double box = 1;
  for (int i = 0; i < d; ++i) box *= static_cast<double>(rho[Mask{1} << i] + 1);
  if (box > static_cast<double>(kEnumerationBudget)) {
    throw CapabilityError("polymatroid bounding box exceeds enumeration budget");
  }

  std::vector<IntVector> out;
  IntVector u(d, 0);
  // sums[X] = sum of u_i over X, valid for X within the assigned prefix.
  std::vector<std::int64_t> sums(std::size_t{1} << d, 0);
  auto recurse = [&](auto&& self, int k) -> void {
    if (k == d) {
      out.push_back(u);
      return;
    }
    const Mask bit = Mask{1} << k;
    for (std::int64_t t = 0; t <= rho[bit]; ++t) {
      bool ok = true;
      for (Mask x = 0; x < bit; ++x) {
        sums[x | bit] = sums[x] + t;
        if (sums[x | bit] > rho[x | bit]) ok = false;
      }
      // Larger t only increases every constrained sum.
      if (!ok) break;
      u[k] = t;
      self(self, k + 1);
    }
    u[k] = 0;
  };
  recurse(recurse, 0);
  return {d, std::move(out)};
}

std::string PolymatroidVerdict::describe() const {
  auto vec = [](const IntVector& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
  };
  switch (kind) {
    case Kind::kNone: return "discrete polymatroid";
    case Kind::kNotDownClosed: return "not down-closed: " + vec(u) + " in P but " + vec(v) + " missing";
    case Kind::kExchange: return "exchange fails for u=" + vec(u) + ", v=" + vec(v);
  }
  return {};
}

bool violates_exchange(const PointSet& points, const IntVector& u, const IntVector& v) {
  if (!points.contains(u) || !points.contains(v)) return false;
  if (modulus(u) >= modulus(v)) return false;
  IntVector w = u;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < v[i]) {
      ++w[i];
      const bool inside = points.contains(w);
      --w[i];
      if (inside) return false;
    }
  }
  return true;
}

namespace {

std::optional<IntVector> missing_lower_neighbour(const PointSet& points, const IntVector& u) {
  IntVector w = u;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    --w[i];
    if (!points.contains(w)) return w;
    ++w[i];
  }
  return std::nullopt;
}

std::int64_t l1_distance(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
  return s;
}

bool down_closed(const PointSet& points) {
  return std::none_of(points.points().begin(), points.points().end(), [&](const IntVector& u) {
    return missing_lower_neighbour(points, u).has_value();
  });
}

}  // namespace

PolymatroidVerdict is_discrete_polymatroid(const PointSet& points) {
  PolymatroidVerdict verdict;
  // Checking u - e_i for every u suffices for down-closure by induction.
  for (const auto& u : points.points()) {
    if (auto w = missing_lower_neighbour(points, u)) {
      verdict.ok = false;
      verdict.kind = PolymatroidVerdict::Kind::kNotDownClosed;
      verdict.u = u;
      verdict.v = *w;
      return verdict;
    }
  }
  for (const auto& u : points.points()) {
    const IntVector* best = nullptr;
    std::int64_t best_dist = std::numeric_limits<std::int64_t>::max();
    for (const auto& v : points.points()) {
      if (!violates_exchange(points, u, v)) continue;
      const auto dist = l1_distance(u, v);
      if (dist < best_dist) {
        best = &v;
        best_dist = dist;
      }
    }
    if (best != nullptr) {
      verdict.ok = false;
      verdict.kind = PolymatroidVerdict::Kind::kExchange;
      verdict.u = u;
      verdict.v = *best;
      return verdict;
    }
  }
  return verdict;
}

BasisReport bases(const PointSet& points) {
  BasisReport report;
  const auto& pts = points.points();
  if (down_closed(points)) {
    for (const auto& u : pts) {
      IntVector w = u;
      bool maximal = true;
      for (std::size_t i = 0; i < w.size() && maximal; ++i) {
        ++w[i];
        maximal = !points.contains(w);
        --w[i];
      }
      if (maximal) report.bases.push_back(u);
    }
  } else {
    for (const auto& u : pts) {
      const bool dominated = std::any_of(pts.begin(), pts.end(), [&](const IntVector& w) {
        if (w == u) return false;
        for (std::size_t i = 0; i < u.size(); ++i) {
          if (w[i] < u[i]) return false;
        }
        return true;
      });
      if (!dominated) report.bases.push_back(u);
    }
  }
  for (const auto& b : report.bases) report.moduli.insert(modulus(b));
  return report;
}

bool is_closed(const RankFunction& rho, const Subset& x) {
  const Mask m = x.mask();
  for (int i = 0; i < rho.d(); ++i) {
    const Mask bit = Mask{1} << i;
    if ((m & bit) == 0 && rho[m | bit] <= rho[m]) return false;
  }
  return true;
}

bool is_closed_by_supersets(const RankFunction& rho, const Subset& x) {
  const Mask m = x.mask();
  for (Mask y = 0; y <= full_mask(rho.d()); ++y) {
    if ((y & m) == m && y != m && rho[y] <= rho[m]) return false;
  }
  return true;
}

bool is_inseparable(const RankFunction& rho, const Subset& x) {
  const Mask m = x.mask();
  if (m == 0) throw InputError("inseparability is undefined for the empty set");
  // Each partition is visited once: the part containing the lowest element.
  const Mask low = m & (~m + 1);
  const Mask rest = m & ~low;
  for (Mask sub = rest;; sub = (sub - 1) & rest) {
    const Mask part = sub | low;
    if (part != m && rho[m] == rho[part] + rho[m & ~part]) return false;
    if (sub == 0) break;
  }
  return true;
}

SetFamily facet_family(const RankFunction& rho) {
  require_valid_rank(rho, true);
  std::vector<Mask> out;
  for (Mask m = 1; m <= full_mask(rho.d()); ++m) {
    const Subset x(rho.d(), m);
    if (is_closed(rho, x) && is_inseparable(rho, x)) out.push_back(m);
  }
  return {rho.d(), std::move(out)};
}

RankFunction rank_from_sublattice(const SetFamily& lattice) {
  if (!is_sublattice(lattice)) {
    throw InputError("family " + lattice.to_string() + " is not a sublattice");
  }
  const int d = lattice.d();
  std::vector<std::int64_t> values(std::size_t{1} << d, 0);
  for (Mask x = 1; x <= full_mask(d); ++x) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (Mask a : lattice.masks()) {
      if ((x & a) == x) best = std::min<std::int64_t>(best, std::popcount(a) + 1);
    }
    values[x] = best;
  }
  RankFunction rho(d, std::move(values));
  const auto verdict = validate_rank(rho);
  if (!verdict.ok || !verdict.loopless) {
    throw InternalError("sublattice construction produced invalid rank: " + verdict.describe());
  }
  return rho;
}

Presentation::Presentation(int d, std::vector<Mask> blocks) : d_(d), blocks_(std::move(blocks)) {
  check_ground_size(d);
  for (Mask b : blocks_) {
    if (b == 0) throw InputError("presentation blocks must be nonempty");
    if (b > full_mask(d)) throw InputError("presentation block out of range");
  }
  std::sort(blocks_.begin(), blocks_.end(), canonical_less);
}

std::string Presentation::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (k != 0) out += ',';
    out += Subset(d_, blocks_[k]).to_string();
  }
  return out + "}";
}

Presentation chain_presentation(int d) {
  check_ground_size(d);
  std::vector<Mask> blocks{full_mask(d)};
  for (int k = d; k >= 1; --k) blocks.push_back(full_mask(k));
  return {d, std::move(blocks)};
}

RankFunction transversal_rank(const Presentation& presentation) {
  const int d = presentation.d();
  std::vector<std::int64_t> values(std::size_t{1} << d, 0);
  for (Mask x = 1; x <= full_mask(d); ++x) {
    values[x] = std::count_if(presentation.blocks().begin(), presentation.blocks().end(),
                              [x](Mask b) { return (b & x) != 0; });
  }
  return {d, std::move(values)};
}

PointSet transversal_points(const Presentation& presentation) {
  const int d = presentation.d();
  const auto& blocks = presentation.blocks();
  double combos = 1;
  for (Mask b : blocks) combos *= std::popcount(b) + 1;
  if (combos > static_cast<double>(kEnumerationBudget)) {
    throw CapabilityError("transversal presentation too large to materialize");
  }

  std::set<IntVector> seen;
  IntVector u(d, 0);
  // Each block contributes nothing or one unit vector from the block.
  auto assign = [&](auto&& self, std::size_t j) -> void {
    if (j == blocks.size()) {
      seen.insert(u);
      return;
    }
    self(self, j + 1);
    for (int i = 0; i < d; ++i) {
      if ((blocks[j] >> i) & 1U) {
        ++u[i];
        self(self, j + 1);
        --u[i];
      }
    }
  };
  assign(assign, 0);

  // Down-closure by repeatedly removing unit vectors.
  std::vector<IntVector> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    IntVector w = std::move(frontier.back());
    frontier.pop_back();
    for (int i = 0; i < d; ++i) {
      if (w[i] == 0) continue;
      --w[i];
      if (seen.insert(w).second) frontier.push_back(w);
      ++w[i];
    }
  }
  return {d, std::vector<IntVector>(seen.begin(), seen.end())};
}

}  // namespace reflexpm
