#include "reflexpm/classify.hpp"

#include <chrono>
#include <cmath>

#include "reflexpm/errors.hpp"

namespace reflexpm {

bool is_reflexive_lemma(const RankFunction& rho) {
  const SetFamily family = facet_family(rho);
  for (Mask m : family.masks()) {
    if (rho[m] != std::popcount(m) + 1) return false;
  }
  return true;
}

bool ClassificationRecord::consistent() const {
  return reflexive_lemma && reflexive_direct && roundtrip_ok && witness_law_ok &&
         center == IntVector(sublattice.d(), 1);
}

ClassificationRecord classify_sublattice(const SetFamily& lattice, bool with_transversal) {
  const auto start = std::chrono::steady_clock::now();
  ClassificationRecord rec{.sublattice = lattice, .rank = rank_from_sublattice(lattice)};
  const RankFunction& rho = rec.rank;
  const int d = rho.d();

  rec.point_count = points_of_rank(rho).size();
  const SetFamily family = facet_family(rho);
  rec.facet_count = family.size();
  rec.reflexive_lemma = is_reflexive_lemma(rho);
  const auto direct = is_reflexive_direct(independence_hrep(rho, false));
  rec.reflexive_direct = direct.reflexive;
  rec.center = direct.center;
  rec.roundtrip_ok = family == lattice.without_empty();

  rec.witness_law_ok = true;
  for (Mask m = 1; m <= full_mask(d) && rec.witness_law_ok; ++m) {
    if (family.contains(m)) continue;
    const Subset x(d, m);
    const auto w = non_facet_witness(rho, x);
    rec.witness_law_ok = rho[m] > x.size() + 1 && w.inside && w.modulus > Rational(x.size() + 1);
  }
  if (with_transversal) rec.transversal = find_transversal(rho, rho[full_mask(d)]);
  rec.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

void for_each_classification(int d, bool with_transversal,
                             const std::function<void(const ClassificationRecord&)>& visit) {
  for_each_sublattice(d, [&](const SetFamily& l) { visit(classify_sublattice(l, with_transversal)); });
}

std::vector<ClassificationRecord> classify_sublattices(int d, bool with_transversal) {
  std::vector<ClassificationRecord> out;
  for_each_classification(d, with_transversal,
                          [&](const ClassificationRecord& r) { out.push_back(r); });
  return out;
}

void for_each_rank_function(int d, std::int64_t cap,
                            const std::function<void(const RankFunction&)>& visit) {
  check_ground_size(d);
  if (cap < d + 1) {
    throw InputError("sweep cap " + std::to_string(cap) + " below d + 1 = " + std::to_string(d + 1));
  }
  if (cap > kMaxRankValue ||
      std::pow(static_cast<double>(cap + 1), static_cast<double>(full_mask(d))) > kSweepBudget) {
    throw CapabilityError("sweep over d=" + std::to_string(d) + " with cap " + std::to_string(cap) +
                          " exceeds the candidate budget");
  }
  const Mask full = full_mask(d);
  std::vector<std::int64_t> values(std::size_t{full} + 1, 0);

  // Masks are assigned in increasing order, so every proper subset of the
  // current mask already has its value and the local monotonicity and
  // submodularity conditions can be checked on assignment.
  auto admissible = [&](Mask m, std::int64_t t) {
    if (std::popcount(m) == 1 && t < 1) return false;
    for (int i = 0; i < d; ++i) {
      const Mask bi = Mask{1} << i;
      if ((m & bi) == 0) continue;
      if (values[m & ~bi] > t) return false;
      for (int j = i + 1; j < d; ++j) {
        const Mask bj = Mask{1} << j;
        if ((m & bj) == 0) continue;
        if (values[m & ~bi] + values[m & ~bj] < t + values[m & ~bi & ~bj]) return false;
      }
    }
    return true;
  };
  auto recurse = [&](auto&& self, Mask m) -> void {
    if (m > full) {
      visit(RankFunction(d, values));
      return;
    }
    for (std::int64_t t = 0; t <= cap; ++t) {
      if (!admissible(m, t)) continue;
      values[m] = t;
      self(self, m + 1);
    }
    values[m] = 0;
  };
  recurse(recurse, 1);
}

std::vector<RankFunction> sweep_rank_functions(int d, std::int64_t cap) {
  std::vector<RankFunction> out;
  for_each_rank_function(d, cap, [&](const RankFunction& r) { out.push_back(r); });
  return out;
}

std::vector<SweepEntry> analyze_sweep(int d, std::int64_t cap) {
  std::vector<SweepEntry> out;
  for_each_rank_function(d, cap, [&](const RankFunction& rho) {
    out.push_back({rho, facet_family(rho), is_reflexive_lemma(rho),
                   is_reflexive_direct(independence_hrep(rho, false)).reflexive});
  });
  return out;
}

bool UniquenessReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok(); });
}

UniquenessReport uniqueness_report(const std::vector<SweepEntry>& sweep, int d) {
  UniquenessReport report;
  for (const auto& e : sweep) {
    if (e.reflexive_direct) report.groups[e.family].push_back(e.rank);
  }
  for_each_sublattice(d, [&](const SetFamily& l) {
    UniquenessReport::Check check{l};
    if (auto it = report.groups.find(l.without_empty()); it != report.groups.end()) {
      check.group_size = it->second.size();
      check.equals_construction = it->second.front() == rank_from_sublattice(l);
    }
    report.checks.push_back(std::move(check));
  });
  return report;
}

UniquenessReport uniqueness_report(int d, std::int64_t cap) {
  return uniqueness_report(analyze_sweep(d, cap), d);
}

std::vector<SweepFinding> sublattice_audit(const std::vector<SweepEntry>& sweep) {
  std::vector<SweepFinding> out;
  for (const auto& e : sweep) {
    if (!e.reflexive_direct) continue;
    out.push_back({e.rank, e.family, true, is_sublattice(e.family.with_empty())});
  }
  return out;
}

std::vector<SweepFinding> sublattice_audit(int d, std::int64_t cap) {
  return sublattice_audit(analyze_sweep(d, cap));
}

namespace {

std::vector<Presentation> search_transversals(const RankFunction& rho, std::int64_t n, bool all) {
  const auto verdict = validate_rank(rho);
  if (!verdict.ok) throw InputError("invalid rank function: " + verdict.describe());
  const int d = rho.d();
  const Mask full = full_mask(d);
  if (n != rho[full]) {
    throw InputError("block count " + std::to_string(n) + " must equal rho([d]) = " +
                     std::to_string(rho[full]));
  }
  std::vector<Mask> kinds;
  for (Mask m = 1; m <= full; ++m) kinds.push_back(m);
  std::sort(kinds.begin(), kinds.end(), canonical_less);

  // Multisets of size n over 2^d - 1 kinds: C(2^d - 2 + n, n).
  double space = 1;
  for (std::int64_t k = 1; k <= n; ++k) {
    space = space * static_cast<double>(static_cast<std::int64_t>(kinds.size()) - 1 + k) /
            static_cast<double>(k);
  }
  if (space > static_cast<double>(kEnumerationBudget)) {
    throw CapabilityError("transversal search space exceeds budget");
  }

  std::vector<Presentation> found;
  std::vector<Mask> chosen;
  // counts[X] = number of chosen blocks meeting X; only ever increases.
  std::vector<std::int64_t> counts(std::size_t{full} + 1, 0);
  auto recurse = [&](auto&& self, std::size_t from) -> bool {
    if (static_cast<std::int64_t>(chosen.size()) == n) {
      if (counts == rho.values()) {
        found.emplace_back(d, chosen);
        return !all;
      }
      return false;
    }
    for (std::size_t k = from; k < kinds.size(); ++k) {
      const Mask b = kinds[k];
      bool ok = true;
      for (Mask x = 1; x <= full; ++x) {
        if ((x & b) != 0 && ++counts[x] > rho[x]) ok = false;
      }
      chosen.push_back(b);
      const bool stop = ok && self(self, k);
      chosen.pop_back();
      for (Mask x = 1; x <= full; ++x) {
        if ((x & b) != 0) --counts[x];
      }
      if (stop) return true;
    }
    return false;
  };
  recurse(recurse, 0);
  return found;
}

}  // namespace

std::optional<Presentation> find_transversal(const RankFunction& rho, std::int64_t n) {
  auto found = search_transversals(rho, n, false);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<Presentation> find_all_transversals(const RankFunction& rho, std::int64_t n) {
  return search_transversals(rho, n, true);
}

HPolytope reflexive_non_polymatroid_fixture() {
  return {3,
          {{{-1, 0, 0}, 0},
           {{0, -1, 0}, 0},
           {{0, 0, -1}, 0},
           {{1, 1, 0}, 3},
           {{0, 1, 1}, 3},
           {{1, 1, 1}, 4}}};
}

bool NonPolymatroidReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.passed; });
}

NonPolymatroidReport verify_reflexive_non_polymatroid() {
  NonPolymatroidReport report;
  const HPolytope h = reflexive_non_polymatroid_fixture();
  const IntVector u{0, 3, 0};
  const IntVector v{1, 2, 1};

  report.reflexivity = is_reflexive_direct(h);
  const bool centered = report.reflexivity.center == IntVector{1, 1, 1};
  report.checks.push_back({"reflexive with center (1,1,1)", report.reflexivity.reflexive && centered,
                           report.reflexivity.center ? "center found" : "no center"});

  const PointSet points(3, lattice_points(h));
  report.polymatroid = is_discrete_polymatroid(points);
  report.checks.push_back({"lattice points are not a discrete polymatroid", !report.polymatroid.ok,
                           report.polymatroid.describe()});
  report.checks.push_back({"exchange fails for u=(0,3,0), v=(1,2,1)", violates_exchange(points, u, v),
                           std::to_string(points.size()) + " lattice points"});

  report.bases = bases(points);
  auto is_basis = [&](const IntVector& w) {
    return std::find(report.bases.bases.begin(), report.bases.bases.end(), w) != report.bases.bases.end();
  };
  report.checks.push_back({"(0,3,0) and (1,2,1) are maximal", is_basis(u) && is_basis(v), ""});
  const bool moduli = modulus(u) == 3 && modulus(v) == 4 && report.bases.moduli.contains(3) &&
                      report.bases.moduli.contains(4);
  report.checks.push_back({"basis moduli include 3 and 4", moduli,
                           std::to_string(report.bases.moduli.size()) + " distinct moduli"});
  return report;
}

bool verify_chain_transversal(int d) {
  if (d < 1 || d > 8) throw InputError("chain verification supports 1 <= d <= 8");
  const RankFunction from_lattice = rank_from_sublattice(chain_sublattice(d));
  const RankFunction transversal = transversal_rank(chain_presentation(d));
  if (from_lattice != transversal) return false;
  for (Mask m = 1; m <= full_mask(d); ++m) {
    const int lowest = Subset(d, m).min_element();
    if (from_lattice[m] != d + 2 - lowest) return false;
  }
  return true;
}

}  // namespace reflexpm
