#pragma once

// End-to-end classification: the facet-value reflexivity criterion, the
// per-sublattice classification records, exhaustive sweeps over small rank
// functions (uniqueness and sublattice audits), the transversal-presentation
// search, and the two worked fixtures (a reflexive polytope that is not a
// polymatroid polytope, and the chain sublattice).

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reflexpm/polymatroid.hpp"
#include "reflexpm/polytope.hpp"
#include "reflexpm/setfam.hpp"

namespace reflexpm {

/// rho(X) = |X| + 1 for every X in facet_family(rho).
[[nodiscard]] bool is_reflexive_lemma(const RankFunction& rho);

struct ClassificationRecord {
  SetFamily sublattice;
  RankFunction rank;
  std::size_t point_count = 0;
  std::size_t facet_count = 0;
  bool reflexive_lemma = false;
  bool reflexive_direct = false;
  std::optional<IntVector> center = std::nullopt;
  /// facet_family(rank) == sublattice without the empty set.
  bool roundtrip_ok = false;
  /// Every nonempty X off the family has rho(X) > |X| + 1 and its
  /// non-facet witness point lies in the polytope.
  bool witness_law_ok = false;
  std::optional<Presentation> transversal = std::nullopt;
  /// Wall time; diagnostic only, never part of a data stream.
  double elapsed_seconds = 0;

  /// All internal consistency checks hold.
  [[nodiscard]] bool consistent() const;
};

[[nodiscard]] ClassificationRecord classify_sublattice(const SetFamily& lattice, bool with_transversal);

/// One record per sublattice of 2^[d] in canonical order; 1 <= d <= 4.
void for_each_classification(int d, bool with_transversal,
                             const std::function<void(const ClassificationRecord&)>& visit);
[[nodiscard]] std::vector<ClassificationRecord> classify_sublattices(int d, bool with_transversal);

/// Default sweep bound on rank values.
[[nodiscard]] constexpr std::int64_t default_sweep_cap(int d) noexcept { return 2 * d; }

/// Upper bound on (cap + 1)^(2^d - 1) candidate tables.
inline constexpr double kSweepBudget = 1e9;

/// Every valid loopless rank function with all values <= cap, exactly once,
/// in lexicographic order of the value table. Throws InputError when
/// cap < d + 1 and CapabilityError when the candidate space exceeds
/// kSweepBudget.
void for_each_rank_function(int d, std::int64_t cap,
                            const std::function<void(const RankFunction&)>& visit);
[[nodiscard]] std::vector<RankFunction> sweep_rank_functions(int d, std::int64_t cap);

struct SweepEntry {
  RankFunction rank;
  SetFamily family;
  bool reflexive_lemma = false;
  bool reflexive_direct = false;
};

/// Facet family and both reflexivity verdicts for every swept rank function.
[[nodiscard]] std::vector<SweepEntry> analyze_sweep(int d, std::int64_t cap);

struct UniquenessReport {
  /// Directly reflexive swept rank functions grouped by facet family.
  std::map<SetFamily, std::vector<RankFunction>> groups;
  struct Check {
    SetFamily sublattice;
    std::size_t group_size = 0;
    bool equals_construction = false;
    [[nodiscard]] bool ok() const { return group_size == 1 && equals_construction; }
  };
  /// One check per sublattice of 2^[d].
  std::vector<Check> checks;

  [[nodiscard]] bool ok() const;
};

[[nodiscard]] UniquenessReport uniqueness_report(const std::vector<SweepEntry>& sweep, int d);
[[nodiscard]] UniquenessReport uniqueness_report(int d, std::int64_t cap);

struct SweepFinding {
  RankFunction rank;
  SetFamily family;
  bool reflexive = false;
  /// family together with the empty set is a sublattice.
  bool family_is_sublattice_with_empty = false;
};

/// One finding per directly reflexive swept rank function.
[[nodiscard]] std::vector<SweepFinding> sublattice_audit(const std::vector<SweepEntry>& sweep);
[[nodiscard]] std::vector<SweepFinding> sublattice_audit(int d, std::int64_t cap);

/// Searches multisets of n nonempty blocks in canonical order for a
/// presentation whose transversal rank equals rho; n must equal rho([d]).
/// Throws CapabilityError when the multiset space exceeds kEnumerationBudget.
[[nodiscard]] std::optional<Presentation> find_transversal(const RankFunction& rho, std::int64_t n);
[[nodiscard]] std::vector<Presentation> find_all_transversals(const RankFunction& rho, std::int64_t n);

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The polytope x >= 0, x1+x2 <= 3, x2+x3 <= 3, x1+x2+x3 <= 4.
[[nodiscard]] HPolytope reflexive_non_polymatroid_fixture();

struct NonPolymatroidReport {
  std::vector<CheckLine> checks;
  ReflexivityReport reflexivity;
  PolymatroidVerdict polymatroid;
  BasisReport bases;
  [[nodiscard]] bool ok() const;
};

/// Reflexive with center (1,1,1); lattice points fail the exchange axiom
/// at u = (0,3,0), v = (1,2,1); both are maximal with moduli 3 and 4.
[[nodiscard]] NonPolymatroidReport verify_reflexive_non_polymatroid();

/// The chain construction equals the transversal rank of
/// {[d],[d],[d-1],...,[1]} and both equal d + 2 - min(X); 1 <= d <= 8.
[[nodiscard]] bool verify_chain_transversal(int d);

}  // namespace reflexpm
