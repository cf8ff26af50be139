#pragma once

// Exhaustive verification suite. Each criterion runs a finite, exact check
// and is timed against a fixed budget; a criterion passes only when every
// check holds and the budget is met.

#include <functional>
#include <string>
#include <vector>

#include "reflexpm/classify.hpp"
#include "reflexpm/io.hpp"

namespace reflexpm {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool checks_passed = false;
  std::vector<CheckLine> checks = {};
  double seconds = 0;
  double limit_seconds = 0;

  [[nodiscard]] bool passed() const { return checks_passed && seconds < limit_seconds; }
};

struct SuiteOptions {
  int chain_dmax = 6;       // chain/transversal identity, 1..8
  int sublattice_dmax = 4;  // sublattice round-trip, 1..4
  int sweep_dmax = 3;       // exhaustive rank sweeps at cap 2d
};

[[nodiscard]] CriterionResult check_non_polymatroid_fixture();
[[nodiscard]] CriterionResult check_chain_transversal(int dmax);
[[nodiscard]] CriterionResult check_sublattice_roundtrip(int dmax);
[[nodiscard]] CriterionResult check_lemma_equivalence(int dmax);
[[nodiscard]] CriterionResult check_uniqueness(int dmax);
[[nodiscard]] CriterionResult check_oracle_equivalences(int dmax);
[[nodiscard]] CriterionResult check_golden_chain();
[[nodiscard]] CriterionResult check_sublattice_audit();
[[nodiscard]] CriterionResult check_transversal_explorer(int dmax);

/// Everything computed for the d = 2 chain sublattice {{}, {2}, [2]}:
/// rank, points, bases, vertices, facets, center and dual vertices.
[[nodiscard]] io::Json golden_chain_instance();

/// Runs all criteria in order, reporting each as it completes.
std::vector<CriterionResult> run_suite(const SuiteOptions& options,
                                       const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace reflexpm
