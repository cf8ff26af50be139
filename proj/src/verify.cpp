#include "reflexpm/verify.hpp"

#include <chrono>

#include "reflexpm/errors.hpp"

namespace reflexpm {

namespace {

class Timer {
 public:
  [[nodiscard]] double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Wraps a criterion body: times it, collects check lines, and converts
// library errors into a failed check rather than aborting the suite.
CriterionResult run_criterion(int id, std::string name, double limit,
                              const std::function<void(std::vector<CheckLine>&)>& body) {
  CriterionResult r{.id = id, .name = std::move(name), .limit_seconds = limit};
  Timer timer;
  try {
    body(r.checks);
  } catch (const Error& e) {
    r.checks.push_back({"completed without error", false, e.what()});
  }
  r.seconds = timer.seconds();
  r.checks_passed = !r.checks.empty() &&
                    std::all_of(r.checks.begin(), r.checks.end(), [](const CheckLine& c) { return c.passed; });
  return r;
}

std::string rank_text(const RankFunction& rho) { return io::dump(io::Json(rho.values())); }

}  // namespace

CriterionResult check_non_polymatroid_fixture() {
  return run_criterion(1, "reflexive polytope that is not a polymatroid polytope", 1.0,
                       [](std::vector<CheckLine>& checks) {
                         const auto report = verify_reflexive_non_polymatroid();
                         checks.insert(checks.end(), report.checks.begin(), report.checks.end());
                       });
}

CriterionResult check_chain_transversal(int dmax) {
  return run_criterion(2, "chain construction equals transversal rank d + 2 - min(X)", 1.0,
                       [dmax](std::vector<CheckLine>& checks) {
                         for (int d = 1; d <= dmax; ++d) {
                           checks.push_back({"chain d=" + std::to_string(d), verify_chain_transversal(d), ""});
                         }
                       });
}

CriterionResult check_sublattice_roundtrip(int dmax) {
  return run_criterion(3, "sublattice construction round-trip and reflexivity", 60.0,
                       [dmax](std::vector<CheckLine>& checks) {
                         for (int d = 1; d <= dmax; ++d) {
                           std::size_t count = 0;
                           std::string failure;
                           const IntVector ones(d, 1);
                           for_each_classification(d, false, [&](const ClassificationRecord& r) {
                             ++count;
                             if (!failure.empty()) return;
                             const auto interior =
                                 interior_lattice_points(independence_hrep(r.rank, true));
                             if (!r.consistent() || interior != std::vector<IntVector>{ones}) {
                               failure = r.sublattice.to_string();
                             }
                           });
                           checks.push_back({"all sublattices at d=" + std::to_string(d), failure.empty(),
                                             failure.empty() ? std::to_string(count) + " sublattices"
                                                             : "fails at " + failure});
                         }
                       });
}

CriterionResult check_lemma_equivalence(int dmax) {
  return run_criterion(4, "facet-value criterion agrees with direct reflexivity", 120.0,
                       [dmax](std::vector<CheckLine>& checks) {
                         for (int d = 1; d <= dmax; ++d) {
                           std::size_t total = 0, reflexive = 0;
                           std::string failure;
                           for_each_rank_function(d, default_sweep_cap(d), [&](const RankFunction& rho) {
                             ++total;
                             const bool lemma = is_reflexive_lemma(rho);
                             const bool direct = is_reflexive_direct(independence_hrep(rho, false)).reflexive;
                             reflexive += direct ? 1 : 0;
                             if (lemma != direct && failure.empty()) failure = rank_text(rho);
                           });
                           checks.push_back({"sweep d=" + std::to_string(d) + " cap " +
                                                 std::to_string(default_sweep_cap(d)),
                                             failure.empty(),
                                             failure.empty() ? std::to_string(total) + " rank functions, " +
                                                                   std::to_string(reflexive) + " reflexive"
                                                             : "disagreement at " + failure});
                         }
                       });
}

CriterionResult check_uniqueness(int dmax) {
  return run_criterion(5, "unique reflexive polymatroid per sublattice", 120.0,
                       [dmax](std::vector<CheckLine>& checks) {
                         for (int d = 1; d <= dmax; ++d) {
                           const auto report = uniqueness_report(d, default_sweep_cap(d));
                           std::string detail = std::to_string(report.checks.size()) + " sublattices";
                           for (const auto& c : report.checks) {
                             if (!c.ok()) {
                               detail = "fails at " + c.sublattice.to_string() + " (group size " +
                                        std::to_string(c.group_size) + ")";
                               break;
                             }
                           }
                           checks.push_back({"uniqueness d=" + std::to_string(d), report.ok(), detail});
                         }
                       });
}

CriterionResult check_oracle_equivalences(int dmax) {
  return run_criterion(6, "point, rank, vertex and basis oracles agree", 120.0,
                       [dmax](std::vector<CheckLine>& checks) {
                         for (int d = 1; d <= dmax; ++d) {
                           std::size_t total = 0;
                           std::string points_fail, rank_fail, vertex_fail, modulus_fail;
                           for_each_rank_function(d, default_sweep_cap(d), [&](const RankFunction& rho) {
                             ++total;
                             const PointSet pts = points_of_rank(rho);
                             const HPolytope h = independence_hrep(rho, false);
                             if (PointSet(d, lattice_points(h)) != pts && points_fail.empty()) {
                               points_fail = rank_text(rho);
                             }
                             if (rank_of_points(pts) != rho && rank_fail.empty()) rank_fail = rank_text(rho);
                             for (const auto& v : vertices(h)) {
                               if (!is_integral(v) && vertex_fail.empty()) vertex_fail = rank_text(rho);
                             }
                             if (bases(pts).moduli.size() != 1 && modulus_fail.empty()) {
                               modulus_fail = rank_text(rho);
                             }
                           });
                           const std::string tag = " d=" + std::to_string(d);
                           const std::string n = std::to_string(total) + " rank functions";
                           auto line = [&](const std::string& what, const std::string& fail) {
                             checks.push_back({what + tag, fail.empty(), fail.empty() ? n : "fails at " + fail});
                           };
                           line("lattice points equal polymatroid points", points_fail);
                           line("rank of points round-trips", rank_fail);
                           line("vertices integral", vertex_fail);
                           line("single basis modulus", modulus_fail);
                         }
                       });
}

io::Json golden_chain_instance() {
  const RankFunction rho = rank_from_sublattice(SetFamily(2, std::vector<Mask>{0, 2, 3}));
  const PointSet pts = points_of_rank(rho);
  const HPolytope h = independence_hrep(rho, false);
  const auto reflexivity = is_reflexive_direct(h);
  io::Json bases_json = io::Json::array();
  for (const auto& b : bases(pts).bases) bases_json.push_back(b);
  return {{"rank", io::to_json(rho)},
          {"point_count", pts.size()},
          {"points", io::to_json(pts)},
          {"bases", bases_json},
          {"vertices", io::to_json(vertices(h))},
          {"facets", io::to_json(irredundant(h))},
          {"center", reflexivity.center ? io::Json(*reflexivity.center) : io::Json(nullptr)},
          {"dual_vertices", reflexivity.center ? io::to_json(dual_vertices(h, *reflexivity.center))
                                               : io::Json(nullptr)}};
}

CriterionResult check_golden_chain() {
  return run_criterion(7, "golden d=2 chain instance", 1.0, [](std::vector<CheckLine>& checks) {
    const auto g = golden_chain_instance();
    auto expect = [&](const std::string& key, const char* text) {
      const auto want = io::Json::parse(text);
      checks.push_back({key, g.at(key) == want, io::dump(g.at(key))});
    };
    expect("rank", R"({"d":2,"values":[0,3,2,3]})");
    expect("point_count", "9");
    expect("bases", "[[1,2],[2,1],[3,0]]");
    expect("vertices", R"([["0","0"],["0","2"],["1","2"],["3","0"]])");
    expect("facets", R"({"d":2,"ineqs":[{"a":[-1,0],"b":0},{"a":[0,-1],"b":0},{"a":[0,1],"b":2},{"a":[1,1],"b":3}]})");
    expect("center", "[1,1]");
    expect("dual_vertices", R"([["-1","0"],["0","-1"],["0","1"],["1","1"]])");
  });
}

CriterionResult check_sublattice_audit() {
  return run_criterion(8, "sublattice audit of reflexive rank functions (d=2, cap 4)", 10.0,
                       [](std::vector<CheckLine>& checks) {
                         const auto sweep = analyze_sweep(2, 4);
                         const auto first = sublattice_audit(sweep);
                         const auto second = sublattice_audit(2, 4);
                         const auto reflexive = static_cast<std::size_t>(std::count_if(
                             sweep.begin(), sweep.end(), [](const SweepEntry& e) { return e.reflexive_direct; }));
                         checks.push_back({"covers every reflexive swept rank function", first.size() == reflexive,
                                           std::to_string(first.size()) + " findings"});
                         bool same = first.size() == second.size();
                         for (std::size_t k = 0; same && k < first.size(); ++k) {
                           same = io::to_json(first[k]) == io::to_json(second[k]);
                         }
                         checks.push_back({"deterministic", same, ""});
                         const RankFunction box(2, {0, 2, 2, 4});
                         const auto it = std::find_if(first.begin(), first.end(),
                                                      [&](const SweepFinding& f) { return f.rank == box; });
                         std::string verdict = "missing";
                         if (it != first.end()) {
                           verdict = "family " + it->family.to_string() + " with empty set is " +
                                     (it->family_is_sublattice_with_empty ? "" : "not ") + "a sublattice";
                         }
                         checks.push_back({"verdict recorded for [0,2,2,4]", it != first.end(), verdict});
                         std::size_t negative = 0;
                         for (const auto& f : first) negative += f.family_is_sublattice_with_empty ? 0 : 1;
                         checks.push_back({"findings archived", true,
                                           std::to_string(negative) + " of " + std::to_string(first.size()) +
                                               " families are not sublattices"});
                       });
}

CriterionResult check_transversal_explorer(int dmax) {
  return run_criterion(9, "transversal presentations of chain rank functions", 60.0,
                       [dmax](std::vector<CheckLine>& checks) {
                         for (int d = 1; d <= dmax; ++d) {
                           const RankFunction rho = rank_from_sublattice(chain_sublattice(d));
                           const auto found = find_transversal(rho, rho[full_mask(d)]);
                           const Presentation pattern = chain_presentation(d);
                           bool ok = false;
                           std::string detail = "none found";
                           if (found) {
                             const bool not_later = !std::lexicographical_compare(
                                 pattern.blocks().begin(), pattern.blocks().end(), found->blocks().begin(),
                                 found->blocks().end(), canonical_less);
                             ok = transversal_rank(*found) == rho && not_later;
                             detail = found->to_string();
                           }
                           checks.push_back({"chain d=" + std::to_string(d), ok, detail});
                         }
                       });
}

std::vector<CriterionResult> run_suite(const SuiteOptions& options,
                                       const std::function<void(const CriterionResult&)>& on_result) {
  if (options.chain_dmax < 1 || options.chain_dmax > 8) throw InputError("chain dmax must be in 1..8");
  if (options.sweep_dmax < 1 || options.sweep_dmax > 3) throw InputError("sweep dmax must be in 1..3");
  std::vector<std::function<CriterionResult()>> criteria{
      [] { return check_non_polymatroid_fixture(); },
      [&] { return check_chain_transversal(options.chain_dmax); },
      [&] { return check_sublattice_roundtrip(options.sublattice_dmax); },
      [&] { return check_lemma_equivalence(options.sweep_dmax); },
      [&] { return check_uniqueness(options.sweep_dmax); },
      [&] { return check_oracle_equivalences(options.sweep_dmax); },
      [] { return check_golden_chain(); },
      [] { return check_sublattice_audit(); },
      [&] { return check_transversal_explorer(options.sweep_dmax); },
  };
  std::vector<CriterionResult> results;
  for (const auto& c : criteria) {
    results.push_back(c());
    if (on_result) on_result(results.back());
  }
  return results;
}

}  // namespace reflexpm
