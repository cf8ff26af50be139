#include "reflexpm/cli.hpp"

#include <chrono>

#include <CLI11.hpp>

#include "reflexpm/classify.hpp"
#include "reflexpm/errors.hpp"
#include "reflexpm/io.hpp"
#include "reflexpm/verify.hpp"

namespace reflexpm::cli {

namespace {

using io::Json;

struct Options {
  int d = 0;
  bool count_only = false;
  std::string format = "jsonl";
  std::string in;
  std::string emit = "all";
  bool close = false;
  std::string rank_file;
  std::string hrep_file;
  bool transversal = false;
  std::int64_t cap = 0;
  std::string report = "none";
  bool all = false;
  int dmax = 6;
};

int cmd_sublattices(const Options& o, std::ostream& out) {
  std::size_t count = 0;
  for_each_sublattice(o.d, [&](const SetFamily& f) {
    ++count;
    if (o.count_only) return;
    if (o.format == "tsv") {
      std::string line;
      for (std::size_t k = 0; k < f.size(); ++k) {
        line += (k ? ";" : "") + Subset(f.d(), f.masks()[k]).to_string();
      }
      out << line << '\n';
    } else {
      out << io::dump(io::to_json(f)) << '\n';
    }
  });
  if (o.count_only) out << count << '\n';
  return kExitOk;
}

// "lemma" is null when there is no rank function to apply it to.
Json reflexivity_json(const HPolytope& h, const Json& lemma) {
  const auto direct = is_reflexive_direct(h);
  Json j{{"lemma", lemma},
         {"direct", direct.reflexive},
         {"lattice_polytope", direct.lattice_polytope},
         {"center", direct.center ? Json(*direct.center) : Json(nullptr)}};
  j["dual_vertices"] = direct.center ? io::to_json(dual_vertices(h, *direct.center)) : Json(nullptr);
  return j;
}

Json reflexivity_json(const RankFunction& rho) {
  return reflexivity_json(independence_hrep(rho, false), is_reflexive_lemma(rho));
}

int cmd_from_sublattice(const Options& o, std::ostream& out) {
  SetFamily family = io::family_from_json(io::read_json_file(o.in));
  if (o.close) family = lattice_closure(family);
  const RankFunction rho = rank_from_sublattice(family);
  if (o.emit == "rank") {
    out << io::dump(io::to_json(rho)) << '\n';
  } else if (o.emit == "hrep") {
    out << io::dump(io::to_json(independence_hrep(rho, true))) << '\n';
  } else if (o.emit == "points") {
    out << io::dump(io::to_json(points_of_rank(rho))) << '\n';
  } else {
    const Json j{{"sublattice", io::to_json(family)},
                 {"rank", io::to_json(rho)},
                 {"hrep", io::to_json(independence_hrep(rho, true))},
                 {"points", io::to_json(points_of_rank(rho))},
                 {"reflexive", reflexivity_json(rho)}};
    out << io::dump(j) << '\n';
    if (!j["reflexive"]["lemma"].get<bool>() || !j["reflexive"]["direct"].get<bool>()) {
      return kExitCheckFailed;
    }
  }
  return kExitOk;
}

int cmd_rank_check(const Options& o, std::ostream& out) {
  const Json doc = io::read_json_file(o.in);
  const RankFunction rho = io::rank_from_json(doc);
  const auto verdict = validate_rank(rho);
  out << io::dump(io::to_json(verdict)) << '\n';
  return verdict.ok ? kExitOk : kExitCheckFailed;
}

int cmd_reflexive(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.hrep_file.empty()) {
    const auto h = io::hpolytope_from_json(io::read_json_file(o.hrep_file));
    out << io::dump(reflexivity_json(h, nullptr)) << '\n';
    return kExitOk;
  }
  const RankFunction rho = io::rank_from_json(io::read_json_file(o.rank_file));
  require_valid_rank(rho, true);
  const Json j = reflexivity_json(rho);
  out << io::dump(j) << '\n';
  if (j["lemma"] != j["direct"]) {
    err << "reflexivity verdicts disagree for " << io::dump(io::to_json(rho)) << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  if (o.format == "tsv") out << io::tsv_header() << '\n';
  std::size_t count = 0, inconsistent = 0;
  for_each_classification(o.d, o.transversal, [&](const ClassificationRecord& r) {
    ++count;
    if (!r.consistent()) {
      ++inconsistent;
      err << "inconsistent record: " << io::dump(io::to_json(r)) << '\n';
    }
    out << (o.format == "tsv" ? io::to_tsv(r) : io::dump(io::to_json(r))) << '\n';
  });
  err << count << " records in "
      << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
  return inconsistent == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  const std::int64_t cap = o.cap > 0 ? o.cap : default_sweep_cap(o.d);
  if (o.report == "none") {
    for_each_rank_function(o.d, cap, [&](const RankFunction& r) { out << io::dump(io::to_json(r)) << '\n'; });
    return kExitOk;
  }
  const auto sweep = analyze_sweep(o.d, cap);
  int code = kExitOk;
  if (o.report == "uniqueness" || o.report == "all") {
    if (o.d > kMaxSublatticeGroundSize) throw CapabilityError("uniqueness report needs d <= 4");
    const auto report = uniqueness_report(sweep, o.d);
    for (const auto& [family, ranks] : report.groups) {
      Json rs = Json::array();
      for (const auto& r : ranks) rs.push_back(r.values());
      out << io::dump(Json{{"report", "uniqueness-group"},
                           {"family", io::to_json(family)["sets"]},
                           {"ranks", rs}})
          << '\n';
    }
    for (const auto& c : report.checks) {
      out << io::dump(Json{{"report", "uniqueness"},
                           {"sublattice", io::to_json(c.sublattice)["sets"]},
                           {"group_size", c.group_size},
                           {"equals_construction", c.equals_construction},
                           {"ok", c.ok()}})
          << '\n';
    }
    if (!report.ok()) {
      err << "uniqueness check failed\n";
      code = kExitCheckFailed;
    }
  }
  if (o.report == "theorem-a" || o.report == "all") {
    std::size_t negative = 0;
    const auto findings = sublattice_audit(sweep);
    for (const auto& f : findings) {
      Json j{{"report", "theorem-a"}};
      j.update(io::to_json(f));
      out << io::dump(j) << '\n';
      if (!f.family_is_sublattice_with_empty) {
        ++negative;
        err << "NEGATIVE FINDING: rank " << io::dump(Json(f.rank.values())) << " is reflexive but "
            << f.family.to_string() << " plus the empty set is not a sublattice\n";
      }
    }
    err << "theorem-a audit: " << findings.size() << " reflexive rank functions, " << negative
        << " negative findings\n";
  }
  return code;
}

int cmd_transversal(const Options& o, std::ostream& out) {
  const RankFunction rho = io::rank_from_json(io::read_json_file(o.rank_file));
  const std::int64_t n = rho[full_mask(rho.d())];
  if (o.all) {
    for (const auto& p : find_all_transversals(rho, n)) out << io::dump(io::to_json(p)) << '\n';
    return kExitOk;
  }
  const auto found = find_transversal(rho, n);
  out << (found ? io::dump(io::to_json(*found)) : std::string("null")) << '\n';
  return kExitOk;
}

int cmd_verify_paper(const Options& o, std::ostream& out, std::ostream& err) {
  SuiteOptions options;
  options.chain_dmax = o.dmax;
  bool all_passed = true;
  run_suite(options, [&](const CriterionResult& r) {
    for (const auto& c : r.checks) {
      out << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
      if (!c.detail.empty()) out << " (" << c.detail << ")";
      out << '\n';
    }
    out << (r.passed() ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << '\n';
    err << "[" << r.id << "] " << r.seconds << " s (limit " << r.limit_seconds << " s)\n";
    all_passed = all_passed && r.passed();
  });
  return all_passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reflexive independence polytopes of discrete polymatroids"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"jsonl", "tsv"};

  auto* sub = app.add_subcommand("sublattices", "Enumerate sublattices of 2^[d] (d <= 4)");
  sub->add_option("--d", o.d, "Ground set size")->required()->check(CLI::Range(1, kMaxGroundSize));
  sub->add_flag("--count-only", o.count_only, "Print only the number of sublattices");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));

  auto* from = app.add_subcommand("from-sublattice", "Build the rank function, polytope and points of a sublattice");
  from->add_option("--in", o.in, "SetFamily JSON file")->required();
  from->add_option("--emit", o.emit, "What to print")->check(CLI::IsMember({"rank", "hrep", "points", "all"}));
  from->add_flag("--close", o.close, "Replace the family by its lattice closure first");

  auto* check = app.add_subcommand("rank-check", "Validate a rank function table");
  check->add_option("--in", o.in, "RankFunction JSON file")->required();

  auto* refl = app.add_subcommand("reflexive", "Decide reflexivity of a rank function or H-polytope");
  auto* rank_opt = refl->add_option("--rank", o.rank_file, "RankFunction JSON file");
  auto* hrep_opt = refl->add_option("--hrep", o.hrep_file, "HPolytope JSON file");
  rank_opt->excludes(hrep_opt);
  refl->require_option(1);

  auto* cls = app.add_subcommand("classify", "Classification record for every sublattice of 2^[d]");
  cls->add_option("--d", o.d, "Ground set size (1..4)")->required()->check(CLI::Range(1, kMaxGroundSize));
  cls->add_flag("--transversal", o.transversal, "Search a transversal presentation per record");
  cls->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));

  auto* sweep = app.add_subcommand("sweep", "Exhaustive sweep over small loopless rank functions");
  sweep->add_option("--d", o.d, "Ground set size")->required()->check(CLI::Range(1, kMaxGroundSize));
  sweep->add_option("--cap", o.cap, "Largest rank value (default 2d)")->check(CLI::PositiveNumber);
  sweep->add_option("--report", o.report, "Report to produce")
      ->check(CLI::IsMember({"none", "uniqueness", "theorem-a", "all"}));

  auto* trans = app.add_subcommand("transversal", "Find a transversal presentation of a rank function");
  trans->add_option("--rank", o.rank_file, "RankFunction JSON file")->required();
  trans->add_flag("--all", o.all, "Print every presentation instead of the first");

  auto* verify = app.add_subcommand("verify-paper", "Run the exhaustive verification suite");
  verify->add_option("--dmax", o.dmax, "Largest d for the chain identity (1..8)")->check(CLI::Range(1, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*sub) return cmd_sublattices(o, out);
    if (*from) return cmd_from_sublattice(o, out);
    if (*check) return cmd_rank_check(o, out);
    if (*refl) return cmd_reflexive(o, out, err);
    if (*cls) return cmd_classify(o, out, err);
    if (*sweep) return cmd_sweep(o, out, err);
    if (*trans) return cmd_transversal(o, out);
    if (*verify) return cmd_verify_paper(o, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const CapabilityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n' << e.witness() << '\n';
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitBadInput;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"reflexpm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace reflexpm::cli
