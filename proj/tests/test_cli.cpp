#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "reflexpm/cli.hpp"
#include "reflexpm/io.hpp"

using namespace reflexpm;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(REFLEXPM_TEST_DATA_DIR) + "/" + name; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> result;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("reflexpm_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("sublattice counts") {
  CHECK(call({"sublattices", "--d", "2", "--count-only"}).out == "4\n");
  CHECK(call({"sublattices", "--d", "3", "--count-only"}).out == "29\n");
  const auto listed = call({"sublattices", "--d", "2"});
  CHECK(listed.code == cli::kExitOk);
  REQUIRE(lines(listed.out).size() == 4);
  for (const auto& l : lines(listed.out)) CHECK(is_sublattice(io::family_from_json(io::parse_json(l))));
  CHECK(call({"sublattices", "--d", "5"}).code == cli::kExitBadInput);
}

TEST_CASE("from-sublattice on the d=3 chain") {
  const auto r = call({"from-sublattice", "--in", data("chain3.json"), "--emit", "all"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = io::parse_json(r.out);
  CHECK(j.at("rank").at("values") == io::Json::parse("[0,4,3,4,2,4,3,4]"));
  CHECK(j.at("reflexive").at("lemma") == true);
  CHECK(j.at("reflexive").at("direct") == true);
  CHECK(j.at("reflexive").at("center") == io::Json::parse("[1,1,1]"));
  // Emitted documents are valid inputs for the readers.
  CHECK(io::rank_from_json(j.at("rank")) == RankFunction(3, {0, 4, 3, 4, 2, 4, 3, 4}));
  CHECK(io::hpolytope_from_json(j.at("hrep")).d() == 3);
  CHECK(io::points_from_json(j.at("points")).size() == points_of_rank(io::rank_from_json(j.at("rank"))).size());
  // Repeated runs are byte-identical.
  CHECK(call({"from-sublattice", "--in", data("chain3.json"), "--emit", "all"}).out == r.out);

  const auto rank_only = call({"from-sublattice", "--in", data("chain3.json"), "--emit", "rank"});
  const auto path = write_temp("rank.json", rank_only.out);
  CHECK(call({"rank-check", "--in", path}).code == cli::kExitOk);
  CHECK(call({"reflexive", "--rank", path}).code == cli::kExitOk);
  const auto hrep = call({"from-sublattice", "--in", data("chain3.json"), "--emit", "hrep"});
  CHECK(call({"reflexive", "--hrep", write_temp("hrep.json", hrep.out)}).code == cli::kExitOk);
}

TEST_CASE("non-sublattice input") {
  CHECK(call({"from-sublattice", "--in", data("not_sublattice.json")}).code == cli::kExitBadInput);
  const auto closed = call({"from-sublattice", "--in", data("not_sublattice.json"), "--close", "--emit", "rank"});
  CHECK(closed.code == cli::kExitOk);
  CHECK(io::parse_json(closed.out) == io::Json::parse(R"({"d":2,"values":[0,2,2,3]})"));
}

TEST_CASE("rank-check and reflexive verdicts") {
  CHECK(call({"rank-check", "--in", data("chain2_rank.json")}).code == cli::kExitOk);
  const auto bad = call({"rank-check", "--in", data("non_submodular_rank.json")});
  CHECK(bad.code == cli::kExitCheckFailed);
  CHECK(io::parse_json(bad.out).at("ok") == false);
  const auto fixture = call({"reflexive", "--hrep", data("non_polymatroid_hrep.json")});
  CHECK(fixture.code == cli::kExitOk);
  const auto verdict = io::parse_json(fixture.out);
  CHECK(verdict.at("direct") == true);
  CHECK(verdict.at("lemma").is_null());
  CHECK(verdict.at("center") == io::Json::parse("[1,1,1]"));
}

TEST_CASE("classify, sweep and transversal") {
  const auto tsv = call({"classify", "--d", "2", "--format", "tsv"});
  CHECK(tsv.code == cli::kExitOk);
  CHECK(lines(tsv.out).size() == 5);
  CHECK(lines(tsv.out).front() == io::tsv_header());
  const auto jsonl = call({"classify", "--d", "2", "--transversal"});
  for (const auto& l : lines(jsonl.out)) {
    const auto j = io::parse_json(l);
    CHECK(j.at("roundtrip_ok") == true);
    CHECK(j.at("reflexive_lemma") == j.at("reflexive_direct"));
    CHECK_FALSE(j.at("transversal").is_null());
  }
  CHECK(lines(call({"sweep", "--d", "2"}).out).size() == 26);
  CHECK(call({"sweep", "--d", "2", "--cap", "2"}).code == cli::kExitBadInput);
  CHECK(call({"sweep", "--d", "2", "--report", "all"}).code == cli::kExitOk);
  const auto t = call({"transversal", "--rank", data("chain2_rank.json")});
  CHECK(io::parse_json(t.out) == io::Json::parse(R"({"d":2,"blocks":[[1],[1,2],[1,2]]})"));
}

TEST_CASE("argument errors and help") {
  CHECK(call({"--help"}).code == cli::kExitOk);
  CHECK(call({}).code == cli::kExitBadInput);
  CHECK(call({"sublattices", "--d", "2", "--bogus"}).code == cli::kExitBadInput);
  CHECK(call({"from-sublattice", "--in", "/nonexistent.json"}).code == cli::kExitBadInput);
  CHECK(call({"reflexive"}).code == cli::kExitBadInput);
}

TEST_CASE("verify-paper succeeds at small depth") {
  const auto r = call({"verify-paper", "--dmax", "3"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
