#include <doctest.h>

#include <algorithm>
#include <random>

#include "reflexpm/errors.hpp"
#include "reflexpm/io.hpp"

using namespace reflexpm;
using io::Json;

TEST_CASE("documented file formats") {
  CHECK(io::dump(io::to_json(chain_sublattice(3))) == R"({"d":3,"sets":[[],[3],[2,3],[1,2,3]]})");
  CHECK(io::dump(io::to_json(RankFunction(2, {0, 3, 2, 3}))) == R"({"d":2,"values":[0,3,2,3]})");
  CHECK(io::dump(io::to_json(chain_presentation(3))) == R"({"d":3,"blocks":[[1],[1,2],[1,2,3],[1,2,3]]})");
  CHECK(io::dump(io::to_json(PointSet(1, {{2}, {0}, {1}}))) == R"({"d":1,"points":[[0],[1],[2]]})");
  CHECK(io::dump(io::to_json(RationalVector{Rational(3, 6), Rational(-2)})) == R"(["1/2","-2"])");
  CHECK(io::dump(io::to_json(HPolytope(2, {{{1, 1}, 3}}))) == R"({"d":2,"ineqs":[{"a":[1,1],"b":3}]})");
}

TEST_CASE("readers accept what writers emit") {
  std::mt19937 gen(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + static_cast<int>(gen() % 4);
    std::vector<Mask> masks;
    for (int k = 0; k < 4; ++k) masks.push_back(gen() % (full_mask(d) + 1));
    const SetFamily f(d, masks);
    CHECK(io::family_from_json(io::parse_json(io::dump(io::to_json(f)))) == f);

    std::vector<Mask> blocks{full_mask(d)};
    for (int k = 0; k < 3; ++k) blocks.push_back(1 + gen() % full_mask(d));
    const Presentation p(d, blocks);
    CHECK(io::presentation_from_json(io::parse_json(io::dump(io::to_json(p)))) == p);

    const auto rho = transversal_rank(p);
    CHECK(io::rank_from_json(io::parse_json(io::dump(io::to_json(rho)))) == rho);
    const auto pts = points_of_rank(rho);
    CHECK(io::points_from_json(io::parse_json(io::dump(io::to_json(pts)))) == pts);
    const auto h = independence_hrep(rho, false);
    CHECK(io::hpolytope_from_json(io::parse_json(io::dump(io::to_json(h)))) == h);
  }
}

TEST_CASE("malformed documents are input errors") {
  CHECK_THROWS_AS(io::parse_json("{"), InputError);
  CHECK_THROWS_AS(io::family_from_json(Json{{"sets", Json::array()}}), InputError);
  CHECK_THROWS_AS(io::family_from_json(io::parse_json(R"({"d":2,"sets":[[3]]})")), InputError);
  CHECK_THROWS_AS(io::family_from_json(io::parse_json(R"({"d":2,"sets":"x"})")), InputError);
  CHECK_THROWS_AS(io::rank_from_json(io::parse_json(R"({"d":2,"values":[0,1]})")), InputError);
  CHECK_THROWS_AS(io::rank_from_json(io::parse_json(R"({"d":0,"values":[0]})")), InputError);
  CHECK_THROWS_AS(io::presentation_from_json(io::parse_json(R"({"d":2,"blocks":[[]]})")), InputError);
  CHECK_THROWS_AS(io::hpolytope_from_json(io::parse_json(R"({"d":2,"ineqs":[{"a":[1],"b":0}]})")), InputError);
  CHECK_THROWS_AS(io::hpolytope_from_json(io::parse_json(R"({"d":2,"ineqs":[{"a":[1,0]}]})")), InputError);
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("classification record encodings") {
  const auto rec = classify_sublattice(chain_sublattice(2), true);
  const Json j = io::to_json(rec);
  CHECK(io::dump(j) ==
        R"({"sublattice":{"d":2,"sets":[[],[2],[1,2]]},"rank":[0,3,2,3],"point_count":9,"facet_count":2,)"
        R"("reflexive_lemma":true,"reflexive_direct":true,"center":[1,1],"roundtrip_ok":true,)"
        R"("witness_law_ok":true,"transversal":[[1],[1,2],[1,2]]})");
  CHECK(io::to_tsv(rec) == "{};{2};{1,2}\t0,3,2,3\t9\t2\ttrue\ttrue\t1,1\ttrue\t{1};{1,2};{1,2}");
  const std::string header = io::tsv_header();
  const auto header_cols = std::count(header.begin(), header.end(), '\t');
  const std::string row = io::to_tsv(classify_sublattice(chain_sublattice(2), false));
  CHECK(std::count(row.begin(), row.end(), '\t') == header_cols);
  CHECK(row.substr(row.rfind('\t') + 1) == "-");
}
