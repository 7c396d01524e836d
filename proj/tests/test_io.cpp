#include "doctest.h"

#include "nilgrowth/heisenberg.hpp"
#include "nilgrowth/report.hpp"
#include "nilgrowth/suites.hpp"

using namespace nilgrowth;

TEST_CASE("LieElement JSON round trip") {
  LieElement x = heis(rat(3, 2), Rat(-4), rat(7, 5));
  Json j = lie_element_to_json(x);
  CHECK(j["basis_id"] == "free(k=2,s=2)");
  LieElement back = lie_element_from_json(j);
  CHECK(back == x);
}

TEST_CASE("JSON summaries round trip unchanged through the parser") {
  Budget bud;
  SuiteResult r = suite_folner(bud);
  std::string s = json_to_string(r.summary);
  Json parsed = Json::parse(s);
  CHECK(json_to_string(parsed) == s);
}

TEST_CASE("CSV emission is deterministic and exact") {
  Budget bud;
  SuiteResult a = suite_minkowski(7, 25, 1, 3, bud);
  SuiteResult b = suite_minkowski(7, 25, 1, 3, bud);
  CHECK(a.csv == b.csv);
  CHECK(a.csv.find("prng=xoshiro256**-v1") != std::string::npos);
  CHECK(a.csv.find("seed=7") != std::string::npos);
  SuiteResult c = suite_minkowski(8, 25, 1, 3, bud);
  CHECK(a.csv != c.csv);
}

TEST_CASE("exploration CSV carries the schema and exact covolumes") {
  Budget bud;
  auto rep = explore(IntegerLattice::standard(2),
                     {ConvexBody::box({rat(3, 2), rat(1, 4)}),
                      ConvexBody::box({rat(3, 2), rat(3, 2)})},
                     bud);
  std::string csv = exploration_csv(rep);
  CHECK(csv.rfind("scale,rank,covolume,changed,index_from_previous\n", 0) == 0);
  CHECK(csv.find("1,2,1,1,inf") != std::string::npos);
}

TEST_CASE("empty reports come out header-only") {
  ExplorationReport empty;
  CHECK(exploration_csv(empty) ==
        "scale,rank,covolume,changed,index_from_previous\n");
  ScaleReport none;
  CHECK(scale_report_csv(none) == "scale,canonical_hash,changed\n");
}

TEST_CASE("hall basis CSV lists elements and structure rows") {
  auto basis = HallBasis::make(2, 2);
  std::string csv = hall_basis_csv(*basis);
  CHECK(csv.find("0,1,x1") != std::string::npos);
  CHECK(csv.find("2,2,[x1,x2]") != std::string::npos);
  CHECK(csv.find("0,1,2,1") != std::string::npos);  // [e0,e1] = e2
}

TEST_CASE("doubles print with six significant digits") {
  CHECK(format_double(3.14159265358979) == "3.14159");
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("zassenhaus JSON dump carries the printed terms") {
  std::string payload = zassenhaus_terms_json(3);
  Json j = Json::parse(payload);
  CHECK(j["step"] == 3);
  CHECK(j["terms"][0][0]["coefficient"] == "-1/2");
  CHECK(j["terms"][0][0]["monomial"] == "[X,Y]");
}
