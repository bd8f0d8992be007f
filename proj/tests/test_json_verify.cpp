#include <doctest.h>

#include "orbitkit/errors.hpp"
#include "orbitkit/json_io.hpp"
#include "orbitkit/starprod.hpp"
#include "orbitkit/verify.hpp"
#include "orbitkit/xcomplex.hpp"

using namespace orbitkit;

TEST_CASE("compact symbol JSON") {
  auto p = symbol_from_json(read_json_file(ORBITKIT_TEST_DATA "/symbol_p.json"));
  auto eq = symbol_from_json(read_json_file(ORBITKIT_TEST_DATA "/symbol_eq.json"));
  CHECK(p == Symbol::variable(chart_affr(), "p"));
  CHECK(eq == Symbol::exponential(chart_affr(), "q", Rational(1)));
  auto w = star(p, eq);
  CHECK(symbol_from_json(symbol_to_compact_json(w)) == w);
  CHECK(symbol_from_json(symbol_to_json(w)) == w);
  // four-variable chart inferred from the length of p
  auto z = symbol_from_json(Json::parse(R"({"terms":[{"c":["1/2",0],"p":[1,0],"q":[0,0],"exp":[0,"1/2"]}]})"));
  CHECK(z.chart()->name == "affC");
  CHECK(symbol_from_json(symbol_to_compact_json(z)) == z);
  CHECK_THROWS_AS(symbol_from_json(Json::parse(R"({"terms":[{"c":[1],"p":[1]}]})")), Error);
  CHECK_THROWS_AS(symbol_from_json(Json::parse(R"({"terms":[{"c":[1,0],"p":[1,0,0]}]})")), Error);
  CHECK_THROWS_AS(symbol_from_json(Json::parse(R"({"terms":[{"c":[1,0],"p":[-1]}]})")), Error);
}

TEST_CASE("algebra JSON") {
  auto g = lie_algebra_from_json(lie_algebra_to_json(*aff_c()));
  CHECK(*g == *aff_c());
  CHECK(lie_algebra_from_json(Json("affR")) == aff_r());
  auto c2 = fd_algebra_from_json(read_json_file(ORBITKIT_TEST_DATA "/c2.json"));
  CHECK(c2.is_associative());
  auto h = XComplex(c2, 2, 6).homology();
  CHECK(h.h0 == 2);
  CHECK(h.h1 == 0);
  CHECK_THROWS_AS(fd_algebra_from_json(Json::parse(R"({"labels":["a"],"mult":[[[1,2]]],"unit":[1]})")), Error);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), Error);
}

TEST_CASE("verify selection errors") {
  VerifyConfig c;
  CHECK_THROWS_AS(run_verify(c), Error);
  c.suites = {"nosuch"};
  CHECK_THROWS_AS(run_verify(c), Error);
  c.suites = {"prop31"};
  c.mutation = "bogus";
  CHECK_THROWS_AS(run_verify(c), Error);
  c.mutation = "none";
  c.fourier_ids = {4};
  CHECK_THROWS_AS(run_verify(c), Error);
  CHECK(known_suites().front() == "prop31");
  CHECK(known_suites().size() == 10);
}

TEST_CASE("verify reports failures with module and anchor") {
  VerifyConfig c;
  c.suites = {"prop31"};
  c.algebra = "affR";
  auto ok = run_verify(c);
  CHECK(ok.pass);
  c.mutation = "flip-lambda";
  auto bad = run_verify(c);
  CHECK_FALSE(bad.pass);
  const auto& failures = bad.json.at("suites").at(0).at("failures");
  REQUIRE(failures.size() == 2);
  CHECK(failures.at(0).get<std::string>().rfind("starprod: ", 0) == 0);
  c.suites = {"lhat"};
  c.mutation = "drop-half";
  CHECK_FALSE(run_verify(c).pass);
}

TEST_CASE("verify output is deterministic") {
  VerifyConfig c;
  c.suites = {"reps", "genus", "hodge"};
  c.trials = 20;
  auto a = run_verify(c).json.dump(), b = run_verify(c).json.dump();
  CHECK(a == b);
}
