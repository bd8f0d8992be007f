#include <doctest.h>

#include <cstdlib>
#include <string>

#include "orbitkit/orbitkit.h"

namespace {

struct Result {
  ok_result* r;
  explicit Result(ok_result* p) : r(p) {}
  ~Result() { ok_result_free(r); }
  ok_status status() const { return ok_result_status(r); }
  std::string out() const { return ok_result_output(r); }
  std::string json() const { return ok_result_json(r); }
  std::string error() const { return ok_result_error(r); }
};

struct Cfg {
  ok_config* c = ok_config_new();
  ~Cfg() { ok_config_free(c); }
};

}  // namespace

TEST_CASE("config keys") {
  Cfg c;
  CHECK(ok_config_set(c.c, "seed", "7") == OK_PASS);
  CHECK(ok_config_set(c.c, "seed", "-1") == OK_USAGE);
  CHECK(ok_config_set(c.c, "seed", "x") == OK_USAGE);
  CHECK(ok_config_set(c.c, "output", "xml") == OK_USAGE);
  CHECK(ok_config_set(c.c, "grid_n", "1000") == OK_USAGE);
  CHECK(ok_config_set(c.c, "nope", "1") == OK_USAGE);
  CHECK(ok_config_set(c.c, nullptr, "1") == OK_USAGE);
  CHECK(std::string(ok_version()).size() > 0);
}

TEST_CASE("orbits classify") {
  Cfg c;
  Result r(ok_orbits_classify(c.c, "1", "0"));
  CHECK(r.status() == OK_PASS);
  CHECK(r.out() == "{\n  \"orbit\": {\n    \"point\": 1\n  }\n}\n");
  Result h(ok_orbits_classify(c.c, "0", "-2"));
  CHECK(h.out().find("lower-half-plane") != std::string::npos);
  Result f(ok_orbits_classify(c.c, "1/2", "0"));
  CHECK(f.out().find("\"1/2\"") != std::string::npos);
  Result bad(ok_orbits_classify(c.c, "x", "0"));
  CHECK(bad.status() == OK_USAGE);
  CHECK(!bad.error().empty());
  CHECK(bad.out().empty());
  Result null_cfg(ok_orbits_classify(nullptr, "1", "0"));
  CHECK(null_cfg.status() == OK_USAGE);
}

TEST_CASE("star") {
  Cfg c;
  Result r(ok_star(c.c, R"({"terms":[{"c":[1,0],"p":[1]}]})", R"({"terms":[{"c":[1,0],"exp":[1]}]})", "moyal", nullptr));
  CHECK(r.status() == OK_PASS);
  CHECK(r.json().find("(-1/2i)*e^(q) + p*e^(q)") != std::string::npos);
  Result bad(ok_star(c.c, "{", "{}", "moyal", nullptr));
  CHECK(bad.status() == OK_USAGE);
  Result mode(ok_star(c.c, "{}", "{}", "other", nullptr));
  CHECK(mode.status() == OK_USAGE);
}

TEST_CASE("verify status codes and seed override") {
  Cfg c;
  ok_config_set(c.c, "algebra", "affR");
  Result pass(ok_verify(c.c, "prop31"));
  CHECK(pass.status() == OK_PASS);
  ok_config_set(c.c, "mutation", "flip-lambda");
  Result fail(ok_verify(c.c, "prop31"));
  CHECK(fail.status() == OK_FAIL);
  Result empty(ok_verify(c.c, ""));
  CHECK(empty.status() == OK_USAGE);
  Cfg s;
  ok_config_set(s.c, "seed", "5");
  setenv("ORBITKIT_SEED", "99", 1);
  Result seeded(ok_verify(s.c, "genus"));
  CHECK(seeded.json().find("\"seed\": 99") != std::string::npos);
  setenv("ORBITKIT_SEED", "abc", 1);
  Result bad_env(ok_verify(s.c, "genus"));
  CHECK(bad_env.status() == OK_USAGE);
  unsetenv("ORBITKIT_SEED");
  Result plain(ok_verify(s.c, "genus"));
  CHECK(plain.json().find("\"seed\": 5") != std::string::npos);
  ok_config_set(s.c, "output", "table");
  Result table(ok_verify(s.c, "genus"));
  CHECK(table.out().find("PASS  genus  Td1") != std::string::npos);
  CHECK(table.out().find("ALL PASS") != std::string::npos);
}

TEST_CASE("index and representation entry points") {
  Cfg c;
  Result rr(ok_rr_p1(c.c, "2*[0]-1*[inf]"));
  CHECK(rr.status() == OK_PASS);
  CHECK(rr.json().find("\"l_D\": 2") != std::string::npos);
  Result bogus(ok_rr_p1(c.c, "bogus"));
  CHECK(bogus.status() == OK_USAGE);
  Result td(ok_genus(c.c, "todd", 2));
  CHECK(td.json().find("1/12*c1^2 + 1/12*c2") != std::string::npos);
  Result tw(ok_genus(c.c, "twist-check", 8));
  CHECK(tw.status() == OK_PASS);
  Result gk(ok_genus(c.c, "other", 2));
  CHECK(gk.status() == OK_USAGE);
  Result hd(ok_hodge(c.c, nullptr, "octahedron"));
  CHECK(hd.status() == OK_PASS);
  CHECK(hd.json().find("\"index\": 2") != std::string::npos);
  Result both(ok_hodge(c.c, "x", "point"));
  CHECK(both.status() == OK_USAGE);
  ok_config_set(c.c, "trials", "10");
  Result rep(ok_rep_check(c.c, "S"));
  CHECK(rep.status() == OK_PASS);
  Result fam(ok_rep_check(c.c, "Q"));
  CHECK(fam.status() == OK_USAGE);
}

TEST_CASE("xcq entry points") {
  Cfg c;
  Result h(ok_xcq_homology(c.c, "c2", 2, 6));
  CHECK(h.status() == OK_PASS);
  CHECK(h.json().find("\"h0\": 2") != std::string::npos);
  Result cap(ok_xcq_homology(c.c, "c2", 2, 3));
  CHECK(cap.status() == OK_USAGE);
  Result alg(ok_xcq_homology(c.c, "m9", 1, 4));
  CHECK(alg.status() == OK_USAGE);
  Result lift(ok_xcq_lift(c.c, "c2", "[1,0]", 2));
  CHECK(lift.status() == OK_PASS);
  CHECK(lift.json().find("\"idempotent\": true") != std::string::npos);
  Result notidem(ok_xcq_lift(c.c, "c2", "[2,0]", 2));
  CHECK(notidem.status() == OK_USAGE);
  Result missing(ok_xcq_winding(c.c, "/nonexistent.json"));
  CHECK(missing.status() == OK_USAGE);
}
