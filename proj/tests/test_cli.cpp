#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(ORBITKIT_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string data = ORBITKIT_TEST_DATA;

}  // namespace

TEST_CASE("orbits classify") {
  auto r = run("orbits classify --lambda 1 --mu 0");
  CHECK(r.code == 0);
  CHECK(r.out == "{\n  \"orbit\": {\n    \"point\": 1\n  }\n}\n");
  CHECK(run("orbits classify --lambda 0 --mu 1").out.find("upper-half-plane") != std::string::npos);
  CHECK(run("orbits classify --lambda 0").code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("--bogus").code == 2);
  auto r = run("orbits classify --lambda 1 --mu 0 --zzz", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("Usage") != std::string::npos);
  CHECK(run("rr p1 --divisor bogus").code == 2);
  CHECK(run("verify").code == 2);
  CHECK(run("verify nosuch").code == 2);
  CHECK(run("verify prop31 --mutate sideways").code == 2);
  CHECK(run("genus todd").code == 2);
  CHECK(run("hodge").code == 2);
  CHECK(run("hodge --complex " + data + "/missing_face.json").code == 2);
  CHECK(run("xcq winding --matrix " + data + "/singular.json").code == 2);
  CHECK(run("--output xml orbits classify --lambda 1 --mu 0").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify prop31 --algebra affR").code == 0);
  CHECK(run("verify prop31 --algebra affC").code == 0);
  CHECK(run("verify prop31 --algebra affR --mutate flip-lambda").code == 1);
  CHECK(run("verify lhat --algebra affR").code == 0);
  CHECK(run("verify lhat --algebra affR --mutate drop-half").code == 1);
  CHECK(run("verify --suites genus,hodge").code == 0);
  auto f = run("verify fourier --id 1 --id 3");
  CHECK(f.code == 0);
  CHECK(f.out.find("F(p v)") == std::string::npos);
  auto c = run("verify conjugation --gen Y --n 2048 --output table");
  CHECK(c.code == 0);
  CHECK(c.out.find("Z = Y") != std::string::npos);
  CHECK(c.out.find("Z = X") == std::string::npos);
}

TEST_CASE("other subcommands") {
  auto s = run("star --conv moyal --lhs " + data + "/symbol_p.json --rhs " + data + "/symbol_eq.json");
  CHECK(s.code == 0);
  CHECK(s.out.find("(-1/2i)*e^(q) + p*e^(q)") != std::string::npos);
  auto rep = run("rep check --family Ttheta --trials 10 --seed 3");
  CHECK(rep.code == 0);
  CHECK(rep.out.find("\"seed\": 3") != std::string::npos);
  CHECK(run("genus twist-check --degree 8").code == 0);
  CHECK(run("genus ahat --degree 2").out.find("7/5760*p1^2 - 1/1440*p2") != std::string::npos);
  auto rr = run("rr p1 --divisor \"2*[0]-1*[inf]\"");
  CHECK(rr.code == 0);
  CHECK(rr.out.find("\"pass\": true") != std::string::npos);
  auto h = run("hodge --complex " + data + "/octahedron.json");
  CHECK(h.code == 0);
  CHECK(h.out.find("\"index\": 2") != std::string::npos);
  CHECK(run("hodge --builtin torus7").code == 0);
  auto x = run("xcq homology --algebra c2 --adic 2 --cap 6");
  CHECK(x.code == 0);
  CHECK(x.out.find("\"h0\": 2") != std::string::npos);
  CHECK(run("xcq homology --algebra " + data + "/c2.json --adic 1").code == 0);
  auto w = run("xcq winding --matrix " + data + "/winding.json");
  CHECK(w.code == 0);
  CHECK(w.out.find("\"winding\": -1") != std::string::npos);
  auto l = run("xcq lift --algebra c2 --idem \"[1,0]\" --adic 2");
  CHECK(l.code == 0);
  CHECK(l.out.find("\"idempotent\": true") != std::string::npos);
}

TEST_CASE("ORBITKIT_SEED overrides --seed") {
  auto r = run("rep check --family S --trials 5 --seed 3");
  CHECK(r.out.find("\"seed\": 3") != std::string::npos);
  auto e = run("rep check --family S --trials 5 --seed 3", false);
  std::string cmd = "ORBITKIT_SEED=11 ";
  Run over;
  {
    std::string full = cmd + ORBITKIT_CLI + " rep check --family S --trials 5 --seed 3";
    FILE* p = popen(full.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) over.out.append(buf, n);
    over.code = WEXITSTATUS(pclose(p));
  }
  CHECK(over.code == 0);
  CHECK(over.out.find("\"seed\": 11") != std::string::npos);
  (void)e;
}
