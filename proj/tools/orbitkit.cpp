#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orbitkit/orbitkit.h"

namespace {

struct Config {
  ok_config* cfg = ok_config_new();
  ~Config() { ok_config_free(cfg); }
  bool set(const char* key, const std::string& value) {
    if (ok_config_set(cfg, key, value.c_str()) == OK_PASS) return true;
    std::cerr << "error: bad value '" << value << "' for " << key << "\n";
    return false;
  }
};

int finish(ok_result* r) {
  ok_status st = ok_result_status(r);
  if (st == OK_USAGE || st == OK_INTERNAL)
    std::cerr << "error: " << ok_result_error(r) << "\n";
  else
    std::cout << ok_result_output(r) << std::flush;
  ok_result_free(r);
  return static_cast<int>(st);
}

// Inline JSON when the argument looks like an object, otherwise a file path.
std::optional<std::string> json_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  std::ifstream in(arg);
  if (!in) {
    std::cerr << "error: cannot read '" << arg << "'\n";
    return std::nullopt;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbitkit: orbit method, star products and X-complex checks"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output = "json";
  app.add_option("--output", output, "json or table")->check(CLI::IsMember({"json", "table"}));

  std::string lambda, mu;
  auto* orbits = app.add_subcommand("orbits", "coadjoint orbits of aff(R)");
  orbits->require_subcommand(1);
  auto* classify = orbits->add_subcommand("classify", "classify the orbit through lambda X* + mu Y*");
  classify->add_option("--lambda", lambda)->required();
  classify->add_option("--mu", mu)->required();

  std::string conv = "moyal", lhs, rhs, hbar;
  auto* star = app.add_subcommand("star", "star product of two symbols");
  star->add_option("--conv", conv, "moyal or weyl")->check(CLI::IsMember({"moyal", "weyl"}));
  star->add_option("--lhs", lhs, "symbol JSON file or inline JSON")->required();
  star->add_option("--rhs", rhs, "symbol JSON file or inline JSON")->required();
  star->add_option("--hbar", hbar, "h for the weyl convention");

  std::vector<std::string> suites, flag_suites;
  std::string algebra = "all", mutation = "none", seed, trials, n, nq;
  std::vector<std::string> ids, gens;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suites, "suite names or 'all'");
  verify->add_option("--suites", flag_suites, "suite names (alternative to positionals)")->delimiter(',');
  verify->add_option("--algebra", algebra, "affR, affC or all");
  verify->add_option("--mutate", mutation, "none, flip-lambda or drop-half");
  verify->add_option("--seed", seed);
  verify->add_option("--trials", trials);
  verify->add_option("--id", ids, "fourier identity (1, 2, 3)");
  verify->add_option("--gen", gens, "conjugation generator (X, Y)");
  verify->add_option("--n", n, "grid points along p");
  verify->add_option("--nq", nq, "grid points along q");

  std::string family;
  auto* rep = app.add_subcommand("rep", "unitary representations");
  rep->require_subcommand(1);
  auto* rep_check = rep->add_subcommand("check", "group law and unitarity on random samples");
  rep_check->add_option("--family", family, "S, U or Ttheta")->required();
  rep_check->add_option("--trials", trials);
  rep_check->add_option("--seed", seed);

  int degree = 4;
  auto* genus = app.add_subcommand("genus", "multiplicative sequences");
  genus->require_subcommand(1);
  std::string genus_kind;
  for (const char* k : {"todd", "ahat", "twist-check"}) {
    auto* g = genus->add_subcommand(k);
    g->add_option("--degree", degree)->required();
    g->callback([&genus_kind, k] { genus_kind = k; });
  }

  std::string divisor;
  auto* rr = app.add_subcommand("rr", "Riemann-Roch");
  rr->require_subcommand(1);
  auto* rr_p1 = rr->add_subcommand("p1", "check Riemann-Roch for a divisor on P^1");
  rr_p1->add_option("--divisor", divisor)->required();

  std::string complex_path, complex_builtin;
  auto* hodge = app.add_subcommand("hodge", "index of d + delta on a simplicial complex");
  auto* hc = hodge->add_option("--complex", complex_path, "complex JSON file");
  auto* hb = hodge->add_option("--builtin", complex_builtin, "point, cycleN, octahedron or torus7");
  hc->excludes(hb);

  std::string xalg = "c", idem, matrix;
  int adic = 2, cap = -1;
  auto* xcq = app.add_subcommand("xcq", "X-complex and noncommutative Chern characters");
  xcq->require_subcommand(1);
  auto* xh = xcq->add_subcommand("homology", "homology of the truncated X-complex");
  xh->add_option("--algebra", xalg, "c, c2, m2 or algebra JSON file");
  xh->add_option("--adic", adic);
  xh->add_option("--cap", cap, "form degree cap (default 2*adic+2)");
  auto* xw = xcq->add_subcommand("winding", "winding number of a Laurent matrix");
  xw->add_option("--matrix", matrix)->required();
  auto* xl = xcq->add_subcommand("lift", "lift an idempotent to RA/IA^(n+1)");
  xl->add_option("--algebra", xalg, "c, c2, m2 or algebra JSON file");
  xl->add_option("--idem", idem, "JSON coordinates, or a k x k array of them")->required();
  xl->add_option("--adic", adic);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return OK_USAGE;
  }

  Config c;
  if (!c.set("output", output)) return OK_USAGE;
  if (!seed.empty() && !c.set("seed", seed)) return OK_USAGE;
  if (!trials.empty() && !c.set("trials", trials)) return OK_USAGE;

  if (*classify) return finish(ok_orbits_classify(c.cfg, lambda.c_str(), mu.c_str()));
  if (*star) {
    auto l = json_arg(lhs), r = json_arg(rhs);
    if (!l || !r) return OK_USAGE;
    return finish(ok_star(c.cfg, l->c_str(), r->c_str(), conv.c_str(), hbar.empty() ? nullptr : hbar.c_str()));
  }
  if (*verify) {
    suites.insert(suites.end(), flag_suites.begin(), flag_suites.end());
    std::string list;
    for (const auto& s : suites) list += (list.empty() ? "" : ",") + s;
    if (!c.set("algebra", algebra) || !c.set("mutation", mutation)) return OK_USAGE;
    for (const auto& id : ids)
      if (!c.set("fourier_id", id)) return OK_USAGE;
    for (const auto& g : gens)
      if (!c.set("gen", g)) return OK_USAGE;
    if (!n.empty() && !c.set("grid_n", n)) return OK_USAGE;
    if (!nq.empty() && !c.set("grid_nq", nq)) return OK_USAGE;
    return finish(ok_verify(c.cfg, list.c_str()));
  }
  if (*rep_check) return finish(ok_rep_check(c.cfg, family.c_str()));
  if (*genus) return finish(ok_genus(c.cfg, genus_kind.c_str(), degree));
  if (*rr_p1) return finish(ok_rr_p1(c.cfg, divisor.c_str()));
  if (*hodge) {
    if (complex_path.empty() == complex_builtin.empty()) {
      std::cerr << "error: give --complex or --builtin\n" << hodge->help();
      return OK_USAGE;
    }
    return finish(ok_hodge(c.cfg, complex_path.empty() ? nullptr : complex_path.c_str(),
                           complex_builtin.empty() ? nullptr : complex_builtin.c_str()));
  }
  if (*xh) return finish(ok_xcq_homology(c.cfg, xalg.c_str(), adic, cap < 0 ? 2 * adic + 2 : cap));
  if (*xw) return finish(ok_xcq_winding(c.cfg, matrix.c_str()));
  if (*xl) return finish(ok_xcq_lift(c.cfg, xalg.c_str(), idem.c_str(), adic));
  std::cerr << app.help();
  return OK_USAGE;
}
