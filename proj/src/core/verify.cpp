#include "orbitkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

#include "orbitkit/coadjoint.hpp"
#include "orbitkit/divisor.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/genus.hpp"
#include "orbitkit/laurent.hpp"
#include "orbitkit/quantize.hpp"
#include "orbitkit/reps.hpp"
#include "orbitkit/simplicial.hpp"
#include "orbitkit/starprod.hpp"
#include "orbitkit/xcomplex.hpp"

namespace orbitkit {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

class Suite {
 public:
  Suite(std::string name, std::string module) : name_(std::move(name)), module_(std::move(module)) {}

  void check(const std::string& what, const std::string& anchor, bool pass, const std::string& residual, Json detail = Json::object()) {
    detail["check"] = what;
    detail["pass"] = pass;
    detail["residual"] = residual;
    checks_.push_back(std::move(detail));
    if (!pass) failures_.push_back(module_ + ": " + what + " [" + anchor + "] residual " + residual);
  }

  void numeric(const std::string& what, const std::string& anchor, double residual, double tol) {
    check(what, anchor, residual <= tol, sci(residual), Json{{"tolerance", sci(tol)}});
  }

  Json finish() const {
    return Json{{"suite", name_}, {"module", module_}, {"pass", failures_.empty()}, {"checks", checks_}, {"failures", failures_}};
  }
  bool pass() const { return failures_.empty(); }

 private:
  std::string name_, module_;
  Json checks_ = Json::array();
  std::vector<std::string> failures_;
};

std::vector<LieAlgebraPtr> selected_algebras(const std::string& which) {
  if (which == "affR") return {aff_r()};
  if (which == "affC") return {aff_c()};
  if (which == "all") return {aff_r(), aff_c()};
  fail(ErrorKind::InvalidInput, "unknown algebra '" + which + "' (expected affR, affC, all)");
}

void add_pairs(Suite& s, const std::string& alg, const std::vector<PairCheck>& pairs, const std::string& anchor) {
  for (const auto& p : pairs)
    s.check(alg + " (" + p.lhs + ", " + p.rhs + ")", anchor, p.pass, p.residual, Json{{"value", p.value}, {"expected", p.expected}});
}

Json suite_prop31(const VerifyConfig& c) {
  Suite s("prop31", "starprod");
  for (const auto& alg : selected_algebras(c.algebra)) {
    ChartPtr chart = alg->name() == "affR" ? chart_affr() : chart_affc();
    if (c.mutation == "flip-lambda" && alg->name() == "affR") chart = chart_affr_flipped();
    add_pairs(s, alg->name(), star_commutator_check(alg, chart), "iZ~ * iT~ - iT~ * iZ~ = i[Z,T]~");
  }
  return s.finish();
}

Json suite_lhat(const VerifyConfig& c) {
  Suite s("lhat", "quantize");
  auto mut = c.mutation == "drop-half" ? LhatMutation::DropHalf : LhatMutation::None;
  for (const auto& alg : selected_algebras(c.algebra)) {
    add_pairs(s, alg->name(), lhat_homomorphism_check(alg, alg->name() == "affR" ? mut : LhatMutation::None),
              "[lhat_Z, lhat_T] = lhat_[Z,T]");
    if (alg->name() == "affR") {
      for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 0}, {0, 1}, {3, -2}}) {
        AlgElement z(alg, {ScalarQ(a), ScalarQ(b)});
        s.check("s-chart rewrite alpha=" + std::to_string(a) + " beta=" + std::to_string(b), "lhat_Z = alpha d_s + i beta e^s",
                lhat_rewrite_check(z), lhat_rewrite_check(z) ? "0" : "nonzero");
      }
    }
  }
  return s.finish();
}

Json suite_fourier(const VerifyConfig& c) {
  Suite s("fourier", "quantize");
  auto u = gaussian(c.grid, Domain::XQ);
  const char* anchors[] = {"", "d_p F^-1 u = i F^-1 (x u)", "F(p v) = i d_x F v", "P^k(beta e^q, v) = (-1)^k beta e^q d_p^k v"};
  std::vector<int> ids = c.fourier_ids.empty() ? std::vector<int>{1, 2, 3} : c.fourier_ids;
  for (int id : ids) {
    auto r = fourier_identity_check(id, u);
    s.numeric(r.name, anchors[id], r.residual, r.threshold);
  }
  return s.finish();
}

Json suite_conjugation(const VerifyConfig& c) {
  Suite s("conjugation", "quantize");
  auto u = gaussian(c.grid, Domain::XQ);
  std::vector<std::string> gens = c.conjugation_gens.empty() ? std::vector<std::string>{"X", "Y"} : c.conjugation_gens;
  for (const auto& name : gens) {
    auto r = conjugation_check(AlgElement::basis(aff_r(), name), u, c.series_order);
    s.numeric("Z = " + name, "F_p l_Z F_p^-1 = lhat_Z", r.residual, r.threshold);
  }
  return s.finish();
}

Json suite_orbits(const VerifyConfig&) {
  Suite s("orbits", "coadjoint");
  // 9 x 9 grid: sign of mu decides the class, mu = 0 gives the point orbit at lambda.
  long mismatches = 0;
  for (int li = -4; li <= 4; ++li)
    for (int mi = -4; mi <= 4; ++mi) {
      CoadjointPoint f{ExpPoly(Rational(li, 2)), ExpPoly(Rational(mi, 2))};
      OrbitClass got = classify_orbit(f);
      OrbitClass want;
      if (mi > 0) want.tag = OrbitClass::Tag::UpperHalfPlane;
      else if (mi < 0) want.tag = OrbitClass::Tag::LowerHalfPlane;
      else want.point_lambda = ExpPoly(Rational(li, 2));
      if (!(got == want)) ++mismatches;
    }
  s.check("classification on the 9x9 (lambda, mu) grid", "mu > 0 upper, mu < 0 lower, mu = 0 point", mismatches == 0,
          std::to_string(mismatches) + " mismatches");
  const double grid[] = {-2, -1, -0.5, 0, 0.5, 1, 2};
  double worst = 0.0, worst_apply = 0.0;
  for (double a : grid)
    for (double b : grid) {
      RealMatrix closed = exp_neg_ad_affr(a, b);
      RealMatrix series = exp_neg_ad_series(RealMatrix{{0, 0}, {b, -a}}, 30);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) worst = std::max(worst, std::abs(closed[i][j] - series[i][j]));
      auto [l2, m2] = coadjoint_apply(a, b, 1.5, -0.75);
      worst_apply = std::max({worst_apply, std::abs(l2 - (1.5 - 0.75 * series[1][0])), std::abs(m2 - (-0.75 * series[1][1]))});
    }
  s.numeric("exp(-ad) closed form vs 30-term series (7x7 grid)", "[[1,0],[L,e^-alpha]]", worst, 1e-12);
  s.numeric("coadjoint_apply vs series (7x7 grid)", "K(exp U)F = (lambda + mu L, mu e^-alpha)", worst_apply, 1e-12);
  return s.finish();
}

Json suite_reps(const VerifyConfig& c) {
  Suite s("reps", "reps");
  for (const char* fam : {"S", "U", "Ttheta"}) {
    auto r = rep_check(fam, c.trials, c.seed);
    s.numeric(std::string(fam) + " group law", "rep(g1) rep(g2) = rep(g1 g2)", r.max_group_law, r.tolerance);
    s.numeric(std::string(fam) + " unitarity", "|rep(g) f| = |f|", r.max_unitarity, r.tolerance);
  }
  auto f = log_gaussian();
  for (auto [a, b] : std::vector<std::pair<double, double>>{{1, 0}, {0, 1}, {1, 1}}) {
    auto g = generator_convergence(a, b, f, 0.01);
    s.check("generator convergence alpha=" + sci(a) + " beta=" + sci(b), "d/dt S(exp tZ) f = (alpha y d_y + i beta y) f",
            std::abs(g.ratio - 4.0) <= 0.5, sci(std::abs(g.ratio - 4.0)), Json{{"ratio", sci(g.ratio)}});
  }
  return s.finish();
}

Json suite_genus(const VerifyConfig&) {
  Suite s("genus", "index");
  auto td = todd_series(2);
  auto ah = ahat_series(2);
  auto expect = [&](const std::string& what, const std::string& got, const std::string& want) {
    s.check(what, what + " = " + want, got == want, got == want ? "0" : got);
  };
  expect("Td1", td.component_str(1), "1/2*c1");
  expect("Td2", td.component_str(2), "1/12*c1^2 + 1/12*c2");
  expect("A1", ah.component_str(1), "-1/24*p1");
  expect("A2", ah.component_str(2), "7/5760*p1^2 - 1/1440*p2");
  for (int n = 1; n <= 8; ++n)
    s.check("A-hat e^theta = Todd, degree " + std::to_string(n), "A(TM) e^{c1/2} = Td(TM)", ahat_twist_equals_todd(n), ahat_twist_equals_todd(n) ? "0" : "nonzero");
  return s.finish();
}

Json suite_rr(const VerifyConfig&) {
  Suite s("rr", "index");
  auto divs = enumerate_divisors();
  long failures = 0;
  std::string first;
  for (const auto& d : divs) {
    auto r = riemann_roch_p1_check(d);
    if (!r.pass) {
      if (failures++ == 0) first = d.str();
    }
  }
  s.check("P^1 divisors on <= 3 of {0,1,-1,2,inf}, |deg| <= 6", "l(D) - l(K-D) = deg D + 1", failures == 0 && divs.size() >= 200,
          std::to_string(failures) + " failing" + (first.empty() ? "" : " (first " + first + ")"), Json{{"cases", divs.size()}});
  return s.finish();
}

Json suite_hodge(const VerifyConfig&) {
  Suite s("hodge", "index");
  const std::vector<std::pair<std::string, long>> cases = {{"point", 1}, {"cycle6", 0}, {"octahedron", 2}, {"torus7", 0}};
  for (const auto& [name, chi] : cases) {
    auto r = hodge_index(builtin_complex(name));
    bool ok = r.pass && r.index == chi;
    s.check(name, "ind(d + delta) = chi", ok, std::to_string(r.index - chi), Json{{"index", r.index}, {"euler", r.euler}});
  }
  return s.finish();
}

Json suite_xcomplex(const VerifyConfig&) {
  Suite s("xcomplex", "xcomplex");
  const std::vector<std::pair<std::string, std::pair<long, long>>> cases = {{"c", {1, 0}}, {"c2", {2, 0}}, {"m2", {1, 0}}};
  for (const auto& [name, dims] : cases) {
    XComplex x(builtin_fd_algebra(name), 2, 6);
    const auto& h = x.homology();
    s.check(name + " beta o delta = 0", "beta delta = 0", h.beta_delta_zero, h.beta_delta_zero ? "0" : "nonzero");
    s.check(name + " delta o beta = 0", "delta beta = 0", h.delta_beta_zero, h.delta_beta_zero ? "0" : "nonzero");
    bool ok = h.h0 == dims.first && h.h1 == dims.second;
    s.check(name + " homology at n = 2, cap 6", "H_i X(RA/IA^3)", ok,
            "(" + std::to_string(h.h0 - dims.first) + ", " + std::to_string(h.h1 - dims.second) + ")",
            Json{{"h0", h.h0}, {"h1", h.h1}});
  }
  auto lift = lift_idempotent(algebra_c2(), {{{1, 0}}}, 2);
  s.check("lift of (1,0) in C+C is idempotent mod IA^3", "e~ o e~ = e~", lift.idempotent, lift.idempotent ? "0" : "nonzero");
  for (int k = -5; k <= 5; ++k) {
    long w = chern1_winding({{Laurent(ScalarQ(1), k)}});
    s.check("winding(t^" + std::to_string(k) + ")", "res tr(g^-1 dg) = k", w == k, std::to_string(w - k));
  }
  return s.finish();
}

using SuiteFn = std::function<Json(const VerifyConfig&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"prop31", suite_prop31}, {"lhat", suite_lhat}, {"fourier", suite_fourier}, {"conjugation", suite_conjugation},
      {"orbits", suite_orbits}, {"reps", suite_reps}, {"genus", suite_genus},     {"rr", suite_rr},
      {"hodge", suite_hodge},   {"xcomplex", suite_xcomplex},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

VerifyReport run_verify(const VerifyConfig& config) {
  if (config.suites.empty()) fail(ErrorKind::InvalidInput, "no suites selected");
  if (config.mutation != "none" && config.mutation != "flip-lambda" && config.mutation != "drop-half")
    fail(ErrorKind::InvalidInput, "unknown mutation '" + config.mutation + "'");
  selected_algebras(config.algebra);
  if (config.trials < 1) fail(ErrorKind::InvalidInput, "trials must be >= 1");
  config.grid.validate();
  for (int id : config.fourier_ids)
    if (id < 1 || id > 3) fail(ErrorKind::InvalidInput, "fourier identity id must be 1, 2 or 3");
  for (const auto& g : config.conjugation_gens)
    if (g != "X" && g != "Y") fail(ErrorKind::InvalidInput, "conjugation generator must be X or Y");
  std::vector<bool> want(registry().size(), false);
  for (const auto& name : config.suites) {
    if (name == "all") {
      std::fill(want.begin(), want.end(), true);
      continue;
    }
    auto it = std::find(known_suites().begin(), known_suites().end(), name);
    if (it == known_suites().end()) fail(ErrorKind::InvalidInput, "unknown suite '" + name + "'");
    want[static_cast<std::size_t>(it - known_suites().begin())] = true;
  }
  VerifyReport rep;
  rep.pass = true;
  Json suites = Json::array();
  for (std::size_t k = 0; k < registry().size(); ++k) {
    if (!want[k]) continue;
    Json r = registry()[k].second(config);
    rep.pass = rep.pass && r.at("pass").get<bool>();
    suites.push_back(std::move(r));
  }
  rep.json = Json{{"pass", rep.pass},
                  {"seed", config.seed},
                  {"mutation", config.mutation},
                  {"algebra", config.algebra},
                  {"suites", suites}};
  return rep;
}

}  // namespace orbitkit
