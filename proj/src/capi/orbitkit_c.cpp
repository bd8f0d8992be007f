#include "orbitkit/orbitkit.h"

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>

#include "orbitkit/coadjoint.hpp"
#include "orbitkit/divisor.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/genus.hpp"
#include "orbitkit/json_io.hpp"
#include "orbitkit/laurent.hpp"
#include "orbitkit/reps.hpp"
#include "orbitkit/simplicial.hpp"
#include "orbitkit/starprod.hpp"
#include "orbitkit/verify.hpp"
#include "orbitkit/xcomplex.hpp"

using namespace orbitkit;

struct ok_config {
  std::uint64_t seed = 42;
  int trials = 100;
  bool table = false;
  std::string algebra = "all";
  std::string mutation = "none";
  GridSpec grid;
  int series_order = 96;
  std::vector<int> fourier_ids;
  std::vector<std::string> gens;
};

struct ok_result {
  ok_status status = OK_INTERNAL;
  std::string json;
  std::string output;
  std::string error;
};

namespace {

std::uint64_t effective_seed(const ok_config& cfg) {
  const char* env = std::getenv("ORBITKIT_SEED");
  if (env == nullptr || *env == '\0') return cfg.seed;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::logic_error&) {
  }
  fail(ErrorKind::InvalidInput, "ORBITKIT_SEED is not a nonnegative integer");
}

void render_table(const Json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_table(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) render_table(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << "\t" << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

std::string render_verify_table(const Json& j) {
  std::ostringstream os;
  for (const auto& s : j.at("suites")) {
    for (const auto& c : s.at("checks"))
      os << (c.at("pass").get<bool>() ? "PASS" : "FAIL") << "  " << s.at("suite").get<std::string>() << "  "
         << c.at("check").get<std::string>() << "  residual " << c.at("residual").get<std::string>() << "\n";
  }
  os << (j.at("pass").get<bool>() ? "ALL PASS" : "FAILED") << "\n";
  return os.str();
}

template <class F>
ok_result* run(const ok_config* cfg, F&& body) {
  auto* r = new ok_result;
  try {
    if (cfg == nullptr) fail(ErrorKind::InvalidInput, "config is NULL");
    bool pass = true;
    bool verify_table = false;
    Json j = body(*cfg, pass, verify_table);
    r->json = j.dump(2) + "\n";
    r->status = pass ? OK_PASS : OK_FAIL;
    if (!cfg->table) {
      r->output = r->json;
    } else if (verify_table) {
      r->output = render_verify_table(j);
    } else {
      std::ostringstream os;
      render_table(j, "", os);
      r->output = os.str();
    }
  } catch (const Error& e) {
    r->status = OK_USAGE;
    r->error = e.what();
  } catch (const nlohmann::json::exception& e) {
    r->status = OK_USAGE;
    r->error = std::string("JSON: ") + e.what();
  } catch (const std::exception& e) {
    r->status = OK_INTERNAL;
    r->error = e.what();
  }
  return r;
}

std::string need(const char* s, const char* what) {
  if (s == nullptr) fail(ErrorKind::InvalidInput, std::string(what) + " is required");
  return s;
}

Json parse_json_text(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::InvalidInput, std::string(what) + " is not valid JSON: " + e.what());
  }
}

Json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

FDAlgebra load_fd_algebra(const std::string& spec) {
  if (spec == "c" || spec == "c2" || spec == "m2") return builtin_fd_algebra(spec);
  if (std::filesystem::exists(spec)) return fd_algebra_from_json(read_json_file(spec));
  fail(ErrorKind::InvalidInput, "unknown algebra '" + spec + "' (expected c, c2, m2 or a JSON file)");
}

Json poly_json(const GradedClassSeries& s) {
  Json comps = Json::array();
  for (int d = 0; d <= s.cap; ++d) comps.push_back(Json{{"degree", d}, {"class", s.component_str(d)}});
  return comps;
}

std::vector<std::vector<std::vector<ScalarQ>>> parse_idem(const Json& j, int dim) {
  auto vec = [&](const Json& v) {
    if (!v.is_array() || static_cast<int>(v.size()) != dim) fail(ErrorKind::InvalidInput, "algebra element must have " + std::to_string(dim) + " coordinates");
    std::vector<ScalarQ> out;
    for (const auto& c : v) out.push_back(scalar_from_json(c));
    return out;
  };
  if (!j.is_array() || j.empty()) fail(ErrorKind::InvalidInput, "idempotent must be a nonempty JSON array");
  if (!j.front().is_array()) return {{vec(j)}};
  std::vector<std::vector<std::vector<ScalarQ>>> m;
  for (const auto& row : j) {
    if (!row.is_array()) fail(ErrorKind::InvalidInput, "matrix rows must be arrays");
    std::vector<std::vector<ScalarQ>> r;
    for (const auto& e : row) r.push_back(vec(e));
    m.push_back(std::move(r));
  }
  return m;
}

int parse_int(const std::string& v, const std::string& key) {
  try {
    std::size_t used = 0;
    long x = std::stol(v, &used);
    if (used == v.size() && x >= -1000000000L && x <= 1000000000L) return static_cast<int>(x);
  } catch (const std::logic_error&) {
  }
  fail(ErrorKind::InvalidInput, key + " must be an integer");
}

}  // namespace

extern "C" {

const char* ok_version(void) { return "1.0.0"; }

ok_config* ok_config_new(void) { return new ok_config; }
void ok_config_free(ok_config* cfg) { delete cfg; }

ok_status ok_config_set(ok_config* cfg, const char* key, const char* value) {
  if (cfg == nullptr || key == nullptr || value == nullptr) return OK_USAGE;
  try {
    std::string k = key, v = value;
    if (k == "seed") {
      std::size_t used = 0;
      if (v.empty() || v[0] == '-') return OK_USAGE;
      cfg->seed = std::stoull(v, &used);
      if (used != v.size()) return OK_USAGE;
    } else if (k == "trials") {
      int t = parse_int(v, k);
      if (t < 1) return OK_USAGE;
      cfg->trials = t;
    } else if (k == "output") {
      if (v != "json" && v != "table") return OK_USAGE;
      cfg->table = v == "table";
    } else if (k == "algebra") {
      if (v != "affR" && v != "affC" && v != "all") return OK_USAGE;
      cfg->algebra = v;
    } else if (k == "mutation") {
      if (v != "none" && v != "flip-lambda" && v != "drop-half") return OK_USAGE;
      cfg->mutation = v;
    } else if (k == "grid_n" || k == "grid_nq") {
      GridSpec g = cfg->grid;
      (k == "grid_n" ? g.n : g.nq) = parse_int(v, k);
      g.validate();
      cfg->grid = g;
    } else if (k == "fourier_id") {
      int id = parse_int(v, k);
      if (id < 1 || id > 3) return OK_USAGE;
      cfg->fourier_ids.push_back(id);
    } else if (k == "gen") {
      if (v != "X" && v != "Y") return OK_USAGE;
      cfg->gens.push_back(v);
    } else if (k == "series_order") {
      int s = parse_int(v, k);
      if (s < 1) return OK_USAGE;
      cfg->series_order = s;
    } else {
      return OK_USAGE;
    }
  } catch (const std::exception&) {
    return OK_USAGE;
  }
  return OK_PASS;
}

ok_status ok_result_status(const ok_result* r) { return r ? r->status : OK_INTERNAL; }
const char* ok_result_output(const ok_result* r) { return r ? r->output.c_str() : ""; }
const char* ok_result_json(const ok_result* r) { return r ? r->json.c_str() : ""; }
const char* ok_result_error(const ok_result* r) { return r ? r->error.c_str() : ""; }
void ok_result_free(ok_result* r) { delete r; }

ok_result* ok_orbits_classify(const ok_config* cfg, const char* lambda, const char* mu) {
  return run(cfg, [&](const ok_config&, bool&, bool&) {
    Rational l = parse_rational(need(lambda, "lambda")), m = parse_rational(need(mu, "mu"));
    OrbitClass c = classify_orbit(CoadjointPoint{ExpPoly(l), ExpPoly(m)});
    Json orbit = c.tag == OrbitClass::Tag::Point ? Json{{"point", rational_json(l)}} : Json(c.name());
    return Json{{"orbit", orbit}};
  });
}

ok_result* ok_star(const ok_config* cfg, const char* u_json, const char* v_json, const char* mode, const char* h) {
  return run(cfg, [&](const ok_config&, bool&, bool&) {
    Symbol u = symbol_from_json(parse_json_text(need(u_json, "u"), "u"));
    Symbol v = symbol_from_json(parse_json_text(need(v_json, "v"), "v"));
    StarConvention conv;
    std::string m = mode ? mode : "moyal";
    if (m == "weyl") conv.mode = StarMode::WeylH;
    else if (m != "moyal") fail(ErrorKind::InvalidInput, "convention must be moyal or weyl");
    if (h != nullptr) conv.h = parse_rational(h);
    Symbol w = star(u, v, conv);
    Json out{{"conv", m}, {"product", symbol_to_compact_json(w)}};
    if (conv.mode == StarMode::WeylH) out["h"] = to_string(conv.h);
    return out;
  });
}

ok_result* ok_verify(const ok_config* cfg, const char* suites) {
  return run(cfg, [&](const ok_config& c, bool& pass, bool& table) {
    VerifyConfig vc;
    std::string list = need(suites, "suites");
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) vc.suites.push_back(item);
    vc.algebra = c.algebra;
    vc.mutation = c.mutation;
    vc.seed = effective_seed(c);
    vc.trials = c.trials;
    vc.grid = c.grid;
    vc.series_order = c.series_order;
    vc.fourier_ids = c.fourier_ids;
    vc.conjugation_gens = c.gens;
    VerifyReport r = run_verify(vc);
    pass = r.pass;
    table = true;
    return r.json;
  });
}

ok_result* ok_rep_check(const ok_config* cfg, const char* family) {
  return run(cfg, [&](const ok_config& c, bool& pass, bool&) {
    std::string fam = need(family, "family");
    if (fam != "S" && fam != "U" && fam != "Ttheta") fail(ErrorKind::InvalidInput, "family must be S, U or Ttheta");
    RepCheckReport r = rep_check(fam, c.trials, effective_seed(c));
    pass = r.pass;
    char gl[32], un[32], tol[32];
    std::snprintf(gl, sizeof gl, "%.3e", r.max_group_law);
    std::snprintf(un, sizeof un, "%.3e", r.max_unitarity);
    std::snprintf(tol, sizeof tol, "%.1e", r.tolerance);
    return Json{{"family", r.family}, {"trials", r.trials}, {"seed", r.seed}, {"max_group_law", gl},
                {"max_unitarity", un}, {"tolerance", tol}, {"pass", r.pass}};
  });
}

ok_result* ok_genus(const ok_config* cfg, const char* kind, int degree) {
  return run(cfg, [&](const ok_config&, bool& pass, bool&) {
    std::string k = need(kind, "kind");
    if (degree < 0 || degree > 16) fail(ErrorKind::InvalidInput, "degree must be in [0, 16]");
    if (k == "todd") return Json{{"series", "todd"}, {"degree", degree}, {"components", poly_json(todd_series(degree))}};
    if (k == "ahat") return Json{{"series", "ahat"}, {"degree", degree}, {"components", poly_json(ahat_series(degree))}};
    if (k == "twist-check") {
      Json per = Json::array();
      for (int n = 0; n <= degree; ++n) {
        bool ok = ahat_twist_equals_todd(n);
        pass = pass && ok;
        per.push_back(Json{{"degree", n}, {"pass", ok}});
      }
      return Json{{"check", "ahat e^(c1/2) = todd"}, {"degree", degree}, {"results", per}, {"pass", pass}};
    }
    fail(ErrorKind::InvalidInput, "kind must be todd, ahat or twist-check");
  });
}

ok_result* ok_rr_p1(const ok_config* cfg, const char* divisor) {
  return run(cfg, [&](const ok_config&, bool& pass, bool&) {
    RiemannRochReport r = riemann_roch_p1_check(parse_divisor(need(divisor, "divisor")));
    pass = r.pass;
    return Json{{"divisor", r.divisor.str()}, {"degree", r.divisor.degree()}, {"l_D", r.l_d}, {"l_K_minus_D", r.l_k_minus_d},
                {"lhs", r.lhs}, {"rhs", r.rhs}, {"pass", r.pass}};
  });
}

ok_result* ok_hodge(const ok_config* cfg, const char* path, const char* builtin) {
  return run(cfg, [&](const ok_config&, bool& pass, bool&) {
    if ((path == nullptr) == (builtin == nullptr)) fail(ErrorKind::InvalidInput, "give exactly one of a complex file and a built-in name");
    SimplicialComplex k = path ? complex_from_json(read_json_file(path), std::filesystem::path(path).filename().string())
                               : builtin_complex(builtin);
    HodgeReport r = hodge_index(k);
    pass = r.pass;
    return Json{{"complex", k.name}, {"betti", r.betti}, {"euler", r.euler}, {"index", r.index}, {"kernel", r.kernel},
                {"cokernel", r.cokernel}, {"pass", r.pass}};
  });
}

ok_result* ok_xcq_homology(const ok_config* cfg, const char* algebra, int adic, int cap) {
  return run(cfg, [&](const ok_config&, bool& pass, bool&) {
    FDAlgebra a = load_fd_algebra(need(algebra, "algebra"));
    XComplex x(a, adic, cap);
    const XHomology& h = x.homology();
    pass = h.beta_delta_zero && h.delta_beta_zero;
    return Json{{"algebra", a.name}, {"adic", adic}, {"cap", cap}, {"h0", h.h0}, {"h1", h.h1},
                {"even_dim", h.even_dim}, {"odd_dim", h.odd_dim}, {"rank_delta", h.rank_delta}, {"rank_beta", h.rank_beta},
                {"beta_delta_zero", h.beta_delta_zero}, {"delta_beta_zero", h.delta_beta_zero}};
  });
}

ok_result* ok_xcq_winding(const ok_config* cfg, const char* matrix_path) {
  return run(cfg, [&](const ok_config&, bool&, bool&) {
    LaurentMatrix g = laurent_matrix_from_json(read_json_file(need(matrix_path, "matrix")));
    return Json{{"size", g.size()}, {"det", determinant(g).str()}, {"winding", chern1_winding(g)}};
  });
}

ok_result* ok_xcq_lift(const ok_config* cfg, const char* algebra, const char* idem, int adic) {
  return run(cfg, [&](const ok_config&, bool& pass, bool&) {
    FDAlgebra a = load_fd_algebra(need(algebra, "algebra"));
    auto e = parse_idem(parse_json_text(need(idem, "idem"), "idem"), a.dim());
    if (adic < 0 || adic > 4) fail(ErrorKind::InvalidInput, "adic order must be in [0, 4]");
    LiftResult lift = lift_idempotent(a, e, adic);
    XComplex x(a, adic, 2 * adic + 2);
    Chern0Result ch = chern0(x, e);
    FormSpace s(a, 2 * adic);
    Json entries = Json::array();
    for (const auto& row : lift.lift) {
      Json r = Json::array();
      for (const auto& f : row) r.push_back(s.str(f));
      entries.push_back(r);
    }
    Json deg0 = Json::array();
    for (const auto& c : ch.degree0) deg0.push_back(scalar_to_json(c));
    pass = lift.idempotent && ch.cycle;
    return Json{{"algebra", a.name}, {"adic", adic}, {"lift", entries}, {"idempotent", lift.idempotent},
                {"chern0", Json{{"trace", s.str(ch.trace)}, {"class_representative", ch.text}, {"degree0", deg0}, {"cycle", ch.cycle}}}};
  });
}

}  // extern "C"
