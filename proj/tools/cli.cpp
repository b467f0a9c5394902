// Config-driven front end: run verification suites, print dimension and
// multiplicity tables, dump induced-algebra structure constants, classify
// full bimodule structures over ergodic actions, and report the symbolic
// SU(2) adjoint analysis.

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tcat/suites.hpp"

using nlohmann::json;
using namespace tcat;

namespace {

ObjectExpr L(const std::string& s) { return ObjectExpr::letter(s); }

[[noreturn]] void config_error(const std::string& where,
                               const std::string& what) {
  throw Error("ConfigError", where + ": " + what);
}

// scalars: integers stay exact, doubles go floating, strings "p/q" are
// exact rationals, [re, im] pairs are complex
Scalar scalar_from(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_number_float()) return Scalar(j.get<double>());
  if (j.is_string()) {
    try {
      return Scalar(mpq_class(j.get<std::string>()));
    } catch (const std::exception&) {
      config_error(where, "not a rational: " + j.get<std::string>());
    }
  }
  if (j.is_array() && j.size() == 2) {
    Scalar re = scalar_from(j[0], where), im = scalar_from(j[1], where);
    if (re.is_exact() && im.is_exact())
      return re + im * Scalar(Exact::i());
    return Scalar(std::complex<double>(re.to_complex().real(),
                                       im.to_complex().real()));
  }
  config_error(where, "expected a number, \"p/q\" string or [re, im] pair");
}

Matrix matrix_from(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    config_error(where, "expected a row-major matrix (array of rows)");
  Matrix m(static_cast<int>(j.size()), static_cast<int>(j[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(j[i].size()) != m.cols())
      config_error(where, "ragged rows");
    for (int k = 0; k < m.cols(); ++k)
      m.at(i, k) = scalar_from(j[i][k],
                               where + "[" + std::to_string(i) + "]");
  }
  return m;
}

struct RunConfig {
  std::string path;
  double eps = 1e-10;
  unsigned seed = 1;
  int max_seq_len = 3;
  std::vector<std::string> suites;

  std::string ctx_type;  // "group_restriction" | "tl" | ""
  std::string pair = "S3>A3";
  std::string mu_kind = "restriction";  // or "spectral"
  Scalar tl_d = Scalar(2);
  TLVariant tl_variant = TLVariant::Pseudoreal;
  int tl_nmax = 4;
  FMatrix tl_f;

  std::string action_type;  // "weyl_pair" | "inner"
  std::string action_group = "Z2xZ2";
  std::string action_rep;
  std::string induce_pair;

  std::vector<int> su2_rs = {1, 2, 3, 4, 5};
  std::vector<std::string> classify_labels;
};

TLVariant variant_from(const std::string& s, const std::string& where) {
  if (s == "real") return TLVariant::Real;
  if (s == "pseudoreal") return TLVariant::Pseudoreal;
  if (s == "two_colored") return TLVariant::TwoColored;
  config_error(where, "unknown variant: " + s);
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error(path, "cannot open");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    config_error(path, e.what());
  }
  RunConfig c;
  c.path = path;
  if (j.contains("eps")) c.eps = j["eps"].get<double>();
  if (j.contains("seed")) c.seed = j["seed"].get<unsigned>();
  if (j.contains("max_seq_len")) c.max_seq_len = j["max_seq_len"].get<int>();
  if (j.contains("suites"))
    c.suites = j["suites"].get<std::vector<std::string>>();
  if (j.contains("context")) {
    const json& k = j["context"];
    c.ctx_type = k.value("type", "");
    if (c.ctx_type == "group_restriction") {
      c.pair = k.value("pair", "S3>A3");
      c.mu_kind = k.value("mu", "restriction");
      if (c.mu_kind != "restriction" && c.mu_kind != "spectral")
        config_error(path, "context.mu must be restriction or spectral");
    } else if (c.ctx_type == "tl") {
      if (k.contains("d")) c.tl_d = scalar_from(k["d"], "context.d");
      c.tl_variant = variant_from(k.value("variant", "pseudoreal"),
                                  "context.variant");
      c.tl_nmax = k.value("n_max", 4);
      if (!k.contains("F")) config_error(path, "tl context needs F");
      c.tl_f = FMatrix{matrix_from(k["F"], "context.F"), c.tl_variant};
    } else if (!c.ctx_type.empty()) {
      config_error(path, "unknown context.type: " + c.ctx_type);
    }
  }
  if (j.contains("action")) {
    const json& a = j["action"];
    c.action_type = a.value("type", "weyl_pair");
    c.action_group = a.value("group", "Z2xZ2");
    c.action_rep = a.value("rep", "");
    c.induce_pair = a.value("induce", "");
    if (c.action_type == "inner" && c.action_rep.empty())
      config_error(path, "inner action needs a rep name");
  }
  if (j.contains("su2") && j["su2"].contains("r"))
    c.su2_rs = j["su2"]["r"].get<std::vector<int>>();
  if (j.contains("classify"))
    c.classify_labels = j["classify"].get<std::vector<std::string>>();
  return c;
}

InductionContext context_from(const RunConfig& c) {
  if (c.ctx_type == "tl") return tl_context(c.tl_d, c.tl_f, c.tl_nmax);
  auto [g, sub] = builtin_pair(c.pair);
  std::string sub_key = c.pair.substr(c.pair.find('>') + 1);
  auto kb = builtin_group_backend(sub_key);
  auto restr = restriction_functor(g, sub, kb);
  if (c.mu_kind == "spectral")
    return InductionContext(
        forgetful_functor(g),
        compose_functors(minimal_functor(std::static_pointer_cast<
                                         const CategoryBackend>(kb)),
                         restr),
        c.eps);
  return InductionContext(forgetful_functor(g), restr, c.eps);
}

ErgodicAction action_from(const RunConfig& c) {
  if (c.action_type == "inner") {
    auto g = builtin_group_backend(c.action_group);
    if (!g->has_rep(c.action_rep))
      config_error(c.path, "unknown rep: " + c.action_rep);
    return ErgodicAction(g, g->rep(c.action_rep).mats, c.eps);
  }
  return weyl_pair_action_on(builtin_group_backend(c.action_group));
}

// one suite by name, parameterized by the config; TL contexts reroute the
// conjugate/appendix suites to the configured embedding
SuiteReport dispatch_suite(const std::string& name, const RunConfig& c) {
  if (c.ctx_type == "tl") {
    if (name == "conjugates")
      return suite_tl_conjugates(c.tl_d, c.tl_f, c.eps);
    if (name == "admissibility")
      return suite_admissibility(c.tl_d, c.tl_f, c.eps);
    if (name == "appendix") return suite_tl_appendix(c.tl_d, c.tl_f, c.eps);
  }
  if (name == "ind_hom") return suite_ind_hom(c.max_seq_len);
  if (name == "su2") return suite_su2(c.su2_rs);
  return run_suite(name, c.eps, c.seed);
}

json report_json(const RunConfig& c, const SuiteReport& rep) {
  json suites = json::array();
  json* cur = nullptr;
  for (auto& l : rep.lines) {
    if (!cur || (*cur)["name"] != l.suite) {
      suites.push_back({{"name", l.suite}, {"pass", true},
                        {"items", json::array()}});
      cur = &suites.back();
    }
    (*cur)["items"].push_back(
        {{"item", l.item},
         {"status", l.skipped ? "skip" : (l.pass ? "pass" : "fail")},
         {"detail", l.detail}});
    if (!l.skipped && !l.pass) (*cur)["pass"] = false;
  }
  return {{"config", c.path}, {"eps", c.eps},     {"seed", c.seed},
          {"pass", rep.pass()}, {"suites", suites}};
}

void write_reports(const RunConfig& c, const SuiteReport& rep,
                   const std::string& out_dir, const std::string& format) {
  std::filesystem::create_directories(out_dir);
  if (format == "json" || format == "both") {
    std::ofstream f(out_dir + "/report.json");
    f << report_json(c, rep).dump(2) << "\n";
  }
  if (format == "text" || format == "both") {
    std::ofstream f(out_dir + "/report.txt");
    f << rep.text();
  }
}

int cmd_verify(const RunConfig& c, const std::vector<std::string>& names,
               const std::string& out_dir, const std::string& format) {
  if (names.empty()) config_error(c.path, "no suites selected");
  // dispatch to a worker pool, assemble in the declared order
  std::vector<std::future<SuiteReport>> futs;
  for (auto& n : names)
    futs.push_back(std::async(std::launch::async,
                              [&c, n] { return dispatch_suite(n, c); }));
  SuiteReport rep;
  for (auto& f : futs) rep.merge(f.get());
  write_reports(c, rep, out_dir, format);
  std::cout << rep.text();
  std::cout << (rep.pass() ? "all checks passed"
                           : std::to_string(rep.failures()) +
                                 " check(s) failed")
            << "\n";
  return rep.pass() ? 0 : 1;
}

int cmd_dims(const RunConfig& c) {
  if (c.ctx_type == "tl") {
    auto tl = std::make_shared<TLBackend>(c.tl_d, c.tl_variant, c.tl_nmax);
    std::cout << "label  quantum dimension\n";
    for (auto& l : tl->irreducible_labels())
      std::cout << l << "  " << intrinsic_dimension(*tl, L(l)).str() << "\n";
    return 0;
  }
  auto [g, sub] = builtin_pair(c.pair);
  std::string sub_key = c.pair.substr(c.pair.find('>') + 1);
  auto kb = builtin_group_backend(sub_key);
  std::cout << "irrep  dim  d(u)  restriction to " << sub_key << "\n";
  for (auto& lu : g->irreducible_labels()) {
    std::cout << lu << "  " << g->rep(lu).dim << "  "
              << intrinsic_dimension(*g, L(lu)).str() << "  ";
    bool first = true;
    for (auto& lv : kb->irreducible_labels()) {
      Scalar m;
      for (int k = 0; k < sub.group.n; ++k)
        m += kb->character(L(lv), k).conj() *
             g->character(L(lu), sub.embed[k]);
      m = m / Scalar(sub.group.n);
      long mi = std::lround(m.to_complex().real());
      if (mi > 0) {
        std::cout << (first ? "" : " + ");
        if (mi > 1) std::cout << mi << "*";
        std::cout << lv;
        first = false;
      }
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_induce(const RunConfig& c) {
  InductionContext ctx = context_from(c);
  // algebra basis with printable names
  std::vector<SpectralElement> basis;
  std::vector<std::string> names;
  for (auto& l : ctx.source()->irreducible_labels()) {
    ObjectExpr lo = ctx.source()->label_object(l);
    size_t slots = ctx.slot_basis(l, ObjectExpr::unit()).size();
    for (size_t r = 0; r < slots; ++r)
      for (int i = 0; i < ctx.tau_dim(lo); ++i) {
        basis.push_back(
            ctx.coefficient_element(l, static_cast<int>(r), i));
        names.push_back("c[" + l + "," + std::to_string(r) + "," +
                        std::to_string(i) + "]");
      }
  }
  std::cout << "spectral algebra dimension: " << basis.size() << "\n";
  std::cout << "structure constants (products over the coefficient basis):\n";
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = 0; b < basis.size(); ++b) {
      SpectralElement p = ctx.mul(basis[a], basis[b]);
      std::cout << "  " << names[a] << " . " << names[b] << " =";
      bool any = false;
      // unit component
      Scalar u = ctx.invariant_state(p);
      for (size_t k = 0; k < basis.size(); ++k) {
        // coefficient of basis[k] = comp entry at its (label, slot, index)
        SpectralElement probe = basis[k];
        Scalar coef;
        for (auto& [l, m] : probe.comp)
          for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
              if (!m.at(i, j).is_zero(1e-12)) {
                auto it = p.comp.find(l);
                if (it != p.comp.end()) coef = it->second.at(i, j);
              }
        if (!coef.is_zero(1e-12)) {
          std::cout << (any ? " + " : " ") << "(" << coef.str() << ")*"
                    << names[k];
          any = true;
        }
      }
      if (!any) std::cout << " " << (u.is_zero(1e-12) ? "0" : u.str());
      std::cout << "\n";
    }
  // bimodule dimensions over single irreducible letters
  std::cout << "bimodule dimensions (label: sum over slots of dim tau):\n";
  for (auto& l : ctx.source()->irreducible_labels()) {
    ObjectExpr lo = ctx.source()->label_object(l);
    ObjectExpr m = ctx.m_of({lo});
    size_t d = 0;
    for (auto& [v, iso] : ctx.source()->fusion(lo)) {
      (void)iso;
      ObjectExpr vo = ctx.source()->label_object(v);
      d += ctx.slot_basis(v, m).size() * ctx.tau_dim(vo);
    }
    std::cout << "  H[" << l << "]: " << d << "\n";
  }
  return 0;
}

int cmd_classify(const RunConfig& c) {
  ErgodicAction act = action_from(c);
  auto labels = c.classify_labels.empty()
                    ? act.backend()->irreducible_labels()
                    : c.classify_labels;
  int rc = 0;
  for (auto& l : labels) {
    ClassifyReport rep = classify_pairs(L(l), act);
    std::cout << l << ": dim " << rep.dim_v << ", spectral multiplicity "
              << rep.mult << "\n";
    if (rep.full_multiplicity) {
      std::cout << "  full multiplicity: unique structure, no pairing "
                   "needed\n";
      continue;
    }
    for (auto& cls : rep.classes) {
      std::cout << "  z = {";
      for (size_t i = 0; i < cls.z_labels.size(); ++i)
        std::cout << (i ? ", " : "") << cls.z_labels[i];
      std::cout << "}: hom-dim " << cls.hom_dim << ", "
                << (cls.exists ? "structure exists" : "no structure")
                << ", class parameters " << cls.param_dim << "\n";
    }
    if (!rep.exists_any()) {
      std::cout << "  no full structure on " << l << " x beta\n";
    }
    if (!rep.exhaustive)
      std::cout << "  (search not exhaustive at this bound)\n";
  }
  return rc;
}

int cmd_su2(const std::vector<int>& rs) {
  for (int r : rs) {
    Su2Report rep = su2_adjoint_report(r);
    std::cout << "r = " << r << ": spectrum {";
    for (size_t i = 0; i < rep.spectrum.size(); ++i)
      std::cout << (i ? ", " : "") << rep.spectrum[i];
    std::cout << "}\n  " << rep.verdict_v1 << "\n  " << rep.verdict_v2
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for induced Hilbert bimodules "
               "over tensor C*-categories"};
  app.require_subcommand(1);

  std::string config_path, suite_csv, out_dir = ".", format = "both";
  double eps_flag = -1;
  long seed_flag = -1;
  std::vector<int> r_flags;

  auto add_common = [&](CLI::App* sc, bool need_config) {
    auto* o = sc->add_option("--config", config_path, "config file (JSON)");
    if (need_config) o->required();
    sc->add_option("--eps", eps_flag, "numerical tolerance override");
    sc->add_option("--seed", seed_flag, "sampling seed override");
  };

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, true);
  verify->add_option("--suite", suite_csv,
                     "comma-separated suite names (overrides the config)");
  verify->add_option("--out", out_dir, "report output directory");
  verify->add_option("--format", format, "json|text|both")
      ->check(CLI::IsMember({"json", "text", "both"}));

  auto* dims = app.add_subcommand(
      "dims", "intrinsic dimension and multiplicity tables");
  add_common(dims, true);

  auto* induce = app.add_subcommand(
      "induce", "dump spectral-algebra structure constants");
  add_common(induce, true);

  auto* classify = app.add_subcommand(
      "classify", "classify full bimodule structures over an ergodic action");
  add_common(classify, true);

  auto* su2 = app.add_subcommand("su2", "symbolic SU(2) adjoint analysis");
  add_common(su2, false);
  su2->add_option("--r", r_flags, "adjoint levels to analyze");

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg = load_config(config_path);
    if (eps_flag >= 0) cfg.eps = eps_flag;
    if (seed_flag >= 0) cfg.seed = static_cast<unsigned>(seed_flag);

    if (verify->parsed()) {
      std::vector<std::string> names = cfg.suites;
      if (!suite_csv.empty()) {
        names.clear();
        std::stringstream ss(suite_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) names.push_back(tok);
      }
      return cmd_verify(cfg, names, out_dir, format);
    }
    if (dims->parsed()) return cmd_dims(cfg);
    if (induce->parsed()) return cmd_induce(cfg);
    if (classify->parsed()) return cmd_classify(cfg);
    if (su2->parsed())
      return cmd_su2(r_flags.empty() ? cfg.su2_rs : r_flags);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code == "ConfigError" ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
