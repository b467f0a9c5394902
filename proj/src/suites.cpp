#include "tcat/suites.hpp"

#include <random>
#include <sstream>

namespace tcat {

namespace {

ObjectExpr L(const std::string& s) { return ObjectExpr::letter(s); }

Scalar I() { return Scalar(Exact::i()); }

FMatrix default_pseudoreal_f() {
  Matrix f(2, 2);
  f.at(0, 1) = Scalar(1);
  f.at(1, 0) = Scalar(-1);
  return FMatrix{f, TLVariant::Pseudoreal};
}

// basis arrows between all object pairs plus seeded generic combinations
std::vector<Arrow> sampled_corpus(const CategoryBackend& c,
                                  const std::vector<ObjectExpr>& objs,
                                  unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<Arrow> out;
  for (auto& u : objs)
    for (auto& v : objs) {
      auto basis = c.hom_basis(u, v);
      if (basis.empty()) continue;
      for (auto& a : basis) out.push_back(a);
      for (int t = 0; t < 2; ++t) {
        Arrow mix = CategoryBackend::scale(basis[0], Scalar(coef(rng)));
        for (size_t k = 1; k < basis.size(); ++k)
          mix = CategoryBackend::add(
              mix, CategoryBackend::scale(
                       basis[k], Scalar(coef(rng)) + I() * Scalar(coef(rng))));
        out.push_back(mix);
      }
    }
  return out;
}

// bimodule elements over a single object: all normal-form slot generators
// with simple tau-vectors, plus the free generators
std::vector<BimoduleElement> corpus_of(const InductionContext& ctx,
                                       const ObjectExpr& u) {
  std::vector<BimoduleElement> out;
  ObjectExpr mu_u = ctx.mu().obj(u);
  for (auto& [v, iso] : ctx.source()->fusion(u)) {
    (void)iso;
    ObjectExpr vo = ctx.source()->label_object(v);
    const auto& basis = ctx.slot_basis(v, mu_u);
    for (size_t k = 0; k < basis.size(); ++k)
      for (int t = 0; t < ctx.tau_dim(vo); ++t) {
        Matrix psi(ctx.tau_dim(vo), 1);
        psi.at(t, 0) = Scalar(1) + Scalar(static_cast<long>(k)) * I();
        out.push_back(ctx.normalize({u}, basis[k], vo, psi));
      }
  }
  for (int i = 0; i < ctx.tau_dim(u); ++i) out.push_back(ctx.x_basis(u, i));
  return out;
}

std::vector<SpectralElement> algebra_basis(const InductionContext& ctx) {
  std::vector<SpectralElement> out;
  for (auto& l : ctx.source()->irreducible_labels()) {
    ObjectExpr lo = ctx.source()->label_object(l);
    size_t n = ctx.slot_basis(l, ObjectExpr::unit()).size();
    for (size_t r = 0; r < n; ++r)
      for (int i = 0; i < ctx.tau_dim(lo); ++i)
        out.push_back(ctx.coefficient_element(l, static_cast<int>(r), i));
  }
  return out;
}

// all words of length <= max_len over the given letters, empty word first
std::vector<std::vector<ObjectExpr>> short_sequences(
    const std::vector<std::string>& letters, int max_len) {
  std::vector<std::vector<ObjectExpr>> out = {{}};
  size_t lo = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t hi = out.size();
    for (size_t i = lo; i < hi; ++i)
      for (auto& l : letters) {
        auto s = out[i];
        s.push_back(L(l));
        out.push_back(std::move(s));
      }
    lo = hi;
  }
  return out;
}

std::string seq_str(const std::vector<ObjectExpr>& seq) {
  if (seq.empty()) return "()";
  std::string s;
  for (auto& o : seq) s += (s.empty() ? "" : ",") + o.str();
  return s;
}

}  // namespace

void SuiteReport::add(const std::string& suite, const std::string& item,
                      bool ok, const std::string& detail) {
  lines.push_back({suite, item, ok, false, detail});
}

void SuiteReport::skip(const std::string& suite, const std::string& item,
                       const std::string& why) {
  lines.push_back({suite, item, false, true, why});
}

void SuiteReport::merge(const SuiteReport& o) {
  lines.insert(lines.end(), o.lines.begin(), o.lines.end());
}

bool SuiteReport::pass() const { return failures() == 0; }

int SuiteReport::failures() const {
  int n = 0;
  for (auto& l : lines)
    if (!l.skipped && !l.pass) ++n;
  return n;
}

std::string SuiteReport::text() const {
  std::ostringstream os;
  for (auto& l : lines) {
    os << "[" << (l.skipped ? "skip" : (l.pass ? "pass" : "FAIL")) << "] "
       << l.suite << " :: " << l.item;
    if (!l.detail.empty()) os << "  -- " << l.detail;
    os << "\n";
  }
  return os.str();
}

const InductionContext& restriction_context() {
  static InductionContext* ctx = [] {
    auto [g, sub] = builtin_pair("S3>A3");
    auto kb = builtin_group_backend("A3");
    return new InductionContext(forgetful_functor(g),
                                restriction_functor(g, sub, kb), 1e-12);
  }();
  return *ctx;
}

const InductionContext& spectral_context() {
  static InductionContext* ctx = [] {
    auto [g, sub] = builtin_pair("S3>A3");
    auto kb = builtin_group_backend("A3");
    auto spec = compose_functors(
        minimal_functor(std::static_pointer_cast<const CategoryBackend>(kb)),
        restriction_functor(g, sub, kb));
    return new InductionContext(forgetful_functor(g), spec, 1e-12);
  }();
  return *ctx;
}

InductionContext tl_context(const Scalar& d, const FMatrix& f, int n_max) {
  auto tl = std::make_shared<TLBackend>(d, f.variant, n_max);
  auto tau = embed_tau_F(tl, f);
  return InductionContext(
      tau,
      identity_functor(std::static_pointer_cast<const CategoryBackend>(tl)),
      1e-12);
}

SuiteReport suite_conjugates(double eps) {
  SuiteReport rep;
  const std::string S = "conjugates";

  // Temperley-Lieb at loop parameter 2, pseudoreal variant
  auto tl = std::make_shared<TLBackend>(Scalar(2), TLVariant::Pseudoreal, 4);
  auto sx = tl->letter_solution("x");
  rep.add(S, "TL d=2: conjugate equations for the generator",
          verify_conjugate_equations(*tl, sx, eps),
          "(R* x 1)(1 x Rbar) = 1 and the swapped identity");
  rep.add(S, "TL d=2: standardness of the generator solution",
          verify_standardness(*tl, sx, eps),
          "tracial balance R*(1 x Y)R = Rbar*(Y x 1)Rbar");
  Scalar dx = intrinsic_dimension(*tl, L("x"));
  rep.add(S, "TL d=2: intrinsic dimension of the generator is 2 exactly",
          dx.is_exact() && Scalar::eq(dx, Scalar(2), eps),
          "||R||^2 = 2, the minimal dimension of a 2-dim object");
  Scalar du = intrinsic_dimension(*tl, ObjectExpr::unit());
  rep.add(S, "tensor unit has intrinsic dimension 1 exactly",
          du.is_exact() && Scalar::eq(du, Scalar(1), eps), "d(unit) = 1");

  // all irreducibles of the built-in S3 and A4 backends
  for (const char* key : {"S3", "A4"}) {
    auto g = builtin_group_backend(key);
    bool all = true, std_dims = true;
    for (auto& l : g->irreducible_labels()) {
      auto s = g->letter_solution(l);
      all = all && verify_conjugate_equations(*g, s, eps) &&
            verify_standardness(*g, s, eps);
      Scalar d = intrinsic_dimension(*g, L(l));
      std_dims = std_dims && d.is_exact() &&
                 Scalar::eq(d, Scalar(g->rep(l).dim), eps);
    }
    rep.add(S, std::string(key) + ": conjugate equations for all irreducibles",
            all, "standard solutions solve the equations exactly");
    rep.add(S,
            std::string(key) +
                ": intrinsic dimensions equal vector-space dimensions",
            std_dims, "d(u) = dim H_u for group representations");
  }
  Scalar dstd = intrinsic_dimension(*builtin_group_backend("S3"), L("std"));
  rep.add(S, "S3: d(std) = 2 exactly",
          dstd.is_exact() && Scalar::eq(dstd, Scalar(2), eps), "");
  return rep;
}

SuiteReport suite_admissibility(const Scalar& d, const FMatrix& f,
                                double eps) {
  SuiteReport rep;
  const std::string S = "admissibility";
  rep.add(S, "trace conditions and the reality constraint",
          check_F_admissible(f, d, eps),
          "Tr(FF*) = Tr((FF*)^{-1}) = d with the variant's reality rule");
  // admissibility transports to a working embedding
  auto tl = std::make_shared<TLBackend>(d, f.variant, 4);
  auto tau = embed_tau_F(tl, f);
  auto img = image_solution(tau, tl->letter_solution("x"));
  rep.add(S, "tau_F carries the cup to a conjugate solution in Hilb",
          verify_conjugate_equations(*tau.target, img, eps), "");
  return rep;
}

SuiteReport suite_tl_conjugates(const Scalar& d, const FMatrix& f,
                                double eps) {
  SuiteReport rep;
  const std::string S = "conjugates";
  const int n_max = 4;
  auto tl = std::make_shared<TLBackend>(d, f.variant, n_max);
  auto tau = embed_tau_F(tl, f);
  for (auto& l : tl->irreducible_labels()) {
    // the equations tensor three copies of the word; skip labels whose
    // expanded words would overflow the diagram truncation
    size_t len = tl->expand(L(l)).word.size();
    if (3 * len > 2 * static_cast<size_t>(n_max)) continue;
    auto s = tl->letter_solution(l);
    rep.add(S, l + ": conjugate equations and standardness",
            verify_conjugate_equations(*tl, s, eps) &&
                verify_standardness(*tl, s, eps),
            "");
    // the embedded solution lives on the ambient strand space, where the
    // snake identities close up to the projector onto the label's image
    auto img = image_solution(tau, s);
    const CategoryBackend& h = *tau.target;
    Arrow iu = h.identity(img.obj);
    Arrow ic = h.identity(img.conj);
    Arrow proj = tau.arr(tl->identity(L(l)));
    Arrow snake1 = h.compose(h.tensor(h.adjoint(img.Rbar), iu),
                             h.tensor(iu, img.R));
    Arrow snake2 = h.compose(h.tensor(h.adjoint(img.R), ic),
                             h.tensor(ic, img.Rbar));
    bool snakes = approx_eq(snake1.m, proj.m, eps) &&
                  approx_eq(snake2.m, proj.m, eps);
    Scalar dim = h.scalar_of(h.compose(h.adjoint(img.R), img.R));
    rep.add(S,
            l + ": embedded solution closes onto the label projector with "
                "d = " + intrinsic_dimension(*tl, L(l)).str(),
            snakes && Scalar::eq(dim, intrinsic_dimension(*tl, L(l)), eps),
            "snake identities against tau of the label identity");
  }
  return rep;
}

SuiteReport suite_tl_appendix(const Scalar& d, const FMatrix& f, double eps) {
  SuiteReport rep;
  auto tl = std::make_shared<TLBackend>(d, f.variant, 4);
  auto tau = embed_tau_F(tl, f);
  ObjectExpr x = L("x");
  for (auto& [u, v] : std::vector<std::pair<ObjectExpr, ObjectExpr>>{
           {x, x}, {x, x.tensor(x)}}) {
    auto r = verify_appendix_identities(tau, u, v, eps);
    rep.add("appendix",
            "conjugation identities for tau_F at (" + u.str() + ", " +
                v.str() + ")",
            r.all_passed(), r.all_passed() ? "" : r.str());
  }
  return rep;
}

SuiteReport suite_quasitensor(double eps, unsigned seed, int min_corpus) {
  SuiteReport rep;
  const std::string S = "quasitensor";

  struct Case {
    std::string name;
    QuasitensorFunctor f;
    std::vector<ObjectExpr> objs;
    std::shared_ptr<const CategoryBackend> src;
  };
  std::vector<Case> cases;
  {
    auto [g, sub] = builtin_pair("S3>A3");
    auto kb = builtin_group_backend("A3");
    std::vector<ObjectExpr> objs = {ObjectExpr::unit(), L("sgn"), L("std"),
                                    L("std").tensor(L("std")),
                                    L("std").tensor(L("sgn"))};
    cases.push_back({"restriction S3 -> A3",
                     restriction_functor(g, sub, kb), objs, g});
    auto spec = compose_functors(
        minimal_functor(std::static_pointer_cast<const CategoryBackend>(kb)),
        restriction_functor(g, sub, kb));
    cases.push_back({"spectral functor of A3\\S3 (minimal after restriction)",
                     spec, objs, g});
  }
  {
    auto [g, sub] = builtin_pair("S4>A4");
    auto kb = builtin_group_backend("A4");
    std::vector<ObjectExpr> objs = {ObjectExpr::unit(), L("sgn"), L("two"),
                                    L("std"), L("std").tensor(L("sgn")),
                                    L("two").tensor(L("two"))};
    cases.push_back({"restriction S4 -> A4",
                     restriction_functor(g, sub, kb), objs, g});
  }
  for (auto& c : cases) {
    auto arrows = sampled_corpus(*c.src, c.objs, seed);
    auto r = verify_quasitensor_axioms(c.f, c.objs, arrows, eps);
    bool big_enough = static_cast<int>(arrows.size()) >= min_corpus;
    rep.add(S, c.name + " (" + std::to_string(arrows.size()) + " arrows)",
            r.all_passed() && big_enough,
            r.all_passed() ? "unit, isometry, commuting square, naturality, "
                             "associativity"
                           : r.str());
  }
  return rep;
}

SuiteReport suite_appendix(double eps) {
  SuiteReport rep;
  const std::string S = "appendix";

  struct Case {
    std::string name;
    QuasitensorFunctor f;
    std::vector<std::pair<ObjectExpr, ObjectExpr>> pairs;
  };
  std::vector<Case> cases;
  {
    auto [g, sub] = builtin_pair("S3>A3");
    auto kb = builtin_group_backend("A3");
    cases.push_back({"restriction S3 -> A3",
                     restriction_functor(g, sub, kb),
                     {{L("sgn"), L("std")}, {L("std"), L("std")}}});
    auto spec = compose_functors(
        minimal_functor(std::static_pointer_cast<const CategoryBackend>(kb)),
        restriction_functor(g, sub, kb));
    cases.push_back({"spectral functor of A3\\S3", spec,
                     {{L("sgn"), L("sgn")}, {L("std"), L("std")}}});
  }
  {
    auto [g, sub] = builtin_pair("S4>A4");
    auto kb = builtin_group_backend("A4");
    cases.push_back({"restriction S4 -> A4",
                     restriction_functor(g, sub, kb),
                     {{L("sgn"), L("two")}, {L("std"), L("two")}}});
  }
  for (auto& c : cases)
    for (auto& [u, v] : c.pairs) {
      auto r = verify_appendix_identities(c.f, u, v, eps);
      rep.add(S,
              c.name + " at (" + u.str() + ", " + v.str() + ")",
              r.all_passed(),
              r.all_passed()
                  ? "mu-tilde of conjugates, compressed-map conjugation, "
                    "R-bullet = R"
                  : r.str());
    }
  return rep;
}

SuiteReport suite_positivity(double eps, int min_corpus) {
  SuiteReport rep;
  const std::string S = "positivity";
  struct Ctx {
    const char* name;
    const InductionContext* ctx;
  };
  for (auto& [name, pctx] : std::vector<Ctx>{
           {"restriction", &restriction_context()},
           {"spectral", &spectral_context()}}) {
    const auto& ctx = *pctx;
    for (auto& u : {L("triv"), L("sgn"), L("std"),
                    L("std").tensor(L("std"))}) {
      auto corpus = corpus_of(ctx, u);
      // pad with generic combinations up to the requested corpus size
      size_t base = corpus.size();
      for (size_t k = 0; corpus.size() < static_cast<size_t>(min_corpus) &&
                         base > 0;
           ++k) {
        auto& a = corpus[k % base];
        auto& b = corpus[(k + 1) % base];
        corpus.push_back(
            add(a, scale(b, Scalar(static_cast<long>(k + 2)) + I())));
      }
      int m = static_cast<int>(corpus.size());
      Matrix gram(m, m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          gram.at(i, j) =
              ctx.invariant_state(ctx.inner_product(corpus[i], corpus[j]));
      bool herm = approx_eq(gram, gram.adjoint(), eps);
      auto psd = psd_certificate(gram);
      bool ok = herm && psd.lambda_min >= -1e-10 &&
                (!psd.exact_certified || psd.exact_psd);
      rep.add(S,
              std::string(name) + " context, Gram of " + std::to_string(m) +
                  " elements over " + u.str(),
              ok,
              psd.exact_certified ? "exact LDL* certificate"
                                  : "floating eigenvalue bound");
    }
  }
  return rep;
}

SuiteReport suite_swan(double eps) {
  SuiteReport rep;
  const std::string S = "swan";
  const auto& ctx = restriction_context();
  for (auto& u : {L("sgn"), L("std"), L("std").tensor(L("sgn"))}) {
    bool free = ctx.free_module_condition(u);
    int n = ctx.tau_dim(u);
    bool ortho = true;
    for (int i = 0; i < n && ortho; ++i)
      for (int j = 0; j < n && ortho; ++j) {
        auto ip = ctx.inner_product(ctx.x_basis(u, i), ctx.x_basis(u, j));
        ortho = (i == j) ? approx_equal(ip, ctx.unit(), eps)
                         : is_zero(ip, eps);
      }
    bool full = true;
    for (int k = 0; k < n && full; ++k) {
      std::vector<SpectralElement> e;
      for (int i = 0; i < n; ++i)
        e.push_back(i == k ? ctx.unit() : ctx.zero({}));
      auto p = ctx.range_projection(u, e);
      for (int i = 0; i < n; ++i) full = full && approx_equal(p[i], e[i], eps);
    }
    rep.add(S, "tensorial mu: free module over " + u.str(),
            free && ortho && full,
            "<x_i, x_j> = delta_ij and P_u = identity");
  }
  // a non-spectral irreducible dies under the spectral functor
  const auto& sc = spectral_context();
  bool dead = !sc.free_module_condition(L("std"));
  for (auto& xi : corpus_of(sc, L("std"))) dead = dead && is_zero(xi, eps);
  for (int i = 0; i < 2; ++i)
    dead = dead && is_zero(sc.x_basis(L("std"), i), eps);
  rep.add(S, "spectral mu: non-spectral irreducible gives the zero bimodule",
          dead, "std has no fixed vectors in the quotient");
  // Swan isometry on a spectral but non-free object
  ObjectExpr ss = L("std").tensor(L("std"));
  bool iso = true;
  for (auto& xi : corpus_of(sc, ss))
    iso = iso && approx_equal(sc.swan_adjoint(ss, sc.swan(ss, xi)), xi, eps);
  rep.add(S, "spectral mu: S*S = 1 on the bimodule over std x std", iso,
          "the Swan map is isometric even when P is a proper projection");
  return rep;
}

SuiteReport suite_left_action(double eps) {
  SuiteReport rep;
  const std::string S = "left_action";
  const auto& ctx = spectral_context();
  auto cbasis = algebra_basis(ctx);
  SpectralElement one = ctx.unit();

  for (auto& u : {L("sgn"), L("std").tensor(L("std"))}) {
    int n = ctx.tau_dim(u);
    auto fixed = ctx.target()->hom_basis(ctx.mu().obj(u), ObjectExpr::unit());
    std::vector<std::vector<SpectralElement>> gen(fixed.size());
    for (size_t r = 0; r < fixed.size(); ++r)
      for (int i = 0; i < n; ++i) {
        Matrix e(n, 1);
        e.at(i, 0) = Scalar(1);
        gen[r].push_back(ctx.normalize({}, fixed[r], u, e));
      }
    std::vector<SpectralElement> cs = cbasis;
    cs.push_back(one);
    bool closed = true, quotient = true;
    for (auto& c : cs)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          auto lhs = ctx.inner_product(ctx.x_basis(u, i),
                                       ctx.mul(c, ctx.x_basis(u, j)));
          closed = closed &&
                   approx_equal(lhs, ctx.left_action_entry(u, c, i, j), eps);
          SpectralElement rhs = ctx.zero({});
          for (size_t r = 0; r < fixed.size(); ++r)
            rhs = add(rhs,
                      ctx.mul(ctx.mul(ctx.star(gen[r][i]), c), gen[r][j]));
          quotient = quotient && approx_equal(lhs, rhs, eps);
        }
    rep.add(S, "closed form of <x_i, c x_j> over " + u.str(), closed,
            "left-action matrix elements");
    rep.add(S, "quotient formula sum_r g_ri* c g_rj over " + u.str(),
            quotient, "matrix elements through the fixed-vector generators");
  }
  return rep;
}

SuiteReport suite_fullness(double eps) {
  SuiteReport rep;
  const std::string S = "fullness";
  struct Ctx {
    const char* name;
    const InductionContext* ctx;
  };
  // fixed vectors of the conjugate bimodules are central
  for (auto& [name, pctx] : std::vector<Ctx>{
           {"restriction", &restriction_context()},
           {"spectral", &spectral_context()}}) {
    const auto& ctx = *pctx;
    auto cbasis = algebra_basis(ctx);
    cbasis.push_back(ctx.unit());
    ObjectExpr ss = L("std").tensor(L("std"));
    bool central = true;
    for (auto& useq :
         std::vector<std::vector<ObjectExpr>>{{ss}, {L("std"), L("std")}}) {
      ObjectExpr m = ctx.m_of(useq);
      const auto& fb = ctx.slot_basis(ctx.trivial_label(), m);
      for (size_t k = 0; k < fb.size(); ++k) {
        BimoduleElement zeta = ctx.zero(useq);
        Matrix cm(static_cast<int>(fb.size()), 1);
        cm.at(static_cast<int>(k), 0) = Scalar(1);
        zeta.comp[ctx.trivial_label()] = cm;
        for (auto& c : cbasis)
          central = central &&
                    approx_equal(ctx.mul(c, zeta), ctx.mul(zeta, c), eps);
      }
    }
    rep.add(S, std::string(name) + ": fixed vectors are central", central,
            "c zeta = zeta c for every spectral element");
  }
  // module intertwiners are bimodule intertwiners
  const auto& ctx = restriction_context();
  auto cbasis = algebra_basis(ctx);
  std::vector<ObjectExpr> us = {L("std")}, vs = {L("std"), L("sgn")};
  auto corpus = corpus_of(ctx, L("std"));
  bool bimod = true;
  for (auto& tmap : ctx.ind_hom(us, vs))
    for (auto& xi : corpus) {
      auto txi = ctx.lambda_map(tmap, xi, vs);
      for (auto& c : cbasis) {
        bimod = bimod &&
                approx_equal(ctx.lambda_map(tmap, ctx.mul(c, xi), vs),
                             ctx.mul(c, txi), eps) &&
                approx_equal(ctx.lambda_map(tmap, ctx.mul(xi, c), vs),
                             ctx.mul(txi, c), eps);
      }
    }
  rep.add(S, "induced maps commute with both module actions", bimod,
          "T(c xi c') = c T(xi) c'");
  return rep;
}

SuiteReport suite_ind_hom(int max_len) {
  SuiteReport rep;
  const std::string S = "ind_hom";
  const auto& ctx = restriction_context();
  auto kb = std::static_pointer_cast<const GroupBackend>(ctx.target());
  auto seqs = short_sequences({"triv", "sgn", "std"}, max_len);
  for (auto& us : seqs) {
    bool ok = true;
    ObjectExpr mu_ = ctx.m_of(us);
    for (auto& vs : seqs) {
      auto maps = ctx.ind_hom(us, vs);
      Scalar oracle = kb->hom_dim_by_characters(mu_, ctx.m_of(vs));
      ok = ok && Scalar::eq(Scalar(static_cast<long>(maps.size())), oracle,
                            1e-9);
      if (!ok) break;
    }
    rep.add(S, "induced hom dimensions from (" + seq_str(us) + ")", ok,
            "dim ind-hom = dim(mu_u, mu_v), character oracle");
  }
  return rep;
}

SuiteReport suite_multiplication(double eps) {
  SuiteReport rep;
  const std::string S = "multiplication";
  const auto& ctx = restriction_context();
  ObjectExpr u = L("std"), v = L("sgn");
  const CategoryBackend& t = *ctx.target();
  Arrow mu2 = multi_mu(ctx.mu(), {u, v});

  auto cu = corpus_of(ctx, u);
  auto cv = corpus_of(ctx, v);
  bool isometric = true, single = true;
  for (size_t a = 0; a < cu.size(); a += 2)
    for (size_t b = 0; b < cv.size(); ++b) {
      auto xi = ctx.mul(cu[a], cv[b]);
      auto flat = ctx.lambda_map(mu2, xi, {u.tensor(v)});
      for (size_t a2 = 0; a2 < cu.size(); a2 += 3)
        for (size_t b2 = 0; b2 < cv.size(); ++b2) {
          auto eta = ctx.mul(cu[a2], cv[b2]);
          auto flat2 = ctx.lambda_map(mu2, eta, {u.tensor(v)});
          isometric = isometric &&
                      approx_equal(ctx.inner_product(xi, eta),
                                   ctx.inner_product(flat, flat2), eps);
        }
      single = single && approx_equal(flat, ctx.dot(cu[a], cv[b]), eps);
    }
  rep.add(S, "lambda(mu-tilde) preserves inner products", isometric,
          "<xi eta, xi' eta'> computed before and after flattening");
  rep.add(S, "flattened product equals the single-object product", single,
          "");

  // surjectivity: reconstruct every normal-form basis element as a sum of
  // products via the conjugate-equation splitting
  std::vector<ObjectExpr> seq = {u, v};
  ObjectExpr m = ctx.m_of(seq);
  ConjugateSolution su = ctx.solution(u);
  ConjugateSolution sum = image_solution(ctx.mu(), su);
  Matrix ju = ctx.j_matrix(su);
  bool onto = true;
  for (auto& w : ctx.source()->irreducible_labels()) {
    ObjectExpr wo = ctx.source()->label_object(w);
    for (auto& bk : ctx.slot_basis(w, m))
      for (int s = 0; s < ctx.tau_dim(wo); ++s) {
        Matrix psi(ctx.tau_dim(wo), 1);
        psi.at(s, 0) = Scalar(1);
        BimoduleElement zeta = ctx.normalize(seq, bk, wo, psi);
        Arrow tprime = t.compose_many(
            {t.tensor(t.adjoint(sum.R), t.identity(ctx.mu().obj(v))),
             t.tensor(t.identity(sum.conj), bk),
             t.adjoint(ctx.mu().mu(su.conj, wo))});
        BimoduleElement rec = ctx.zero(seq);
        for (int j = 0; j < ctx.tau_dim(u); ++j) {
          Matrix ej(ctx.tau_dim(u), 1);
          ej.at(j, 0) = Scalar(1);
          auto eta = ctx.normalize({v}, tprime, su.conj.tensor(wo),
                                   (ju * ej).kron(psi));
          rec = add(rec, ctx.mul(ctx.x_basis(u, j), eta));
        }
        onto = onto && approx_equal(rec, zeta, eps);
      }
  }
  rep.add(S, "every basis element is a sum of products", onto,
          "surjectivity of the multiplication map");
  return rep;
}

SuiteReport suite_frobenius() {
  SuiteReport rep;
  const std::string S = "frobenius";
  for (auto& [key, sub_key] : std::vector<std::pair<std::string, std::string>>{
           {"S3>A3", "A3"}, {"S4>A4", "A4"}}) {
    auto [g, sub] = builtin_pair(key);
    auto kb = builtin_group_backend(sub_key);
    const FiniteGroup& G = g->group();
    const FiniteGroup& K = sub.group;
    std::vector<bool> in_k(G.n, false);
    std::vector<int> to_k(G.n, -1);
    for (int k = 0; k < K.n; ++k) {
      in_k[sub.embed[k]] = true;
      to_k[sub.embed[k]] = k;
    }
    bool ok = true;
    for (auto& lu : g->irreducible_labels())
      for (auto& lv : kb->irreducible_labels()) {
        // restriction side: 1/|K| sum_k chi_v(k)* chi_u(k)
        Scalar res;
        for (int k = 0; k < K.n; ++k)
          res += kb->character(L(lv), k).conj() *
                 g->character(L(lu), sub.embed[k]);
        res = res / Scalar(K.n);
        // induction side: chi_Ind(x) = 1/|K| sum_{t: t^-1 x t in K} chi_v
        Scalar ind;
        for (int x = 0; x < G.n; ++x) {
          Scalar chi_ind;
          for (int t = 0; t < G.n; ++t) {
            int c = G.mul(G.inv[t], G.mul(x, t));
            if (in_k[c]) chi_ind += kb->character(L(lv), to_k[c]);
          }
          ind += g->character(L(lu), x).conj() * chi_ind / Scalar(K.n);
        }
        ind = ind / Scalar(G.n);
        ok = ok && res.is_exact() && ind.is_exact() &&
             Scalar::eq(res, ind, 1e-12);
      }
    rep.add(S, key + ": dim(u restricted, v) = dim(u, Ind v)", ok,
            "character oracle on both sides, exact integers");
  }
  return rep;
}

SuiteReport suite_eigenmatrix(double eps) {
  SuiteReport rep;
  const std::string S = "eigenmatrix";
  ErgodicAction act = weyl_pair_action();
  rep.add(S, "Weyl pair action is ergodic", true,
          "rank-one Reynolds projector certified at construction");
  bool rejected = false;
  try {
    ErgodicAction bad(builtin_group_backend("Z2xZ2"),
                      std::vector<Matrix>(4, Matrix::identity(2)));
  } catch (const Error& e) {
    rejected = (e.code == "NotErgodic");
  }
  rep.add(S, "non-ergodic candidate rejected", rejected, "");

  int n = act.n();
  for (auto& l : act.backend()->irreducible_labels()) {
    Eigenmatrix em = eigenmatrix(L(l), act);
    int m = em.space.mult();
    int dv = em.space.dim_v;
    bool mult_full = (m == dv);
    bool unitary = approx_eq(em.Z.adjoint() * em.Z,
                             Matrix::identity(m * n), eps) &&
                   (m < dv ||
                    approx_eq(em.Z * em.Z.adjoint(),
                              Matrix::identity(dv * n), eps));
    bool trace_id = Scalar::eq(em.E.trace() / Scalar(n), Scalar(m), eps);
    FullStructure s = canonical_full_bimodule(L(l), act);
    bool canonical = verify_full_structure(s, L(l), act).pass();
    // full multiplicity forces the structure: E_v is the identity and the
    // eigenmatrix is invertible, so eta is determined by eta(f) Z = Z(1xf)
    bool unique = approx_eq(em.E, Matrix::identity(dv * n), eps) &&
                  em.Z.rows() == em.Z.cols();
    rep.add(S, l + ": multiplicity 1 = dimension, Z unitary",
            mult_full && m == 1 && unitary, "");
    rep.add(S, l + ": trace identity Tr x tr(E) = mult", trace_id, "");
    rep.add(S, l + ": canonical full structure verified and forced",
            canonical && unique,
            "projection, covariance, module condition, *-homomorphism");
  }
  ObjectExpr w = L("x10").tensor(L("x01"));
  Eigenmatrix em = eigenmatrix(w, act);
  rep.add(S, "character product keeps multiplicity 1 and the trace identity",
          em.space.mult() == 1 &&
              Scalar::eq(em.E.trace() / Scalar(n), Scalar(1), eps),
          "");
  return rep;
}

SuiteReport suite_translation(double eps) {
  SuiteReport rep;
  const std::string S = "translation";
  auto [g, sub] = builtin_pair("D4>V4");
  auto kb = std::make_shared<GroupBackend>(sub.group);
  ErgodicAction act = weyl_pair_action_on(kb);
  InducedSystem sys = induce_action(g, sub, act);
  const FiniteGroup& big = g->group();
  int n = act.n();

  for (auto& l : g->irreducible_labels()) {
    ObjectExpr v = L(l);
    Eigenmatrix em = eigenmatrix_mats(sys.restricted(v), act);
    bool elementwise = true, proj = true;
    for (int gg = 0; gg < big.n; ++gg) {
      Matrix expect =
          g->object_mat(v, gg).adjoint().kron(Matrix::identity(n)) * em.Z;
      Matrix got = g->object_mat(v, sys.coset_rep(sys.coset_of(gg)))
                       .adjoint()
                       .kron(Matrix::identity(n)) *
                   em.Z;
      int k = sys.k_part(gg);
      got = Matrix::identity(em.space.dim_v).kron(act.unitary(k)) * got *
            Matrix::identity(em.space.mult()).kron(act.unitary(k)).adjoint();
      elementwise = elementwise && approx_eq(got, expect, eps);
      Matrix vg = g->object_mat(v, gg).kron(Matrix::identity(n));
      proj = proj &&
             approx_eq(got * got.adjoint(), vg.adjoint() * em.E * vg, eps);
    }
    rep.add(S, l + ": Z of the translation action = v(g)* x 1 Z, per element",
            elementwise, "eigenmatrix of the induced system");
    rep.add(S, l + ": projection formula E(g) = v(g)* x 1 E v(g) x 1", proj,
            "");
    rep.add(S, l + ": induced multiplicity = restricted multiplicity",
            sys.induced_mult(v) == em.space.mult(), "Frobenius reciprocity");
  }
  return rep;
}

SuiteReport suite_su2(const std::vector<int>& rs) {
  SuiteReport rep;
  const std::string S = "su2";
  for (int r : rs) {
    Su2Report sr = su2_adjoint_report(r);
    bool spec = static_cast<int>(sr.spectrum.size()) == r + 1;
    for (int j = 0; j <= r && spec; ++j) spec = (sr.spectrum[j] == 2 * j);
    rep.add(S,
            "r = " + std::to_string(r) + ": spectrum {0, 2, ..., " +
                std::to_string(2 * r) + "}",
            spec, "fusion rules of the adjoint action");
    rep.add(S,
            "r = " + std::to_string(r) +
                ": spin-1 pairing has hom-dim 2, a circle of structures",
            sr.v1_hom_dim == 2 && sr.v1_exists && sr.v1_param_dim == 1,
            sr.verdict_v1);
    rep.add(S,
            "r = " + std::to_string(r) +
                ": spin-2 pairing has hom-dim 0, no full structure",
            sr.v2_hom_dim == 0 && sr.v2_nonexistence, sr.verdict_v2);
  }
  return rep;
}

SuiteReport suite_evaluation(double eps) {
  SuiteReport rep;
  const std::string S = "evaluation";
  auto [g, sub] = builtin_pair("D4>V4");
  auto kb = std::make_shared<GroupBackend>(sub.group);
  ErgodicAction act = weyl_pair_action_on(kb);
  InducedSystem sys = induce_action(g, sub, act);

  std::vector<ObjectExpr> objs = {L("triv"), L("two"),
                                  L("two").tensor(L("xs"))};
  bool round = true, full = true;
  for (auto& v : objs)
    for (auto& vp : objs) {
      auto maps = sys.induced_intertwiners(v, vp);
      auto base =
          module_intertwiners(sys.restricted(vp), sys.restricted(v), act);
      full = full && maps.size() == base.size();
      for (auto& t : maps) {
        auto lifted =
            lift_intertwiner(sys, evaluate_at_identity(sys, t), v, vp);
        for (int c = 0; c < sys.cosets(); ++c)
          round = round && approx_eq(lifted[c], t[c], eps);
      }
      for (auto& a : base) {
        auto lifted = lift_intertwiner(sys, a, v, vp);
        round = round && approx_eq(evaluate_at_identity(sys, lifted), a, eps);
      }
    }
  rep.add(S, "round trip T -> T(1) -> T is the identity, both directions",
          round, "evaluation against lifting over all object pairs");
  rep.add(S, "evaluation is full and faithful",
          full, "induced and base intertwiner spaces have equal dimension");

  // tensoriality against the canonical left structure on a character
  ObjectExpr v = L("two"), u = L("xs");
  auto ts = sys.induced_intertwiners(v, v);
  Eigenmatrix emu = eigenmatrix_mats(sys.restricted(u), act);
  FullStructure su;
  su.dim_v = emu.space.dim_v;
  su.n = act.n();
  su.Z = emu.Z;
  su.E = emu.E;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Matrix e(2, 2);
      e.at(a, b) = Scalar(1);
      su.eta.push_back(emu.Z * Matrix::identity(1).kron(e) *
                       emu.Z.adjoint());
    }
  bool setup = emu.space.mult() == 1 &&
               verify_full_structure(su, sys.restricted(u), act).pass();
  rep.add(S, "canonical structure on the twisting character", setup, "");

  auto smaps = sys.induced_intertwiners(u, u);
  auto eta_tilde = [&](const Matrix& fval, int c) {
    Matrix ug = g->object_mat(u, sys.coset_rep(c)).kron(Matrix::identity(2));
    return ug.adjoint() * apply_eta(su, fval) * ug;
  };
  std::vector<std::vector<Matrix>> bimaps;
  for (auto& s : smaps) {
    bool ok = true;
    std::vector<Matrix> fs(2, Matrix(2, 2));
    fs[0].at(0, 1) = Scalar(1);
    fs[1].at(1, 0) = Scalar(1) - I();
    for (int c = 0; c < 2 && ok; ++c)
      ok = approx_eq(s[c] * eta_tilde(fs[c], c), eta_tilde(fs[c], c) * s[c],
                     eps);
    if (ok) bimaps.push_back(s);
  }
  int du = 1, dv = 2, n = act.n();
  bool tens = !bimaps.empty() && !ts.empty();
  for (auto& t : ts)
    for (auto& s : bimaps) {
      // assemble (T x S)(1) from blocks eta-tilde(T-block) times 1 x S and
      // compare against T(1) x S(1) assembled through the base structure
      Matrix m(dv * du * n, dv * du * n);
      for (int r = 0; r < dv; ++r)
        for (int sidx = 0; sidx < dv; ++sidx) {
          Matrix trs(n, n);
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              trs.at(a, b) = t[0].at(r * n + a, sidx * n + b);
          Matrix blk = eta_tilde(trs, 0);
          for (int i = 0; i < du * n; ++i)
            for (int j = 0; j < du * n; ++j)
              m.at(r * du * n + i, sidx * du * n + j) = blk.at(i, j);
        }
      Matrix tensored = m * Matrix::identity(dv).kron(s[0]);
      Matrix m1(dv * du * n, dv * du * n);
      Matrix t1 = evaluate_at_identity(sys, t);
      Matrix s1 = evaluate_at_identity(sys, s);
      for (int r = 0; r < dv; ++r)
        for (int sidx = 0; sidx < dv; ++sidx) {
          Matrix trs(n, n);
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              trs.at(a, b) = t1.at(r * n + a, sidx * n + b);
          Matrix blk = apply_eta(su, trs);
          for (int i = 0; i < du * n; ++i)
            for (int j = 0; j < du * n; ++j)
              m1.at(r * du * n + i, sidx * du * n + j) = blk.at(i, j);
        }
      tens = tens &&
             approx_eq(tensored, m1 * Matrix::identity(dv).kron(s1), eps);
    }
  rep.add(S, "tensoriality (T x S)(1) = T(1) x S(1)", tens,
          "evaluation respects tensor products of intertwiners");
  return rep;
}

std::vector<std::string> suite_names() {
  return {"conjugates",     "admissibility", "quasitensor", "appendix",
          "positivity",     "swan",          "left_action", "fullness",
          "ind_hom",        "multiplication", "frobenius",  "eigenmatrix",
          "translation",    "su2",           "evaluation"};
}

SuiteReport run_suite(const std::string& name, double eps, unsigned seed) {
  if (name == "conjugates") return suite_conjugates(eps);
  if (name == "admissibility")
    return suite_admissibility(Scalar(2), default_pseudoreal_f(), eps);
  if (name == "quasitensor") return suite_quasitensor(eps, seed);
  if (name == "appendix") return suite_appendix(eps);
  if (name == "positivity") return suite_positivity(eps);
  if (name == "swan") return suite_swan(eps);
  if (name == "left_action") return suite_left_action(eps);
  if (name == "fullness") return suite_fullness(eps);
  if (name == "ind_hom") return suite_ind_hom(3);
  if (name == "multiplication") return suite_multiplication(eps);
  if (name == "frobenius") return suite_frobenius();
  if (name == "eigenmatrix") return suite_eigenmatrix(eps);
  if (name == "translation") return suite_translation(eps);
  if (name == "su2") return suite_su2({1, 2, 3, 4, 5});
  if (name == "evaluation") return suite_evaluation(eps);
  throw Error("UnknownSuite", name);
}

}  // namespace tcat
