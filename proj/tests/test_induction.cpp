#include "doctest.h"
#include "tcat/functors.hpp"
#include "tcat/induction.hpp"

using namespace tcat;

namespace {

ObjectExpr L(const std::string& s) { return ObjectExpr::letter(s); }

Scalar I() { return Scalar(Exact::i()); }

// restriction context: tau forgetful on Rep(S3), mu the restriction to A3
const InductionContext& restrict_ctx() {
  static InductionContext* ctx = [] {
    auto [g, sub] = builtin_pair("S3>A3");
    auto kb = builtin_group_backend("A3");
    return new InductionContext(forgetful_functor(g),
                                restriction_functor(g, sub, kb), 1e-12);
  }();
  return *ctx;
}

// spectral context of the quotient A3\S3: mu = minimal functor after
// restriction, a genuinely quasitensor functor into Hilb
const InductionContext& spectral_ctx() {
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

// Tannakian TL context: mu the identity on TL, tau = tau_F into Hilb
const InductionContext& tl_ctx() {
  static InductionContext* ctx = [] {
    auto tl = std::make_shared<TLBackend>(Scalar(2), TLVariant::Pseudoreal, 4);
    Matrix f(2, 2);
    f.at(0, 1) = Scalar(1);
    f.at(1, 0) = Scalar(-1);
    auto tau = embed_tau_F(tl, FMatrix{f, TLVariant::Pseudoreal});
    return new InductionContext(
        tau, identity_functor(std::static_pointer_cast<const CategoryBackend>(
                 tl)),
        1e-12);
  }();
  return *ctx;
}

// a small corpus of bimodule elements over a single object
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

}  // namespace

TEST_CASE("spectral algebra of A3\\S3 is the two-point function algebra") {
  const auto& ctx = spectral_ctx();
  auto basis = algebra_basis(ctx);
  REQUIRE(basis.size() == 2);  // triv and sgn coefficients, std non-spectral

  SpectralElement one = ctx.unit();
  CHECK(Scalar::eq(ctx.invariant_state(one), Scalar(1), 1e-12));

  // s = the sgn coefficient: s* = s, s^2 = 1, Haar integral zero
  SpectralElement s = ctx.coefficient_element("sgn", 0, 0);
  CHECK(approx_equal(ctx.star(s), s, 1e-12));
  CHECK(approx_equal(ctx.mul(s, s), one, 1e-12));
  CHECK(Scalar::eq(ctx.invariant_state(s), Scalar(0), 1e-12));
  CHECK(Scalar::eq(ctx.invariant_state(ctx.mul(ctx.star(s), s)), Scalar(1),
                   1e-12));

  // associativity and unitality on the basis
  for (auto& a : basis)
    for (auto& b : basis) {
      CHECK(approx_equal(ctx.mul(ctx.mul(a, b), s),
                         ctx.mul(a, ctx.mul(b, s)), 1e-12));
      CHECK(approx_equal(ctx.mul(one, a), a, 1e-12));
      CHECK(approx_equal(ctx.mul(a, one), a, 1e-12));
    }

  // the restriction context generates the same function algebra
  const auto& rc = restrict_ctx();
  SpectralElement s2 = rc.coefficient_element("sgn", 0, 0);
  CHECK(approx_equal(rc.mul(s2, s2), rc.unit(), 1e-12));
  CHECK(Scalar::eq(rc.invariant_state(s2), Scalar(0), 1e-12));
}

TEST_CASE("normalize respects the defining relations") {
  const auto& ctx = spectral_ctx();
  ObjectExpr ss = L("std").tensor(L("std"));
  const CategoryBackend& g = *ctx.source();
  const CategoryBackend& t = *ctx.target();

  // M mu(A) (x) psi  ==  M (x) tau(A) psi  for A in (v, u)
  auto homs = g.hom_basis(ss, ss);
  Arrow m = t.identity(ctx.mu().obj(ss));
  int n = ctx.tau_dim(ss);
  for (size_t k = 0; k < homs.size(); ++k) {
    Arrow a = homs[k];
    if (k + 1 < homs.size())
      a = CategoryBackend::add(a, CategoryBackend::scale(homs[k + 1],
                                                         I()));
    Matrix psi(n, 1);
    for (int i = 0; i < n; ++i) psi.at(i, 0) = Scalar(i - 1);
    auto lhs = ctx.normalize({ss}, t.compose(m, ctx.mu().arr(a)), ss, psi);
    auto rhs = ctx.normalize({ss}, m, ss, ctx.tau().arr(a).m * psi);
    CHECK(approx_equal(lhs, rhs, 1e-12));
  }
}

TEST_CASE("free modules over the restriction functor") {
  const auto& ctx = restrict_ctx();
  for (auto& u : {L("sgn"), L("std"), L("std").tensor(L("sgn"))}) {
    CHECK(ctx.free_module_condition(u));
    int n = ctx.tau_dim(u);
    // <x_i, x_j> = delta_ij unit
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto ip = ctx.inner_product(ctx.x_basis(u, i), ctx.x_basis(u, j));
        if (i == j)
          CHECK(approx_equal(ip, ctx.unit(), 1e-12));
        else
          CHECK(is_zero(ip, 1e-12));
      }
    // P_u = 1: the Swan map is onto
    for (int k = 0; k < n; ++k) {
      std::vector<SpectralElement> e;
      for (int i = 0; i < n; ++i)
        e.push_back(i == k ? ctx.unit() : ctx.zero({}));
      auto p = ctx.range_projection(u, e);
      for (int i = 0; i < n; ++i) CHECK(approx_equal(p[i], e[i], 1e-12));
    }
  }
}

TEST_CASE("Swan isometry in the spectral context") {
  const auto& ctx = spectral_ctx();
  ObjectExpr ss = L("std").tensor(L("std"));

  // sgn is spectral and its bimodule stays free
  CHECK(ctx.free_module_condition(L("sgn")));

  // std is non-spectral: unitarity fails and the bimodule vanishes
  CHECK_FALSE(ctx.free_module_condition(L("std")));
  for (int i = 0; i < 2; ++i) CHECK(is_zero(ctx.x_basis(L("std"), i), 1e-12));
  CHECK(corpus_of(ctx, L("std")).empty() ==
        false);  // corpus exists but is all zero
  for (auto& xi : corpus_of(ctx, L("std"))) CHECK(is_zero(xi, 1e-12));

  // std(x)std is spectral but not free: S*S = 1 while P is a proper
  // projection
  auto corpus = corpus_of(ctx, ss);
  REQUIRE(corpus.size() >= 8);
  for (auto& xi : corpus)
    CHECK(approx_equal(ctx.swan_adjoint(ss, ctx.swan(ss, xi)), xi, 1e-12));
  CHECK_FALSE(ctx.free_module_condition(ss));
  int n = ctx.tau_dim(ss);
  bool proper = false;
  for (int k = 0; k < n && !proper; ++k) {
    std::vector<SpectralElement> e;
    for (int i = 0; i < n; ++i)
      e.push_back(i == k ? ctx.unit() : ctx.zero({}));
    auto p = ctx.range_projection(ss, e);
    for (int i = 0; i < n; ++i)
      if (!approx_equal(p[i], e[i], 1e-12)) proper = true;
    // idempotence of P
    auto pp = ctx.range_projection(ss, p);
    for (int i = 0; i < n; ++i) CHECK(approx_equal(pp[i], p[i], 1e-12));
  }
  CHECK(proper);
}

TEST_CASE("inner product: definition, positivity, spanning") {
  const auto& ctx = spectral_ctx();
  ObjectExpr ss = L("std").tensor(L("std"));
  auto corpus = corpus_of(ctx, ss);

  // closed form equals lambda(R-hat*)(xi* eta)
  ConjugateSolution sm = image_solution(ctx.mu(), ctx.solution(ss));
  Arrow rstar = ctx.target()->adjoint(sm.R);
  for (size_t a = 0; a < corpus.size(); a += 3)
    for (size_t b = 0; b < corpus.size(); b += 4) {
      auto direct = ctx.inner_product(corpus[a], corpus[b]);
      auto viadef = ctx.lambda_map(
          rstar, ctx.mul(ctx.star(corpus[a]), corpus[b]), {});
      CHECK(approx_equal(direct, viadef, 1e-12));
    }

  // conjugate symmetry and the PSD Gram of the state
  int n = static_cast<int>(corpus.size());
  Matrix gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gram.at(i, j) =
          ctx.invariant_state(ctx.inner_product(corpus[i], corpus[j]));
  CHECK(approx_eq(gram, gram.adjoint(), 1e-12));
  auto psd = psd_certificate(gram);
  CHECK(psd.lambda_min >= -1e-10);
  if (psd.exact_certified) CHECK(psd.exact_psd);

  // faithfulness on the corpus: <xi,xi> = 0 only for xi = 0
  for (auto& xi : corpus) {
    bool null = is_zero(ctx.inner_product(xi, xi), 1e-12);
    CHECK(null == is_zero(xi, 1e-12));
  }

  // coefficients span the two-dimensional spectral algebra
  std::vector<SpectralElement> coeffs;
  for (size_t i = 0; i < corpus.size(); ++i)
    coeffs.push_back(ctx.inner_product(corpus[0], corpus[i]));
  Matrix fl(static_cast<int>(coeffs.size()), 2);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    auto t = coeffs[i].comp.find("triv");
    auto s = coeffs[i].comp.find("sgn");
    if (t != coeffs[i].comp.end()) fl.at(static_cast<int>(i), 0) =
        t->second.at(0, 0);
    if (s != coeffs[i].comp.end()) fl.at(static_cast<int>(i), 1) =
        s->second.at(0, 0);
  }
  CHECK(rank(fl) == 2);
}

TEST_CASE("star is an involution compatible with lambda and mul") {
  const auto& ctx = restrict_ctx();
  ObjectExpr u = L("std");
  auto corpus = corpus_of(ctx, u);
  const CategoryBackend& t = *ctx.target();

  ConjugateSolution su = ctx.solution(u);
  ConjugateSolution sum = image_solution(ctx.mu(), su);

  // (lambda(Y) xi)* = lambda(Y bullet) xi*
  auto ys = t.hom_basis(ctx.mu().obj(u), ctx.mu().obj(u));
  for (auto& y0 : ys) {
    Arrow y = CategoryBackend::scale(y0, Scalar(1) + I());
    Arrow yb = bullet(t, y, sum, sum);
    for (auto& xi : corpus) {
      auto lhs = ctx.star(ctx.lambda_map(y, xi, {u}));
      auto rhs = ctx.lambda_map(yb, ctx.star(xi), {su.conj});
      CHECK(approx_equal(lhs, rhs, 1e-12));
    }
  }

  // (xi eta)* = eta* xi* over concatenated sequences
  auto eta = corpus[1];
  for (auto& xi : corpus) {
    auto lhs = ctx.star(ctx.mul(xi, eta));
    auto rhs = ctx.mul(ctx.star(eta), ctx.star(xi));
    CHECK(approx_equal(lhs, rhs, 1e-12));
  }

  // xi** = xi when the second pass uses the conjugate solutions
  SolutionOverrides ov;
  for (auto& l : {"triv", "sgn", "std"})
    ov.emplace(l, conjugate_solution(ctx.source()->letter_solution(l)));
  for (auto& xi : corpus)
    CHECK(approx_equal(ctx.star(ctx.star(xi), ov), xi, 1e-12));

  // adjointability of lambda: <lambda(Y) xi, eta> = <xi, lambda(Y*) eta>
  for (auto& y : ys)
    for (auto& xi : corpus) {
      auto lhs = ctx.inner_product(ctx.lambda_map(y, xi, {u}), eta);
      auto rhs =
          ctx.inner_product(xi, ctx.lambda_map(t.adjoint(y), eta, {u}));
      CHECK(approx_equal(lhs, rhs, 1e-12));
    }
}

TEST_CASE("left action and the quotient formula") {
  const auto& ctx = spectral_ctx();
  auto cbasis = algebra_basis(ctx);
  SpectralElement one = ctx.unit();

  for (auto& u : {L("sgn"), L("std").tensor(L("std"))}) {
    int n = ctx.tau_dim(u);
    // generators c^u_{r,i} from the orthonormal slot basis at the object u
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
    for (auto& c : cs)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          auto lhs = ctx.inner_product(ctx.x_basis(u, i),
                                       ctx.mul(c, ctx.x_basis(u, j)));
          // closed form of the left-action matrix element
          CHECK(approx_equal(lhs, ctx.left_action_entry(u, c, i, j), 1e-12));
          // quotient formula sum_r g_{ri}* c g_{rj}
          SpectralElement rhs = ctx.zero({});
          for (size_t r = 0; r < fixed.size(); ++r)
            rhs = add(rhs, ctx.mul(ctx.mul(ctx.star(gen[r][i]), c),
                                   gen[r][j]));
          CHECK(approx_equal(lhs, rhs, 1e-12));
        }

    // unit acts as the identity, and the action is a homomorphism
    for (int i = 0; i < n; ++i) {
      auto xi = ctx.x_basis(u, i);
      CHECK(approx_equal(ctx.mul(one, xi), xi, 1e-12));
      for (auto& c : cbasis)
        for (auto& c2 : cbasis)
          CHECK(approx_equal(ctx.mul(ctx.mul(c, c2), xi),
                             ctx.mul(c, ctx.mul(c2, xi)), 1e-12));
    }
  }

  // faithfulness: c . xi = 0 for all corpus xi forces c = 0
  ObjectExpr u = L("sgn");
  Matrix act(4 * ctx.tau_dim(u), 2);
  for (size_t k = 0; k < cbasis.size(); ++k) {
    int row = 0;
    for (int i = 0; i < ctx.tau_dim(u); ++i) {
      auto m = ctx.mul(cbasis[k], ctx.x_basis(u, i));
      for (auto& l : {"triv", "sgn"}) {
        auto it = m.comp.find(l);
        for (int a = 0; a < 2; ++a, ++row)
          if (it != m.comp.end() && a < it->second.rows() * it->second.cols())
            act.at(row, static_cast<int>(k)) =
                it->second.at(a / it->second.cols(), a % it->second.cols());
      }
    }
  }
  CHECK(rank(act) == 2);
}

TEST_CASE("fixed vectors are central") {
  for (const InductionContext* pc : {&restrict_ctx(), &spectral_ctx()}) {
    const auto& ctx = *pc;
    auto cbasis = algebra_basis(ctx);
    cbasis.push_back(ctx.unit());
    ObjectExpr ss = L("std").tensor(L("std"));
    for (auto& useq :
         std::vector<std::vector<ObjectExpr>>{{ss}, {L("std"), L("std")}}) {
      ObjectExpr m = ctx.m_of(useq);
      const auto& fb = ctx.slot_basis(ctx.trivial_label(), m);
      // the two-letter sequence dies in the spectral context (mu(std) = 0)
      CHECK((!fb.empty() || useq.size() == 2));
      for (size_t k = 0; k < fb.size(); ++k) {
        BimoduleElement zeta = ctx.zero(useq);
        Matrix cm(static_cast<int>(fb.size()), 1);
        cm.at(static_cast<int>(k), 0) = Scalar(1);
        zeta.comp[ctx.trivial_label()] = cm;
        for (auto& c : cbasis)
          CHECK(approx_equal(ctx.mul(c, zeta), ctx.mul(zeta, c), 1e-12));
      }
    }
  }
}

TEST_CASE("sequence bimodules and multiplication unitarity") {
  const auto& ctx = restrict_ctx();
  ObjectExpr u = L("std"), v = L("sgn");
  const CategoryBackend& t = *ctx.target();

  // the conjugate solution of a sequence image is mu-tilde* mu(R)
  ConjugateSolution direct = image_solution(
      ctx.mu(), standard_solution(*ctx.source(), u.tensor(v)));
  ConjugateSolution seqsol = image_solution(ctx.mu(), ctx.solution(u));
  seqsol = tensor_solution(t, seqsol, image_solution(ctx.mu(),
                                                     ctx.solution(v)));
  Arrow mu2 = multi_mu(ctx.mu(), {u, v});
  Arrow mu2c = multi_mu(ctx.mu(), {ctx.solution(v).conj,
                                   ctx.solution(u).conj});
  Arrow lifted = t.compose(t.tensor(t.adjoint(mu2c), t.adjoint(mu2)),
                           direct.R);
  CHECK(CategoryBackend::approx_equal(seqsol.R, lifted, 1e-12));

  // lambda(mu-tilde) preserves inner products, and (9.1) holds
  auto cu = corpus_of(ctx, u);
  auto cv = corpus_of(ctx, v);
  for (size_t a = 0; a < cu.size(); a += 2)
    for (size_t b = 0; b < cv.size(); ++b) {
      auto xi = ctx.mul(cu[a], cv[b]);  // element of the (u, v) bimodule
      auto flat = ctx.lambda_map(mu2, xi, {u.tensor(v)});
      for (size_t a2 = 0; a2 < cu.size(); a2 += 3)
        for (size_t b2 = 0; b2 < cv.size(); ++b2) {
          auto eta = ctx.mul(cu[a2], cv[b2]);
          auto flat2 = ctx.lambda_map(mu2, eta, {u.tensor(v)});
          CHECK(approx_equal(ctx.inner_product(xi, eta),
                             ctx.inner_product(flat, flat2), 1e-12));
        }
      CHECK(approx_equal(flat, ctx.dot(cu[a], cv[b]), 1e-12));
    }

  // tensoriality: <xi eta, xi' eta'> = <eta, <xi,xi'> eta'>
  for (size_t a = 0; a < cu.size(); a += 2)
    for (size_t b = 0; b < cv.size(); ++b) {
      auto lhs = ctx.inner_product(ctx.mul(cu[a], cv[b]),
                                   ctx.mul(cu[0], cv[0]));
      auto rhs = ctx.inner_product(
          cv[b], ctx.mul(ctx.inner_product(cu[a], cu[0]), cv[0]));
      CHECK(approx_equal(lhs, rhs, 1e-12));
    }

  // surjectivity: every normal-form basis element of the (u, v) bimodule
  // is a sum of products, via the explicit conjugate-equation splitting
  std::vector<ObjectExpr> seq = {u, v};
  ObjectExpr m = ctx.m_of(seq);
  ConjugateSolution su = ctx.solution(u);
  ConjugateSolution sum = image_solution(ctx.mu(), su);
  Matrix ju = ctx.j_matrix(su);
  for (auto& w : ctx.source()->irreducible_labels()) {
    ObjectExpr wo = ctx.source()->label_object(w);
    const auto& basis = ctx.slot_basis(w, m);
    for (auto& bk : basis)
      for (int s = 0; s < ctx.tau_dim(wo); ++s) {
        Matrix psi(ctx.tau_dim(wo), 1);
        psi.at(s, 0) = Scalar(1);
        BimoduleElement zeta = ctx.normalize(seq, bk, wo, psi);
        // T' = (R-hat* (x) 1)(1 (x) M) mu-tilde*
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
        CHECK(approx_equal(rec, zeta, 1e-12));
      }
  }
}

TEST_CASE("induction functor hom-spaces and Frobenius pairing") {
  const auto& ctx = restrict_ctx();
  auto kb = std::static_pointer_cast<const GroupBackend>(ctx.target());
  std::vector<ObjectExpr> letters = {L("triv"), L("sgn"), L("std")};

  // dimension matches the subgroup character oracle on short sequences
  std::vector<std::vector<ObjectExpr>> seqs = {{},
                                               {L("std")},
                                               {L("sgn")},
                                               {L("std"), L("std")},
                                               {L("std"), L("sgn")},
                                               {L("triv"), L("std"),
                                                L("sgn")}};
  for (auto& us : seqs)
    for (auto& vs : seqs) {
      auto maps = ctx.ind_hom(us, vs);
      ObjectExpr mu_ = ctx.m_of(us), mv = ctx.m_of(vs);
      CHECK(Scalar::eq(Scalar(static_cast<long>(maps.size())),
                       kb->hom_dim_by_characters(mu_, mv), 1e-9));
      CHECK(maps.size() == kb->hom_basis(mu_, mv).size());
      // the pulled-back maps are linearly independent
      if (!maps.empty()) {
        Matrix fl(maps[0].m.rows() * maps[0].m.cols(),
                  static_cast<int>(maps.size()));
        for (size_t k = 0; k < maps.size(); ++k)
          for (int i = 0; i < maps[k].m.rows(); ++i)
            for (int j = 0; j < maps[k].m.cols(); ++j)
              fl.at(i * maps[k].m.cols() + j, static_cast<int>(k)) =
                  maps[k].m.at(i, j);
        CHECK(rank(fl) == static_cast<int>(maps.size()));
      }
    }

  // module intertwiners are bimodule intertwiners
  auto cbasis = algebra_basis(ctx);
  std::vector<ObjectExpr> us = {L("std")}, vs = {L("std"), L("sgn")};
  auto corpus = corpus_of(ctx, L("std"));
  for (auto& tmap : ctx.ind_hom(us, vs))
    for (auto& xi : corpus) {
      auto txi = ctx.lambda_map(tmap, xi, vs);
      for (auto& c : cbasis) {
        CHECK(approx_equal(ctx.lambda_map(tmap, ctx.mul(c, xi), vs),
                           ctx.mul(c, txi), 1e-12));
        CHECK(approx_equal(ctx.lambda_map(tmap, ctx.mul(xi, c), vs),
                           ctx.mul(txi, c), 1e-12));
      }
    }

  // Frobenius pairing at every irreducible label
  for (auto& l : ctx.source()->irreducible_labels())
    for (auto& us2 : seqs) CHECK(ctx.frobenius_pairing(l, us2));
  for (auto& l : spectral_ctx().source()->irreducible_labels())
    CHECK(spectral_ctx().frobenius_pairing(l, {L("std"), L("std")}));
}

TEST_CASE("Swan naturality in source arrows") {
  const auto& ctx = spectral_ctx();
  ObjectExpr ss = L("std").tensor(L("std"));
  auto corpus = corpus_of(ctx, ss);
  // identity, a fusion isometry (embedded as (ss, ss) projections), and a
  // generic hom-space combination
  auto homs = ctx.source()->hom_basis(ss, ss);
  Arrow a = ctx.source()->identity(ss);
  CHECK(ctx.naturality_check(a, corpus));
  Arrow mix = homs[0];
  for (size_t k = 1; k < homs.size(); ++k)
    mix = CategoryBackend::add(
        mix, CategoryBackend::scale(homs[k], Scalar(static_cast<long>(k)) +
                                                 I()));
  CHECK(ctx.naturality_check(mix, corpus));
  // an isometry between different objects
  for (auto& [w, iso] : ctx.source()->fusion(ss)) {
    (void)w;
    std::vector<BimoduleElement> small = corpus_of(ctx, iso.src);
    CHECK(ctx.naturality_check(iso, small));
  }
}

TEST_CASE("Tannakian Temperley-Lieb context") {
  const auto& ctx = tl_ctx();
  ObjectExpr x = L("x"), xx = L("x").tensor(L("x"));

  // the spectral algebra of the identity functor is trivial
  auto basis = algebra_basis(ctx);
  REQUIRE(basis.size() == 1);
  CHECK(approx_equal(basis[0], scale(ctx.unit(),
                                     ctx.invariant_state(basis[0])),
                     1e-12));

  // free bimodule over x with the Hilbert space inner product
  CHECK(ctx.free_module_condition(x));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      auto ip = ctx.inner_product(ctx.x_basis(x, i), ctx.x_basis(x, j));
      if (i == j)
        CHECK(approx_equal(ip, ctx.unit(), 1e-12));
      else
        CHECK(is_zero(ip, 1e-12));
    }

  // hom dimensions of the induction functor are the diagram counts
  CHECK(ctx.ind_hom({xx}, {xx}).size() == 2);
  CHECK(ctx.ind_hom({x}, {x}).size() == 1);
  CHECK(ctx.ind_hom({x}, {xx}).size() == 0);
  CHECK(ctx.ind_hom({}, {xx}).size() == 1);
  for (auto& l : {"#0", "#1", "#2"})
    CHECK(ctx.frobenius_pairing(l, {xx}));

  // pseudoreal double star: the second pass needs the sign-flipped
  // solutions, and returns the original element
  SolutionOverrides ov;
  for (auto& l : {"x", "#0", "#1", "#2"})
    ov.emplace(l, conjugate_solution(ctx.source()->letter_solution(l)));
  auto corpus = corpus_of(ctx, x);
  for (auto& xi : corpus) {
    if (is_zero(xi, 1e-12)) continue;
    auto ss2 = ctx.star(ctx.star(xi), ov);
    CHECK(approx_equal(ss2, xi, 1e-12));
    // with the standard solutions reused the sign comes out wrong
    auto naive = ctx.star(ctx.star(xi));
    CHECK(approx_equal(naive, scale(xi, Scalar(-1)), 1e-12));
  }
}
