#include "doctest.h"
#include "tcat/ergodic.hpp"

using namespace tcat;

namespace {

ObjectExpr L(const std::string& s) { return ObjectExpr::letter(s); }

const ErgodicAction& weyl() {
  static ErgodicAction act = weyl_pair_action();
  return act;
}

}  // namespace

TEST_CASE("Weyl pair action: ergodicity and spectral data") {
  const auto& act = weyl();
  CHECK(act.n() == 2);

  // a non-ergodic candidate is rejected
  CHECK_THROWS_WITH_AS(
      ErgodicAction(builtin_group_backend("Z2xZ2"),
                    std::vector<Matrix>(4, Matrix::identity(2))),
      doctest::Contains("NotErgodic"), Error);
  // non-multiplicative implementers are rejected too
  {
    auto kb = builtin_group_backend("Z2xZ2");
    std::vector<Matrix> bad(4, Matrix::identity(2));
    Matrix h(2, 2);
    Scalar r = (Scalar(1) / Scalar(2)).sqrt_nonneg();
    h.at(0, 0) = r;
    h.at(0, 1) = r;
    h.at(1, 0) = r;
    h.at(1, 1) = -r;
    bad[1] = h;
    CHECK_THROWS_AS(ErgodicAction(kb, bad), Error);
  }

  // every character has multiplicity 1 = its dimension, and the trivial
  // character always has multiplicity 1 by ergodicity
  for (auto& l : act.backend()->irreducible_labels()) {
    SpectralSpace sp = spectral_space(L(l), act);
    CHECK(sp.mult() == 1);
    CHECK(sp.mult() <= sp.dim_v);
    // the basis elements multiply to scalars, an ergodicity fingerprint
    Matrix g = sp.basis[0].adjoint() * sp.basis[0];
    CHECK(approx_eq(g, Matrix::identity(2) * g.at(0, 0), 1e-12));
  }

  // normalized trace is the invariant state
  for (int k = 0; k < 4; ++k) {
    Matrix f(2, 2);
    f.at(0, 0) = Scalar(3);
    f.at(0, 1) = Scalar(1) + Scalar(Exact::i());
    f.at(1, 0) = Scalar(2);
    CHECK(Scalar::eq(act.state(act.beta(k, f)), act.state(f), 1e-12));
  }
}

TEST_CASE("eigenmatrices of the Weyl pair action") {
  const auto& act = weyl();
  for (auto& l : act.backend()->irreducible_labels()) {
    Eigenmatrix em = eigenmatrix(L(l), act);
    int m = em.space.mult();
    REQUIRE(m == 1);
    // isometry, here unitary since mult = dim
    CHECK(approx_eq(em.Z.adjoint() * em.Z, Matrix::identity(2 * m), 1e-12));
    CHECK(approx_eq(em.E, Matrix::identity(2), 1e-12));
    // covariance (1 (x) beta_k)(Z) = v(k)^* (x) 1 Z on every element
    for (int k = 0; k < 4; ++k) {
      Matrix lhs = Matrix::identity(1).kron(act.unitary(k)) * em.Z *
                   Matrix::identity(m).kron(act.unitary(k)).adjoint();
      Matrix rhs = act.backend()->object_mat(L(l), k).adjoint().kron(
                       Matrix::identity(2)) *
                   em.Z;
      CHECK(approx_eq(lhs, rhs, 1e-12));
    }
    // trace identity Tr (x) tr(E_v) = mult
    CHECK(Scalar::eq(em.E.trace() / Scalar(2), Scalar(m), 1e-12));
  }

  // a two-character product: multiplicity stays 1 and the trace identity
  // still holds
  ObjectExpr w = L("x10").tensor(L("x01"));
  Eigenmatrix em = eigenmatrix(w, act);
  CHECK(em.space.mult() == 1);  // the product is again a single character
  CHECK(Scalar::eq(em.E.trace() / Scalar(2), Scalar(em.space.mult()), 1e-12));
}

TEST_CASE("canonical full bimodule and its verification") {
  const auto& act = weyl();
  for (auto& l : act.backend()->irreducible_labels()) {
    FullStructure s = canonical_full_bimodule(L(l), act);
    StructureReport r = verify_full_structure(s, L(l), act);
    CHECK(r.pass());
    CHECK(r.residual <= 1e-12);
  }

  // sabotage the left action: replace eta by f -> E' (1 (x) f) E' with a
  // projection E' that strictly dominates E_v; the module condition breaks
  ObjectExpr vv = L("x10").tensor(L("x11"));
  FullStructure s = canonical_full_bimodule(vv, act);
  FullStructure bad = s;
  bad.eta.clear();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Matrix e(2, 2);
      e.at(a, b) = Scalar(1);
      bad.eta.push_back(e);  // f -> E (1 (x) f) E with E = 1, wrong eta
    }
  StructureReport r = verify_full_structure(bad, vv, act);
  CHECK_FALSE(r.module_condition);
  CHECK_FALSE(r.pass());
}

TEST_CASE("classification by pairs for the Weyl pair action") {
  const auto& act = weyl();
  // every irreducible has full multiplicity: unique structure, empty z
  for (auto& l : act.backend()->irreducible_labels()) {
    ClassifyReport rep = classify_pairs(L(l), act);
    CHECK(rep.full_multiplicity);
    CHECK(rep.exists_any());
    CHECK(rep.classes.empty());
  }

  // the inner action of Q8 on Mat_2 (Ad of the quaternion representation):
  // the four characters are spectral with full multiplicity, the 2-dim
  // irrep h is non-spectral
  auto q8 = builtin_group_backend("Q8");
  ErgodicAction inner(q8, q8->rep("h").mats);
  for (auto& l : {"triv", "xi", "xj", "xk"}) {
    ClassifyReport rep = classify_pairs(L(l), inner);
    CHECK(rep.full_multiplicity);
  }
  ClassifyReport rep = classify_pairs(L("h"), inner);
  CHECK_FALSE(rep.full_multiplicity);
  CHECK(rep.dim_v == 2);
  CHECK(rep.mult == 0);
  CHECK(rep.exhaustive);
  bool found_h = false;
  for (auto& cls : rep.classes) {
    int dz = 0;
    bool has_h = false;
    for (auto& l : cls.z_labels) {
      dz += q8->rep(l).dim;
      has_h = has_h || l == "h";
    }
    CHECK(dz == 2);
    if (has_h) {
      // an inner action: the structure with z = h exists (the action comes
      // from a tensor functor, so every v (x) beta is full)
      CHECK(cls.hom_dim == 4);
      CHECK(cls.exists);
      CHECK(approx_eq(cls.W.adjoint() * cls.W, Matrix::identity(4), 1e-9));
      // and W properly intertwines z (x) beta with v (x) beta
      for (int k = 0; k < 8; ++k) {
        Matrix u = q8->rep("h").mats[k].kron(inner.unitary(k));
        CHECK(approx_eq(u * cls.W * u.adjoint(), cls.W, 1e-9));
      }
      found_h = true;
    } else {
      // characters pair to the non-spectral h: empty intertwiner space,
      // certified nonexistence
      CHECK(cls.hom_dim == 0);
      CHECK_FALSE(cls.exists);
    }
  }
  CHECK(found_h);
}

TEST_CASE("induced action over D4 > V4") {
  auto [g, sub] = builtin_pair("D4>V4");
  auto kb = std::make_shared<GroupBackend>(sub.group);
  ErgodicAction act = weyl_pair_action_on(kb);
  InducedSystem sys = induce_action(g, sub, act);
  CHECK(sys.cosets() == 2);

  // rho is a right-translation action on equivariant functions
  std::vector<Matrix> f(2, Matrix(2, 2));
  f[0].at(0, 1) = Scalar(1) + Scalar(Exact::i());
  f[1].at(1, 1) = Scalar(2);
  const FiniteGroup& big = g->group();
  for (int a = 0; a < big.n; ++a) {
    for (int b = 0; b < big.n; ++b) {
      auto lhs = sys.rho(big.mul(a, b), f);
      auto rhs = sys.rho(a, sys.rho(b, f));
      for (int c = 0; c < 2; ++c) CHECK(approx_eq(lhs[c], rhs[c], 1e-12));
    }
    // K-equivariance of the stored values: f(k g) = beta_k f(g)
    for (int k = 0; k < 4; ++k)
      CHECK(approx_eq(sys.value(f, big.mul(sub.embed[k], a)),
                      act.beta(k, sys.value(f, a)), 1e-12));
  }

  for (auto& l : g->irreducible_labels()) {
    ObjectExpr v = L(l);
    // translation identity Z^rho(g) = v(g)^* (x) 1 Z^beta, elementwise
    Eigenmatrix em = eigenmatrix_mats(sys.restricted(v), act);
    auto zr = induced_eigenmatrix(sys, v);
    int n = act.n();
    for (int gg = 0; gg < big.n; ++gg) {
      Matrix expect =
          g->object_mat(v, gg).adjoint().kron(Matrix::identity(n)) * em.Z;
      // assemble Z^rho(gg) from the coset data and the K-action on entries
      Matrix got = g->object_mat(v, sys.coset_rep(sys.coset_of(gg)))
                       .adjoint()
                       .kron(Matrix::identity(n)) *
                   em.Z;
      int k = sys.k_part(gg);
      got = Matrix::identity(em.space.dim_v).kron(act.unitary(k)) * got *
            Matrix::identity(em.space.mult()).kron(act.unitary(k)).adjoint();
      CHECK(approx_eq(got, expect, 1e-12));
      // E^rho(g) = v(g)^* (x) 1 E^beta v(g) (x) 1
      Matrix vg = g->object_mat(v, gg).kron(Matrix::identity(n));
      CHECK(approx_eq(got * got.adjoint(), vg.adjoint() * em.E * vg, 1e-12));
    }
    // the isometry relation holds pointwise
    if (em.space.mult() > 0)
      for (int c = 0; c < sys.cosets(); ++c)
        CHECK(approx_eq(zr[c].adjoint() * zr[c],
                        Matrix::identity(em.space.mult() * n), 1e-12));
    // Frobenius: induced multiplicity equals the restricted multiplicity
    CHECK(sys.induced_mult(v) == em.space.mult());
  }
}

TEST_CASE("evaluation functor: round trip, fullness, tensoriality") {
  auto [g, sub] = builtin_pair("D4>V4");
  auto kb = std::make_shared<GroupBackend>(sub.group);
  ErgodicAction act = weyl_pair_action_on(kb);
  InducedSystem sys = induce_action(g, sub, act);

  std::vector<ObjectExpr> objs = {L("triv"), L("two"),
                                  L("two").tensor(L("xs"))};
  for (auto& v : objs)
    for (auto& vp : objs) {
      auto maps = sys.induced_intertwiners(v, vp);
      // fullness and faithfulness: the evaluated maps span a space of the
      // same dimension as the base intertwiner space
      auto base =
          module_intertwiners(sys.restricted(vp), sys.restricted(v), act);
      CHECK(maps.size() == base.size());
      if (!maps.empty()) {
        Matrix fl(maps[0][0].rows() * maps[0][0].cols(),
                  static_cast<int>(maps.size()));
        for (size_t k = 0; k < maps.size(); ++k) {
          Matrix ev = evaluate_at_identity(sys, maps[k]);
          for (int i = 0; i < ev.rows(); ++i)
            for (int j = 0; j < ev.cols(); ++j)
              fl.at(i * ev.cols() + j, static_cast<int>(k)) = ev.at(i, j);
        }
        CHECK(rank(fl) == static_cast<int>(maps.size()));
      }
      // round trip both ways
      for (auto& t : maps) {
        auto lifted = lift_intertwiner(sys, evaluate_at_identity(sys, t), v,
                                       vp);
        for (int c = 0; c < sys.cosets(); ++c)
          CHECK(approx_eq(lifted[c], t[c], 1e-12));
      }
      for (auto& a : base) {
        auto lifted = lift_intertwiner(sys, a, v, vp);
        CHECK(approx_eq(evaluate_at_identity(sys, lifted), a, 1e-12));
      }
    }

  // tensoriality (T (x) S)(1) = T(1) (x) S(1) for a module intertwiner T
  // and a bimodule intertwiner S w.r.t. canonical left structures
  ObjectExpr v = L("two"), u = L("xs");
  auto ts = sys.induced_intertwiners(v, v);
  // canonical structure on u restricted (full multiplicity in the Weyl
  // action, so E = 1)
  Eigenmatrix emu = eigenmatrix_mats(sys.restricted(u), act);
  REQUIRE(emu.space.mult() == 1);
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
  REQUIRE(verify_full_structure(su, sys.restricted(u), act).pass());

  // bimodule intertwiners (u (x) rho, u (x) rho): module maps commuting
  // with the induced left action eta-tilde
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
    fs[1].at(1, 0) = Scalar(1) - Scalar(Exact::i());
    for (int c = 0; c < 2 && ok; ++c)
      ok = approx_eq(s[c] * eta_tilde(fs[c], c), eta_tilde(fs[c], c) * s[c],
                     1e-12);
    if (ok) bimaps.push_back(s);
  }
  REQUIRE(!bimaps.empty());
  REQUIRE(!ts.empty());

  int du = 1;  // dim of u
  int n = act.n();
  for (auto& t : ts)
    for (auto& s : bimaps) {
      // (T (x) S)(g) = (sum_rs e_rs (x) eta-tilde(t_rs)(g)) (1 (x) S(g))
      int dv = 2;
      for (int c = 0; c < 2; ++c) {
        Matrix m(dv * du * n, dv * du * n);
        for (int r = 0; r < dv; ++r)
          for (int sidx = 0; sidx < dv; ++sidx) {
            // the F-block (r, sidx) of T at the coset rep
            Matrix trs(n, n);
            for (int a = 0; a < n; ++a)
              for (int b = 0; b < n; ++b)
                trs.at(a, b) = t[c].at(r * n + a, sidx * n + b);
            Matrix blk = eta_tilde(trs, c);
            for (int i = 0; i < du * n; ++i)
              for (int j = 0; j < du * n; ++j)
                m.at(r * du * n + i, sidx * du * n + j) = blk.at(i, j);
          }
        Matrix tensored = m * Matrix::identity(dv).kron(s[c]);
        if (c == 0) {
          // compare with T(1) (x) S(1) assembled the same way at g = 1
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
          CHECK(approx_eq(tensored, m1 * Matrix::identity(dv).kron(s1),
                          1e-12));
        }
      }
      // S(1) is again a bimodule intertwiner for the base structure
      Matrix s1 = evaluate_at_identity(sys, s);
      Matrix f(2, 2);
      f.at(0, 1) = Scalar(2);
      f.at(1, 1) = Scalar(Exact::i());
      CHECK(approx_eq(s1 * apply_eta(su, f), apply_eta(su, f) * s1, 1e-12));
    }
}

TEST_CASE("symbolic SU(2) adjoint analysis") {
  for (int r = 1; r <= 5; ++r) {
    Su2Report rep = su2_adjoint_report(r);
    REQUIRE(static_cast<int>(rep.spectrum.size()) == r + 1);
    for (int j = 0; j <= r; ++j) CHECK(rep.spectrum[j] == 2 * j);
    CHECK(rep.v1_hom_dim == 2);
    CHECK(rep.v1_exists);
    CHECK(rep.v1_param_dim == 1);
    CHECK(rep.v2_hom_dim == 0);
    CHECK(rep.v2_nonexistence);
  }
  CHECK_THROWS_AS(su2_adjoint_report(0), Error);
}
