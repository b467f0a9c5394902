#include "doctest.h"
#include "tcat/functors.hpp"

#include <random>

using namespace tcat;

namespace {

std::vector<Arrow> sample_arrows(const CategoryBackend& c,
                                 const std::vector<ObjectExpr>& objs,
                                 int cap = 12) {
  std::vector<Arrow> out;
  for (auto& u : objs)
    for (auto& v : objs) {
      for (auto& a : c.hom_basis(u, v)) {
        if (static_cast<int>(out.size()) >= cap) return out;
        out.push_back(a);
      }
    }
  return out;
}

}  // namespace

TEST_CASE("restriction S3 -> A3 is a strict tensor functor") {
  auto [g, sub] = builtin_pair("S3>A3");
  auto kb = builtin_group_backend("A3");
  auto f = restriction_functor(g, sub, kb);
  ObjectExpr std_ = ObjectExpr::letter("std");
  std::vector<ObjectExpr> objs = {ObjectExpr::unit(), ObjectExpr::letter("sgn"),
                                  std_, std_.tensor(std_)};
  auto rep = verify_quasitensor_axioms(f, objs, sample_arrows(*g, objs), 1e-12);
  INFO(rep.str());
  CHECK(rep.all_passed());

  // image solution of std restricts with dimension preserved
  auto su = standard_solution(*g, std_);
  auto ru = image_solution(f, su);
  CHECK(verify_conjugate_equations(*kb, ru, 1e-12));
  Scalar d = kb->scalar_of(kb->compose(kb->adjoint(ru.R), ru.R));
  CHECK(Scalar::eq(d, Scalar(2), 1e-12));

  // std restricted to A3 loses the trivial summand entirely
  auto dec = kb->decompose(f.obj(std_));
  std::map<std::string, int> m(dec.begin(), dec.end());
  CHECK(m["w"] == 1);
  CHECK(m["w2"] == 1);
  CHECK(m.count("triv") == 0);
}

TEST_CASE("forgetful functor Rep(S3) -> Hilb") {
  auto g = builtin_group_backend("S3");
  auto f = forgetful_functor(g);
  ObjectExpr std_ = ObjectExpr::letter("std");
  std::vector<ObjectExpr> objs = {ObjectExpr::unit(), std_,
                                  std_.tensor(ObjectExpr::letter("sgn"))};
  auto rep = verify_quasitensor_axioms(f, objs, sample_arrows(*g, objs), 1e-12);
  INFO(rep.str());
  CHECK(rep.all_passed());
  auto ru = image_solution(f, standard_solution(*g, std_));
  CHECK(verify_conjugate_equations(*f.target, ru, 1e-12));
}

TEST_CASE("minimal functor of Rep(S3) and the composed spectral functor") {
  auto g = builtin_group_backend("S3");
  auto f = minimal_functor(g);
  ObjectExpr std_ = ObjectExpr::letter("std");
  ObjectExpr ss = std_.tensor(std_);
  std::vector<ObjectExpr> objs = {ObjectExpr::unit(), std_, ss,
                                  ss.tensor(std_)};
  // (ι, std) = 0, (ι, std⊗std) = 1-dimensional
  auto h = std::dynamic_pointer_cast<const HilbBackend>(f.target);
  REQUIRE(h);
  CHECK(h->dim_of(f.obj(std_)) == 0);
  CHECK(h->dim_of(f.obj(ss)) == 1);
  auto rep = verify_quasitensor_axioms(f, objs, sample_arrows(*g, objs), 1e-12);
  INFO(rep.str());
  CHECK(rep.all_passed());

  // spectral functor of the quotient: minimal after restriction
  auto [g2, sub] = builtin_pair("S3>A3");
  auto kb = builtin_group_backend("A3");
  auto res = restriction_functor(g2, sub, kb);
  auto spec = compose_functors(
      minimal_functor(std::static_pointer_cast<const CategoryBackend>(kb)),
      res);
  auto h2 = std::dynamic_pointer_cast<const HilbBackend>(spec.target);
  REQUIRE(h2);
  CHECK(h2->dim_of(spec.obj(ObjectExpr::letter("triv"))) == 1);
  CHECK(h2->dim_of(spec.obj(ObjectExpr::letter("sgn"))) == 1);
  CHECK(h2->dim_of(spec.obj(std_)) == 0);  // std is not spectral
  std::vector<ObjectExpr> objs2 = {ObjectExpr::unit(),
                                   ObjectExpr::letter("sgn"), std_, ss};
  auto rep2 = verify_quasitensor_axioms(spec, objs2,
                                        sample_arrows(*g2, objs2), 1e-12);
  INFO(rep2.str());
  CHECK(rep2.all_passed());

  // multi_mu bracketing independence
  std::vector<ObjectExpr> seq = {ss, ObjectExpr::letter("sgn"), ss};
  Arrow left = multi_mu(spec, seq);
  // right bracketing by hand
  const CategoryBackend& t = *spec.target;
  Arrow inner = spec.mu(seq[1], seq[2]);
  Arrow outer = spec.mu(seq[0], seq[1].tensor(seq[2]));
  Arrow right =
      t.compose(outer, t.tensor(t.identity(spec.obj(seq[0])), inner));
  CHECK(CategoryBackend::approx_equal(left, right, 1e-12));
}

TEST_CASE("appendix conjugation identities") {
  // strict restriction functor on (std, std)
  auto [g, sub] = builtin_pair("S3>A3");
  auto kb = builtin_group_backend("A3");
  auto res = restriction_functor(g, sub, kb);
  ObjectExpr std_ = ObjectExpr::letter("std");
  auto rep = verify_appendix_identities(res, std_, std_, 1e-12);
  INFO(rep.str());
  CHECK(rep.all_passed());

  // composed quasitensor functor on (sgn, std⊗sgn)
  auto spec = compose_functors(
      minimal_functor(std::static_pointer_cast<const CategoryBackend>(kb)),
      res);
  auto rep2 = verify_appendix_identities(
      spec, ObjectExpr::letter("sgn"),
      std_.tensor(ObjectExpr::letter("sgn")), 1e-12);
  INFO(rep2.str());
  CHECK(rep2.all_passed());
}

TEST_CASE("tau_F embedding is functorial (real and pseudoreal)") {
  std::mt19937 rng(11);
  for (auto variant : {TLVariant::Real, TLVariant::Pseudoreal}) {
    auto tl = std::make_shared<TLBackend>(Scalar(2), variant);
    Matrix F = Matrix::identity(2);
    if (variant == TLVariant::Pseudoreal) {
      F = Matrix(2, 2);
      F.at(0, 1) = Scalar(1);
      F.at(1, 0) = Scalar(-1);
    }
    auto f = embed_tau_F(tl, {F, variant});
    ObjectExpr x = ObjectExpr::letter("x");
    auto word = [&](int k) {
      ObjectExpr o;
      for (int i = 0; i < k; ++i) o.word.push_back("x");
      return o;
    };
    // τ(R*∘R) = d; τ(zig-zag with R̄) = 1
    auto s = tl->letter_solution("x");
    Arrow rr = f.arr(tl->compose(tl->adjoint(s.R), s.R));
    CHECK(Scalar::eq(rr.m.at(0, 0), Scalar(2), 1e-12));
    Arrow zig = f.arr(tl->compose(
        tl->tensor(tl->adjoint(s.Rbar), tl->identity(x)),
        tl->tensor(tl->identity(x), s.R)));
    CHECK(approx_eq(zig.m, Matrix::identity(2), 1e-12));

    std::uniform_int_distribution<int> coef(-2, 2);
    auto rand_arrow = [&](const ObjectExpr& srcw, const ObjectExpr& dstw) {
      const auto& basis = tl->diagram_basis(srcw, dstw);
      Matrix col(static_cast<int>(basis.size()), 1);
      for (int i = 0; i < col.rows(); ++i) col.at(i, 0) = Scalar(coef(rng));
      return Arrow{srcw, dstw, col};
    };
    for (int t = 0; t < 25; ++t) {
      Arrow a = rand_arrow(word(2), word(2));
      Arrow b = rand_arrow(word(2), word(2));
      Arrow c = rand_arrow(word(1), word(3));
      CHECK(approx_eq(f.arr(tl->compose(a, b)).m, f.arr(a).m * f.arr(b).m,
                      1e-12));
      CHECK(approx_eq(f.arr(tl->tensor(a, c)).m, f.arr(a).m.kron(f.arr(c).m),
                      1e-12));
      CHECK(approx_eq(f.arr(tl->adjoint(c)).m, f.arr(c).m.adjoint(), 1e-12));
      CHECK(approx_eq(f.arr(tl->compose(tl->adjoint(c), c)).m,
                      f.arr(c).m.adjoint() * f.arr(c).m, 1e-12));
    }
    // image solution of the generator holds in Hilb
    auto ru = image_solution(f, s);
    CHECK(verify_conjugate_equations(*f.target, ru, 1e-12));
    // appendix identity R• = R on the TL side
    auto rep = verify_appendix_identities(f, x, x, 1e-12);
    INFO(rep.str());
    CHECK(rep.all_passed());
  }
}

TEST_CASE("tau_F embedding, two-colored variant") {
  auto tl = std::make_shared<TLBackend>(Scalar(mpq_class(17, 4)),
                                        TLVariant::TwoColored);
  Matrix D(2, 2);
  D.at(0, 0) = Scalar(2);
  D.at(1, 1) = Scalar(mpq_class(1, 2));
  auto f = embed_tau_F(tl, {D, TLVariant::TwoColored});
  for (auto* l : {"x", "xb"}) {
    auto s = tl->letter_solution(l);
    auto ru = image_solution(f, s);
    CHECK(verify_conjugate_equations(*f.target, ru, 1e-12));
    Scalar d = f.target->scalar_of(
        f.target->compose(f.target->adjoint(ru.R), ru.R));
    CHECK(Scalar::eq(d, Scalar(mpq_class(17, 4)), 1e-12));
  }
  // functoriality on the mixed word
  ObjectExpr xxb = ObjectExpr::letter("x").tensor(ObjectExpr::letter("xb"));
  auto basis = tl->hom_basis(xxb, xxb);
  for (auto& a : basis)
    for (auto& b : basis)
      CHECK(approx_eq(f.arr(tl->compose(a, b)).m, f.arr(a).m * f.arr(b).m,
                      1e-12));
}

TEST_CASE("bullet commutes with the functor image") {
  auto [g, sub] = builtin_pair("S3>A3");
  auto kb = builtin_group_backend("A3");
  auto res = restriction_functor(g, sub, kb);
  ObjectExpr u = ObjectExpr::letter("std").tensor(ObjectExpr::letter("std"));
  ObjectExpr v = ObjectExpr::letter("std");
  auto su = standard_solution(*g, u), sv = standard_solution(*g, v);
  auto ru = image_solution(res, su), rv = image_solution(res, sv);
  for (auto& a : g->hom_basis(v, u)) {
    Arrow lhs = res.arr(bullet(*g, a, su, sv));
    Arrow rhs = bullet(*res.target, res.arr(a), ru, rv);
    CHECK(CategoryBackend::approx_equal(lhs, rhs, 1e-12));
  }
}
