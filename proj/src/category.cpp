#include "tcat/category.hpp"

#include <sstream>

namespace tcat {

std::string ObjectExpr::str() const {
  if (word.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) os << ".";
    os << word[i];
  }
  return os.str();
}

ObjectExpr CategoryBackend::conjugate(const ObjectExpr& o) const {
  ObjectExpr r;
  for (auto it = o.word.rbegin(); it != o.word.rend(); ++it)
    r.word.push_back(conj_letter(*it));
  return r;
}

Arrow CategoryBackend::add(const Arrow& a, const Arrow& b) {
  if (!(a.src == b.src) || !(a.dst == b.dst))
    throw Error("ShapeMismatch", "arrow addition across different hom-spaces");
  return {a.src, a.dst, a.m + b.m};
}

Arrow CategoryBackend::scale(const Arrow& a, const Scalar& s) {
  return {a.src, a.dst, a.m * s};
}

bool CategoryBackend::approx_equal(const Arrow& a, const Arrow& b,
                                   double eps) {
  if (!(a.src == b.src) || !(a.dst == b.dst)) return false;
  return approx_eq(a.m, b.m, eps);
}

Arrow CategoryBackend::compose_many(const std::vector<Arrow>& as) const {
  if (as.empty()) throw Error("ShapeMismatch", "empty composition");
  Arrow r = as.back();
  for (auto it = std::next(as.rbegin()); it != as.rend(); ++it)
    r = compose(*it, r);
  return r;
}

Arrow CategoryBackend::tensor_many(const std::vector<Arrow>& as) const {
  if (as.empty()) return identity(ObjectExpr::unit());
  Arrow r = as.front();
  for (size_t i = 1; i < as.size(); ++i) r = tensor(r, as[i]);
  return r;
}

bool verify_conjugate_equations(const CategoryBackend& c,
                                const ConjugateSolution& s, double eps) {
  const ObjectExpr& u = s.obj;
  const ObjectExpr& ub = s.conj;
  if (!(s.R.src == ObjectExpr::unit()) || !(s.R.dst == ub.tensor(u)))
    throw Error("ShapeMismatch", "R must lie in (unit, conj⊗obj)");
  if (!(s.Rbar.src == ObjectExpr::unit()) || !(s.Rbar.dst == u.tensor(ub)))
    throw Error("ShapeMismatch", "Rbar must lie in (unit, obj⊗conj)");
  Arrow one_u = c.identity(u), one_ub = c.identity(ub);
  // (R̄*⊗1_u) ∘ (1_u⊗R) = 1_u
  Arrow lhs1 = c.compose(c.tensor(c.adjoint(s.Rbar), one_u),
                         c.tensor(one_u, s.R));
  // (R*⊗1_ū) ∘ (1_ū⊗R̄) = 1_ū
  Arrow lhs2 = c.compose(c.tensor(c.adjoint(s.R), one_ub),
                         c.tensor(one_ub, s.Rbar));
  return CategoryBackend::approx_equal(lhs1, one_u, eps) &&
         CategoryBackend::approx_equal(lhs2, one_ub, eps);
}

bool verify_standardness(const CategoryBackend& c, const ConjugateSolution& s,
                         double eps) {
  Arrow one_ub = c.identity(s.conj);
  for (const Arrow& y : c.hom_basis(s.obj, s.obj)) {
    Arrow lhs = c.compose_many(
        {c.adjoint(s.R), c.tensor(one_ub, y), s.R});
    Arrow rhs = c.compose_many(
        {c.adjoint(s.Rbar), c.tensor(y, one_ub), s.Rbar});
    if (!Scalar::eq(c.scalar_of(lhs), c.scalar_of(rhs), eps)) return false;
  }
  return true;
}

ConjugateSolution standard_solution(const CategoryBackend& c,
                                    const ObjectExpr& u) {
  if (u.is_unit()) {
    Arrow one = c.identity(u);
    return {u, u, one, one, true};
  }
  ConjugateSolution s = c.letter_solution(u.word.front());
  for (size_t i = 1; i < u.word.size(); ++i)
    s = tensor_solution(c, s, c.letter_solution(u.word[i]));
  s.standard = true;
  return s;
}

Scalar intrinsic_dimension(const CategoryBackend& c, const ObjectExpr& u) {
  ConjugateSolution s = standard_solution(c, u);
  return c.scalar_of(c.compose(c.adjoint(s.R), s.R));
}

Arrow bullet(const CategoryBackend& c, const Arrow& a,
             const ConjugateSolution& sol_u, const ConjugateSolution& sol_v) {
  if (!(sol_v.obj == a.src) || !(sol_u.obj == a.dst))
    throw Error("ShapeMismatch", "bullet solutions must match arrow ends");
  Arrow one_vb = c.identity(sol_v.conj);
  Arrow one_ub = c.identity(sol_u.conj);
  return c.compose_many({
      c.tensor(c.adjoint(sol_v.R), one_ub),
      c.tensor(c.tensor(one_vb, c.adjoint(a)), one_ub),
      c.tensor(one_vb, sol_u.Rbar),
  });
}

ConjugateSolution tensor_solution(const CategoryBackend& c,
                                  const ConjugateSolution& su,
                                  const ConjugateSolution& sv) {
  ObjectExpr uv = su.obj.tensor(sv.obj);
  ObjectExpr conj = sv.conj.tensor(su.conj);
  Arrow R = c.compose(
      c.tensor(c.tensor(c.identity(sv.conj), su.R), c.identity(sv.obj)),
      sv.R);
  Arrow Rbar = c.compose(
      c.tensor(c.tensor(c.identity(su.obj), sv.Rbar), c.identity(su.conj)),
      su.Rbar);
  return {uv, conj, R, Rbar, su.standard && sv.standard};
}

ConjugateSolution conjugate_solution(const ConjugateSolution& s) {
  return {s.conj, s.obj, s.Rbar, s.R, s.standard};
}

}  // namespace tcat
