#include "tcat/quasitensor.hpp"

#include <sstream>

namespace tcat {

std::string CheckReport::str() const {
  std::ostringstream os;
  for (auto& [name, ok] : checks)
    os << (ok ? "pass" : "FAIL") << "  " << name << "\n";
  return os.str();
}

Arrow multi_mu(const QuasitensorFunctor& f,
               const std::vector<ObjectExpr>& us) {
  const CategoryBackend& t = *f.target;
  if (us.empty()) return t.identity(f.obj(ObjectExpr::unit()));
  ObjectExpr acc_obj = us[0];
  Arrow acc = t.identity(f.obj(us[0]));
  for (size_t i = 1; i < us.size(); ++i) {
    Arrow step = f.mu(acc_obj, us[i]);
    acc = t.compose(step, t.tensor(acc, t.identity(f.obj(us[i]))));
    acc_obj = acc_obj.tensor(us[i]);
  }
  return acc;
}

ConjugateSolution image_solution(const QuasitensorFunctor& f,
                                 const ConjugateSolution& sol) {
  const CategoryBackend& t = *f.target;
  Arrow rhat = t.compose(t.adjoint(f.mu(sol.conj, sol.obj)), f.arr(sol.R));
  Arrow rbhat = t.compose(t.adjoint(f.mu(sol.obj, sol.conj)), f.arr(sol.Rbar));
  return {f.obj(sol.obj), f.obj(sol.conj), rhat, rbhat, false};
}

QuasitensorFunctor compose_functors(const QuasitensorFunctor& g,
                                    const QuasitensorFunctor& f) {
  if (g.source.get() != f.target.get())
    throw Error("BackendMismatch", "compose_functors");
  QuasitensorFunctor h;
  h.source = f.source;
  h.target = g.target;
  h.obj = [g, f](const ObjectExpr& u) { return g.obj(f.obj(u)); };
  h.arr = [g, f](const Arrow& a) { return g.arr(f.arr(a)); };
  h.mu = [g, f](const ObjectExpr& u, const ObjectExpr& v) {
    Arrow inner = g.arr(f.mu(u, v));
    Arrow outer = g.mu(f.obj(u), f.obj(v));
    return g.target->compose(inner, outer);
  };
  int k = std::max(static_cast<int>(g.kind), static_cast<int>(f.kind));
  h.kind = static_cast<FunctorKind>(k);
  return h;
}

CheckReport verify_quasitensor_axioms(const QuasitensorFunctor& f,
                                      const std::vector<ObjectExpr>& objects,
                                      const std::vector<Arrow>& arrows,
                                      double eps) {
  const CategoryBackend& t = *f.target;
  CheckReport rep;
  ObjectExpr unit = ObjectExpr::unit();
  rep.add("unit-object", f.obj(unit).is_unit());
  bool unit_mu = true, isometry = true, square = true, assoc = true,
       natural = true, unitary = true, strict = true;
  for (auto& u : objects) {
    unit_mu &= CategoryBackend::approx_equal(f.mu(u, unit),
                                             t.identity(f.obj(u)), eps);
    unit_mu &= CategoryBackend::approx_equal(f.mu(unit, u),
                                             t.identity(f.obj(u)), eps);
    for (auto& v : objects) {
      Arrow m = f.mu(u, v);
      Arrow mm = t.compose(t.adjoint(m), m);
      isometry &= CategoryBackend::approx_equal(
          mm, t.identity(f.obj(u).tensor(f.obj(v))), eps);
      if (f.kind != FunctorKind::Quasitensor)
        unitary &= CategoryBackend::approx_equal(
            t.compose(m, t.adjoint(m)), t.identity(f.obj(u.tensor(v))), eps);
      if (f.kind == FunctorKind::Strict)
        strict &= CategoryBackend::approx_equal(
            m, t.identity(f.obj(u.tensor(v))), eps);
    }
  }
  int triples = 0;
  for (auto& u : objects)
    for (auto& v : objects)
      for (auto& w : objects) {
        if (++triples > 40) break;
        ObjectExpr uv = u.tensor(v), vw = v.tensor(w);
        Arrow one_u = t.identity(f.obj(u)), one_w = t.identity(f.obj(w));
        // commuting square
        Arrow lhs = t.compose(t.adjoint(f.mu(u, vw)), f.mu(uv, w));
        Arrow rhs = t.compose(t.tensor(one_u, f.mu(v, w)),
                              t.tensor(t.adjoint(f.mu(u, v)), one_w));
        square &= CategoryBackend::approx_equal(lhs, rhs, eps);
        // associativity
        Arrow a1 = t.compose(f.mu(uv, w), t.tensor(f.mu(u, v), one_w));
        Arrow a2 = t.compose(f.mu(u, vw), t.tensor(one_u, f.mu(v, w)));
        assoc &= CategoryBackend::approx_equal(a1, a2, eps);
      }
  int pairs = 0;
  for (auto& a : arrows)
    for (auto& b : arrows) {
      if (++pairs > 40) break;
      const CategoryBackend& s = *f.source;
      Arrow lhs = t.compose(f.arr(s.tensor(a, b)), f.mu(a.src, b.src));
      Arrow rhs =
          t.compose(f.mu(a.dst, b.dst), t.tensor(f.arr(a), f.arr(b)));
      natural &= CategoryBackend::approx_equal(lhs, rhs, eps);
    }
  rep.add("unit-mu", unit_mu);
  rep.add("isometry", isometry);
  rep.add("commuting-square", square);
  rep.add("naturality", natural);
  rep.add("associativity", assoc);
  if (f.kind != FunctorKind::Quasitensor) rep.add("mu-unitary", unitary);
  if (f.kind == FunctorKind::Strict) rep.add("mu-identity", strict);
  return rep;
}

CheckReport verify_appendix_identities(const QuasitensorFunctor& f,
                                       const ObjectExpr& u,
                                       const ObjectExpr& v, double eps) {
  const CategoryBackend& s = *f.source;
  const CategoryBackend& t = *f.target;
  CheckReport rep;
  ConjugateSolution su = standard_solution(s, u);
  ConjugateSolution sv = standard_solution(s, v);
  ConjugateSolution suv = tensor_solution(s, su, sv);
  ConjugateSolution ru = image_solution(f, su);
  ConjugateSolution rv = image_solution(f, sv);
  ConjugateSolution ruv = image_solution(f, suv);
  ConjugateSolution rpair = tensor_solution(t, ru, rv);

  // conjugation identity: bullet of μ̃_{u,v} is μ̃_{v̄,ū}
  Arrow m = f.mu(u, v);
  Arrow mb = bullet(t, m, ruv, rpair);
  Arrow m_conj = f.mu(sv.conj, su.conj);
  rep.add("mu-bullet", CategoryBackend::approx_equal(mb, m_conj, eps));
  Arrow msb = bullet(t, t.adjoint(m), rpair, ruv);
  rep.add("mu-star-bullet",
          CategoryBackend::approx_equal(msb, t.adjoint(m_conj), eps));

  // corollary: (μ̃∘(M⊗N)∘μ̃*)• = μ̃_{v̄,ū}∘(N•⊗M•)∘μ̃*_{v̄,ū}
  auto mbasis = t.hom_basis(f.obj(u), f.obj(u));
  auto nbasis = t.hom_basis(f.obj(v), f.obj(v));
  bool cor = true;
  int tried = 0;
  for (auto& M : mbasis) {
    for (auto& N : nbasis) {
      if (++tried > 4) break;
      Arrow x = t.compose(m, t.compose(t.tensor(M, N), t.adjoint(m)));
      Arrow xb = bullet(t, x, ruv, ruv);
      Arrow Mb = bullet(t, M, ru, ru);
      Arrow Nb = bullet(t, N, rv, rv);
      Arrow rhs = t.compose(
          m_conj, t.compose(t.tensor(Nb, Mb), t.adjoint(m_conj)));
      cor &= CategoryBackend::approx_equal(xb, rhs, eps);
    }
    if (tried > 4) break;
  }
  rep.add("conjugation-corollary", cor);

  // source-level identity: R_u• = R_u with the iterated solution for ū⊗u
  ConjugateSolution s_ubar_u =
      tensor_solution(s, conjugate_solution(su), su);
  ConjugateSolution s_unit = standard_solution(s, ObjectExpr::unit());
  Arrow rb = bullet(s, su.R, s_ubar_u, s_unit);
  rep.add("R-bullet", CategoryBackend::approx_equal(rb, su.R, eps));
  Arrow rsb = bullet(s, s.adjoint(su.R), s_unit, s_ubar_u);
  rep.add("R-star-bullet",
          CategoryBackend::approx_equal(rsb, s.adjoint(su.R), eps));
  return rep;
}

}  // namespace tcat
