#pragma once

#include <functional>

#include "tcat/category.hpp"

namespace tcat {

// A named list of pass/fail checks.
struct CheckReport {
  std::vector<std::pair<std::string, bool>> checks;
  void add(const std::string& name, bool ok) { checks.push_back({name, ok}); }
  bool all_passed() const {
    for (auto& [n, ok] : checks)
      if (!ok) return false;
    return true;
  }
  std::string str() const;
};

enum class FunctorKind { Strict, Relaxed, Quasitensor };

// A *-functor μ between tensor C*-categories together with the natural
// isometries μ̃_{u,v} ∈ (μ_u ⊗ μ_v, μ_{u⊗v}); μ_ι = ι and μ̃_{u,ι} =
// μ̃_{ι,u} = 1 are required.  Strict: all μ̃ identities; relaxed: all μ̃
// unitary.
struct QuasitensorFunctor {
  std::shared_ptr<const CategoryBackend> source, target;
  std::function<ObjectExpr(const ObjectExpr&)> obj;
  std::function<Arrow(const Arrow&)> arr;
  std::function<Arrow(const ObjectExpr&, const ObjectExpr&)> mu;
  FunctorKind kind = FunctorKind::Quasitensor;

  Arrow apply(const Arrow& a) const { return arr(a); }
};

// μ̃_{u_1,…,u_n} ∈ (μ_{u_1}⊗…⊗μ_{u_n}, μ_{u_1⊗…⊗u_n}), left-bracketed;
// associativity makes the bracketing immaterial.
Arrow multi_mu(const QuasitensorFunctor& f,
               const std::vector<ObjectExpr>& us);

// Image solution for μ_u: R̂ = μ̃*_{ū,u}∘μ(R), R̄̂ = μ̃*_{u,ū}∘μ(R̄).
ConjugateSolution image_solution(const QuasitensorFunctor& f,
                                 const ConjugateSolution& sol);

// Composite ν∘μ with natural transformation ν(μ̃_{u,v})∘ν̃_{μ_u,μ_v}.
QuasitensorFunctor compose_functors(const QuasitensorFunctor& g,
                                    const QuasitensorFunctor& f);

// Axioms: unit preservation, unit μ̃'s, isometry, the commuting square
// μ̃*_{u,v⊗w}∘μ̃_{u⊗v,w} = (1⊗μ̃_{v,w})∘(μ̃*_{u,v}⊗1), naturality on the
// given arrows, and associativity of μ̃; plus unitarity/identity when the
// kind claims relaxed/strict.
CheckReport verify_quasitensor_axioms(const QuasitensorFunctor& f,
                                      const std::vector<ObjectExpr>& objects,
                                      const std::vector<Arrow>& arrows,
                                      double eps);

// Conjugation identities: μ̃_{u,v}• = μ̃_{v̄,ū} (bullet w.r.t. the image of
// the tensor-product solution on one side, the tensored image solutions on
// the other); the corollary (μ̃∘M⊗N∘μ̃*)• = μ̃∘N•⊗M•∘μ̃*; and the
// source-level identity R_u• = R_u.
CheckReport verify_appendix_identities(const QuasitensorFunctor& f,
                                       const ObjectExpr& u,
                                       const ObjectExpr& v, double eps);

}  // namespace tcat
