#pragma once

#include "tcat/group.hpp"
#include "tcat/hilb.hpp"
#include "tcat/quasitensor.hpp"
#include "tcat/tl.hpp"

namespace tcat {

// The identity functor on a backend, as a strict tensor functor.
QuasitensorFunctor identity_functor(std::shared_ptr<const CategoryBackend> c);

// Restriction Rep(G) -> Rep(K).  Restricted letters are registered on the
// K backend under the name "<letter>|" (usually reducible).  Strict tensor.
QuasitensorFunctor restriction_functor(
    std::shared_ptr<const GroupBackend> g, const Subgroup& k,
    std::shared_ptr<GroupBackend> k_backend);

// Forgetful functor Rep(G) -> Hilb (matrices kept, the action dropped).
// Strict tensor.
QuasitensorFunctor forgetful_functor(std::shared_ptr<const GroupBackend> g);

// Minimal functor x ↦ (ι, x) into Hilb: the object map sends a whole word
// to one Hilbert letter whose dimension is dim(ι, x); arrows act by
// composition on orthonormalized bases of the (ι, x); μ̃_{u,v} is the
// inclusion (ι,u)⊗(ι,v) -> (ι,u⊗v).  Quasitensor in general.
QuasitensorFunctor minimal_functor(std::shared_ptr<const CategoryBackend> c);

// Embedding τ_F of the Temperley-Lieb category into Hilb determined by an
// admissible F: one-colored cup ↦ Σ_i e_i ⊗ F e_i; two-colored conjugate
// cup ↦ Σ_i (F*)^{-1} e_i ⊗ e_i.  Strict tensor.
QuasitensorFunctor embed_tau_F(std::shared_ptr<const TLBackend> tl,
                               const FMatrix& f);

}  // namespace tcat
