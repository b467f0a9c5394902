#pragma once

#include "tcat/group.hpp"

namespace tcat {

// An ergodic action of a finite group on a full matrix algebra Mat_n, given
// by implementing unitaries pi(k) acting by beta_k = Ad pi(k).  The
// unitaries may be projective (a scalar 2-cocycle cancels under Ad).  The
// constructor certifies that Ad pi is multiplicative on the group table and
// that the fixed algebra is the scalars; it throws otherwise.
class ErgodicAction {
 public:
  ErgodicAction(std::shared_ptr<const GroupBackend> k, std::vector<Matrix> pi,
                double eps = epsilon());

  std::shared_ptr<const GroupBackend> backend() const { return kb_; }
  const FiniteGroup& group() const { return kb_->group(); }
  int n() const { return n_; }
  double eps() const { return eps_; }
  const Matrix& unitary(int k) const { return pi_[k]; }
  Matrix beta(int k, const Matrix& f) const;

  // the normalized trace, the unique invariant state
  Scalar state(const Matrix& f) const { return f.trace() / Scalar(n_); }

 private:
  std::shared_ptr<const GroupBackend> kb_;
  std::vector<Matrix> pi_;
  int n_;
  double eps_;
};

// The spectral space of a representation: an orthonormal basis of the
// K-fixed vectors of v (x) beta in H_v (x) F.  Each basis element is stored
// stacked as a (dim_v * n) x n matrix whose i-th n x n slice is T(psi_i)^*
// for the corresponding intertwiner T: H_v -> F.
struct SpectralSpace {
  int dim_v = 0;
  int n = 0;
  std::vector<Matrix> basis;
  int mult() const { return static_cast<int>(basis.size()); }
};

struct Eigenmatrix {
  SpectralSpace space;
  Matrix Z;  // (dim_v*n) x (mult*n) isometry; zero columns if empty spectrum
  Matrix E;  // Z Z^*
};

// full bimodule structure on the submodule E(H_v (x) F)
struct FullStructure {
  int dim_v = 0;
  int n = 0;
  Matrix E;                 // projection in L(H_v) (x) F
  std::vector<Matrix> eta;  // eta on the matrix units e_ab of F, index a*n+b
  Matrix Z;                 // eigenmatrix of v, for the module condition
  // optional presentation as a pair (z, W)
  bool has_pair = false;
  std::vector<std::string> z_labels;
  Matrix W;
};

Matrix apply_eta(const FullStructure& s, const Matrix& f);

struct StructureReport {
  bool projection = false;        // E is a self-adjoint idempotent
  bool dominates = false;         // E >= E_v
  bool covariant_e = false;       // Ad v(k) (x) beta_k (E) = E
  bool covariant_eta = false;     // eta(beta_k(f)) = Ad v(k) (x) beta_k eta(f)
  bool module_condition = false;  // eta(f) Z = Z (1 (x) f)
  bool star_hom = false;          // unital *-homomorphism onto E(..)E
  double residual = 0.0;          // largest deviation seen
  bool pass() const {
    return projection && dominates && covariant_e && covariant_eta &&
           module_condition && star_hom;
  }
};

// raw-matrix core: vmats is one unitary per group element of act.group()
SpectralSpace spectral_space_mats(const std::vector<Matrix>& vmats,
                                  const ErgodicAction& act);
Eigenmatrix eigenmatrix_mats(const std::vector<Matrix>& vmats,
                             const ErgodicAction& act);

SpectralSpace spectral_space(const ObjectExpr& v, const ErgodicAction& act);
Eigenmatrix eigenmatrix(const ObjectExpr& v, const ErgodicAction& act);

// E = E_v with left action f -> Z (1 (x) f) Z^*; throws EmptySpectrum
FullStructure canonical_full_bimodule(const ObjectExpr& v,
                                      const ErgodicAction& act);

StructureReport verify_full_structure(const FullStructure& s,
                                      const std::vector<Matrix>& vmats,
                                      const ErgodicAction& act);
StructureReport verify_full_structure(const FullStructure& s,
                                      const ObjectExpr& v,
                                      const ErgodicAction& act);

// intertwiner space (z (x) beta, v (x) beta) as matrices in
// L(H_z, H_v) (x) F, computed by group averaging
std::vector<Matrix> module_intertwiners(const std::vector<Matrix>& vmats,
                                        const std::vector<Matrix>& zmats,
                                        const ErgodicAction& act);

// classification of the full bimodule structures on H_v (x) F by pairs
// (z, W): z runs over irrep multisets with dim(z) = dim(v) - mult, W an
// isometry intertwiner with W^* Z_v = 0
struct PairClass {
  std::vector<std::string> z_labels;
  int hom_dim = 0;     // dim of the W-candidate space after W^* Z_v = 0
  bool exists = false; // an isometry W was found
  Matrix W;            // representative when exists
  // real dimension of the solution classes modulo the unitary equivalence
  // W ~ W U (x) 1, U in (z, z); 0 means an isolated class
  int param_dim = 0;
};

struct ClassifyReport {
  int dim_v = 0;
  int mult = 0;
  bool full_multiplicity = false;  // unique structure, empty z
  std::vector<PairClass> classes;
  bool exhaustive = true;
  bool exists_any() const {
    if (full_multiplicity) return true;
    for (auto& c : classes)
      if (c.exists) return true;
    return false;
  }
};

ClassifyReport classify_pairs(const ObjectExpr& v, const ErgodicAction& act,
                              int search_bound = 16);

// The algebra Ind(F) of K-equivariant functions G -> F, f(kg) = beta_k f(g),
// with G acting by right translation.  Elements and intertwiner functions
// are stored by their values at the right-coset representatives of K\G,
// with the identity always representing its own coset.
class InducedSystem {
 public:
  InducedSystem(std::shared_ptr<const GroupBackend> g, const Subgroup& k,
                const ErgodicAction& act);  // throws NotASubgroup

  const ErgodicAction& base() const { return act_; }
  std::shared_ptr<const GroupBackend> big() const { return gb_; }
  int cosets() const { return static_cast<int>(reps_.size()); }
  int coset_rep(int c) const { return reps_[c]; }
  // g = k * coset_rep(c): the decomposition
  int coset_of(int g) const { return coset_[g]; }
  int k_part(int g) const { return kpart_[g]; }

  // f(g) from the stored coset values, via equivariance
  Matrix value(const std::vector<Matrix>& f, int g) const;
  std::vector<Matrix> rho(int g, const std::vector<Matrix>& f) const;

  // fixed-space dimension of v (x) rho on H_v (x) Ind(F), computed directly
  // in the coset model by group averaging over G
  int induced_mult(const ObjectExpr& v) const;

  // module intertwiner space (v (x) rho, v' (x) rho), each element a
  // function G -> L(H_v, H_v') (x) F stored at the coset representatives
  std::vector<std::vector<Matrix>> induced_intertwiners(
      const ObjectExpr& v, const ObjectExpr& vp) const;

  std::shared_ptr<const GroupBackend> kb() const { return act_.backend(); }
  const Subgroup& sub() const { return sub_; }
  // restriction of a G-object to K, as one matrix per K-element
  std::vector<Matrix> restricted(const ObjectExpr& v) const;

 private:
  std::shared_ptr<const GroupBackend> gb_;
  Subgroup sub_;
  ErgodicAction act_;
  std::vector<int> reps_, coset_, kpart_;
};

InducedSystem induce_action(std::shared_ptr<const GroupBackend> g,
                            const Subgroup& k, const ErgodicAction& act);

// the eigenmatrix of v (x) rho as a function on G, per the translation
// identity Z^rho(g) = (v(g)^* (x) 1) Z^beta; verified elementwise in tests
std::vector<Matrix> induced_eigenmatrix(const InducedSystem& sys,
                                        const ObjectExpr& v);

// evaluation functor: T in (v (x) rho, v' (x) rho) -> T(1)
Matrix evaluate_at_identity(const InducedSystem& sys,
                            const std::vector<Matrix>& t);
// inverse on arrows: A -> A' with A'(g) = (v'(g)^* (x) 1) A (v(g) (x) 1)
std::vector<Matrix> lift_intertwiner(const InducedSystem& sys, const Matrix& a,
                                     const ObjectExpr& v,
                                     const ObjectExpr& vp);

// symbolic SU(2) adjoint-action analysis (fusion rules only)
struct Su2Report {
  int r = 0;
  std::vector<int> spectrum;  // {0, 2, ..., 2r}
  int v1_hom_dim = 0;         // dim (v1 (x) beta_r, v1 (x) beta_r)
  bool v1_exists = false;     // full structures on v1 (x) beta_r exist
  int v1_param_dim = 0;       // the circle of classes
  int v2_hom_dim = 0;         // dim (v1 (x) beta_r, v2 (x) beta_r)
  bool v2_nonexistence = false;
  std::string verdict_v1, verdict_v2;
};

Su2Report su2_adjoint_report(int r);

// the Weyl-pair action of Z2xZ2 on Mat_2 (Pauli X and Z as implementers)
ErgodicAction weyl_pair_action();
// the same action over any backend carrying a Klein four-group
ErgodicAction weyl_pair_action_on(std::shared_ptr<const GroupBackend> kb);

}  // namespace tcat
