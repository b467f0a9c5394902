#pragma once

#include <map>
#include <mutex>

#include "tcat/quasitensor.hpp"

namespace tcat {

// An element of the induced bimodule over a sequence of source objects,
// kept in normal form: for each irreducible source label v carrying a
// nonzero hom-space, a coefficient matrix pairing the cached basis of
// (mu_v, mu_seq) (rows) with the standard basis of tau_v (columns).  The
// empty sequence gives the spectral algebra; its elements are written c.
struct BimoduleElement {
  std::vector<ObjectExpr> seq;
  ObjectExpr m_obj;  // tensor product of the mu-images of seq
  std::map<std::string, Matrix> comp;
};
using SpectralElement = BimoduleElement;

BimoduleElement add(const BimoduleElement& a, const BimoduleElement& b);
BimoduleElement scale(const BimoduleElement& a, const Scalar& s);
bool approx_equal(const BimoduleElement& a, const BimoduleElement& b,
                  double eps);
bool is_zero(const BimoduleElement& a, double eps);

// Per-letter replacement of the standard conjugate solutions, used to
// exercise the solution dependence of the star operation (e.g. the sign
// flip required for a second pass over a pseudoreal object).
using SolutionOverrides = std::map<std::string, ConjugateSolution>;

// Holds a pair of functors on a common source - tau, a strict tensor
// functor into Hilbert spaces, and mu, quasitensor - and realizes the
// spectral algebra, the induced bimodules over object sequences with
// their multiplication, star and algebra-valued inner product, the Swan
// isometry, and the hom-spaces of the induction functor.
class InductionContext {
 public:
  InductionContext(QuasitensorFunctor tau, QuasitensorFunctor mu,
                   double eps = epsilon());

  const QuasitensorFunctor& tau() const { return tau_; }
  const QuasitensorFunctor& mu() const { return mu_; }
  std::shared_ptr<const CategoryBackend> source() const { return mu_.source; }
  std::shared_ptr<const CategoryBackend> target() const { return mu_.target; }
  std::shared_ptr<const CategoryBackend> hilb() const { return tau_.target; }
  double eps() const { return eps_; }
  const std::string& trivial_label() const { return trivial_; }

  // mu-image of a sequence, dimension of a tau-image.
  ObjectExpr m_of(const std::vector<ObjectExpr>& seq) const;
  int tau_dim(const ObjectExpr& u) const;

  // cached basis of (mu_label, m_obj) in the target.
  const std::vector<Arrow>& slot_basis(const std::string& label,
                                       const ObjectExpr& m_obj) const;
  // cached standard solution for a source object.
  const ConjugateSolution& solution(const ObjectExpr& u) const;
  ConjugateSolution solution_of(const ObjectExpr& u,
                                const SolutionOverrides& ov) const;
  // antilinear conjugation psi -> J conj(psi) of tau_v onto tau_vbar.
  Matrix j_matrix(const ConjugateSolution& sol) const;

  // element constructors
  BimoduleElement zero(const std::vector<ObjectExpr>& seq) const;
  SpectralElement unit() const;
  // x_i = 1_{mu_u} (x) psi_i, the free-module generators.
  BimoduleElement x_basis(const ObjectExpr& u, int i) const;
  // the matrix-coefficient generator of the spectral algebra at an
  // irreducible label: slot entry (r, i) set to one.
  SpectralElement coefficient_element(const std::string& label, int r,
                                      int i) const;
  // quotient a raw pair M in (mu_v, mu_seq), psi in tau_v into normal form,
  // decomposing v into irreducibles.
  BimoduleElement normalize(const std::vector<ObjectExpr>& seq,
                            const Arrow& m, const ObjectExpr& v,
                            const Matrix& psi) const;

  // operations
  BimoduleElement mul(const BimoduleElement& a, const BimoduleElement& b)
      const;  // concatenation product
  BimoduleElement dot(const BimoduleElement& a, const BimoduleElement& b)
      const;  // single-object product: lambda(mu-tilde) after mul
  BimoduleElement lambda_map(const Arrow& y, const BimoduleElement& a,
                             const std::vector<ObjectExpr>& new_seq) const;
  BimoduleElement star(const BimoduleElement& a,
                       const SolutionOverrides& ov = {}) const;
  SpectralElement inner_product(const BimoduleElement& a,
                                const BimoduleElement& b) const;
  Scalar invariant_state(const SpectralElement& c) const;

  // Swan map: coefficients of S_u xi against an orthonormal basis of
  // tau_u, its adjoint, and the range projection P_u = S_u S_u*.
  std::vector<SpectralElement> swan(const ObjectExpr& u,
                                    const BimoduleElement& xi) const;
  BimoduleElement swan_adjoint(const ObjectExpr& u,
                               const std::vector<SpectralElement>& cs) const;
  // P_u = S_u S_u* applied to a vector of tau_u-coefficients.
  std::vector<SpectralElement> range_projection(
      const ObjectExpr& u, const std::vector<SpectralElement>& cs) const;
  // the unitarity condition mu-tilde o mu-tilde* o mu(R) = mu(R).
  bool free_module_condition(const ObjectExpr& u) const;

  // closed form for <x_i, c . x_j> (left-action matrix elements).
  SpectralElement left_action_entry(const ObjectExpr& u,
                                    const SpectralElement& c, int i,
                                    int j) const;

  // basis of the hom-space of the induction functor between two sequences,
  // as target arrows mu_useq -> mu_vseq pulled back from fixed vectors.
  std::vector<Arrow> ind_hom(const std::vector<ObjectExpr>& useq,
                             const std::vector<ObjectExpr>& vseq) const;
  // Frobenius reciprocity at an irreducible label: multiplicity of v in
  // the bimodule over seq against the fixed vectors with vbar adjoined.
  bool frobenius_pairing(const std::string& label,
                         const std::vector<ObjectExpr>& seq) const;
  // naturality of the Swan maps in a source arrow, on a corpus of
  // elements of the bimodule over {a.src}.
  bool naturality_check(const Arrow& a,
                        const std::vector<BimoduleElement>& corpus) const;

 private:
  QuasitensorFunctor tau_, mu_;
  double eps_;
  std::string trivial_;
  Scalar unit_coeff_;

  mutable std::mutex cache_mtx_;
  mutable std::map<std::pair<std::string, ObjectExpr>, std::vector<Arrow>>
      slot_cache_;
  mutable std::map<std::pair<std::string, ObjectExpr>, Matrix> span_cache_;
  mutable std::map<ObjectExpr, ConjugateSolution> sol_cache_;
  mutable std::map<ObjectExpr, std::vector<std::pair<std::string, Arrow>>>
      fusion_cache_;
  mutable std::map<ObjectExpr, int> dim_cache_;

  const std::vector<std::pair<std::string, Arrow>>& fusion(
      const ObjectExpr& o) const;
  // coefficients of an arrow in (mu_label, m_obj) against slot_basis.
  Matrix slot_coeffs(const std::string& label, const ObjectExpr& m_obj,
                     const Arrow& m) const;
  // tensored image solution for the mu-image of a sequence.
  ConjugateSolution m_solution(const std::vector<ObjectExpr>& seq,
                               const SolutionOverrides& ov) const;
};

}  // namespace tcat
