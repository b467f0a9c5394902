#pragma once

#include "tcat/category.hpp"

namespace tcat {

enum class TLVariant { Real, Pseudoreal, TwoColored };

// A non-crossing perfect matching on n_bottom + n_top boundary points,
// numbered bottom row left-to-right (0 .. nb-1) then top row left-to-right
// (nb .. nb+nt-1).
struct PlanarDiagram {
  int nb = 0, nt = 0;
  std::vector<int> partner;  // partner[i] = the point matched with i

  bool operator==(const PlanarDiagram& o) const {
    return nb == o.nb && nt == o.nt && partner == o.partner;
  }
  bool operator<(const PlanarDiagram& o) const {
    return std::tie(nb, nt, partner) < std::tie(o.nb, o.nt, o.partner);
  }
  static PlanarDiagram ident(int n);
  static PlanarDiagram cup();  // (0, 2)
  PlanarDiagram flip() const;  // swap bottom and top rows
  PlanarDiagram tensor(const PlanarDiagram& o) const;
  int cups() const;  // pairs with both points in the top row
  int caps() const;
  std::string str() const;
};

// Stacking a on top of b (a∘b); returns the boundary diagram and the number
// of closed loops removed.
std::pair<PlanarDiagram, int> stack_diagrams(const PlanarDiagram& a,
                                             const PlanarDiagram& b);

// All non-crossing matchings (nb bottom, nt top points), deterministically
// ordered.  colors, when non-empty, gives the letter of every point in
// diagram numbering and restricts pairs: within a row the letters must
// differ, across rows they must agree.
std::vector<PlanarDiagram> noncrossing_diagrams(
    int nb, int nt, const std::vector<std::string>& colors = {});

// The Temperley-Lieb category at loop parameter d.  One-colored variants
// use the single self-conjugate letter "x" (Real: R̄ = R; Pseudoreal:
// R̄ = -R, with the matching sign rule in composition); the two-colored
// variant uses the conjugate pair "x", "xb".  Irreducible labels "#k" are
// Jones-Wenzl compressed words: an arrow with "#k" in its source or target
// is stored as its word-level representative, pre/post-composed with f_k.
// Arrows carry coefficient columns over the canonical diagram basis of the
// expanded words.
class TLBackend : public CategoryBackend {
 public:
  TLBackend(Scalar d, TLVariant variant, int n_max = 8);

  Scalar loop_value() const { return d_; }
  TLVariant variant() const { return variant_; }

  // Quantum integer [n] for d = q + 1/q ([0] = 0, [1] = 1).
  Scalar quantum_int(int n) const;

  // Expanded word of an object ("#k" -> k copies of "x").
  ObjectExpr expand(const ObjectExpr& o) const;
  // Canonical diagram basis of hom(expanded src, expanded dst).
  const std::vector<PlanarDiagram>& diagram_basis(const ObjectExpr& src,
                                                  const ObjectExpr& dst) const;
  Arrow from_diagram(const ObjectExpr& src, const ObjectExpr& dst,
                     const PlanarDiagram& d) const;
  // Jones-Wenzl idempotent f_n as an arrow on the word x^n.
  Arrow jones_wenzl(int n) const;
  // Decomposition of the compressed tensor #m ⊗ #n into labels #k; the
  // isometries run from "#k" into the word "#m","#n".
  std::vector<std::pair<std::string, Arrow>> fusion_tl(int m, int n) const;

  Arrow identity(const ObjectExpr& o) const override;
  Arrow compose(const Arrow& a, const Arrow& b) const override;
  Arrow tensor(const Arrow& a, const Arrow& b) const override;
  Arrow adjoint(const Arrow& a) const override;
  std::vector<Arrow> hom_basis(const ObjectExpr& src,
                               const ObjectExpr& dst) const override;
  std::string conj_letter(const std::string& l) const override;
  std::vector<std::string> irreducible_labels() const override;
  std::vector<std::pair<std::string, Arrow>> fusion(
      const ObjectExpr& o) const override;
  ConjugateSolution letter_solution(const std::string& l) const override;
  Scalar scalar_of(const Arrow& a) const override;

 private:
  Scalar d_;
  TLVariant variant_;
  int n_max_;
  mutable std::map<std::pair<ObjectExpr, ObjectExpr>,
                   std::vector<PlanarDiagram>>
      basis_cache_;
  mutable std::map<int, Arrow> jw_cache_;

  std::vector<std::string> colors_of(const ObjectExpr& src,
                                     const ObjectExpr& dst) const;
  Scalar stack_coeff(const PlanarDiagram& a, const PlanarDiagram& b,
                     const PlanarDiagram& res, int loops) const;
  // isometries "#k" -> dst for a given compression idempotent on dst's word
  std::vector<Arrow> label_isometries(int k, const ObjectExpr& dst,
                                      const Arrow& compress) const;
};

struct FMatrix {
  Matrix F;
  TLVariant variant = TLVariant::Real;
};

// Trace conditions Tr(FF*) = Tr((FF*)^{-1}) = d plus the reality constraint
// of the variant (FF̄ = I real, FF̄ = -I pseudoreal, none two-colored).
bool check_F_admissible(const FMatrix& f, const Scalar& d, double eps);
inline bool check_F_admissible(const FMatrix& f, const Scalar& d) {
  return check_F_admissible(f, d, epsilon());
}

}  // namespace tcat
