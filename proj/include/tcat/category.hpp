#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tcat/matrix.hpp"

namespace tcat {

// An object of a strict tensor category: a word over the backend's letter
// alphabet.  The empty word is the tensor unit.
struct ObjectExpr {
  std::vector<std::string> word;

  ObjectExpr() = default;
  static ObjectExpr unit() { return {}; }
  static ObjectExpr letter(const std::string& l) {
    ObjectExpr o;
    o.word.push_back(l);
    return o;
  }
  bool is_unit() const { return word.empty(); }
  ObjectExpr tensor(const ObjectExpr& o) const {
    ObjectExpr r = *this;
    r.word.insert(r.word.end(), o.word.begin(), o.word.end());
    return r;
  }
  bool operator==(const ObjectExpr& o) const { return word == o.word; }
  bool operator<(const ObjectExpr& o) const { return word < o.word; }
  std::string str() const;
};

// A morphism, carried as a matrix whose interpretation (concrete linear map,
// or coefficients in a canonical diagram basis) is fixed by the backend.
struct Arrow {
  ObjectExpr src, dst;
  Matrix m;
};

struct ConjugateSolution {
  ObjectExpr obj, conj;
  Arrow R;     // in (unit, conj ⊗ obj)
  Arrow Rbar;  // in (unit, obj ⊗ conj)
  bool standard = false;
};

// Contract of a strict tensor C*-category presented by generators: hom-space
// bases, composition/tensor/adjoint of arrows, fusion into irreducibles and
// conjugate solutions for single letters.
class CategoryBackend {
 public:
  virtual ~CategoryBackend() = default;

  virtual Arrow identity(const ObjectExpr& o) const = 0;
  virtual Arrow compose(const Arrow& a, const Arrow& b) const = 0;
  virtual Arrow tensor(const Arrow& a, const Arrow& b) const = 0;
  virtual Arrow adjoint(const Arrow& a) const = 0;
  virtual std::vector<Arrow> hom_basis(const ObjectExpr& src,
                                       const ObjectExpr& dst) const = 0;
  virtual std::string conj_letter(const std::string& l) const = 0;
  // Complete list of irreducible labels the backend can fuse into (possibly
  // truncated, e.g. for diagram categories).
  virtual std::vector<std::string> irreducible_labels() const = 0;
  virtual ObjectExpr label_object(const std::string& label) const {
    return ObjectExpr::letter(label);
  }
  // Orthogonal decomposition of an object: (label, isometry label -> o) with
  // w*∘w = 1 and Σ w∘w* = 1.
  virtual std::vector<std::pair<std::string, Arrow>> fusion(
      const ObjectExpr& o) const = 0;
  // Conjugate solution for a single letter (normalized, standard).
  virtual ConjugateSolution letter_solution(const std::string& l) const = 0;
  // The coefficient of an arrow in (unit, unit) against the identity.
  virtual Scalar scalar_of(const Arrow& a) const = 0;

  ObjectExpr conjugate(const ObjectExpr& o) const;

  // Linear structure on hom-spaces (backend-independent).
  static Arrow add(const Arrow& a, const Arrow& b);
  static Arrow scale(const Arrow& a, const Scalar& s);
  static bool approx_equal(const Arrow& a, const Arrow& b, double eps);
  static bool approx_equal(const Arrow& a, const Arrow& b) {
    return approx_equal(a, b, epsilon());
  }

  Arrow compose_many(const std::vector<Arrow>& as) const;  // right-to-left
  Arrow tensor_many(const std::vector<Arrow>& as) const;
};

// --- conjugate-equation machinery -----------------------------------------

bool verify_conjugate_equations(const CategoryBackend& c,
                                const ConjugateSolution& s, double eps);
inline bool verify_conjugate_equations(const CategoryBackend& c,
                                       const ConjugateSolution& s) {
  return verify_conjugate_equations(c, s, epsilon());
}

// The tracial balance condition R*∘(1⊗Y)∘R = R̄*∘(Y⊗1)∘R̄ against a basis
// of (u,u).
bool verify_standardness(const CategoryBackend& c, const ConjugateSolution& s,
                         double eps);

// Standard solution for an arbitrary word: letters via the backend supplier,
// longer words as iterated tensor-product solutions (tensor products and
// direct sums of standard solutions are standard).
ConjugateSolution standard_solution(const CategoryBackend& c,
                                    const ObjectExpr& u);

// d(u) = R*∘R of the standard solution.
Scalar intrinsic_dimension(const CategoryBackend& c, const ObjectExpr& u);

// A ∈ (v,u) ↦ A• = (R_v*⊗1_ū) ∘ (1_v̄⊗A*⊗1_ū) ∘ (1_v̄⊗R̄_u) ∈ (v̄,ū).
Arrow bullet(const CategoryBackend& c, const Arrow& a,
             const ConjugateSolution& sol_u, const ConjugateSolution& sol_v);

// Solution for u⊗v with conjugate object v̄⊗ū.
ConjugateSolution tensor_solution(const CategoryBackend& c,
                                  const ConjugateSolution& su,
                                  const ConjugateSolution& sv);

// Solution for ū: swap R and R̄.
ConjugateSolution conjugate_solution(const ConjugateSolution& s);

}  // namespace tcat
