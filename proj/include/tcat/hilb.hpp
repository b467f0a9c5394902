#pragma once

#include "tcat/category.hpp"

namespace tcat {

// Finite-dimensional Hilbert spaces with letters registered by dimension
// (zero-dimensional letters allowed).  Every object decomposes into copies
// of the tensor unit, which is the single irreducible label "1".
class HilbBackend : public CategoryBackend {
 public:
  void register_letter(const std::string& name, int dim);
  bool has_letter(const std::string& name) const { return dims_.count(name); }
  int dim_of(const ObjectExpr& o) const;

  Arrow identity(const ObjectExpr& o) const override;
  Arrow compose(const Arrow& a, const Arrow& b) const override;
  Arrow tensor(const Arrow& a, const Arrow& b) const override;
  Arrow adjoint(const Arrow& a) const override;
  std::vector<Arrow> hom_basis(const ObjectExpr& src,
                               const ObjectExpr& dst) const override;
  std::string conj_letter(const std::string& l) const override;
  std::vector<std::string> irreducible_labels() const override {
    return {"1"};
  }
  ObjectExpr label_object(const std::string& label) const override;
  std::vector<std::pair<std::string, Arrow>> fusion(
      const ObjectExpr& o) const override;
  ConjugateSolution letter_solution(const std::string& l) const override;
  Scalar scalar_of(const Arrow& a) const override;

 private:
  std::map<std::string, int> dims_;
};

}  // namespace tcat
