#pragma once

#include "tcat/category.hpp"

namespace tcat {

struct FiniteGroup {
  std::string name;
  int n = 0;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  std::vector<int> inv;
  int id = 0;

  int mul(int a, int b) const { return table[a][b]; }

  // Validates the group axioms.
  static FiniteGroup from_table(const std::string& name,
                                std::vector<std::vector<int>> t);
  static FiniteGroup cyclic(int n);
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);
  static FiniteGroup symmetric(int n);    // n <= 4, permutation enumeration
  static FiniteGroup quaternion();        // Q8
  static FiniteGroup dihedral4();         // D4, order 8
};

// A subgroup presented as its own FiniteGroup plus the element embedding.
struct Subgroup {
  FiniteGroup group;
  std::vector<int> embed;  // K-element index -> G-element index
};

// The subgroup generated by a set of closed elements of G.
Subgroup subgroup_of(const FiniteGroup& g, std::vector<int> elements,
                     const std::string& name);

// Alternating subgroup of symmetric(n).
Subgroup alternating_in(const FiniteGroup& sym);

struct Rep {
  int dim = 0;
  std::vector<Matrix> mats;  // one unitary per group element
  Scalar character(int g) const { return mats[g].trace(); }
};

// The category of finite-dimensional unitary representations of a finite
// group, presented by registered named representations; objects are tensor
// words of registered names, arrows are concrete matrices.
class GroupBackend : public CategoryBackend {
 public:
  explicit GroupBackend(FiniteGroup g) : g_(std::move(g)) {}

  const FiniteGroup& group() const { return g_; }

  // Validates unitarity and the homomorphism property.
  void register_rep(const std::string& name, Rep r, bool irreducible);
  bool has_rep(const std::string& name) const { return reps_.count(name); }
  const Rep& rep(const std::string& name) const;

  int dim_of(const ObjectExpr& o) const;
  Matrix object_mat(const ObjectExpr& o, int g) const;
  Scalar character(const ObjectExpr& o, int g) const {
    return object_mat(o, g).trace();
  }
  // dim hom(src, dst) by character averaging (cheap exact oracle).
  Scalar hom_dim_by_characters(const ObjectExpr& src,
                               const ObjectExpr& dst) const;

  // CategoryBackend contract.
  Arrow identity(const ObjectExpr& o) const override;
  Arrow compose(const Arrow& a, const Arrow& b) const override;
  Arrow tensor(const Arrow& a, const Arrow& b) const override;
  Arrow adjoint(const Arrow& a) const override;
  std::vector<Arrow> hom_basis(const ObjectExpr& src,
                               const ObjectExpr& dst) const override;
  std::string conj_letter(const std::string& l) const override;
  std::vector<std::string> irreducible_labels() const override {
    return irreps_;
  }
  std::vector<std::pair<std::string, Arrow>> fusion(
      const ObjectExpr& o) const override;
  ConjugateSolution letter_solution(const std::string& l) const override;
  Scalar scalar_of(const Arrow& a) const override;

  // decompose: list of (irrep label, multiplicity); the isometries are the
  // fusion arrows.
  std::vector<std::pair<std::string, int>> decompose(
      const ObjectExpr& o) const;

 private:
  FiniteGroup g_;
  mutable std::map<std::string, Rep> reps_;
  mutable std::map<std::string, bool> irreducible_;
  mutable std::vector<std::string> irreps_;
  mutable std::map<std::pair<ObjectExpr, ObjectExpr>, std::vector<Matrix>>
      hom_cache_;

  std::vector<Matrix> hom_matrices(const ObjectExpr& src,
                                   const ObjectExpr& dst) const;
};

// Backends with the full irreducible tables of the built-in groups:
// "Z2", "Z3", "Z4", "Z2xZ2", "S3", "A3", "S4", "A4", "Q8", "D4".
std::shared_ptr<GroupBackend> builtin_group_backend(const std::string& key);

// The built-in subgroup pairs "S3>A3", "S4>A4", "D4>V4" as (G backend,
// subgroup data).
std::pair<std::shared_ptr<GroupBackend>, Subgroup> builtin_pair(
    const std::string& key);

// SU(2) fusion-rule backend (labels only, no matrices).
std::vector<int> su2_fusion(int r, int s);
std::vector<int> su2_fuse_all(const std::vector<int>& labels);
int su2_hom_dim(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace tcat
