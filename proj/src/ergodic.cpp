#include "tcat/ergodic.hpp"

#include <algorithm>

namespace tcat {

namespace {

// row-major flattening, compatible with vec(A X B) = (A kron B^T) vec(X)
Matrix vec(const Matrix& m) {
  Matrix v(m.rows() * m.cols(), 1);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.at(i * m.cols() + j, 0) = m.at(i, j);
  return v;
}

Matrix unvec(const Matrix& v, int r, int c) {
  Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = v.at(i * c + j, 0);
  return m;
}

// orthonormal basis of the common fixed space of a representation given by
// one operator per group element
std::vector<Matrix> fixed_space(const std::vector<Matrix>& ops,
                                const std::vector<std::vector<int>>& table) {
  Matrix p = group_average(ops, table);
  std::vector<Matrix> cols;
  for (int j = 0; j < p.cols(); ++j) cols.push_back(p.col(j));
  return orthonormalize(cols);
}

Matrix matrix_unit(int n, int a, int b) {
  Matrix e(n, n);
  e.at(a, b) = Scalar(1);
  return e;
}

}  // namespace

ErgodicAction::ErgodicAction(std::shared_ptr<const GroupBackend> k,
                             std::vector<Matrix> pi, double eps)
    : kb_(std::move(k)), pi_(std::move(pi)), eps_(eps) {
  const FiniteGroup& g = kb_->group();
  if (static_cast<int>(pi_.size()) != g.n)
    throw Error("ShapeMismatch", "one implementing unitary per group element");
  n_ = pi_[0].rows();
  std::vector<Matrix> ad;
  for (auto& u : pi_) {
    if (u.rows() != n_ || u.cols() != n_)
      throw Error("ShapeMismatch", "implementing unitaries of equal size");
    if (!approx_eq(u.adjoint() * u, Matrix::identity(n_), eps_))
      throw Error("NotUnitary", "implementing map is not unitary");
    ad.push_back(u.kron(u.conj_entries()));
  }
  // group_average validates that Ad pi is multiplicative on the table (a
  // scalar cocycle on pi cancels here)
  Matrix p = group_average(ad, g.table);
  if (rank(p) != 1)
    throw Error("NotErgodic", "fixed algebra larger than the scalars");
}

Matrix ErgodicAction::beta(int k, const Matrix& f) const {
  return pi_[k] * f * pi_[k].adjoint();
}

SpectralSpace spectral_space_mats(const std::vector<Matrix>& vmats,
                                  const ErgodicAction& act) {
  const FiniteGroup& g = act.group();
  int d = vmats[0].rows(), n = act.n();
  std::vector<Matrix> ops;
  for (int k = 0; k < g.n; ++k)
    ops.push_back(vmats[k].kron(act.unitary(k)).kron(
        act.unitary(k).conj_entries()));
  SpectralSpace sp;
  sp.dim_v = d;
  sp.n = n;
  std::vector<Matrix> stacked;
  for (auto& x : fixed_space(ops, g.table)) stacked.push_back(unvec(x, d * n, n));
  // orthonormal for the module form <S,T> = (1/n) Tr S^* T, which is the
  // scalar of S^* T (ergodicity makes S^* T a multiple of the identity)
  sp.basis = orthonormalize(stacked, [n](const Matrix& a, const Matrix& b) {
    return a.dot(b) / Scalar(n);
  });
  return sp;
}

Eigenmatrix eigenmatrix_mats(const std::vector<Matrix>& vmats,
                             const ErgodicAction& act) {
  Eigenmatrix em;
  em.space = spectral_space_mats(vmats, act);
  int dn = em.space.dim_v * em.space.n;
  if (em.space.basis.empty()) {
    em.Z = Matrix(dn, 0);
    em.E = Matrix(dn, dn);
    return em;
  }
  em.Z = em.space.basis[0];
  for (size_t k = 1; k < em.space.basis.size(); ++k)
    em.Z = em.Z.hstack(em.space.basis[k]);
  em.E = em.Z * em.Z.adjoint();
  return em;
}

namespace {
std::vector<Matrix> object_mats(const ObjectExpr& v, const ErgodicAction& act) {
  std::vector<Matrix> out;
  for (int k = 0; k < act.group().n; ++k)
    out.push_back(act.backend()->object_mat(v, k));
  return out;
}
}  // namespace

SpectralSpace spectral_space(const ObjectExpr& v, const ErgodicAction& act) {
  return spectral_space_mats(object_mats(v, act), act);
}

Eigenmatrix eigenmatrix(const ObjectExpr& v, const ErgodicAction& act) {
  return eigenmatrix_mats(object_mats(v, act), act);
}

Matrix apply_eta(const FullStructure& s, const Matrix& f) {
  Matrix out(s.E.rows(), s.E.cols());
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b)
      if (!f.at(a, b).is_zero(0)) out = out + s.eta[a * s.n + b] * f.at(a, b);
  return out;
}

FullStructure canonical_full_bimodule(const ObjectExpr& v,
                                      const ErgodicAction& act) {
  Eigenmatrix em = eigenmatrix(v, act);
  if (em.space.basis.empty())
    throw Error("EmptySpectrum", "no spectral subspace for " + v.str());
  FullStructure s;
  s.dim_v = em.space.dim_v;
  s.n = act.n();
  s.Z = em.Z;
  s.E = em.E;
  int m = em.space.mult();
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b)
      s.eta.push_back(em.Z * Matrix::identity(m).kron(matrix_unit(s.n, a, b)) *
                      em.Z.adjoint());
  return s;
}

StructureReport verify_full_structure(const FullStructure& s,
                                      const std::vector<Matrix>& vmats,
                                      const ErgodicAction& act) {
  StructureReport r;
  const FiniteGroup& g = act.group();
  int n = s.n;
  double eps = act.eps();
  auto note = [&r](const Matrix& diff) {
    r.residual = std::max(r.residual, diff.norm_inf());
  };
  Matrix ev = s.Z * s.Z.adjoint();

  Matrix d1 = s.E * s.E - s.E, d2 = s.E.adjoint() - s.E;
  note(d1);
  note(d2);
  r.projection = d1.is_zero(eps) && d2.is_zero(eps);

  Matrix d3 = s.E * ev - ev;
  note(d3);
  r.dominates = d3.is_zero(eps);

  r.covariant_e = true;
  for (int k = 0; k < g.n; ++k) {
    Matrix u = vmats[k].kron(act.unitary(k));
    Matrix d = u * s.E * u.adjoint() - s.E;
    note(d);
    r.covariant_e = r.covariant_e && d.is_zero(eps);
  }

  r.covariant_eta = true;
  for (int k = 0; k < g.n; ++k) {
    Matrix u = vmats[k].kron(act.unitary(k));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Matrix d = apply_eta(s, act.beta(k, matrix_unit(n, a, b))) -
                   u * s.eta[a * n + b] * u.adjoint();
        note(d);
        r.covariant_eta = r.covariant_eta && d.is_zero(eps);
      }
  }

  r.module_condition = true;
  int m = s.Z.cols() / std::max(n, 1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Matrix d = s.eta[a * n + b] * s.Z -
                 s.Z * Matrix::identity(m).kron(matrix_unit(n, a, b));
      note(d);
      r.module_condition = r.module_condition && d.is_zero(eps);
    }

  r.star_hom = true;
  Matrix unit_sum(s.E.rows(), s.E.cols());
  for (int a = 0; a < n; ++a) unit_sum = unit_sum + s.eta[a * n + a];
  Matrix du = unit_sum - s.E;
  note(du);
  r.star_hom = du.is_zero(eps);
  for (int a = 0; a < n && r.star_hom; ++a)
    for (int b = 0; b < n; ++b) {
      Matrix ds = s.eta[a * n + b].adjoint() - s.eta[b * n + a];
      note(ds);
      r.star_hom = r.star_hom && ds.is_zero(eps);
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          Matrix prod = s.eta[a * n + b] * s.eta[c * n + d];
          if (b == c) prod = prod - s.eta[a * n + d];
          note(prod);
          r.star_hom = r.star_hom && prod.is_zero(eps);
        }
    }
  return r;
}

StructureReport verify_full_structure(const FullStructure& s,
                                      const ObjectExpr& v,
                                      const ErgodicAction& act) {
  return verify_full_structure(s, object_mats(v, act), act);
}

std::vector<Matrix> module_intertwiners(const std::vector<Matrix>& vmats,
                                        const std::vector<Matrix>& zmats,
                                        const ErgodicAction& act) {
  const FiniteGroup& g = act.group();
  int dv = vmats[0].rows(), dz = zmats[0].rows(), n = act.n();
  std::vector<Matrix> ops;
  for (int k = 0; k < g.n; ++k) {
    Matrix a = vmats[k].kron(act.unitary(k));
    Matrix b = zmats[k].kron(act.unitary(k));
    ops.push_back(a.kron(b.conj_entries()));
  }
  std::vector<Matrix> out;
  for (auto& x : fixed_space(ops, g.table))
    out.push_back(unvec(x, dv * n, dz * n));
  return out;
}

namespace {

// enumerate multisets of irreducible labels with prescribed total dimension
void multisets_of_dim(const std::vector<std::pair<std::string, int>>& irr,
                      size_t from, int remaining,
                      std::vector<std::string>& cur,
                      std::vector<std::vector<std::string>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (size_t i = from; i < irr.size(); ++i)
    if (irr[i].second <= remaining) {
      cur.push_back(irr[i].first);
      multisets_of_dim(irr, i, remaining - irr[i].second, cur, out);
      cur.pop_back();
    }
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return m;
}

// inverse square root of a positive invertible matrix (Denman-Beavers,
// floating)
Matrix inv_sqrt(const Matrix& g0) {
  int n = g0.rows();
  Matrix y(n, n), z = Matrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) y.at(i, j) = Scalar(g0.at(i, j).to_complex());
  for (int it = 0; it < 60; ++it) {
    Matrix yn = (y + inverse(z)) * Scalar(0.5);
    Matrix zn = (z + inverse(y)) * Scalar(0.5);
    if (approx_eq(yn, y, 1e-14) && approx_eq(zn, z, 1e-14)) break;
    y = yn;
    z = zn;
  }
  return z;
}

}  // namespace

ClassifyReport classify_pairs(const ObjectExpr& v, const ErgodicAction& act,
                              int search_bound) {
  ClassifyReport rep;
  auto vmats = object_mats(v, act);
  Eigenmatrix em = eigenmatrix_mats(vmats, act);
  int d = em.space.dim_v, n = act.n();
  rep.dim_v = d;
  rep.mult = em.space.mult();
  rep.full_multiplicity = rep.mult == d;
  if (rep.full_multiplicity) return rep;  // unique structure, empty pair

  std::vector<std::pair<std::string, int>> irr;
  for (auto& l : act.backend()->irreducible_labels())
    irr.emplace_back(l, act.backend()->rep(l).dim);
  std::vector<std::vector<std::string>> zs;
  std::vector<std::string> cur;
  multisets_of_dim(irr, 0, d - rep.mult, cur, zs);

  for (auto& labels : zs) {
    PairClass cls;
    cls.z_labels = labels;
    int dz = 0;
    std::vector<Matrix> zmats(act.group().n, Matrix(0, 0));
    for (auto& l : labels) {
      const Rep& r = act.backend()->rep(l);
      dz += r.dim;
      for (int k = 0; k < act.group().n; ++k)
        zmats[k] = block_diag(zmats[k], r.mats[k]);
    }
    auto basis = module_intertwiners(vmats, zmats, act);
    // impose W^* Z_v = 0 (equivalently Z_v^* W = 0, linear in W)
    std::vector<Matrix> constrained;
    if (em.Z.cols() == 0) {
      constrained = basis;
    } else if (!basis.empty()) {
      Matrix sys(em.Z.cols() * dz * n, static_cast<int>(basis.size()));
      for (size_t k = 0; k < basis.size(); ++k) {
        Matrix zw = vec(em.Z.adjoint() * basis[k]);
        for (int i = 0; i < zw.rows(); ++i)
          sys.at(i, static_cast<int>(k)) = zw.at(i, 0);
      }
      for (auto& coeff : kernel(sys)) {
        Matrix w(d * n, dz * n);
        for (size_t k = 0; k < basis.size(); ++k)
          w = w + basis[k] * coeff.at(static_cast<int>(k), 0);
        constrained.push_back(w);
      }
    }
    cls.hom_dim = static_cast<int>(constrained.size());
    if (cls.hom_dim > search_bound) {
      rep.exhaustive = false;
      rep.classes.push_back(cls);
      continue;
    }
    // search for an isometry: a generic combination, polar-corrected
    for (int attempt = 0; attempt < 4 && !cls.exists && cls.hom_dim > 0;
         ++attempt) {
      Matrix t(d * n, dz * n);
      for (size_t k = 0; k < constrained.size(); ++k)
        t = t + constrained[k] *
                    (Scalar(1 + attempt * static_cast<int>(k)) +
                     Scalar(Exact::i()) * Scalar(static_cast<int>(k) % 3));
      Matrix gram = t.adjoint() * t;
      Scalar lead = gram.at(0, 0);
      if (approx_eq(gram, Matrix::identity(dz * n) * lead, act.eps())) {
        if (lead.abs() < act.eps()) continue;
        cls.W = t * (Scalar(1) / lead.sqrt_nonneg());
        cls.exists = true;
      } else {
        if (rank(gram) < gram.rows()) continue;
        Matrix w = t * inv_sqrt(gram);
        if (approx_eq(w.adjoint() * w, Matrix::identity(dz * n), 1e-9)) {
          cls.W = w;
          cls.exists = true;
        }
      }
    }
    if (cls.exists) {
      auto selfz = module_intertwiners(zmats, zmats, act);
      cls.param_dim =
          std::max(0, cls.hom_dim - static_cast<int>(selfz.size()));
    }
    rep.classes.push_back(cls);
  }
  return rep;
}

InducedSystem::InducedSystem(std::shared_ptr<const GroupBackend> g,
                             const Subgroup& k, const ErgodicAction& act)
    : gb_(std::move(g)), sub_(k), act_(act) {
  const FiniteGroup& big = gb_->group();
  const FiniteGroup& kk = sub_.group;
  if (kk.n != act_.group().n || kk.table != act_.group().table)
    throw Error("ShapeMismatch", "action group differs from the subgroup");
  for (int a = 0; a < kk.n; ++a) {
    if (sub_.embed[a] < 0 || sub_.embed[a] >= big.n)
      throw Error("NotASubgroup", "embedding out of range");
    for (int b = 0; b < kk.n; ++b)
      if (sub_.embed[kk.mul(a, b)] != big.mul(sub_.embed[a], sub_.embed[b]))
        throw Error("NotASubgroup", "embedding not a homomorphism");
  }
  // right cosets Kg, identity first
  coset_.assign(big.n, -1);
  kpart_.assign(big.n, 0);
  for (int seed = 0; seed < big.n; ++seed) {
    int rep = seed == 0 ? big.id : seed;
    if (coset_[rep] != -1) continue;
    int c = static_cast<int>(reps_.size());
    reps_.push_back(rep);
    for (int a = 0; a < kk.n; ++a) {
      int gel = big.mul(sub_.embed[a], rep);
      if (coset_[gel] == -1) {
        coset_[gel] = c;
        kpart_[gel] = a;
      }
    }
  }
}

Matrix InducedSystem::value(const std::vector<Matrix>& f, int g) const {
  return act_.beta(kpart_[g], f[coset_[g]]);
}

std::vector<Matrix> InducedSystem::rho(int g,
                                       const std::vector<Matrix>& f) const {
  std::vector<Matrix> out(reps_.size());
  for (size_t c = 0; c < reps_.size(); ++c)
    out[c] = value(f, gb_->group().mul(reps_[c], g));
  return out;
}

std::vector<Matrix> InducedSystem::restricted(const ObjectExpr& v) const {
  std::vector<Matrix> out;
  for (int a = 0; a < sub_.group.n; ++a)
    out.push_back(gb_->object_mat(v, sub_.embed[a]));
  return out;
}

int InducedSystem::induced_mult(const ObjectExpr& v) const {
  const FiniteGroup& big = gb_->group();
  int q = cosets(), d = gb_->dim_of(v), n = act_.n();
  int cell = d * n * n;  // one stacked coset value, flattened
  std::vector<Matrix> ops;
  for (int h = 0; h < big.n; ++h) {
    Matrix op(q * cell, q * cell);
    Matrix vh = gb_->object_mat(v, h);
    for (int c = 0; c < q; ++c) {
      int gel = big.mul(reps_[c], h);
      int cp = coset_[gel], k = kpart_[gel];
      // X_c <- (v(h) (x) pi_k) X_cp pi_k^*
      Matrix blk = vh.kron(act_.unitary(k))
                       .kron(act_.unitary(k).conj_entries());
      for (int i = 0; i < cell; ++i)
        for (int j = 0; j < cell; ++j) op.at(c * cell + i, cp * cell + j) =
            blk.at(i, j);
    }
    ops.push_back(op);
  }
  return rank(group_average(ops, big.table));
}

std::vector<std::vector<Matrix>> InducedSystem::induced_intertwiners(
    const ObjectExpr& v, const ObjectExpr& vp) const {
  const FiniteGroup& big = gb_->group();
  int q = cosets(), dv = gb_->dim_of(v), dw = gb_->dim_of(vp), n = act_.n();
  int cell = dw * n * dv * n;
  std::vector<Matrix> ops;
  for (int h = 0; h < big.n; ++h) {
    Matrix op(q * cell, q * cell);
    Matrix vh = gb_->object_mat(v, h), wh = gb_->object_mat(vp, h);
    for (int c = 0; c < q; ++c) {
      int gel = big.mul(reps_[c], h);
      int cp = coset_[gel], k = kpart_[gel];
      // T_c <- (v'(h) (x) pi_k) T_cp (v(h) (x) pi_k)^*
      Matrix a = wh.kron(act_.unitary(k));
      Matrix b = vh.kron(act_.unitary(k));
      Matrix blk = a.kron(b.conj_entries());
      for (int i = 0; i < cell; ++i)
        for (int j = 0; j < cell; ++j) op.at(c * cell + i, cp * cell + j) =
            blk.at(i, j);
    }
    ops.push_back(op);
  }
  std::vector<std::vector<Matrix>> out;
  for (auto& x : fixed_space(ops, big.table)) {
    std::vector<Matrix> vals(q);
    for (int c = 0; c < q; ++c) {
      Matrix cellv(cell, 1);
      for (int i = 0; i < cell; ++i) cellv.at(i, 0) = x.at(c * cell + i, 0);
      vals[c] = unvec(cellv, dw * n, dv * n);
    }
    out.push_back(std::move(vals));
  }
  return out;
}

InducedSystem induce_action(std::shared_ptr<const GroupBackend> g,
                            const Subgroup& k, const ErgodicAction& act) {
  return InducedSystem(std::move(g), k, act);
}

std::vector<Matrix> induced_eigenmatrix(const InducedSystem& sys,
                                        const ObjectExpr& v) {
  Eigenmatrix em = eigenmatrix_mats(sys.restricted(v), sys.base());
  int n = sys.base().n();
  std::vector<Matrix> out;
  for (int c = 0; c < sys.cosets(); ++c) {
    Matrix vg = sys.big()->object_mat(v, sys.coset_rep(c));
    out.push_back(vg.adjoint().kron(Matrix::identity(n)) * em.Z);
  }
  return out;
}

Matrix evaluate_at_identity(const InducedSystem& sys,
                            const std::vector<Matrix>& t) {
  (void)sys;  // the identity always represents coset 0
  return t[0];
}

std::vector<Matrix> lift_intertwiner(const InducedSystem& sys, const Matrix& a,
                                     const ObjectExpr& v,
                                     const ObjectExpr& vp) {
  int n = sys.base().n();
  std::vector<Matrix> out;
  for (int c = 0; c < sys.cosets(); ++c) {
    int g = sys.coset_rep(c);
    Matrix lv = sys.big()->object_mat(v, g).kron(Matrix::identity(n));
    Matrix lw = sys.big()->object_mat(vp, g).kron(Matrix::identity(n));
    out.push_back(lw.adjoint() * a * lv);
  }
  return out;
}

Su2Report su2_adjoint_report(int r) {
  if (r < 1) throw Error("ConfigError", "adjoint analysis needs r >= 1");
  Su2Report rep;
  rep.r = r;
  for (int j = 0; j <= 2 * r; j += 2) rep.spectrum.push_back(j);
  // v1 is odd, never in the even spectrum, so dim(z) = 2 and z cannot
  // contain the trivial representation: z = v1 is forced
  rep.v1_hom_dim = su2_hom_dim({1, r}, {1, r});
  rep.v1_exists = rep.v1_hom_dim > 0;
  rep.v1_param_dim = rep.v1_hom_dim - su2_hom_dim({1}, {1});
  rep.verdict_v1 = rep.v1_exists
                       ? "full structures exist, classified by the circle"
                       : "no full structure";
  // v2 has multiplicity 1, dim(z) = 2 forces z = v1 again
  rep.v2_hom_dim = su2_hom_dim({1, r}, {2, r});
  rep.v2_nonexistence = rep.v2_hom_dim == 0;
  rep.verdict_v2 = rep.v2_nonexistence
                       ? "no full bimodule structure (empty intertwiner space)"
                       : "candidate structures found";
  return rep;
}

ErgodicAction weyl_pair_action_on(std::shared_ptr<const GroupBackend> kb) {
  const FiniteGroup& g = kb->group();
  if (g.n != 4) throw Error("ConfigError", "Klein four-group expected");
  // pick two generators; every element is e1^a e2^b
  int e1 = g.id == 0 ? 1 : 0;
  int e2 = -1;
  for (int x = 0; x < 4; ++x)
    if (x != g.id && x != e1) {
      e2 = x;
      break;
    }
  Matrix x(2, 2), z(2, 2);
  x.at(0, 1) = Scalar(1);
  x.at(1, 0) = Scalar(1);
  z.at(0, 0) = Scalar(1);
  z.at(1, 1) = Scalar(-1);
  std::vector<Matrix> pi(4, Matrix::identity(2));
  pi[e1] = x;
  pi[e2] = z;
  pi[g.mul(e1, e2)] = x * z;
  return ErgodicAction(std::move(kb), std::move(pi));
}

ErgodicAction weyl_pair_action() {
  return weyl_pair_action_on(builtin_group_backend("Z2xZ2"));
}

}  // namespace tcat
