#include "tcat/induction.hpp"

#include <algorithm>

namespace tcat {

namespace {

Matrix vec(const Matrix& m) {
  Matrix v(m.rows() * m.cols(), 1);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.at(i * m.cols() + j, 0) = m.at(i, j);
  return v;
}

Matrix row_as_col(const Matrix& m, int r) {
  Matrix v(m.cols(), 1);
  for (int j = 0; j < m.cols(); ++j) v.at(j, 0) = m.at(r, j);
  return v;
}

ConjugateSolution unit_solution(const CategoryBackend& c) {
  Arrow one = c.identity(ObjectExpr::unit());
  return {ObjectExpr::unit(), ObjectExpr::unit(), one, one, true};
}

}  // namespace

BimoduleElement add(const BimoduleElement& a, const BimoduleElement& b) {
  if (!(a.seq == b.seq)) throw Error("ShapeMismatch", "add: sequences differ");
  BimoduleElement r = a;
  for (auto& [l, m] : b.comp) {
    auto it = r.comp.find(l);
    if (it == r.comp.end())
      r.comp[l] = m;
    else
      it->second = it->second + m;
  }
  return r;
}

BimoduleElement scale(const BimoduleElement& a, const Scalar& s) {
  BimoduleElement r = a;
  for (auto& [l, m] : r.comp) m = m * s;
  return r;
}

bool is_zero(const BimoduleElement& a, double eps) {
  for (auto& [l, m] : a.comp)
    if (!m.is_zero(eps)) return false;
  return true;
}

bool approx_equal(const BimoduleElement& a, const BimoduleElement& b,
                  double eps) {
  if (!(a.seq == b.seq)) return false;
  return is_zero(add(a, scale(b, Scalar(-1))), eps);
}

InductionContext::InductionContext(QuasitensorFunctor tau,
                                   QuasitensorFunctor mu, double eps)
    : tau_(std::move(tau)), mu_(std::move(mu)), eps_(eps) {
  if (tau_.source.get() != mu_.source.get())
    throw Error("BackendMismatch", "tau and mu must share their source");
  if (tau_.kind != FunctorKind::Strict)
    throw Error("ConfigError", "tau must be a strict tensor functor");
  auto dec = fusion(ObjectExpr::unit());
  if (dec.size() != 1)
    throw Error("ConfigError", "tensor unit does not fuse to a single label");
  trivial_ = dec[0].first;
  SpectralElement e = normalize({}, mu_.target->identity(ObjectExpr::unit()),
                                ObjectExpr::unit(), Matrix::identity(1));
  auto it = e.comp.find(trivial_);
  if (it == e.comp.end() || it->second.rows() != 1 || it->second.cols() != 1)
    throw Error("ConfigError", "trivial slot of the unit is not scalar");
  unit_coeff_ = it->second.at(0, 0);
}

ObjectExpr InductionContext::m_of(const std::vector<ObjectExpr>& seq) const {
  ObjectExpr o;
  for (auto& u : seq) o = o.tensor(mu_.obj(u));
  return o;
}

int InductionContext::tau_dim(const ObjectExpr& u) const {
  {
    std::lock_guard<std::mutex> lk(cache_mtx_);
    auto it = dim_cache_.find(u);
    if (it != dim_cache_.end()) return it->second;
  }
  int d = static_cast<int>(
      tau_.target->hom_basis(ObjectExpr::unit(), tau_.obj(u)).size());
  std::lock_guard<std::mutex> lk(cache_mtx_);
  return dim_cache_[u] = d;
}

const std::vector<Arrow>& InductionContext::slot_basis(
    const std::string& label, const ObjectExpr& m_obj) const {
  std::lock_guard<std::mutex> lk(cache_mtx_);
  auto key = std::make_pair(label, m_obj);
  auto it = slot_cache_.find(key);
  if (it != slot_cache_.end()) return it->second;
  auto basis = mu_.target->hom_basis(
      mu_.obj(mu_.source->label_object(label)), m_obj);
  if (!basis.empty()) {
    Matrix span(basis[0].m.rows() * basis[0].m.cols(),
                static_cast<int>(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j) {
      Matrix v = vec(basis[j].m);
      for (int i = 0; i < v.rows(); ++i)
        span.at(i, static_cast<int>(j)) = v.at(i, 0);
    }
    span_cache_[key] = span;
  }
  return slot_cache_[key] = std::move(basis);
}

Matrix InductionContext::slot_coeffs(const std::string& label,
                                     const ObjectExpr& m_obj,
                                     const Arrow& m) const {
  slot_basis(label, m_obj);  // fill caches
  std::lock_guard<std::mutex> lk(cache_mtx_);
  return solve_in_span(span_cache_.at({label, m_obj}), vec(m.m));
}

const ConjugateSolution& InductionContext::solution(
    const ObjectExpr& u) const {
  std::lock_guard<std::mutex> lk(cache_mtx_);
  auto it = sol_cache_.find(u);
  if (it != sol_cache_.end()) return it->second;
  return sol_cache_[u] = standard_solution(*mu_.source, u);
}

ConjugateSolution InductionContext::solution_of(
    const ObjectExpr& u, const SolutionOverrides& ov) const {
  if (ov.empty()) return solution(u);
  const CategoryBackend& c = *mu_.source;
  ConjugateSolution s = unit_solution(c);
  for (auto& l : u.word) {
    auto it = ov.find(l);
    ConjugateSolution sl = it != ov.end() ? it->second : c.letter_solution(l);
    s = s.obj.is_unit() ? sl : tensor_solution(c, s, sl);
  }
  return s;
}

Matrix InductionContext::j_matrix(const ConjugateSolution& sol) const {
  ConjugateSolution ht = image_solution(tau_, sol);
  const CategoryBackend& h = *tau_.target;
  int n = tau_dim(sol.obj), nc = tau_dim(sol.conj);
  Matrix j(nc, n);
  for (int i = 0; i < n; ++i) {
    Matrix e(n, 1);
    e.at(i, 0) = Scalar(1);
    Arrow b = bullet(h, Arrow{ObjectExpr::unit(), ht.obj, e}, ht,
                     unit_solution(h));
    for (int r = 0; r < nc; ++r) j.at(r, i) = b.m.at(r, 0);
  }
  return j;
}

const std::vector<std::pair<std::string, Arrow>>& InductionContext::fusion(
    const ObjectExpr& o) const {
  {
    std::lock_guard<std::mutex> lk(cache_mtx_);
    auto it = fusion_cache_.find(o);
    if (it != fusion_cache_.end()) return it->second;
  }
  auto f = mu_.source->fusion(o);
  std::lock_guard<std::mutex> lk(cache_mtx_);
  return fusion_cache_[o] = std::move(f);
}

BimoduleElement InductionContext::zero(
    const std::vector<ObjectExpr>& seq) const {
  return {seq, m_of(seq), {}};
}

BimoduleElement InductionContext::normalize(
    const std::vector<ObjectExpr>& seq, const Arrow& m, const ObjectExpr& v,
    const Matrix& psi) const {
  if (psi.cols() != 1 || psi.rows() != tau_dim(v))
    throw Error("ShapeMismatch", "normalize: vector has wrong length");
  BimoduleElement out = zero(seq);
  if (!(m.src == mu_.obj(v)) || !(m.dst == out.m_obj))
    throw Error("ShapeMismatch", "normalize: arrow ends do not match");
  for (auto& [w, iso] : fusion(v)) {
    const auto& basis = slot_basis(w, out.m_obj);
    if (basis.empty()) continue;
    Arrow mw = mu_.target->compose(m, mu_.arr(iso));
    Matrix c = slot_coeffs(w, out.m_obj, mw);
    Matrix pw = tau_.arr(iso).m.adjoint() * psi;
    Matrix contrib = c * pw.transpose();
    auto it = out.comp.find(w);
    if (it == out.comp.end())
      out.comp[w] = contrib;
    else
      it->second = it->second + contrib;
  }
  for (auto it = out.comp.begin(); it != out.comp.end();)
    it = it->second.is_zero(eps_) ? out.comp.erase(it) : std::next(it);
  return out;
}

SpectralElement InductionContext::unit() const {
  SpectralElement e = zero({});
  Matrix one(1, 1);
  one.at(0, 0) = unit_coeff_;
  e.comp[trivial_] = one;
  return e;
}

BimoduleElement InductionContext::x_basis(const ObjectExpr& u, int i) const {
  Matrix e(tau_dim(u), 1);
  e.at(i, 0) = Scalar(1);
  return normalize({u}, mu_.target->identity(mu_.obj(u)), u, e);
}

SpectralElement InductionContext::coefficient_element(const std::string& label,
                                                      int r, int i) const {
  SpectralElement e = zero({});
  const auto& basis = slot_basis(label, e.m_obj);
  Matrix m(static_cast<int>(basis.size()),
           tau_dim(mu_.source->label_object(label)));
  m.at(r, i) = Scalar(1);
  e.comp[label] = m;
  return e;
}

BimoduleElement InductionContext::mul(const BimoduleElement& a,
                                      const BimoduleElement& b) const {
  std::vector<ObjectExpr> seq = a.seq;
  seq.insert(seq.end(), b.seq.begin(), b.seq.end());
  BimoduleElement out = zero(seq);
  for (auto& [w, ca] : a.comp) {
    ObjectExpr wo = mu_.source->label_object(w);
    const auto& ba = slot_basis(w, a.m_obj);
    for (auto& [v, cb] : b.comp) {
      ObjectExpr vo = mu_.source->label_object(v);
      const auto& bb = slot_basis(v, b.m_obj);
      Arrow mu_star = mu_.target->adjoint(mu_.mu(wo, vo));
      for (int k = 0; k < ca.rows(); ++k) {
        Matrix rk = row_as_col(ca, k);
        if (rk.is_zero(0.0)) continue;
        for (int l = 0; l < cb.rows(); ++l) {
          Matrix rl = row_as_col(cb, l);
          if (rl.is_zero(0.0)) continue;
          Arrow m = mu_.target->compose(mu_.target->tensor(ba[k], bb[l]),
                                        mu_star);
          out = add(out, normalize(seq, m, wo.tensor(vo), rk.kron(rl)));
        }
      }
    }
  }
  return out;
}

BimoduleElement InductionContext::dot(const BimoduleElement& a,
                                      const BimoduleElement& b) const {
  BimoduleElement z = mul(a, b);
  ObjectExpr uu;
  for (auto& u : z.seq) uu = uu.tensor(u);
  if (z.seq.size() <= 1) return z;
  return lambda_map(multi_mu(mu_, z.seq), z, {uu});
}

BimoduleElement InductionContext::lambda_map(
    const Arrow& y, const BimoduleElement& a,
    const std::vector<ObjectExpr>& new_seq) const {
  BimoduleElement out = zero(new_seq);
  if (!(y.src == a.m_obj) || !(y.dst == out.m_obj))
    throw Error("ShapeMismatch", "lambda_map: arrow ends do not match");
  for (auto& [v, c] : a.comp) {
    const auto& basis = slot_basis(v, a.m_obj);
    const auto& nb = slot_basis(v, out.m_obj);
    if (nb.empty()) continue;
    Matrix acc(static_cast<int>(nb.size()), c.cols());
    for (int k = 0; k < c.rows(); ++k) {
      Arrow ym = mu_.target->compose(y, basis[k]);
      Matrix coeff = slot_coeffs(v, out.m_obj, ym);
      acc = acc + coeff * row_as_col(c, k).transpose();
    }
    if (!acc.is_zero(eps_)) out.comp[v] = acc;
  }
  return out;
}

ConjugateSolution InductionContext::m_solution(
    const std::vector<ObjectExpr>& seq, const SolutionOverrides& ov) const {
  const CategoryBackend& t = *mu_.target;
  ConjugateSolution s = unit_solution(t);
  for (auto& u : seq) {
    ConjugateSolution si = image_solution(mu_, solution_of(u, ov));
    s = s.obj.is_unit() ? si : tensor_solution(t, s, si);
  }
  return s;
}

BimoduleElement InductionContext::star(const BimoduleElement& a,
                                       const SolutionOverrides& ov) const {
  ConjugateSolution sm = m_solution(a.seq, ov);
  std::vector<ObjectExpr> cseq;
  for (auto it = a.seq.rbegin(); it != a.seq.rend(); ++it)
    cseq.push_back(solution_of(*it, ov).conj);
  BimoduleElement out = zero(cseq);
  for (auto& [v, c] : a.comp) {
    ObjectExpr vo = mu_.source->label_object(v);
    ConjugateSolution sv = solution_of(vo, ov);
    ConjugateSolution svm = image_solution(mu_, sv);
    Matrix j = j_matrix(sv);
    const auto& basis = slot_basis(v, a.m_obj);
    for (int k = 0; k < c.rows(); ++k) {
      Matrix rk = row_as_col(c, k);
      if (rk.is_zero(0.0)) continue;
      Arrow mb = bullet(*mu_.target, basis[k], sm, svm);
      out = add(out, normalize(cseq, mb, sv.conj, j * rk.conj_entries()));
    }
  }
  return out;
}

SpectralElement InductionContext::inner_product(const BimoduleElement& a,
                                                const BimoduleElement& b)
    const {
  if (!(a.seq == b.seq))
    throw Error("ShapeMismatch", "inner_product: sequences differ");
  const CategoryBackend& t = *mu_.target;
  SpectralElement out = zero({});
  for (auto& [v, ca] : a.comp) {
    ObjectExpr vo = mu_.source->label_object(v);
    ConjugateSolution sv = solution(vo);
    ConjugateSolution svm = image_solution(mu_, sv);
    Matrix j = j_matrix(sv);
    Arrow rstar = t.adjoint(svm.R);
    Arrow one_cb = t.identity(svm.conj);
    const auto& ba = slot_basis(v, a.m_obj);
    for (auto& [w, cb] : b.comp) {
      ObjectExpr wo = mu_.source->label_object(w);
      const auto& bb = slot_basis(w, b.m_obj);
      Arrow mu_star = t.adjoint(mu_.mu(sv.conj, wo));
      for (int k = 0; k < ca.rows(); ++k) {
        Matrix rk = row_as_col(ca, k);
        if (rk.is_zero(0.0)) continue;
        for (int l = 0; l < cb.rows(); ++l) {
          Matrix rl = row_as_col(cb, l);
          if (rl.is_zero(0.0)) continue;
          Arrow pair = t.compose(t.adjoint(ba[k]), bb[l]);
          Arrow m = t.compose_many({rstar, t.tensor(one_cb, pair), mu_star});
          out = add(out, normalize({}, m, sv.conj.tensor(wo),
                                   (j * rk.conj_entries()).kron(rl)));
        }
      }
    }
  }
  return out;
}

Scalar InductionContext::invariant_state(const SpectralElement& c) const {
  if (!c.seq.empty())
    throw Error("ShapeMismatch", "invariant_state expects a spectral element");
  auto it = c.comp.find(trivial_);
  if (it == c.comp.end()) return Scalar(0);
  return it->second.at(0, 0) / unit_coeff_;
}

std::vector<SpectralElement> InductionContext::swan(
    const ObjectExpr& u, const BimoduleElement& xi) const {
  std::vector<SpectralElement> cs;
  for (int i = 0; i < tau_dim(u); ++i)
    cs.push_back(inner_product(x_basis(u, i), xi));
  return cs;
}

BimoduleElement InductionContext::swan_adjoint(
    const ObjectExpr& u, const std::vector<SpectralElement>& cs) const {
  BimoduleElement acc = zero({u});
  for (size_t i = 0; i < cs.size(); ++i)
    acc = add(acc, mul(x_basis(u, static_cast<int>(i)), cs[i]));
  return acc;
}

std::vector<SpectralElement> InductionContext::range_projection(
    const ObjectExpr& u, const std::vector<SpectralElement>& cs) const {
  return swan(u, swan_adjoint(u, cs));
}

bool InductionContext::free_module_condition(const ObjectExpr& u) const {
  const ConjugateSolution& s = solution(u);
  Arrow mt = mu_.mu(s.conj, u);
  Arrow r = mu_.arr(s.R);
  Arrow lhs = mu_.target->compose(mt, mu_.target->compose(
                                          mu_.target->adjoint(mt), r));
  return CategoryBackend::approx_equal(lhs, r, eps_);
}

SpectralElement InductionContext::left_action_entry(const ObjectExpr& u,
                                                    const SpectralElement& c,
                                                    int i, int j) const {
  const CategoryBackend& t = *mu_.target;
  const ConjugateSolution& su = solution(u);
  ConjugateSolution sum = image_solution(mu_, su);
  Matrix ju = j_matrix(su);
  Arrow rstar = t.adjoint(sum.R);
  Matrix ei(tau_dim(u), 1), ej(tau_dim(u), 1);
  ei.at(i, 0) = Scalar(1);
  ej.at(j, 0) = Scalar(1);
  SpectralElement out = zero({});
  for (auto& [v, cv] : c.comp) {
    ObjectExpr vo = mu_.source->label_object(v);
    const auto& basis = slot_basis(v, ObjectExpr::unit());
    Arrow mu_star = t.adjoint(multi_mu(mu_, {su.conj, vo, u}));
    for (int r = 0; r < cv.rows(); ++r) {
      Matrix rv = row_as_col(cv, r);
      if (rv.is_zero(0.0)) continue;
      Arrow mid = t.tensor(t.tensor(t.identity(sum.conj), basis[r]),
                           t.identity(sum.obj));
      Arrow m = t.compose_many({rstar, mid, mu_star});
      out = add(out, normalize({}, m, su.conj.tensor(vo).tensor(u),
                               (ju * ei).kron(rv.kron(ej))));
    }
  }
  return out;
}

std::vector<Arrow> InductionContext::ind_hom(
    const std::vector<ObjectExpr>& useq,
    const std::vector<ObjectExpr>& vseq) const {
  const CategoryBackend& t = *mu_.target;
  ConjugateSolution sm = m_solution(useq, {});
  ObjectExpr mv = m_of(vseq);
  ObjectExpr mw = mv.tensor(sm.conj);
  Arrow rstar = t.adjoint(sm.R);
  Arrow idv = t.identity(mv), idu = t.identity(sm.obj);
  std::vector<Arrow> out;
  for (auto& x : t.hom_basis(ObjectExpr::unit(), mw))
    out.push_back(t.compose(t.tensor(idv, rstar), t.tensor(x, idu)));
  return out;
}

bool InductionContext::frobenius_pairing(
    const std::string& label, const std::vector<ObjectExpr>& seq) const {
  size_t lhs = slot_basis(label, m_of(seq)).size();
  ObjectExpr vo = mu_.source->label_object(label);
  std::vector<ObjectExpr> adj = seq;
  adj.push_back(solution(vo).conj);
  size_t rhs = slot_basis(trivial_, m_of(adj)).size();
  return lhs == rhs;
}

bool InductionContext::naturality_check(
    const Arrow& a, const std::vector<BimoduleElement>& corpus) const {
  Matrix ta = tau_.arr(a).m;
  Arrow ma = mu_.arr(a);
  for (auto& xi : corpus) {
    if (!(xi.seq == std::vector<ObjectExpr>{a.src}))
      throw Error("ShapeMismatch", "naturality_check corpus");
    std::vector<SpectralElement> cs = swan(a.src, xi);
    std::vector<SpectralElement> rhs =
        swan(a.dst, lambda_map(ma, xi, {a.dst}));
    for (int jj = 0; jj < tau_dim(a.dst); ++jj) {
      SpectralElement lhs = zero({});
      for (int ii = 0; ii < tau_dim(a.src); ++ii)
        lhs = add(lhs, scale(cs[ii], ta.at(jj, ii)));
      if (!approx_equal(lhs, rhs[jj], eps_)) return false;
    }
  }
  return true;
}

}  // namespace tcat
