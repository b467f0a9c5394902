#include "tcat/tl.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tcat {

PlanarDiagram PlanarDiagram::ident(int n) {
  PlanarDiagram d;
  d.nb = d.nt = n;
  d.partner.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    d.partner[i] = n + i;
    d.partner[n + i] = i;
  }
  return d;
}

PlanarDiagram PlanarDiagram::cup() {
  PlanarDiagram d;
  d.nb = 0;
  d.nt = 2;
  d.partner = {1, 0};
  return d;
}

PlanarDiagram PlanarDiagram::flip() const {
  PlanarDiagram d;
  d.nb = nt;
  d.nt = nb;
  auto re = [&](int x) { return x < nb ? x + nt : x - nb; };
  d.partner.resize(nb + nt);
  for (int i = 0; i < nb + nt; ++i) d.partner[re(i)] = re(partner[i]);
  return d;
}

PlanarDiagram PlanarDiagram::tensor(const PlanarDiagram& o) const {
  PlanarDiagram d;
  d.nb = nb + o.nb;
  d.nt = nt + o.nt;
  d.partner.resize(d.nb + d.nt);
  auto g1 = [&](int x) { return x < nb ? x : x + o.nb; };
  auto g2 = [&](int x) { return x < o.nb ? x + nb : x + nb + nt; };
  for (int i = 0; i < nb + nt; ++i) d.partner[g1(i)] = g1(partner[i]);
  for (int i = 0; i < o.nb + o.nt; ++i) d.partner[g2(i)] = g2(o.partner[i]);
  return d;
}

int PlanarDiagram::cups() const {
  int c = 0;
  for (int i = nb; i < nb + nt; ++i)
    if (partner[i] >= nb && partner[i] > i) ++c;
  return c;
}

int PlanarDiagram::caps() const {
  int c = 0;
  for (int i = 0; i < nb; ++i)
    if (partner[i] < nb && partner[i] > i) ++c;
  return c;
}

std::string PlanarDiagram::str() const {
  std::string s = "(" + std::to_string(nb) + "->" + std::to_string(nt) + ":";
  for (int i = 0; i < nb + nt; ++i)
    if (partner[i] > i)
      s += " " + std::to_string(i) + "-" + std::to_string(partner[i]);
  return s + ")";
}

std::pair<PlanarDiagram, int> stack_diagrams(const PlanarDiagram& a,
                                             const PlanarDiagram& b) {
  if (a.nb != b.nt) throw Error("ShapeMismatch", "stack_diagrams");
  // nodes: b's bottom [0, b.nb), middle [b.nb, b.nb + a.nb), a's top after
  int mid = a.nb;
  int n = b.nb + mid + a.nt;
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](int x, int y) { parent[find(x)] = find(y); };
  auto bnode = [&](int p) { return p < b.nb ? p : b.nb + (p - b.nb); };
  auto anode = [&](int p) { return p < a.nb ? b.nb + p : b.nb + mid + (p - a.nb); };
  for (int i = 0; i < b.nb + b.nt; ++i)
    if (b.partner[i] > i) join(bnode(i), bnode(b.partner[i]));
  for (int i = 0; i < a.nb + a.nt; ++i)
    if (a.partner[i] > i) join(anode(i), anode(a.partner[i]));
  // boundary points of the result, in result numbering
  PlanarDiagram r;
  r.nb = b.nb;
  r.nt = a.nt;
  r.partner.assign(r.nb + r.nt, -1);
  std::map<int, int> seen;  // root -> first boundary point
  for (int p = 0; p < r.nb + r.nt; ++p) {
    int node = p < r.nb ? p : b.nb + mid + (p - r.nb);
    int root = find(node);
    auto it = seen.find(root);
    if (it == seen.end()) {
      seen[root] = p;
    } else {
      r.partner[p] = it->second;
      r.partner[it->second] = p;
    }
  }
  // closed loops: middle-only components
  int loops = 0;
  std::set<int> boundary_roots;
  for (auto& [root, p] : seen) boundary_roots.insert(root);
  std::set<int> counted;
  for (int j = 0; j < mid; ++j) {
    int root = find(b.nb + j);
    if (!boundary_roots.count(root) && counted.insert(root).second) ++loops;
  }
  return {r, loops};
}

namespace {

// Non-crossing matchings of a segment of circle points; an arc pts[0]-pts[i]
// separates the inside from the outside, so both recurse independently.
std::vector<std::vector<std::pair<int, int>>> match_segment(
    const std::vector<int>& pts, const std::function<bool(int, int)>& ok) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (pts.empty()) {
    out.push_back({});
    return out;
  }
  if (pts.size() % 2) return out;
  for (size_t i = 1; i < pts.size(); i += 2) {
    if (!ok(pts[0], pts[i])) continue;
    std::vector<int> inside(pts.begin() + 1, pts.begin() + i);
    std::vector<int> outside(pts.begin() + i + 1, pts.end());
    auto ins = match_segment(inside, ok);
    if (ins.empty()) continue;
    for (auto& a : ins)
      for (auto& b : match_segment(outside, ok)) {
        std::vector<std::pair<int, int>> m;
        m.push_back({pts[0], pts[i]});
        m.insert(m.end(), a.begin(), a.end());
        m.insert(m.end(), b.begin(), b.end());
        out.push_back(std::move(m));
      }
  }
  return out;
}

}  // namespace

std::vector<PlanarDiagram> noncrossing_diagrams(
    int nb, int nt, const std::vector<std::string>& colors) {
  std::vector<PlanarDiagram> out;
  if ((nb + nt) % 2) return out;
  // circle order: bottom left-to-right, then top right-to-left
  std::vector<int> circ;
  for (int i = 0; i < nb; ++i) circ.push_back(i);
  for (int i = nb + nt - 1; i >= nb; --i) circ.push_back(i);
  auto pair_ok = [&](int p, int q) {
    if (colors.empty()) return true;
    bool row_p = p < nb, row_q = q < nb;
    // same row: opposite letters; across rows: equal letters
    return row_p == row_q ? colors[p] != colors[q] : colors[p] == colors[q];
  };
  for (auto& m : match_segment(circ, pair_ok)) {
    PlanarDiagram d;
    d.nb = nb;
    d.nt = nt;
    d.partner.assign(nb + nt, -1);
    for (auto& [x, y] : m) {
      d.partner[x] = y;
      d.partner[y] = x;
    }
    out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TLBackend::TLBackend(Scalar d, TLVariant variant, int n_max)
    : d_(std::move(d)), variant_(variant), n_max_(n_max) {}

Scalar TLBackend::quantum_int(int n) const {
  Scalar prev(0), cur(1);  // [0], [1]
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    Scalar next = d_ * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

ObjectExpr TLBackend::expand(const ObjectExpr& o) const {
  ObjectExpr e;
  for (auto& l : o.word) {
    if (l == "x" || l == "xb") {
      e.word.push_back(l);
    } else if (l.size() > 1 && l[0] == '#') {
      int k = std::stoi(l.substr(1));
      if (k > n_max_) throw Error("TruncationExceeded", l);
      for (int i = 0; i < k; ++i) e.word.push_back("x");
    } else {
      throw Error("ConfigError", "unknown TL letter " + l);
    }
  }
  if (static_cast<int>(e.word.size()) > 2 * n_max_)
    throw Error("TruncationExceeded", "word longer than 2*N_max");
  return e;
}

std::vector<std::string> TLBackend::colors_of(const ObjectExpr& src,
                                              const ObjectExpr& dst) const {
  if (variant_ != TLVariant::TwoColored) return {};
  std::vector<std::string> c = src.word;
  c.insert(c.end(), dst.word.begin(), dst.word.end());
  return c;
}

const std::vector<PlanarDiagram>& TLBackend::diagram_basis(
    const ObjectExpr& src, const ObjectExpr& dst) const {
  ObjectExpr es = expand(src), ed = expand(dst);
  auto key = std::make_pair(es, ed);
  auto it = basis_cache_.find(key);
  if (it != basis_cache_.end()) return it->second;
  auto basis =
      noncrossing_diagrams(static_cast<int>(es.word.size()),
                           static_cast<int>(ed.word.size()), colors_of(es, ed));
  return basis_cache_[key] = std::move(basis);
}

Arrow TLBackend::from_diagram(const ObjectExpr& src, const ObjectExpr& dst,
                              const PlanarDiagram& d) const {
  const auto& basis = diagram_basis(src, dst);
  auto it = std::lower_bound(basis.begin(), basis.end(), d);
  if (it == basis.end() || !(*it == d))
    throw Error("ShapeMismatch", "diagram not in basis " + d.str());
  Matrix col(static_cast<int>(basis.size()), 1);
  col.at(static_cast<int>(it - basis.begin()), 0) = Scalar(1);
  return {src, dst, col};
}

Scalar TLBackend::stack_coeff(const PlanarDiagram& a, const PlanarDiagram& b,
                              const PlanarDiagram& res, int loops) const {
  Scalar c(1);
  for (int i = 0; i < loops; ++i) c = c * d_;
  if (variant_ == TLVariant::Pseudoreal) {
    int dc = a.cups() + b.cups() - res.cups();
    if ((dc - loops) % 2) c = c * Scalar(-1);
  }
  return c;
}

Arrow TLBackend::identity(const ObjectExpr& o) const {
  Arrow acc{ObjectExpr::unit(), ObjectExpr::unit(), Matrix::identity(1)};
  for (auto& l : o.word) {
    ObjectExpr lo = ObjectExpr::letter(l);
    if (l[0] == '#') {
      Arrow f = jones_wenzl(std::stoi(l.substr(1)));
      acc = tensor(acc, {lo, lo, f.m});
    } else {
      acc = tensor(acc, from_diagram(lo, lo, PlanarDiagram::ident(1)));
    }
  }
  Arrow r = acc;
  r.src = o;
  r.dst = o;
  return r;
}

Arrow TLBackend::compose(const Arrow& a, const Arrow& b) const {
  if (!(a.src == b.dst)) throw Error("ShapeMismatch", "compose");
  const auto& mid_b = diagram_basis(b.src, b.dst);
  const auto& mid_a = diagram_basis(a.src, a.dst);
  const auto& out = diagram_basis(b.src, a.dst);
  Matrix col(static_cast<int>(out.size()), 1);
  for (size_t i = 0; i < mid_a.size(); ++i) {
    if (a.m.at(static_cast<int>(i), 0).is_zero(0.0)) continue;
    for (size_t j = 0; j < mid_b.size(); ++j) {
      if (b.m.at(static_cast<int>(j), 0).is_zero(0.0)) continue;
      auto [res, loops] = stack_diagrams(mid_a[i], mid_b[j]);
      auto it = std::lower_bound(out.begin(), out.end(), res);
      Scalar c = a.m.at(static_cast<int>(i), 0) *
                 b.m.at(static_cast<int>(j), 0) *
                 stack_coeff(mid_a[i], mid_b[j], res, loops);
      col.at(static_cast<int>(it - out.begin()), 0) += c;
    }
  }
  return {b.src, a.dst, col};
}

Arrow TLBackend::tensor(const Arrow& a, const Arrow& b) const {
  const auto& ba = diagram_basis(a.src, a.dst);
  const auto& bb = diagram_basis(b.src, b.dst);
  ObjectExpr src = a.src.tensor(b.src), dst = a.dst.tensor(b.dst);
  const auto& out = diagram_basis(src, dst);
  Matrix col(static_cast<int>(out.size()), 1);
  for (size_t i = 0; i < ba.size(); ++i) {
    if (a.m.at(static_cast<int>(i), 0).is_zero(0.0)) continue;
    for (size_t j = 0; j < bb.size(); ++j) {
      if (b.m.at(static_cast<int>(j), 0).is_zero(0.0)) continue;
      PlanarDiagram t = ba[i].tensor(bb[j]);
      auto it = std::lower_bound(out.begin(), out.end(), t);
      col.at(static_cast<int>(it - out.begin()), 0) +=
          a.m.at(static_cast<int>(i), 0) * b.m.at(static_cast<int>(j), 0);
    }
  }
  return {src, dst, col};
}

Arrow TLBackend::adjoint(const Arrow& a) const {
  const auto& ba = diagram_basis(a.src, a.dst);
  const auto& out = diagram_basis(a.dst, a.src);
  Matrix col(static_cast<int>(out.size()), 1);
  for (size_t i = 0; i < ba.size(); ++i) {
    if (a.m.at(static_cast<int>(i), 0).is_zero(0.0)) continue;
    PlanarDiagram f = ba[i].flip();
    auto it = std::lower_bound(out.begin(), out.end(), f);
    col.at(static_cast<int>(it - out.begin()), 0) +=
        a.m.at(static_cast<int>(i), 0).conj();
  }
  return {a.dst, a.src, col};
}

std::vector<Arrow> TLBackend::hom_basis(const ObjectExpr& src,
                                        const ObjectExpr& dst) const {
  bool labelled = false;
  for (auto& l : src.word) labelled |= l[0] == '#';
  for (auto& l : dst.word) labelled |= l[0] == '#';
  const auto& basis = diagram_basis(src, dst);
  std::vector<Arrow> all;
  for (auto& d : basis) all.push_back(from_diagram(src, dst, d));
  if (!labelled) return all;
  // compress by the label idempotents and keep a maximal independent subset
  Arrow ps = identity(src), pd = identity(dst);
  std::vector<Arrow> span;
  Matrix cols(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
  for (size_t j = 0; j < all.size(); ++j) {
    Arrow c = compose(pd, compose(all[j], ps));
    for (size_t i = 0; i < basis.size(); ++i)
      cols.at(static_cast<int>(i), static_cast<int>(j)) =
          c.m.at(static_cast<int>(i), 0);
    span.push_back(c);
  }
  std::vector<int> piv = rref(cols, epsilon());
  std::vector<Arrow> out;
  for (int p : piv) out.push_back(span[p]);
  return out;
}

std::string TLBackend::conj_letter(const std::string& l) const {
  if (variant_ == TLVariant::TwoColored) {
    if (l == "x") return "xb";
    if (l == "xb") return "x";
  }
  if (l == "x" || l[0] == '#') return l;
  throw Error("ConfigError", "unknown TL letter " + l);
}

std::vector<std::string> TLBackend::irreducible_labels() const {
  if (variant_ == TLVariant::TwoColored)
    throw Error("Unsupported", "two-colored fusion is not implemented");
  std::vector<std::string> out;
  for (int k = 0; k <= n_max_; ++k) out.push_back("#" + std::to_string(k));
  return out;
}

Arrow TLBackend::jones_wenzl(int n) const {
  if (variant_ == TLVariant::TwoColored)
    throw Error("Unsupported", "two-colored Jones-Wenzl is not implemented");
  if (n > n_max_) throw Error("TruncationExceeded", "jones_wenzl");
  auto it = jw_cache_.find(n);
  if (it != jw_cache_.end()) return it->second;
  ObjectExpr x = ObjectExpr::letter("x");
  Arrow f{ObjectExpr::unit(), ObjectExpr::unit(), Matrix::identity(1)};
  if (n > 0) f = from_diagram(x, x, PlanarDiagram::ident(1));
  for (int m = 1; m < n; ++m) {
    // f_{m+1} = f_m⊗1 - ([m]/[m+1]) (f_m⊗1) e_m (f_m⊗1)
    Scalar qm = quantum_int(m), qm1 = quantum_int(m + 1);
    if (qm1.is_zero(epsilon()))
      throw Error("SingularQuantumInteger", "[" + std::to_string(m + 1) + "]");
    Arrow f1 = tensor(f, from_diagram(x, x, PlanarDiagram::ident(1)));
    ObjectExpr w = f1.src;
    // e_m on m+1 strands: identity on the first m-1, cap-then-cup on the last
    // two (partner pairs 0-1 bottom, 2-3 top within the local block)
    PlanarDiagram capcup;
    capcup.nb = 2;
    capcup.nt = 2;
    capcup.partner = {1, 0, 3, 2};
    PlanarDiagram em = PlanarDiagram::ident(m - 1).tensor(capcup);
    Arrow earr = from_diagram(w, w, em);
    Arrow t = compose(f1, compose(earr, f1));
    f = add(f1, scale(t, Scalar(0) - qm / qm1));
  }
  jw_cache_[n] = f;
  return f;
}

std::vector<Arrow> TLBackend::label_isometries(int k, const ObjectExpr& dst,
                                               const Arrow& compress) const {
  ObjectExpr ko = ObjectExpr::letter("#" + std::to_string(k));
  ObjectExpr kw = expand(ko);
  Arrow fk = jones_wenzl(k);
  const auto& cands = diagram_basis(kw, dst);
  std::vector<Arrow> vs;
  for (auto& d : cands) {
    Arrow v = compose(compress, compose(from_diagram(kw, dst, d), fk));
    vs.push_back({ko, dst, v.m});
  }
  // gram: w*∘v = λ·f_k in hom(#k,#k); read λ off the identity diagram
  const auto& kb = diagram_basis(kw, kw);
  PlanarDiagram idk = PlanarDiagram::ident(k);
  int id_idx = static_cast<int>(
      std::lower_bound(kb.begin(), kb.end(), idk) - kb.begin());
  std::vector<Matrix> cols;
  for (auto& v : vs) cols.push_back(v.m);
  auto gram = [&](const Matrix& a, const Matrix& b) {
    Arrow aa{kw, expand(dst), a}, bb{kw, expand(dst), b};
    Arrow g = compose(adjoint(aa), bb);
    return g.m.at(id_idx, 0);
  };
  std::vector<Arrow> out;
  for (auto& w : orthonormalize(cols, gram)) out.push_back({ko, dst, w});
  return out;
}

std::vector<std::pair<std::string, Arrow>> TLBackend::fusion(
    const ObjectExpr& o) const {
  if (variant_ == TLVariant::TwoColored)
    throw Error("Unsupported", "two-colored fusion is not implemented");
  int m = static_cast<int>(expand(o).word.size());
  Arrow compress = identity(o);
  std::vector<std::pair<std::string, Arrow>> out;
  for (int k = m % 2; k <= m; k += 2)
    for (auto& w : label_isometries(k, o, compress))
      out.push_back({"#" + std::to_string(k), w});
  return out;
}

std::vector<std::pair<std::string, Arrow>> TLBackend::fusion_tl(int m,
                                                                int n) const {
  ObjectExpr o = ObjectExpr::letter("#" + std::to_string(m))
                     .tensor(ObjectExpr::letter("#" + std::to_string(n)));
  return fusion(o);
}

ConjugateSolution TLBackend::letter_solution(const std::string& l) const {
  ObjectExpr u = ObjectExpr::letter(l);
  if (l.size() > 1 && l[0] == '#' && variant_ != TLVariant::TwoColored) {
    // the label is self-conjugate: compress the word solution by f_k ⊗ f_k
    // (legitimate because the Jones-Wenzl projector is rotation invariant)
    ConjugateSolution sw = standard_solution(*this, expand(u));
    Arrow ff = identity(u.tensor(u));
    Arrow R = sw.R, Rb = sw.Rbar;
    R.dst = u.tensor(u);
    Rb.dst = u.tensor(u);
    return {u, u, compose(ff, R), compose(ff, Rb), true};
  }
  if (l == "x" && variant_ != TLVariant::TwoColored) {
    Arrow R = from_diagram(ObjectExpr::unit(), u.tensor(u),
                           PlanarDiagram::cup());
    Arrow Rb = variant_ == TLVariant::Pseudoreal ? scale(R, Scalar(-1)) : R;
    return {u, u, R, Rb, true};
  }
  if (variant_ == TLVariant::TwoColored && (l == "x" || l == "xb")) {
    ObjectExpr ub = ObjectExpr::letter(conj_letter(l));
    Arrow R =
        from_diagram(ObjectExpr::unit(), ub.tensor(u), PlanarDiagram::cup());
    Arrow Rb =
        from_diagram(ObjectExpr::unit(), u.tensor(ub), PlanarDiagram::cup());
    return {u, ub, R, Rb, true};
  }
  throw Error("Unsupported", "letter_solution for " + l);
}

Scalar TLBackend::scalar_of(const Arrow& a) const {
  if (!a.src.is_unit() || !a.dst.is_unit() || a.m.rows() != 1)
    throw Error("ShapeMismatch", "scalar_of expects a (unit,unit) arrow");
  return a.m.at(0, 0);
}

bool check_F_admissible(const FMatrix& f, const Scalar& d, double eps) {
  if (f.F.rows() != f.F.cols()) throw Error("ShapeMismatch", "F not square");
  Matrix ff = f.F * f.F.adjoint();
  if (!Scalar::eq(ff.trace(), d, eps)) return false;
  if (!Scalar::eq(inverse(ff).trace(), d, eps)) return false;
  Matrix fc = f.F * f.F.conj_entries();
  int n = f.F.rows();
  if (f.variant == TLVariant::Real)
    return approx_eq(fc, Matrix::identity(n), eps);
  if (f.variant == TLVariant::Pseudoreal)
    return approx_eq(fc, Matrix::identity(n) * Scalar(-1), eps);
  return true;
}

}  // namespace tcat
