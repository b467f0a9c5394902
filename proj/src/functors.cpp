#include "tcat/functors.hpp"

namespace tcat {

namespace {

std::string restricted_name(const std::string& l) { return l + "|"; }

}  // namespace

QuasitensorFunctor identity_functor(std::shared_ptr<const CategoryBackend> c) {
  QuasitensorFunctor f;
  f.source = c;
  f.target = c;
  f.obj = [](const ObjectExpr& u) { return u; };
  f.arr = [](const Arrow& a) { return a; };
  f.mu = [c](const ObjectExpr& u, const ObjectExpr& v) {
    return c->identity(u.tensor(v));
  };
  f.kind = FunctorKind::Strict;
  return f;
}

QuasitensorFunctor restriction_functor(
    std::shared_ptr<const GroupBackend> g, const Subgroup& k,
    std::shared_ptr<GroupBackend> k_backend) {
  if (k_backend->group().n != k.group.n)
    throw Error("BackendMismatch", "subgroup order mismatch");
  auto ensure = [g, k, k_backend](const std::string& l) {
    std::string name = restricted_name(l);
    if (!k_backend->has_rep(name)) {
      const Rep& r = g->rep(l);
      Rep res;
      res.dim = r.dim;
      for (int e = 0; e < k.group.n; ++e) res.mats.push_back(r.mats[k.embed[e]]);
      k_backend->register_rep(name, res, false);
    }
    return name;
  };
  QuasitensorFunctor f;
  f.source = g;
  f.target = k_backend;
  f.obj = [ensure](const ObjectExpr& u) {
    ObjectExpr o;
    for (auto& l : u.word) o.word.push_back(ensure(l));
    return o;
  };
  auto obj = f.obj;
  f.arr = [obj](const Arrow& a) { return Arrow{obj(a.src), obj(a.dst), a.m}; };
  f.mu = [obj, k_backend](const ObjectExpr& u, const ObjectExpr& v) {
    Arrow one = k_backend->identity(obj(u.tensor(v)));
    one.src = obj(u).tensor(obj(v));
    return one;
  };
  f.kind = FunctorKind::Strict;
  return f;
}

QuasitensorFunctor forgetful_functor(std::shared_ptr<const GroupBackend> g) {
  auto hilb = std::make_shared<HilbBackend>();
  auto ensure = [g, hilb](const std::string& l) {
    if (!hilb->has_letter(l)) hilb->register_letter(l, g->rep(l).dim);
    return l;
  };
  QuasitensorFunctor f;
  f.source = g;
  f.target = hilb;
  f.obj = [ensure](const ObjectExpr& u) {
    ObjectExpr o;
    for (auto& l : u.word) o.word.push_back(ensure(l));
    return o;
  };
  auto obj = f.obj;
  f.arr = [obj](const Arrow& a) { return Arrow{obj(a.src), obj(a.dst), a.m}; };
  f.mu = [obj, hilb](const ObjectExpr& u, const ObjectExpr& v) {
    Arrow one = hilb->identity(obj(u.tensor(v)));
    one.src = obj(u).tensor(obj(v));
    return one;
  };
  f.kind = FunctorKind::Strict;
  return f;
}

namespace {

// Shared mutable state of a minimal functor: the target backend plus
// orthonormal bases of the (ι, u) encountered so far.
struct MinimalState {
  std::shared_ptr<const CategoryBackend> src;
  std::shared_ptr<HilbBackend> hilb = std::make_shared<HilbBackend>();
  std::map<ObjectExpr, std::vector<Arrow>> onb;

  const std::vector<Arrow>& basis(const ObjectExpr& u) {
    auto it = onb.find(u);
    if (it != onb.end()) return it->second;
    auto raw = src->hom_basis(ObjectExpr::unit(), u);
    std::vector<Matrix> cols;
    for (auto& a : raw) cols.push_back(a.m);
    auto gram = [&](const Matrix& a, const Matrix& b) {
      Arrow aa{ObjectExpr::unit(), u, a}, bb{ObjectExpr::unit(), u, b};
      return src->scalar_of(src->compose(src->adjoint(aa), bb));
    };
    std::vector<Arrow> out;
    for (auto& w : orthonormalize(cols, gram))
      out.push_back({ObjectExpr::unit(), u, w});
    return onb[u] = out;
  }

  ObjectExpr obj(const ObjectExpr& u) {
    if (u.is_unit()) return u;
    std::string name = "H(" + u.str() + ")";
    if (!hilb->has_letter(name))
      hilb->register_letter(name, static_cast<int>(basis(u).size()));
    return ObjectExpr::letter(name);
  }

  // coefficient of a against the orthonormal basis element s
  Scalar coeff(const Arrow& s, const Arrow& a) {
    return src->scalar_of(src->compose(src->adjoint(s), a));
  }
};

}  // namespace

QuasitensorFunctor minimal_functor(std::shared_ptr<const CategoryBackend> c) {
  auto st = std::make_shared<MinimalState>();
  st->src = c;
  QuasitensorFunctor f;
  f.source = c;
  f.target = st->hilb;
  f.obj = [st](const ObjectExpr& u) { return st->obj(u); };
  f.arr = [st](const Arrow& a) {
    const auto& bs = st->basis(a.src);
    const auto& bd = st->basis(a.dst);
    Matrix m(static_cast<int>(bd.size()), static_cast<int>(bs.size()));
    for (size_t j = 0; j < bs.size(); ++j) {
      Arrow img = st->src->compose(a, bs[j]);
      for (size_t i = 0; i < bd.size(); ++i)
        m.at(static_cast<int>(i), static_cast<int>(j)) =
            st->coeff(bd[i], img);
    }
    return Arrow{st->obj(a.src), st->obj(a.dst), m};
  };
  f.mu = [st](const ObjectExpr& u, const ObjectExpr& v) {
    const auto& bu = st->basis(u);
    const auto& bv = st->basis(v);
    const auto& buv = st->basis(u.tensor(v));
    Matrix m(static_cast<int>(buv.size()),
             static_cast<int>(bu.size() * bv.size()));
    for (size_t i = 0; i < bu.size(); ++i)
      for (size_t j = 0; j < bv.size(); ++j) {
        Arrow ten = st->src->tensor(bu[i], bv[j]);
        for (size_t k = 0; k < buv.size(); ++k)
          m.at(static_cast<int>(k), static_cast<int>(i * bv.size() + j)) =
              st->coeff(buv[k], ten);
      }
    return Arrow{st->obj(u).tensor(st->obj(v)), st->obj(u.tensor(v)), m};
  };
  f.kind = FunctorKind::Quasitensor;
  return f;
}

QuasitensorFunctor embed_tau_F(std::shared_ptr<const TLBackend> tl,
                               const FMatrix& fm) {
  if (!check_F_admissible(fm, tl->loop_value()))
    throw Error("NotAdmissible", "F fails the trace or reality conditions");
  if (fm.variant != tl->variant())
    throw Error("VariantMismatch", "embed_tau_F");
  int n = fm.F.rows();
  auto hilb = std::make_shared<HilbBackend>();
  hilb->register_letter("e", n);
  Matrix F = fm.F;
  Matrix Fs_inv;  // (F*)^{-1}, used by the two-colored conjugate cup
  if (fm.variant == TLVariant::TwoColored) Fs_inv = inverse(F.adjoint());

  auto obj = [tl](const ObjectExpr& u) {
    ObjectExpr o;
    for (auto& l : tl->expand(u).word) {
      (void)l;
      o.word.push_back("e");
    }
    return o;
  };

  // matrix of a single diagram: per-pair weights (cup left-to-right value
  // pair (a,b) weighs F_{b,a}, or ((F*)^{-1})_{a,b} for a conjugate-colored
  // cup; caps are the adjoints; through strands are deltas)
  auto tau = [n, F, Fs_inv, tl](const PlanarDiagram& d,
                                const std::vector<std::string>& letters) {
    int db = 1, dt = 1;
    for (int i = 0; i < d.nb; ++i) db *= n;
    for (int i = 0; i < d.nt; ++i) dt *= n;
    Matrix m(dt, db);
    std::vector<int> bv(d.nb), tv(d.nt);
    // iterate over all index assignments of bottom and top legs
    std::function<void(int)> fill_top;
    std::function<void(int)> fill_bot = [&](int i) {
      if (i == d.nb) {
        fill_top(0);
        return;
      }
      for (bv[i] = 0; bv[i] < n; ++bv[i]) fill_bot(i + 1);
    };
    fill_top = [&](int i) {
      if (i == d.nt) {
        Scalar w(1);
        auto val = [&](int p) { return p < d.nb ? bv[p] : tv[p - d.nb]; };
        for (int p = 0; p < d.nb + d.nt && !w.is_zero(0.0); ++p) {
          int q = d.partner[p];
          if (q < p) continue;
          bool pb = p < d.nb, qb = q < d.nb;
          if (pb != qb) {  // through strand
            if (val(p) != val(q)) w = Scalar(0);
            continue;
          }
          bool conj_cup = letters[p] == "x" && tl->variant() ==
                                                   TLVariant::TwoColored;
          Scalar e;
          if (!pb)  // cup in the top row, p is the left point
            e = conj_cup ? Fs_inv.at(val(p), val(q)) : F.at(val(q), val(p));
          else  // cap: adjoint of the corresponding cup
            e = (conj_cup ? Fs_inv.at(val(p), val(q)) : F.at(val(q), val(p)))
                    .conj();
          w = w * e;
        }
        if (!w.is_zero(0.0)) {
          int r = 0, c = 0;
          for (int k = 0; k < d.nt; ++k) r = r * n + tv[k];
          for (int k = 0; k < d.nb; ++k) c = c * n + bv[k];
          m.at(r, c) += w;
        }
        return;
      }
      for (tv[i] = 0; tv[i] < n; ++tv[i]) fill_top(i + 1);
    };
    fill_bot(0);
    return m;
  };

  QuasitensorFunctor f;
  f.source = tl;
  f.target = hilb;
  f.obj = obj;
  f.arr = [tl, hilb, obj, tau](const Arrow& a) {
    ObjectExpr src = obj(a.src), dst = obj(a.dst);
    const auto& basis = tl->diagram_basis(a.src, a.dst);
    Matrix m(hilb->dim_of(dst), hilb->dim_of(src));
    std::vector<std::string> letters = tl->expand(a.src).word;
    ObjectExpr ed = tl->expand(a.dst);
    letters.insert(letters.end(), ed.word.begin(), ed.word.end());
    for (size_t i = 0; i < basis.size(); ++i) {
      Scalar c = a.m.at(static_cast<int>(i), 0);
      if (c.is_zero(0.0)) continue;
      m = m + tau(basis[i], letters) * c;
    }
    return Arrow{src, dst, m};
  };
  f.mu = [hilb, obj](const ObjectExpr& u, const ObjectExpr& v) {
    return hilb->identity(obj(u.tensor(v)));
  };
  f.kind = FunctorKind::Strict;
  return f;
}

}  // namespace tcat
