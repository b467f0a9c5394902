#include "tcat/group.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

namespace tcat {

FiniteGroup FiniteGroup::from_table(const std::string& name,
                                    std::vector<std::vector<int>> t) {
  FiniteGroup g;
  g.name = name;
  g.n = static_cast<int>(t.size());
  for (auto& row : t)
    if (static_cast<int>(row.size()) != g.n)
      throw Error("NotAGroup", name + ": table not square");
  // identity
  g.id = -1;
  for (int e = 0; e < g.n; ++e) {
    bool ok = true;
    for (int x = 0; x < g.n && ok; ++x)
      ok = t[e][x] == x && t[x][e] == x;
    if (ok) {
      g.id = e;
      break;
    }
  }
  if (g.id < 0) throw Error("NotAGroup", name + ": no identity");
  // inverses
  g.inv.assign(g.n, -1);
  for (int x = 0; x < g.n; ++x) {
    for (int y = 0; y < g.n; ++y)
      if (t[x][y] == g.id && t[y][x] == g.id) {
        g.inv[x] = y;
        break;
      }
    if (g.inv[x] < 0) throw Error("NotAGroup", name + ": missing inverse");
  }
  // associativity
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      for (int c = 0; c < g.n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]])
          throw Error("NotAGroup", name + ": not associative");
  g.table = std::move(t);
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return from_table("Z" + std::to_string(n), std::move(t));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  int n = a.n * b.n;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int x1 = x / b.n, x2 = x % b.n, y1 = y / b.n, y2 = y % b.n;
      t[x][y] = a.table[x1][y1] * b.n + b.table[x2][y2];
    }
  return from_table(a.name + "x" + b.name, std::move(t));
}

namespace {

std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> perm_compose(const std::vector<int>& a,
                              const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

int perm_parity(const std::vector<int>& p) {
  int par = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) par ^= 1;
  return par;
}

Matrix perm_matrix(const std::vector<int>& p) {
  Matrix m(static_cast<int>(p.size()), static_cast<int>(p.size()));
  for (size_t j = 0; j < p.size(); ++j) m.at(p[j], j) = Scalar(1);
  return m;
}

// Orthonormal basis (as columns) of the sum-zero subspace of C^n; entries
// stay in the exact field.
Matrix sumzero_basis(int n) {
  std::vector<Matrix> vs;
  for (int i = 0; i + 1 < n; ++i) {
    Matrix v(n, 1);
    v.at(i, 0) = Scalar(1);
    v.at(i + 1, 0) = Scalar(-1);
    vs.push_back(v);
  }
  auto ob = orthonormalize(vs);
  Matrix b(n, n - 1);
  for (int j = 0; j < n - 1; ++j)
    for (int i = 0; i < n; ++i) b.at(i, j) = ob[j].at(i, 0);
  return b;
}

// Primitive n-th root of unity to the k-th power; exact for n | 12.
Scalar zeta_pow(int n, int k) {
  k = ((k % n) + n) % n;
  auto exact_zeta = [&](int nn) -> std::optional<Exact> {
    switch (nn) {
      case 1:
        return Exact(1L);
      case 2:
        return Exact(-1L);
      case 3:
        return Exact(mpq_class(-1, 2), mpq_class(0)) +
               Exact::root_term(GaussQ(0, mpq_class(1, 2)), 3);
      case 4:
        return Exact::i();
      case 6:
        return Exact(mpq_class(1, 2), mpq_class(0)) +
               Exact::root_term(GaussQ(0, mpq_class(1, 2)), 3);
      default:
        return std::nullopt;
    }
  };
  if (auto z = exact_zeta(n)) {
    Exact r(1L);
    for (int i = 0; i < k; ++i) r = r * *z;
    return Scalar(r);
  }
  double t = 2.0 * M_PI * k / n;
  return Scalar(std::complex<double>(std::cos(t), std::sin(t)));
}

Rep char_rep(int n_elems, const std::function<Scalar(int)>& chi) {
  Rep r;
  r.dim = 1;
  for (int g = 0; g < n_elems; ++g) {
    Matrix m(1, 1);
    m.at(0, 0) = chi(g);
    r.mats.push_back(m);
  }
  return r;
}

// Characters of a cyclic group presented by an arbitrary table.
void register_cyclic_chars(GroupBackend& b) {
  const FiniteGroup& g = b.group();
  int gen = -1;
  for (int x = 0; x < g.n && gen < 0; ++x) {
    int y = x, ord = 1;
    while (y != g.id) {
      y = g.mul(y, x);
      ++ord;
    }
    if (ord == g.n) gen = x;
  }
  if (gen < 0) throw Error("NotAGroup", "group is not cyclic");
  std::vector<int> log(g.n, -1);
  int y = g.id;
  for (int j = 0; j < g.n; ++j) {
    log[y] = j;
    y = g.mul(y, gen);
  }
  for (int k = 0; k < g.n; ++k) {
    std::string name = k == 0 ? "triv" : (k == 1 && g.n == 3 ? "w"
                                          : k == 2 && g.n == 3
                                              ? "w2"
                                          : g.n == 2 ? "sgn"
                                                     : "x" + std::to_string(k));
    b.register_rep(
        name, char_rep(g.n, [&, k](int e) { return zeta_pow(g.n, k * log[e]); }),
        true);
  }
}

// Characters of a Klein four-group presented by an arbitrary table.
void register_klein_chars(GroupBackend& b) {
  const FiniteGroup& g = b.group();
  if (g.n != 4) throw Error("NotAGroup", "not a Klein four-group");
  std::vector<int> nonid;
  for (int x = 0; x < g.n; ++x)
    if (x != g.id) {
      if (g.mul(x, x) != g.id)
        throw Error("NotAGroup", "not a Klein four-group");
      nonid.push_back(x);
    }
  int a = nonid[0], bb = nonid[1];
  auto exp_of = [&](int e) -> std::pair<int, int> {
    if (e == g.id) return {0, 0};
    if (e == a) return {1, 0};
    if (e == bb) return {0, 1};
    return {1, 1};
  };
  const char* names[4] = {"triv", "x10", "x01", "x11"};
  int signs[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  for (int k = 0; k < 4; ++k) {
    b.register_rep(names[k], char_rep(g.n,
                                      [&, k](int e) {
                                        auto [i, j] = exp_of(e);
                                        int s = signs[k][0] * i + signs[k][1] * j;
                                        return Scalar(s % 2 ? -1 : 1);
                                      }),
                   true);
  }
}

// Action of a permutation of {0..3} on the three pair-partitions of
// {0,1,2,3}; returns the induced permutation of {0,1,2}.
std::vector<int> partition_action(const std::vector<int>& p) {
  // partitions: 0 ~ {01|23}, 1 ~ {02|13}, 2 ~ {03|12}; identified by the
  // partner of element 0.
  auto partner_to_idx = [](int partner) { return partner - 1; };
  std::vector<int> act(3);
  int pairs[3][2][2] = {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
  for (int i = 0; i < 3; ++i) {
    // image of partition i: find partner of 0 under p
    int partner = -1;
    for (auto& pr : pairs[i]) {
      int a = p[pr[0]], b = p[pr[1]];
      if (a == 0) partner = b;
      if (b == 0) partner = a;
    }
    act[i] = partner_to_idx(partner);
  }
  return act;
}

}  // namespace

FiniteGroup FiniteGroup::symmetric(int n) {
  auto perms = all_perms(n);
  std::map<std::vector<int>, int> idx;
  for (size_t i = 0; i < perms.size(); ++i) idx[perms[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> t(perms.size(),
                                  std::vector<int>(perms.size()));
  for (size_t a = 0; a < perms.size(); ++a)
    for (size_t b = 0; b < perms.size(); ++b)
      t[a][b] = idx[perm_compose(perms[a], perms[b])];
  return from_table("S" + std::to_string(n), std::move(t));
}

FiniteGroup FiniteGroup::quaternion() {
  // elements: sign s in {0,1} and axis a in {1,i,j,k}; index = a*2+s
  auto unit_mul = [](int a, int b) -> std::pair<int, int> {
    // returns (axis, sign) of e_a * e_b, axes 0=1,1=i,2=j,3=k
    static const int axis[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    // i*i = -1, i*j = k, i*k = -j, j*i = -k, j*j = -1, j*k = i,
    // k*i = j, k*j = -i, k*k = -1
    static const int sign[4][4] = {
        {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    return {axis[a][b], sign[a][b]};
  };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int ax = x / 2, sx = x % 2, ay = y / 2, sy = y % 2;
      auto [az, sz] = unit_mul(ax, ay);
      t[x][y] = az * 2 + ((sx + sy + sz) % 2);
    }
  return from_table("Q8", std::move(t));
}

FiniteGroup FiniteGroup::dihedral4() {
  // element r^k s^e, index = k + 4e
  auto mul = [](int x, int y) {
    int kx = x % 4, ex = x / 4, ky = y % 4, ey = y / 4;
    // (r^kx s^ex)(r^ky s^ey): s r = r^-1 s
    int k = ex ? (kx - ky + 8) % 4 : (kx + ky) % 4;
    return k + 4 * ((ex + ey) % 2);
  };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) t[x][y] = mul(x, y);
  return from_table("D4", std::move(t));
}

Subgroup subgroup_of(const FiniteGroup& g, std::vector<int> elements,
                     const std::string& name) {
  std::sort(elements.begin(), elements.end());
  std::map<int, int> local;
  for (size_t i = 0; i < elements.size(); ++i)
    local[elements[i]] = static_cast<int>(i);
  int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int p = g.mul(elements[a], elements[b]);
      if (!local.count(p))
        throw Error("NotASubgroup", name + ": not closed under product");
      t[a][b] = local[p];
    }
  return {FiniteGroup::from_table(name, std::move(t)), elements};
}

Subgroup alternating_in(const FiniteGroup& sym) {
  int n = sym.n == 2 ? 2 : sym.n == 6 ? 3 : sym.n == 24 ? 4 : -1;
  if (n < 0) throw Error("NotASubgroup", "expected S2, S3 or S4");
  auto perms = all_perms(n);
  std::vector<int> evens;
  for (size_t i = 0; i < perms.size(); ++i)
    if (perm_parity(perms[i]) == 0) evens.push_back(static_cast<int>(i));
  return subgroup_of(sym, evens, "A" + std::to_string(n));
}

void GroupBackend::register_rep(const std::string& name, Rep r,
                                bool irreducible) {
  if (reps_.count(name)) throw Error("ConfigError", "duplicate rep " + name);
  if (static_cast<int>(r.mats.size()) != g_.n)
    throw Error("NotARepresentation", name + ": wrong family size");
  for (auto& m : r.mats) {
    if (m.rows() != r.dim || m.cols() != r.dim)
      throw Error("NotARepresentation", name + ": dimension mismatch");
    if (!approx_eq(m * m.adjoint(), Matrix::identity(r.dim)))
      throw Error("NotARepresentation", name + ": not unitary");
  }
  for (int a = 0; a < g_.n; ++a)
    for (int b = 0; b < g_.n; ++b)
      if (!approx_eq(r.mats[a] * r.mats[b], r.mats[g_.mul(a, b)]))
        throw Error("NotARepresentation", name + ": not a homomorphism");
  reps_[name] = std::move(r);
  irreducible_[name] = irreducible;
  if (irreducible) irreps_.push_back(name);
}

const Rep& GroupBackend::rep(const std::string& name) const {
  auto it = reps_.find(name);
  if (it == reps_.end()) throw Error("ConfigError", "unknown rep " + name);
  return it->second;
}

int GroupBackend::dim_of(const ObjectExpr& o) const {
  int d = 1;
  for (auto& l : o.word) d *= rep(l).dim;
  return d;
}

Matrix GroupBackend::object_mat(const ObjectExpr& o, int g) const {
  Matrix m = Matrix::identity(1);
  for (auto& l : o.word) m = m.kron(rep(l).mats[g]);
  return m;
}

Scalar GroupBackend::hom_dim_by_characters(const ObjectExpr& src,
                                           const ObjectExpr& dst) const {
  Scalar s;
  for (int g = 0; g < g_.n; ++g)
    s += character(dst, g) * character(src, g).conj();
  return s / Scalar(static_cast<long>(g_.n));
}

Arrow GroupBackend::identity(const ObjectExpr& o) const {
  return {o, o, Matrix::identity(dim_of(o))};
}

Arrow GroupBackend::compose(const Arrow& a, const Arrow& b) const {
  if (!(a.src == b.dst)) throw Error("ShapeMismatch", "compose");
  return {b.src, a.dst, a.m * b.m};
}

Arrow GroupBackend::tensor(const Arrow& a, const Arrow& b) const {
  return {a.src.tensor(b.src), a.dst.tensor(b.dst), a.m.kron(b.m)};
}

Arrow GroupBackend::adjoint(const Arrow& a) const {
  return {a.dst, a.src, a.m.adjoint()};
}

std::vector<Matrix> GroupBackend::hom_matrices(const ObjectExpr& src,
                                               const ObjectExpr& dst) const {
  auto key = std::make_pair(src, dst);
  auto it = hom_cache_.find(key);
  if (it != hom_cache_.end()) return it->second;
  int ds = dim_of(src), dd = dim_of(dst);
  std::vector<Matrix> out;
  if (ds > 0 && dd > 0) {
    Matrix p(dd * ds, dd * ds);
    for (int g = 0; g < g_.n; ++g)
      p = p + object_mat(dst, g).kron(object_mat(src, g).conj_entries());
    p = p * Scalar(mpq_class(1, g_.n));
    for (auto& v : kernel(p - Matrix::identity(dd * ds))) {
      Matrix t(dd, ds);
      for (int i = 0; i < dd; ++i)
        for (int j = 0; j < ds; ++j) t.at(i, j) = v.at(i * ds + j, 0);
      out.push_back(t);
    }
  }
  hom_cache_[key] = out;
  return out;
}

std::vector<Arrow> GroupBackend::hom_basis(const ObjectExpr& src,
                                           const ObjectExpr& dst) const {
  std::vector<Arrow> out;
  for (auto& m : hom_matrices(src, dst)) out.push_back({src, dst, m});
  return out;
}

std::string GroupBackend::conj_letter(const std::string& l) const {
  const Rep& r = rep(l);
  Rep c;
  c.dim = r.dim;
  for (auto& m : r.mats) c.mats.push_back(m.conj_entries());
  for (auto& [name, s] : reps_) {
    if (s.dim != c.dim) continue;
    bool eq = true;
    for (int g = 0; g < g_.n && eq; ++g) eq = approx_eq(s.mats[g], c.mats[g]);
    if (eq) return name;
  }
  std::string name = l + "~";
  const_cast<GroupBackend*>(this)->register_rep(name, c, irreducible_.at(l));
  return name;
}

std::vector<std::pair<std::string, Arrow>> GroupBackend::fusion(
    const ObjectExpr& o) const {
  std::vector<std::pair<std::string, Arrow>> out;
  for (auto& c : irreps_) {
    ObjectExpr co = label_object(c);
    auto homs = hom_matrices(co, o);
    if (homs.empty()) continue;
    Scalar dim_inv = Scalar(1) / Scalar(static_cast<long>(rep(c).dim));
    auto gram = [&](const Matrix& s, const Matrix& t) {
      return (s.adjoint() * t).trace() * dim_inv;
    };
    for (auto& w : orthonormalize(homs, gram)) out.push_back({c, {co, o, w}});
  }
  return out;
}

ConjugateSolution GroupBackend::letter_solution(const std::string& l) const {
  ObjectExpr u = ObjectExpr::letter(l);
  std::string lb = conj_letter(l);
  ObjectExpr ub = ObjectExpr::letter(lb);
  int d = rep(l).dim;
  if (irreducible_.at(l)) {
    Matrix col(d * d, 1);
    for (int a = 0; a < d; ++a) col.at(a * d + a, 0) = Scalar(1);
    Arrow R{ObjectExpr::unit(), ub.tensor(u), col};
    Arrow Rb{ObjectExpr::unit(), u.tensor(ub), col};
    return {u, ub, R, Rb, true};
  }
  // Reducible registered letter: assemble from irreducible solutions via
  // fusion isometries and their entrywise conjugates.
  Arrow R{ObjectExpr::unit(), ub.tensor(u), Matrix(d * d, 1)};
  Arrow Rb{ObjectExpr::unit(), u.tensor(ub), Matrix(d * d, 1)};
  for (auto& [c, w] : fusion(u)) {
    ConjugateSolution sc = letter_solution(c);
    Arrow wbar{sc.conj, ub, w.m.conj_entries()};
    R = add(R, compose(tensor(wbar, w), sc.R));
    Rb = add(Rb, compose(tensor(w, wbar), sc.Rbar));
  }
  return {u, ub, R, Rb, true};
}

Scalar GroupBackend::scalar_of(const Arrow& a) const {
  if (a.m.rows() != 1 || a.m.cols() != 1)
    throw Error("ShapeMismatch", "scalar_of expects a (unit,unit) arrow");
  return a.m.at(0, 0);
}

std::vector<std::pair<std::string, int>> GroupBackend::decompose(
    const ObjectExpr& o) const {
  std::map<std::string, int> mult;
  for (auto& [c, w] : fusion(o)) mult[c]++;
  std::vector<std::pair<std::string, int>> out;
  for (auto& [c, m] : mult) out.push_back({c, m});
  return out;
}

namespace {

std::shared_ptr<GroupBackend> make_s3(const FiniteGroup& s3) {
  auto b = std::make_shared<GroupBackend>(s3);
  auto perms = all_perms(3);
  Rep triv, sgn, std_rep;
  triv.dim = sgn.dim = 1;
  std_rep.dim = 2;
  Matrix B = sumzero_basis(3);
  for (int g = 0; g < 6; ++g) {
    Matrix one(1, 1), sg(1, 1);
    one.at(0, 0) = Scalar(1);
    sg.at(0, 0) = Scalar(perm_parity(perms[g]) ? -1 : 1);
    triv.mats.push_back(one);
    sgn.mats.push_back(sg);
    std_rep.mats.push_back(B.adjoint() * perm_matrix(perms[g]) * B);
  }
  b->register_rep("triv", triv, true);
  b->register_rep("sgn", sgn, true);
  b->register_rep("std", std_rep, true);
  return b;
}

std::shared_ptr<GroupBackend> make_s4(const FiniteGroup& s4) {
  auto b = std::make_shared<GroupBackend>(s4);
  auto perms = all_perms(4);
  Rep triv, sgn, two, std3, std3s;
  triv.dim = sgn.dim = 1;
  two.dim = 2;
  std3.dim = std3s.dim = 3;
  Matrix B4 = sumzero_basis(4), B3 = sumzero_basis(3);
  for (int g = 0; g < 24; ++g) {
    Matrix one(1, 1), sg(1, 1);
    one.at(0, 0) = Scalar(1);
    int par = perm_parity(perms[g]);
    sg.at(0, 0) = Scalar(par ? -1 : 1);
    triv.mats.push_back(one);
    sgn.mats.push_back(sg);
    Matrix p3 = perm_matrix(partition_action(perms[g]));
    two.mats.push_back(B3.adjoint() * p3 * B3);
    Matrix s = B4.adjoint() * perm_matrix(perms[g]) * B4;
    std3.mats.push_back(s);
    std3s.mats.push_back(s * sg.at(0, 0));
  }
  b->register_rep("triv", triv, true);
  b->register_rep("sgn", sgn, true);
  b->register_rep("two", two, true);
  b->register_rep("std", std3, true);
  b->register_rep("stds", std3s, true);
  return b;
}

std::shared_ptr<GroupBackend> make_a4(const Subgroup& a4) {
  auto b = std::make_shared<GroupBackend>(a4.group);
  auto perms = all_perms(4);
  Rep triv, w, w2, std3;
  triv.dim = w.dim = w2.dim = 1;
  std3.dim = 3;
  Matrix B4 = sumzero_basis(4);
  for (int k = 0; k < a4.group.n; ++k) {
    const auto& p = perms[a4.embed[k]];
    Matrix one(1, 1);
    one.at(0, 0) = Scalar(1);
    triv.mats.push_back(one);
    // quotient by the Klein subgroup: cyclic rotation of the partitions
    auto act = partition_action(p);
    int r = act[0];  // rotation amount: partition 0 -> partition r
    Matrix mw(1, 1), mw2(1, 1);
    mw.at(0, 0) = zeta_pow(3, r);
    mw2.at(0, 0) = zeta_pow(3, 2 * r);
    w.mats.push_back(mw);
    w2.mats.push_back(mw2);
    std3.mats.push_back(B4.adjoint() * perm_matrix(p) * B4);
  }
  b->register_rep("triv", triv, true);
  b->register_rep("w", w, true);
  b->register_rep("w2", w2, true);
  b->register_rep("std", std3, true);
  return b;
}

std::shared_ptr<GroupBackend> make_q8(const FiniteGroup& q8) {
  auto b = std::make_shared<GroupBackend>(q8);
  // index = axis*2 + sign, axes 0=1, 1=i, 2=j, 3=k
  Scalar I(Exact::i());
  auto m2 = [](Scalar a, Scalar b, Scalar c, Scalar d) {
    Matrix m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
  };
  std::vector<Matrix> axis_mats = {
      Matrix::identity(2), m2(I, 0, 0, -I), m2(0, 1, -1, 0), m2(0, I, I, 0)};
  Rep h;
  h.dim = 2;
  h.mats.resize(8);
  for (int x = 0; x < 8; ++x) {
    int ax = x / 2, s = x % 2;
    h.mats[x] = axis_mats[ax] * Scalar(s ? -1 : 1);
  }
  // four characters through the quotient by {+-1}
  int chi[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  const char* names[4] = {"triv", "xi", "xj", "xk"};
  for (int k = 0; k < 4; ++k)
    b->register_rep(names[k],
                    char_rep(8, [&, k](int x) { return Scalar(chi[k][x / 2]); }),
                    true);
  b->register_rep("h", h, true);
  return b;
}

std::shared_ptr<GroupBackend> make_d4(const FiniteGroup& d4) {
  auto b = std::make_shared<GroupBackend>(d4);
  // index = k + 4e for r^k s^e
  auto m2 = [](Scalar a, Scalar bb, Scalar c, Scalar d) {
    Matrix m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = bb;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
  };
  Matrix R = m2(0, -1, 1, 0), S = m2(1, 0, 0, -1);
  Rep two;
  two.dim = 2;
  two.mats.resize(8);
  for (int k = 0; k < 4; ++k) {
    Matrix rk = Matrix::identity(2);
    for (int i = 0; i < k; ++i) rk = rk * R;
    two.mats[k] = rk;
    two.mats[k + 4] = rk * S;
  }
  int sgnr[4] = {1, 1, -1, -1}, sgns[4] = {1, -1, 1, -1};
  const char* names[4] = {"triv", "xs", "xr", "xrs"};
  for (int c = 0; c < 4; ++c)
    b->register_rep(names[c], char_rep(8,
                                       [&, c](int x) {
                                         int k = x % 4, e = x / 4;
                                         int v = (sgnr[c] < 0 && k % 2) ? -1 : 1;
                                         if (sgns[c] < 0 && e) v = -v;
                                         return Scalar(v);
                                       }),
                    true);
  b->register_rep("two", two, true);
  return b;
}

}  // namespace

std::shared_ptr<GroupBackend> builtin_group_backend(const std::string& key) {
  if (key == "S3") return make_s3(FiniteGroup::symmetric(3));
  if (key == "S4") return make_s4(FiniteGroup::symmetric(4));
  if (key == "A3") {
    auto sub = alternating_in(FiniteGroup::symmetric(3));
    auto b = std::make_shared<GroupBackend>(sub.group);
    register_cyclic_chars(*b);
    return b;
  }
  if (key == "A4") return make_a4(alternating_in(FiniteGroup::symmetric(4)));
  if (key == "Q8") return make_q8(FiniteGroup::quaternion());
  if (key == "D4") return make_d4(FiniteGroup::dihedral4());
  if (key == "Z2" || key == "Z3" || key == "Z4" || key == "Z6") {
    auto b =
        std::make_shared<GroupBackend>(FiniteGroup::cyclic(key[1] - '0'));
    register_cyclic_chars(*b);
    return b;
  }
  if (key == "Z2xZ2") {
    auto b = std::make_shared<GroupBackend>(
        FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
    register_klein_chars(*b);
    return b;
  }
  throw Error("ConfigError", "unknown builtin group " + key);
}

std::pair<std::shared_ptr<GroupBackend>, Subgroup> builtin_pair(
    const std::string& key) {
  if (key == "S3>A3")
    return {make_s3(FiniteGroup::symmetric(3)),
            alternating_in(FiniteGroup::symmetric(3))};
  if (key == "S4>A4")
    return {make_s4(FiniteGroup::symmetric(4)),
            alternating_in(FiniteGroup::symmetric(4))};
  if (key == "D4>V4")
    return {make_d4(FiniteGroup::dihedral4()),
            subgroup_of(FiniteGroup::dihedral4(), {0, 2, 4, 6}, "V4")};
  throw Error("ConfigError", "unknown builtin pair " + key);
}

std::vector<int> su2_fusion(int r, int s) {
  std::vector<int> out;
  for (int k = std::abs(r - s); k <= r + s; k += 2) out.push_back(k);
  return out;
}

std::vector<int> su2_fuse_all(const std::vector<int>& labels) {
  std::vector<int> acc = {0};
  for (int l : labels) {
    std::vector<int> next;
    for (int a : acc)
      for (int k : su2_fusion(a, l)) next.push_back(k);
    std::sort(next.begin(), next.end());
    acc = next;
  }
  return acc;
}

int su2_hom_dim(const std::vector<int>& a, const std::vector<int>& b) {
  std::multiset<int> fa, fb;
  for (int l : su2_fuse_all(a)) fa.insert(l);
  int d = 0;
  for (int l : su2_fuse_all(b)) {
    auto it = fa.find(l);
    if (it != fa.end()) {
      fa.erase(it);
      ++d;
    }
  }
  return d;
}

}  // namespace tcat
