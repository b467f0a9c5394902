#include "tcat/hilb.hpp"

namespace tcat {

void HilbBackend::register_letter(const std::string& name, int dim) {
  if (dim < 0) throw Error("ConfigError", "negative dimension");
  if (dims_.count(name)) throw Error("ConfigError", "duplicate letter " + name);
  dims_[name] = dim;
}

int HilbBackend::dim_of(const ObjectExpr& o) const {
  int d = 1;
  for (auto& l : o.word) {
    auto it = dims_.find(l);
    if (it == dims_.end()) throw Error("ConfigError", "unknown letter " + l);
    d *= it->second;
  }
  return d;
}

Arrow HilbBackend::identity(const ObjectExpr& o) const {
  return {o, o, Matrix::identity(dim_of(o))};
}

Arrow HilbBackend::compose(const Arrow& a, const Arrow& b) const {
  if (!(a.src == b.dst)) throw Error("ShapeMismatch", "compose");
  return {b.src, a.dst, a.m * b.m};
}

Arrow HilbBackend::tensor(const Arrow& a, const Arrow& b) const {
  return {a.src.tensor(b.src), a.dst.tensor(b.dst), a.m.kron(b.m)};
}

Arrow HilbBackend::adjoint(const Arrow& a) const {
  return {a.dst, a.src, a.m.adjoint()};
}

std::vector<Arrow> HilbBackend::hom_basis(const ObjectExpr& src,
                                          const ObjectExpr& dst) const {
  int ds = dim_of(src), dd = dim_of(dst);
  std::vector<Arrow> out;
  for (int i = 0; i < dd; ++i)
    for (int j = 0; j < ds; ++j) {
      Matrix m(dd, ds);
      m.at(i, j) = Scalar(1);
      out.push_back({src, dst, m});
    }
  return out;
}

std::string HilbBackend::conj_letter(const std::string& l) const {
  if (!dims_.count(l)) throw Error("ConfigError", "unknown letter " + l);
  return l;
}

ObjectExpr HilbBackend::label_object(const std::string& label) const {
  if (label != "1") throw Error("ConfigError", "unknown label " + label);
  return ObjectExpr::unit();
}

std::vector<std::pair<std::string, Arrow>> HilbBackend::fusion(
    const ObjectExpr& o) const {
  std::vector<std::pair<std::string, Arrow>> out;
  int d = dim_of(o);
  for (int i = 0; i < d; ++i) {
    Matrix e(d, 1);
    e.at(i, 0) = Scalar(1);
    out.push_back({"1", {ObjectExpr::unit(), o, e}});
  }
  return out;
}

ConjugateSolution HilbBackend::letter_solution(const std::string& l) const {
  ObjectExpr u = ObjectExpr::letter(l);
  int d = dim_of(u);
  Matrix col(d * d, 1);
  for (int a = 0; a < d; ++a) col.at(a * d + a, 0) = Scalar(1);
  Arrow R{ObjectExpr::unit(), u.tensor(u), col};
  return {u, u, R, R, true};
}

Scalar HilbBackend::scalar_of(const Arrow& a) const {
  if (a.m.rows() != 1 || a.m.cols() != 1)
    throw Error("ShapeMismatch", "scalar_of expects a (unit,unit) arrow");
  return a.m.at(0, 0);
}

}  // namespace tcat
