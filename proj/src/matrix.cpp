#include "tcat/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tcat {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_)
    throw Error("ShapeMismatch", "matrix addition");
  Matrix m(r_, c_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_)
    throw Error("ShapeMismatch", "matrix subtraction");
  Matrix m(r_, c_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (c_ != o.r_) throw Error("ShapeMismatch", "matrix product");
  Matrix m(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero(0.0)) continue;
      for (int j = 0; j < o.c_; ++j) m.at(i, j) += a * o.at(k, j);
    }
  return m;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix m(r_, c_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * s;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j).conj();
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::conj_entries() const {
  Matrix m(r_, c_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i].conj();
  return m;
}

Matrix Matrix::kron(const Matrix& o) const {
  Matrix m(r_ * o.r_, c_ * o.c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) {
      const Scalar& a = at(i, j);
      if (a.is_zero(0.0)) continue;
      for (int p = 0; p < o.r_; ++p)
        for (int q = 0; q < o.c_; ++q)
          m.at(i * o.r_ + p, j * o.c_ + q) = a * o.at(p, q);
    }
  return m;
}

Matrix Matrix::col(int j) const {
  Matrix m(r_, 1);
  for (int i = 0; i < r_; ++i) m.at(i, 0) = at(i, j);
  return m;
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (r_ != o.r_) throw Error("ShapeMismatch", "hstack");
  Matrix m(r_, c_ + o.c_);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) m.at(i, j) = at(i, j);
    for (int j = 0; j < o.c_; ++j) m.at(i, c_ + j) = o.at(i, j);
  }
  return m;
}

Scalar Matrix::trace() const {
  Scalar t;
  for (int i = 0; i < std::min(r_, c_); ++i) t += at(i, i);
  return t;
}

Scalar Matrix::dot(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw Error("ShapeMismatch", "dot");
  Scalar t;
  for (size_t i = 0; i < e_.size(); ++i) t += e_[i].conj() * o.e_[i];
  return t;
}

double Matrix::norm_inf() const {
  double m = 0.0;
  for (auto& s : e_) m = std::max(m, s.abs());
  return m;
}

bool Matrix::is_zero(double eps) const {
  for (auto& s : e_)
    if (!s.is_zero(eps)) return false;
  return true;
}

bool Matrix::is_exact() const {
  for (auto& s : e_)
    if (!s.is_exact()) return false;
  return true;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < r_; ++i) {
    os << "[ ";
    for (int j = 0; j < c_; ++j) os << at(i, j).str() << " ";
    os << "]\n";
  }
  return os.str();
}

std::vector<int> rref(Matrix& m, double eps) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int best = -1;
    double best_abs = 0.0;
    for (int i = row; i < m.rows(); ++i) {
      if (m.at(i, col).is_zero(eps)) continue;
      double a = m.at(i, col).abs();
      if (a > best_abs) {
        best_abs = a;
        best = i;
      }
    }
    if (best < 0) continue;
    if (best != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(best, j), m.at(row, j));
    Scalar inv = Scalar(1) / m.at(row, col);
    for (int j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
    m.at(row, col) = Scalar(1);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero(0.0)) continue;
      Scalar f = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(row, j);
      m.at(i, col) = Scalar();
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(const Matrix& m) {
  Matrix c = m;
  return static_cast<int>(rref(c, epsilon()).size());
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("ShapeMismatch", "inverse");
  int n = m.rows();
  Matrix aug = m.hstack(Matrix::identity(n));
  std::vector<int> piv = rref(aug, epsilon());
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(piv.size()) <= i || piv[i] != i)
      throw Error("Singular", "matrix is not invertible");
  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

std::vector<Matrix> kernel(const Matrix& m) {
  Matrix r = m;
  std::vector<int> piv = rref(r, epsilon());
  std::vector<bool> is_piv(m.cols(), false);
  for (int p : piv) is_piv[p] = true;
  std::vector<Matrix> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Matrix v(m.cols(), 1);
    v.at(f, 0) = Scalar(1);
    for (size_t i = 0; i < piv.size(); ++i) v.at(piv[i], 0) = -r.at(i, f);
    basis.push_back(v);
  }
  return basis;
}

Matrix solve_in_span(const Matrix& basis_cols, const Matrix& v) {
  if (v.cols() != 1 || v.rows() != basis_cols.rows())
    throw Error("ShapeMismatch", "solve_in_span");
  Matrix aug = basis_cols.hstack(v);
  std::vector<int> piv = rref(aug, epsilon());
  Matrix c(basis_cols.cols(), 1);
  for (size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == basis_cols.cols())
      throw Error("Inconsistent", "vector not in span of basis");
    c.at(piv[i], 0) = aug.at(i, basis_cols.cols());
  }
  return c;
}

std::vector<Matrix> orthonormalize(
    const std::vector<Matrix>& vs,
    const std::function<Scalar(const Matrix&, const Matrix&)>& gram) {
  std::vector<Matrix> out;
  for (Matrix v : vs) {
    for (const Matrix& e : out) v = v - e * gram(e, v);
    Scalar n2 = gram(v, v);
    std::complex<double> z = n2.to_complex();
    if (std::abs(z.imag()) > epsilon())
      throw Error("NotPSD", "gram form not hermitian on span");
    if (z.real() < -epsilon())
      throw Error("NotPSD", "negative squared norm in orthonormalize");
    if (n2.is_zero(epsilon())) continue;
    out.push_back(v * (Scalar(1) / n2.sqrt_nonneg()));
  }
  return out;
}

std::vector<Matrix> orthonormalize(const std::vector<Matrix>& vs) {
  return orthonormalize(
      vs, [](const Matrix& a, const Matrix& b) { return a.dot(b); });
}

std::vector<double> hermitian_eigenvalues(const Matrix& g) {
  // Real symmetric embedding [[Re, -Im], [Im, Re]]; Jacobi sweeps.
  int n = g.rows();
  int N = 2 * n;
  std::vector<std::vector<double>> a(N, std::vector<double>(N, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::complex<double> z = g.at(i, j).to_complex();
      a[i][j] = z.real();
      a[i][j + n] = -z.imag();
      a[i + n][j] = z.imag();
      a[i + n][j + n] = z.real();
    }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < N; ++p)
      for (int q = p + 1; q < N; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-26) break;
    for (int p = 0; p < N; ++p)
      for (int q = p + 1; q < N; ++q) {
        if (std::abs(a[p][q]) < 1e-15) continue;
        double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < N; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < N; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(N);
  for (int i = 0; i < N; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

PsdResult psd_certificate(const Matrix& g) {
  if (g.rows() != g.cols()) throw Error("ShapeMismatch", "psd_certificate");
  if (!approx_eq(g, g.adjoint()))
    throw Error("NotHermitian", "psd_certificate input");
  PsdResult res{0.0, false, false};
  auto ev = hermitian_eigenvalues(g);
  res.lambda_min = ev.empty() ? 0.0 : ev.front();
  if (g.is_exact()) {
    // LDL* elimination with exact pivots: PSD iff every pivot is >= 0 and a
    // zero pivot has a zero row/column in the current Schur complement.
    res.exact_certified = true;
    res.exact_psd = true;
    Matrix a = g;
    int n = a.rows();
    for (int i = 0; i < n && res.exact_psd; ++i) {
      Scalar d = a.at(i, i);
      if (d.is_zero(0.0)) {
        for (int j = i; j < n; ++j)
          if (!a.at(i, j).is_zero(0.0) || !a.at(j, i).is_zero(0.0))
            res.exact_psd = false;
        continue;
      }
      if (d.to_complex().real() < 0) {
        res.exact_psd = false;
        break;
      }
      Scalar inv = Scalar(1) / d;
      for (int j = i + 1; j < n; ++j)
        for (int k = i + 1; k < n; ++k)
          a.at(j, k) -= a.at(j, i) * a.at(i, k) * inv;
    }
  }
  return res;
}

Matrix group_average(const std::vector<Matrix>& action,
                     const std::vector<std::vector<int>>& mult_table) {
  size_t n = action.size();
  if (n == 0 || mult_table.size() != n)
    throw Error("NotARepresentation", "action family size mismatch");
  for (size_t g = 0; g < n; ++g)
    for (size_t h = 0; h < n; ++h)
      if (!approx_eq(action[g] * action[h], action[mult_table[g][h]]))
        throw Error("NotARepresentation",
                    "multiplicativity fails at pair (" + std::to_string(g) +
                        "," + std::to_string(h) + ")");
  Matrix sum = Matrix::zero(action[0].rows(), action[0].cols());
  for (auto& m : action) sum = sum + m;
  return sum * Scalar(mpq_class(1, static_cast<long>(n)));
}

}  // namespace tcat
