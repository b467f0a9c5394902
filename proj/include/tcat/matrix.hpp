#pragma once

#include <functional>
#include <vector>

#include "tcat/scalar.hpp"

namespace tcat {

// Dense matrix over Scalar.  Small sizes only; everything is exact when the
// entries are.
class Matrix {
 public:
  Matrix() : r_(0), c_(0) {}
  Matrix(int rows, int cols) : r_(rows), c_(cols), e_(rows * cols) {}

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

  int rows() const { return r_; }
  int cols() const { return c_; }
  Scalar& at(int i, int j) { return e_[i * c_ + j]; }
  const Scalar& at(int i, int j) const { return e_[i * c_ + j]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Scalar& s) const;
  Matrix adjoint() const;    // conjugate transpose
  Matrix transpose() const;
  Matrix conj_entries() const;
  Matrix kron(const Matrix& o) const;  // Kronecker product
  Matrix col(int j) const;
  Matrix hstack(const Matrix& o) const;

  Scalar trace() const;
  // Frobenius pairing tr(this^* o); for column vectors the inner product.
  Scalar dot(const Matrix& o) const;
  double norm_inf() const;  // max |entry| (floating estimate)
  bool is_zero(double eps) const;
  bool is_exact() const;

  std::string str() const;

 private:
  int r_, c_;
  std::vector<Scalar> e_;
};

inline bool approx_eq(const Matrix& a, const Matrix& b, double eps) {
  return (a - b).is_zero(eps);
}
inline bool approx_eq(const Matrix& a, const Matrix& b) {
  return approx_eq(a, b, epsilon());
}

// Basis of the null space {x : m x = 0}, as columns.
std::vector<Matrix> kernel(const Matrix& m);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(Matrix& m, double eps);

// Rank via row reduction.
int rank(const Matrix& m);

// Gauss-Jordan inverse; throws Singular.
Matrix inverse(const Matrix& m);

// Solve B c = v where v is guaranteed to lie in the column span of B
// (used to express an arrow in a chosen hom-basis).  Throws
// Error("Inconsistent") otherwise.
Matrix solve_in_span(const Matrix& basis_cols, const Matrix& v);

// Gram–Schmidt w.r.t. the sesquilinear form gram(a, b) (conjugate-linear in
// the first slot).  Null vectors are dropped; a negative squared norm below
// -eps raises NotPSD.
std::vector<Matrix> orthonormalize(
    const std::vector<Matrix>& vs,
    const std::function<Scalar(const Matrix&, const Matrix&)>& gram);

// Standard-inner-product overload for column vectors.
std::vector<Matrix> orthonormalize(const std::vector<Matrix>& vs);

struct PsdResult {
  double lambda_min;           // floating estimate of the smallest eigenvalue
  bool exact_certified;        // true when an exact LDL* certificate was run
  bool exact_psd;              // meaningful only if exact_certified
};

// Minimum-eigenvalue estimate for a hermitian matrix; in exact mode also an
// LDL* positivity certificate with rational pivots.
PsdResult psd_certificate(const Matrix& g);

// Reynolds operator (1/|K|) sum of the family; validates the representation
// property on all pairs first.
Matrix group_average(const std::vector<Matrix>& action,
                     const std::vector<std::vector<int>>& mult_table);

// Eigenvalues of a hermitian matrix (floating, via Jacobi sweeps on the
// real symmetric embedding); ascending order.
std::vector<double> hermitian_eigenvalues(const Matrix& g);

}  // namespace tcat
