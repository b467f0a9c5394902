#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace tcat {

// Error with a stable machine-readable code ("ShapeMismatch", "NotPSD", ...).
struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

// Global tolerance used by all floating-mode equality/positivity predicates.
double& epsilon();

// Gaussian rational a + b*i.
struct GaussQ {
  mpq_class re, im;

  GaussQ() : re(0), im(0) {}
  GaussQ(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussQ conj() const { return {re, -im}; }
  GaussQ operator+(const GaussQ& o) const { return {re + o.re, im + o.im}; }
  GaussQ operator-(const GaussQ& o) const { return {re - o.re, im - o.im}; }
  GaussQ operator*(const GaussQ& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussQ operator*(const mpq_class& q) const { return {re * q, im * q}; }
  GaussQ inverse() const;
  bool operator==(const GaussQ& o) const { return re == o.re && im == o.im; }
  std::complex<double> to_complex() const {
    return {re.get_d(), im.get_d()};
  }
};

// Element of the field Q(i)(sqrt(2), sqrt(3), sqrt(5), ...): a finite sum of
// terms c_k * sqrt(k) with k a squarefree positive integer and c_k a Gaussian
// rational.  This is closed under the arithmetic the rest of the library
// needs (field operations, complex conjugation, square roots of norms).
class Exact {
 public:
  Exact() = default;
  explicit Exact(long n) { set_term(1, GaussQ(mpq_class(n), 0)); }
  explicit Exact(const mpq_class& q) { set_term(1, GaussQ(q, 0)); }
  Exact(const mpq_class& re, const mpq_class& im) {
    set_term(1, GaussQ(re, im));
  }
  // c * sqrt(k); k need not be squarefree, it is reduced here.
  static Exact root_term(const GaussQ& c, long k);
  static Exact i() { return Exact(mpq_class(0), mpq_class(1)); }

  bool is_zero() const { return t_.empty(); }
  bool is_rational_real() const;
  bool is_real() const;
  // The rational value, if the element is a plain rational.
  std::optional<mpq_class> as_rational() const;

  Exact operator+(const Exact& o) const;
  Exact operator-(const Exact& o) const;
  Exact operator-() const;
  Exact operator*(const Exact& o) const;
  Exact inverse() const;  // throws Error("DivisionByZero") on 0
  Exact conj() const;
  bool operator==(const Exact& o) const { return t_ == o.t_; }

  // sqrt of a real value; succeeds when the result stays in the field
  // (plain rationals, and two-term denestable sums a + b*sqrt(k)).
  std::optional<Exact> sqrt_nonneg() const;

  std::complex<double> to_complex() const;
  std::string str() const;

  const std::map<long, GaussQ>& terms() const { return t_; }

 private:
  std::map<long, GaussQ> t_;  // squarefree k -> coefficient, no zero entries
  void set_term(long k, const GaussQ& c) {
    if (!c.is_zero()) t_[k] = c;
  }
  void add_term(long k, const GaussQ& c);
};

// A complex scalar, either exact (field element above) or floating.
// Mixed arithmetic demotes to floating; predicates on exact values are
// decided exactly, floating comparisons use the given tolerance.
class Scalar {
 public:
  Scalar() : ex_(true) {}
  Scalar(int n) : ex_(true), e_(static_cast<long>(n)) {}
  Scalar(long n) : ex_(true), e_(n) {}
  Scalar(const mpq_class& q) : ex_(true), e_(q) {}
  Scalar(const Exact& e) : ex_(true), e_(e) {}
  Scalar(double d) : ex_(false), f_(d) {}
  Scalar(std::complex<double> z) : ex_(false), f_(z) {}

  bool is_exact() const { return ex_; }
  const Exact& exact_value() const;
  std::complex<double> to_complex() const {
    return ex_ ? e_.to_complex() : f_;
  }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar conj() const;
  // |z|^2, stays exact for exact input.
  Scalar abs2() const { return (*this) * conj(); }
  double abs() const { return std::abs(to_complex()); }

  // Square root of a nonnegative real scalar.  Exact inputs stay exact when
  // the root lies in the field, otherwise the result is floating.
  Scalar sqrt_nonneg() const;

  bool is_zero(double eps) const;
  bool is_zero() const { return is_zero(epsilon()); }
  static bool eq(const Scalar& a, const Scalar& b, double eps);
  static bool eq(const Scalar& a, const Scalar& b) {
    return eq(a, b, epsilon());
  }

  std::string str() const;

 private:
  bool ex_;
  Exact e_;
  std::complex<double> f_{0.0, 0.0};
};

}  // namespace tcat
