#include "tcat/scalar.hpp"

#include <numeric>
#include <sstream>

namespace tcat {

double& epsilon() {
  static double eps = 1e-9;
  return eps;
}

GaussQ GaussQ::inverse() const {
  mpq_class n = re * re + im * im;
  if (n == 0) throw Error("DivisionByZero", "inverse of zero Gaussian rational");
  return {re / n, -im / n};
}

namespace {

// n = m^2 * k with k squarefree; returns (m, k).  n >= 1.
std::pair<mpz_class, long> squarefree_split(mpz_class n) {
  mpz_class m = 1;
  long k = 1;
  for (long d = 2; mpz_class(d) * d <= n && d < 2000000; ++d) {
    mpz_class dd = mpz_class(d) * d;
    while (mpz_divisible_p(n.get_mpz_t(), dd.get_mpz_t())) {
      n /= dd;
      m *= d;
    }
    if (mpz_divisible_p(n.get_mpz_t(), mpz_class(d).get_mpz_t())) {
      n /= d;
      k *= d;
    }
  }
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
      m *= r;
    } else if (n.fits_slong_p()) {
      // No factor below the trial bound, so n is squarefree here.
      k *= n.get_si();
    } else {
      throw Error("RadicalOverflow", "radical index out of supported range");
    }
  }
  return {m, k};
}

// sqrt of a nonnegative rational as c*sqrt(k), k squarefree.
std::pair<mpq_class, long> sqrt_rational(const mpq_class& v) {
  // sqrt(p/q) = sqrt(p*q)/q
  mpz_class pq = v.get_num() * v.get_den();
  auto [m, k] = squarefree_split(pq);
  return {mpq_class(m) / v.get_den(), k};
}

}  // namespace

void Exact::add_term(long k, const GaussQ& c) {
  auto it = t_.find(k);
  if (it == t_.end()) {
    if (!c.is_zero()) t_[k] = c;
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) t_.erase(it);
}

Exact Exact::root_term(const GaussQ& c, long k) {
  if (k <= 0) throw Error("RadicalOverflow", "nonpositive radical index");
  auto [m, kk] = squarefree_split(mpz_class(k));
  Exact r;
  r.set_term(kk, c * mpq_class(m));
  return r;
}

bool Exact::is_rational_real() const {
  if (t_.empty()) return true;
  return t_.size() == 1 && t_.begin()->first == 1 && t_.begin()->second.im == 0;
}

bool Exact::is_real() const {
  for (auto& [k, c] : t_)
    if (c.im != 0) return false;
  return true;
}

std::optional<mpq_class> Exact::as_rational() const {
  if (t_.empty()) return mpq_class(0);
  if (is_rational_real()) return t_.begin()->second.re;
  return std::nullopt;
}

Exact Exact::operator+(const Exact& o) const {
  Exact r = *this;
  for (auto& [k, c] : o.t_) r.add_term(k, c);
  return r;
}

Exact Exact::operator-() const {
  Exact r;
  for (auto& [k, c] : t_) r.t_[k] = GaussQ() - c;
  return r;
}

Exact Exact::operator-(const Exact& o) const { return *this + (-o); }

Exact Exact::operator*(const Exact& o) const {
  Exact r;
  for (auto& [k1, c1] : t_) {
    for (auto& [k2, c2] : o.t_) {
      long g = std::gcd(k1, k2);
      long k = (k1 / g) * (k2 / g);  // squarefree since k1, k2 are
      r.add_term(k, (c1 * c2) * mpq_class(g));
    }
  }
  return r;
}

Exact Exact::conj() const {
  Exact r;
  for (auto& [k, c] : t_) r.t_[k] = c.conj();
  return r;
}

Exact Exact::inverse() const {
  if (t_.empty()) throw Error("DivisionByZero", "inverse of zero scalar");
  if (t_.size() == 1) {
    auto& [k, c] = *t_.begin();
    // 1/(c*sqrt(k)) = (1/(c*k)) * sqrt(k)
    Exact r;
    r.set_term(k, (c * mpq_class(k)).inverse());
    return r;
  }
  // Pick a prime p dividing some radical index and split E = A + B*sqrt(p)
  // with A, B free of p; then 1/E = (A - B*sqrt(p)) / (A^2 - p B^2) and the
  // denominator involves strictly fewer primes, so the recursion terminates.
  long p = 0;
  for (auto& [k, c] : t_) {
    if (k > 1) {
      long n = k;
      for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
          p = d;
          break;
        }
      if (p == 0) p = n;
      break;
    }
  }
  Exact A, B;
  for (auto& [k, c] : t_) {
    if (k % p == 0)
      B.set_term(k / p, c);
    else
      A.set_term(k, c);
  }
  Exact sp = root_term(GaussQ(mpq_class(1), 0), p);
  Exact den = A * A - B * B * Exact(static_cast<long>(p));
  return (A - B * sp) * den.inverse();
}

std::optional<Exact> Exact::sqrt_nonneg() const {
  if (!is_real()) return std::nullopt;
  if (t_.empty()) return Exact();
  if (to_complex().real() < 0) return std::nullopt;
  if (t_.size() == 1) {
    auto& [k, c] = *t_.begin();
    if (k != 1) return std::nullopt;  // sqrt(c*sqrt(k)) leaves the field
    if (c.re < 0) return std::nullopt;
    auto [m, kk] = sqrt_rational(c.re);
    Exact r;
    r.set_term(kk, GaussQ(m, 0));
    return r;
  }
  if (t_.size() == 2 && t_.count(1)) {
    // a + b*sqrt(k): try denesting as x + y*sqrt(k).
    mpq_class a = t_.at(1).re;
    auto it = t_.begin();
    if (it->first == 1) ++it;
    long k = it->first;
    mpq_class b = it->second.re;
    mpq_class disc = a * a - b * b * k;
    if (disc < 0) return std::nullopt;
    auto [sd, kd] = sqrt_rational(disc);
    if (kd != 1) return std::nullopt;  // sqrt(disc) irrational
    for (int sign = 0; sign < 2; ++sign) {
      mpq_class x2 = (a + (sign ? -sd : sd)) / 2;
      if (x2 < 0) continue;
      auto [sx, kx] = sqrt_rational(x2);
      if (kx != 1) continue;
      if (sx == 0) continue;
      mpq_class y = b / (2 * sx);
      Exact cand;
      cand.set_term(1, GaussQ(sx, 0));
      cand.add_term(k, GaussQ(y, 0));
      if (cand * cand == *this && cand.to_complex().real() >= 0) return cand;
      Exact neg = -cand;
      if (neg * neg == *this && neg.to_complex().real() >= 0) return neg;
    }
    return std::nullopt;
  }
  return std::nullopt;
}

std::complex<double> Exact::to_complex() const {
  std::complex<double> z{0.0, 0.0};
  for (auto& [k, c] : t_)
    z += c.to_complex() * std::sqrt(static_cast<double>(k));
  return z;
}

std::string Exact::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.re.get_str();
    if (c.im != 0) os << (c.im > 0 ? "+" : "") << c.im.get_str() << "i";
    os << ")";
    if (k != 1) os << "*sqrt(" << k << ")";
  }
  return os.str();
}

const Exact& Scalar::exact_value() const {
  if (!ex_) throw Error("NotExact", "scalar is floating");
  return e_;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (ex_ && o.ex_) return Scalar(e_ + o.e_);
  return Scalar(to_complex() + o.to_complex());
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (ex_ && o.ex_) return Scalar(e_ - o.e_);
  return Scalar(to_complex() - o.to_complex());
}

Scalar Scalar::operator-() const {
  if (ex_) return Scalar(-e_);
  return Scalar(-f_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (ex_ && o.ex_) return Scalar(e_ * o.e_);
  return Scalar(to_complex() * o.to_complex());
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (ex_ && o.ex_) return Scalar(e_ * o.e_.inverse());
  return Scalar(to_complex() / o.to_complex());
}

Scalar Scalar::conj() const {
  if (ex_) return Scalar(e_.conj());
  return Scalar(std::conj(f_));
}

Scalar Scalar::sqrt_nonneg() const {
  if (ex_) {
    auto r = e_.sqrt_nonneg();
    if (r) return Scalar(*r);
    double v = e_.to_complex().real();
    if (v < -epsilon())
      throw Error("NotPSD", "sqrt of negative value");
    return Scalar(std::sqrt(std::max(0.0, v)));
  }
  double v = f_.real();
  if (v < -epsilon()) throw Error("NotPSD", "sqrt of negative value");
  return Scalar(std::sqrt(std::max(0.0, v)));
}

bool Scalar::is_zero(double eps) const {
  if (ex_) return e_.is_zero();
  return std::abs(f_) <= eps;
}

bool Scalar::eq(const Scalar& a, const Scalar& b, double eps) {
  return (a - b).is_zero(eps);
}

std::string Scalar::str() const {
  if (ex_) return e_.str();
  std::ostringstream os;
  os << f_.real();
  if (f_.imag() != 0) os << (f_.imag() > 0 ? "+" : "") << f_.imag() << "i";
  return os.str();
}

}  // namespace tcat
