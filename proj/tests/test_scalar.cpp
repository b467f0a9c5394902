#include "doctest.h"
#include "tcat/scalar.hpp"

using namespace tcat;

TEST_CASE("rational arithmetic is exact") {
  Scalar a(mpq_class(1, 3)), b(mpq_class(2, 5));
  Scalar c = a * b;
  CHECK(c.is_exact());
  CHECK(Scalar::eq(c, Scalar(mpq_class(2, 15)), 0.0));
  CHECK((a - a).is_zero(0.0));
}

TEST_CASE("radicals multiply and reduce to squarefree indices") {
  Scalar r2 = Scalar(2).sqrt_nonneg();
  Scalar r3 = Scalar(3).sqrt_nonneg();
  CHECK(r2.is_exact());
  CHECK(Scalar::eq(r2 * r2, Scalar(2), 0.0));
  Scalar r6 = r2 * r3;
  CHECK(Scalar::eq(r6 * r6, Scalar(6), 0.0));
  Scalar r8 = Scalar(8).sqrt_nonneg();  // 2*sqrt(2)
  CHECK(Scalar::eq(r8, r2 * Scalar(2), 0.0));
}

TEST_CASE("field inverse of radical sums") {
  Scalar r2 = Scalar(2).sqrt_nonneg();
  Scalar r3 = Scalar(3).sqrt_nonneg();
  Scalar x = Scalar(1) + r2 + r3;
  Scalar y = Scalar(1) / x;
  CHECK(y.is_exact());
  CHECK(Scalar::eq(x * y, Scalar(1), 0.0));

  Scalar i(Exact::i());
  Scalar z = (Scalar(1) + i * r2);
  CHECK(Scalar::eq(z * (Scalar(1) / z), Scalar(1), 0.0));
}

TEST_CASE("conjugation interacts with products") {
  Scalar i(Exact::i());
  Scalar r3 = Scalar(3).sqrt_nonneg();
  Scalar z = Scalar(mpq_class(-1, 2)) + i * r3 * Scalar(mpq_class(1, 2));
  // |omega|^2 = 1 for the primitive cube root of unity
  CHECK(Scalar::eq(z * z.conj(), Scalar(1), 0.0));
  CHECK(Scalar::eq(z * z * z, Scalar(1), 0.0));
}

TEST_CASE("denesting sqrt(3 + 2 sqrt(2)) = 1 + sqrt(2)") {
  Scalar r2 = Scalar(2).sqrt_nonneg();
  Scalar v = Scalar(3) + r2 * Scalar(2);
  Scalar s = v.sqrt_nonneg();
  CHECK(s.is_exact());
  CHECK(Scalar::eq(s, Scalar(1) + r2, 0.0));
}

TEST_CASE("non-denestable roots demote to floating") {
  Scalar r2 = Scalar(2).sqrt_nonneg();
  Scalar s = r2.sqrt_nonneg();  // 2^(1/4) leaves the field
  CHECK(!s.is_exact());
  CHECK(std::abs(s.to_complex().real() - std::pow(2.0, 0.25)) < 1e-12);
}

TEST_CASE("mixed arithmetic demotes to floating with tolerance checks") {
  Scalar a(mpq_class(1, 3));
  Scalar b(0.5);
  Scalar c = a + b;
  CHECK(!c.is_exact());
  CHECK(Scalar::eq(c, Scalar(1.0 / 3 + 0.5), 1e-12));
}
