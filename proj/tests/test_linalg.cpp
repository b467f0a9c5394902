#include "doctest.h"
#include "tcat/matrix.hpp"

using namespace tcat;

namespace {
Matrix m2(Scalar a, Scalar b, Scalar c, Scalar d) {
  Matrix m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}
}  // namespace

TEST_CASE("kernel of identity is empty") {
  CHECK(kernel(Matrix::identity(3)).empty());
}

TEST_CASE("kernel of zero 2x2 has two basis vectors") {
  CHECK(kernel(Matrix::zero(2, 2)).size() == 2);
}

TEST_CASE("kernel of rank-1 [[1,1],[1,1]] is spanned by (1,-1)") {
  Matrix m = m2(1, 1, 1, 1);
  auto k = kernel(m);
  REQUIRE(k.size() == 1);
  CHECK((m * k[0]).is_zero(0.0));
  // proportional to (1,-1)
  CHECK(Scalar::eq(k[0].at(0, 0) + k[0].at(1, 0), Scalar(0), 0.0));
}

TEST_CASE("orthonormalize straightens and drops dependents") {
  Matrix v1(2, 1), v2(2, 1), v3(2, 1);
  v1.at(0, 0) = Scalar(1);
  v2.at(0, 0) = Scalar(1);
  v2.at(1, 0) = Scalar(1);
  v3.at(0, 0) = Scalar(2);
  auto out = orthonormalize({v1, v2});
  REQUIRE(out.size() == 2);
  CHECK(Scalar::eq(out[0].dot(out[0]), Scalar(1), 0.0));
  CHECK(Scalar::eq(out[1].dot(out[1]), Scalar(1), 0.0));
  CHECK(out[0].dot(out[1]).is_zero(0.0));
  CHECK(Scalar::eq(out[1].at(1, 0), Scalar(1), 0.0));

  auto dep = orthonormalize({v1, v3});
  CHECK(dep.size() == 1);
  CHECK(Scalar::eq(dep[0].at(0, 0), Scalar(1), 0.0));
}

TEST_CASE("psd_certificate examples") {
  CHECK(psd_certificate(Matrix::identity(2)).lambda_min ==
        doctest::Approx(1.0));
  Matrix d(2, 2);
  d.at(0, 0) = Scalar(1);
  auto rd = psd_certificate(d);
  CHECK(rd.lambda_min == doctest::Approx(0.0));
  CHECK(rd.exact_certified);
  CHECK(rd.exact_psd);
  auto rn = psd_certificate(m2(1, 2, 2, 1));
  CHECK(rn.lambda_min == doctest::Approx(-1.0));
  CHECK(rn.exact_certified);
  CHECK(!rn.exact_psd);
  CHECK_THROWS_WITH_AS(psd_certificate(m2(1, 2, 3, 1)), doctest::Contains("NotHermitian"),
                       Error);
}

TEST_CASE("psd_certificate exact with radical entries") {
  Scalar r2 = Scalar(2).sqrt_nonneg();
  // [[2, r2],[r2, 1]] has det 0, trace 3: PSD with a kernel vector
  auto r = psd_certificate(m2(Scalar(2), r2, r2, Scalar(1)));
  CHECK(r.exact_certified);
  CHECK(r.exact_psd);
  CHECK(r.lambda_min > -1e-12);
}

TEST_CASE("group_average of Z/2 actions") {
  std::vector<std::vector<int>> z2 = {{0, 1}, {1, 0}};
  // trivial action on C^2
  auto avg = group_average({Matrix::identity(2), Matrix::identity(2)}, z2);
  CHECK(approx_eq(avg, Matrix::identity(2), 0.0));
  // sign action on C
  Matrix one = Matrix::identity(1);
  auto sgn = group_average({one, one * Scalar(-1)}, z2);
  CHECK(sgn.is_zero(0.0));
  // not a representation
  CHECK_THROWS_AS(group_average({one, one * Scalar(2)}, z2), Error);
}

TEST_CASE("group_average of the regular representation of Z/3") {
  std::vector<std::vector<int>> z3 = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  std::vector<Matrix> reg;
  for (int g = 0; g < 3; ++g) {
    Matrix p(3, 3);
    for (int h = 0; h < 3; ++h) p.at(z3[g][h], h) = Scalar(1);
    reg.push_back(p);
  }
  Matrix avg = group_average(reg, z3);
  CHECK(approx_eq(avg * avg, avg, 0.0));
  for (auto& p : reg) CHECK(approx_eq(p * avg, avg, 0.0));
  CHECK(rank(avg) == 1);
}

TEST_CASE("solve_in_span recovers coefficients") {
  Matrix b(3, 2);
  b.at(0, 0) = Scalar(1);
  b.at(1, 0) = Scalar(1);
  b.at(2, 1) = Scalar(1);
  Matrix v(3, 1);
  v.at(0, 0) = Scalar(2);
  v.at(1, 0) = Scalar(2);
  v.at(2, 0) = Scalar(-3);
  Matrix c = solve_in_span(b, v);
  CHECK(approx_eq(b * c, v, 0.0));
  Matrix bad(3, 1);
  bad.at(0, 0) = Scalar(1);
  CHECK_THROWS_AS(solve_in_span(b, bad), Error);
}
