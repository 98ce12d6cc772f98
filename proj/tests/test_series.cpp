#include <doctest.h>

#include <cmath>

#include "parabolic/series.hpp"
#include "support.hpp"

using namespace parabolic;
using support::max_diff;
using support::random_complex;
using support::random_unit;

namespace {

// Coefficients in the unit disk.
Series random_disk(int order, double decay = 1.0) {
  Series s(order);
  double r = 1.0;
  for (int d = 0; d <= order; ++d, r *= decay) s[d] = random_complex(r);
  return s;
}

// |c_0| = 1, |c_d| ≤ decay^d.
Series random_normalized_unit(int order, double decay) {
  Series s = random_disk(order, decay);
  s[0] = std::polar(1.0, support::uniform(0.0, 2 * pi));
  return s;
}

double relative(const Series& a, const Series& b) {
  return max_diff(a, b) / std::max(1.0, std::max(a.max_abs(), b.max_abs()));
}

}  // namespace

TEST_CASE("products of small polynomials") {
  CHECK(max_diff(Series::constant(1.0, 3) * Series::constant(1.0, 3), Series::constant(1.0, 3)) == 0.0);
  const Series p = Series({1.0, 1.0}, 4) * Series({1.0, -1.0}, 4);
  const Series expected({1.0, 0.0, -1.0, 0.0, 0.0}, 4);
  CHECK(max_diff(p, expected) == 0.0);
  CHECK((Series(6) * Series(3)).order() == 3);
}

TEST_CASE("product agrees with pointwise evaluation up to the dropped tail") {
  const int n = 12;
  for (int trial = 0; trial < 20; ++trial) {
    const Series a = random_disk(n), b = random_disk(n);
    const Series p = a * b;
    for (int s = 0; s < 10; ++s) {
      const Complex x = random_complex(0.1);
      double tail = 0.0;
      for (int d = n + 1; d <= 2 * n; ++d) tail += (d + 1) * std::pow(std::abs(x), d);
      const Complex exact = a(x) * b(x);
      CHECK(std::abs(p(x) - exact) <= tail + 1e-10 * std::abs(exact) + 1e-300);
    }
  }
}

TEST_CASE("reciprocal") {
  CHECK(max_diff(reciprocal(Series::constant(1.0, 5)), Series::constant(1.0, 5)) == 0.0);
  CHECK(max_diff(reciprocal(Series({1.0, 1.0}, 3)), Series({1.0, -1.0, 1.0, -1.0}, 3)) == 0.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Series a = random_normalized_unit(30, 0.5);
    CHECK(max_diff(a * reciprocal(a), Series::constant(1.0, 30)) < 1e-12);
  }
  CHECK_THROWS_AS(reciprocal(Series({1e-13, 1.0}, 3)), Error);
}

TEST_CASE("composition") {
  const Series lambda = random_unit(10, 0.8);
  CHECK(max_diff(compose(lambda, Series::identity(10)), lambda) == 0.0);

  const Series square = Series::monomial(2, 1.0, 6);
  CHECK(max_diff(compose(square, Series({0.0, 1.0, 1.0}, 6)), Series({0.0, 0.0, 1.0, 2.0, 1.0}, 6)) < 1e-15);

  const int n = 12;
  Series exp_series(n), log1p(n);
  double factorial = 1.0;
  for (int d = 0; d <= n; ++d) {
    if (d > 0) factorial *= d;
    exp_series[d] = 1.0 / factorial;
    if (d > 0) log1p[d] = (d % 2 ? 1.0 : -1.0) / d;
  }
  CHECK(max_diff(compose(exp_series, log1p), Series({1.0, 1.0}, n)) < 1e-12);

  try {
    compose(lambda, Series({0.5, 1.0}, 10));
    FAIL("a non-zero constant term must be rejected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonZeroConstantTerm);
  }
}

TEST_CASE("composition is associative") {
  for (int trial = 0; trial < 20; ++trial) {
    const Series outer = random_disk(16);
    Series middle = random_disk(16, 0.8), inner = random_disk(16, 0.8);
    middle[0] = inner[0] = 0.0;
    CHECK(relative(compose(compose(outer, middle), inner), compose(outer, compose(middle, inner))) < 1e-12);
  }
}

TEST_CASE("reversion") {
  CHECK(max_diff(reversion(Series::identity(9)), Series::identity(9)) < 1e-15);

  // Lagrange inversion of δ + cδ³: coefficient of δ^{2m+1} is (−c)^m C(3m, m)/(2m+1).
  const Complex c(0.3, -0.2);
  const int n = 15;
  const Series inverse = reversion(Series({0.0, 1.0, 0.0, c}, n));
  Series oracle(n);
  for (int m = 0; 2 * m + 1 <= n; ++m) {
    double binom = 1.0;
    for (int i = 1; i <= m; ++i) binom = binom * (2 * m + i) / i;
    oracle[2 * m + 1] = std::pow(-c, m) * binom / double(2 * m + 1);
  }
  CHECK(max_diff(inverse, oracle) < 1e-13);
  CHECK(std::abs(inverse[5] - 3.0 * c * c) < 1e-14);

  for (int trial = 0; trial < 20; ++trial) {
    const Series a = shift(random_normalized_unit(40, 0.25), 1);
    const Series b = reversion(a);
    CHECK(max_diff(compose(a, b), Series::identity(40)) < 1e-11);
    CHECK(max_diff(reversion(b), a) < 1e-10);
  }
  CHECK_THROWS_AS(reversion(Series({0.0, 1e-14, 1.0}, 4)), Error);
}

TEST_CASE("k-th roots") {
  for (int k = 1; k <= 5; ++k) CHECK(max_diff(kth_root(Series::constant(1.0, 8), k), Series::constant(1.0, 8)) < 1e-15);
  CHECK(max_diff(kth_root(Series({1.0, 2.0, 1.0}, 6), 2), Series({1.0, 1.0}, 6)) < 1e-14);
  for (int k = 1; k <= 6; ++k) {
    Series a = random_unit(30, 0.6);
    a[0] = 1.0;
    CHECK(max_diff(power(kth_root(a, k), k), a) < 1e-11);
  }
  try {
    kth_root(Series({2.0, 1.0}, 3), 2);
    FAIL("constant term 2 must be rejected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadConstantTerm);
  }
}

TEST_CASE("class split") {
  const auto parts = class_split(Series({1.0, 1.0, 1.0, 1.0}, 3), 2);
  REQUIRE(parts.size() == 2);
  CHECK(max_diff(parts[0], Series({1.0, 1.0}, 1)) == 0.0);
  CHECK(max_diff(parts[1], Series({1.0, 1.0}, 1)) == 0.0);

  for (int k = 1; k <= 5; ++k) {
    const auto split = class_split(Series::monomial(k, 1.0, 3 * (k + 1)), k + 1);
    for (int j = 0; j <= k; ++j) CHECK(max_diff(split[j], Series::constant(j == k ? 1.0 : 0.0, split[j].order())) == 0.0);
  }
  for (int m = 2; m <= 7; ++m) {
    const Series a = random_disk(29);
    CHECK(max_diff(reassemble(class_split(a, m), 29), a) == 0.0);
  }
}

TEST_CASE("ring axioms") {
  for (int trial = 0; trial < 30; ++trial) {
    const Series a = random_disk(20), b = random_disk(20), c = random_disk(20);
    CHECK(relative((a * b) * c, a * (b * c)) < 1e-12);
    CHECK(relative(a * (b + c), a * b + a * c) < 1e-12);
  }
}

TEST_CASE("the scalar type is a template parameter") {
  using LongSeries = TruncatedSeries<long double>;
  LongSeries a(20);
  for (int d = 0; d <= 20; ++d) a[d] = std::complex<long double>(1.0L / (d + 1), 0.5L / (d + 2));
  const LongSeries e = mul(a, reciprocal(a));
  long double worst = std::abs(e[0] - 1.0L);
  for (int d = 1; d <= 20; ++d) worst = std::max(worst, std::abs(e[d]));
  CHECK(worst < 1e-16L);
}
