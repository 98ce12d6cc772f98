#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "parabolic/error.hpp"

namespace parabolic {

inline constexpr double unit_tol = 1e-12;

// Complex power series known up to (and including) degree `order()`.
template <typename Real>
class TruncatedSeries {
public:
  using Scalar = std::complex<Real>;
  using Coefficients = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  TruncatedSeries() : c_(Coefficients::Zero(1)) {}
  explicit TruncatedSeries(int order) : c_(Coefficients::Zero(std::max(order, 0) + 1)) {}
  explicit TruncatedSeries(Coefficients c) : c_(std::move(c)) {
    if (c_.size() == 0) c_ = Coefficients::Zero(1);
  }
  TruncatedSeries(std::initializer_list<Scalar> c, int order) : c_(Coefficients::Zero(order + 1)) {
    int d = 0;
    for (const Scalar& x : c) {
      if (d > order) break;
      c_[d++] = x;
    }
  }

  static TruncatedSeries constant(Scalar value, int order) {
    TruncatedSeries s(order);
    s.c_[0] = value;
    return s;
  }
  static TruncatedSeries monomial(int degree, Scalar value, int order) {
    TruncatedSeries s(order);
    if (degree <= order) s.c_[degree] = value;
    return s;
  }
  static TruncatedSeries identity(int order) { return monomial(1, Scalar(1), order); }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Coefficients& coefficients() const { return c_; }
  Coefficients& coefficients() { return c_; }

  Scalar operator[](int d) const { return d >= 0 && d <= order() ? c_[d] : Scalar(0); }
  Scalar& operator[](int d) { return c_[d]; }

  // Horner evaluation of the truncation as a polynomial.
  Scalar operator()(Scalar x) const {
    Scalar acc(0);
    for (int d = order(); d >= 0; --d) acc = acc * x + c_[d];
    return acc;
  }

  TruncatedSeries truncated(int order) const {
    TruncatedSeries s(order);
    const int n = std::min(order, this->order());
    s.c_.head(n + 1) = c_.head(n + 1);
    return s;
  }

  bool is_unit(Real tol = Real(unit_tol)) const { return std::abs(c_[0]) > tol; }

  Real max_abs() const { return c_.cwiseAbs().maxCoeff(); }

  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
  TruncatedSeries& operator*=(Scalar s) {
    c_ *= s;
    return *this;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    return TruncatedSeries(Coefficients(a.c_.head(n + 1) + b.c_.head(n + 1)));
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    return TruncatedSeries(Coefficients(a.c_.head(n + 1) - b.c_.head(n + 1)));
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a) { return TruncatedSeries(Coefficients(-a.c_)); }
  friend TruncatedSeries operator*(Scalar s, const TruncatedSeries& a) { return TruncatedSeries(Coefficients(s * a.c_)); }
  friend TruncatedSeries operator*(const TruncatedSeries& a, Scalar s) { return s * a; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

private:
  Coefficients c_;
};

using Series = TruncatedSeries<double>;

template <typename Real>
TruncatedSeries<Real> mul(const TruncatedSeries<Real>& a, const TruncatedSeries<Real>& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries<Real> r(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == typename TruncatedSeries<Real>::Scalar(0)) continue;
    for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

template <typename Real>
TruncatedSeries<Real> reciprocal(const TruncatedSeries<Real>& a) {
  if (!a.is_unit()) throw Error(ErrorCode::NotAUnit, "constant term vanishes");
  const int n = a.order();
  TruncatedSeries<Real> r(n);
  const auto inv0 = typename TruncatedSeries<Real>::Scalar(1) / a[0];
  r[0] = inv0;
  for (int d = 1; d <= n; ++d) {
    typename TruncatedSeries<Real>::Scalar acc(0);
    for (int j = 1; j <= d; ++j) acc += a[j] * r[d - j];
    r[d] = -acc * inv0;
  }
  return r;
}

template <typename Real>
TruncatedSeries<Real> derivative(const TruncatedSeries<Real>& a) {
  const int n = a.order();
  TruncatedSeries<Real> r(std::max(n - 1, 0));
  for (int d = 1; d <= n; ++d) r[d - 1] = Real(d) * a[d];
  return r;
}

// Multiplication by δ^shift (shift may be negative: division by δ^{-shift},
// dropping the low coefficients).
template <typename Real>
TruncatedSeries<Real> shift(const TruncatedSeries<Real>& a, int shift) {
  if (shift >= 0) {
    TruncatedSeries<Real> r(a.order());
    for (int d = 0; d + shift <= a.order(); ++d) r[d + shift] = a[d];
    return r;
  }
  const int n = std::max(a.order() + shift, 0);
  TruncatedSeries<Real> r(n);
  for (int d = 0; d <= n; ++d) r[d] = a[d - shift];
  return r;
}

// a(δ) ↦ a(sδ)
template <typename Real>
TruncatedSeries<Real> scale_argument(const TruncatedSeries<Real>& a, typename TruncatedSeries<Real>::Scalar s) {
  TruncatedSeries<Real> r(a.order());
  typename TruncatedSeries<Real>::Scalar p(1);
  for (int d = 0; d <= a.order(); ++d, p *= s) r[d] = a[d] * p;
  return r;
}

template <typename Real>
TruncatedSeries<Real> power(const TruncatedSeries<Real>& a, int k) {
  TruncatedSeries<Real> r = TruncatedSeries<Real>::constant(1, a.order());
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

template <typename Real>
TruncatedSeries<Real> compose(const TruncatedSeries<Real>& outer, const TruncatedSeries<Real>& inner) {
  if (std::abs(inner[0]) > Real(0)) throw Error(ErrorCode::NonZeroConstantTerm, "inner series must vanish at 0");
  const int n = std::min(outer.order(), inner.order());
  TruncatedSeries<Real> r = TruncatedSeries<Real>::constant(outer[n], n);
  const TruncatedSeries<Real> in = inner.truncated(n);
  for (int d = n - 1; d >= 0; --d) {
    r = mul(r, in);
    r[0] += outer[d];
  }
  return r;
}

namespace detail {
inline int newton_rounds(int order) {
  int rounds = 2;
  for (int m = 1; m < order + 1; m *= 2) ++rounds;
  return rounds;
}
}  // namespace detail

template <typename Real>
TruncatedSeries<Real> reversion(const TruncatedSeries<Real>& a) {
  if (std::abs(a[0]) > Real(0)) throw Error(ErrorCode::NonZeroConstantTerm, "series to revert must vanish at 0");
  if (std::abs(a[1]) <= Real(unit_tol)) throw Error(ErrorCode::NotInvertible, "linear coefficient vanishes");
  using S = TruncatedSeries<Real>;
  const int n = a.order();
  const S da = derivative(a);
  const S id = S::identity(n);
  S b = S::monomial(1, typename S::Scalar(1) / a[1], n);
  for (int round = detail::newton_rounds(n); round > 0; --round) {
    const S residual = compose(a, b) - id;
    const S slope = compose(da, b).truncated(n);
    b = b - mul(residual, reciprocal(slope));
    b[0] = 0;
  }
  return b;
}

template <typename Real>
TruncatedSeries<Real> kth_root(const TruncatedSeries<Real>& a, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "root index must be positive");
  if (std::abs(a[0] - typename TruncatedSeries<Real>::Scalar(1)) > Real(unit_tol))
    throw Error(ErrorCode::BadConstantTerm, "constant term must be 1");
  using S = TruncatedSeries<Real>;
  const int n = a.order();
  S x = S::constant(1, n);
  if (k == 1) return a;
  for (int round = detail::newton_rounds(n); round > 0; --round) {
    const S pk1 = power(x, k - 1);
    const S residual = mul(pk1, x) - a;
    x = x - mul(residual, reciprocal(Real(k) * pk1));
  }
  return x;
}

// a(δ) = Σ_j δ^j a_j(δ^m), j = 0..m-1.
template <typename Real>
std::vector<TruncatedSeries<Real>> class_split(const TruncatedSeries<Real>& a, int modulus) {
  if (modulus < 2) throw Error(ErrorCode::InvalidArgument, "modulus must be at least 2");
  std::vector<TruncatedSeries<Real>> parts;
  parts.reserve(modulus);
  for (int j = 0; j < modulus; ++j) {
    const int n = j <= a.order() ? (a.order() - j) / modulus : 0;
    TruncatedSeries<Real> p(n);
    for (int q = 0; j + modulus * q <= a.order(); ++q) p[q] = a[j + modulus * q];
    parts.push_back(std::move(p));
  }
  return parts;
}

template <typename Real>
TruncatedSeries<Real> reassemble(const std::vector<TruncatedSeries<Real>>& parts, int order) {
  const int modulus = static_cast<int>(parts.size());
  TruncatedSeries<Real> a(order);
  for (int j = 0; j < modulus; ++j)
    for (int q = 0; q <= parts[j].order() && j + modulus * q <= order; ++q) a[j + modulus * q] = parts[j][q];
  return a;
}

// a(δ) ↦ a(δ^m), truncated at `order`.
template <typename Real>
TruncatedSeries<Real> substitute_power(const TruncatedSeries<Real>& a, int m, int order) {
  TruncatedSeries<Real> r(order);
  for (int q = 0; q <= a.order() && m * q <= order; ++q) r[m * q] = a[q];
  return r;
}

// Coefficients c_{m,n} of z^m ε^n, 0 ≤ m ≤ N_z, 0 ≤ n ≤ N_ε.
template <typename Real>
class BivariateSeries {
public:
  using Scalar = std::complex<Real>;
  using Coefficients = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  BivariateSeries() : c_(Coefficients::Zero(1, 1)) {}
  BivariateSeries(int nz, int neps) : c_(Coefficients::Zero(nz + 1, neps + 1)) {}
  explicit BivariateSeries(Coefficients c) : c_(std::move(c)) {}

  int z_order() const { return static_cast<int>(c_.rows()) - 1; }
  int eps_order() const { return static_cast<int>(c_.cols()) - 1; }
  const Coefficients& coefficients() const { return c_; }
  Coefficients& coefficients() { return c_; }

  Scalar operator()(int m, int n) const {
    return m >= 0 && n >= 0 && m <= z_order() && n <= eps_order() ? c_(m, n) : Scalar(0);
  }
  Scalar& operator()(int m, int n) { return c_(m, n); }

  Scalar evaluate(Scalar z, Scalar eps) const {
    Scalar acc(0);
    for (int n = eps_order(); n >= 0; --n) acc = acc * eps + column(n)(z);
    return acc;
  }

  // ∂/∂z at (z, ε)
  Scalar evaluate_dz(Scalar z, Scalar eps) const {
    Scalar acc(0);
    for (int n = eps_order(); n >= 0; --n) acc = acc * eps + derivative(column(n))(z);
    return acc;
  }

  // Coefficient of ε^n as a series in z.
  TruncatedSeries<Real> column(int n) const {
    return TruncatedSeries<Real>(typename TruncatedSeries<Real>::Coefficients(c_.col(n)));
  }

  // Coefficient of z^m as a series in ε.
  TruncatedSeries<Real> row(int m) const {
    return TruncatedSeries<Real>(typename TruncatedSeries<Real>::Coefficients(c_.row(m).transpose()));
  }

private:
  Coefficients c_;
};

using Bivariate = BivariateSeries<double>;

}  // namespace parabolic
