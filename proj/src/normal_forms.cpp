#include "parabolic/normal_forms.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>

#include "parabolic/error.hpp"

namespace parabolic {

namespace {

Eigen::VectorXcd newton_to_monomial(const Eigen::VectorXcd& dd, const std::vector<Complex>& x) {
  const int n = static_cast<int>(x.size());
  Eigen::VectorXcd q = Eigen::VectorXcd::Zero(n);
  q[0] = dd[n - 1];
  for (int m = n - 2; m >= 0; --m) {
    for (int j = n - 1; j >= 1; --j) q[j] = q[j - 1] - x[m] * q[j];
    q[0] = -x[m] * q[0] + dd[m];
  }
  return q;
}

// Divided differences f[x_0..x_m] of a polynomial from its coefficients:
// f[x_0..x_m] = Σ_d c_d h_{d−m}(x_0..x_m) with h the complete homogeneous
// symmetric polynomials. No differences of nearby values are formed.
Eigen::VectorXcd confluent_differences(const Series& f, const std::vector<Complex>& x) {
  const int n = static_cast<int>(x.size());
  const int N = f.order();
  Eigen::VectorXcd dd = Eigen::VectorXcd::Zero(n);
  std::vector<Complex> h(N + 1);
  h[0] = 1.0;
  for (int r = 1; r <= N; ++r) h[r] = h[r - 1] * x[0];
  for (int m = 0; m < n; ++m) {
    if (m > 0)
      for (int r = 1; r <= N; ++r) h[r] += x[m] * h[r - 1];
    for (int d = m; d <= N; ++d) dd[m] += f[d] * h[d - m];
  }
  return dd;
}

Eigen::VectorXcd value_differences(const Series& f, const std::vector<Complex>& x) {
  const int n = static_cast<int>(x.size());
  Eigen::VectorXcd t(n);
  for (int i = 0; i < n; ++i) t[i] = f(x[i]);
  Eigen::VectorXcd dd(n);
  dd[0] = t[0];
  for (int m = 1; m < n; ++m) {
    for (int i = n - 1; i >= m; --i) t[i] = (t[i] - t[i - 1]) / (x[i] - x[i - m]);
    dd[m] = t[m];
  }
  return dd;
}

// Growth radius R with |t_d| ≲ |t_0| R^{−d}; 1 for a constant.
double growth_radius(const Series& t) {
  double g = 0.0;
  const double t0 = std::abs(t[0]);
  for (int d = 1; d <= t.order(); ++d)
    if (t[d] != Complex(0.0, 0.0)) g = std::max(g, std::pow(std::abs(t[d]) / t0, 1.0 / d));
  return g > 0.0 ? 1.0 / g : 1.0;
}

PolynomialNF sampled_nf(const Series& target, int k, int eps_order, NFKind kind) {
  const int full = target.order() / (k + 1);
  if (eps_order < 0) eps_order = full;
  const int samples = std::max(4 * (eps_order + 1), full + 1);
  const double rho = std::pow(growth_radius(target), k + 1);

  std::vector<Eigen::VectorXcd> values(samples);
  for (int s = 0; s < samples; ++s) values[s] = lagrange_Q(target, k, std::polar(rho, 2 * pi * s / samples));

  PolynomialNF nf;
  nf.k = k;
  nf.kind = kind;
  std::vector<Series> exact(k + 1, Series(full));
  for (int j = 0; j <= k; ++j)
    for (int n = 0; n <= full; ++n) {
      Complex acc(0.0, 0.0);
      for (int s = 0; s < samples; ++s) acc += values[s][j] * std::polar(1.0, -2 * pi * double(s) * n / samples);
      exact[j][n] = acc / (double(samples) * std::pow(rho, n));
    }

  const Complex probe = std::polar(0.5 * rho, 0.3);
  const Eigen::VectorXcd direct = lagrange_Q(target, k, probe);
  for (int j = 0; j <= k; ++j)
    if (std::abs(exact[j](probe) - direct[j]) > 1e-8 * std::max(1.0, direct.cwiseAbs().maxCoeff()))
      throw Error(ErrorCode::ValidationMismatch, "sampled coefficients disagree with direct interpolation");

  for (int j = 0; j <= k; ++j) {
    Series b(eps_order);
    for (int n = 0; n <= std::min(eps_order, full); ++n) b[n] = exact[j][n];
    nf.coefficients.push_back(b);
  }
  nf.canonical = series_distance(nf.coefficients[0], Series::constant(1.0, eps_order)) <= 1e-10;
  return nf;
}

EigenvalueFunction eigenvalues_of(const FamilySpec& spec) {
  return eigenvalue_function(spec.factored ? spec : factor_family(spec));
}

bool is_kostov_canonical(const KostovNF& nf, double tol) {
  const Series& b0 = nf.b[0];
  for (int d = 0; d <= b0.order(); ++d)
    if (std::abs(b0[d] - (d == 1 ? Complex(-1.0) : Complex(0.0))) > tol) return false;
  return true;
}

}  // namespace

Complex PolynomialNF::evaluate(Complex z, Complex epsilon) const {
  Complex acc(0.0, 0.0);
  for (int j = k; j >= 0; --j) acc = acc * z + coefficients[j](epsilon);
  return acc;
}

std::vector<Complex> roots_of(Complex epsilon, int k) {
  std::vector<Complex> d(k + 1);
  const double r = std::pow(std::abs(epsilon), 1.0 / (k + 1));
  for (int l = 0; l <= k; ++l) d[l] = std::polar(r, (std::arg(epsilon) + 2 * pi * l) / (k + 1));
  return d;
}

Eigen::VectorXcd interpolate(const Series& target, std::vector<Complex> nodes) {
  if (nodes.empty()) throw Error(ErrorCode::InvalidArgument, "no interpolation nodes");
  std::sort(nodes.begin(), nodes.end(), [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  double scale = 0.0, separation = 1e300;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    scale = std::max(scale, std::abs(nodes[i]));
    for (std::size_t j = i + 1; j < nodes.size(); ++j) separation = std::min(separation, std::abs(nodes[i] - nodes[j]));
  }
  const bool coalesced = nodes.size() > 1 && separation < coalescence_ratio * scale;
  const bool confluent = scale == 0.0 || coalesced;
  return newton_to_monomial(confluent ? confluent_differences(target, nodes) : value_differences(target, nodes), nodes);
}

Eigen::VectorXcd lagrange_Q(const Series& sigma, int k, Complex epsilon) {
  return interpolate(sigma, roots_of(epsilon, k));
}

Eigen::VectorXcd lagrange_Q_determinant(const Series& sigma, int k, Complex epsilon) {
  const std::vector<Complex> x = roots_of(epsilon, k);
  const int n = k + 1;
  Eigen::MatrixXcd v(n, n);
  Eigen::VectorXcd w(n);
  for (int i = 0; i < n; ++i) {
    w[i] = sigma(x[i]);
    Complex p(1.0, 0.0);
    for (int j = 0; j < n; ++j, p *= x[i]) v(i, j) = p;
  }
  const Complex denominator = v.fullPivLu().determinant();
  Eigen::VectorXcd q(n);
  for (int j = 0; j < n; ++j) {
    Eigen::MatrixXcd vj = v;
    vj.col(j) = w;
    q[j] = vj.fullPivLu().determinant() / denominator;
  }
  return q;
}

PolynomialNF polynomial_nf(const EigenvalueFunction& lambda, int eps_order) {
  return sampled_nf(lambda.sigma, lambda.k, eps_order, NFKind::Polynomial);
}

PolynomialNF polynomial_nf(const FamilySpec& spec, int eps_order) {
  return polynomial_nf(eigenvalues_of(spec), eps_order);
}

PolynomialNF rational_nf(const EigenvalueFunction& lambda, int eps_order) {
  return sampled_nf(reciprocal(lambda.sigma), lambda.k, eps_order, NFKind::Rational);
}

PolynomialNF rational_nf(const FamilySpec& spec, int eps_order) { return rational_nf(eigenvalues_of(spec), eps_order); }

CanonicalChange poly_to_canonical_parameter(const PolynomialNF& nf) {
  const int k = nf.k;
  const Series& c = nf.coefficients[0];
  if (!c.is_unit()) throw Error(ErrorCode::NotAUnit, "Q_0(0) vanishes");
  const Complex c0 = c[0];
  const Complex s = std::pow(c0, 1.0 / k);
  const Series r = kth_root(c * (1.0 / c0), k);

  CanonicalChange out;
  out.z_scale = nf.kind == NFKind::Polynomial ? s * r : reciprocal(s * r);
  Series phi(c.order() + 1);
  const Series tail = power(out.z_scale, k + 1);
  for (int d = 0; d <= tail.order(); ++d) phi[d + 1] = tail[d];
  out.parameter = phi;

  const Series phi_inv = reversion(phi);
  const Series inv_c = reciprocal(c);
  const Series inv_scale = reciprocal(out.z_scale);
  out.nf.k = k;
  out.nf.kind = nf.kind;
  // Q̃_0 = c/c exactly; forming c·(1/c) and composing would only add rounding
  // amplified by |φ′(0)|^{−d} at degree d.
  out.nf.coefficients.push_back(Series::constant(1.0, std::min(c.order(), phi_inv.order())));
  Series factor = mul(inv_c, inv_scale);
  for (int j = 1; j <= k; ++j) {
    out.nf.coefficients.push_back(compose(mul(nf.coefficients[j], factor), phi_inv));
    factor = mul(factor, inv_scale);
  }
  out.nf.canonical =
      series_distance(out.nf.coefficients[0], Series::constant(1.0, out.nf.coefficients[0].order())) <= 1e-10;
  return out;
}

KostovNF kostov_rotate(const KostovNF& nf, int m) {
  const int k = nf.k;
  const Complex nu = std::polar(1.0, 2 * pi * m / k);
  KostovNF out;
  out.k = k;
  for (int j = 0; j < k; ++j) out.b.push_back(std::pow(nu, 1 - j) * scale_argument(nf.b[j], 1.0 / nu));
  out.A = scale_argument(nf.A, 1.0 / nu);
  return out;
}

std::optional<int> kostov_check(const KostovNF& nf1, const KostovNF& nf2, double tol) {
  if (nf1.k != nf2.k) throw Error(ErrorCode::CodimensionMismatch, "codimensions differ");
  const int k = nf1.k;
  for (const KostovNF* nf : {&nf1, &nf2}) {
    if (static_cast<int>(nf->b.size()) != k) throw Error(ErrorCode::InvalidArgument, "expected k coefficients b_0..b_{k-1}");
    for (const Series& b : nf->b)
      if (std::abs(b[0]) > tol) throw Error(ErrorCode::InvalidArgument, "P_0 must equal z^{k+1}");
    if (!is_kostov_canonical(*nf, tol)) throw Error(ErrorCode::NotCanonical, "b_0 differs from -eps");
  }
  for (int m = 0; m < k; ++m) {
    const KostovNF r = kostov_rotate(nf1, m);
    bool same = series_distance(r.A, nf2.A) <= tol;
    for (int j = 0; j < k && same; ++j) same = series_distance(r.b[j], nf2.b[j]) <= tol;
    if (same) return m;
  }
  return std::nullopt;
}

}  // namespace parabolic
