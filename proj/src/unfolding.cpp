#include "parabolic/unfolding.hpp"

#include <algorithm>
#include <cmath>

#include "parabolic/error.hpp"

namespace parabolic {

namespace {

// δ^s·a, known to order a.order() + s.
Series raise(const Series& a, int s) {
  Series r(a.order() + s);
  for (int d = 0; d <= a.order(); ++d) r[d + s] = a[d];
  return r;
}

Complex root_of_unity(int n, int m) { return std::polar(1.0, 2 * pi * m / n); }

std::vector<double> ray_angles(double offset, int count) {
  std::vector<double> a;
  for (int j = 0; j < count; ++j) {
    double x = std::fmod(offset + 2 * pi * j / count, 2 * pi);
    if (x < 0) x += 2 * pi;
    a.push_back(x);
  }
  std::sort(a.begin(), a.end());
  return a;
}

bool is_canonical_sigma(int k, const Series& sigma, double tol) {
  if (std::abs(sigma[0] - 1.0) > tol) return false;
  for (int d = k + 1; d <= sigma.order(); d += k + 1)
    if (std::abs(sigma[d]) > tol * std::max(1.0, sigma.max_abs())) return false;
  return true;
}

}  // namespace

EigenvalueFunction EigenvalueFunction::from_sigma(int k, const Series& sigma) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (!sigma.is_unit()) throw Error(ErrorCode::NotAUnit, "sigma must be a unit");
  EigenvalueFunction e;
  e.k = k;
  e.sigma = sigma;
  e.lambda = double(k + 1) * raise(sigma, k);
  e.canonical = is_canonical_sigma(k, sigma, match_tol);
  return e;
}

EigenvalueFunction EigenvalueFunction::from_lambda(int k, const Series& lambda) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (lambda.order() < k) throw Error(ErrorCode::InvalidArgument, "eigenvalue function truncated below degree k");
  for (int d = 0; d < k; ++d)
    if (std::abs(lambda[d]) > unit_tol) throw Error(ErrorCode::InvalidArgument, "eigenvalue function must vanish to order k");
  return from_sigma(k, shift(lambda, -k) * Complex(1.0 / (k + 1)));
}

double series_distance(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  double worst = 0.0;
  for (int d = 0; d <= n; ++d)
    worst = std::max(worst, std::abs(a[d] - b[d]) / std::max({1.0, std::abs(a[d]), std::abs(b[d])}));
  return worst;
}

AxesReport check_generic(const FamilySpec& spec) {
  const int k = spec.k;
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  const Bivariate& w = spec.omega;
  if (w.z_order() < k + 1) throw Error(ErrorCode::NotGeneric, "z truncation below k+1");
  for (int m = 0; m <= k; ++m)
    if (std::abs(w(m, 0)) > unit_tol) throw Error(ErrorCode::NotGeneric, "omega_0 vanishes to order below k+1");
  if (std::abs(w(k + 1, 0)) <= unit_tol) throw Error(ErrorCode::NotGeneric, "omega_0 vanishes to order above k+1");
  if (std::abs(w(0, 1)) <= unit_tol) throw Error(ErrorCode::NotGeneric, "d omega/d eps vanishes at the origin");
  AxesReport r;
  r.B = w(k + 1, 0);
  r.A = -w(0, 1);
  const double b = std::arg(r.B);
  r.repelling = ray_angles(-b / k, k);
  r.attracting = ray_angles((pi - b) / k, k);
  r.explosion = ray_angles((std::arg(r.A) - b) / (k + 1), k + 1);
  return r;
}

Series implicit_parameter(const FamilySpec& spec) {
  check_generic(spec);
  const Bivariate& w = spec.omega;
  const int n = w.z_order();
  const int ne = w.eps_order();
  Series f(n);
  for (int round = detail::newton_rounds(n); round > 0; --round) {
    Series value = w.column(ne);
    Series slope(n);
    for (int q = ne - 1; q >= 0; --q) {
      slope = slope * f + value;
      value = value * f + w.column(q);
    }
    f = f - value * reciprocal(slope);
  }
  return f;
}

FamilySpec factor_family(const FamilySpec& spec, int branch) {
  const int k = spec.k;
  const Series f = implicit_parameter(spec);
  const Series h = shift(f, -(k + 1));
  const Complex c = h[0];
  const Complex lead = std::pow(c, 1.0 / (k + 1)) * root_of_unity(k + 1, ((branch % (k + 1)) + k + 1) % (k + 1));
  const Series g = raise(lead * kth_root(h * (1.0 / c), k + 1), 1);
  const Series ginv = reversion(g);
  const Series dg = derivative(g);
  const int nt = dg.order();
  const int v0 = nt - (k + 1);
  if (v0 < 0) throw Error(ErrorCode::InvalidArgument, "z truncation too low to factor");

  const int columns = v0 / (k + 1) + 1;
  Bivariate v(v0, columns - 1);
  Series prev(nt);
  for (int q = 0; q < columns; ++q) {
    Series pushed(nt);
    if (q <= spec.omega.eps_order()) pushed = compose(mul(dg, spec.omega.column(q).truncated(nt)), ginv.truncated(nt));
    Series next = shift(pushed + prev, -(k + 1));
    for (int m = 0; m <= next.order(); ++m) v(m, q) = next[m];
    prev = next;
  }

  FamilySpec out = spec;
  out.factored = FamilySpec::Factored{v, g, branch};
  return out;
}

EigenvalueFunction eigenvalue_function(const FamilySpec& spec) {
  if (!spec.factored) throw Error(ErrorCode::InvalidArgument, "family is not factored");
  const int k = spec.k;
  const Bivariate& v = spec.factored->v;
  const int n = v.z_order();
  Series sigma(n);
  for (int q = 0; q <= v.eps_order() && (k + 1) * q <= n; ++q)
    for (int m = 0; m + (k + 1) * q <= n; ++m) sigma[m + (k + 1) * q] += v(m, q);
  return EigenvalueFunction::from_sigma(k, sigma);
}

Series residue_sum(const EigenvalueFunction& lambda) {
  const int k = lambda.k;
  const Series s = reciprocal(double(k + 1) * lambda.sigma);
  const int n = s.order() >= k ? (s.order() - k) / (k + 1) : -1;
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "eigenvalue function truncated below degree 2k");
  Series a(n);
  for (int p = 0; p <= n; ++p) a[p] = double(k + 1) * s[k + (k + 1) * p];
  return a;
}

Canonicalization canonicalize(const EigenvalueFunction& lambda) {
  const int k = lambda.k;
  const Series& sigma = lambda.sigma;
  const int ns = sigma.order();
  const Complex a = std::pow(sigma[0], -1.0 / k);

  Canonicalization out;
  for (int m = 0; m < k; ++m) out.linear_choices.push_back(a * root_of_unity(k, m));

  Series sigma1 = std::pow(a, k) * scale_argument(sigma, a);
  sigma1[0] = 1.0;
  const Series a0 = class_split(sigma1, k + 1)[0];
  const Series ell = raise(substitute_power(kth_root(a0, k), k + 1, ns), 1);
  out.h = a * reversion(ell);

  const Series u = shift(out.h, -1);
  Series canon = mul(power(u, k), compose(sigma, out.h).truncated(ns));
  canon[0] = 1.0;
  out.canonical = EigenvalueFunction::from_sigma(k, canon);
  return out;
}

std::optional<Complex> equivalent_fixed_parameter(const EigenvalueFunction& l1, const EigenvalueFunction& l2,
                                                  double tol) {
  if (l1.k != l2.k) throw Error(ErrorCode::CodimensionMismatch, "codimensions differ");
  const int k = l1.k;
  std::vector<Complex> matches;
  for (int m = 0; m <= k; ++m) {
    const Complex zeta = root_of_unity(k + 1, m);
    if (series_distance(l2.lambda, scale_argument(l1.lambda, zeta)) <= tol) matches.push_back(zeta);
  }
  if (matches.size() > 1) throw AmbiguousMatch(matches);
  if (matches.empty()) return std::nullopt;
  return matches.front();
}

std::optional<FullEquivalence> equivalent_full(const EigenvalueFunction& l1, const EigenvalueFunction& l2,
                                               double tol) {
  if (l1.k != l2.k) throw Error(ErrorCode::CodimensionMismatch, "codimensions differ");
  const int k = l1.k;
  const Canonicalization c1 = canonicalize(l1);
  const Canonicalization c2 = canonicalize(l2);
  std::vector<Complex> matches;
  for (int m = 0; m < k; ++m) {
    const Complex nu = root_of_unity(k, m);
    if (series_distance(c1.canonical.sigma, scale_argument(c2.canonical.sigma, nu)) <= tol) matches.push_back(nu);
  }
  if (matches.empty()) return std::nullopt;
  const Complex nu = matches.front();
  return FullEquivalence{nu, compose(c2.h, nu * reversion(c1.h)), matches};
}

bool is_model_equivalent(const EigenvalueFunction& lambda, double tol) {
  const int k = lambda.k;
  const double scale = lambda.lambda.max_abs();
  for (int d = 0; d <= lambda.lambda.order(); ++d)
    if (d % (k + 1) != k && std::abs(lambda.lambda[d]) > tol * scale) return false;
  return true;
}

FamilySpec realize(const EigenvalueFunction& lambda, int eps_order) {
  const int k = lambda.k;
  const Series& sigma = lambda.sigma;
  const int ns = sigma.order();
  FamilySpec spec;
  spec.k = k;
  spec.omega = Bivariate(ns + k + 1, std::max(eps_order, 1));
  Bivariate v(ns, 0);
  for (int m = 0; m <= ns; ++m) {
    spec.omega(m + k + 1, 0) = sigma[m];
    spec.omega(m, 1) = -sigma[m];
    v(m, 0) = sigma[m];
  }
  spec.factored = FamilySpec::Factored{v, Series::identity(ns + k + 1), 0};
  return spec;
}

PeriodGon period_gon(const EigenvalueFunction& lambda, Complex epsilon) {
  if (epsilon == Complex(0.0, 0.0)) throw Error(ErrorCode::DegenerateParameter, "epsilon is zero");
  const int k = lambda.k;
  const double r = std::pow(std::abs(epsilon), 1.0 / (k + 1));
  std::vector<Complex> sing(k + 1), eig(k + 1);
  for (int l = 0; l <= k; ++l) {
    sing[l] = std::polar(r, (std::arg(epsilon) + 2 * pi * l) / (k + 1));
    eig[l] = lambda.lambda(sing[l]);
  }
  return make_period_gon(k, std::move(sing), std::move(eig));
}

}  // namespace parabolic
