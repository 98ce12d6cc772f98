#include "parabolic/model_field.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "parabolic/error.hpp"

namespace parabolic {

namespace {

constexpr Complex I{0.0, 1.0};

void require_nonzero(const ModelField& field) {
  if (field.epsilon == Complex(0.0, 0.0)) throw Error(ErrorCode::DegenerateParameter, "epsilon is zero");
}

double wrap_angle(double a) {
  a = std::fmod(a, 2 * pi);
  return a < 0 ? a + 2 * pi : a;
}

Complex ipow(Complex z, int n) {
  Complex r(1.0, 0.0);
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

}  // namespace

ModelField::ModelField(int k, Complex epsilon) : k(k), epsilon(epsilon), theta(std::arg(epsilon)) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
}

ModelField ModelField::polar(int k, double modulus, double theta) {
  ModelField f(k, std::polar(modulus, theta));
  f.theta = theta;
  return f;
}

double ModelField::scale() const { return std::pow(modulus(), 1.0 / (k + 1)); }

Complex ModelField::operator()(Complex z) const { return ipow(z, k + 1) - epsilon; }

Complex ModelField::derivative(Complex z) const { return double(k + 1) * ipow(z, k); }

PeriodGon make_period_gon(int k, std::vector<Complex> sing, std::vector<Complex> eig) {
  PeriodGon gon;
  gon.k = k;
  gon.singularities = std::move(sing);
  gon.eigenvalues = std::move(eig);
  const int n = static_cast<int>(gon.eigenvalues.size());
  gon.periods.resize(n);
  Complex total(0.0, 0.0);
  for (int l = 0; l < n; ++l) {
    gon.periods[l] = 2 * pi * I / gon.eigenvalues[l];
    total += gon.periods[l];
  }
  gon.gap = total / double(n);
  gon.vertices.resize(n);
  Complex p(0.0, 0.0);
  for (int l = 0; l < n; ++l) {
    p += gon.gap - gon.periods[l];
    gon.vertices[l] = p;
  }
  const Complex mean = std::accumulate(gon.vertices.begin(), gon.vertices.end(), Complex(0.0, 0.0)) / double(n);
  for (Complex& v : gon.vertices) v -= mean;
  return gon;
}

std::vector<Complex> singularities(const ModelField& field) {
  require_nonzero(field);
  const double r = field.scale();
  std::vector<Complex> z(field.k + 1);
  for (int l = 0; l <= field.k; ++l) z[l] = std::polar(r, (field.theta + 2 * pi * l) / (field.k + 1));
  return z;
}

PeriodGon periods(const ModelField& field) {
  std::vector<Complex> z = singularities(field);
  std::vector<Complex> eig(z.size());
  for (std::size_t l = 0; l < z.size(); ++l) eig[l] = field.derivative(z[l]);
  PeriodGon gon = make_period_gon(field.k, std::move(z), std::move(eig));
  gon.gap = 0.0;
  return gon;
}

double circumradius_constant(int k) { return (pi / (k + 1)) / std::sin(pi / (k + 1)); }

std::vector<double> bifurcation_angles(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  std::vector<double> angles;
  const double offset = k % 2 == 1 ? 0.0 : pi / (2 * k);
  for (int j = 0; j < 2 * k; ++j) angles.push_back(offset + j * pi / k);
  return angles;
}

namespace {

std::vector<double> normalized_heights(const PeriodGon& gon) {
  double radius = 0.0;
  for (const Complex& v : gon.vertices) radius = std::max(radius, std::abs(v));
  std::vector<double> h;
  for (const Complex& v : gon.vertices) h.push_back(v.imag() / radius);
  return h;
}

}  // namespace

HomoclinicReport is_homoclinic(const ModelField& field, double tol) {
  const std::vector<double> h = normalized_heights(periods(field));
  HomoclinicReport report;
  for (std::size_t a = 0; a < h.size(); ++a)
    for (std::size_t b = a + 1; b < h.size(); ++b)
      if (std::abs(h[a] - h[b]) < tol) report.pairs.emplace_back(int(a), int(b));
  report.homoclinic = !report.pairs.empty();
  return report;
}

std::vector<double> homoclinic_scan(int k, int grid) {
  const int n = k + 1;
  auto differences = [&](double theta) {
    const std::vector<double> h = normalized_heights(periods(ModelField::polar(k, 1.0, theta)));
    std::vector<double> d;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) d.push_back(h[a] - h[b]);
    return d;
  };
  const double step = 2 * pi / grid;
  std::vector<double> roots;
  double lo = -0.5 * step;
  std::vector<double> dlo = differences(lo);
  for (int g = 0; g < grid; ++g) {
    const double hi = lo + step;
    const std::vector<double> dhi = differences(hi);
    for (std::size_t p = 0; p < dlo.size(); ++p) {
      if ((dlo[p] < 0) == (dhi[p] < 0)) continue;
      double a = lo, b = hi, fa = dlo[p];
      for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = differences(m)[p];
        if ((fm < 0) == (fa < 0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      roots.push_back(wrap_angle(0.5 * (a + b)));
    }
    lo = hi;
    dlo = dhi;
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> unique;
  for (double r : roots) {
    const bool wraps = !unique.empty() && 2 * pi - r + unique.front() < 1e-9;
    if ((unique.empty() || r - unique.back() > 1e-9) && !wraps) unique.push_back(r);
  }
  return unique;
}

namespace {

Complex xi_series(const ModelField& field, Complex z) {
  const int k = field.k;
  const Complex zk = ipow(z, k);
  const Complex q = field.epsilon / (zk * z);
  const double aq = std::abs(q);
  if (aq >= 1.0 - 1e-9) throw Error(ErrorCode::SeriesOutOfDomain, "|z| must exceed |eps|^{1/(k+1)}");
  Complex sum(0.0, 0.0);
  Complex qn(1.0, 0.0);
  for (int m = 0; m < 10000000; ++m) {
    sum += qn / (double(m) * (k + 1) + k);
    qn *= q;
    const double tail = std::abs(qn) / ((double(m + 1) * (k + 1) + k) * (1.0 - aq));
    if (tail <= 1e-17 * std::abs(sum)) break;
  }
  return -sum / zk;
}

}  // namespace

Complex rectify(const ModelField& field, Complex z, RectifyMode mode) {
  require_nonzero(field);
  if (mode == RectifyMode::Series) return xi_series(field, z);
  if (z == Complex(0.0, 0.0)) return 0.0;
  const double capture = 1e-6 * field.scale();
  for (const Complex& s : singularities(field)) {
    const double t = std::clamp((s * std::conj(z)).real() / std::norm(z), 0.0, 1.0);
    if (std::abs(s - t * z) < capture) throw Error(ErrorCode::PathThroughSingularity, "segment meets a singularity");
  }
  auto integrand = [&](double s) { return z / field(s * z); };
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, 1.0, 15, 1e-14, &error);
}

int sector_of(const ModelField& field, double arg, bool* on_slit) {
  const double step = 2 * pi / (field.k + 1);
  const double u = wrap_angle(arg - field.theta / (field.k + 1));
  int l = static_cast<int>(std::floor(u / step));
  l = std::clamp(l, 0, field.k);
  const double r = u - l * step;
  if (on_slit) *on_slit = r < 1e-12 || step - r < 1e-12;
  return l;
}

TauModel build_tau_model(const PeriodGon& gon, double eyelet_radius) {
  const int n = static_cast<int>(gon.periods.size());
  const int k = n - 1;
  double scale = 0.0;
  for (const Complex& mu : gon.periods) scale = std::max(scale, std::abs(mu));
  const bool gapped = std::abs(gon.gap) > 1e-14 * scale;
  if (eyelet_radius <= 0.0) throw Error(ErrorCode::RadiusTooSmall, "eyelet radius must be positive");
  if (gapped && eyelet_radius <= 0.75 * std::abs(gon.gap) / std::tan(pi / (2 * (k + 1))))
    throw Error(ErrorCode::RadiusTooSmall, "eyelet radius below the gap bound");

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return wrap_angle(std::arg(-gon.periods[a])) < wrap_angle(std::arg(-gon.periods[b])); });

  TauModel model;
  model.k = k;
  model.eyelet_radius = eyelet_radius;
  Complex p(0.0, 0.0);
  for (int i : idx) {
    model.polygon.push_back(p);
    p -= gon.periods[i];
    model.polygon.push_back(p);
    p += gon.gap;
  }
  const Complex mean =
      std::accumulate(model.polygon.begin(), model.polygon.end(), Complex(0.0, 0.0)) / double(model.polygon.size());
  for (Complex& v : model.polygon) v -= mean;
  for (int s = 0; s < n; ++s) {
    const Complex from = model.polygon[2 * s];
    const Complex to = model.polygon[2 * s + 1];
    const Complex side = to - from;
    model.strips.push_back({from, to, -I * side / std::abs(side), std::abs(side)});
    const Complex next = model.polygon[(2 * s + 2) % (2 * n)];
    model.eyelet_centers.push_back(0.5 * (to + next));
  }
  return model;
}

}  // namespace parabolic
