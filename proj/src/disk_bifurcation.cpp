#include "parabolic/disk_bifurcation.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include "parabolic/error.hpp"
#include "parabolic/trajectory.hpp"

namespace parabolic {

double tangency_equation(int k, Complex epsilon, double r, double alpha) {
  return std::cos(k * alpha) -
         (epsilon.real() * std::cos(alpha) + epsilon.imag() * std::sin(alpha)) / std::pow(r, k + 1);
}

double tangency_equation_dalpha(int k, Complex epsilon, double r, double alpha) {
  return -k * std::sin(k * alpha) -
         (-epsilon.real() * std::sin(alpha) + epsilon.imag() * std::cos(alpha)) / std::pow(r, k + 1);
}

double tangency_seed(int k, int j) { return (0.5 * pi + j * pi) / k; }

TangencySet tangency_angles(const ModelField& field, double r) {
  const int k = field.k;
  TangencySet set;
  set.field = field;
  set.r = r;
  for (int j = 0; j < 2 * k; ++j) {
    const double seed = tangency_seed(k, j);
    double a = seed;
    for (int it = 0; it < 100; ++it) {
      const double step = tangency_equation(k, field.epsilon, r, a) / tangency_equation_dalpha(k, field.epsilon, r, a);
      a -= step;
      if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(a))) break;
    }
    const bool converged = std::abs(tangency_equation(k, field.epsilon, r, a)) < 1e-12;
    if (!converged || !std::isfinite(a) || std::abs(a - seed) > 0.5 * pi / k)
      throw Error(ErrorCode::NewtonDivergence, "tangency angle left its seed basin");
    set.angles.push_back(a);
  }
  return set;
}

TangencySet tangency_times(TangencySet set) {
  const ModelField& field = set.field;
  if (set.r <= field.scale()) throw Error(ErrorCode::SeriesOutOfDomain, "disk radius inside the singular set");
  const PeriodGon gon = periods(field);
  set.t_values.clear();
  set.vertex_index.clear();
  set.on_slit.clear();
  for (double& a : set.angles) {
    bool slit = false;
    int sector = sector_of(field, a, &slit);
    if (slit) {
      a += 1e-12;
      sector = sector_of(field, a);
    }
    set.vertex_index.push_back(sector);
    set.on_slit.push_back(slit);
    set.t_values.push_back(gon.vertices[sector] + rectify(field, std::polar(set.r, a), RectifyMode::Series));
  }
  return set;
}

double eyelet_radius(int k, double r) { return 1.0 / (k * std::pow(r, k)); }

std::vector<std::vector<Complex>> eyelet_curves(const ModelField& field, double r, int samples) {
  const PeriodGon gon = periods(field);
  const int n = field.k + 1;
  const double step = 2 * pi / n;
  std::vector<std::vector<Complex>> curves;
  for (int l = 0; l < n; ++l) {
    const double a0 = (field.theta + 2 * pi * l) / n;
    std::vector<Complex> curve;
    for (int s = 0; s <= samples; ++s) {
      const double a = a0 + step * (1e-9 + (1 - 2e-9) * double(s) / samples);
      curve.push_back(gon.vertices[l] + rectify(field, std::polar(r, a), RectifyMode::Series));
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

namespace {

struct EyeletExtremes {
  int top = -1;
  int bottom = -1;
};

EyeletExtremes extremes(const TangencySet& set, const PeriodGon& gon, int m, bool skip_slit) {
  EyeletExtremes e;
  double hi = 0.0, lo = 0.0;
  for (std::size_t i = 0; i < set.angles.size(); ++i) {
    if (set.vertex_index[i] != m || (skip_slit && set.on_slit[i])) continue;
    const double h = (set.t_values[i] - gon.vertices[m]).imag();
    if (h > hi) {
      hi = h;
      e.top = int(i);
    }
    if (h < lo) {
      lo = h;
      e.bottom = int(i);
    }
  }
  return e;
}

bool wants_top(Contact c, bool first) {
  switch (c) {
    case Contact::TopTop: return true;
    case Contact::BottomBottom: return false;
    case Contact::TopBottom: return first;
    case Contact::BottomTop: return !first;
  }
  return true;
}

double vertex_height_difference(int k, double abs_eps, double theta, int m, int m2) {
  const PeriodGon gon = periods(ModelField::polar(k, abs_eps, theta));
  return (gon.vertices[m] - gon.vertices[m2]).imag();
}

}  // namespace

double double_tangency_residual(int k, double r, double abs_eps, double theta, int m, int m2, Contact contact) {
  const ModelField field = ModelField::polar(k, abs_eps, theta);
  const TangencySet set = tangency_times(tangency_angles(field, r));
  const PeriodGon gon = periods(field);
  const EyeletExtremes a = extremes(set, gon, m, false);
  const EyeletExtremes b = extremes(set, gon, m2, false);
  const int ia = wants_top(contact, true) ? a.top : a.bottom;
  const int ib = wants_top(contact, false) ? b.top : b.bottom;
  if (ia < 0 || ib < 0) throw Error(ErrorCode::InvalidArgument, "eyelet lacks the requested tangency point");
  return (set.t_values[ia] - set.t_values[ib]).imag();
}

std::vector<CurveTag> curve_tags(int k, double r, int j) {
  const double theta = bifurcation_angles(k)[j];
  const double abs_eps = 1e-4;
  const ModelField field = ModelField::polar(k, abs_eps, theta);
  const TangencySet set = tangency_times(tangency_angles(field, r));
  const PeriodGon gon = periods(field);
  std::vector<CurveTag> tags;
  for (const auto& [m, m2] : is_homoclinic(field, 1e-9).pairs) {
    const EyeletExtremes a = extremes(set, gon, m, true);
    const EyeletExtremes b = extremes(set, gon, m2, true);
    const bool tops = a.top >= 0 && b.top >= 0;
    const bool bottoms = a.bottom >= 0 && b.bottom >= 0;
    if (!tops && !bottoms) continue;
    tags.push_back({j, m, m2, 0});
    if (tops && bottoms) {
      tags.push_back({j, m, m2, -1});
      tags.push_back({j, m, m2, +1});
    }
  }
  return tags;
}

double fit_tangency_exponent(const BifurcationCurve& curve, double theta_j, double max_abs_eps) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < curve.abs_eps.size(); ++i) {
    if (curve.abs_eps[i] > max_abs_eps) continue;
    const double alpha = curve.theta[i] - theta_j;
    const double x = std::log(curve.abs_eps[i] * std::cos(alpha));
    const double y = std::log(std::abs(curve.abs_eps[i] * std::sin(alpha)));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

BifurcationCurve trace_curve(int k, double r, const CurveTag& tag, const TraceOptions& options) {
  if (options.log10_max <= options.log10_min || options.per_decade < 1)
    throw Error(ErrorCode::InvalidArgument, "empty decade range");
  const double theta_j = bifurcation_angles(k).at(tag.j);
  const int count = static_cast<int>(std::lround((options.log10_max - options.log10_min) * options.per_decade));
  std::vector<double> grid;
  for (int i = 0; i <= count; ++i) grid.push_back(std::pow(10.0, options.log10_min + double(i) / options.per_decade));

  BifurcationCurve curve;
  curve.tag = tag;
  curve.abs_eps = grid;
  curve.theta.assign(grid.size(), theta_j);

  if (tag.side == 0) {
    const ModelField field = ModelField::polar(k, 1e-4, theta_j);
    const TangencySet set = tangency_times(tangency_angles(field, r));
    const PeriodGon gon = periods(field);
    const EyeletExtremes a = extremes(set, gon, tag.m, true);
    const EyeletExtremes b = extremes(set, gon, tag.m2, true);
    curve.contact = a.top >= 0 && b.top >= 0 ? Contact::TopTop : Contact::BottomBottom;
    curve.fitted_exponent = std::numeric_limits<double>::quiet_NaN();
    return curve;
  }

  const double power = double(k) / (k + 1);
  auto residual = [&](Contact c, double abs_eps, double alpha) {
    return double_tangency_residual(k, r, abs_eps, theta_j + tag.side * alpha, tag.m, tag.m2, c);
  };
  auto solve = [&](Contact c, double abs_eps, double lo, double hi) {
    boost::math::tools::eps_tolerance<double> tol(50);
    auto f = [&](double alpha) { return residual(c, abs_eps, alpha); };
    const auto [a, b] = boost::math::tools::bisect(f, lo, hi, tol);
    return 0.5 * (a + b);
  };
  // First sign change of the residual on (0, hi], scanning in `pieces` steps.
  auto scan = [&](Contact c, double abs_eps, double hi, int pieces, double& root) {
    double prev_a = hi / pieces / 8;
    double prev_f = residual(c, abs_eps, prev_a);
    for (int p = 1; p <= pieces; ++p) {
      const double a = hi * p / pieces;
      const double f = residual(c, abs_eps, a);
      if ((f < 0) != (prev_f < 0)) {
        root = solve(c, abs_eps, prev_a, a);
        return true;
      }
      prev_a = a;
      prev_f = f;
    }
    return false;
  };

  // Offset predicted by the height drift of the two vertices against the eyelet diameter.
  const double top = grid.back();
  const double h = 1e-7;
  const double drift = std::abs(vertex_height_difference(k, top, theta_j + h, tag.m, tag.m2) -
                                vertex_height_difference(k, top, theta_j - h, tag.m, tag.m2)) /
                       (2 * h);
  const double predicted = 2 * eyelet_radius(k, r) / drift;

  double alpha = 0.0;
  bool found = false;
  for (Contact c : {Contact::TopBottom, Contact::BottomTop}) {
    if (scan(c, top, 8 * predicted, 64, alpha)) {
      curve.contact = c;
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorCode::RootLoss, "no double tangency near the predicted offset");
  const double c_const = alpha / std::pow(top, power);
  curve.theta.back() = theta_j + tag.side * alpha;

  for (int i = static_cast<int>(grid.size()) - 2; i >= 0; --i) {
    const double e = grid[i];
    const double guess = c_const * std::pow(e, power);
    const double lo = 0.5 * guess, hi = 2 * guess;
    if ((residual(curve.contact, e, lo) < 0) != (residual(curve.contact, e, hi) < 0)) {
      alpha = solve(curve.contact, e, lo, hi);
    } else if (!scan(curve.contact, e, 8 * guess, 64, alpha)) {
      throw Error(ErrorCode::RootLoss, "bracket lost during continuation");
    }
    curve.theta[i] = theta_j + tag.side * alpha;
  }
  curve.fitted_exponent = fit_tangency_exponent(curve, theta_j, std::pow(10.0, options.log10_max - 1) * (1 + 1e-9));
  return curve;
}

const char* to_string(BoundaryLabel label) {
  switch (label) {
    case BoundaryLabel::Incoming: return "incoming";
    case BoundaryLabel::Outgoing: return "outgoing";
    case BoundaryLabel::Separating: return "separating";
    case BoundaryLabel::Tangent: return "tangent";
  }
  return "unknown";
}

BoundaryClassification separating_regions(const ModelField& field, double r, int samples) {
  if (field.epsilon == Complex(0.0, 0.0)) throw Error(ErrorCode::DegenerateParameter, "epsilon is zero");
  BoundaryClassification out;
  IntegratorControls controls;
  controls.disk_radius = r * (1 + 1e-9);
  for (int s = 0; s < samples; ++s) {
    const double a = 2 * pi * (s + 0.5) / samples;
    const Complex z = std::polar(r, a);
    const Complex w = field(z);
    const double radial = (w * std::conj(z)).real() / (std::abs(w) * r);
    BoundaryLabel label = BoundaryLabel::Tangent;
    if (std::abs(radial) > 1e-12) {
      const bool entering = radial < 0;
      const Trajectory t = integrate(field, z, entering ? 1 : -1, controls);
      if (t.termination == Termination::HitDiskBoundary) label = BoundaryLabel::Separating;
      else label = entering ? BoundaryLabel::Incoming : BoundaryLabel::Outgoing;
    }
    out.angles.push_back(a);
    out.labels.push_back(label);
  }
  for (int s = 0; s < samples; ++s) {
    const double from = 2 * pi * s / samples;
    const double to = 2 * pi * (s + 1) / samples;
    if (!out.arcs.empty() && out.arcs.back().label == out.labels[s]) out.arcs.back().to = to;
    else out.arcs.push_back({from, to, out.labels[s]});
  }
  return out;
}

}  // namespace parabolic
