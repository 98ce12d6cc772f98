#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "parabolic/disk_bifurcation.hpp"
#include "parabolic/error.hpp"
#include "support.hpp"

using namespace parabolic;

namespace {

double set_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double worst = 0.0;
  for (const Complex& x : a) {
    double best = 1e300;
    for (const Complex& y : b) best = std::min(best, std::abs(x - y));
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<Complex> mirrored(const std::vector<Complex>& v, bool vertical_axis) {
  std::vector<Complex> out;
  for (const Complex& t : v) out.push_back(vertical_axis ? -std::conj(t) : std::conj(t));
  return out;
}

// A point on a slit bounds two eyelets and is listed with one of them only.
std::vector<Complex> off_slit(const TangencySet& set) {
  std::vector<Complex> out;
  for (std::size_t i = 0; i < set.t_values.size(); ++i)
    if (!set.on_slit[i]) out.push_back(set.t_values[i]);
  return out;
}

int sign_changes_on_circle(int k, Complex eps, double r, int grid) {
  int count = 0;
  double prev = tangency_equation(k, eps, r, 0.0);
  for (int g = 1; g <= grid; ++g) {
    const double f = tangency_equation(k, eps, r, 2 * pi * g / grid);
    if ((f < 0) != (prev < 0)) ++count;
    prev = f;
  }
  return count;
}

bool has_separating(const BoundaryClassification& c) {
  return std::find(c.labels.begin(), c.labels.end(), BoundaryLabel::Separating) != c.labels.end();
}

}  // namespace

TEST_CASE("tangency angles at eps = 0") {
  for (int k = 1; k <= 7; ++k) {
    const TangencySet set = tangency_angles(ModelField(k, 1e-300), 1.0);
    REQUIRE(set.angles.size() == std::size_t(2 * k));
    for (int j = 0; j < 2 * k; ++j) {
      CHECK(std::abs(set.angles[j] - (pi / 2 + j * pi) / k) < 1e-12);
      const double a = tangency_seed(k, j), h = 1e-6;
      const double fd = (tangency_equation(k, 0.0, 1.0, a + h) - tangency_equation(k, 0.0, 1.0, a - h)) / (2 * h);
      CHECK(std::abs(fd - (j % 2 ? 1.0 : -1.0) * k) < 1e-8);
      CHECK(std::abs(tangency_equation_dalpha(k, 0.0, 1.0, a) - (j % 2 ? 1.0 : -1.0) * k) < 1e-12);
    }
  }
}

TEST_CASE("tangency angles solve the tangency equation") {
  const TangencySet set = tangency_angles(ModelField(2, 0.01), 1.0);
  REQUIRE(set.angles.size() == 4);
  for (double a : set.angles) CHECK(std::abs(tangency_equation(2, 0.01, 1.0, a)) < 1e-12);

  for (int k = 1; k <= 7; ++k)
    for (double modulus : {1e-6, 1e-4, 1e-2}) {
      const Complex eps = std::polar(modulus, support::uniform(0.0, 2 * pi));
      CHECK(tangency_angles(ModelField(k, eps), 1.0).angles.size() == std::size_t(2 * k));
      CHECK(sign_changes_on_circle(k, eps, 1.0, 20000) == 2 * k);
    }
}

TEST_CASE("tangency points in the rectifying coordinate") {
  for (int k = 1; k <= 6; ++k) {
    const ModelField f = ModelField::polar(k, 1e-4, support::uniform(0.0, 2 * pi));
    const double r = 1.0;
    const TangencySet set = tangency_times(tangency_angles(f, r));
    const PeriodGon gon = periods(f);
    const double r0 = eyelet_radius(k, r);
    for (std::size_t i = 0; i < set.t_values.size(); ++i) {
      const double d = std::abs(set.t_values[i] - gon.vertices[set.vertex_index[i]]);
      CHECK(d > 0.9 * r0);
      CHECK(d < 1.1 * r0);
    }
  }
  for (int k = 1; k <= 5; ++k) {
    const std::vector<Complex> real = off_slit(tangency_times(tangency_angles(ModelField(k, 0.02), 1.0)));
    CHECK(real.size() >= std::size_t(k));
    CHECK(set_distance(real, mirrored(real, false)) < 1e-10);
  }
  for (int k = 2; k <= 5; ++k) {
    const ModelField f = ModelField::polar(k, 0.01, bifurcation_angles(k)[0]);
    const std::vector<Complex> interior = off_slit(tangency_times(tangency_angles(f, 1.0)));
    CHECK(interior.size() >= std::size_t(k));
    CHECK(set_distance(interior, mirrored(interior, true)) < 1e-9);
  }
  CHECK_THROWS_AS(tangency_times(tangency_angles(ModelField(2, 8.0), 1.0)), Error);
}

TEST_CASE("eyelets turn rigidly with the parameter angle") {
  for (int k = 1; k <= 6; ++k) {
    const double theta = support::uniform(0.0, 2 * pi), delta = support::uniform(-1.0, 1.0);
    const PeriodGon a = periods(ModelField::polar(k, 0.3, theta));
    const PeriodGon b = periods(ModelField::polar(k, 0.3, theta + delta));
    std::vector<Complex> turned;
    for (const Complex& v : a.vertices) turned.push_back(std::polar(1.0, -k * delta / (k + 1)) * v);
    CHECK(set_distance(turned, b.vertices) < 1e-12);
    CHECK(set_distance(b.vertices, turned) < 1e-12);
  }
}

TEST_CASE("double tangencies") {
  const int k = 4;
  const double r = 1.0, modulus = 1e-4;
  for (int j = 0; j < 2 * k; ++j) {
    const double theta_j = bifurcation_angles(k)[j];
    for (const CurveTag& tag : curve_tags(k, r, j)) {
      if (tag.side != 0) continue;
      const BifurcationCurve ray = trace_curve(k, r, tag);
      CHECK(std::abs(double_tangency_residual(k, r, modulus, theta_j, tag.m, tag.m2, ray.contact)) < 1e-9);
      const double h = 1e-6;
      const double plus = double_tangency_residual(k, r, modulus, theta_j + h, tag.m, tag.m2, ray.contact);
      const double minus = double_tangency_residual(k, r, modulus, theta_j - h, tag.m, tag.m2, ray.contact);
      CHECK(std::abs(plus) > 0.0);
      CHECK(std::abs(plus + minus) < 1e-3 * std::abs(plus));
    }
  }
}

TEST_CASE("bifurcation curves near eps = 0") {
  const int k = 4;
  const double r = 1.0;
  TraceOptions options;
  options.log10_min = -6;
  options.log10_max = -2;
  for (int j = 0; j < 2 * k; ++j) {
    const double theta_j = bifurcation_angles(k)[j];
    const auto tags = curve_tags(k, r, j);
    CHECK(tags.size() >= 3);
    std::vector<BifurcationCurve> sides;
    int rays = 0;
    for (const CurveTag& tag : tags) {
      const BifurcationCurve c = trace_curve(k, r, tag, options);
      for (std::size_t i = 1; i < c.abs_eps.size(); ++i) CHECK(c.abs_eps[i] > c.abs_eps[i - 1]);
      if (tag.side == 0) {
        ++rays;
        for (double t : c.theta) CHECK(t == theta_j);
        CHECK(std::isnan(c.fitted_exponent));
        continue;
      }
      CHECK(std::abs(c.fitted_exponent - (2.0 - 1.0 / (k + 1))) < 0.05);
      for (double t : c.theta) CHECK(tag.side * (t - theta_j) > 0);
      sides.push_back(c);
    }
    CHECK(rays >= 1);
    CHECK(sides.size() >= 2);
    for (std::size_t a = 0; a < sides.size(); ++a)
      for (std::size_t b = a + 1; b < sides.size(); ++b) {
        const double first = sides[a].theta[0] - sides[b].theta[0];
        for (std::size_t i = 0; i < sides[a].theta.size(); ++i)
          CHECK((sides[a].theta[i] - sides[b].theta[i]) * first > 0);
      }
  }
  TraceOptions empty;
  empty.log10_min = empty.log10_max = -3;
  CHECK_THROWS_AS(trace_curve(k, r, curve_tags(k, r, 0).front(), empty), Error);
}

TEST_CASE("separating trajectories in the disk") {
  const int k = 4;
  const double r = 1.0, modulus = 0.05;
  const double theta_j = bifurcation_angles(k)[0];
  const double middle = theta_j + pi / (2 * k);
  CHECK(has_separating(separating_regions(ModelField::polar(k, modulus, theta_j), r, 360)));
  const BoundaryClassification wide = separating_regions(ModelField::polar(k, modulus, middle), r, 360);
  CHECK_FALSE(has_separating(wide));
  CHECK(wide.labels == separating_regions(ModelField::polar(k, modulus + 1e-6, middle + 1e-6), r, 360).labels);

  const BoundaryClassification real = separating_regions(ModelField(3, 0.05), r, 360);
  for (int s = 0; s < 360; ++s) CHECK(real.labels[s] == real.labels[359 - s]);
  for (const BoundaryArc& arc : wide.arcs) CHECK(arc.to > arc.from);
  CHECK_THROWS_AS(separating_regions(ModelField(2, 0.0), r), Error);
}
