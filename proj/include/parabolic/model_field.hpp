#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace parabolic {

using Complex = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

// ż = z^{k+1} − ε. The angle `theta` labels the singularities and is kept
// separately from ε so that labels move continuously across arg ε = π.
struct ModelField {
  int k = 1;
  Complex epsilon{1.0, 0.0};
  double theta = 0.0;

  ModelField() = default;
  ModelField(int k, Complex epsilon);
  static ModelField polar(int k, double modulus, double theta);

  double modulus() const { return std::abs(epsilon); }
  // |ε|^{1/(k+1)}, the radius of the singular set.
  double scale() const;

  Complex operator()(Complex z) const;
  Complex derivative(Complex z) const;
};

struct PeriodGon {
  int k = 0;
  std::vector<Complex> singularities;
  std::vector<Complex> eigenvalues;
  std::vector<Complex> periods;
  // vertices[ℓ] is the vertex between long side ℓ and the next; long side ℓ
  // runs from vertices[ℓ−1] (plus the gap) to vertices[ℓ] with vector −μ_ℓ.
  std::vector<Complex> vertices;
  Complex gap{0.0, 0.0};
};

// Builds the (possibly gapped) polygon from singularities and eigenvalues.
// The gap equals the mean period; vertices are centred on their mean.
PeriodGon make_period_gon(int k, std::vector<Complex> singularities, std::vector<Complex> eigenvalues);

std::vector<Complex> singularities(const ModelField& field);
PeriodGon periods(const ModelField& field);

// (π/(k+1)) / sin(π/(k+1)), the circumradius of the period-gon at |ε| = 1.
double circumradius_constant(int k);

std::vector<double> bifurcation_angles(int k);

struct HomoclinicReport {
  bool homoclinic = false;
  std::vector<std::pair<int, int>> pairs;  // vertex indices at equal height
};

HomoclinicReport is_homoclinic(const ModelField& field, double tol = 1e-9);

// Angles in [0, 2π) at |ε| = 1 where two period-gon vertices have equal
// height, located by bracketing the height differences on a grid and bisecting.
std::vector<double> homoclinic_scan(int k, int grid = 720);

enum class RectifyMode { Quadrature, Series };

// Quadrature: ∫_0^z dw / P(w) along the straight segment.
// Series: the branch ξ(z) = −Σ ε^n / (a_n z^{a_n}), a_n = (n+1)(k+1) − 1, valid for |z| > |ε|^{1/(k+1)}.
Complex rectify(const ModelField& field, Complex z, RectifyMode mode);

// Sector of the radial-slit picture containing arg z: the index ℓ with
// arg z strictly between arg z_ℓ and arg z_{ℓ+1}. `on_slit` is set when the
// point lies within 1e−12 of a slit.
int sector_of(const ModelField& field, double arg, bool* on_slit = nullptr);

struct Strip {
  Complex base_from;
  Complex base_to;
  Complex direction;  // unit outward normal of the base side
  double width = 0.0;
};

struct TauModel {
  int k = 0;
  std::vector<Complex> polygon;  // 2(k+1) vertices, long side then gap
  std::vector<Strip> strips;
  std::vector<Complex> eyelet_centers;
  double eyelet_radius = 0.0;
};

TauModel build_tau_model(const PeriodGon& gon, double eyelet_radius);

}  // namespace parabolic
