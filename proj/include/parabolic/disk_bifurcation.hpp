#pragma once

#include <vector>

#include "parabolic/model_field.hpp"

namespace parabolic {

struct TangencySet {
  ModelField field;
  double r = 1.0;
  std::vector<double> angles;     // tangency points r·e^{iα}
  std::vector<Complex> t_values;  // filled by tangency_times
  std::vector<int> vertex_index;  // sector / period-gon vertex of each point
  std::vector<bool> on_slit;
};

// E(x, y, α) = cos(kα) − (x cos α + y sin α) / r^{k+1}, ε = x + iy.
double tangency_equation(int k, Complex epsilon, double r, double alpha);
double tangency_equation_dalpha(int k, Complex epsilon, double r, double alpha);

// Angle of the j-th tangency point at ε = 0: (π/2 + jπ)/k.
double tangency_seed(int k, int j);

TangencySet tangency_angles(const ModelField& field, double r);
TangencySet tangency_times(TangencySet set);

// Radius 1/(k r^k) of the eyelets for ε → 0.
double eyelet_radius(int k, double r);

// Image of the arc of ∂B(0, r) in each sector under t = v(sector) + ξ(z).
std::vector<std::vector<Complex>> eyelet_curves(const ModelField& field, double r, int samples_per_eyelet = 256);

enum class Contact { TopTop, BottomBottom, TopBottom, BottomTop };

// Im(t_a − t_b) for the tangency point of eyelet m (top or bottom, per
// `contact`) and that of eyelet m2.
double double_tangency_residual(int k, double r, double abs_eps, double theta, int m, int m2, Contact contact);

struct CurveTag {
  int j = 0;
  int m = 0;
  int m2 = 0;
  int side = 0;
};

struct BifurcationCurve {
  CurveTag tag;
  Contact contact = Contact::TopTop;
  std::vector<double> abs_eps;  // increasing
  std::vector<double> theta;
  double fitted_exponent = 0.0;  // NaN for the straight ray
};

struct TraceOptions {
  double log10_min = -6.0;
  double log10_max = -2.0;
  int per_decade = 40;
};

// All curve tags at θ_j: for each pair of vertices at equal height, the ray
// (side 0) and, when both eyelets carry the needed top and bottom points, the
// two side curves.
std::vector<CurveTag> curve_tags(int k, double r, int j);

BifurcationCurve trace_curve(int k, double r, const CurveTag& tag, const TraceOptions& options = {});

// Least-squares slope of log|y| against log x, ε e^{−iθ_j} = x + iy, over the
// samples with |ε| ≤ max_abs_eps.
double fit_tangency_exponent(const BifurcationCurve& curve, double theta_j, double max_abs_eps);

enum class BoundaryLabel { Incoming, Outgoing, Separating, Tangent };

const char* to_string(BoundaryLabel label);

struct BoundaryArc {
  double from = 0.0;
  double to = 0.0;
  BoundaryLabel label = BoundaryLabel::Incoming;
};

struct BoundaryClassification {
  std::vector<double> angles;
  std::vector<BoundaryLabel> labels;
  std::vector<BoundaryArc> arcs;
};

BoundaryClassification separating_regions(const ModelField& field, double r, int samples = 720);

}  // namespace parabolic
