#pragma once

#include <string>
#include <vector>

#include "parabolic/model_field.hpp"

namespace parabolic {

namespace palette {
inline constexpr const char* incoming = "blue";
inline constexpr const char* outgoing = "red";
inline constexpr const char* separating = "green";
inline constexpr const char* generic = "gray";
inline constexpr const char* singularity = "black";
}  // namespace palette

// Complex rectangle shown on the canvas.
struct View {
  double x_min = -1.0;
  double x_max = 1.0;
  double y_min = -1.0;
  double y_max = 1.0;

  static View around(const std::vector<Complex>& points, double margin);
  static View square(double half_width) { return {-half_width, half_width, -half_width, half_width}; }
};

struct RenderSpec {
  int width = 800;
  int height = 800;
  View view;
  int samples = 24;  // random trajectories, curve samples, ... as the command needs
};

// SVG 1.1 document in a fixed-precision, deterministic text form. The view is
// widened so that both axes share one scale; y points up.
class SvgCanvas {
public:
  SvgCanvas(int width, int height, View view);

  void title(const std::string& text);
  void polyline(const std::vector<Complex>& points, const char* color, double stroke_width = 1.0,
                const std::string& css_class = "", bool dashed = false);
  void polygon(const std::vector<Complex>& points, const char* stroke, double stroke_width = 1.0,
               const std::string& css_class = "");
  void dot(Complex z, double radius_px, const char* color, const std::string& css_class = "");

  std::string str() const;

private:
  double px(double x) const;
  double py(double y) const;
  std::string coords(const std::vector<Complex>& points) const;

  int width_;
  int height_;
  View view_;
  std::string title_;
  std::string body_;
};

}  // namespace parabolic
