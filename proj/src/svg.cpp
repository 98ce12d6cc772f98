#include "parabolic/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace parabolic {

namespace {

std::string format(const char* fmt, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, a);
  return buf;
}

std::string format(const char* fmt, double a, double b) {
  char buf[96];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else if (c == '"') out += "&quot;";
    else out += c;
  }
  return out;
}

std::string class_attr(const std::string& css_class) {
  return css_class.empty() ? "" : " class=\"" + escape(css_class) + "\"";
}

}  // namespace

View View::around(const std::vector<Complex>& points, double margin) {
  View v{1e300, -1e300, 1e300, -1e300};
  for (const Complex& z : points) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) continue;
    v.x_min = std::min(v.x_min, z.real());
    v.x_max = std::max(v.x_max, z.real());
    v.y_min = std::min(v.y_min, z.imag());
    v.y_max = std::max(v.y_max, z.imag());
  }
  if (v.x_min > v.x_max) return View{};
  const double pad = margin * std::max({v.x_max - v.x_min, v.y_max - v.y_min, 1e-12});
  return {v.x_min - pad, v.x_max + pad, v.y_min - pad, v.y_max + pad};
}

SvgCanvas::SvgCanvas(int width, int height, View view) : width_(width), height_(height), view_(view) {
  const double sx = (view_.x_max - view_.x_min) / width_;
  const double sy = (view_.y_max - view_.y_min) / height_;
  const double s = std::max(sx, sy);
  const double cx = 0.5 * (view_.x_min + view_.x_max);
  const double cy = 0.5 * (view_.y_min + view_.y_max);
  view_ = {cx - 0.5 * s * width_, cx + 0.5 * s * width_, cy - 0.5 * s * height_, cy + 0.5 * s * height_};
}

double SvgCanvas::px(double x) const {
  const double v = (x - view_.x_min) / (view_.x_max - view_.x_min) * width_;
  return std::clamp(v, -10.0 * width_, 11.0 * width_);
}

double SvgCanvas::py(double y) const {
  const double v = (view_.y_max - y) / (view_.y_max - view_.y_min) * height_;
  return std::clamp(v, -10.0 * height_, 11.0 * height_);
}

std::string SvgCanvas::coords(const std::vector<Complex>& points) const {
  std::string out;
  double last_x = 1e300, last_y = 1e300;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double x = px(points[i].real());
    const double y = py(points[i].imag());
    const bool last = i + 1 == points.size();
    if (!last && std::hypot(x - last_x, y - last_y) < 0.5) continue;
    if (!out.empty()) out += ' ';
    out += format("%.2f,%.2f", x, y);
    last_x = x;
    last_y = y;
  }
  return out;
}

void SvgCanvas::title(const std::string& text) { title_ = text; }

void SvgCanvas::polyline(const std::vector<Complex>& points, const char* color, double stroke_width,
                         const std::string& css_class, bool dashed) {
  if (points.size() < 2) return;
  body_ += "<polyline" + class_attr(css_class) + " fill=\"none\" stroke=\"" + color + "\"" +
           format(" stroke-width=\"%.2f\"", stroke_width) + (dashed ? " stroke-dasharray=\"4,3\"" : "") +
           " points=\"" + coords(points) + "\"/>\n";
}

void SvgCanvas::polygon(const std::vector<Complex>& points, const char* stroke, double stroke_width,
                        const std::string& css_class) {
  if (points.size() < 2) return;
  body_ += "<polygon" + class_attr(css_class) + " fill=\"none\" stroke=\"" + stroke + "\"" +
           format(" stroke-width=\"%.2f\"", stroke_width) + " points=\"" + coords(points) + "\"/>\n";
}

void SvgCanvas::dot(Complex z, double radius_px, const char* color, const std::string& css_class) {
  body_ += "<circle" + class_attr(css_class) + format(" cx=\"%.2f\" cy=\"%.2f\"", px(z.real()), py(z.imag())) +
           format(" r=\"%.2f\"", radius_px) + " fill=\"" + color + "\"/>\n";
}

std::string SvgCanvas::str() const {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"" +
         format(" width=\"%.0f\" height=\"%.0f\"", width_, height_) +
         format(" viewBox=\"0 0 %.0f %.0f\">\n", width_, height_);
  if (!title_.empty()) out += "<title>" + escape(title_) + "</title>\n";
  out += format("<rect x=\"0\" y=\"0\" width=\"%.0f\" height=\"%.0f\" fill=\"white\"/>\n", width_, height_);
  out += body_;
  out += "</svg>\n";
  return out;
}

}  // namespace parabolic
