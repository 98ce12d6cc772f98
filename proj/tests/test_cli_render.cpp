#include <doctest.h>

#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

#include "parabolic/commands.hpp"
#include "parabolic/disk_bifurcation.hpp"
#include "parabolic/svg.hpp"
#include "parabolic/trajectory.hpp"

using namespace parabolic;

namespace {

Json load(const std::string& name) {
  std::ifstream in(std::string(PARABOLIC_TEST_DATA) + "/" + name);
  REQUIRE(in.good());
  return Json::parse(in);
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

// Tags open and close in nested order, attributes are quoted, the root is <svg>.
bool well_formed(const std::string& svg) {
  static const std::regex tag(R"(<(/?)([a-zA-Z][\w:-]*)((?:\s+[\w:-]+="[^"<]*")*)\s*(/?)>)");
  std::vector<std::string> stack;
  std::size_t pos = svg.find("<svg");
  if (pos == std::string::npos) return false;
  const std::string body = svg.substr(pos);
  std::size_t consumed = 0;
  for (auto it = std::sregex_iterator(body.begin(), body.end(), tag); it != std::sregex_iterator(); ++it) {
    const std::smatch& m = *it;
    const std::string between = body.substr(consumed, m.position() - consumed);
    if (between.find('<') != std::string::npos || between.find('>') != std::string::npos) return false;
    consumed = m.position() + m.length();
    if (m[1] == "/") {
      if (stack.empty() || stack.back() != m[2]) return false;
      stack.pop_back();
    } else if (m[4] != "/") {
      stack.push_back(m[2]);
    }
    if (stack.empty()) return body.find_first_not_of(" \n", consumed) == std::string::npos;
  }
  return false;
}

const double example_theta = 2 * pi * 13 / 20;

}  // namespace

TEST_CASE("complex parameters on the command line") {
  CHECK(parse_complex("1") == Complex(1.0, 0.0));
  CHECK(parse_complex("0.309+0.951i") == Complex(0.309, 0.951));
  CHECK(parse_complex("-0.5i") == Complex(0.0, -0.5));
  CHECK(parse_complex("i") == Complex(0.0, 1.0));
  CHECK(parse_complex("2-i") == Complex(2.0, -1.0));
  CHECK(parse_complex("1e-3-2e-4i") == Complex(1e-3, -2e-4));
  CHECK(parse_complex("-1e+2") == Complex(-100.0, 0.0));
  for (const char* bad : {"", "1x", "1+2j", "i1", "++1i", "nan"}) CHECK_THROWS_AS(parse_complex(bad), Error);
}

TEST_CASE("exit codes") {
  CHECK(exit_code(ErrorCode::InvalidArgument) == 2);
  CHECK(exit_code(ErrorCode::DegenerateParameter) == 2);
  CHECK(exit_code(ErrorCode::RadiusTooSmall) == 2);
  CHECK(exit_code(ErrorCode::StepSizeUnderflow) == 3);
  CHECK(exit_code(ErrorCode::RootLoss) == 3);
  CHECK(exit_code(ErrorCode::CodimensionMismatch) == 4);
  CHECK(exit_code(ErrorCode::NotGeneric) == 4);
  CHECK(exit_code(ErrorCode::AtBifurcation) == 4);
}

TEST_CASE("canvas output") {
  SvgCanvas canvas(200, 100, View::square(1.0));
  canvas.title("a < b & c");
  canvas.polyline({0.0, Complex(1.0, 1.0)}, palette::incoming, 1.0, "separatrix incoming");
  canvas.dot(0.0, 3.0, palette::singularity, "singularity");
  const std::string svg = canvas.str();
  CHECK(well_formed(svg));
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(svg.find("a &lt; b &amp; c") != std::string::npos);
  // Equal scales: the unit square is widened horizontally to fill 200 × 100.
  CHECK(svg.find("cx=\"100.00\" cy=\"50.00\"") != std::string::npos);
  CHECK(svg.find("points=\"100.00,50.00 150.00,0.00\"") != std::string::npos);
}

TEST_CASE("phase portraits") {
  GlobalOptions options;
  PortraitArgs args;
  args.field = ModelField(6, parse_complex("0.309+0.951i"));
  const std::string svg = cmd_portrait(args, options);
  CHECK(well_formed(svg));
  CHECK(count(svg, "class=\"singularity\"") == 7);
  CHECK(count(svg, "class=\"separatrix incoming\"") == 6);
  CHECK(count(svg, "class=\"separatrix outgoing\"") == 6);
  CHECK(count(svg, "class=\"trajectory\"") == args.trajectories);
  CHECK(count(svg, "stroke=\"blue\"") == 6);
  CHECK(count(svg, "stroke=\"red\"") == 6);
  CHECK(svg == cmd_portrait(args, options));
  options.seed = 7;
  CHECK(svg != cmd_portrait(args, options));

  args.field = ModelField(1, 1.0);
  const std::string line = cmd_portrait(args, options);
  CHECK(count(line, "class=\"singularity\"") == 2);
  CHECK(count(line, "class=\"separatrix") == 2);
  CHECK(line.find("cx=\"666.67\" cy=\"400.00\"") != std::string::npos);
  CHECK(line.find("cx=\"133.33\" cy=\"400.00\"") != std::string::npos);

  args.field = ModelField(2, 0.0);
  CHECK_THROWS_AS(cmd_portrait(args, options), Error);
}

TEST_CASE("rotating by pi/k swaps incoming and outgoing separatrices") {
  // w = e^{iπ/k} z maps ż = z^{k+1} − ε to ẇ = −(w^{k+1} + e^{iπ/k} ε).
  for (int k = 1; k <= 5; ++k) {
    const ModelField f = ModelField::polar(k, 1.0, 0.37);
    const Complex rot = std::polar(1.0, pi / k);
    const ModelField g(k, -rot * f.epsilon);
    const auto a = separatrices(f, 3.0);
    const auto b = separatrices(g, 3.0);
    const auto sing_g = singularities(g);
    for (int j = 0; j < 2 * k; ++j) {
      const Trajectory& s = a[j];
      const Trajectory& t = b[(j + 1) % (2 * k)];
      CHECK(separatrix_is_outgoing(j) != separatrix_is_outgoing((j + 1) % (2 * k)));
      REQUIRE(s.termination == Termination::LandedAtSingularity);
      REQUIRE(t.termination == Termination::LandedAtSingularity);
      CHECK(std::abs(rot * s.points.back() - sing_g[t.singularity]) < 1e-5);
      // Every point of the rotated curve lies on the other curve.
      double worst = 0.0;
      for (std::size_t i = 0; i < s.points.size(); i += 7) {
        const Complex p = rot * s.points[i];
        double best = 1e300;
        for (std::size_t q = 0; q + 1 < t.points.size(); ++q) {
          const Complex d = t.points[q + 1] - t.points[q];
          const double u = std::clamp(((p - t.points[q]) * std::conj(d)).real() / std::max(std::norm(d), 1e-300), 0.0, 1.0);
          best = std::min(best, std::abs(p - t.points[q] - u * d));
        }
        worst = std::max(worst, best);
      }
      CHECK(worst < 1e-3);
    }
  }
}

TEST_CASE("rectified pictures") {
  GlobalOptions options;
  StarArgs args;
  args.field = ModelField::polar(5, 1.0, example_theta);
  args.r = 1.5;
  const std::string svg = cmd_star(args, options);
  CHECK(well_formed(svg));
  CHECK(count(svg, "class=\"eyelet\"") == 6);
  CHECK(count(svg, "class=\"strip\"") == 6);
  CHECK(count(svg, "class=\"tangency\"") == 10);
  CHECK(count(svg, "class=\"period-gon\"") == 1);
  CHECK_FALSE(is_homoclinic(args.field).homoclinic);
  CHECK(svg == cmd_star(args, options));

  args.r = 0.9;
  try {
    cmd_star(args, options);
    FAIL("a disk inside the singular set must be rejected");
  } catch (const Error& e) {
    CHECK(exit_code(e.code()) == 2);
  }

  // The eyelet curves drawn by the command have diameter 2/(k r^k) for small ε.
  for (int k = 1; k <= 6; ++k) {
    const double r = 1.0;
    for (const auto& curve : eyelet_curves(ModelField::polar(k, 1e-4, 0.3), r, 256)) {
      double diameter = 0.0;
      for (const Complex& a : curve)
        for (const Complex& b : curve) diameter = std::max(diameter, std::abs(a - b));
      CHECK(std::abs(diameter - 2 * eyelet_radius(k, r)) < 0.1 * 2 * eyelet_radius(k, r));
    }
  }
}

TEST_CASE("bifurcation diagrams") {
  GlobalOptions options;
  BifdiagramArgs args;
  args.k = 4;
  const std::string svg = cmd_bifdiagram(args, options);
  CHECK(well_formed(svg));
  for (int j = 0; j < 8; ++j) {
    CHECK(count(svg, "curve ray group-" + std::to_string(j) + "\"") >= 1);
    CHECK(count(svg, "curve side group-" + std::to_string(j) + "\"") >= 2);
  }
  CHECK(count(svg, "group-8\"") == 0);

  args.json = true;
  const Json curves = Json::parse(cmd_bifdiagram(args, options));
  REQUIRE(curves["groups"].size() == 8);
  for (const Json& group : curves["groups"]) {
    CHECK(group["curves"].size() >= 3);
    for (const Json& c : group["curves"])
      if (c["tag"]["side"] != 0) CHECK(std::abs(c["exponent"].get<double>() - 1.8) < 0.05);
  }

  args.json = false;
  args.k = 7;
  args.per_decade = 8;
  const std::string eight = cmd_bifdiagram(args, options);
  for (int j = 0; j < 14; ++j) CHECK(count(eight, "group-" + std::to_string(j) + "\"") >= 3);
  CHECK(count(eight, "group-14\"") == 0);

  args.log10_min = args.log10_max = -3;
  try {
    cmd_bifdiagram(args, options);
    FAIL("empty decade range must be rejected");
  } catch (const Error& e) {
    CHECK(exit_code(e.code()) == 2);
  }
}

TEST_CASE("classification verdicts") {
  GlobalOptions options;
  const Json model = load("model_k2.json");
  const Json self = Json::parse(cmd_classify(model, model, options));
  CHECK(self["fixed_parameter"] == Json::array({1.0, 0.0}));
  CHECK(self["truncation_order"] == 32);

  const Json auxiliary = Json::parse(cmd_classify(model, load("auxiliary_k2.json"), options));
  CHECK(auxiliary["fixed_parameter"].is_null());
  REQUIRE(auxiliary["full"].is_object());
  CHECK(auxiliary["full"]["witnesses"].size() >= 1);
  CHECK(auxiliary["full"]["xi"]["truncation"].get<int>() > 0);

  const Json linear = Json::parse(cmd_classify(model, load("linear_factor_k2.json"), options));
  CHECK(linear["fixed_parameter"].is_null());
  CHECK(linear["full"].is_null());

  try {
    cmd_classify(model, load("model_k3.json"), options);
    FAIL("different codimensions must be rejected");
  } catch (const Error& e) {
    CHECK(exit_code(e.code()) == 4);
  }
  try {
    cmd_classify(model, Json::parse(R"({"k": 2})"), options);
    FAIL("a file without coefficients must be rejected");
  } catch (const Error& e) {
    CHECK(exit_code(e.code()) == 2);
  }
  options.truncation = 12;
  CHECK(Json::parse(cmd_classify(model, model, options))["truncation_order"] == 12);
}

TEST_CASE("canonical parameter and normal forms from files") {
  GlobalOptions options;
  const Json lambda = load("lambda_k2.json");
  const Json canon = Json::parse(cmd_canon(lambda, options));
  CHECK(canon["canonical"]["canonical"] == true);
  CHECK(canon["truncation_order"] == 12);
  CHECK(canon["linear_choices"].size() == 2);
  const EigenvalueFunction c = eigenvalue_function_from_json(canon["canonical"]);
  for (int m = 1; 2 + 3 * m <= c.order(); ++m) CHECK(std::abs(c.lambda[2 + 3 * m]) < 1e-10);
  CHECK(cmd_canon(lambda, options) == cmd_canon(lambda, options));

  for (NFKind kind : {NFKind::Polynomial, NFKind::Rational}) {
    NFArgs args;
    args.kind = kind;
    const Json nf = Json::parse(cmd_nf(load("auxiliary_k2.json"), args, options));
    CHECK(nf["nf"]["coefficients"].size() == 3);
    CHECK(nf["canonical_change"]["nf"]["canonical"] == true);
    CHECK(cmd_nf(load("auxiliary_k2.json"), args, options) == nf.dump(2) + "\n");
  }
}

TEST_CASE("combinatorial invariant output") {
  GlobalOptions options;
  const Json ds = Json::parse(cmd_dsinv(ModelField::polar(5, 1.0, example_theta), true, options));
  CHECK(ds["zigzag"] == true);
  CHECK(ds["order"].size() == 6);
  try {
    cmd_dsinv(ModelField::polar(2, 1.0, pi / 4), false, options);
    FAIL("homoclinic parameters have no invariant");
  } catch (const Error& e) {
    CHECK(exit_code(e.code()) == 4);
  }
}

TEST_CASE("json round trips") {
  Series s(6);
  s[0] = 1.0;
  s[3] = Complex(0.25, -2.0);
  const Json j = series_to_json(s);
  CHECK(j["coefficients"].size() == 2);
  CHECK(series_distance(series_from_json(j), s) == 0.0);

  FamilySpec spec;
  spec.k = 2;
  spec.omega = Bivariate(4, 1);
  spec.omega(3, 0) = 1.0;
  spec.omega(0, 1) = -1.0;
  spec.omega(4, 1) = Complex(0.0, 0.5);
  const FamilySpec back = family_from_json(family_to_json(spec));
  CHECK(back.k == 2);
  CHECK((back.omega.coefficients() - spec.omega.coefficients()).norm() == 0.0);

  CHECK_THROWS_AS(series_from_json(Json::parse(R"({"truncation": 2, "coefficients": [{"deg": 3}]})")), Error);
  CHECK_THROWS_AS(family_from_json(Json::parse(R"({"k": 0, "omega": {}})")), Error);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"([1, 2, 3])")), Error);
}
