#include "parabolic/json_io.hpp"

#include <cmath>

#include "parabolic/error.hpp"

namespace parabolic {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw Error(ErrorCode::InvalidArgument, std::string("missing field ") + name);
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be an integer");
  return v.get<int>();
}

double number(const Json& j, const char* name) {
  if (!j.contains(name)) return 0.0;
  const Json& v = j.at(name);
  if (!v.is_number()) throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be a number");
  return v.get<double>();
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(ErrorCode::InvalidArgument, "complex numbers are [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json series_to_json(const Series& s) {
  Json c = Json::array();
  for (int d = 0; d <= s.order(); ++d)
    if (s[d] != Complex(0.0, 0.0)) c.push_back({{"deg", d}, {"re", s[d].real()}, {"im", s[d].imag()}});
  return {{"truncation", s.order()}, {"coefficients", c}};
}

Series series_from_json(const Json& j) {
  const int n = int_field(j, "truncation");
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "truncation must be non-negative");
  Series s(n);
  for (const Json& c : field(j, "coefficients")) {
    const int d = int_field(c, "deg");
    if (d < 0 || d > n) throw Error(ErrorCode::InvalidArgument, "coefficient degree outside the truncation");
    s[d] += Complex(number(c, "re"), number(c, "im"));
  }
  return s;
}

Json family_to_json(const FamilySpec& spec) {
  Json c = Json::array();
  const Bivariate& w = spec.omega;
  for (int n = 0; n <= w.eps_order(); ++n)
    for (int m = 0; m <= w.z_order(); ++m)
      if (w(m, n) != Complex(0.0, 0.0)) c.push_back({{"m", m}, {"n", n}, {"re", w(m, n).real()}, {"im", w(m, n).imag()}});
  return {{"k", spec.k}, {"omega", {{"Nz", w.z_order()}, {"Neps", w.eps_order()}, {"coefficients", c}}}};
}

FamilySpec family_from_json(const Json& j) {
  FamilySpec spec;
  spec.k = int_field(j, "k");
  if (spec.k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  const Json& w = field(j, "omega");
  const int nz = int_field(w, "Nz");
  const int ne = int_field(w, "Neps");
  if (nz < 0 || ne < 0) throw Error(ErrorCode::InvalidArgument, "orders must be non-negative");
  spec.omega = Bivariate(nz, ne);
  for (const Json& c : field(w, "coefficients")) {
    const int m = int_field(c, "m");
    const int n = int_field(c, "n");
    if (m < 0 || m > nz || n < 0 || n > ne) throw Error(ErrorCode::InvalidArgument, "coefficient outside the orders");
    spec.omega(m, n) += Complex(number(c, "re"), number(c, "im"));
  }
  return spec;
}

Json eigenvalue_function_to_json(const EigenvalueFunction& lambda) {
  Json j = series_to_json(lambda.lambda);
  j["k"] = lambda.k;
  j["canonical"] = lambda.canonical;
  return j;
}

EigenvalueFunction eigenvalue_function_from_json(const Json& j) {
  return EigenvalueFunction::from_lambda(int_field(j, "k"), series_from_json(j));
}

Json trajectory_to_json(const Trajectory& t) {
  Json pts = Json::array();
  for (const Complex& z : t.points) pts.push_back(complex_to_json(z));
  Json j = {{"points", pts}, {"termination", to_string(t.termination)}};
  if (t.termination == Termination::LandedAtSingularity) j["singularity"] = t.singularity;
  return j;
}

Json curve_to_json(const BifurcationCurve& c) {
  Json samples = Json::array();
  for (std::size_t i = 0; i < c.abs_eps.size(); ++i) samples.push_back({c.abs_eps[i], c.theta[i]});
  Json j = {{"tag", {{"j", c.tag.j}, {"pair", {c.tag.m, c.tag.m2}}, {"side", c.tag.side}}}, {"samples", samples}};
  j["exponent"] = std::isnan(c.fitted_exponent) ? Json(nullptr) : Json(c.fitted_exponent);
  return j;
}

Json ds_invariant_to_json(const DSInvariant& inv) { return {{"order", inv.order}, {"attachment", inv.attachment}}; }

Json polynomial_nf_to_json(const PolynomialNF& nf) {
  Json c = Json::array();
  for (const Series& s : nf.coefficients) c.push_back(series_to_json(s));
  return {{"k", nf.k},
          {"kind", nf.kind == NFKind::Polynomial ? "polynomial" : "rational"},
          {"canonical", nf.canonical},
          {"coefficients", c}};
}

Json kostov_nf_to_json(const KostovNF& nf) {
  Json b = Json::array();
  for (const Series& s : nf.b) b.push_back(series_to_json(s));
  return {{"k", nf.k}, {"b", b}, {"A", series_to_json(nf.A)}};
}

KostovNF kostov_nf_from_json(const Json& j) {
  KostovNF nf;
  nf.k = int_field(j, "k");
  for (const Json& s : field(j, "b")) nf.b.push_back(series_from_json(s));
  nf.A = series_from_json(field(j, "A"));
  return nf;
}

}  // namespace parabolic
