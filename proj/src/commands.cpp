#include "parabolic/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <thread>

#include "parabolic/disk_bifurcation.hpp"
#include "parabolic/ds_invariant.hpp"
#include "parabolic/svg.hpp"
#include "parabolic/trajectory.hpp"

namespace parabolic {

namespace {

// Runs body(0..n−1) on a few threads; results are written by index so the
// output does not depend on scheduling.
void parallel_for(int n, const std::function<void(int)>& body) {
  const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, std::max(n, 1));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto run = [&] {
    for (int i = next++; i < n && !failed; i = next++) {
      try {
        body(i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::string describe(const ModelField& f) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "k=%d, eps=%.6g%+.6gi", f.k, f.epsilon.real(), f.epsilon.imag());
  return buf;
}

void require_nondegenerate(const ModelField& f) {
  if (f.modulus() == 0.0) throw Error(ErrorCode::DegenerateParameter, "eps = 0 has a single multiple singularity");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json complex_list(const std::vector<Complex>& values) {
  Json out = Json::array();
  for (const Complex& z : values) out.push_back(complex_to_json(z));
  return out;
}

double parse_real(const std::string& s, const std::string& whole, bool imaginary = false) {
  if (imaginary && (s.empty() || s == "+")) return 1.0;
  if (imaginary && s == "-") return -1.0;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "not a complex number: " + whole);
  return v;
}

}  // namespace

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::DegenerateParameter:
    case ErrorCode::RadiusTooSmall:
      return 2;
    case ErrorCode::NotGeneric:
    case ErrorCode::NotCanonical:
    case ErrorCode::AmbiguousMatch:
    case ErrorCode::CodimensionMismatch:
    case ErrorCode::AtBifurcation:
      return 4;
    default:
      return 3;
  }
}

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw Error(ErrorCode::InvalidArgument, "empty complex number");
  if (s.back() != 'i') {
    if (s.find_first_of("iI") != std::string::npos) throw Error(ErrorCode::InvalidArgument, "not a complex number: " + text);
    return parse_real(s, text);
  }
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t p = s.size(); p-- > 1;)
    if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E') {
      split = p;
      break;
    }
  if (split == std::string::npos) return {0.0, parse_real(s, text, true)};
  return {parse_real(s.substr(0, split), text), parse_real(s.substr(split), text, true)};
}

EigenvalueFunction eigenvalues_of(const Json& input, int truncation) {
  if (truncation < 1) throw Error(ErrorCode::InvalidArgument, "truncation must be positive");
  if (input.is_object() && input.contains("omega")) {
    FamilySpec spec = family_from_json(input);
    // Family files are exact polynomials: pad so that λ reaches the truncation.
    const int nz = std::max(spec.omega.z_order(), truncation + spec.k + 2);
    Bivariate padded(nz, spec.omega.eps_order());
    padded.coefficients().topRows(spec.omega.z_order() + 1) = spec.omega.coefficients();
    spec.omega = padded;
    const EigenvalueFunction lambda = eigenvalue_function(factor_family(spec));
    return EigenvalueFunction::from_lambda(spec.k, lambda.lambda.truncated(std::min(truncation, lambda.order())));
  }
  const EigenvalueFunction lambda = eigenvalue_function_from_json(input);
  return EigenvalueFunction::from_lambda(lambda.k, lambda.lambda.truncated(std::min(truncation, lambda.order())));
}

std::string cmd_portrait(const PortraitArgs& args, const GlobalOptions& options) {
  const ModelField& f = args.field;
  require_nondegenerate(f);
  if (!(args.radius > 0.0) || args.trajectories < 0 || args.size < 16)
    throw Error(ErrorCode::InvalidArgument, "radius, trajectory count and size must be positive");

  SvgCanvas canvas(args.size, args.size, View::square(args.radius));
  canvas.title("phase portrait of z^(k+1) - eps, " + describe(f));

  std::mt19937_64 rng(options.seed);
  std::vector<Complex> starts(args.trajectories);
  for (Complex& z : starts) {
    const double x = unit_uniform(rng);
    const double y = unit_uniform(rng);
    z = {args.radius * (2 * x - 1), args.radius * (2 * y - 1)};
  }
  IntegratorControls sample;
  sample.escape_radius = 2 * args.radius;
  sample.time_cap = 50.0;
  std::vector<std::vector<Complex>> paths(starts.size());
  parallel_for(static_cast<int>(starts.size()), [&](int i) {
    const Trajectory back = integrate(f, starts[i], -1, sample);
    const Trajectory fwd = integrate(f, starts[i], 1, sample);
    std::vector<Complex> path(back.points.rbegin(), back.points.rend());
    path.insert(path.end(), fwd.points.begin() + (fwd.points.empty() ? 0 : 1), fwd.points.end());
    paths[i] = std::move(path);
  });
  for (const auto& path : paths) canvas.polyline(path, palette::generic, 0.8, "trajectory");

  const double launch = std::max(1.5 * args.radius, 3 * f.scale());
  IntegratorControls sep;
  sep.escape_radius = 2 * launch;
  std::vector<Trajectory> seps(2 * f.k);
  parallel_for(2 * f.k, [&](int j) {
    seps[j] = integrate(f, separatrix_launch_point(f, j, launch), separatrix_is_outgoing(j) ? -1 : 1, sep);
  });
  for (int j = 0; j < 2 * f.k; ++j) {
    const bool out = separatrix_is_outgoing(j);
    canvas.polyline(seps[j].points, out ? palette::outgoing : palette::incoming, 1.6,
                    out ? "separatrix outgoing" : "separatrix incoming");
  }
  for (const Complex& z : singularities(f)) canvas.dot(z, 4.0, palette::singularity, "singularity");
  return canvas.str();
}

std::string cmd_star(const StarArgs& args, const GlobalOptions&) {
  const ModelField& f = args.field;
  require_nondegenerate(f);
  if (args.size < 16) throw Error(ErrorCode::InvalidArgument, "size must be positive");
  const double r = args.r > 0.0 ? args.r : 2 * f.scale();
  if (!(r > f.scale())) throw Error(ErrorCode::RadiusTooSmall, "the disk must contain every singularity");

  const PeriodGon gon = periods(f);
  const double r0 = eyelet_radius(f.k, r);
  const TauModel model = build_tau_model(gon, r0);
  const auto eyelets = eyelet_curves(f, r, 256);
  const TangencySet tangencies = tangency_times(tangency_angles(f, r));

  double extent = r0;
  for (const Complex& v : model.polygon) extent = std::max(extent, std::abs(v));
  const double length = 0.5 * extent;

  std::vector<Complex> frame = model.polygon;
  std::vector<std::vector<Complex>> strips;
  for (const Strip& s : model.strips) {
    strips.push_back({s.base_from + length * s.direction, s.base_from, s.base_to, s.base_to + length * s.direction});
    frame.insert(frame.end(), strips.back().begin(), strips.back().end());
  }
  for (const auto& e : eyelets) frame.insert(frame.end(), e.begin(), e.end());

  SvgCanvas canvas(args.size, args.size, View::around(frame, 0.05));
  char buf[64];
  std::snprintf(buf, sizeof buf, ", r=%.6g", r);
  canvas.title("rectified picture of z^(k+1) - eps, " + describe(f) + buf);
  for (const auto& s : strips) canvas.polyline(s, palette::generic, 0.8, "strip");
  canvas.polygon(model.polygon, palette::singularity, 1.2, "period-gon");
  for (const auto& e : eyelets) canvas.polyline(e, palette::separating, 1.2, "eyelet");
  for (const Complex& t : tangencies.t_values) canvas.dot(t, 3.0, palette::singularity, "tangency");
  return canvas.str();
}

std::string cmd_bifdiagram(const BifdiagramArgs& args, const GlobalOptions&) {
  if (args.k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (!(args.r > 0.0)) throw Error(ErrorCode::InvalidArgument, "r must be positive");
  if (!(args.log10_min < args.log10_max)) throw Error(ErrorCode::InvalidArgument, "empty decade range");
  if (args.per_decade < 2 || args.size < 16) throw Error(ErrorCode::InvalidArgument, "sampling and size must be positive");

  TraceOptions trace;
  trace.log10_min = args.log10_min;
  trace.log10_max = args.log10_max;
  trace.per_decade = args.per_decade;
  const std::vector<double> thetas = bifurcation_angles(args.k);
  const int groups = 2 * args.k;
  std::vector<std::vector<BifurcationCurve>> curves(groups);
  parallel_for(groups, [&](int j) {
    for (const CurveTag& tag : curve_tags(args.k, args.r, j)) curves[j].push_back(trace_curve(args.k, args.r, tag, trace));
  });

  if (args.json) {
    Json out = {{"k", args.k}, {"r", args.r}, {"log10_range", {args.log10_min, args.log10_max}}};
    Json list = Json::array();
    for (int j = 0; j < groups; ++j) {
      Json c = Json::array();
      for (const BifurcationCurve& curve : curves[j]) c.push_back(curve_to_json(curve));
      list.push_back({{"j", j}, {"theta", thetas[j]}, {"curves", c}});
    }
    out["groups"] = list;
    return dump(out);
  }

  // Log-radial chart: |ε| = 10^s is drawn at radius (s − min)/(max − min).
  // Side curves leave their ray like |ε|^{1−1/(k+1)}, so the angular offset
  // from θ_j is magnified until the widest group spans a third of its sector.
  double spread = 0.0;
  for (int j = 0; j < groups; ++j)
    for (const BifurcationCurve& c : curves[j])
      for (double t : c.theta) spread = std::max(spread, std::abs(std::remainder(t - thetas[j], 2 * pi)));
  const double sector = pi / groups;
  const double gain = args.angle_gain > 0.0 ? args.angle_gain
                      : spread > 0.0       ? std::max(1.0, sector / (3 * spread))
                                           : 1.0;
  const double span = args.log10_max - args.log10_min;
  auto place = [&](double abs_eps, double theta, int j) {
    const double offset = std::remainder(theta - thetas[j], 2 * pi);
    return std::polar((std::log10(abs_eps) - args.log10_min) / span, thetas[j] + gain * offset);
  };
  SvgCanvas canvas(args.size, args.size, View::square(1.08));
  char buf[200];
  std::snprintf(buf, sizeof buf, "bifurcation loci, k=%d, r=%.6g, log10|eps| in [%.6g, %.6g], angular offset x%.4g",
                args.k, args.r, args.log10_min, args.log10_max, gain);
  canvas.title(buf);
  for (int d = static_cast<int>(std::ceil(args.log10_min)); d <= args.log10_max; ++d) {
    std::vector<Complex> circle;
    for (int s = 0; s <= 360; ++s) circle.push_back(std::polar((d - args.log10_min) / span, 2 * pi * s / 360));
    canvas.polyline(circle, palette::generic, 0.5, "decade", true);
  }
  for (int j = 0; j < groups; ++j) {
    canvas.polyline({0.0, std::polar(1.0, thetas[j])}, palette::generic, 0.5, "axis", true);
    for (const BifurcationCurve& c : curves[j]) {
      std::vector<Complex> pts;
      for (std::size_t i = 0; i < c.abs_eps.size(); ++i) pts.push_back(place(c.abs_eps[i], c.theta[i], j));
      const bool ray = c.tag.side == 0;
      canvas.polyline(pts, ray ? palette::singularity : palette::separating, 1.2,
                      std::string(ray ? "curve ray" : "curve side") + " group-" + std::to_string(j));
    }
  }
  return canvas.str();
}

std::string cmd_classify(const Json& first, const Json& second, const GlobalOptions& options) {
  EigenvalueFunction l1 = eigenvalues_of(first, options.truncation);
  EigenvalueFunction l2 = eigenvalues_of(second, options.truncation);
  if (l1.k != l2.k) throw Error(ErrorCode::CodimensionMismatch, "the two families have different codimension");
  const int n = std::min(l1.order(), l2.order());
  l1 = EigenvalueFunction::from_lambda(l1.k, l1.lambda.truncated(n));
  l2 = EigenvalueFunction::from_lambda(l2.k, l2.lambda.truncated(n));

  Json out = {{"k", l1.k}, {"truncation_order", n}};
  try {
    const std::optional<Complex> zeta = equivalent_fixed_parameter(l1, l2, options.tol);
    out["fixed_parameter"] = zeta ? complex_to_json(*zeta) : Json(nullptr);
  } catch (const AmbiguousMatch& e) {
    out["fixed_parameter"] = nullptr;
    out["fixed_parameter_ambiguous"] = complex_list(e.witnesses());
  }
  const std::optional<FullEquivalence> full = equivalent_full(l1, l2, options.tol);
  out["full"] = full ? Json{{"nu", complex_to_json(full->nu)}, {"xi", series_to_json(full->xi)},
                            {"witnesses", complex_list(full->witnesses)}}
                     : Json(nullptr);
  return dump(out);
}

std::string cmd_canon(const Json& input, const GlobalOptions& options) {
  const EigenvalueFunction lambda = eigenvalues_of(input, options.truncation);
  const Canonicalization c = canonicalize(lambda);
  return dump({{"k", lambda.k},
               {"truncation_order", lambda.order()},
               {"h", series_to_json(c.h)},
               {"canonical", eigenvalue_function_to_json(c.canonical)},
               {"linear_choices", complex_list(c.linear_choices)}});
}

std::string cmd_nf(const Json& input, const NFArgs& args, const GlobalOptions& options) {
  const EigenvalueFunction lambda = eigenvalues_of(input, options.truncation);
  const PolynomialNF nf =
      args.kind == NFKind::Polynomial ? polynomial_nf(lambda, args.eps_order) : rational_nf(lambda, args.eps_order);
  const CanonicalChange change = poly_to_canonical_parameter(nf);
  return dump({{"k", lambda.k},
               {"truncation_order", lambda.order()},
               {"nf", polynomial_nf_to_json(nf)},
               {"canonical_change",
                {{"z_scale", series_to_json(change.z_scale)},
                 {"parameter", series_to_json(change.parameter)},
                 {"nf", polynomial_nf_to_json(change.nf)}}}});
}

std::string cmd_dsinv(const ModelField& field, bool validate, const GlobalOptions&) {
  require_nondegenerate(field);
  const DSInvariant inv = ds_invariant(field, validate);
  Json out = ds_invariant_to_json(inv);
  out["k"] = field.k;
  out["epsilon"] = complex_to_json(field.epsilon);
  out["zigzag"] = is_zigzag(singularities(field), inv.order);
  out["validated"] = validate;
  return dump(out);
}

}  // namespace parabolic
