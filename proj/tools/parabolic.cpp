#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "parabolic/commands.hpp"

using namespace parabolic;

namespace {

struct FieldFlags {
  int k = 1;
  std::string eps;
  std::optional<double> modulus;
  std::optional<double> theta;

  void attach(CLI::App* cmd) {
    cmd->add_option("--k", k, "codimension k of z^(k+1) - eps")->required();
    cmd->add_option("--eps", eps, "parameter, e.g. 0.309+0.951i");
    cmd->add_option("--modulus", modulus, "|eps|, used with --theta");
    cmd->add_option("--theta", theta, "arg eps (kept as the label angle)");
  }

  ModelField field() const {
    if (!eps.empty() && (modulus || theta)) throw Error(ErrorCode::InvalidArgument, "give --eps or --modulus/--theta");
    if (!eps.empty()) return ModelField(k, parse_complex(eps));
    if (!modulus || !theta) throw Error(ErrorCode::InvalidArgument, "the parameter is required");
    return ModelField::polar(k, *modulus, *theta);
  }
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + out);
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase portraits, rectified pictures and classification of parabolic unfoldings"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions options;
  std::string out;
  app.add_option("--truncation", options.truncation, "series truncation order")->capture_default_str();
  app.add_option("--tol", options.tol, "matching tolerance")->capture_default_str();
  app.add_option("--seed", options.seed, "seed for sampled trajectories")->capture_default_str();
  app.add_option("--out", out, "output file (stdout when absent)");

  PortraitArgs portrait;
  FieldFlags portrait_field;
  auto* c_portrait = app.add_subcommand("portrait", "phase portrait (SVG)");
  portrait_field.attach(c_portrait);
  c_portrait->add_option("--radius", portrait.radius)->capture_default_str();
  c_portrait->add_option("--trajectories", portrait.trajectories)->capture_default_str();
  c_portrait->add_option("--size", portrait.size)->capture_default_str();

  StarArgs star;
  FieldFlags star_field;
  auto* c_star = app.add_subcommand("star", "rectified picture with eyelets (SVG)");
  star_field.attach(c_star);
  c_star->add_option("--r", star.r, "disk radius (default 2|eps|^(1/(k+1)))");
  c_star->add_option("--size", star.size)->capture_default_str();

  BifdiagramArgs bif;
  auto* c_bif = app.add_subcommand("bifdiagram", "bifurcation loci near eps = 0 (SVG, or JSON with --json)");
  c_bif->add_option("--k", bif.k)->required();
  c_bif->add_option("--r", bif.r)->capture_default_str();
  c_bif->add_option("--log10-min", bif.log10_min)->capture_default_str();
  c_bif->add_option("--log10-max", bif.log10_max)->capture_default_str();
  c_bif->add_option("--per-decade", bif.per_decade)->capture_default_str();
  c_bif->add_option("--size", bif.size)->capture_default_str();
  c_bif->add_option("--angle-gain", bif.angle_gain, "magnification of the angular offset from each ray (default: automatic)");
  c_bif->add_flag("--json", bif.json, "print the traced curves as JSON");

  std::string first, second;
  auto* c_classify = app.add_subcommand("classify", "compare two family or eigenvalue-function files");
  c_classify->add_option("first", first)->required();
  c_classify->add_option("second", second)->required();

  std::string canon_input;
  auto* c_canon = app.add_subcommand("canon", "canonical parameter of a family or eigenvalue-function file");
  c_canon->add_option("input", canon_input)->required();

  std::string nf_input, form = "polynomial";
  NFArgs nf;
  auto* c_nf = app.add_subcommand("nf", "polynomial or rational normal form");
  c_nf->add_option("input", nf_input)->required();
  c_nf->add_option("--form", form)->check(CLI::IsMember({"polynomial", "rational"}))->capture_default_str();
  c_nf->add_option("--eps-order", nf.eps_order, "order in eps (default: full)");

  FieldFlags ds_field;
  bool validate = false;
  auto* c_ds = app.add_subcommand("dsinv", "combinatorial invariant of the model field (JSON)");
  ds_field.attach(c_ds);
  c_ds->add_flag("--validate", validate, "cross-check against integrated trajectories");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string text;
    if (*c_portrait) {
      portrait.field = portrait_field.field();
      text = cmd_portrait(portrait, options);
    } else if (*c_star) {
      star.field = star_field.field();
      text = cmd_star(star, options);
    } else if (*c_bif) {
      text = cmd_bifdiagram(bif, options);
    } else if (*c_classify) {
      text = cmd_classify(read_json(first), read_json(second), options);
    } else if (*c_canon) {
      text = cmd_canon(read_json(canon_input), options);
    } else if (*c_nf) {
      nf.kind = form == "rational" ? NFKind::Rational : NFKind::Polynomial;
      text = cmd_nf(read_json(nf_input), nf, options);
    } else if (*c_ds) {
      text = cmd_dsinv(ds_field.field(), validate, options);
    }
    emit(text, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
