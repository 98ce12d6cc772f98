#pragma once

#include <cstdint>
#include <string>

#include "parabolic/error.hpp"
#include "parabolic/json_io.hpp"
#include "parabolic/model_field.hpp"
#include "parabolic/normal_forms.hpp"
#include "parabolic/unfolding.hpp"

namespace parabolic {

struct GlobalOptions {
  int truncation = 32;
  double tol = match_tol;
  std::uint64_t seed = 0;
};

struct PortraitArgs {
  ModelField field;
  double radius = 1.5;
  int trajectories = 24;
  int size = 800;
};

struct StarArgs {
  ModelField field;
  double r = 0.0;  // 0 selects 2|ε|^{1/(k+1)}
  int size = 800;
};

struct BifdiagramArgs {
  int k = 1;
  double r = 1.0;
  double log10_min = -6.0;
  double log10_max = -2.0;
  int per_decade = 20;
  int size = 800;
  double angle_gain = 0.0;  // magnification of θ − θ_j; 0 chooses one that separates the curves
  bool json = false;
};

struct NFArgs {
  NFKind kind = NFKind::Polynomial;
  int eps_order = -1;
};

// Exit status for a failure: 2 usage, 3 numerical failure, 4 semantic mismatch.
int exit_code(ErrorCode code);

// "1", "-0.5i", "0.309+0.951i", "1e-3-2e-4i".
Complex parse_complex(const std::string& text);

// λ of a family file (padded to the truncation and factored) or of a λ file,
// truncated to at most `truncation`.
EigenvalueFunction eigenvalues_of(const Json& input, int truncation);

std::string cmd_portrait(const PortraitArgs& args, const GlobalOptions& options);
std::string cmd_star(const StarArgs& args, const GlobalOptions& options);
std::string cmd_bifdiagram(const BifdiagramArgs& args, const GlobalOptions& options);
std::string cmd_classify(const Json& first, const Json& second, const GlobalOptions& options);
std::string cmd_canon(const Json& input, const GlobalOptions& options);
std::string cmd_nf(const Json& input, const NFArgs& args, const GlobalOptions& options);
std::string cmd_dsinv(const ModelField& field, bool validate, const GlobalOptions& options);

}  // namespace parabolic
