#pragma once

#include <json.hpp>

#include "parabolic/disk_bifurcation.hpp"
#include "parabolic/ds_invariant.hpp"
#include "parabolic/normal_forms.hpp"
#include "parabolic/series.hpp"
#include "parabolic/trajectory.hpp"
#include "parabolic/unfolding.hpp"

namespace parabolic {

using Json = nlohmann::json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

// {"truncation": N, "coefficients": [{"deg": d, "re": x, "im": y}, ...]}; zero degrees omitted.
Json series_to_json(const Series& s);
Series series_from_json(const Json& j);

// {"k": k, "omega": {"Nz": .., "Neps": .., "coefficients": [{"m", "n", "re", "im"}, ...]}}
Json family_to_json(const FamilySpec& spec);
FamilySpec family_from_json(const Json& j);

// Series layout of λ plus "k" and "canonical".
Json eigenvalue_function_to_json(const EigenvalueFunction& lambda);
EigenvalueFunction eigenvalue_function_from_json(const Json& j);

Json trajectory_to_json(const Trajectory& t);
Json curve_to_json(const BifurcationCurve& c);
Json ds_invariant_to_json(const DSInvariant& inv);

Json polynomial_nf_to_json(const PolynomialNF& nf);
Json kostov_nf_to_json(const KostovNF& nf);
KostovNF kostov_nf_from_json(const Json& j);

}  // namespace parabolic
