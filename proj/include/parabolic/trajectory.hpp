#pragma once

#include <string>
#include <vector>

#include "parabolic/model_field.hpp"

namespace parabolic {

enum class Termination { LandedAtSingularity, ExitedRadius, TimeCapExceeded, HitDiskBoundary };

std::string to_string(Termination t);

struct Trajectory {
  std::vector<Complex> points;
  std::vector<double> times;
  Termination termination = Termination::TimeCapExceeded;
  int singularity = -1;  // landing index when termination is LandedAtSingularity
};

struct IntegratorControls {
  double rel_tol = 1e-10;
  double abs_tol = 1e-13;         // in units of |ε|^{1/(k+1)}
  double capture_factor = 1e-6;   // capture radius in units of |ε|^{1/(k+1)}
  double escape_radius = 0.0;     // 0 selects 10·|ε|^{1/(k+1)} + 10
  double time_cap = 1e4;          // in units of |ε|^{−k/(k+1)}
  double disk_radius = 0.0;       // > 0 stops on leaving B(0, disk_radius)
  long max_steps = 20'000'000;
};

// Integrates ż = ±P_ε(z) (direction ±1) with an adaptive Dormand–Prince pair.
Trajectory integrate(const ModelField& field, Complex z0, int direction, const IntegratorControls& controls = {});

// Point at distance ≈ launch_radius on the separatrix with asymptotic
// direction arg z = jπ/k: the rectifying branch ξ is real there (negative on
// outgoing separatrices, positive on incoming ones), so the launch point is
// found by Newton on ξ(z) = ∓1/(k R^k).
Complex separatrix_launch_point(const ModelField& field, int j, double launch_radius);

// Even j are outgoing (integrated backwards in time), odd j incoming.
bool separatrix_is_outgoing(int j);

std::vector<Trajectory> separatrices(const ModelField& field, double launch_radius,
                                     const IntegratorControls& controls = {});

}  // namespace parabolic
