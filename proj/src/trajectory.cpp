#include "parabolic/trajectory.hpp"

#include <boost/numeric/odeint.hpp>

#include <array>
#include <cmath>

#include "parabolic/error.hpp"

namespace parabolic {

std::string to_string(Termination t) {
  switch (t) {
    case Termination::LandedAtSingularity: return "LandedAtSingularity";
    case Termination::ExitedRadius: return "ExitedRadius";
    case Termination::TimeCapExceeded: return "TimeCapExceeded";
    case Termination::HitDiskBoundary: return "HitDiskBoundary";
  }
  return "Unknown";
}

Trajectory integrate(const ModelField& field, Complex z0, int direction, const IntegratorControls& controls) {
  namespace odeint = boost::numeric::odeint;
  using State = std::array<double, 2>;

  const std::vector<Complex> sing = singularities(field);
  const double rho = field.scale();
  const double capture = controls.capture_factor * rho;
  for (const Complex& s : sing)
    if (std::abs(z0 - s) < capture) throw Error(ErrorCode::InvalidArgument, "start point inside the capture radius");

  const double escape = controls.escape_radius > 0 ? controls.escape_radius : 10 * rho + 10;
  const double time_cap = controls.time_cap * std::pow(field.modulus(), -double(field.k) / (field.k + 1));
  const double sign = direction >= 0 ? 1.0 : -1.0;

  auto rhs = [&](const State& x, State& dxdt, double) {
    const Complex w = sign * field(Complex(x[0], x[1]));
    dxdt[0] = w.real();
    dxdt[1] = w.imag();
  };
  auto stepper = odeint::make_controlled(controls.abs_tol * rho, controls.rel_tol, odeint::runge_kutta_dopri5<State>());

  Trajectory traj;
  State x{z0.real(), z0.imag()};
  double t = 0.0;
  double dt = 1e-3 * std::max(std::abs(z0), rho) / std::max(std::abs(field(z0)), 1e-300);
  traj.points.push_back(z0);
  traj.times.push_back(0.0);

  for (long step = 0; step < controls.max_steps; ++step) {
    if (stepper.try_step(rhs, x, t, dt) != odeint::success) {
      if (t + dt == t) throw Error(ErrorCode::StepSizeUnderflow, "step size underflow");
      continue;
    }
    const Complex z(x[0], x[1]);
    traj.points.push_back(z);
    traj.times.push_back(sign * t);
    for (std::size_t l = 0; l < sing.size(); ++l) {
      if (std::abs(z - sing[l]) < capture) {
        traj.termination = Termination::LandedAtSingularity;
        traj.singularity = static_cast<int>(l);
        return traj;
      }
    }
    if (controls.disk_radius > 0 && std::abs(z) > controls.disk_radius) {
      traj.termination = Termination::HitDiskBoundary;
      return traj;
    }
    if (std::abs(z) > escape) {
      traj.termination = Termination::ExitedRadius;
      return traj;
    }
    if (t > time_cap) break;
  }
  traj.termination = Termination::TimeCapExceeded;
  return traj;
}

bool separatrix_is_outgoing(int j) { return j % 2 == 0; }

Complex separatrix_launch_point(const ModelField& field, int j, double launch_radius) {
  const int k = field.k;
  if (launch_radius <= field.scale()) throw Error(ErrorCode::InvalidArgument, "launch radius inside the singular set");
  const double target = (separatrix_is_outgoing(j) ? -1.0 : 1.0) / (k * std::pow(launch_radius, k));
  Complex z = std::polar(launch_radius, j * pi / k);
  for (int it = 0; it < 60; ++it) {
    const Complex dz = (rectify(field, z, RectifyMode::Series) - target) * field(z);
    z -= dz;
    if (std::abs(dz) < 1e-15 * std::abs(z)) return z;
  }
  throw Error(ErrorCode::NewtonDivergence, "separatrix launch point did not converge");
}

std::vector<Trajectory> separatrices(const ModelField& field, double launch_radius,
                                     const IntegratorControls& controls) {
  std::vector<Trajectory> out;
  for (int j = 0; j < 2 * field.k; ++j) {
    const Complex z0 = separatrix_launch_point(field, j, launch_radius);
    out.push_back(integrate(field, z0, separatrix_is_outgoing(j) ? -1 : 1, controls));
  }
  return out;
}

}  // namespace parabolic
