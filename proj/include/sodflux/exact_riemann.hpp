#pragma once

// Exact Riemann solver for the 1D Euler equations with a gamma-law gas.
// Newton iteration on the two-branch pressure function for the star
// pressure, followed by self-similar sampling of the wave pattern.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "error.hpp"
#include "euler.hpp"
#include "grid.hpp"

namespace sodflux {

struct RiemannInput
{
  PrimitiveState left;
  PrimitiveState right;
  GasModel gas;

  /// Throws NonPhysicalState for invalid states, VacuumGenerated when the
  /// pressure positivity condition fails.
  void validate() const
  {
    require_valid(left, "RiemannInput.left");
    require_valid(right, "RiemannInput.right");
    const double a_l = sound_speed(left, gas);
    const double a_r = sound_speed(right, gas);
    if (!(2.0 * (a_l + a_r) / (gas.gamma - 1.0) > right.u - left.u)) {
      throw VacuumGenerated("Riemann data violate the pressure positivity condition");
    }
  }
};

enum class WaveKind
{
  Shock,
  Fan,
};

inline const char* to_string(WaveKind k)
{
  return k == WaveKind::Shock ? "shock" : "fan";
}

/// Characteristic speeds bounding each region. For a shock the head and the
/// tail coincide with the shock speed.
struct WaveSpeeds
{
  double left_head = 0.0;
  double left_tail = 0.0;
  double contact = 0.0;
  double right_tail = 0.0;
  double right_head = 0.0;
  // Sound speeds of the two star states.
  double a_star_left = 0.0;
  double a_star_right = 0.0;
};

struct StarRegion
{
  double p_star = 0.0;
  double u_star = 0.0;
  double rho_star_left = 0.0;
  double rho_star_right = 0.0;
  WaveKind left_wave = WaveKind::Fan;
  WaveKind right_wave = WaveKind::Fan;
  WaveSpeeds speeds;
  int iterations = 0;

  [[nodiscard]] PrimitiveState star_left() const { return {rho_star_left, u_star, p_star}; }
  [[nodiscard]] PrimitiveState star_right() const { return {rho_star_right, u_star, p_star}; }
};

struct PressureFunctionValue
{
  double value = 0.0;
  double derivative = 0.0;
};

/// Velocity jump across one outer wave as a function of the trial star
/// pressure. Rarefaction branch for p <= p_side, shock branch otherwise.
inline PressureFunctionValue pressure_function(double p, const PrimitiveState& side, const GasModel& g)
{
  const double gamma = g.gamma;
  if (p <= side.p) {
    const double a = sound_speed(side, g);
    const double ratio = p / side.p;
    const double value = 2.0 * a / (gamma - 1.0) * (std::pow(ratio, (gamma - 1.0) / (2.0 * gamma)) - 1.0);
    const double derivative = std::pow(ratio, -(gamma + 1.0) / (2.0 * gamma)) / (side.rho * a);
    return {value, derivative};
  }
  const double a_k = 2.0 / ((gamma + 1.0) * side.rho);
  const double b_k = (gamma - 1.0) / (gamma + 1.0) * side.p;
  const double root = std::sqrt(a_k / (p + b_k));
  const double value = (p - side.p) * root;
  const double derivative = root * (1.0 - 0.5 * (p - side.p) / (p + b_k));
  return {value, derivative};
}

namespace detail {

inline constexpr double pressure_floor = 1e-14;
inline constexpr double newton_tolerance = 1e-12;
inline constexpr int newton_max_iterations = 100;

/// Two-rarefaction approximation; exact when both waves are fans.
inline double two_rarefaction_guess(const RiemannInput& in)
{
  const double gamma = in.gas.gamma;
  const double z = (gamma - 1.0) / (2.0 * gamma);
  const double a_l = sound_speed(in.left, in.gas);
  const double a_r = sound_speed(in.right, in.gas);
  const double num = a_l + a_r - 0.5 * (gamma - 1.0) * (in.right.u - in.left.u);
  const double den = a_l / std::pow(in.left.p, z) + a_r / std::pow(in.right.p, z);
  return std::pow(std::max(num, 0.0) / den, 1.0 / z);
}

inline double star_density(double p_star, const PrimitiveState& side, const GasModel& g)
{
  const double ratio = p_star / side.p;
  if (p_star > side.p) {
    const double g6 = (g.gamma - 1.0) / (g.gamma + 1.0);
    return side.rho * (ratio + g6) / (g6 * ratio + 1.0);
  }
  return side.rho * std::pow(ratio, 1.0 / g.gamma);
}

/// Shock speed relative to the undisturbed side sound speed; the factor
/// multiplying a_side in u_side -/+ a_side * factor.
inline double shock_factor(double p_star, const PrimitiveState& side, const GasModel& g)
{
  return std::sqrt(1.0 + (g.gamma + 1.0) / (2.0 * g.gamma) * (p_star / side.p - 1.0));
}

} // namespace detail

/// Head/tail/shock speeds of the solved wave pattern.
inline WaveSpeeds wave_speeds(const StarRegion& star, const RiemannInput& in)
{
  const GasModel& g = in.gas;
  const double z = (g.gamma - 1.0) / (2.0 * g.gamma);
  const double a_l = sound_speed(in.left, g);
  const double a_r = sound_speed(in.right, g);

  WaveSpeeds s;
  s.contact = star.u_star;
  // Isentropic relation behind a fan; the Hugoniot density behind a shock.
  s.a_star_left = star.left_wave == WaveKind::Fan ? a_l * std::pow(star.p_star / in.left.p, z)
                                                  : sound_speed(star.star_left(), g);
  s.a_star_right = star.right_wave == WaveKind::Fan ? a_r * std::pow(star.p_star / in.right.p, z)
                                                    : sound_speed(star.star_right(), g);

  if (star.left_wave == WaveKind::Shock) {
    s.left_head = in.left.u - a_l * detail::shock_factor(star.p_star, in.left, g);
    s.left_tail = s.left_head;
  } else {
    s.left_head = in.left.u - a_l;
    s.left_tail = star.u_star - s.a_star_left;
  }

  if (star.right_wave == WaveKind::Shock) {
    s.right_head = in.right.u + a_r * detail::shock_factor(star.p_star, in.right, g);
    s.right_tail = s.right_head;
  } else {
    s.right_head = in.right.u + a_r;
    s.right_tail = star.u_star + s.a_star_right;
  }
  return s;
}

/// Star pressure, velocity, flanking densities, and wave classification.
inline StarRegion solve_star(const RiemannInput& in)
{
  in.validate();
  const PrimitiveState& wl = in.left;
  const PrimitiveState& wr = in.right;
  const double du = wr.u - wl.u;

  double p = std::max(detail::two_rarefaction_guess(in), detail::pressure_floor);
  int iter = 0;
  bool converged = false;
  for (; iter < detail::newton_max_iterations; ++iter) {
    const auto fl = pressure_function(p, wl, in.gas);
    const auto fr = pressure_function(p, wr, in.gas);
    double next = p - (fl.value + fr.value + du) / (fl.derivative + fr.derivative);
    if (next < detail::pressure_floor) {
      next = detail::pressure_floor;
    }
    const double change = 2.0 * std::abs(next - p) / (next + p);
    p = next;
    if (change < detail::newton_tolerance) {
      converged = true;
      ++iter;
      break;
    }
  }
  if (!converged) {
    throw NoConvergence("exact Riemann solver: star pressure did not converge in 100 iterations");
  }

  const auto fl = pressure_function(p, wl, in.gas);
  const auto fr = pressure_function(p, wr, in.gas);

  StarRegion star;
  star.p_star = p;
  star.u_star = 0.5 * (wl.u + wr.u) + 0.5 * (fr.value - fl.value);
  star.rho_star_left = detail::star_density(p, wl, in.gas);
  star.rho_star_right = detail::star_density(p, wr, in.gas);
  star.left_wave = p > wl.p ? WaveKind::Shock : WaveKind::Fan;
  star.right_wave = p > wr.p ? WaveKind::Shock : WaveKind::Fan;
  star.iterations = iter;
  star.speeds = wave_speeds(star, in);
  return star;
}

/// Shock speed from the Rankine-Hugoniot mass condition, S = d(rho u)/d(rho).
inline double rankine_hugoniot_speed(const PrimitiveState& shocked, const PrimitiveState& unshocked)
{
  const double drho = shocked.rho - unshocked.rho;
  if (std::abs(drho) < 1e-14) {
    throw DegenerateJump("rankine_hugoniot_speed: density jump below 1e-14");
  }
  return (shocked.rho * shocked.u - unshocked.rho * unshocked.u) / drho;
}

/// Self-similar solution at xi = x / t.
inline PrimitiveState sample(const StarRegion& star, const RiemannInput& in, double xi)
{
  const GasModel& g = in.gas;
  const double gamma = g.gamma;
  const WaveSpeeds& s = star.speeds;

  if (xi <= s.contact) {
    const PrimitiveState& wl = in.left;
    if (star.left_wave == WaveKind::Shock) {
      return xi <= s.left_head ? wl : star.star_left();
    }
    if (xi <= s.left_head) {
      return wl;
    }
    if (xi > s.left_tail) {
      return star.star_left();
    }
    const double a_l = sound_speed(wl, g);
    const double c = 2.0 / (gamma + 1.0) + (gamma - 1.0) / ((gamma + 1.0) * a_l) * (wl.u - xi);
    return {wl.rho * std::pow(c, 2.0 / (gamma - 1.0)),
            2.0 / (gamma + 1.0) * (a_l + 0.5 * (gamma - 1.0) * wl.u + xi),
            wl.p * std::pow(c, 2.0 * gamma / (gamma - 1.0))};
  }

  const PrimitiveState& wr = in.right;
  if (star.right_wave == WaveKind::Shock) {
    return xi >= s.right_head ? wr : star.star_right();
  }
  if (xi >= s.right_head) {
    return wr;
  }
  if (xi < s.right_tail) {
    return star.star_right();
  }
  const double a_r = sound_speed(wr, g);
  const double c = 2.0 / (gamma + 1.0) - (gamma - 1.0) / ((gamma + 1.0) * a_r) * (wr.u - xi);
  return {wr.rho * std::pow(c, 2.0 / (gamma - 1.0)),
          2.0 / (gamma + 1.0) * (-a_r + 0.5 * (gamma - 1.0) * wr.u + xi),
          wr.p * std::pow(c, 2.0 * gamma / (gamma - 1.0))};
}

struct ExactProfile
{
  std::vector<double> x;
  std::vector<PrimitiveState> states;
  double time = 0.0;
};

/// Exact solution sampled at every cell center of `grid` at time t.
inline ExactProfile exact_profile(const RiemannInput& in, const Grid1D& grid, double jump_position, double t)
{
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw InvalidConfig("exact_profile: time must be finite and >= 0");
  }
  ExactProfile out;
  out.time = t;
  out.x.reserve(grid.n_cells());
  out.states.reserve(grid.n_cells());

  if (t == 0.0) {
    in.validate();
    for (std::size_t i = 0; i < grid.n_cells(); ++i) {
      const double x = grid.center(i);
      out.x.push_back(x);
      out.states.push_back(x < jump_position ? in.left : in.right);
    }
    return out;
  }

  const StarRegion star = solve_star(in);
  for (std::size_t i = 0; i < grid.n_cells(); ++i) {
    const double x = grid.center(i);
    out.x.push_back(x);
    out.states.push_back(sample(star, in, (x - jump_position) / t));
  }
  return out;
}

} // namespace sodflux
