#pragma once

// Explicit Godunov-type finite-volume time stepping on a uniform grid:
//   q_i^{n+1} = q_i^n - dt/dx (F_{i+1/2} - F_{i-1/2})
// with face fluxes from MUSCL-reconstructed primitive states.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "euler.hpp"
#include "flux_schemes.hpp"
#include "grid.hpp"
#include "muscl.hpp"

namespace sodflux {

inline const PrimitiveState sod_left_state{1.0, 0.0, 1.0};
inline const PrimitiveState sod_right_state{0.125, 0.0, 0.1};

/// dt = Co_max dx / S_max.
inline double derive_dt(double co_max_target, double dx, double s_max_estimate)
{
  if (!(co_max_target > 0.0 && co_max_target < 1.0)) {
    throw InvalidConfig("derive_dt: target Courant number must lie in (0, 1)");
  }
  if (!(s_max_estimate > 0.0) || !std::isfinite(s_max_estimate)) {
    throw InvalidConfig("derive_dt: wave speed estimate must be positive");
  }
  if (!(dx > 0.0) || !std::isfinite(dx)) {
    throw InvalidConfig("derive_dt: dx must be positive");
  }
  return co_max_target * dx / s_max_estimate;
}

/// Defaults reproduce the 200-cell Sod benchmark.
struct RunConfig
{
  Grid1D grid{0.0, 1.0, 200};
  GasModel gas{};
  FluxMethodId method = FluxMethodId::Riemann;
  SchemeConfig scheme{};
  double dt = 0.001;
  double t_final = 0.2;
  double co_max_target = 0.4;
  double s_max_estimate = 2.0;
  double jump_position = 0.5;
  PrimitiveState left = sod_left_state;
  PrimitiveState right = sod_right_state;

  void validate() const
  {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
      throw InvalidConfig("time step must be positive");
    }
    if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
      throw InvalidConfig("final time must be finite and >= 0");
    }
    if (!left.is_valid() || !right.is_valid()) {
      throw InvalidConfig("initial states need finite values with rho > 0 and p > 0");
    }
    scheme.validate();
  }

  /// Number of steps to reach t_final exactly.
  [[nodiscard]] std::size_t step_count() const
  {
    const double n = std::round(t_final / dt);
    if (std::abs(n * dt - t_final) > 1e-9) {
      throw InvalidConfig("final time must be an integer multiple of the time step");
    }
    return static_cast<std::size_t>(n);
  }
};

struct SolutionField
{
  double time = 0.0;
  std::size_t steps = 0;
  std::vector<ConservedState> cells;
  double max_courant_observed = 0.0;
  /// Running sum of dt (F_left_boundary - F_right_boundary); the change of
  /// sum(q) dx over the run equals this value.
  ConservedState net_boundary_inflow{};
};

inline std::vector<PrimitiveState> to_primitive(const SolutionField& field, const GasModel& g)
{
  std::vector<PrimitiveState> out;
  out.reserve(field.cells.size());
  for (std::size_t i = 0; i < field.cells.size(); ++i) {
    try {
      out.push_back(conserved_to_primitive(field.cells[i], g));
    } catch (const NonPhysicalState& e) {
      throw NonPhysicalState("fv_solver: step " + std::to_string(field.steps) + ", cell " + std::to_string(i + 1) +
                             ": " + e.what());
    }
  }
  return out;
}

inline double max_courant(std::span<const PrimitiveState> cells, const GasModel& g, double dt, double dx)
{
  double speed = 0.0;
  for (const auto& w : cells) {
    speed = std::max(speed, std::abs(w.u) + sound_speed(w, g));
  }
  return speed * dt / dx;
}

/// Piecewise-constant initial data: left state for cell centers strictly
/// left of the jump, right state elsewhere.
inline SolutionField initialize_sod(const RunConfig& cfg)
{
  cfg.validate();
  SolutionField field;
  field.cells.reserve(cfg.grid.n_cells());
  std::vector<PrimitiveState> prims;
  prims.reserve(cfg.grid.n_cells());
  for (std::size_t i = 0; i < cfg.grid.n_cells(); ++i) {
    const PrimitiveState& w = cfg.grid.center(i) < cfg.jump_position ? cfg.left : cfg.right;
    prims.push_back(w);
    field.cells.push_back(primitive_to_conserved(w, cfg.gas));
  }
  field.max_courant_observed = max_courant(prims, cfg.gas, cfg.dt, cfg.grid.dx());
  return field;
}

/// Face fluxes for all n+1 faces of the current field.
inline std::vector<FluxVector> face_fluxes(std::span<const PrimitiveState> prims, const RunConfig& cfg)
{
  const std::vector<FaceStates> faces = reconstruct_faces(prims);
  std::vector<FluxVector> fluxes;
  fluxes.reserve(faces.size());
  for (const FaceStates& face : faces) {
    fluxes.push_back(compute_face_flux(cfg.method, face, cfg.gas, cfg.scheme, cfg.grid.dx(), cfg.dt));
  }
  return fluxes;
}

/// One explicit step of size cfg.dt.
inline SolutionField step(SolutionField field, const RunConfig& cfg)
{
  if (field.cells.size() != cfg.grid.n_cells()) {
    throw InvalidConfig("step: field size does not match the grid");
  }
  const std::vector<PrimitiveState> prims = to_primitive(field, cfg.gas);

  std::vector<FluxVector> fluxes;
  try {
    fluxes = face_fluxes(prims, cfg);
  } catch (const NumericalFailure& e) {
    throw NonPhysicalState("fv_solver: step " + std::to_string(field.steps + 1) + ": " + e.what());
  }

  const double ratio = cfg.dt / cfg.grid.dx();
  for (std::size_t i = 0; i < field.cells.size(); ++i) {
    field.cells[i] -= integrate(ratio, fluxes[i + 1] - fluxes[i]);
  }
  field.net_boundary_inflow += integrate(cfg.dt, fluxes.front() - fluxes.back());

  field.steps += 1;
  field.time = static_cast<double>(field.steps) * cfg.dt;
  const std::vector<PrimitiveState> updated = to_primitive(field, cfg.gas);
  field.max_courant_observed =
    std::max(field.max_courant_observed, max_courant(updated, cfg.gas, cfg.dt, cfg.grid.dx()));
  return field;
}

/// Advance n steps.
inline SolutionField advance(SolutionField field, const RunConfig& cfg, std::size_t n_steps)
{
  for (std::size_t k = 0; k < n_steps; ++k) {
    field = step(std::move(field), cfg);
  }
  return field;
}

inline SolutionField run(const RunConfig& cfg)
{
  cfg.validate();
  const std::size_t n = cfg.step_count();
  return advance(initialize_sod(cfg), cfg, n);
}

} // namespace sodflux
