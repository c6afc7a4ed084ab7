#pragma once

#include <algorithm>
#include <cmath>

#include "../error.hpp"
#include "../euler.hpp"

namespace sodflux {

namespace detail {

/// (F_L + F_R)/2 - speed/2 (q_R - q_L)
inline FluxVector central_flux(const PrimitiveState& left, const PrimitiveState& right, const GasModel& g,
                               double speed)
{
  const ConservedState jump = primitive_to_conserved(right, g) - primitive_to_conserved(left, g);
  return 0.5 * (physical_flux(left, g) + physical_flux(right, g)) - advect(0.5 * speed, jump);
}

inline double max_local_speed(const PrimitiveState& left, const PrimitiveState& right, const GasModel& g)
{
  return std::max(std::abs(left.u) + sound_speed(left, g), std::abs(right.u) + sound_speed(right, g));
}

} // namespace detail

/// Kurganov-Tadmor: equal weights on both face fluxes, dissipation from the
/// largest local wave speed.
inline FluxVector flux_kt(const PrimitiveState& left, const PrimitiveState& right, const GasModel& g)
{
  return detail::central_flux(left, right, g, detail::max_local_speed(left, right, g));
}

/// Rusanov (local Lax-Friedrichs).
inline FluxVector flux_rusanov(const PrimitiveState& left, const PrimitiveState& right, const GasModel& g)
{
  return detail::central_flux(left, right, g, detail::max_local_speed(left, right, g));
}

/// Lax-Friedrichs with the grid speed dx/dt.
inline FluxVector flux_lf(const PrimitiveState& left, const PrimitiveState& right, const GasModel& g, double dx,
                          double dt)
{
  if (!(dt > 0.0) || !(dx > 0.0)) {
    throw InvalidConfig("flux_lf: dx and dt must be positive");
  }
  return detail::central_flux(left, right, g, dx / dt);
}

} // namespace sodflux
