#pragma once

// HLL (two-wave) and HLLC (three-wave) approximate Riemann fluxes with five
// choices of outer signal speeds, plus the KNP central-upwind flux which
// shares the HLL combination formula.

#include <algorithm>
#include <cmath>

#include "../euler.hpp"
#include "roe.hpp"

namespace sodflux {

enum class WaveSpeedVariant
{
  Davis1,
  Davis2,
  RoeEig,
  Einfeldt,
  PBased,
};

struct WaveSpeedPair
{
  double s_left = 0.0;
  double s_right = 0.0;
};

namespace detail {

/// Shock-compression factor used by the pressure-based estimate.
inline double pbased_factor(double p_star, double p_side, const GasModel& g)
{
  if (p_star <= p_side) {
    return 1.0;
  }
  return std::sqrt(1.0 + (p_star / p_side - 1.0) * (g.gamma + 1.0) / (2.0 * g.gamma));
}

} // namespace detail

/// Pressure used by the PBased estimate to pick the shock/fan branch on each side.
inline double pbased_star_pressure(const PrimitiveState& left, const PrimitiveState& right, const GasModel& g)
{
  const double a_l = sound_speed(left, g);
  const double a_r = sound_speed(right, g);
  return 0.5 * (left.p + right.p) + 0.125 * (right.u - left.u) * (a_r + a_l) * (right.rho + left.rho);
}

inline WaveSpeedPair wave_speed_estimate(WaveSpeedVariant variant, const PrimitiveState& left,
                                         const PrimitiveState& right, const GasModel& g)
{
  const double a_l = sound_speed(left, g);
  const double a_r = sound_speed(right, g);
  switch (variant) {
    case WaveSpeedVariant::Davis1:
      return {left.u - a_l, right.u + a_r};
    case WaveSpeedVariant::Davis2:
      return {std::min(left.u - a_l, right.u - a_r), std::max(left.u + a_l, right.u + a_r)};
    case WaveSpeedVariant::RoeEig: {
      const RoeAverages avg = roe_average(left, right, g);
      return {avg.u_roe - avg.a_roe, avg.u_roe + avg.a_roe};
    }
    case WaveSpeedVariant::Einfeldt: {
      const double sl = std::sqrt(left.rho);
      const double sr = std::sqrt(right.rho);
      const double sum = sl + sr;
      const double du = right.u - left.u;
      const double u_roe = (sl * left.u + sr * right.u) / sum;
      const double d = std::sqrt((a_l * a_l * sl + a_r * a_r * sr) / sum + 0.5 * sl * sr * du * du / (sum * sum));
      return {u_roe - d, u_roe + d};
    }
    case WaveSpeedVariant::PBased: {
      const double p_star = pbased_star_pressure(left, right, g);
      return {left.u - detail::pbased_factor(p_star, left.p, g) * a_l,
              right.u + detail::pbased_factor(p_star, right.p, g) * a_r};
    }
  }
  return {left.u - a_l, right.u + a_r};
}

namespace detail {

inline constexpr double hll_degenerate_width = 1e-12;

/// The HLL average state flux for given outer speeds. Shared verbatim by
/// the HLL family and KNP.
inline FluxVector hll_combine(double s_left, double s_right, const FluxVector& f_left, const FluxVector& f_right,
                              const ConservedState& q_left, const ConservedState& q_right)
{
  // Also catches crossed estimates (s_left > s_right) from strongly
  // compressive data; testing it first keeps the result mirror-symmetric.
  const double width = s_right - s_left;
  if (width < hll_degenerate_width) {
    return 0.5 * (f_left + f_right);
  }
  if (s_left >= 0.0) {
    return f_left;
  }
  if (s_right <= 0.0) {
    return f_right;
  }
  return (s_right * f_left - s_left * f_right + advect(s_left * s_right, q_right - q_left)) / width;
}

} // namespace detail

inline FluxVector flux_hll(WaveSpeedVariant variant, const PrimitiveState& left, const PrimitiveState& right,
                           const GasModel& g)
{
  const WaveSpeedPair s = wave_speed_estimate(variant, left, right, g);
  return detail::hll_combine(s.s_left, s.s_right, physical_flux(left, g), physical_flux(right, g),
                             primitive_to_conserved(left, g), primitive_to_conserved(right, g));
}

/// Speed of the middle wave from the HLL outer speeds.
inline double hllc_contact_speed(double s_left, double s_right, const PrimitiveState& left,
                                 const PrimitiveState& right)
{
  const double ml = left.rho * (s_left - left.u);
  const double mr = right.rho * (s_right - right.u);
  return (right.p - left.p + ml * left.u - mr * right.u) / (ml - mr);
}

namespace detail {

/// Conserved state between the outer wave s_side and the contact s_star.
inline ConservedState hllc_star_state(double s_side, double s_star, const PrimitiveState& w, const GasModel& g)
{
  const double factor = w.rho * (s_side - w.u) / (s_side - s_star);
  const double energy_per_mass = w.p / ((g.gamma - 1.0) * w.rho) + 0.5 * w.u * w.u;
  return {factor, factor * s_star,
          factor * (energy_per_mass + (s_star - w.u) * (s_star + w.p / (w.rho * (s_side - w.u))))};
}

} // namespace detail

/// HLL with the contact wave restored (Toro-Spruce-Speares construction).
inline FluxVector flux_hllc(WaveSpeedVariant variant, const PrimitiveState& left, const PrimitiveState& right,
                            const GasModel& g)
{
  const WaveSpeedPair s = wave_speed_estimate(variant, left, right, g);
  const FluxVector f_l = physical_flux(left, g);
  const FluxVector f_r = physical_flux(right, g);
  if (s.s_right - s.s_left < detail::hll_degenerate_width) {
    return 0.5 * (f_l + f_r);
  }
  if (s.s_left >= 0.0) {
    return f_l;
  }
  if (s.s_right <= 0.0) {
    return f_r;
  }
  const double s_star = hllc_contact_speed(s.s_left, s.s_right, left, right);
  if (s_star >= 0.0) {
    const ConservedState q_l = primitive_to_conserved(left, g);
    return f_l + advect(s.s_left, detail::hllc_star_state(s.s_left, s_star, left, g) - q_l);
  }
  const ConservedState q_r = primitive_to_conserved(right, g);
  return f_r + advect(s.s_right, detail::hllc_star_state(s.s_right, s_star, right, g) - q_r);
}

/// Kurganov-Noelle-Petrova central-upwind flux with one-sided local speeds
/// clamped through zero.
inline FluxVector flux_knp(const PrimitiveState& left, const PrimitiveState& right, const GasModel& g)
{
  const double a_l = sound_speed(left, g);
  const double a_r = sound_speed(right, g);
  const double a_plus = std::max({left.u + a_l, right.u + a_r, 0.0});
  const double a_minus = std::min({left.u - a_l, right.u - a_r, 0.0});
  return detail::hll_combine(a_minus, a_plus, physical_flux(left, g), physical_flux(right, g),
                             primitive_to_conserved(left, g), primitive_to_conserved(right, g));
}

} // namespace sodflux
