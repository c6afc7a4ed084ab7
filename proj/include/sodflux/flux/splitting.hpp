#pragma once

// Flux-vector splitting (Steger-Warming, van Leer), the AUSM family, and
// AUFS. Each face flux is assembled from a forward-moving contribution of
// the face-left state and a backward-moving one of the face-right state.

#include <algorithm>
#include <cmath>

#include "../euler.hpp"
#include "method.hpp"

namespace sodflux {

enum class SplitDirection
{
  Plus,
  Minus,
};

// --- Steger-Warming ----------------------------------------------------------

/// Steger-Warming F+ or F- for a gamma-law gas, built from the split
/// eigenvalues (u - a, u, u + a).
inline FluxVector steger_warming_split(const PrimitiveState& w, const GasModel& g, SplitDirection dir)
{
  const double gamma = g.gamma;
  const double a = sound_speed(w, g);
  const double sign = dir == SplitDirection::Plus ? 1.0 : -1.0;
  const auto part = [sign](double lambda) { return 0.5 * (lambda + sign * std::abs(lambda)); };
  const double l1 = part(w.u - a);
  const double l2 = part(w.u);
  const double l3 = part(w.u + a);
  const double h = total_specific_enthalpy(w, g);
  const double scale = w.rho / (2.0 * gamma);
  return scale * FluxVector{l1 + 2.0 * (gamma - 1.0) * l2 + l3,
                            (w.u - a) * l1 + 2.0 * (gamma - 1.0) * w.u * l2 + (w.u + a) * l3,
                            (h - w.u * a) * l1 + (gamma - 1.0) * w.u * w.u * l2 + (h + w.u * a) * l3};
}

inline FluxVector flux_sw_fvs(const PrimitiveState& left, const PrimitiveState& right, const GasModel& g)
{
  return steger_warming_split(left, g, SplitDirection::Plus) + steger_warming_split(right, g, SplitDirection::Minus);
}

// --- van Leer ------------------------------------------------------------------

inline FluxVector van_leer_split(const PrimitiveState& w, const GasModel& g, SplitDirection dir)
{
  const double a = sound_speed(w, g);
  const double mach = w.u / a;
  if (mach >= 1.0) {
    return dir == SplitDirection::Plus ? physical_flux(w, g) : FluxVector{};
  }
  if (mach <= -1.0) {
    return dir == SplitDirection::Plus ? FluxVector{} : physical_flux(w, g);
  }
  const double gamma = g.gamma;
  const double sign = dir == SplitDirection::Plus ? 1.0 : -1.0;
  const double mass = sign * 0.25 * w.rho * a * (mach + sign) * (mach + sign);
  const double velocity = ((gamma - 1.0) * w.u + sign * 2.0 * a) / gamma;
  return {mass, mass * velocity, mass * velocity * velocity * gamma * gamma / (2.0 * (gamma * gamma - 1.0))};
}

inline FluxVector flux_vanleer_fvs(const PrimitiveState& left, const PrimitiveState& right, const GasModel& g)
{
  return van_leer_split(left, g, SplitDirection::Plus) + van_leer_split(right, g, SplitDirection::Minus);
}

// --- AUSM family -------------------------------------------------------------

enum class AusmVariant
{
  Basic,
  Plus,
  PlusUp,
};

namespace detail {

inline double mach_split_first(double m, SplitDirection dir)
{
  const double sign = dir == SplitDirection::Plus ? 1.0 : -1.0;
  return 0.5 * (m + sign * std::abs(m));
}

/// Second-degree split Mach polynomial.
inline double mach_split_2(double m, SplitDirection dir)
{
  if (std::abs(m) >= 1.0) {
    return mach_split_first(m, dir);
  }
  const double sign = dir == SplitDirection::Plus ? 1.0 : -1.0;
  return sign * 0.25 * (m + sign) * (m + sign);
}

/// Fourth-degree split Mach polynomial with coefficient beta.
inline double mach_split_4(double m, SplitDirection dir, double beta)
{
  if (std::abs(m) >= 1.0) {
    return mach_split_first(m, dir);
  }
  const double sign = dir == SplitDirection::Plus ? 1.0 : -1.0;
  const double q = m * m - 1.0;
  return sign * 0.25 * (m + sign) * (m + sign) + sign * beta * q * q;
}

/// Pressure weight P+-(M); alpha = 0 gives the original AUSM polynomial.
inline double pressure_split_5(double m, SplitDirection dir, double alpha)
{
  const double sign = dir == SplitDirection::Plus ? 1.0 : -1.0;
  if (std::abs(m) >= 1.0) {
    return mach_split_first(m, dir) / m;
  }
  const double q = m * m - 1.0;
  return 0.25 * (m + sign) * (m + sign) * (2.0 - sign * m) + sign * alpha * m * q * q;
}

/// Common interface sound speed of AUSM+: the smaller of the two
/// critical-speed-scaled values.
inline double ausm_plus_interface_sound_speed(const PrimitiveState& left, const PrimitiveState& right,
                                              const GasModel& g)
{
  const double factor = 2.0 * (g.gamma - 1.0) / (g.gamma + 1.0);
  const double a_crit_l = std::sqrt(factor * total_specific_enthalpy(left, g));
  const double a_crit_r = std::sqrt(factor * total_specific_enthalpy(right, g));
  const double a_l = a_crit_l * a_crit_l / std::max(a_crit_l, left.u);
  const double a_r = a_crit_r * a_crit_r / std::max(a_crit_r, -right.u);
  return std::min(a_l, a_r);
}

/// Mass flux m * Psi upwinded on the sign of the interface mass flux, plus
/// the interface pressure on the momentum row.
inline FluxVector ausm_assemble(double mass_flux, double pressure, const PrimitiveState& left,
                                const PrimitiveState& right, const GasModel& g)
{
  const PrimitiveState& up = mass_flux >= 0.0 ? left : right;
  const double h = total_specific_enthalpy(up, g);
  return {mass_flux, mass_flux * up.u + pressure, mass_flux * h};
}

} // namespace detail

inline FluxVector flux_ausm(AusmVariant variant, const PrimitiveState& left, const PrimitiveState& right,
                            const GasModel& g, const SchemeConfig& cfg = {})
{
  using detail::mach_split_2;
  using detail::mach_split_4;
  using detail::pressure_split_5;
  constexpr auto plus = SplitDirection::Plus;
  constexpr auto minus = SplitDirection::Minus;

  if (variant == AusmVariant::Basic) {
    // Each side convects with its own sound speed.
    const double a_l = sound_speed(left, g);
    const double a_r = sound_speed(right, g);
    const double m_l = left.u / a_l;
    const double m_r = right.u / a_r;
    const double m_face = mach_split_2(m_l, plus) + mach_split_2(m_r, minus);
    const double p_face = pressure_split_5(m_l, plus, 0.0) * left.p + pressure_split_5(m_r, minus, 0.0) * right.p;
    const double mass_flux = m_face >= 0.0 ? m_face * left.rho * a_l : m_face * right.rho * a_r;
    return detail::ausm_assemble(mass_flux, p_face, left, right, g);
  }

  const double a_face = detail::ausm_plus_interface_sound_speed(left, right, g);
  const double m_l = left.u / a_face;
  const double m_r = right.u / a_face;
  const double beta = cfg.ausm_plus_beta;

  if (variant == AusmVariant::Plus) {
    const double alpha = cfg.ausm_plus_alpha;
    const double m_face = mach_split_4(m_l, plus, beta) + mach_split_4(m_r, minus, beta);
    const double p_face =
      pressure_split_5(m_l, plus, alpha) * left.p + pressure_split_5(m_r, minus, alpha) * right.p;
    const double mass_flux = a_face * (m_face >= 0.0 ? m_face * left.rho : m_face * right.rho);
    return detail::ausm_assemble(mass_flux, p_face, left, right, g);
  }

  // AUSM+-up: pressure diffusion in the mass flux and velocity diffusion in
  // the pressure flux, both scaled for low Mach numbers.
  const double m_bar_sq = (left.u * left.u + right.u * right.u) / (2.0 * a_face * a_face);
  const double cutoff_sq = cfg.ausm_up_cutoff_mach * cfg.ausm_up_cutoff_mach;
  const double m_o = std::sqrt(std::min(1.0, std::max(m_bar_sq, cutoff_sq)));
  const double f_a = m_o * (2.0 - m_o);
  const double alpha = cfg.ausm_plus_alpha * (-4.0 + 5.0 * f_a * f_a);
  const double rho_face = 0.5 * (left.rho + right.rho);

  const double m_pressure = -cfg.ausm_up_kp / f_a * std::max(1.0 - cfg.ausm_up_sigma * m_bar_sq, 0.0) *
                            (right.p - left.p) / (rho_face * a_face * a_face);
  const double m_face = mach_split_4(m_l, plus, beta) + mach_split_4(m_r, minus, beta) + m_pressure;

  const double p_plus = pressure_split_5(m_l, plus, alpha);
  const double p_minus = pressure_split_5(m_r, minus, alpha);
  const double p_velocity =
    -cfg.ausm_up_ku * p_plus * p_minus * (left.rho + right.rho) * (f_a * a_face) * (right.u - left.u);
  const double p_face = p_plus * left.p + p_minus * right.p + p_velocity;

  const double mass_flux = a_face * (m_face >= 0.0 ? m_face * left.rho : m_face * right.rho);
  return detail::ausm_assemble(mass_flux, p_face, left, right, g);
}

// --- AUFS ----------------------------------------------------------------------

/// Artificially upstream splitting. The Mach number of the averaged face
/// velocity, M = |u_avg| / a_avg clipped to 1, weights a convective part
/// upwinded on the sign of u_avg against an acoustic part whose signal
/// speeds are set artificially to -/+ a_avg around the face.
inline FluxVector flux_aufs(const PrimitiveState& left, const PrimitiveState& right, const GasModel& g)
{
  const double a_l = sound_speed(left, g);
  const double a_r = sound_speed(right, g);
  const double u_avg = 0.5 * (left.u + right.u);
  const double a_avg = 0.5 * (a_l + a_r);
  const double weight = std::min(std::abs(u_avg) / a_avg, 1.0);

  const FluxVector f_l = physical_flux(left, g);
  const FluxVector f_r = physical_flux(right, g);
  const ConservedState jump = primitive_to_conserved(right, g) - primitive_to_conserved(left, g);

  FluxVector convective = 0.5 * (f_l + f_r);
  if (u_avg > 0.0) {
    convective = f_l;
  } else if (u_avg < 0.0) {
    convective = f_r;
  }
  const FluxVector acoustic = 0.5 * (f_l + f_r) - advect(0.5 * a_avg, jump);
  if (weight >= 1.0) {
    return convective;
  }
  return weight * convective + (1.0 - weight) * acoustic;
}

} // namespace sodflux
