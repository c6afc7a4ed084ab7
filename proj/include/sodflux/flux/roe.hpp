#pragma once

#include <array>
#include <cmath>

#include "../euler.hpp"
#include "method.hpp"

namespace sodflux {

/// Square-root-density weighted averages of the two face states.
struct RoeAverages
{
  double u_roe = 0.0;
  double hT_roe = 0.0;
  double a_roe = 0.0;
  double rho_roe = 0.0;
};

inline RoeAverages roe_average(const PrimitiveState& left, const PrimitiveState& right, const GasModel& g)
{
  const double sl = std::sqrt(left.rho);
  const double sr = std::sqrt(right.rho);
  const double inv = 1.0 / (sl + sr);
  RoeAverages avg;
  avg.u_roe = (sl * left.u + sr * right.u) * inv;
  avg.hT_roe = (sl * total_specific_enthalpy(left, g) + sr * total_specific_enthalpy(right, g)) * inv;
  avg.a_roe = std::sqrt((g.gamma - 1.0) * (avg.hT_roe - 0.5 * avg.u_roe * avg.u_roe));
  avg.rho_roe = sl * sr;
  return avg;
}

/// Roe's linearised flux, F = (F_L + F_R)/2 - 1/2 sum_k |lambda_k| alpha_k K_k.
inline FluxVector flux_roe(const PrimitiveState& left, const PrimitiveState& right, const GasModel& g,
                           const SchemeConfig& cfg = {})
{
  const RoeAverages avg = roe_average(left, right, g);
  const double u = avg.u_roe;
  const double a = avg.a_roe;
  const double h = avg.hT_roe;

  const double d_rho = right.rho - left.rho;
  const double d_u = right.u - left.u;
  const double d_p = right.p - left.p;

  // Wave strengths.
  const double a2 = a * a;
  const std::array<double, 3> alpha = {
    (d_p - avg.rho_roe * a * d_u) / (2.0 * a2),
    d_rho - d_p / a2,
    (d_p + avg.rho_roe * a * d_u) / (2.0 * a2),
  };
  std::array<double, 3> lambda = {std::abs(u - a), std::abs(u), std::abs(u + a)};
  if (cfg.roe_entropy_fix) {
    const double delta = cfg.roe_entropy_fix_fraction * a;
    for (double& l : lambda) {
      if (l < delta) {
        l = (l * l + delta * delta) / (2.0 * delta);
      }
    }
  }
  const std::array<FluxVector, 3> eigenvectors = {{
    {1.0, u - a, h - u * a},
    {1.0, u, 0.5 * u * u},
    {1.0, u + a, h + u * a},
  }};

  FluxVector dissipation;
  for (std::size_t k = 0; k < 3; ++k) {
    dissipation += (lambda[k] * alpha[k]) * eigenvectors[k];
  }
  return 0.5 * (physical_flux(left, g) + physical_flux(right, g)) - 0.5 * dissipation;
}

} // namespace sodflux
