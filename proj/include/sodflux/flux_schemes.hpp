#pragma once

// Face-flux construction: the 22 methods and a single dispatcher.

#include "euler.hpp"
#include "exact_riemann.hpp"
#include "flux/central.hpp"
#include "flux/hll.hpp"
#include "flux/method.hpp"
#include "flux/roe.hpp"
#include "flux/splitting.hpp"
#include "muscl.hpp"

namespace sodflux {

/// Godunov flux: exact local Riemann solution sampled on the face (x/t = 0).
inline FluxVector flux_exact(const PrimitiveState& left, const PrimitiveState& right, const GasModel& g)
{
  const RiemannInput in{left, right, g};
  const StarRegion star = solve_star(in);
  const PrimitiveState w = sample(star, in, 0.0);
  const double mass_flux = w.rho * w.u;
  return {mass_flux, mass_flux * w.u + w.p, (g.gamma * w.p / (g.gamma - 1.0) + 0.5 * w.rho * w.u * w.u) * w.u};
}

/// dx and dt are read only by Lax-Friedrichs.
inline FluxVector compute_face_flux(FluxMethodId method, const FaceStates& face, const GasModel& g,
                                    const SchemeConfig& cfg, double dx, double dt)
{
  const PrimitiveState& l = face.left;
  const PrimitiveState& r = face.right;
  switch (method) {
    case FluxMethodId::Riemann: return flux_exact(l, r, g);
    case FluxMethodId::Roe: return flux_roe(l, r, g, cfg);
    case FluxMethodId::KNP: return flux_knp(l, r, g);
    case FluxMethodId::KT: return flux_kt(l, r, g);
    case FluxMethodId::SW: return flux_sw_fvs(l, r, g);
    case FluxMethodId::VanLeerFVS: return flux_vanleer_fvs(l, r, g);
    case FluxMethodId::AUSM: return flux_ausm(AusmVariant::Basic, l, r, g, cfg);
    case FluxMethodId::AUSMPlus: return flux_ausm(AusmVariant::Plus, l, r, g, cfg);
    case FluxMethodId::AUSMPlusUp: return flux_ausm(AusmVariant::PlusUp, l, r, g, cfg);
    case FluxMethodId::AUFS: return flux_aufs(l, r, g);
    case FluxMethodId::HLLDavis1: return flux_hll(WaveSpeedVariant::Davis1, l, r, g);
    case FluxMethodId::HLLDavis2: return flux_hll(WaveSpeedVariant::Davis2, l, r, g);
    case FluxMethodId::HLLRoe: return flux_hll(WaveSpeedVariant::RoeEig, l, r, g);
    case FluxMethodId::HLLEinfeldt: return flux_hll(WaveSpeedVariant::Einfeldt, l, r, g);
    case FluxMethodId::HLLPBased: return flux_hll(WaveSpeedVariant::PBased, l, r, g);
    case FluxMethodId::HLLCDavis1: return flux_hllc(WaveSpeedVariant::Davis1, l, r, g);
    case FluxMethodId::HLLCDavis2: return flux_hllc(WaveSpeedVariant::Davis2, l, r, g);
    case FluxMethodId::HLLCRoe: return flux_hllc(WaveSpeedVariant::RoeEig, l, r, g);
    case FluxMethodId::HLLCEinfeldt: return flux_hllc(WaveSpeedVariant::Einfeldt, l, r, g);
    case FluxMethodId::HLLCPBased: return flux_hllc(WaveSpeedVariant::PBased, l, r, g);
    case FluxMethodId::LF: return flux_lf(l, r, g, dx, dt);
    case FluxMethodId::Rusanov: return flux_rusanov(l, r, g);
  }
  throw InvalidConfig("compute_face_flux: unknown flux method");
}

} // namespace sodflux
