#pragma once

// MUSCL reconstruction of face-left / face-right primitive values from
// four consecutive cell-center samples, limited with van Leer's function.
//
//     MM        M    |    P        PP
//                   v_L v_R
//
// The reconstruction is a pure extrapolation from each side (kappa = -1);
// the limiter drops it to the nearest cell value near sharp gradients.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "euler.hpp"

namespace sodflux {

/// Threshold below which a one-sided difference is treated as zero.
inline constexpr double gradient_epsilon = 2.22e-16;

struct Stencil4
{
  double v_mm = 0.0;
  double v_m = 0.0;
  double v_p = 0.0;
  double v_pp = 0.0;
};

struct GradientRatios
{
  double r_left = 0.0;
  double r_right = 0.0;
};

struct FacePair
{
  double left = 0.0;
  double right = 0.0;
};

struct FaceStates
{
  PrimitiveState left;
  PrimitiveState right;
};

inline GradientRatios gradient_ratios(const Stencil4& s)
{
  const double d_minus = s.v_m - s.v_mm;
  const double d_center = s.v_p - s.v_m;
  const double d_plus = s.v_pp - s.v_p;
  GradientRatios r;
  r.r_left = std::abs(d_minus) <= gradient_epsilon ? 0.0 : d_center / d_minus;
  r.r_right = std::abs(d_plus) <= gradient_epsilon ? 0.0 : d_center / d_plus;
  return r;
}

inline double van_leer_limiter(double r)
{
  return (r + std::abs(r)) / (1.0 + std::abs(r));
}

struct VanLeerLimiter
{
  double operator()(double r) const { return van_leer_limiter(r); }
};

template <class Limiter>
concept FluxLimiter = requires(const Limiter& l, double r) {
  { l(r) } -> std::convertible_to<double>;
};

template <FluxLimiter Limiter = VanLeerLimiter>
FacePair muscl_face_pair(const Stencil4& s, const Limiter& limiter = {})
{
  const GradientRatios r = gradient_ratios(s);
  const double phi_l = limiter(r.r_left);
  const double phi_r = limiter(r.r_right);
  return {s.v_m + 0.5 * phi_l * (s.v_m - s.v_mm), s.v_p - 0.5 * phi_r * (s.v_pp - s.v_p)};
}

enum class GhostPolicy
{
  /// Two ghost cells per side, copies of the nearest interior cell.
  ZeroGradient,
};

/// Face states for all n+1 faces of an n-cell field, left boundary first.
/// Each of rho, u, p is reconstructed independently.
template <FluxLimiter Limiter = VanLeerLimiter>
std::vector<FaceStates> reconstruct_faces(std::span<const PrimitiveState> cells,
                                          GhostPolicy ghosts = GhostPolicy::ZeroGradient,
                                          const Limiter& limiter = {})
{
  if (cells.empty()) {
    throw InvalidConfig("reconstruct_faces: empty field");
  }
  (void)ghosts;
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(cells.size());
  const auto cell = [&](std::ptrdiff_t i) -> const PrimitiveState& {
    return cells[static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(i, 0, n - 1))];
  };

  std::vector<FaceStates> faces(cells.size() + 1);
  for (std::ptrdiff_t f = 0; f <= n; ++f) {
    const PrimitiveState& mm = cell(f - 2);
    const PrimitiveState& m = cell(f - 1);
    const PrimitiveState& p = cell(f);
    const PrimitiveState& pp = cell(f + 1);

    const FacePair rho = muscl_face_pair({mm.rho, m.rho, p.rho, pp.rho}, limiter);
    const FacePair u = muscl_face_pair({mm.u, m.u, p.u, pp.u}, limiter);
    const FacePair pr = muscl_face_pair({mm.p, m.p, p.p, pp.p}, limiter);

    FaceStates& face = faces[static_cast<std::size_t>(f)];
    face.left = {rho.left, u.left, pr.left};
    face.right = {rho.right, u.right, pr.right};
    if (!(face.left.rho > 0.0 && face.left.p > 0.0 && face.right.rho > 0.0 && face.right.p > 0.0)) {
      throw NonPhysicalState("muscl: non-positive reconstructed density or pressure at face " +
                             std::to_string(f));
    }
  }
  return faces;
}

} // namespace sodflux
