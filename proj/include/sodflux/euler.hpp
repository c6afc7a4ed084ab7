#pragma once

// One-dimensional Euler equations for a calorically perfect gas:
// state types, conversions, and the physical flux F(q).

#include <cmath>
#include <sstream>
#include <string>

#include "error.hpp"

namespace sodflux {

/// Constant-gamma ideal gas.
struct GasModel
{
  double gamma = 1.4;

  constexpr GasModel() = default;
  explicit GasModel(double g) : gamma(g)
  {
    if (!(g > 1.0) || !std::isfinite(g)) {
      throw InvalidConfig("gamma must be a finite value > 1");
    }
  }
};

/// Density, velocity, pressure (SI).
struct PrimitiveState
{
  double rho = 0.0;
  double u = 0.0;
  double p = 0.0;

  [[nodiscard]] bool is_valid() const
  {
    return std::isfinite(rho) && std::isfinite(u) && std::isfinite(p) && rho > 0.0 && p > 0.0;
  }

  friend bool operator==(const PrimitiveState&, const PrimitiveState&) = default;
};

inline std::string to_string(const PrimitiveState& w)
{
  std::ostringstream os;
  os.precision(10);
  os << "(rho=" << w.rho << ", u=" << w.u << ", p=" << w.p << ")";
  return os.str();
}

inline void require_valid(const PrimitiveState& w, const char* where)
{
  if (!w.is_valid()) {
    throw NonPhysicalState(std::string(where) + ": invalid primitive state " + to_string(w));
  }
}

/// Checked construction; the unchecked aggregate is used on hot paths.
inline PrimitiveState make_primitive(double rho, double u, double p)
{
  PrimitiveState w{rho, u, p};
  if (!w.is_valid()) {
    throw InvalidConfig("primitive state requires finite values with rho > 0 and p > 0, got " +
                        to_string(w));
  }
  return w;
}

struct ConservedTag;
struct FluxTag;

/// Three-component vector of the Euler system. The tag keeps conserved
/// densities and fluxes from being mixed by accident.
template <class Tag>
struct EulerVector
{
  double mass = 0.0;
  double momentum = 0.0;
  double energy = 0.0;

  constexpr EulerVector& operator+=(const EulerVector& o)
  {
    mass += o.mass;
    momentum += o.momentum;
    energy += o.energy;
    return *this;
  }
  constexpr EulerVector& operator-=(const EulerVector& o)
  {
    mass -= o.mass;
    momentum -= o.momentum;
    energy -= o.energy;
    return *this;
  }
  constexpr EulerVector& operator*=(double s)
  {
    mass *= s;
    momentum *= s;
    energy *= s;
    return *this;
  }

  friend constexpr EulerVector operator+(EulerVector a, const EulerVector& b) { return a += b; }
  friend constexpr EulerVector operator-(EulerVector a, const EulerVector& b) { return a -= b; }
  friend constexpr EulerVector operator*(double s, EulerVector a) { return a *= s; }
  friend constexpr EulerVector operator*(EulerVector a, double s) { return a *= s; }
  friend constexpr EulerVector operator/(EulerVector a, double s)
  {
    a.mass /= s;
    a.momentum /= s;
    a.energy /= s;
    return a;
  }
  friend constexpr EulerVector operator-(EulerVector a) { return a *= -1.0; }
  friend bool operator==(const EulerVector&, const EulerVector&) = default;

  [[nodiscard]] bool is_finite() const
  {
    return std::isfinite(mass) && std::isfinite(momentum) && std::isfinite(energy);
  }
};

/// (rho, rho u, rho e_T) per unit volume.
using ConservedState = EulerVector<ConservedTag>;
/// (rho u, rho u^2 + p, (rho e_T + p) u).
using FluxVector = EulerVector<FluxTag>;

/// A conserved density carried at a signal speed has units of flux: s * q.
constexpr FluxVector advect(double speed, const ConservedState& q)
{
  return {speed * q.mass, speed * q.momentum, speed * q.energy};
}

/// A flux integrated over a time (or time/length) factor gives back a conserved density.
constexpr ConservedState integrate(double factor, const FluxVector& f)
{
  return {factor * f.mass, factor * f.momentum, factor * f.energy};
}

inline double sound_speed(const PrimitiveState& w, const GasModel& g)
{
  return std::sqrt(g.gamma * w.p / w.rho);
}

/// Specific internal energy e = p / (rho (gamma - 1)).
inline double internal_energy(const PrimitiveState& w, const GasModel& g)
{
  return w.p / (w.rho * (g.gamma - 1.0));
}

/// Static specific enthalpy h = gamma/(gamma-1) p/rho.
inline double specific_enthalpy(const PrimitiveState& w, const GasModel& g)
{
  return g.gamma / (g.gamma - 1.0) * w.p / w.rho;
}

/// h_T = u^2/2 + gamma/(gamma-1) p/rho.
inline double total_specific_enthalpy(const PrimitiveState& w, const GasModel& g)
{
  return 0.5 * w.u * w.u + specific_enthalpy(w, g);
}

inline ConservedState primitive_to_conserved(const PrimitiveState& w, const GasModel& g)
{
  return {w.rho, w.rho * w.u, w.p / (g.gamma - 1.0) + 0.5 * w.rho * w.u * w.u};
}

/// Inverse of primitive_to_conserved. Throws NonPhysicalState when the
/// recovered density or pressure is not positive.
inline PrimitiveState conserved_to_primitive(const ConservedState& q, const GasModel& g)
{
  if (!q.is_finite() || !(q.mass > 0.0)) {
    throw NonPhysicalState("conserved_to_primitive: non-positive or non-finite density");
  }
  const double u = q.momentum / q.mass;
  const double p = (g.gamma - 1.0) * (q.energy - 0.5 * q.mass * u * u);
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw NonPhysicalState("conserved_to_primitive: non-positive pressure");
  }
  return {q.mass, u, p};
}

inline FluxVector physical_flux(const PrimitiveState& w, const GasModel& g)
{
  const double mass_flux = w.rho * w.u;
  const double total_energy = w.p / (g.gamma - 1.0) + 0.5 * w.rho * w.u * w.u;
  return {mass_flux, mass_flux * w.u + w.p, (total_energy + w.p) * w.u};
}

} // namespace sodflux
