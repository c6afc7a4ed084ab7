#include <gtest/gtest.h>

#include <cmath>

#include "sodflux/euler.hpp"
#include "sodflux/grid.hpp"
#include "test_support.hpp"

namespace sodflux {
namespace {

TEST(GasModel, RejectsGammaNotAboveOne)
{
  EXPECT_THROW(GasModel(1.0), InvalidConfig);
  EXPECT_THROW(GasModel(0.5), InvalidConfig);
  EXPECT_THROW(GasModel(std::nan("")), InvalidConfig);
  EXPECT_NO_THROW(GasModel(5.0 / 3.0));
}

TEST(Euler, SodLeftStateConserved)
{
  const GasModel g;
  const ConservedState q = primitive_to_conserved({1.0, 0.0, 1.0}, g);
  EXPECT_DOUBLE_EQ(q.mass, 1.0);
  EXPECT_DOUBLE_EQ(q.momentum, 0.0);
  EXPECT_NEAR(q.energy, 2.5, 1e-14);
}

TEST(Euler, SodRightStateThermodynamics)
{
  const GasModel g;
  const PrimitiveState w{0.125, 0.0, 0.1};
  EXPECT_NEAR(sound_speed(w, g), std::sqrt(1.4 * 0.1 / 0.125), 1e-15);
  EXPECT_NEAR(sound_speed(w, g), 1.05830, 1e-5);
  EXPECT_NEAR(internal_energy(w, g), 2.0, 1e-14);
  EXPECT_NEAR(specific_enthalpy(w, g), 2.8, 1e-14);
}

TEST(Euler, MovingStateFlux)
{
  const GasModel g;
  const PrimitiveState w{1.0, 1.0, 1.0};
  const FluxVector f = physical_flux(w, g);
  // e_T = 1/0.4 + 0.5 = 3; energy flux = (rho e_T + p) u.
  EXPECT_NEAR(f.mass, 1.0, 1e-15);
  EXPECT_NEAR(f.momentum, 2.0, 1e-15);
  EXPECT_NEAR(f.energy, 4.0, 1e-14);
}

TEST(Euler, FluxAtRestIsPressureOnly)
{
  const GasModel g;
  const FluxVector f = physical_flux({0.7, 0.0, 2.3}, g);
  EXPECT_EQ(f.mass, 0.0);
  EXPECT_DOUBLE_EQ(f.momentum, 2.3);
  EXPECT_EQ(f.energy, 0.0);
}

TEST(Euler, EnergyFluxEqualsMassFluxTimesTotalEnthalpy)
{
  const GasModel g;
  testing::StateGenerator gen(11);
  for (int i = 0; i < 200; ++i) {
    const PrimitiveState w = gen.subsonic();
    const FluxVector f = physical_flux(w, g);
    const double h_t = g.gamma / (g.gamma - 1.0) * w.p / w.rho + 0.5 * w.u * w.u;
    EXPECT_NEAR(f.energy, w.rho * w.u * h_t, 1e-13 * (1.0 + std::abs(f.energy)));
    EXPECT_NEAR(total_specific_enthalpy(w, g), h_t, 1e-13 * h_t);
  }
}

TEST(Euler, SoundSpeedIdentity)
{
  const GasModel g(1.3);
  testing::StateGenerator gen(12);
  for (int i = 0; i < 100; ++i) {
    const PrimitiveState w = gen.subsonic();
    const double a = sound_speed(w, g);
    EXPECT_NEAR(a * a * w.rho / g.gamma, w.p, 1e-14 * (1.0 + w.p));
  }
}

TEST(Euler, RoundTrip)
{
  const GasModel g;
  testing::StateGenerator gen(13);
  for (int i = 0; i < 1000; ++i) {
    const PrimitiveState w = gen.subsonic();
    const PrimitiveState back = conserved_to_primitive(primitive_to_conserved(w, g), g);
    EXPECT_NEAR(back.rho, w.rho, 1e-14 * w.rho);
    EXPECT_NEAR(back.u, w.u, 1e-14 * (1.0 + std::abs(w.u)));
    EXPECT_NEAR(back.p, w.p, 1e-14 * (1.0 + w.p * 10.0));
  }
}

TEST(Euler, NonPositivePressureRejected)
{
  EXPECT_THROW(make_primitive(1.0, 0.0, 0.0), InvalidConfig);
  EXPECT_THROW(make_primitive(-1.0, 0.0, 1.0), InvalidConfig);
  EXPECT_THROW(require_valid({1.0, 0.0, -1.0}, "test"), NonPhysicalState);
  EXPECT_FALSE((PrimitiveState{1.0, std::nan(""), 1.0}).is_valid());
}

TEST(Euler, ConservedToPrimitiveRejectsNegativePressure)
{
  const GasModel g;
  // Kinetic energy exceeds total energy.
  EXPECT_THROW(conserved_to_primitive({1.0, 2.0, 1.0}, g), NonPhysicalState);
  EXPECT_THROW(conserved_to_primitive({0.0, 0.0, 1.0}, g), NonPhysicalState);
  EXPECT_THROW(conserved_to_primitive({1.0, std::nan(""), 1.0}, g), NonPhysicalState);
}

TEST(Grid1D, CentersAndSpacing)
{
  const Grid1D grid(0.0, 1.0, 200);
  EXPECT_DOUBLE_EQ(grid.dx(), 0.005);
  EXPECT_DOUBLE_EQ(grid.center(0), 0.0025);
  EXPECT_DOUBLE_EQ(grid.center(199), 0.9975);
  EXPECT_THROW(Grid1D(0.0, 1.0, 3), InvalidConfig);
  EXPECT_THROW(Grid1D(1.0, 1.0, 10), InvalidConfig);
}

} // namespace
} // namespace sodflux
