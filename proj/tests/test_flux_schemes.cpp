#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "sodflux/flux_schemes.hpp"
#include "test_support.hpp"

namespace sodflux {
namespace {

const PrimitiveState sod_l{1.0, 0.0, 1.0};
const PrimitiveState sod_r{0.125, 0.0, 0.1};
constexpr double lf_dx = 0.005;
constexpr double lf_dt = 0.001;

FluxVector flux_of(FluxMethodId m, const PrimitiveState& l, const PrimitiveState& r, const GasModel& g = GasModel{})
{
  return compute_face_flux(m, {l, r}, g, SchemeConfig{}, lf_dx, lf_dt);
}

void expect_flux_near(const FluxVector& a, const FluxVector& b, double tol, const std::string& what)
{
  EXPECT_NEAR(a.mass, b.mass, tol) << what;
  EXPECT_NEAR(a.momentum, b.momentum, tol) << what;
  EXPECT_NEAR(a.energy, b.energy, tol) << what;
}

void expect_flux_rel(const FluxVector& a, const FluxVector& b, double rel, const std::string& what)
{
  const double scale = 1.0 + std::abs(b.mass) + std::abs(b.momentum) + std::abs(b.energy);
  expect_flux_near(a, b, rel * scale, what);
}

TEST(Methods, TableOrderAndNames)
{
  ASSERT_EQ(all_flux_methods.size(), 22u);
  EXPECT_EQ(table_index(FluxMethodId::Riemann), 1u);
  EXPECT_EQ(table_index(FluxMethodId::Rusanov), 22u);
  EXPECT_EQ(display_name(FluxMethodId::HLLCRoe), "HLLC-Roe");
  for (FluxMethodId m : all_flux_methods) {
    EXPECT_EQ(parse_flux_method(flag_name(m)), m);
  }
  EXPECT_FALSE(parse_flux_method("godunov").has_value());
}

TEST(Roe, SodAverages)
{
  const RoeAverages r = roe_average(sod_l, sod_r, GasModel{});
  const double w_l = 1.0;
  const double w_r = std::sqrt(0.125);
  EXPECT_NEAR(r.u_roe, 0.0, 1e-15);
  EXPECT_NEAR(r.hT_roe, (w_l * 3.5 + w_r * 2.8) / (w_l + w_r), 1e-14);
  EXPECT_NEAR(r.hT_roe, 3.31716, 1e-5);
  EXPECT_NEAR(r.a_roe, 1.15190, 1e-5);
}

TEST(Roe, SymmetricWeightsForSwappedDensity)
{
  const GasModel g;
  const RoeAverages a = roe_average({2.0, 0.4, 1.0}, {0.5, 0.4, 1.0}, g);
  const RoeAverages b = roe_average({0.5, 0.4, 1.0}, {2.0, 0.4, 1.0}, g);
  EXPECT_NEAR(a.u_roe, 0.4, 1e-15);
  EXPECT_NEAR(a.u_roe, b.u_roe, 1e-15);
}

TEST(WaveSpeeds, SodEstimates)
{
  const GasModel g;
  const WaveSpeedPair d1 = wave_speed_estimate(WaveSpeedVariant::Davis1, sod_l, sod_r, g);
  EXPECT_NEAR(d1.s_left, -1.18322, 1e-5);
  EXPECT_NEAR(d1.s_right, 1.05830, 1e-5);
  const WaveSpeedPair d2 = wave_speed_estimate(WaveSpeedVariant::Davis2, sod_l, sod_r, g);
  EXPECT_NEAR(d2.s_left, -1.18322, 1e-5);
  EXPECT_NEAR(d2.s_right, 1.18322, 1e-5);
  EXPECT_NEAR(pbased_star_pressure(sod_l, sod_r, g), 0.55, 1e-15);
  const WaveSpeedPair pb = wave_speed_estimate(WaveSpeedVariant::PBased, sod_l, sod_r, g);
  EXPECT_NEAR(pb.s_left, -1.18322, 1e-5);
  EXPECT_NEAR(pb.s_right, std::sqrt(1.12) * std::sqrt(1.0 + 4.5 * 2.4 / 2.8), 1e-12);
  EXPECT_NEAR(pb.s_right, 2.33239, 1e-5);
  for (WaveSpeedVariant v : {WaveSpeedVariant::Davis1, WaveSpeedVariant::Davis2, WaveSpeedVariant::RoeEig,
                             WaveSpeedVariant::Einfeldt, WaveSpeedVariant::PBased}) {
    const WaveSpeedPair s = wave_speed_estimate(v, sod_l, sod_r, g);
    EXPECT_LT(s.s_left, s.s_right);
  }
}

TEST(SodPair, HllDavis1)
{
  const double sl = -std::sqrt(1.4);
  const double sr = std::sqrt(1.12);
  // F_L = (0,1,0), F_R = (0,0.1,0), q_R - q_L = (-0.875, 0, -2.25).
  const FluxVector expected{sl * sr * -0.875 / (sr - sl), (sr * 1.0 - sl * 0.1) / (sr - sl),
                            sl * sr * -2.25 / (sr - sl)};
  const FluxVector f = flux_of(FluxMethodId::HLLDavis1, sod_l, sod_r);
  expect_flux_near(f, expected, 1e-14, "HLL-Davis1");
  expect_flux_near(f, {0.48881, 0.52492, 1.25694}, 1e-5, "HLL-Davis1 rounded");
}

TEST(SodPair, CentralFluxes)
{
  const FluxVector expected{0.5 * std::sqrt(1.4) * 0.875, 0.55, 0.5 * std::sqrt(1.4) * 2.25};
  expect_flux_near(flux_of(FluxMethodId::KT, sod_l, sod_r), expected, 1e-14, "KT");
  expect_flux_near(flux_of(FluxMethodId::Rusanov, sod_l, sod_r), {0.51766, 0.55, 1.33112}, 1e-5, "Rusanov");
  expect_flux_near(flux_of(FluxMethodId::LF, sod_l, sod_r), {2.1875, 0.55, 5.625}, 1e-13, "LF");
}

TEST(SodPair, LaxFriedrichsDissipationScalesWithStep)
{
  const GasModel g;
  const FluxVector a = flux_lf(sod_l, sod_r, g, lf_dx, lf_dt);
  const FluxVector b = flux_lf(sod_l, sod_r, g, lf_dx, 0.5 * lf_dt);
  EXPECT_NEAR(b.mass, 2.0 * a.mass, 1e-13);
  EXPECT_NEAR(b.energy, 2.0 * a.energy, 1e-13);
  EXPECT_THROW(flux_lf(sod_l, sod_r, g, lf_dx, 0.0), InvalidConfig);
}

TEST(SodPair, ExactFluxIsStarLeftFlux)
{
  const double rho = 0.42632, u = 0.92745, p = 0.30313;
  const FluxVector expected{rho * u, rho * u * u + p, u * (3.5 * p + 0.5 * rho * u * u)};
  expect_flux_near(flux_of(FluxMethodId::Riemann, sod_l, sod_r), expected, 2e-5, "exact");
  expect_flux_near(flux_of(FluxMethodId::Riemann, sod_l, sod_r), {0.39539, 0.66985, 1.15404}, 2e-5, "exact rounded");
}

TEST(SodPair, ApproximateSolversNearExact)
{
  const FluxVector exact = flux_of(FluxMethodId::Riemann, sod_l, sod_r);
  // HLLC with Roe speeds S = -/+ a_roe, contact speed and left star state
  // evaluated by hand.
  const double a_roe = std::sqrt(0.4 * ((3.5 + std::sqrt(0.125) * 2.8) / (1.0 + std::sqrt(0.125))));
  const double s_l = -a_roe;
  const double s_r = a_roe;
  const double s_star = (0.1 - 1.0) / (1.0 * s_l - 0.125 * s_r);
  const double factor = s_l / (s_l - s_star);
  const FluxVector hllc{s_l * (factor - 1.0), 1.0 + s_l * factor * s_star,
                        s_l * (factor * (2.5 + s_star * (s_star + 1.0 / s_l)) - 2.5)};
  expect_flux_near(flux_of(FluxMethodId::HLLCRoe, sod_l, sod_r), hllc, 1e-14, "HLLC-Roe");
  // Same accuracy class as the exact flux on raw (unreconstructed) Sod data.
  expect_flux_near(hllc, exact, 0.2, "HLLC-Roe vs exact");
  expect_flux_near(flux_of(FluxMethodId::SW, sod_l, sod_r), exact, 0.2, "SW");
  expect_flux_near(flux_of(FluxMethodId::AUFS, sod_l, sod_r), exact, 0.15, "AUFS");
}

TEST(SodPair, StegerWarmingClosedForm)
{
  const GasModel g;
  const double gm = 1.4;
  const double a_l = std::sqrt(gm);
  const double a_r = std::sqrt(1.12);
  // At rest only the u + a (resp. u - a) eigenvalue contributes.
  const FluxVector plus{a_l / (2 * gm), a_l * a_l / (2 * gm), a_l * (a_l * a_l / (gm - 1.0)) / (2 * gm)};
  const FluxVector minus{-0.125 * a_r / (2 * gm), 0.125 * a_r * a_r / (2 * gm),
                         -0.125 * a_r * (a_r * a_r / (gm - 1.0)) / (2 * gm)};
  expect_flux_near(steger_warming_split(sod_l, g, SplitDirection::Plus), plus, 1e-14, "F+");
  expect_flux_near(steger_warming_split(sod_r, g, SplitDirection::Minus), minus, 1e-14, "F-");
  expect_flux_near(flux_sw_fvs(sod_l, sod_r, g), plus + minus, 1e-14, "SW");
}

TEST(SodPair, VanLeerSplitMassFlux)
{
  const FluxVector fp = van_leer_split(sod_l, GasModel{}, SplitDirection::Plus);
  EXPECT_NEAR(fp.mass, std::sqrt(1.4) / 4.0, 1e-15);
  EXPECT_NEAR(fp.mass, 0.295804, 1e-6);
}

TEST(SodPair, BasicAusmAtRest)
{
  // Zero Mach on both sides: no mass transport, mean pressure.
  const FluxVector f = flux_of(FluxMethodId::AUSM, sod_l, sod_r);
  EXPECT_NEAR(f.mass, 0.0, 1e-15);
  EXPECT_NEAR(f.momentum, 0.55, 1e-15);
  EXPECT_NEAR(f.energy, 0.0, 1e-15);
}

TEST(VanLeerSplit, SmoothAtSonicSeam)
{
  const GasModel g;
  const double a = std::sqrt(1.4);
  const PrimitiveState sonic{1.0, a, 1.0};
  expect_flux_rel(van_leer_split(sonic, g, SplitDirection::Plus), physical_flux(sonic, g), 1e-14, "M=1");
  const PrimitiveState just_below{1.0, a * (1.0 - 1e-9), 1.0};
  expect_flux_rel(van_leer_split(just_below, g, SplitDirection::Plus), physical_flux(sonic, g), 1e-7, "M->1");
  EXPECT_NEAR(van_leer_split(just_below, g, SplitDirection::Minus).mass, 0.0, 1e-12);
}

TEST(AllMethods, Consistency)
{
  testing::StateGenerator gen(41);
  for (int g_idx = 0; g_idx < 2; ++g_idx) {
    const GasModel g(g_idx == 0 ? 1.4 : 5.0 / 3.0);
    for (int i = 0; i < 1000; ++i) {
      const PrimitiveState w = i % 10 == 0 ? gen.supersonic(i % 20 == 0 ? 1.0 : -1.0) : gen.subsonic();
      const FluxVector exact = physical_flux(w, g);
      for (FluxMethodId m : all_flux_methods) {
        expect_flux_rel(flux_of(m, w, w, g), exact, 1e-12, std::string(display_name(m)));
      }
    }
  }
}

TEST(AllMethods, UpwindLimit)
{
  const GasModel g;
  testing::StateGenerator gen(42);
  for (int i = 0; i < 500; ++i) {
    const PrimitiveState l = gen.supersonic(1.0);
    PrimitiveState r{l.rho * gen.uniform(0.95, 1.05), l.u * gen.uniform(0.97, 1.03), l.p * gen.uniform(0.95, 1.05)};
    ASSERT_GT(std::min(l.u - sound_speed(l, g), r.u - sound_speed(r, g)), 0.0);
    const FluxVector f_l = physical_flux(l, g);
    for (FluxMethodId m : all_flux_methods) {
      if (m == FluxMethodId::LF || m == FluxMethodId::KT || m == FluxMethodId::Rusanov) {
        continue;
      }
      expect_flux_rel(flux_of(m, l, r, g), f_l, 1e-10, std::string(display_name(m)));
    }
  }
}

TEST(AllMethods, MirrorSymmetry)
{
  const GasModel g;
  testing::StateGenerator gen(43);
  for (int i = 0; i < 600; ++i) {
    const PrimitiveState l = i % 2 == 0 ? gen.subsonic() : gen.any();
    const PrimitiveState r = i % 2 == 0 ? gen.subsonic() : gen.any();
    const PrimitiveState ml{r.rho, -r.u, r.p};
    const PrimitiveState mr{l.rho, -l.u, l.p};
    for (FluxMethodId m : all_flux_methods) {
      const FluxVector f = flux_of(m, l, r, g);
      const FluxVector fm = flux_of(m, ml, mr, g);
      expect_flux_rel({-fm.mass, fm.momentum, -fm.energy}, f, 1e-12, std::string(display_name(m)));
    }
  }
}

TEST(AllMethods, IsolatedContact)
{
  const GasModel g;
  const PrimitiveState l{1.0, 0.3, 0.7};
  const PrimitiveState r{0.2, 0.3, 0.7};
  const FluxVector f_l = physical_flux(l, g);
  for (FluxMethodId m : {FluxMethodId::Riemann, FluxMethodId::HLLCDavis1, FluxMethodId::HLLCDavis2,
                         FluxMethodId::HLLCRoe, FluxMethodId::HLLCEinfeldt, FluxMethodId::HLLCPBased}) {
    expect_flux_rel(flux_of(m, l, r, g), f_l, 1e-12, std::string(display_name(m)));
  }
  for (FluxMethodId m : {FluxMethodId::HLLDavis1, FluxMethodId::HLLDavis2, FluxMethodId::HLLRoe,
                         FluxMethodId::HLLEinfeldt, FluxMethodId::HLLPBased}) {
    // Extra dissipation shows up as excess mass flux from the denser side.
    EXPECT_GT(flux_of(m, l, r, g).mass - f_l.mass, 1e-3) << display_name(m);
  }
}

TEST(AllMethods, StructuralIdentitiesAreBitwise)
{
  const GasModel g;
  testing::StateGenerator gen(44);
  for (int i = 0; i < 1000; ++i) {
    const PrimitiveState l = i % 3 == 0 ? gen.supersonic(1.0) : gen.subsonic();
    const PrimitiveState r = i % 5 == 0 ? gen.supersonic(-1.0) : gen.subsonic();
    EXPECT_EQ(flux_kt(l, r, g), flux_rusanov(l, r, g));
    EXPECT_EQ(flux_knp(l, r, g), flux_hll(WaveSpeedVariant::Davis2, l, r, g));
  }
}

TEST(AllMethods, DispatchMatchesDirectCall)
{
  const GasModel g;
  EXPECT_EQ(flux_of(FluxMethodId::HLLCDavis2, sod_l, sod_r), flux_hllc(WaveSpeedVariant::Davis2, sod_l, sod_r, g));
  EXPECT_EQ(flux_of(FluxMethodId::AUSMPlusUp, sod_l, sod_r),
            flux_ausm(AusmVariant::PlusUp, sod_l, sod_r, g, SchemeConfig{}));
  EXPECT_EQ(flux_of(FluxMethodId::Roe, sod_l, sod_r), flux_roe(sod_l, sod_r, g));
}

TEST(SchemeConfig, Validation)
{
  SchemeConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.ausm_up_cutoff_mach = 0.0;
  EXPECT_THROW(cfg.validate(), InvalidConfig);
  cfg.ausm_up_cutoff_mach = 1.5;
  EXPECT_THROW(cfg.validate(), InvalidConfig);
}

TEST(Roe, EntropyFixOnlyActsNearSonicPoints)
{
  const GasModel g;
  SchemeConfig fixed;
  fixed.roe_entropy_fix = true;
  // All Roe eigenvalues well away from zero.
  const PrimitiveState l{1.0, 0.5, 1.0};
  const PrimitiveState r{0.9, 0.5, 0.95};
  EXPECT_EQ(flux_roe(l, r, g, fixed), flux_roe(l, r, g));
  // u_roe - a_roe close to zero (transonic expansion).
  const PrimitiveState tl{1.0, 1.2, 1.0};
  const PrimitiveState tr{0.9, 1.15, 0.9};
  EXPECT_NE(flux_roe(tl, tr, g, fixed), flux_roe(tl, tr, g));
  expect_flux_rel(flux_roe(l, l, g, fixed), physical_flux(l, g), 1e-14, "consistency with fix");
}

} // namespace
} // namespace sodflux
