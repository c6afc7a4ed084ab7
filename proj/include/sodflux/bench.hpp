#pragma once

// Benchmark harness: RMSE against the exact solution for every flux
// method, wall-clock timing of the stepping loop, the wave-property report
// of an exact Riemann solution, and per-cell profile export.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "euler.hpp"
#include "exact_riemann.hpp"
#include "fv_solver.hpp"

namespace sodflux {

/// sqrt(sum (a_i - b_i)^2 / n)
inline double rmse(std::span<const double> numerical, std::span<const double> exact)
{
  if (numerical.size() != exact.size()) {
    throw InvalidConfig("rmse: profiles differ in length");
  }
  if (numerical.empty()) {
    throw InvalidConfig("rmse: empty profiles");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < numerical.size(); ++i) {
    const double d = numerical[i] - exact[i];
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(numerical.size()));
}

struct RmseReport
{
  FluxMethodId method = FluxMethodId::Riemann;
  double rmse_density = 0.0;
  double rmse_velocity = 0.0;
  double rmse_pressure = 0.0;
  double rmse_total = 0.0;
  double max_courant = 0.0;
};

namespace detail {

inline std::vector<double> component(std::span<const PrimitiveState> states, double PrimitiveState::*member)
{
  std::vector<double> out;
  out.reserve(states.size());
  for (const auto& w : states) {
    out.push_back(w.*member);
  }
  return out;
}

} // namespace detail

inline RmseReport rmse_report(FluxMethodId method, std::span<const PrimitiveState> numerical,
                              std::span<const PrimitiveState> exact)
{
  using detail::component;
  RmseReport r;
  r.method = method;
  r.rmse_density = rmse(component(numerical, &PrimitiveState::rho), component(exact, &PrimitiveState::rho));
  r.rmse_velocity = rmse(component(numerical, &PrimitiveState::u), component(exact, &PrimitiveState::u));
  r.rmse_pressure = rmse(component(numerical, &PrimitiveState::p), component(exact, &PrimitiveState::p));
  r.rmse_total = r.rmse_density + r.rmse_velocity + r.rmse_pressure;
  return r;
}

inline ExactProfile exact_reference(const RunConfig& cfg, double t)
{
  return exact_profile(RiemannInput{cfg.left, cfg.right, cfg.gas}, cfg.grid, cfg.jump_position, t);
}

/// Run one method and score its final field against the exact solution at
/// the same cell centers and time.
inline RmseReport evaluate_method(const RunConfig& cfg)
{
  const SolutionField field = run(cfg);
  const ExactProfile exact = exact_reference(cfg, field.time);
  RmseReport r = rmse_report(cfg.method, to_primitive(field, cfg.gas), exact.states);
  r.max_courant = field.max_courant_observed;
  return r;
}

struct SweepEntry
{
  FluxMethodId method = FluxMethodId::Riemann;
  std::optional<RmseReport> report;
  std::string error;

  [[nodiscard]] bool ok() const { return report.has_value(); }
};

/// All 22 methods in table order; a failing run yields an error entry
/// instead of aborting the sweep.
inline std::vector<SweepEntry> run_all_methods(const RunConfig& base)
{
  base.validate();
  (void)base.step_count();
  std::vector<SweepEntry> out;
  out.reserve(flux_method_count);
  for (FluxMethodId id : all_flux_methods) {
    RunConfig cfg = base;
    cfg.method = id;
    SweepEntry entry;
    entry.method = id;
    try {
      entry.report = evaluate_method(cfg);
    } catch (const NumericalFailure& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

struct TimingReport
{
  FluxMethodId method = FluxMethodId::Riemann;
  double elapsed = 0.0;
  double pct_over_fastest = 0.0;
};

/// (t - t_fastest) / t_fastest * 100
inline double percent_extra_runtime(double elapsed, double fastest)
{
  return (elapsed - fastest) / fastest * 100.0;
}

/// Median wall time of the stepping loop per method, ascending. Field
/// initialization and the exact solution stay outside the timed region.
/// Runs sequentially on the calling thread.
inline std::vector<TimingReport> timing_sweep(const RunConfig& base, int repetitions)
{
  if (repetitions < 3) {
    throw InvalidConfig("timing_sweep: at least 3 repetitions required");
  }
  base.validate();
  const std::size_t n_steps = base.step_count();

  std::vector<TimingReport> out;
  out.reserve(flux_method_count);
  for (FluxMethodId id : all_flux_methods) {
    RunConfig cfg = base;
    cfg.method = id;
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(repetitions));
    for (int r = 0; r < repetitions; ++r) {
      SolutionField field = initialize_sod(cfg);
      const auto start = std::chrono::steady_clock::now();
      field = advance(std::move(field), cfg, n_steps);
      const auto stop = std::chrono::steady_clock::now();
      samples.push_back(std::chrono::duration<double>(stop - start).count());
    }
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    const double median = samples.size() % 2 == 1 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
    // Clock resolution floor; t_final = 0 would otherwise report zero.
    out.push_back({id, std::max(median, 1e-9), 0.0});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const TimingReport& a, const TimingReport& b) { return a.elapsed < b.elapsed; });
  const double fastest = out.front().elapsed;
  for (auto& t : out) {
    t.pct_over_fastest = percent_extra_runtime(t.elapsed, fastest);
  }
  return out;
}

// --- wave report ---------------------------------------------------------------

/// Thermodynamic companions of a constant state.
struct StateProperties
{
  double rho = 0.0;
  double sound_speed = 0.0;
  double internal_energy = 0.0;
  double enthalpy = 0.0;
};

inline StateProperties state_properties(const PrimitiveState& w, const GasModel& g)
{
  return {w.rho, sound_speed(w, g), internal_energy(w, g), specific_enthalpy(w, g)};
}

/// One outer wave. For a fan head/tail are its edges; for a shock both equal
/// the shock speed and the two shock-relative Mach numbers are set.
struct OuterWave
{
  WaveKind kind = WaveKind::Fan;
  double head = 0.0;
  double tail = 0.0;
  std::optional<double> mach_unshocked;
  std::optional<double> mach_shocked;
};

struct WaveReport
{
  RiemannInput input;
  StarRegion star;
  OuterWave left;
  OuterWave right;
  double contact_velocity = 0.0;
  double contact_pressure = 0.0;
  StateProperties star_left;
  StateProperties star_right;
  double time = 0.0;
  /// Positions at `time` of left head, left tail, contact, right tail, right
  /// head, measured from the initial jump.
  std::array<double, 5> offsets{};
};

inline WaveReport wave_report(const RiemannInput& in, double t = 0.2)
{
  WaveReport r;
  r.input = in;
  r.star = solve_star(in);
  r.time = t;
  const WaveSpeeds& s = r.star.speeds;
  const GasModel& g = in.gas;

  r.left = {r.star.left_wave, s.left_head, s.left_tail, std::nullopt, std::nullopt};
  r.right = {r.star.right_wave, s.right_head, s.right_tail, std::nullopt, std::nullopt};
  if (r.star.left_wave == WaveKind::Shock) {
    r.left.mach_unshocked = (in.left.u - s.left_head) / sound_speed(in.left, g);
    r.left.mach_shocked = (r.star.u_star - s.left_head) / s.a_star_left;
  }
  if (r.star.right_wave == WaveKind::Shock) {
    r.right.mach_unshocked = (s.right_head - in.right.u) / sound_speed(in.right, g);
    r.right.mach_shocked = (s.right_head - r.star.u_star) / s.a_star_right;
  }
  r.contact_velocity = r.star.u_star;
  r.contact_pressure = r.star.p_star;
  r.star_left = state_properties(r.star.star_left(), g);
  r.star_right = state_properties(r.star.star_right(), g);
  r.offsets = {s.left_head * t, s.left_tail * t, s.contact * t, s.right_tail * t, s.right_head * t};
  return r;
}

// --- profile export --------------------------------------------------------------

struct ProfileRow
{
  double x = 0.0;
  double density = 0.0;
  double velocity = 0.0;
  double pressure = 0.0;
  double internal_energy = 0.0;
};

struct ProfileExport
{
  std::vector<ProfileRow> rows;
};

inline ProfileExport export_profile(std::span<const double> x, std::span<const PrimitiveState> states,
                                    const GasModel& g)
{
  if (x.size() != states.size()) {
    throw InvalidConfig("export_profile: positions and states differ in length");
  }
  ProfileExport out;
  out.rows.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const PrimitiveState& w = states[i];
    out.rows.push_back({x[i], w.rho, w.u, w.p, internal_energy(w, g)});
  }
  return out;
}

inline ProfileExport export_profile(const ExactProfile& exact, const GasModel& g)
{
  return export_profile(exact.x, exact.states, g);
}

inline ProfileExport export_profile(const SolutionField& field, const Grid1D& grid, const GasModel& g)
{
  std::vector<double> x;
  x.reserve(grid.n_cells());
  for (std::size_t i = 0; i < grid.n_cells(); ++i) {
    x.push_back(grid.center(i));
  }
  return export_profile(x, to_primitive(field, g), g);
}

} // namespace sodflux
