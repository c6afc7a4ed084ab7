#pragma once

// Command-line front end. Subcommands:
//   exact   exact solution profile CSV
//   solve   one finite-volume run, profile CSV
//   bench   RMSE sweep over all 22 flux methods
//   waves   wave-property table of the exact solution
//   timing  stepping-loop timing sweep
//
// Exit codes: 0 success, 2 invalid configuration, 3 numerical failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sodflux/csv.hpp"

namespace sodflux::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid_config = 2;
inline constexpr int exit_numerical_failure = 3;

struct Options
{
  std::size_t cells = 200;
  double x_min = 0.0;
  double x_max = 1.0;
  double jump = 0.5;
  double gamma = 1.4;
  std::optional<double> dt;
  double time = 0.2;
  double co_max = 0.4;
  double s_max = 2.0;
  std::string flux = "riemann";
  std::string limiter = "van-leer";
  std::vector<double> left{1.0, 0.0, 1.0};
  std::vector<double> right{0.125, 0.0, 0.1};
  std::string out;
  int repetitions = 5;
};

namespace detail {

inline void add_grid_flags(CLI::App& cmd, Options& o)
{
  cmd.add_option("--cells", o.cells, "number of cells")->capture_default_str();
  cmd.add_option("--xmin", o.x_min, "left end of the domain")->capture_default_str();
  cmd.add_option("--xmax", o.x_max, "right end of the domain")->capture_default_str();
  cmd.add_option("--jump", o.jump, "initial discontinuity position")->capture_default_str();
  cmd.add_option("--gamma", o.gamma, "ratio of specific heats")->capture_default_str();
  cmd.add_option("--time", o.time, "final time")->capture_default_str();
  cmd.add_option("--left", o.left, "left state rho,u,p")->delimiter(',')->expected(3)->capture_default_str();
  cmd.add_option("--right", o.right, "right state rho,u,p")->delimiter(',')->expected(3)->capture_default_str();
}

inline void add_solver_flags(CLI::App& cmd, Options& o)
{
  add_grid_flags(cmd, o);
  cmd.add_option("--dt", o.dt, "time step (default: co-max * dx / s-max)");
  cmd.add_option("--co-max", o.co_max, "target maximum Courant number")->capture_default_str();
  cmd.add_option("--s-max", o.s_max, "estimate of the maximum wave speed")->capture_default_str();
  cmd.add_option("--limiter", o.limiter, "slope limiter")
    ->check(CLI::IsMember({"van-leer"}))
    ->capture_default_str();
}

inline PrimitiveState state_from(const std::vector<double>& v, const char* which)
{
  if (v.size() != 3) {
    throw InvalidConfig(std::string(which) + " state needs three values rho,u,p");
  }
  return make_primitive(v[0], v[1], v[2]);
}

inline RunConfig make_run_config(const Options& o)
{
  RunConfig cfg{.grid = Grid1D(o.x_min, o.x_max, o.cells), .gas = GasModel(o.gamma)};
  cfg.t_final = o.time;
  cfg.co_max_target = o.co_max;
  cfg.s_max_estimate = o.s_max;
  cfg.jump_position = o.jump;
  cfg.left = state_from(o.left, "left");
  cfg.right = state_from(o.right, "right");
  cfg.dt = o.dt ? *o.dt : derive_dt(o.co_max, cfg.grid.dx(), o.s_max);
  const auto method = parse_flux_method(o.flux);
  if (!method) {
    throw InvalidConfig("unknown flux method '" + o.flux + "' (use --flux list)");
  }
  cfg.method = *method;
  cfg.validate();
  return cfg;
}

/// Writes to the --out file, or to `fallback` when no file was given.
template <class Writer>
void emit(const std::string& path, std::ostream& fallback, Writer&& write)
{
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) {
    throw InvalidConfig("cannot open output file '" + path + "'");
  }
  write(file);
  if (!file) {
    throw InvalidConfig("failed writing output file '" + path + "'");
  }
}

inline void list_methods(std::ostream& out)
{
  for (FluxMethodId id : all_flux_methods) {
    out << flag_name(id) << '\n';
  }
}

inline void run_exact(const Options& o, std::ostream& out)
{
  const GasModel gas(o.gamma);
  const Grid1D grid(o.x_min, o.x_max, o.cells);
  const RiemannInput in{state_from(o.left, "left"), state_from(o.right, "right"), gas};
  const ExactProfile profile = exact_profile(in, grid, o.jump, o.time);
  emit(o.out, out, [&](std::ostream& os) { write_profile_csv(os, export_profile(profile, gas)); });
  if (!o.out.empty()) {
    out << "exact profile: " << grid.n_cells() << " cells at t = " << format_number(o.time) << " -> " << o.out
        << '\n';
  }
}

inline void run_solve(const Options& o, std::ostream& out)
{
  const RunConfig cfg = make_run_config(o);
  const SolutionField field = run(cfg);
  const ProfileExport profile = export_profile(field, cfg.grid, cfg.gas);
  emit(o.out, out, [&](std::ostream& os) { write_profile_csv(os, profile); });
  out << "flux " << flag_name(cfg.method) << ": " << field.steps << " steps, t = " << format_number(field.time)
      << ", max Courant = " << format_fixed(field.max_courant_observed, 4) << '\n';
}

inline void run_bench(const Options& o, std::ostream& out)
{
  RunConfig cfg = make_run_config(o);
  const std::vector<SweepEntry> sweep = run_all_methods(cfg);
  emit(o.out, out, [&](std::ostream& os) { write_bench_csv(os, sweep); });
  if (o.out.empty()) {
    return;
  }
  for (const SweepEntry& e : sweep) {
    out << table_index(e.method) << ' ' << display_name(e.method) << ' ';
    if (e.report) {
      out << format_fixed(e.report->rmse_density) << ' ' << format_fixed(e.report->rmse_velocity) << ' '
          << format_fixed(e.report->rmse_pressure) << ' ' << format_fixed(e.report->rmse_total)
          << "  Co_max " << format_fixed(e.report->max_courant, 4) << '\n';
    } else {
      out << "error: " << e.error << '\n';
    }
  }
}

inline void run_waves(const Options& o, std::ostream& out)
{
  const RiemannInput in{state_from(o.left, "left"), state_from(o.right, "right"), GasModel(o.gamma)};
  write_wave_report(out, wave_report(in, o.time));
}

inline void run_timing(const Options& o, std::ostream& out)
{
  const RunConfig cfg = make_run_config(o);
  const std::vector<TimingReport> timing = timing_sweep(cfg, o.repetitions);
  emit(o.out, out, [&](std::ostream& os) { write_timing_csv(os, timing); });
  if (o.out.empty()) {
    return;
  }
  for (const TimingReport& t : timing) {
    out << table_index(t.method) << ' ' << display_name(t.method) << ' ' << format_number(t.elapsed) << " s "
        << format_fixed(t.pct_over_fastest, 1) << "%\n";
  }
}

} // namespace detail

inline int parse_and_run(int argc, const char* const* argv, std::ostream& out = std::cout,
                         std::ostream& err = std::cerr)
{
  Options o;
  CLI::App app{"1D Euler finite-volume solver and flux-method benchmark", "sodflux"};
  app.require_subcommand(1);

  CLI::App* exact = app.add_subcommand("exact", "exact Riemann solution profile (CSV)");
  detail::add_grid_flags(*exact, o);
  exact->add_option("--out", o.out, "output CSV (default: stdout)");

  CLI::App* solve = app.add_subcommand("solve", "run the finite-volume solver (profile CSV)");
  detail::add_solver_flags(*solve, o);
  solve->add_option("--flux", o.flux, "flux method, or 'list'")->capture_default_str();
  solve->add_option("--out", o.out, "output CSV (default: stdout)");

  CLI::App* bench = app.add_subcommand("bench", "RMSE of all 22 flux methods (CSV)");
  detail::add_solver_flags(*bench, o);
  bench->add_option("--out", o.out, "output CSV (default: stdout)");

  CLI::App* waves = app.add_subcommand("waves", "wave properties of the exact solution");
  waves->add_option("--gamma", o.gamma, "ratio of specific heats")->capture_default_str();
  waves->add_option("--time", o.time, "time for wave positions")->capture_default_str();
  waves->add_option("--left", o.left, "left state rho,u,p")->delimiter(',')->expected(3);
  waves->add_option("--right", o.right, "right state rho,u,p")->delimiter(',')->expected(3);

  CLI::App* timing = app.add_subcommand("timing", "stepping-loop runtime of all 22 methods (CSV)");
  detail::add_solver_flags(*timing, o);
  timing->add_option("--reps", o.repetitions, "repetitions per method (median is reported)")
    ->capture_default_str();
  timing->add_option("--out", o.out, "output CSV (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_invalid_config;
  }

  try {
    if (*exact) {
      detail::run_exact(o, out);
    } else if (*solve) {
      if (o.flux == "list") {
        detail::list_methods(out);
        return exit_ok;
      }
      detail::run_solve(o, out);
    } else if (*bench) {
      detail::run_bench(o, out);
    } else if (*waves) {
      detail::run_waves(o, out);
    } else if (*timing) {
      detail::run_timing(o, out);
    }
  } catch (const InvalidConfig& e) {
    err << "sodflux: invalid configuration: " << e.what() << '\n';
    return exit_invalid_config;
  } catch (const NumericalFailure& e) {
    err << "sodflux: numerical failure: " << e.what() << '\n';
    return exit_numerical_failure;
  }
  return exit_ok;
}

} // namespace sodflux::cli
