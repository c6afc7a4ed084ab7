#pragma once

// Text output: profile / bench / timing CSV files and the wave table.
// Numbers go through std::to_chars (shortest round-trip form), so the
// output does not depend on the C or C++ locale.

#include <charconv>
#include <ostream>
#include <span>
#include <string>
#include <system_error>

#include "bench.hpp"

namespace sodflux {

inline std::string format_number(double v)
{
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc{}) {
    return "nan";
  }
  return {buf, res.ptr};
}

/// Fixed-point with `digits` decimals, for human-readable tables.
inline std::string format_fixed(double v, int digits = 5)
{
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, digits);
  if (res.ec != std::errc{}) {
    return "nan";
  }
  return {buf, res.ptr};
}

inline constexpr const char* profile_csv_header = "x,density,velocity,pressure,internal_energy";
inline constexpr const char* bench_csv_header = "index,method,rmse_density,rmse_velocity,rmse_pressure,rmse_total";
inline constexpr const char* timing_csv_header = "method,elapsed_seconds,pct_over_fastest";

inline void write_profile_csv(std::ostream& os, const ProfileExport& profile)
{
  os << profile_csv_header << '\n';
  for (const ProfileRow& r : profile.rows) {
    os << format_number(r.x) << ',' << format_number(r.density) << ',' << format_number(r.velocity) << ','
       << format_number(r.pressure) << ',' << format_number(r.internal_energy) << '\n';
  }
}

/// Failed runs keep their row with the word "error" in every numeric column.
inline void write_bench_csv(std::ostream& os, std::span<const SweepEntry> entries)
{
  os << bench_csv_header << '\n';
  for (const SweepEntry& e : entries) {
    os << table_index(e.method) << ',' << display_name(e.method);
    if (e.report) {
      const RmseReport& r = *e.report;
      os << ',' << format_number(r.rmse_density) << ',' << format_number(r.rmse_velocity) << ','
         << format_number(r.rmse_pressure) << ',' << format_number(r.rmse_total);
    } else {
      os << ",error,error,error,error";
    }
    os << '\n';
  }
}

inline void write_timing_csv(std::ostream& os, std::span<const TimingReport> entries)
{
  os << timing_csv_header << '\n';
  for (const TimingReport& t : entries) {
    os << display_name(t.method) << ',' << format_number(t.elapsed) << ',' << format_fixed(t.pct_over_fastest, 1)
       << '\n';
  }
}

namespace detail {

inline void write_outer_wave(std::ostream& os, const char* side, const OuterWave& w)
{
  if (w.kind == WaveKind::Fan) {
    os << side << " expansion fan\n"
       << "  head velocity                      " << format_fixed(w.head) << '\n'
       << "  tail velocity                      " << format_fixed(w.tail) << '\n';
    return;
  }
  os << side << " shock wave\n"
     << "  velocity                           " << format_fixed(w.head) << '\n'
     << "  shock-relative Mach, unshocked gas " << format_fixed(*w.mach_unshocked) << '\n'
     << "  shock-relative Mach, shocked gas   " << format_fixed(*w.mach_shocked) << '\n';
}

} // namespace detail

inline void write_wave_report(std::ostream& os, const WaveReport& r)
{
  detail::write_outer_wave(os, "left", r.left);
  os << "contact discontinuity\n"
     << "  velocity                           " << format_fixed(r.contact_velocity) << '\n'
     << "  pressure                           " << format_fixed(r.contact_pressure) << '\n'
     << "  left density                       " << format_fixed(r.star_left.rho) << "  a = "
     << format_fixed(r.star_left.sound_speed) << "  e = " << format_fixed(r.star_left.internal_energy)
     << "  h = " << format_fixed(r.star_left.enthalpy) << '\n'
     << "  right density                      " << format_fixed(r.star_right.rho) << "  a = "
     << format_fixed(r.star_right.sound_speed) << "  e = " << format_fixed(r.star_right.internal_energy)
     << "  h = " << format_fixed(r.star_right.enthalpy) << '\n';
  detail::write_outer_wave(os, "right", r.right);
}

} // namespace sodflux
