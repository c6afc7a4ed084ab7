#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "../error.hpp"

namespace sodflux {

/// The 22 face-flux methods, in benchmark report order.
enum class FluxMethodId
{
  Riemann,
  Roe,
  KNP,
  KT,
  SW,
  VanLeerFVS,
  AUSM,
  AUSMPlus,
  AUSMPlusUp,
  AUFS,
  HLLDavis1,
  HLLDavis2,
  HLLRoe,
  HLLEinfeldt,
  HLLPBased,
  HLLCDavis1,
  HLLCDavis2,
  HLLCRoe,
  HLLCEinfeldt,
  HLLCPBased,
  LF,
  Rusanov,
};

inline constexpr std::size_t flux_method_count = 22;

inline constexpr std::array<FluxMethodId, flux_method_count> all_flux_methods = {
  FluxMethodId::Riemann,     FluxMethodId::Roe,        FluxMethodId::KNP,          FluxMethodId::KT,
  FluxMethodId::SW,          FluxMethodId::VanLeerFVS, FluxMethodId::AUSM,         FluxMethodId::AUSMPlus,
  FluxMethodId::AUSMPlusUp,  FluxMethodId::AUFS,       FluxMethodId::HLLDavis1,    FluxMethodId::HLLDavis2,
  FluxMethodId::HLLRoe,      FluxMethodId::HLLEinfeldt, FluxMethodId::HLLPBased,   FluxMethodId::HLLCDavis1,
  FluxMethodId::HLLCDavis2,  FluxMethodId::HLLCRoe,    FluxMethodId::HLLCEinfeldt, FluxMethodId::HLLCPBased,
  FluxMethodId::LF,          FluxMethodId::Rusanov,
};

namespace detail {

struct MethodNames
{
  FluxMethodId id;
  std::string_view display;
  std::string_view flag;
};

inline constexpr std::array<MethodNames, flux_method_count> method_names = {{
  {FluxMethodId::Riemann, "Riemann", "riemann"},
  {FluxMethodId::Roe, "Roe", "roe"},
  {FluxMethodId::KNP, "KNP", "knp"},
  {FluxMethodId::KT, "KT", "kt"},
  {FluxMethodId::SW, "SW", "sw"},
  {FluxMethodId::VanLeerFVS, "vanLeer", "van-leer"},
  {FluxMethodId::AUSM, "AUSM", "ausm"},
  {FluxMethodId::AUSMPlus, "AUSM+", "ausm-plus"},
  {FluxMethodId::AUSMPlusUp, "AUSM+-up", "ausm-plus-up"},
  {FluxMethodId::AUFS, "AUFS", "aufs"},
  {FluxMethodId::HLLDavis1, "HLL-Davis1", "hll-davis1"},
  {FluxMethodId::HLLDavis2, "HLL-Davis2", "hll-davis2"},
  {FluxMethodId::HLLRoe, "HLL-Roe", "hll-roe"},
  {FluxMethodId::HLLEinfeldt, "HLL-Einfeldt", "hll-einfeldt"},
  {FluxMethodId::HLLPBased, "HLL-pBased", "hll-pbased"},
  {FluxMethodId::HLLCDavis1, "HLLC-Davis1", "hllc-davis1"},
  {FluxMethodId::HLLCDavis2, "HLLC-Davis2", "hllc-davis2"},
  {FluxMethodId::HLLCRoe, "HLLC-Roe", "hllc-roe"},
  {FluxMethodId::HLLCEinfeldt, "HLLC-Einfeldt", "hllc-einfeldt"},
  {FluxMethodId::HLLCPBased, "HLLC-pBased", "hllc-pbased"},
  {FluxMethodId::LF, "LF", "lf"},
  {FluxMethodId::Rusanov, "Rusanov", "rusanov"},
}};

} // namespace detail

/// 1-based position in the benchmark table.
constexpr std::size_t table_index(FluxMethodId id)
{
  return static_cast<std::size_t>(id) + 1;
}

constexpr std::string_view display_name(FluxMethodId id)
{
  return detail::method_names[static_cast<std::size_t>(id)].display;
}

/// Kebab-case spelling used on the command line.
constexpr std::string_view flag_name(FluxMethodId id)
{
  return detail::method_names[static_cast<std::size_t>(id)].flag;
}

inline std::optional<FluxMethodId> parse_flux_method(std::string_view flag)
{
  for (const auto& entry : detail::method_names) {
    if (entry.flag == flag) {
      return entry.id;
    }
  }
  return std::nullopt;
}

/// Free parameters of the methods that have any.
struct SchemeConfig
{
  // AUSM+ / AUSM+-up polynomial coefficients.
  double ausm_plus_alpha = 3.0 / 16.0;
  double ausm_plus_beta = 1.0 / 8.0;
  // AUSM+-up low-Mach scaling.
  double ausm_up_cutoff_mach = 0.1;
  double ausm_up_kp = 0.25;
  double ausm_up_ku = 0.75;
  double ausm_up_sigma = 1.0;
  // Harten entropy fix for Roe; off in benchmark mode.
  bool roe_entropy_fix = false;
  double roe_entropy_fix_fraction = 0.1;

  void validate() const
  {
    if (!(ausm_up_cutoff_mach > 0.0 && ausm_up_cutoff_mach <= 1.0)) {
      throw InvalidConfig("ausm_up_cutoff_mach must lie in (0, 1]");
    }
    if (!(roe_entropy_fix_fraction > 0.0)) {
      throw InvalidConfig("roe_entropy_fix_fraction must be positive");
    }
  }
};

} // namespace sodflux
