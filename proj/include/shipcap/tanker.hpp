#pragma once
/*
  Construction effort of liquefied-gas tankers.

  Effort is measured in compensated gross tonnage (CGT), the OECD work-content
  unit CGT = A * GT^B. For gas carriers the model works from cargo volume
  instead of GT, via two fleet regressions:

    membrane tanks (LNG, LH2):      CGT = 0.3 * V + 36,087.8
    independent tanks (LPG, LNH3):  CGT = 126.97 * V^0.48

  Hydrogen carriers are compared in liquefied-hydrogen equivalents (LH2eq):
  the volume of LH2 holding the same usable hydrogen energy, net of the
  ammonia cracking losses.
*/

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "shipcap/error.hpp"

namespace shipcap {

enum class VesselType { lng, lpg, crude_oil, chemical, oil_products, container, other };

inline constexpr std::array<VesselType, 7> kAllVesselTypes = {
    VesselType::lng,          VesselType::lpg,       VesselType::crude_oil, VesselType::chemical,
    VesselType::oil_products, VesselType::container, VesselType::other};

inline constexpr std::string_view to_string(VesselType t) {
  switch (t) {
    case VesselType::lng: return "LNG";
    case VesselType::lpg: return "LPG";
    case VesselType::crude_oil: return "crude_oil";
    case VesselType::chemical: return "chemical";
    case VesselType::oil_products: return "oil_products";
    case VesselType::container: return "container";
    case VesselType::other: return "other";
  }
  return "other";
}

inline std::optional<VesselType> parse_vessel_type(std::string_view s) {
  for (auto t : kAllVesselTypes) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

// Tanker types only; containers and "other" are not part of tanker output.
inline constexpr bool is_tanker(VesselType t) {
  return t != VesselType::container && t != VesselType::other;
}

struct VesselClassParams {
  VesselType vessel_type = VesselType::lng;
  double param_a = 1.0;
  double param_b = 0.5;

  void validate_or_throw() const {
    if (!(param_a > 0.0)) throw ConfigError("CGT parameter A must be > 0");
    if (!(param_b > 0.0 && param_b < 1.0)) throw ConfigError("CGT parameter B must lie in (0, 1)");
  }
};

// OECD coefficients for the gas and oil tanker classes.
inline constexpr VesselClassParams kLngParams{VesselType::lng, 32.0, 0.68};
inline constexpr VesselClassParams kLpgParams{VesselType::lpg, 62.0, 0.57};
inline constexpr VesselClassParams kOilTankerParams{VesselType::crude_oil, 48.0, 0.57};
inline constexpr VesselClassParams kChemicalParams{VesselType::chemical, 84.0, 0.55};

// Per-type lookup used when deriving yard output from a fleet. Product tankers
// share the oil-tanker coefficients. Container and "other" entries are
// configurable placeholders; the defaults are the OECD container and general
// cargo coefficients.
struct CgtParamTable {
  std::array<VesselClassParams, 7> entries{{
      kLngParams,
      kLpgParams,
      kOilTankerParams,
      kChemicalParams,
      {VesselType::oil_products, 48.0, 0.57},
      {VesselType::container, 19.0, 0.68},
      {VesselType::other, 27.0, 0.64},
  }};

  const VesselClassParams& operator[](VesselType t) const { return entries[static_cast<std::size_t>(t)]; }
  VesselClassParams& operator[](VesselType t) { return entries[static_cast<std::size_t>(t)]; }
};

inline double cgt_from_gt(double gt, const VesselClassParams& params) {
  if (!(gt > 0.0)) throw DomainError("gross tonnage must be positive");
  return params.param_a * std::pow(gt, params.param_b);
}

inline double gt_from_cgt(double cgt, const VesselClassParams& params) {
  if (!(cgt > 0.0)) throw DomainError("CGT must be positive");
  return std::pow(cgt / params.param_a, 1.0 / params.param_b);
}

// Linear effort regression for membrane-tank carriers (LNG, LH2).
struct MembraneEffortFit {
  double slope = 0.3;
  double intercept = 36'087.8;
  double domain_min_m3 = 140'000.0;
};

// Power-law effort regression for independent-tank carriers (LPG, LNH3).
struct IndependentEffortFit {
  double scale = 126.97;
  double exponent = 0.48;
};

inline double cgt_from_capacity_membrane(double gas_capacity_m3, const MembraneEffortFit& fit = {}) {
  if (gas_capacity_m3 < 0.0) throw DomainError("gas capacity must be non-negative");
  return fit.slope * gas_capacity_m3 + fit.intercept;
}

// Warning text when a capacity lies below the fleet sample the membrane
// regression was fitted on; the value is still computed.
inline std::optional<std::string> membrane_domain_warning(double gas_capacity_m3,
                                                          const MembraneEffortFit& fit = {}) {
  if (gas_capacity_m3 >= fit.domain_min_m3) return std::nullopt;
  return "capacity " + std::to_string(gas_capacity_m3) + " m3 is below the membrane regression domain (" +
         std::to_string(fit.domain_min_m3) + " m3)";
}

inline double cgt_from_capacity_independent(double gas_capacity_m3, const IndependentEffortFit& fit = {}) {
  if (!(gas_capacity_m3 > 0.0)) throw DomainError("gas capacity must be positive");
  return fit.scale * std::pow(gas_capacity_m3, fit.exponent);
}

enum class Carrier { lng, lh2, lnh3, lnh3_small };

inline constexpr std::string_view to_string(Carrier c) {
  switch (c) {
    case Carrier::lng: return "LNG";
    case Carrier::lh2: return "LH2";
    case Carrier::lnh3: return "LNH3";
    case Carrier::lnh3_small: return "LNH3_small";
  }
  return "LNG";
}

// m3 LH2eq carried per m3 of liquid ammonia: a 160,000 m3 LNH3 tanker
// delivers 190,217 m3 LH2eq.
struct Lh2EqFactor {
  double factor = 190'217.0 / 160'000.0;
};

inline double lh2_equivalent_volume(double cargo_m3, Carrier carrier, Lh2EqFactor f = {}) {
  if (cargo_m3 < 0.0) throw DomainError("cargo volume must be non-negative");
  switch (carrier) {
    case Carrier::lh2: return cargo_m3;
    case Carrier::lnh3:
    case Carrier::lnh3_small: return cargo_m3 * f.factor;
    case Carrier::lng: break;
  }
  throw UnsupportedCarrier("carrier " + std::string(to_string(carrier)) + " has no LH2-equivalent volume");
}

enum class InsulationMode { canonical, geometric };

// LNG capacity that fits the same enclosed envelope as an LH2 tank set with
// thicker insulation. The canonical mode uses the published equivalence of
// 4 x 40,000 m3 LH2 tanks with 1.0 m walls to 174,457 m3 of LNG capacity with
// 0.4 m walls, scaled linearly in total tank volume; it only applies to that
// wall pair. The geometric mode treats each tank as a cube and grows its edge
// by twice the wall difference. The two modes disagree (177,440 vs 174,457 for
// the canonical input); the geometric one is for sensitivity runs only.
inline constexpr double kCanonicalLh2TankVolume = 40'000.0;
inline constexpr int kCanonicalLh2TankCount = 4;
inline constexpr double kCanonicalLh2Insulation = 1.0;
inline constexpr double kCanonicalLngInsulation = 0.4;
inline constexpr double kCanonicalLh2EquivalentLngCapacity = 174'457.0;

inline double lh2_equivalent_lng_capacity(double tank_volume_m3, int n_tanks, double insulation_lh2_m,
                                          double insulation_lng_m,
                                          InsulationMode mode = InsulationMode::canonical) {
  if (!(tank_volume_m3 > 0.0)) throw DomainError("tank volume must be positive");
  if (n_tanks <= 0) throw DomainError("tank count must be positive");
  if (!(insulation_lng_m >= 0.0) || !(insulation_lh2_m >= insulation_lng_m)) {
    throw DomainError("insulation thicknesses must satisfy lh2 >= lng >= 0");
  }
  const double total = tank_volume_m3 * n_tanks;
  if (mode == InsulationMode::geometric) {
    const double edge = std::cbrt(tank_volume_m3) + 2.0 * (insulation_lh2_m - insulation_lng_m);
    return edge * edge * edge * n_tanks;
  }
  if (insulation_lh2_m != kCanonicalLh2Insulation || insulation_lng_m != kCanonicalLngInsulation) {
    throw DomainError("canonical insulation mode is only defined for 1.0 m / 0.4 m walls; use geometric mode");
  }
  const double canonical_total = kCanonicalLh2TankVolume * kCanonicalLh2TankCount;
  return kCanonicalLh2EquivalentLngCapacity * (total / canonical_total);
}

struct TankerSpec {
  Carrier carrier = Carrier::lng;
  double cargo_capacity_m3 = 160'000.0;
  double cgt = 0.0;
  // zero for LNG, which is not a hydrogen vector here
  double lh2eq_per_tanker_m3 = 0.0;
  int first_delivery_year = 0;
  int construction_years = 3;

  void validate_or_throw() const {
    if (!(cargo_capacity_m3 > 0.0)) throw ConfigError("tanker cargo capacity must be > 0");
    if (!(cgt > 0.0)) throw ConfigError("tanker CGT must be > 0");
    if (construction_years <= 0) throw ConfigError("construction time must be > 0");
  }

  bool operator==(const TankerSpec&) const = default;
};

inline constexpr double kStandardCargoCapacity = 160'000.0;
inline constexpr double kSmallLnh3CargoCapacity = 93'000.0;

inline TankerSpec lng_tanker(double capacity_m3 = kStandardCargoCapacity, const MembraneEffortFit& fit = {}) {
  // LNG carriers are in series production; no availability constraint.
  return {Carrier::lng, capacity_m3, cgt_from_capacity_membrane(capacity_m3, fit), 0.0, 0, 3};
}

// Priced at the LNG hull that encloses the same volume as the insulated LH2 tanks.
inline TankerSpec lh2_tanker(const MembraneEffortFit& fit = {}) {
  const double envelope = lh2_equivalent_lng_capacity(kCanonicalLh2TankVolume, kCanonicalLh2TankCount,
                                                      kCanonicalLh2Insulation, kCanonicalLngInsulation);
  return {Carrier::lh2, kStandardCargoCapacity, cgt_from_capacity_membrane(envelope, fit),
          kStandardCargoCapacity, 2028, 3};
}

inline TankerSpec lnh3_tanker(double capacity_m3 = kStandardCargoCapacity, const IndependentEffortFit& fit = {},
                              Lh2EqFactor factor = {}) {
  const Carrier c = capacity_m3 == kStandardCargoCapacity ? Carrier::lnh3 : Carrier::lnh3_small;
  return {c, capacity_m3, cgt_from_capacity_independent(capacity_m3, fit),
          lh2_equivalent_volume(capacity_m3, c, factor), 2027, 3};
}

inline TankerSpec small_lnh3_tanker(const IndependentEffortFit& fit = {}, Lh2EqFactor factor = {}) {
  return lnh3_tanker(kSmallLnh3CargoCapacity, fit, factor);
}

struct TankerOutput {
  long count = 0;
  double cargo_total_m3 = 0.0;
  double lh2eq_total_m3 = 0.0;
  // pool / cgt without flooring to whole hulls
  double continuous_count = 0.0;
  double continuous_cargo_m3 = 0.0;
  double continuous_lh2eq_m3 = 0.0;
};

inline TankerOutput max_tankers(double pool_cgt, const TankerSpec& spec) {
  if (pool_cgt < 0.0) throw DomainError("CGT pool must be non-negative");
  TankerOutput out;
  out.continuous_count = pool_cgt / spec.cgt;
  out.count = static_cast<long>(std::floor(out.continuous_count));
  out.cargo_total_m3 = static_cast<double>(out.count) * spec.cargo_capacity_m3;
  out.lh2eq_total_m3 = static_cast<double>(out.count) * spec.lh2eq_per_tanker_m3;
  out.continuous_cargo_m3 = out.continuous_count * spec.cargo_capacity_m3;
  out.continuous_lh2eq_m3 = out.continuous_count * spec.lh2eq_per_tanker_m3;
  return out;
}

}  // namespace shipcap
