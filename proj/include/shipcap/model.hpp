#pragma once
// Model constants shared by every scenario, loadable from a key/value file so
// sensitivity runs are config edits.

#include <string>

#include "shipcap/demand.hpp"
#include "shipcap/error.hpp"
#include "shipcap/fleet.hpp"
#include "shipcap/kvfile.hpp"
#include "shipcap/tanker.hpp"

namespace shipcap {

struct ModelConstants {
  CgtParamTable cgt_params;
  MembraneEffortFit membrane_fit;
  IndependentEffortFit independent_fit;
  Lh2EqFactor lh2eq;
  InsulationMode insulation_mode = InsulationMode::canonical;
  double lh2_tank_volume_m3 = kCanonicalLh2TankVolume;
  int lh2_tank_count = kCanonicalLh2TankCount;
  double lh2_insulation_m = kCanonicalLh2Insulation;
  double lng_insulation_m = kCanonicalLngInsulation;
  double cargo_capacity_m3 = kStandardCargoCapacity;
  double small_lnh3_capacity_m3 = kSmallLnh3CargoCapacity;
  int lh2_first_delivery_year = 2028;
  int lnh3_first_delivery_year = 2027;
  int vessel_lifetime_years = 25;
  CalibrationFactors factors;
  YardCriteria yard_criteria;
  YearWindow averaging_window;

  TankerSpec lng_spec() const { return lng_tanker(cargo_capacity_m3, membrane_fit); }

  TankerSpec lh2_spec() const {
    const double envelope = lh2_equivalent_lng_capacity(lh2_tank_volume_m3, lh2_tank_count, lh2_insulation_m,
                                                        lng_insulation_m, insulation_mode);
    TankerSpec s = lh2_tanker(membrane_fit);
    s.cgt = cgt_from_capacity_membrane(envelope, membrane_fit);
    s.cargo_capacity_m3 = lh2_tank_volume_m3 * lh2_tank_count;
    s.lh2eq_per_tanker_m3 = s.cargo_capacity_m3;
    s.first_delivery_year = lh2_first_delivery_year;
    return s;
  }

  TankerSpec lnh3_spec(double capacity_m3) const {
    TankerSpec s = lnh3_tanker(capacity_m3, independent_fit, lh2eq);
    s.first_delivery_year = lnh3_first_delivery_year;
    return s;
  }
  TankerSpec lnh3_spec() const { return lnh3_spec(cargo_capacity_m3); }
  TankerSpec small_lnh3_spec() const { return lnh3_spec(small_lnh3_capacity_m3); }
};

inline ModelConstants model_constants_from_kv(const KeyValueFile& kv) {
  ModelConstants m;
  for (auto t : kAllVesselTypes) {
    const std::string key = "cgt." + std::string(to_string(t));
    auto& p = m.cgt_params[t];
    p.param_a = kv.get_double_or(key + ".a", p.param_a);
    p.param_b = kv.get_double_or(key + ".b", p.param_b);
    p.validate_or_throw();
  }
  m.membrane_fit.slope = kv.get_double_or("membrane.slope", m.membrane_fit.slope);
  m.membrane_fit.intercept = kv.get_double_or("membrane.intercept", m.membrane_fit.intercept);
  m.membrane_fit.domain_min_m3 = kv.get_double_or("membrane.domain_min_m3", m.membrane_fit.domain_min_m3);
  m.independent_fit.scale = kv.get_double_or("independent.scale", m.independent_fit.scale);
  m.independent_fit.exponent = kv.get_double_or("independent.exponent", m.independent_fit.exponent);
  m.lh2eq.factor = kv.get_double_or("lnh3.lh2eq_per_m3", m.lh2eq.factor);

  const std::string mode = kv.get_or("lh2.insulation_mode", "canonical");
  if (mode == "canonical") {
    m.insulation_mode = InsulationMode::canonical;
  } else if (mode == "geometric") {
    m.insulation_mode = InsulationMode::geometric;
  } else {
    throw ConfigError(kv.origin() + ": lh2.insulation_mode must be canonical or geometric");
  }
  m.lh2_tank_volume_m3 = kv.get_double_or("lh2.tank_volume_m3", m.lh2_tank_volume_m3);
  m.lh2_tank_count = kv.get_int_or("lh2.tank_count", m.lh2_tank_count);
  m.lh2_insulation_m = kv.get_double_or("lh2.insulation_m", m.lh2_insulation_m);
  m.lng_insulation_m = kv.get_double_or("lng.insulation_m", m.lng_insulation_m);
  m.cargo_capacity_m3 = kv.get_double_or("tanker.cargo_capacity_m3", m.cargo_capacity_m3);
  m.small_lnh3_capacity_m3 = kv.get_double_or("lnh3.small_cargo_capacity_m3", m.small_lnh3_capacity_m3);
  m.lh2_first_delivery_year = kv.get_int_or("lh2.first_delivery_year", m.lh2_first_delivery_year);
  m.lnh3_first_delivery_year = kv.get_int_or("lnh3.first_delivery_year", m.lnh3_first_delivery_year);
  m.vessel_lifetime_years = kv.get_int_or("fleet.lifetime_years", m.vessel_lifetime_years);

  m.factors.maritime_share = kv.get_double_or("demand.maritime_share", m.factors.maritime_share);
  m.factors.fleet_factor_h2 = kv.get_double_or("demand.fleet_factor_h2", m.factors.fleet_factor_h2);
  m.factors.fleet_factor_lng = kv.get_double_or("demand.fleet_factor_lng", m.factors.fleet_factor_lng);
  m.factors.gdp_growth = kv.get_double_or("demand.gdp_growth", m.factors.gdp_growth);
  m.factors.validate_or_throw();

  auto& c = m.yard_criteria;
  c.large_lng_min_capacity_m3 = kv.get_double_or("yards.large_lng_min_capacity_m3", c.large_lng_min_capacity_m3);
  c.large_lng_min_year = kv.get_int_or("yards.large_lng_min_year", c.large_lng_min_year);
  c.active_from = kv.get_int_or("yards.active_from", c.active_from);
  c.active_to = kv.get_int_or("yards.active_to", c.active_to);
  m.averaging_window.first = kv.get_int_or("yards.window_first", m.averaging_window.first);
  m.averaging_window.last = kv.get_int_or("yards.window_last", m.averaging_window.last);
  if (m.averaging_window.length() <= 0) throw ConfigError(kv.origin() + ": empty averaging window");
  if (m.vessel_lifetime_years <= 0) throw ConfigError(kv.origin() + ": vessel lifetime must be positive");

  // building the specs validates the tanker inputs
  m.lng_spec().validate_or_throw();
  m.lh2_spec().validate_or_throw();
  m.lnh3_spec().validate_or_throw();
  m.small_lnh3_spec().validate_or_throw();
  return m;
}

inline ModelConstants load_model_constants(const std::string& path) {
  return model_constants_from_kv(KeyValueFile::load(path));
}

}  // namespace shipcap
