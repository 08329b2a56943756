// shipcap: command-line front end for the shipyard capacity model.
//
// Exit status: 0 success, 1 data/config/I-O error, 2 usage error.

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "shipcap/shipcap.hpp"

#ifndef SHIPCAP_DEFAULT_CONFIG_DIR
#define SHIPCAP_DEFAULT_CONFIG_DIR "config"
#endif
#ifndef SHIPCAP_DEFAULT_DATA_DIR
#define SHIPCAP_DEFAULT_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using namespace shipcap;

namespace {

struct Paths {
  fs::path config_dir = SHIPCAP_DEFAULT_CONFIG_DIR;
  fs::path reference;

  fs::path model() const { return config_dir / "model.cfg"; }
  fs::path scenario(const std::string& name) const { return config_dir / "scenarios" / (name + ".cfg"); }
  fs::path generator() const { return config_dir / "fleet_reference.json"; }
  fs::path reference_file() const {
    return reference.empty() ? fs::path(SHIPCAP_DEFAULT_DATA_DIR) / "reference_tables.json" : reference;
  }
};

// Provenance labels are relative to the config directory where possible so
// bundles do not depend on where the checkout lives.
std::string label_for(const fs::path& p, const fs::path& config_dir) {
  const auto rel = fs::weakly_canonical(p).lexically_relative(fs::weakly_canonical(config_dir));
  if (!rel.empty() && *rel.begin() != "..") return "config/" + rel.generic_string();
  return p.filename().string();
}

ModelConstants load_model(const Paths& paths) {
  return fs::exists(paths.model()) ? load_model_constants(paths.model().string()) : ModelConstants{};
}

FleetParseResult read_fleet(const std::string& path) {
  auto parsed = parse_fleet_file(path);
  if (!parsed.rejects.empty()) {
    std::cerr << fmt::format("warning: {} row(s) rejected\n", parsed.rejects.size()) << format_rejects(parsed.rejects);
  }
  return parsed;
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::string cur;
    for (char c : item) {
      if (c == ',') {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_identify(const Paths& paths, const std::string& fleet_path, const std::string& out_dir) {
  const auto model = load_model(paths);
  const auto parsed = read_fleet(fleet_path);
  const auto& records = parsed.records;
  if (records.empty()) {
    std::cerr << "warning: fleet contains no valid records\n";
  }
  const auto suitable = annual_capacity_by_yard(records, identify_suitable_shipyards(records, model.yard_criteria),
                                                model.averaging_window, model.cgt_params);
  const auto repurpose = annual_capacity_by_yard(records, identify_repurpose_candidates(records, model.yard_criteria),
                                                 model.averaging_window, model.cgt_params);
  const auto shares = tanker_output_shares(records, suitable, model.averaging_window, model.cgt_params);

  Table yards{"yards", "Suitable shipyards, average annual CGT per vessel type", {"yard", "country", "group"}, {}};
  for (auto t : kAllVesselTypes) yards.header.push_back(std::string(to_string(t)));
  yards.header.push_back("tanker_total");
  auto add_rows = [&](const std::vector<ShipyardProfile>& ys, const char* group) {
    for (const auto& y : ys) {
      std::vector<std::string> row{y.yard_id, y.country, group};
      for (auto t : kAllVesselTypes) row.push_back(fmt_fixed(y.avg_annual_cgt(t), 1));
      row.push_back(fmt_fixed(y.avg_annual_cgt_total(true), 1));
      yards.rows.push_back(std::move(row));
    }
  };
  add_rows(suitable, "suitable");
  add_rows(repurpose, "repurpose_candidate");

  Table types{"yard_totals", "Suitable shipyards, total average annual CGT per vessel type", {"vessel_type", "cgt_per_year"}, {}};
  for (const auto& [t, v] : total_by_type(suitable)) types.rows.push_back({std::string(to_string(t)), fmt_fixed(v, 1)});
  types.rows.push_back({"pool_lng_lpg", fmt_fixed(annual_pool(suitable), 1)});
  types.rows.push_back({"repurpose_pool_lng_lpg", fmt_fixed(annual_pool(repurpose), 1)});

  Table countries{"country_shares",
                  "Tanker output of the suitable shipyards by country",
                  {"country", "yards", "tanker_cgt_per_year", "share_of_global_tanker_output", "lng_cgt_per_year",
                   "share_of_suitable_lng_output"},
                  {}};
  for (const auto& c : shares.countries) {
    countries.rows.push_back({c.country, std::to_string(c.yards), fmt_fixed(c.tanker_cgt_per_year, 1),
                              fmt_fixed(c.share, 4), fmt_fixed(c.lng_cgt_per_year, 1), fmt_fixed(c.lng_share, 4)});
  }
  countries.rows.push_back({"other", "", fmt_fixed(shares.global_tanker_cgt_per_year * shares.other_share, 1),
                            fmt_fixed(shares.other_share, 4), "", ""});

  std::cout << fmt::format("{} suitable shipyard(s), {} repurpose candidate(s)\n", suitable.size(), repurpose.size());
  std::cout << fmt::format("global tanker output {:.1f} CGT/yr\n", shares.global_tanker_cgt_per_year);
  for (const auto& c : shares.countries) std::cout << fmt::format("  {} {:.1f}%\n", c.country, 100.0 * c.share);
  std::cout << fmt::format("annual LNG+LPG pool {:.1f} CGT/yr\n", annual_pool(suitable));
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    for (const auto* t : {&yards, &types, &countries}) write_text(fs::path(out_dir) / (t->id + ".csv"), to_csv(*t));
  } else {
    std::cout << '\n' << to_csv(yards);
  }
  return 0;
}

int cmd_fit(const Paths& paths, const std::string& fleet_path, const std::string& family) {
  const auto model = load_model(paths);
  const auto parsed = read_fleet(fleet_path);
  RegressionFit fit;
  std::vector<Point> pts;
  if (family == "membrane_linear") {
    pts = membrane_lng_sample(parsed.records, model.membrane_fit.domain_min_m3, model.cgt_params);
    fit = fit_linear(pts);
  } else if (family == "independent_power") {
    pts = independent_tank_sample(parsed.records, model.cgt_params);
    fit = fit_power(pts);
  } else {
    throw UsageError("family must be membrane_linear or independent_power");
  }
  const auto res = residual_summary(fit, pts);
  std::cout << fmt::format("family       {}\n", family);
  if (fit.model == FitModel::linear) {
    std::cout << fmt::format("CGT          = {:.6f} * V + {:.3f}\n", fit.slope_or_scale, fit.intercept_or_exponent);
  } else {
    std::cout << fmt::format("CGT          = {:.6f} * V^{:.6f}\n", fit.slope_or_scale, fit.intercept_or_exponent);
  }
  std::cout << fmt::format("correlation  {:.6f}\n", fit.correlation);
  std::cout << fmt::format("points       {}\n", fit.n_points);
  std::cout << fmt::format("residual rms {:.3f}  max {:.3f}  mean {:.3f}\n", res.rms, res.max_abs, res.mean);
  return 0;
}

int cmd_generate(const Paths& paths, const std::string& config_path, std::optional<std::uint64_t> seed,
                 const std::string& out_path) {
  const auto cfg = load_generator_config(config_path.empty() ? paths.generator().string() : config_path);
  const auto records = generate_synthetic_fleet(cfg, seed.value_or(cfg.seed));
  if (out_path.empty() || out_path == "-") {
    write_fleet_csv(std::cout, records);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + out_path + "'");
    write_fleet_csv(out, records);
    std::cerr << fmt::format("wrote {} records to {}\n", records.size(), out_path);
  }
  return 0;
}

struct RunOptions {
  std::string scenario;
  std::string out_dir = "out";
  std::string portfolio = "lh2-only";
  bool small_lnh3 = false;
  std::vector<std::string> emit;
  std::string fleet;
  std::optional<std::uint64_t> seed;
};

int cmd_run(const Paths& paths, const RunOptions& opt) {
  std::vector<ScenarioKind> kinds;
  if (opt.scenario == "all") {
    kinds.assign(kAllScenarios.begin(), kAllScenarios.end());
  } else if (const auto k = parse_scenario_kind(opt.scenario)) {
    kinds.push_back(*k);
  } else {
    throw UsageError("unknown scenario '" + opt.scenario + "'; valid names: all, " + scenario_names());
  }
  const auto portfolio = parse_portfolio(opt.portfolio);
  const auto emit = split_list(opt.emit);
  const auto model = load_model(paths);
  const auto reference = load_reference(paths.reference_file());

  Provenance base;
  if (fs::exists(paths.model())) base.inputs[label_for(paths.model(), paths.config_dir)] = sha256_file(paths.model());
  base.inputs["reference:" + paths.reference_file().filename().string()] = sha256_file(paths.reference_file());

  // optional fleet for a computed LNG replacement schedule
  std::optional<std::vector<VesselRecord>> fleet;
  if (!opt.fleet.empty()) {
    fleet = read_fleet(opt.fleet).records;
    base.inputs["fleet:" + fs::path(opt.fleet).filename().string()] = sha256_file(opt.fleet);
    base.settings["lng_schedule"] = "fleet_turnover";
  } else if (opt.seed) {
    const auto cfg = load_generator_config(paths.generator().string());
    fleet = generate_synthetic_fleet(cfg, *opt.seed);
    base.inputs[label_for(paths.generator(), paths.config_dir)] = sha256_file(paths.generator());
    base.settings["seed"] = std::to_string(*opt.seed);
    base.settings["lng_schedule"] = "fleet_turnover";
  } else {
    base.settings["lng_schedule"] = "config";
  }

  std::vector<ScenarioResult> results;
  for (auto kind : kinds) {
    const auto path = paths.scenario(std::string(to_string(kind)));
    auto config = load_scenario_config(path, model);
    Provenance prov = base;
    prov.inputs[label_for(path, paths.config_dir)] = sha256_file(path);
    const auto kv = KeyValueFile::load(path.string());
    for (const char* key : {"hydrogen_demand", "lng_demand_series"}) {
      if (!kv.has(key)) continue;
      fs::path p = kv.get(key);
      if (p.is_relative()) p = path.parent_path() / p;
      prov.inputs[label_for(p, paths.config_dir)] = sha256_file(p);
    }
    if (fleet && config.lng_demand != "neglected") {
      if (!config.lng_demand_series) {
        throw ConfigError(path.string() + ": lng_demand_series is required to derive the schedule from a fleet");
      }
      const auto t = lng_turnover(*fleet, *config.lng_demand_series, model.factors, model.vessel_lifetime_years,
                                  config.lng_spec);
      config.lng_newbuild_tankers = newbuilds_by_window(t.schedule, config.window_ends, config.window_length);
    }
    auto bundle = make_bundle(config, portfolio, opt.small_lnh3, &reference, prov);
    const fs::path dir = kinds.size() == 1 ? fs::path(opt.out_dir) : fs::path(opt.out_dir) / config.name;
    write_bundle(bundle, dir, emit);

    const auto& r = bundle.result;
    std::size_t flagged = 0;
    for (const auto& d : bundle.discrepancies) flagged += d.matches ? 0 : 1;
    const auto& b = bundle.portfolio_bottleneck;
    std::cout << fmt::format("{}: gap 2030 {:.2f} M m3, min LNH3 {}; {} shortage {}; {} reference discrepancy flag(s) -> {}\n",
                             r.name, r.gap.count(2030) ? r.gap.at(2030) / 1e6 : 0.0,
                             r.min_lnh3.count(2030) ? fmt_min(r.min_lnh3.at(2030)) : "n/a", portfolio.label,
                             !b.shortage                ? std::string("none")
                             : b.resolve_year           ? fmt::format("{:.0f}-{}", b.start, *b.resolve_year)
                                                        : fmt::format("{:.0f}-unresolved", b.start),
                             flagged, dir.string());
    results.push_back(std::move(bundle.result));
  }
  if (kinds.size() > 1) {
    const auto summary = gap_summary_table(results);
    const fs::path dir(opt.out_dir);
    write_text(dir / "gap_summary.csv", to_csv(summary));
  }
  return 0;
}

// Compares every result.json and CSV below two bundle roots.
int cmd_diff(const std::string& left, const std::string& right, double tolerance) {
  auto collect = [](const fs::path& root) {
    std::map<std::string, fs::path> files;
    if (fs::is_regular_file(root)) {
      files[root.filename().string()] = root;
      return files;
    }
    if (!fs::is_directory(root)) throw IoError("no bundle at '" + root.string() + "'");
    for (const auto& e : fs::recursive_directory_iterator(root)) {
      if (!e.is_regular_file()) continue;
      const auto ext = e.path().extension();
      if (ext == ".json" || ext == ".csv") files[e.path().lexically_relative(root).generic_string()] = e.path();
    }
    return files;
  };
  const auto a = collect(left), b = collect(right);
  std::size_t differences = 0;
  for (const auto& [rel, path] : a) {
    if (!b.contains(rel)) {
      std::cout << fmt::format("only in left: {}\n", rel);
      ++differences;
      continue;
    }
    std::vector<CellDiff> diffs;
    if (path.extension() == ".json") {
      diffs = diff_bundles(nlohmann::json::parse(read_file(path)), nlohmann::json::parse(read_file(b.at(rel))),
                           tolerance);
    } else {
      // CSV: compare cell by cell, numerically where both sides parse
      auto rows = [](const std::string& text) {
        std::vector<std::vector<std::string>> out;
        std::istringstream in(text);
        for (std::string line; std::getline(in, line);) {
          std::vector<std::string> cells;
          for (auto c : detail::split_csv(line)) cells.emplace_back(c);
          out.push_back(std::move(cells));
        }
        return out;
      };
      const auto x = rows(read_file(path)), y = rows(read_file(b.at(rel)));
      if (x.size() != y.size()) diffs.push_back({"/#rows", std::to_string(x.size()), std::to_string(y.size())});
      for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
        if (x[i].size() != y[i].size()) {
          diffs.push_back({fmt::format("/{}/#cells", i), std::to_string(x[i].size()), std::to_string(y[i].size())});
          continue;
        }
        for (std::size_t k = 0; k < x[i].size(); ++k) {
          double u = 0, v = 0;
          if (detail::parse_number(x[i][k], u) && detail::parse_number(y[i][k], v)) {
            const double scale = std::max({std::abs(u), std::abs(v), 1e-12});
            if (std::abs(u - v) / scale <= tolerance) continue;
          } else if (x[i][k] == y[i][k]) {
            continue;
          }
          diffs.push_back({fmt::format("/{}/{}", i, k), x[i][k], y[i][k]});
        }
      }
    }
    for (const auto& d : diffs) std::cout << fmt::format("{}{}: {} != {}\n", rel, d.path, d.left, d.right);
    differences += diffs.size();
  }
  for (const auto& [rel, path] : b) {
    if (!a.contains(rel)) {
      std::cout << fmt::format("only in right: {}\n", rel);
      ++differences;
    }
  }
  std::cout << fmt::format("{} file(s) compared, {} difference(s)\n", a.size(), differences);
  return differences == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shipyard capacity model for hydrogen carrier fleets"};
  app.require_subcommand(1);
  Paths paths;
  std::string config_dir = paths.config_dir.string();
  app.add_option("--config-dir", config_dir, "Directory with model.cfg, scenarios/ and demand/");
  std::string reference;
  app.add_option("--reference", reference, "Published reference values (JSON)");

  std::string fleet, family, out, gen_config;
  std::optional<std::uint64_t> seed;
  RunOptions run_opt;

  auto* identify = app.add_subcommand("identify", "Identify suitable shipyards in a fleet file");
  identify->add_option("--fleet", fleet, "Fleet CSV")->required();
  identify->add_option("--out", out, "Directory for CSV reports (default: print)");

  auto* fit = app.add_subcommand("fit", "Fit an effort regression to a fleet sample");
  fit->add_option("--fleet", fleet, "Fleet CSV")->required();
  fit->add_option("--family", family, "membrane_linear or independent_power")
      ->required()
      ->check(CLI::IsMember({"membrane_linear", "independent_power"}));

  auto* gen = app.add_subcommand("generate-fleet", "Write a seeded synthetic fleet");
  gen->add_option("--config", gen_config, "Generator config (JSON)");
  gen->add_option("--seed", seed, "Random seed (default: from config)");
  gen->add_option("--out", out, "Output CSV (default: stdout)");

  auto* run = app.add_subcommand("run", "Run a scenario (or all) and write report bundles");
  run->add_option("scenario,--scenario", run_opt.scenario, "Scenario name or 'all'");
  run->add_option("--config", config_dir, "Config directory");
  run->add_option("--out", run_opt.out_dir, "Output directory");
  run->add_option("--portfolio", run_opt.portfolio, "lh2-only, lnh3-only or mix:<fraction>");
  run->add_flag("--small-lnh3", run_opt.small_lnh3, "Add the small LNH3 carrier variant");
  run->add_option("--emit", run_opt.emit, "Table/figure ids to write (comma separated)");
  run->add_option("--fleet", run_opt.fleet, "Fleet CSV for a computed LNG replacement schedule");
  run->add_option("--seed", run_opt.seed, "Generate the reference fleet with this seed for the LNG schedule");

  std::string left, right;
  double tolerance = 1e-9;
  auto* diff = app.add_subcommand("report-diff", "Compare two bundles cell by cell");
  diff->add_option("left", left)->required();
  diff->add_option("right", right)->required();
  diff->add_option("--tolerance", tolerance, "Relative tolerance for numeric cells");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  paths.config_dir = config_dir;
  paths.reference = reference;
  try {
    if (*identify) return cmd_identify(paths, fleet, out);
    if (*fit) return cmd_fit(paths, fleet, family);
    if (*gen) return cmd_generate(paths, gen_config, seed, out);
    if (*run) {
      if (run_opt.scenario.empty()) throw UsageError("missing scenario; valid names: all, " + scenario_names());
      return cmd_run(paths, run_opt);
    }
    if (*diff) return cmd_diff(left, right, tolerance);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
