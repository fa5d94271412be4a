#pragma once

// Scenario runner behind the `itlab` command line tool. Each scenario turns a
// flat key/value configuration into CSV tables plus a list of checks.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "itlab/classical.hpp"
#include "itlab/convergence.hpp"
#include "itlab/csv.hpp"
#include "itlab/density_matrix.hpp"
#include "itlab/errors.hpp"
#include "itlab/gaussian.hpp"
#include "itlab/imaging.hpp"
#include "itlab/interferometer.hpp"
#include "itlab/units.hpp"

namespace itlab {

struct ParamSpec {
  std::string key;
  std::string default_value;
  std::string description;
};

struct ScenarioInfo {
  std::string name;
  std::string description;
  std::vector<ParamSpec> params;
};

inline const std::vector<ScenarioInfo>& scenario_catalog() {
  static const std::vector<ScenarioInfo> catalog = {
      {"fig1",
       "free Gaussian: exact vs imaging density at fixed detectors and fixed times",
       {{"sigma", "10", "initial width (a.u.)"},
        {"mass", "1", "particle mass (a.u.)"},
        {"detectors", "10,30", "fixed detector positions z_f"},
        {"t_min", "1", "first time of the detector scan"},
        {"t_max", "1000", "last time of the detector scan"},
        {"n_times", "1000", "number of times in the detector scan"},
        {"snapshot_times", "100,200", "times of the spatial snapshots"},
        {"z_lo", "-60", "spatial snapshot window start"},
        {"z_hi", "60", "spatial snapshot window end"},
        {"n_z", "601", "spatial snapshot points (>= 256)"}}},
      {"fig2",
       "uniformly accelerated Gaussian in the position and initial-momentum pictures",
       {{"sigma", "2", "initial width (a.u.)"},
        {"mass", "1", "particle mass (a.u.)"},
        {"force", "1", "constant force F (a.u.)"},
        {"times", "5,10,15", "snapshot times"},
        {"z_lo", "-20", "position window start"},
        {"z_hi", "160", "position window end"},
        {"n_z", "901", "position window points (>= 256)"},
        {"n_p", "801", "momentum-picture points"}}},
      {"fringes",
       "Mach-Zehnder atom interferometer fringes from two classical paths",
       {{"n_slits", "100", "slits per grating"},
        {"n_slits_compare", "50", "slit count of the comparison run for N^2 scaling"},
        {"period_nm", "400", "grating period d (nm)"},
        {"wavelength_pm", "16", "de Broglie wavelength (pm)"},
        {"separation_cm", "66", "grating separation L (cm)"},
        {"path_separation_um", "30", "quoted path separation w (um)"},
        {"mass_amu", "23", "atom mass (u)"},
        {"periods", "3", "fringe periods on each side of x = 0"},
        {"samples_per_period", "64", "samples per grating period (>= 16)"}}},
      {"offdiag",
       "off-diagonal density-matrix oscillation and its time average",
       {{"sigma", "10", "initial width (a.u.)"},
        {"mass", "1", "particle mass (a.u.)"},
        {"v", "0.15", "classical velocity z_f/t"},
        {"v_prime", "0.2", "classical velocity z_f'/t"},
        {"t_center", "100000", "centre of the observation window"},
        {"periods", "10", "window length in oscillation periods"},
        {"samples_per_period", "64", "samples per oscillation period (>= 64)"}}},
      {"transport",
       "probability transport |Psi|^2 dz_f = |Psi~|^2 dp_i along classical trajectories",
       {{"sigma", "10", "initial width (a.u.)"},
        {"mass", "1", "particle mass (a.u.)"},
        {"force", "0", "constant force F (a.u.)"},
        {"momenta", "-0.1,-0.05,0,0.05,0.1", "initial momenta labelling the trajectories"},
        {"t1", "1000", "first detection time"},
        {"t2", "2000", "second detection time"},
        {"tolerance", "0.01", "allowed relative violation"}}},
      {"transition",
       "start of the transition zone z_i = f sigma, t_i = m z_i^2 / hbar",
       {{"sigma", "1", "initial width (a.u.)"},
        {"f", "100", "zone multiplier"},
        {"masses", "1,1836", "particle masses (a.u.)"},
        {"threshold", "10", "smallest f counted as valid"}}},
  };
  return catalog;
}

inline std::string scenario_names() {
  std::string names;
  for (const auto& s : scenario_catalog()) {
    if (!names.empty()) names += ", ";
    names += s.name;
  }
  return names;
}

inline const ScenarioInfo& find_scenario(std::string_view name) {
  for (const auto& s : scenario_catalog())
    if (s.name == name) return s;
  throw ConfigError("unknown scenario '" + std::string(name) + "'; valid scenarios: " + scenario_names());
}

struct ScenarioConfig {
  std::string scenario;
  std::map<std::string, std::string> parameters;
  std::filesystem::path output_dir = ".";

  double number(const std::string& key) const {
    const auto it = parameters.find(key);
    if (it == parameters.end()) throw ConfigError("missing key '" + key + "'");
    return parse_number(key, it->second);
  }

  int integer(const std::string& key) const {
    const double v = number(key);
    if (v != std::floor(v) || std::abs(v) > 1e9) throw ConfigError("key '" + key + "' must be an integer");
    return static_cast<int>(v);
  }

  std::vector<double> list(const std::string& key) const {
    const auto it = parameters.find(key);
    if (it == parameters.end()) throw ConfigError("missing key '" + key + "'");
    std::vector<double> out;
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_number(key, item));
    if (out.empty()) throw ConfigError("key '" + key + "' needs at least one value");
    return out;
  }

  static double parse_number(const std::string& key, std::string text) {
    const auto first = text.find_first_not_of(" \t");
    const auto last = text.find_last_not_of(" \t");
    if (first == std::string::npos) throw ConfigError("key '" + key + "' has an empty value");
    text = text.substr(first, last - first + 1);
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(v))
      throw ConfigError("key '" + key + "' has a non-numeric value '" + text + "'");
    return v;
  }
};

/// Parsed configuration file: at most one `[scenario]` header followed by `key = value` lines.
struct ConfigFile {
  std::optional<std::string> section;
  std::map<std::string, std::string> values;
};

inline std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

inline ConfigFile parse_config_text(std::string_view text) {
  ConfigFile cfg;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line = trim(line.substr(0, hash));
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string where = "config line " + std::to_string(line_no) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + "malformed section header");
      if (cfg.section) throw ConfigError(where + "only one [scenario] section is allowed");
      if (!cfg.values.empty()) throw ConfigError(where + "section header must precede all keys");
      cfg.section = trim(std::string_view(line).substr(1, line.size() - 2));
    } else {
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw ConfigError(where + "expected 'key = value'");
      const std::string key = trim(std::string_view(line).substr(0, eq));
      const std::string value = trim(std::string_view(line).substr(eq + 1));
      if (key.empty()) throw ConfigError(where + "empty key");
      if (cfg.values.count(key)) throw ConfigError(where + "duplicate key '" + key + "'");
      cfg.values[key] = value;
    }
    if (end == text.size()) break;
  }
  return cfg;
}

inline ConfigFile load_config_file(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot read config file " + path.string());
  std::stringstream ss;
  ss << file.rdbuf();
  return parse_config_text(ss.str());
}

/// Merges defaults, file values and `key=value` overrides (last wins) and
/// rejects keys the scenario does not know.
inline ScenarioConfig resolve_config(const std::string& scenario, const std::optional<ConfigFile>& file,
                                     const std::vector<std::string>& overrides,
                                     const std::filesystem::path& output_dir = ".") {
  const ScenarioInfo& info = find_scenario(scenario);
  ScenarioConfig cfg;
  cfg.scenario = info.name;
  cfg.output_dir = output_dir;
  for (const auto& p : info.params) cfg.parameters[p.key] = p.default_value;

  auto apply = [&](const std::string& key, const std::string& value) {
    if (!cfg.parameters.count(key))
      throw ConfigError("unknown key '" + key + "' for scenario " + info.name);
    cfg.parameters[key] = value;
  };
  if (file) {
    if (file->section && *file->section != info.name)
      throw ConfigError("config section [" + *file->section + "] does not match scenario " + info.name);
    for (const auto& [k, v] : file->values) apply(k, v);
  }
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) throw ConfigError("override '" + o + "' is not key=value");
    apply(trim(std::string_view(o).substr(0, eq)), trim(std::string_view(o).substr(eq + 1)));
  }
  return cfg;
}

struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct ScenarioResult {
  std::string scenario;
  std::vector<CsvTable> tables;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }

  std::string summary() const {
    std::string out = "scenario " + scenario + "\n";
    for (const auto& t : tables) out += "  table " + t.name() + ".csv (" + std::to_string(t.rows().size()) + " rows)\n";
    for (const auto& n : notes) out += "  note  " + n + "\n";
    for (const auto& c : checks)
      out += std::string("  ") + (c.passed ? "PASS " : "FAIL ") + c.name + " = " + format_number(c.value) +
             " (tolerance " + format_number(c.tolerance) + ")\n";
    out += passed() ? "result PASS\n" : "result FAIL\n";
    return out;
  }
};

namespace scenarios {

inline GaussianSpec gaussian_from(const ScenarioConfig& cfg) {
  GaussianSpec spec;
  spec.sigma = cfg.number("sigma");
  spec.mass = cfg.number("mass");
  spec.validate();
  return spec;
}

inline ScenarioResult fig1(const ScenarioConfig& cfg) {
  const GaussianSpec spec = gaussian_from(cfg);
  const auto detectors = cfg.list("detectors");
  const double t_min = cfg.number("t_min");
  const double t_max = cfg.number("t_max");
  const int n_times = cfg.integer("n_times");
  if (!(t_min > 0.0) || !(t_max > t_min) || n_times < 2) throw ConfigError("fig1 needs 0 < t_min < t_max, n_times >= 2");

  ScenarioResult res;
  CsvTable time_table("fig1_time", {"t", "z_f", "rho_exact", "rho_it"});
  for (double z : detectors) {
    for (int k = 0; k < n_times; ++k) {
      const double t = t_min + (t_max - t_min) * k / (n_times - 1);
      time_table.add_row({t, z, std::norm(free_exact(spec, z, t)), std::norm(free_it(spec, z, t))});
    }
    const double gap = std::norm(free_it(spec, z, t_max)) / std::norm(free_exact(spec, z, t_max)) - 1.0;
    res.checks.push_back({"relative gap at t_max, z_f = " + format_number(z), std::abs(gap), 0.01, std::abs(gap) <= 0.01});
  }

  const auto snapshots = cfg.list("snapshot_times");
  const ConvergenceReport report = it_error_scan(spec, ForceField::free(), snapshots, cfg.number("z_lo"),
                                                 cfg.number("z_hi"), cfg.integer("n_z"));
  CsvTable space_table("fig1_space", {"t", "z_f", "rho_exact", "rho_it"});
  for (const auto& p : report.pointwise) space_table.add_row({p.t, p.z_f, p.density_exact, p.density_it});
  for (std::size_t k = 0; k < report.times.size(); ++k)
    res.notes.push_back("t = " + format_number(report.times[k]) + ": hbar t/m sigma^2 = " +
                        format_number(report.regime[k]) + ", relative L-inf gap " +
                        format_number(report.l_inf_rel[k]));
  res.tables.push_back(std::move(time_table));
  res.tables.push_back(std::move(space_table));
  return res;
}

inline ScenarioResult fig2(const ScenarioConfig& cfg) {
  const GaussianSpec spec = gaussian_from(cfg);
  const double force = cfg.number("force");
  const auto times = cfg.list("times");
  const double z_lo = cfg.number("z_lo");
  const double z_hi = cfg.number("z_hi");
  const int n_z = cfg.integer("n_z");
  const double m = spec.mass;

  ScenarioResult res;
  const ConvergenceReport report = it_error_scan(spec, ForceField::uniform(force), times, z_lo, z_hi, n_z);
  CsvTable position("fig2_position", {"t", "z_f", "rho_exact", "rho_it"});
  for (const auto& p : report.pointwise) position.add_row({p.t, p.z_f, p.density_exact, p.density_it});

  CsvTable peaks("fig2_peaks", {"t", "z_peak_expected", "z_peak_sampled", "rho_exact_peak", "classical_density"});
  const double h = (z_hi - z_lo) / (n_z - 1);
  for (std::size_t k = 0; k < report.times.size(); ++k) {
    const double t = report.times[k];
    auto first = report.pointwise.begin() + static_cast<std::ptrdiff_t>(k * n_z);
    auto best = std::max_element(first, first + n_z, [](const auto& a, const auto& b) {
      return a.density_exact < b.density_exact;
    });
    const double expected = force * t * t / (2.0 * m);
    peaks.add_row({t, expected, best->z_f, best->density_exact, m / t});
    const bool in_window = expected >= z_lo && expected <= z_hi;
    res.checks.push_back({"peak offset from F t^2/2m at t = " + format_number(t), std::abs(best->z_f - expected),
                          h, in_window && std::abs(best->z_f - expected) <= h});
  }

  const MomentumPictureScan scan = momentum_picture_scan(spec, force, times, cfg.integer("n_p"));
  CsvTable momentum("fig2_momentum", {"t", "p_i", "z_f", "scaled_exact", "momentum_density"});
  for (const auto& r : scan.rows) momentum.add_row({r.t, r.p_i, r.z_f, r.scaled_exact, r.momentum_density});
  for (const auto& s : scan.summaries)
    res.notes.push_back("t = " + format_number(s.t) + ": momentum-picture L-inf deviation " +
                        format_number(s.l_inf_rel) + ", area " + format_number(s.area));

  res.tables.push_back(std::move(position));
  res.tables.push_back(std::move(momentum));
  res.tables.push_back(std::move(peaks));
  return res;
}

inline ScenarioResult fringes(const ScenarioConfig& cfg) {
  const double d = units::nm_to_au(cfg.number("period_nm"));
  const double lambda = units::pm_to_au(cfg.number("wavelength_pm"));
  const double L = units::cm_to_au(cfg.number("separation_cm"));
  const double w_quoted = units::um_to_au(cfg.number("path_separation_um"));
  const double mass = units::amu_to_au(cfg.number("mass_amu"));
  const int periods = cfg.integer("periods");
  const int per_period = cfg.integer("samples_per_period");
  if (periods < 1) throw ConfigError("periods must be at least 1");

  GratingSpec spec{cfg.integer("n_slits"), d, kTwoPi * kHbar / lambda};
  const InterferometerGeometry geom = consistent_geometry(spec, L);
  const int n_samples = 2 * periods * per_period + 1;
  const FringeProfile profile = fringe_profile(spec, geom, -periods * d, periods * d, n_samples, mass);

  GratingSpec compare = spec;
  compare.n_slits = cfg.integer("n_slits_compare");
  const FringeProfile reference = fringe_profile(compare, geom, -periods * d, periods * d, n_samples, mass);

  ScenarioResult res;
  CsvTable table("fringes", {"x", "x_nm", "intensity", "intensity_relative"});
  for (std::size_t k = 0; k < profile.x_samples.size(); ++k)
    table.add_row({profile.x_samples[k], units::au_to_nm(profile.x_samples[k]), profile.intensity[k],
                   profile.intensity[k] / profile.peak_intensity});
  res.tables.push_back(std::move(table));

  const double period_error = std::abs(profile.period / d - 1.0);
  const double expected_ratio = std::pow(static_cast<double>(spec.n_slits) / compare.n_slits, 2);
  const double ratio = profile.peak_intensity / reference.peak_intensity;
  res.checks.push_back({"fringe period relative error", period_error, 1e-3, period_error <= 1e-3});
  res.checks.push_back({"visibility deviation from 1", std::abs(profile.visibility - 1.0), 1e-6,
                        std::abs(profile.visibility - 1.0) <= 1e-6});
  res.checks.push_back({"peak ratio deviation from (N/N')^2", std::abs(ratio - expected_ratio), 0.01,
                        std::abs(ratio - expected_ratio) <= 0.01});

  InterferometerGeometry quoted = geom;
  quoted.path_separation = w_quoted;
  const auto c = geometry_consistency(spec, quoted);
  res.notes.push_back("fringe period " + format_number(units::au_to_nm(profile.period)) + " nm");
  res.notes.push_back("lambda/d = " + format_number(c.wavelength_ratio) + ", p_g/p0 = " +
                      format_number(c.diffraction_angle) + ", w/L (quoted w) = " + format_number(*c.path_ratio) +
                      ", implied w = " + format_number(*geom.path_separation * units::kBohrNm * 1e-3) + " um");
  res.notes.push_back("time of flight " + format_number(units::au_time_to_s(time_of_flight(spec, geom, mass))) +
                      " s");
  return res;
}

inline ScenarioResult offdiag(const ScenarioConfig& cfg) {
  const GaussianSpec spec = gaussian_from(cfg);
  const double v = cfg.number("v");
  const double v_prime = cfg.number("v_prime");
  const double t_center = cfg.number("t_center");
  const int periods = cfg.integer("periods");
  const int per_period = cfg.integer("samples_per_period");
  if (per_period < kSamplesPerOscillation) throw ConfigError("samples_per_period must be at least 64");
  if (periods < 1) throw ConfigError("periods must be at least 1");

  const double V = width_velocity(spec);
  const double omega = offdiagonal_frequency(v, v_prime, V, spec.sigma);
  if (omega == 0.0) throw ConfigError("v and v_prime give Omega = 0; nothing oscillates");
  const double period = kTwoPi / std::abs(omega);
  const double window = periods * period;
  if (!(t_center - 0.5 * window > 0.0)) throw ConfigError("t_center too small for the window");

  ScenarioResult res;
  const int n = periods * per_period;
  const double dt = window / n;
  CsvTable series("offdiag", {"t", "re", "im", "abs"});
  std::vector<Complex> samples;
  for (int k = 0; k < n; ++k) {
    const double t = t_center - 0.5 * window + k * dt;
    const Complex rho = rho_along_velocities(spec, v, v_prime, t).value;
    samples.push_back(rho);
    series.add_row({t, rho.real(), rho.imag(), std::abs(rho)});
  }
  const double extracted = dominant_frequency(samples, dt);
  const double freq_error = std::abs(extracted / omega - 1.0);
  res.checks.push_back({"extracted frequency relative error", freq_error, 0.01, freq_error <= 0.01});

  const double z = v * t_center;
  const double z_prime = v_prime * t_center;
  const double instantaneous = std::abs(rho_element(spec, z, z_prime, t_center).value);
  CsvTable averages("offdiag_average", {"window_periods", "window", "re", "im", "abs", "suppression"});
  for (int p = 0; p <= periods; ++p) {
    const Complex avg = time_average_offdiagonal(spec, z, z_prime, t_center, p * period);
    averages.add_row({static_cast<double>(p), p * period, avg.real(), avg.imag(), std::abs(avg),
                      instantaneous / std::abs(avg)});
    if (p == periods) {
      const double suppression = instantaneous / std::abs(avg);
      res.checks.push_back({"suppression after window", suppression, 100.0, suppression >= 100.0});
    }
  }
  res.notes.push_back("Omega = " + format_number(omega) + " a.u., period " + format_number(period) + " a.u. (" +
                      format_number(units::au_time_to_s(period)) + " s)");
  const bool order_ok = period >= 1.0 && period <= 1000.0;
  res.notes.push_back(std::string("period order of magnitude within 10-100 a.u. (factor 10): ") +
                      (order_ok ? "yes" : "no"));
  res.tables.push_back(std::move(series));
  res.tables.push_back(std::move(averages));
  return res;
}

inline ScenarioResult transport(const ScenarioConfig& cfg) {
  const GaussianSpec spec = gaussian_from(cfg);
  const double force = cfg.number("force");
  const auto momenta = cfg.list("momenta");
  const double t1 = cfg.number("t1");
  const double t2 = cfg.number("t2");
  const double tolerance = cfg.number("tolerance");
  if (!(t1 > 0.0) || !(t2 > 0.0)) throw ConfigError("t1 and t2 must be positive");
  const double m = spec.mass;

  const ForceField field = ForceField::uniform(force);
  const MomentumSpectrum spectrum =
      sample_gaussian_spectrum(spec, -16.0 / spec.sigma, 16.0 / spec.sigma, 4097);
  std::vector<SpacetimePoint> points;
  for (double p : momenta)
    for (double t : {t1, t2}) points.push_back({p * t / m + force * t * t / (2.0 * m), t});
  const DensityFn exact = [&](double z, double t) { return std::norm(forced_exact(spec, force, z, t)); };
  const TransportReport report = probability_transport_check(field, spectrum, points, exact, 0.0, 0.0, m);

  ScenarioResult res;
  CsvTable table("transport", {"p_i", "t", "z_f", "density", "dpi_dzf", "transported", "reference", "violation",
                               "tolerance", "pass"});
  for (const auto& e : report.entries)
    table.add_row({e.p_i, e.t_f, e.z_f, e.density, e.dpi_dzf, e.transported, e.reference, e.violation, tolerance,
                   std::abs(e.violation) <= tolerance ? 1.0 : 0.0});
  res.tables.push_back(std::move(table));
  res.checks.push_back({"max violation against initial momentum density", report.max_violation, tolerance,
                        report.max_violation <= tolerance});
  res.checks.push_back({"max violation between the two times", report.max_pairwise_violation, tolerance,
                        report.max_pairwise_violation <= tolerance});
  res.notes.push_back("hbar t/m sigma^2 = " + format_number(spec.regime(t1)) + " and " +
                      format_number(spec.regime(t2)));
  return res;
}

inline ScenarioResult transition(const ScenarioConfig& cfg) {
  const double sigma = cfg.number("sigma");
  const double f = cfg.number("f");
  const double threshold = cfg.number("threshold");
  ScenarioResult res;
  CsvTable table("transition", {"mass", "sigma", "f", "z_i", "t_i", "t_i_seconds", "mean_energy", "valid",
                                "tolerance", "pass"});
  for (double mass : cfg.list("masses")) {
    const auto est = transition_zone(sigma, mass, f, threshold);
    const double z_err = std::abs(est.z_i - f * sigma) / (f * sigma);
    const double t_err = std::abs(est.t_i - mass * f * f * sigma * sigma) / (mass * f * f * sigma * sigma);
    const bool ok = z_err <= 1e-12 && t_err <= 1e-12 && est.valid == (f >= threshold);
    table.add_row({mass, sigma, f, est.z_i, est.t_i, units::au_time_to_s(est.t_i), est.mean_energy,
                   est.valid ? 1.0 : 0.0, 1e-12, ok ? 1.0 : 0.0});
    res.checks.push_back({"zone formulas for mass " + format_number(mass), std::max(z_err, t_err), 1e-12, ok});
    res.notes.push_back("mass " + format_number(mass) + ": z_i = " + format_number(est.z_i) + " a.u., t_i = " +
                        format_number(est.t_i) + " a.u. (" + format_number(units::au_time_to_s(est.t_i)) +
                        " s), " + (est.valid ? "f above threshold" : "f below threshold"));
  }
  res.tables.push_back(std::move(table));
  return res;
}

}  // namespace scenarios

/// Runs a resolved scenario; numeric failures propagate as NumericError.
inline ScenarioResult run_scenario(const ScenarioConfig& cfg) {
  const ScenarioInfo& info = find_scenario(cfg.scenario);
  ScenarioResult res;
  if (info.name == "fig1") res = scenarios::fig1(cfg);
  else if (info.name == "fig2") res = scenarios::fig2(cfg);
  else if (info.name == "fringes") res = scenarios::fringes(cfg);
  else if (info.name == "offdiag") res = scenarios::offdiag(cfg);
  else if (info.name == "transport") res = scenarios::transport(cfg);
  else res = scenarios::transition(cfg);
  res.scenario = info.name;
  return res;
}

/// Writes every table as <name>.csv plus <scenario>_summary.txt; returns the written paths.
inline std::vector<std::filesystem::path> write_outputs(const ScenarioResult& result,
                                                        const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (const auto& t : result.tables) {
    written.push_back(dir / (t.name() + ".csv"));
    t.write(written.back());
  }
  const auto summary_path = dir / (result.scenario + "_summary.txt");
  std::ofstream summary(summary_path, std::ios::binary | std::ios::trunc);
  if (!summary) throw Error("cannot write " + summary_path.string());
  summary << result.summary();
  written.push_back(summary_path);
  return written;
}

}  // namespace itlab
