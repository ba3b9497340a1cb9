#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "bathlab/bath.hpp"
#include "bathlab/errors.hpp"
#include "bathlab/modeshift.hpp"
#include "bathlab/oracle.hpp"
#include "bathlab/thermo.hpp"

namespace bathlab::cli {
namespace {

using nlohmann::json;

// Raised for flag combinations CLI11 cannot express; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Grid {
  double min = 0.01;
  double max = 10.0;
  int points = 100;
  bool log = false;

  void validate() const {
    if (!(min < max)) throw UsageError("--t-min must be smaller than --t-max");
    if (points < 2) throw UsageError("--points must be at least 2");
    if (!(min > 0.0)) throw UsageError("temperatures must be positive");
  }

  std::vector<double> values() const {
    std::vector<double> v(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
      const double f = static_cast<double>(i) / (points - 1);
      v[static_cast<std::size_t>(i)] =
          log ? min * std::pow(max / min, f) : min + (max - min) * f;
    }
    v.back() = max;
    return v;
  }
};

struct RunConfig {
  std::optional<double> omega_d;
  std::string format;  // empty: subcommand default
  std::string out_path;
  Grid grid;

  // density-shift
  double omega_max = 10.0;
  int shift_points = 500;
  bool decompose = false;

  // heat
  std::string method = "closed";

  // energy
  bool zero_point = false;

  // oracle
  std::string bath_model = "drude";
  double delta = 0.02;
  long n_modes = 5000;
  std::vector<double> temps{0.5, 1.0, 2.0};
  bool spectrum = false;

  double cutoff() const {
    if (!omega_d) throw UsageError("--omega-d is required");
    if (!(*omega_d > 0.0)) throw UsageError("--omega-d must be positive");
    return *omega_d;
  }

  bool json_output(const char* fallback) const {
    return (format.empty() ? std::string(fallback) : format) == "json";
  }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

double rounded(double v) { return std::stod(format_number(v)); }

void write_csv(const Table& table, std::ostream& os) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << format_number(row[i]);
    }
    os << '\n';
  }
}

json to_json(const Table& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      obj[table.columns[i]] = rounded(row[i]);
    }
    rows.push_back(std::move(obj));
  }
  return rows;
}

void emit(const Table& table, const RunConfig& cfg, std::ostream& os) {
  if (cfg.json_output("csv")) {
    os << to_json(table).dump(2) << '\n';
  } else {
    write_csv(table, os);
  }
}

bath::SpectralDensity drude_bath(const RunConfig& cfg) {
  return bath::SpectralDensity::drude(1.0, cfg.cutoff());
}

void density_shift(const RunConfig& cfg, std::ostream& os) {
  if (!(cfg.omega_max > 0.0)) throw UsageError("--omega-max must be positive");
  if (cfg.shift_points < 2) throw UsageError("--points must be at least 2");
  const auto sd = drude_bath(cfg);
  const auto freqs = modeshift::characteristic_frequencies(sd);

  Table table{{"omega", "delta_rho"}, {}};
  if (cfg.decompose) table.columns.insert(table.columns.end(), {"lor1", "lor2", "lor3"});
  for (int i = 0; i < cfg.shift_points; ++i) {
    const double w = cfg.omega_max * i / (cfg.shift_points - 1);
    std::vector<double> row{w, modeshift::delta_rho(sd, w)};
    if (cfg.decompose) {
      const auto parts = modeshift::lorentzian_components(freqs, w);
      row.insert(row.end(), {parts.first, parts.second, parts.third});
    }
    table.rows.push_back(std::move(row));
  }
  emit(table, cfg, os);
}

void heat(const RunConfig& cfg, std::ostream& os) {
  cfg.grid.validate();
  const auto sd = drude_bath(cfg);
  const auto freqs = modeshift::characteristic_frequencies(sd);
  const auto taus = cfg.grid.values();

  Table table{{"T", "C"}, {}};
  if (cfg.method == "closed") {
    for (const auto& p : thermo::sweep(freqs, taus)) {
      table.rows.push_back({p.temperature, p.specific_heat});
    }
  } else if (cfg.method == "quadrature") {
    for (const double t : taus) {
      table.rows.push_back({t, thermo::specific_heat_quadrature(sd, t)});
    }
  } else {
    const double slope = thermo::low_t_asymptote(sd).slope;
    for (const double t : taus) table.rows.push_back({t, slope * t});
  }
  emit(table, cfg, os);
}

void energy(const RunConfig& cfg, std::ostream& os) {
  const auto freqs = modeshift::characteristic_frequencies(drude_bath(cfg));
  if (cfg.zero_point) {
    os << json{{"u0", rounded(thermo::zero_point_energy(freqs))}}.dump() << '\n';
    return;
  }
  cfg.grid.validate();
  Table table{{"T", "U"}, {}};
  for (const auto& p : thermo::sweep(freqs, cfg.grid.values())) {
    table.rows.push_back({p.temperature, p.internal_energy});
  }
  emit(table, cfg, os);
}

void anomaly(const RunConfig& cfg, std::ostream& os) {
  const auto sd = drude_bath(cfg);
  const auto report = bath::anomaly(sd);
  const double slope = thermo::low_t_asymptote(sd).slope;
  if (cfg.json_output("json")) {
    const json doc{{"gamma_hat_prime_zero", rounded(report.gamma_hat_prime_zero)},
                   {"missing_mass_ratio", rounded(report.missing_mass_ratio)},
                   {"low_t_negative", report.low_t_specific_heat_negative},
                   {"low_t_slope", rounded(slope)}};
    os << doc.dump(2) << '\n';
    return;
  }
  os << "gamma_hat_prime_zero,missing_mass_ratio,low_t_negative,low_t_slope\n"
     << format_number(report.gamma_hat_prime_zero) << ','
     << format_number(report.missing_mass_ratio) << ','
     << (report.low_t_specific_heat_negative ? "true" : "false") << ','
     << format_number(slope) << '\n';
}

// Returns false when interlacing fails.
bool oracle(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
  if (!(cfg.delta > 0.0)) throw UsageError("--delta must be positive");
  if (cfg.n_modes < 1) throw UsageError("--n-modes must be at least 1");
  for (const double t : cfg.temps) {
    if (!(t > 0.0)) throw UsageError("--temps must be positive");
  }
  const bool drude = cfg.bath_model == "drude";
  const auto sd = drude ? drude_bath(cfg) : bath::SpectralDensity::strict_ohmic(1.0);

  const auto start = std::chrono::steady_clock::now();
  const auto discrete =
      oracle::build_bath(sd, cfg.delta, static_cast<std::size_t>(cfg.n_modes));
  const auto spectrum = oracle::coupled_spectrum(discrete);
  const bool interlacing_ok = oracle::interlaces(discrete, spectrum);
  double max_residual = 0.0;
  for (const double r : oracle::secular_equation_residuals(discrete, spectrum)) {
    max_residual = std::max(max_residual, r);
  }

  Table table;
  if (cfg.spectrum) {
    table.columns = {"k", "omega_bath", "mass", "omega_coupled"};
    for (std::size_t k = 0; k < discrete.size(); ++k) {
      table.rows.push_back({static_cast<double>(k + 1), discrete.frequencies[k],
                            discrete.masses[k], spectrum.frequencies[k]});
    }
  } else {
    table.columns = {"T", "C_discrete", "C_continuum", "rel_err"};
    std::optional<modeshift::DampedSystemFrequencies> freqs;
    if (drude) freqs = modeshift::characteristic_frequencies(sd);
    for (const double t : cfg.temps) {
      const double c = oracle::discrete_specific_heat(discrete, spectrum, t);
      const double ref = freqs ? thermo::specific_heat_closed(*freqs, t)
                               : thermo::specific_heat_quadrature(sd, t);
      table.rows.push_back({t, c, ref, std::abs(c - ref) / std::abs(ref)});
    }
  }
  const double runtime =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const json summary{{"interlacing_ok", interlacing_ok},
                     {"max_secular_residual", rounded(max_residual)},
                     {"runtime", rounded(runtime)}};
  if (cfg.json_output("csv")) {
    os << json{{"rows", to_json(table)}, {"summary", summary}}.dump(2) << '\n';
  } else {
    write_csv(table, os);
    err << summary.dump() << '\n';
  }
  if (!interlacing_ok) err << "error: interlacing violated\n";
  return interlacing_ok;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--omega-d", cfg.omega_d, "Drude cutoff in units of gamma");
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", cfg.out_path, "Write output to this file");
}

void add_grid(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--t-min", cfg.grid.min, "Lowest temperature k_B T / hbar gamma");
  sub->add_option("--t-max", cfg.grid.max, "Highest temperature");
  sub->add_option("--points", cfg.grid.points, "Number of temperatures");
  sub->add_flag("--log", cfg.grid.log, "Log-spaced temperatures");
}

}  // namespace

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8e", value == 0.0 ? 0.0 : value);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Eigenmode density shift and thermodynamics of a damped free particle",
               "bathlab"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* shift = app.add_subcommand("density-shift", "Change of the bath eigenmode density");
  add_common(shift, cfg);
  shift->add_option("--omega-max", cfg.omega_max, "Largest frequency");
  shift->add_option("--points", cfg.shift_points, "Number of frequencies");
  shift->add_flag("--decompose", cfg.decompose, "Also emit the three Lorentzians");

  auto* heat_cmd = app.add_subcommand("heat", "Specific heat C(T)");
  add_common(heat_cmd, cfg);
  add_grid(heat_cmd, cfg);
  heat_cmd->add_option("--method", cfg.method, "closed | quadrature | asymptotic")
      ->check(CLI::IsMember({"closed", "quadrature", "asymptotic"}));

  auto* energy_cmd = app.add_subcommand("energy", "Internal energy U(T)");
  add_common(energy_cmd, cfg);
  add_grid(energy_cmd, cfg);
  energy_cmd->add_flag("--zero-point", cfg.zero_point, "Print U at T = 0 as JSON");

  auto* anomaly_cmd = app.add_subcommand("anomaly", "Missing-mass criterion");
  add_common(anomaly_cmd, cfg);

  auto* oracle_cmd = app.add_subcommand("oracle", "Finite-bath brute-force check");
  add_common(oracle_cmd, cfg);
  oracle_cmd->add_option("--delta", cfg.delta, "Bath frequency spacing");
  oracle_cmd->add_option("--n-modes", cfg.n_modes, "Number of bath oscillators");
  oracle_cmd->add_option("--temps", cfg.temps, "Comma-separated temperatures")
      ->delimiter(',');
  oracle_cmd->add_option("--bath", cfg.bath_model, "drude | ohmic")
      ->check(CLI::IsMember({"drude", "ohmic"}));
  oracle_cmd->add_flag("--spectrum", cfg.spectrum,
                       "Emit the coupled spectrum instead of C(T)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, err);
    out << help.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buffer;
  int status = kExitOk;
  try {
    if (shift->parsed()) {
      density_shift(cfg, buffer);
    } else if (heat_cmd->parsed()) {
      heat(cfg, buffer);
    } else if (energy_cmd->parsed()) {
      energy(cfg, buffer);
    } else if (anomaly_cmd->parsed()) {
      anomaly(cfg, buffer);
    } else if (oracle_cmd->parsed()) {
      if (!oracle(cfg, buffer, err)) status = kExitNumerical;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }

  if (cfg.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    file << buffer.str();
    if (!file) {
      err << "error: cannot write " << cfg.out_path << '\n';
      return kExitNumerical;
    }
  }
  return status;
}

}  // namespace bathlab::cli
