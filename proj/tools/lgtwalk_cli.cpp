// Command-line front end over the lgtwalk C API: builds operators, runs
// evolutions and verification suites, and emits CSV/JSON artifacts.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "lgtwalk.h"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfigError = 2;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string scheme = "dtqw-compact";
  lgw_params params{1.0, 0.5, 0.0, 1.0, 8};
  int steps = 1;
  unsigned seed = 0;
  std::string format = "csv";
  std::string out_dir = ".";
  std::string suite = "unitarity";
  std::optional<std::string> gauge_path;
  // initial state
  std::string state_type = "delta_peak";
  int state_site = -1;      // -1: center of the lattice
  int state_component = 0;  // 0 = L, 1 = R
  double state_width = 2.0;
  double state_momentum = 0.0;
  int state_k_mode = 1;
  int state_branch = 0;
  // map-coeffs
  int max_offset = 8;
  int quadrature_points = 256;
  // sweep grids; empty grid = single point from params
  std::vector<double> grid_dt, grid_a, grid_m, grid_r;
};

std::string fmt_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read file: " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const fs::path& path, const std::string& body) {
  fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write file: " + path.string());
  out << body;
}

// Merges the JSON config file (if given) into cfg; flags are applied on top
// by CLI11 afterwards, so flags win.
void load_config_file(const std::string& path, RunConfig& cfg) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  auto get = [&](const char* key, auto& dst) {
    if (j.contains(key)) dst = j.at(key).template get<std::decay_t<decltype(dst)>>();
  };
  get("scheme", cfg.scheme);
  get("a", cfg.params.a);
  get("dt", cfg.params.dt);
  get("mass", cfg.params.m);
  get("wilson_r", cfg.params.r);
  get("n_sites", cfg.params.n_sites);
  get("steps", cfg.steps);
  get("seed", cfg.seed);
  get("format", cfg.format);
  get("out_dir", cfg.out_dir);
  get("suite", cfg.suite);
  get("max_offset", cfg.max_offset);
  get("quadrature_points", cfg.quadrature_points);
  if (j.contains("gauge")) cfg.gauge_path = j.at("gauge").get<std::string>();
  if (j.contains("initial_state")) {
    const json& s = j.at("initial_state");
    if (s.contains("type")) cfg.state_type = s.at("type").get<std::string>();
    if (s.contains("site")) cfg.state_site = s.at("site").get<int>();
    if (s.contains("component"))
      cfg.state_component = s.at("component").get<int>();
    if (s.contains("center")) cfg.state_site = s.at("center").get<int>();
    if (s.contains("width")) cfg.state_width = s.at("width").get<double>();
    if (s.contains("momentum"))
      cfg.state_momentum = s.at("momentum").get<double>();
    if (s.contains("k")) cfg.state_k_mode = s.at("k").get<int>();
    if (s.contains("branch")) cfg.state_branch = s.at("branch").get<int>();
  }
  if (j.contains("grid")) {
    const json& g = j.at("grid");
    if (g.contains("dt")) cfg.grid_dt = g.at("dt").get<std::vector<double>>();
    if (g.contains("a")) cfg.grid_a = g.at("a").get<std::vector<double>>();
    if (g.contains("m")) cfg.grid_m = g.at("m").get<std::vector<double>>();
    if (g.contains("r")) cfg.grid_r = g.at("r").get<std::vector<double>>();
  }
}

std::optional<std::string> load_gauge(const RunConfig& cfg) {
  if (!cfg.gauge_path) return std::nullopt;
  return read_file(*cfg.gauge_path);
}

void check(int rc, const std::string& what) {
  if (rc != LGW_OK)
    throw ConfigError(what + ": " + lgw_last_error());
}

struct OperatorHandle {
  lgw_operator* op = nullptr;
  ~OperatorHandle() { lgw_operator_free(op); }
};

void build(const RunConfig& cfg, const std::string& scheme,
           OperatorHandle& h) {
  const auto gauge = load_gauge(cfg);
  check(lgw_build_operator(&cfg.params, scheme.c_str(),
                           gauge ? gauge->c_str() : nullptr, 0, &h.op),
        "build " + scheme);
}

json params_header(const lgw_params& p) {
  const double delta = p.dt / p.a;
  return {{"a", p.a},
          {"dt", p.dt},
          {"mass", p.m},
          {"wilson_r", p.r},
          {"n_sites", p.n_sites},
          {"delta", delta},
          {"theta", M_PI - 2.0 * delta},
          {"delta_tilde", 0.5 * delta},
          {"theta_tilde", M_PI - delta}};
}

std::string csv_params_header(const RunConfig& cfg) {
  std::string out = "# scheme=" + cfg.scheme + " seed=" + std::to_string(cfg.seed);
  const json header = params_header(cfg.params);
  for (const auto& [k, v] : header.items())
    out += " " + k + "=" + (v.is_number_integer()
                                ? std::to_string(v.get<long long>())
                                : fmt_num(v.get<double>()));
  return out + "\n";
}

std::vector<std::complex<double>> initial_state(const RunConfig& cfg) {
  const int n = cfg.params.n_sites;
  std::vector<std::complex<double>> psi(2 * n, 0.0);
  const int center = cfg.state_site >= 0 ? cfg.state_site : n / 2;
  if (center < 0 || center >= n)
    throw ConfigError("initial state site out of range");
  if (cfg.state_component != 0 && cfg.state_component != 1)
    throw ConfigError("initial state component must be 0 or 1");
  if (cfg.state_type == "delta_peak") {
    psi[2 * center + cfg.state_component] = 1.0;
  } else if (cfg.state_type == "gaussian") {
    double norm2 = 0.0;
    for (int p = 0; p < n; ++p) {
      int d = std::abs(p - center);
      d = std::min(d, n - d);
      const double amp = std::exp(-0.25 * d * d / (cfg.state_width * cfg.state_width));
      psi[2 * p + cfg.state_component] =
          amp * std::exp(std::complex<double>(0, cfg.state_momentum * p));
      norm2 += amp * amp;
    }
    const double s = 1.0 / std::sqrt(norm2);
    for (auto& c : psi) c *= s;
  } else if (cfg.state_type == "plane_wave") {
    const double k = 2.0 * M_PI * cfg.state_k_mode / n;
    const double s = 1.0 / std::sqrt(double(n));
    for (int p = 0; p < n; ++p)
      psi[2 * p + cfg.state_branch] =
          s * std::exp(std::complex<double>(0, k * p));
  } else {
    throw ConfigError("unknown initial state: " + cfg.state_type);
  }
  return psi;
}

bool is_hamiltonian_scheme(const std::string& s) {
  return s.rfind("h-", 0) == 0;
}

int cmd_evolve(const RunConfig& cfg) {
  if (is_hamiltonian_scheme(cfg.scheme))
    throw ConfigError("evolve needs a unitary scheme, got " + cfg.scheme);
  if (cfg.steps < 0) throw ConfigError("steps must be >= 0");
  OperatorHandle h;
  build(cfg, cfg.scheme, h);
  const int n = cfg.params.n_sites;
  auto psi = initial_state(cfg);
  std::vector<std::vector<double>> densities;
  std::vector<double> norms;
  auto record = [&]() {
    std::vector<double> d(n);
    double norm2 = 0.0;
    for (int p = 0; p < n; ++p) {
      d[p] = std::norm(psi[2 * p]) + std::norm(psi[2 * p + 1]);
      norm2 += d[p];
    }
    densities.push_back(std::move(d));
    norms.push_back(std::sqrt(norm2));
  };
  record();
  std::vector<std::complex<double>> next(psi.size());
  for (int j = 0; j < cfg.steps; ++j) {
    check(lgw_operator_apply(h.op,
                             reinterpret_cast<const double*>(psi.data()),
                             reinterpret_cast<double*>(next.data())),
          "apply");
    psi.swap(next);
    record();
  }
  double drift = 0.0;
  for (double nv : norms) drift = std::max(drift, std::abs(nv - norms[0]));

  const fs::path out = fs::path(cfg.out_dir) / ("evolve." + cfg.format);
  if (cfg.format == "json") {
    json steps = json::array();
    for (size_t j = 0; j < densities.size(); ++j)
      steps.push_back({{"step", j}, {"norm", norms[j]}, {"density", densities[j]}});
    json rep = {{"scheme", cfg.scheme},
                {"params", params_header(cfg.params)},
                {"seed", cfg.seed},
                {"norm_drift", drift},
                {"steps", steps}};
    write_file(out, rep.dump(2) + "\n");
  } else {
    std::string body = csv_params_header(cfg);
    body += "step [1],norm [1]";
    for (int p = 0; p < n; ++p) body += ",density_site_" + std::to_string(p) + " [1]";
    body += "\n";
    for (size_t j = 0; j < densities.size(); ++j) {
      body += std::to_string(j) + "," + fmt_num(norms[j]);
      for (double d : densities[j]) body += "," + fmt_num(d);
      body += "\n";
    }
    write_file(out, body);
  }
  std::cout << "evolve: " << cfg.steps << " steps, norm drift " << drift
            << ", wrote " << out.string() << "\n";
  return drift <= 1e-12 ? kExitPass : kExitCheckFailed;
}

int cmd_verify(const RunConfig& cfg) {
  const auto gauge = load_gauge(cfg);
  char* report = nullptr;
  int passed = 0;
  check(lgw_run_verify_suite(&cfg.params, cfg.suite.c_str(),
                             gauge ? gauge->c_str() : nullptr, cfg.seed,
                             &report, &passed),
        "verify " + cfg.suite);
  const std::string body(report);
  lgw_string_free(report);
  const fs::path out = fs::path(cfg.out_dir) / ("verify_" + cfg.suite + ".json");
  write_file(out, body + "\n");
  std::cout << body << "\n";
  std::cout << "verify " << cfg.suite << ": " << (passed ? "pass" : "FAIL")
            << ", wrote " << out.string() << "\n";
  return passed ? kExitPass : kExitCheckFailed;
}

std::string hamiltonian_for(const std::string& scheme) {
  if (scheme.find("wilson") != std::string::npos) return "h-wilson";
  if (scheme.find("naive") != std::string::npos || scheme == "even-odd")
    return "h-naive";
  if (scheme == "h-staggered") return "h-staggered";
  return "h-leftright";
}

int count_zero_modes(const lgw_params& p, const std::string& ham) {
  lgw_operator* op = nullptr;
  check(lgw_build_operator(&p, ham.c_str(), nullptr, 0, &op), "build " + ham);
  int dim = 0;
  lgw_operator_dim(op, &dim);
  std::vector<double> ev(2 * dim);
  check(lgw_operator_spectrum(op, 0, ev.data(), ev.size()), "spectrum");
  lgw_operator_free(op);
  int count = 0;
  for (int i = 0; i < dim; ++i)
    if (std::abs(ev[2 * i]) < 1e-8) ++count;
  return count;
}

int cmd_sweep(const RunConfig& cfg) {
  auto axis = [](const std::vector<double>& g, double fallback) {
    return g.empty() ? std::vector<double>{fallback} : g;
  };
  const auto dts = axis(cfg.grid_dt, cfg.params.dt);
  const auto as = axis(cfg.grid_a, cfg.params.a);
  const auto ms = axis(cfg.grid_m, cfg.params.m);
  const auto rs = axis(cfg.grid_r, cfg.params.r);
  const bool walk = !is_hamiltonian_scheme(cfg.scheme);

  std::string body = csv_params_header(cfg);
  body +=
      "a [length],dt [time],mass [1/length],wilson_r [1],n_sites [1],"
      "delta [1],theta [rad],delta_tilde [1],theta_tilde [rad],"
      "unitarity_error [1],per_step_error [1],zero_modes [1]\n";
  json rows = json::array();
  for (double dtv : dts)
    for (double av : as)
      for (double mv : ms)
        for (double rv : rs) {
          lgw_params p = cfg.params;
          p.dt = dtv;
          p.a = av;
          p.m = mv;
          p.r = rv;
          double uerr = 0.0, perr = 0.0;
          if (walk) {
            OperatorHandle h;
            const auto gauge = load_gauge(cfg);
            check(lgw_build_operator(&p, cfg.scheme.c_str(),
                                     gauge ? gauge->c_str() : nullptr, 0,
                                     &h.op),
                  "build " + cfg.scheme);
            check(lgw_operator_unitarity_error(h.op, &uerr), "unitarity");
            if (lgw_per_step_error(&p, cfg.scheme.c_str(), &perr) != LGW_OK)
              perr = std::nan("");
          } else {
            uerr = std::nan("");
            perr = std::nan("");
          }
          lgw_params p0 = p;
          p0.m = 0.0;
          const int zeros = count_zero_modes(p0, hamiltonian_for(cfg.scheme));
          const double delta = p.dt / p.a;
          const std::vector<double> cols = {
              p.a,   p.dt,  p.m,
              p.r,   double(p.n_sites),
              delta, M_PI - 2.0 * delta,
              0.5 * delta, M_PI - delta,
              uerr,  perr,  double(zeros)};
          std::string row;
          for (size_t i = 0; i < cols.size(); ++i)
            row += (i ? "," : "") + fmt_num(cols[i]);
          body += row + "\n";
          rows.push_back({{"a", p.a},
                          {"dt", p.dt},
                          {"mass", p.m},
                          {"wilson_r", p.r},
                          {"n_sites", p.n_sites},
                          {"unitarity_error", uerr},
                          {"per_step_error", perr},
                          {"zero_modes", zeros}});
        }
  const fs::path out = fs::path(cfg.out_dir) / ("sweep." + cfg.format);
  if (cfg.format == "json") {
    json rep = {{"scheme", cfg.scheme},
                {"params", params_header(cfg.params)},
                {"rows", rows}};
    write_file(out, rep.dump(2) + "\n");
  } else {
    write_file(out, body);
  }
  std::cout << "sweep: " << rows.size() << " grid points, wrote "
            << out.string() << "\n";
  return kExitPass;
}

int cmd_spectrum(const RunConfig& cfg) {
  OperatorHandle h;
  build(cfg, cfg.scheme, h);
  int dim = 0;
  lgw_operator_dim(h.op, &dim);
  std::vector<double> ev(2 * dim);
  const int unitary = is_hamiltonian_scheme(cfg.scheme) ? 0 : 1;
  check(lgw_operator_spectrum(h.op, unitary, ev.data(), ev.size()), "spectrum");
  const fs::path out = fs::path(cfg.out_dir) / ("spectrum." + cfg.format);
  if (cfg.format == "json") {
    json vals = json::array();
    for (int i = 0; i < dim; ++i) vals.push_back({ev[2 * i], ev[2 * i + 1]});
    json rep = {{"scheme", cfg.scheme},
                {"params", params_header(cfg.params)},
                {"eigenvalues", vals}};
    write_file(out, rep.dump(2) + "\n");
  } else {
    std::string body = csv_params_header(cfg);
    body += "index [1],eigenvalue_re [1],eigenvalue_im [1]\n";
    for (int i = 0; i < dim; ++i)
      body += std::to_string(i) + "," + fmt_num(ev[2 * i]) + "," +
              fmt_num(ev[2 * i + 1]) + "\n";
    write_file(out, body);
  }
  std::cout << "spectrum: " << dim << " eigenvalues, wrote " << out.string()
            << "\n";
  return kExitPass;
}

int cmd_map_coeffs(const RunConfig& cfg) {
  char* report = nullptr;
  check(lgw_map_coefficients(&cfg.params, cfg.max_offset,
                             cfg.quadrature_points, &report),
        "map-coeffs");
  json rep = json::parse(report);
  lgw_string_free(report);
  const fs::path out = fs::path(cfg.out_dir) / ("map_coeffs." + cfg.format);
  if (cfg.format == "json") {
    write_file(out, rep.dump(2) + "\n");
  } else {
    std::string body = csv_params_header(cfg);
    body += "offset [1],row [1],col [1],b_re [1],b_im [1]\n";
    for (const auto& entry : rep.at("coefficients")) {
      const int off = entry.at("offset").get<int>();
      const json& m = entry.at("matrix");
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          body += std::to_string(off) + "," + std::to_string(r) + "," +
                  std::to_string(c) + "," +
                  fmt_num(m[r][c][0].get<double>()) + "," +
                  fmt_num(m[r][c][1].get<double>()) + "\n";
    }
    write_file(out, body);
  }
  std::cout << "map-coeffs: offsets up to " << cfg.max_offset << ", wrote "
            << out.string() << "\n";
  return kExitPass;
}

int cmd_gauge_check(const RunConfig& cfg) {
  const auto gauge = load_gauge(cfg);
  char* report = nullptr;
  int passed = 0;
  check(lgw_gauge_check(&cfg.params, gauge ? gauge->c_str() : nullptr,
                        cfg.seed, &report, &passed),
        "gauge-check");
  const std::string body(report);
  lgw_string_free(report);
  const fs::path out = fs::path(cfg.out_dir) / "gauge_check.json";
  write_file(out, body + "\n");
  std::cout << "gauge-check: " << (passed ? "pass" : "FAIL") << ", wrote "
            << out.string() << "\n";
  return passed ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice-fermion quantum-walk toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file");
    sub->add_option("--scheme", cfg.scheme, "operator scheme");
    sub->add_option("--n-sites", cfg.params.n_sites, "lattice sites (even, >= 4)");
    sub->add_option("--dt", cfg.params.dt, "time step");
    sub->add_option("--a", cfg.params.a, "lattice spacing");
    sub->add_option("--mass", cfg.params.m, "mass");
    sub->add_option("--wilson-r", cfg.params.r, "Wilson parameter");
    sub->add_option("--steps", cfg.steps, "evolution steps");
    sub->add_option("--out-dir", cfg.out_dir, "output directory");
    sub->add_option("--seed", cfg.seed, "seed for randomized checks");
    sub->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--gauge", cfg.gauge_path, "gauge field JSON file");
  };

  CLI::App* evolve = app.add_subcommand("evolve", "run a time evolution");
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", cfg.suite,
                     "unitarity|ultralocality|equivalence|gauge|convergence|symmetry");
  CLI::App* sweep = app.add_subcommand("sweep", "parameter-grid sweep");
  CLI::App* spectrum = app.add_subcommand("spectrum", "operator eigenvalues");
  CLI::App* mapc = app.add_subcommand("map-coeffs",
                                      "real-space mapping coefficients");
  mapc->add_option("--max-offset", cfg.max_offset, "largest offset |N|");
  mapc->add_option("--quadrature-points", cfg.quadrature_points,
                   "Brillouin-zone quadrature points");
  CLI::App* gcheck = app.add_subcommand("gauge-check", "gauge-field checks");
  for (CLI::App* sub : {evolve, verify, sweep, spectrum, mapc, gcheck})
    add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfigError;
  }

  try {
    // Re-parse so config-file values load first and flags override them.
    if (!config_path.empty()) {
      RunConfig from_file;
      load_config_file(config_path, from_file);
      cfg = from_file;
      CLI::App* sub = app.get_subcommands().front();
      // Flags win over config-file values.
      auto over = [&](const char* name, auto& dst) {
        const CLI::Option* o = sub->get_option_no_throw(name);
        if (o != nullptr && o->count() > 0)
          dst = o->as<std::decay_t<decltype(dst)>>();
      };
      over("--scheme", cfg.scheme);
      over("--n-sites", cfg.params.n_sites);
      over("--dt", cfg.params.dt);
      over("--a", cfg.params.a);
      over("--mass", cfg.params.m);
      over("--wilson-r", cfg.params.r);
      over("--steps", cfg.steps);
      over("--out-dir", cfg.out_dir);
      over("--seed", cfg.seed);
      over("--format", cfg.format);
      over("--suite", cfg.suite);
      over("--max-offset", cfg.max_offset);
      over("--quadrature-points", cfg.quadrature_points);
      const CLI::Option* go = sub->get_option_no_throw("--gauge");
      if (go != nullptr && go->count() > 0) cfg.gauge_path = go->as<std::string>();
    }
    if (cfg.format != "csv" && cfg.format != "json")
      throw ConfigError("format must be csv or json");
    if (app.got_subcommand(evolve)) return cmd_evolve(cfg);
    if (app.got_subcommand(verify)) return cmd_verify(cfg);
    if (app.got_subcommand(sweep)) return cmd_sweep(cfg);
    if (app.got_subcommand(spectrum)) return cmd_spectrum(cfg);
    if (app.got_subcommand(mapc)) return cmd_map_coeffs(cfg);
    if (app.got_subcommand(gcheck)) return cmd_gauge_check(cfg);
    return kExitConfigError;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
}
