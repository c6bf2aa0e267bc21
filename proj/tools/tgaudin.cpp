// Command-line front end: Hamiltonian export and verification suites.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tgaudin/suites.hpp"

using namespace tgaudin;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const int x = std::stoi(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an integer, got '" + v + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw ConfigError(key + ": expected true/false, got '" + v + "'");
}

/// Raw settings before they are combined into a JobConfig.
struct Settings {
  std::map<std::string, std::string> values;

  void apply(JobConfig& cfg) const {
    std::optional<int> sites;
    std::optional<std::vector<Rational>> points;
    for (const auto& [k, v] : values) {
      if (k == "n")
        cfg.n = parse_int(k, v);
      else if (k == "sites")
        sites = parse_int(k, v);
      else if (k == "points")
        points = parse_points(v);
      else if (k == "m-max")
        cfg.m_max = parse_int(k, v);
      else if (k == "shifted")
        cfg.shifted = parse_bool(k, v);
      else if (k == "suite")
        cfg.suite = v;
      else if (k == "out")
        cfg.out = v;
      else if (k == "workers")
        cfg.workers = parse_int(k, v);
      else if (k == "u-order")
        cfg.u_order = parse_int(k, v);
      else if (k == "v-order")
        cfg.v_order = parse_int(k, v);
      else if (k == "x-order")
        cfg.x_order = parse_int(k, v);
      else
        throw ConfigError("unknown configuration key '" + k + "'");
    }
    if (sites && *sites < 1) throw ConfigError("sites must be >= 1");
    if (points) {
      if (sites && *sites != static_cast<int>(points->size()))
        throw ConfigError("sites = " + std::to_string(*sites) + " but " + std::to_string(points->size()) +
                          " points were given");
      cfg.points = *points;
    } else if (sites) {
      cfg.points = default_points(*sites);
    }
  }
};

struct CommonOptions {
  std::string config_path;
  std::map<std::string, std::string> raw;
  std::map<std::string, CLI::Option*> opts;
  bool shifted_flag = false;
  CLI::Option* shifted_opt = nullptr;

  void attach(CLI::App* sub) {
    sub->add_option("--config", config_path, "key=value configuration file; flags override it");
    auto add = [&](const std::string& key, const std::string& help) {
      opts[key] = sub->add_option("--" + key, raw[key], help);
    };
    add("n", "rank N of gl_N");
    add("sites", "number of sites l");
    add("points", "comma-separated nonzero distinct rationals, e.g. 1,3,7 or 1/2,-3");
    add("m-max", "largest m");
    add("out", "output file (default: standard output)");
    add("workers", "worker threads");
    add("u-order", "u-degree window for symbolic coefficients");
    add("v-order", "largest L- mode in the vacuum check");
    add("x-order", "x-order of the series checks");
    shifted_opt = sub->add_flag("--shifted", shifted_flag, "use the rho-shifted family");
  }

  JobConfig build() const {
    Settings file;
    if (!config_path.empty()) file.values = read_config_file(config_path);
    Settings merged = file;
    for (const auto& [key, opt] : opts)
      if (opt->count() > 0) merged.values[key] = raw.at(key);
    if (shifted_opt->count() > 0) merged.values["shifted"] = shifted_flag ? "true" : "false";
    JobConfig cfg;
    merged.apply(cfg);
    return cfg;
  }
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact higher Hamiltonians of the trigonometric Gaudin model"};
  app.require_subcommand(1);

  CommonOptions ham_opts, verify_opts, qlimit_opts;
  CLI::App* ham = app.add_subcommand("hamiltonians", "write the commuting family as JSON");
  ham_opts.attach(ham);
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite and write its report");
  verify_opts.attach(verify);
  std::string suite_flag;
  CLI::Option* suite_opt = verify->add_option("--suite", suite_flag, "suite name or 'all'");
  CLI::App* qlimit = app.add_subcommand("qlimit", "classical-limit comparisons of the q-side");
  qlimit_opts.attach(qlimit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (ham->parsed()) {
      const JobConfig cfg = ham_opts.build();
      cfg.validate();
      write_output(cfg.out, dump(hamiltonians_json(cfg)));
      return kExitPass;
    }
    if (verify->parsed()) {
      JobConfig cfg = verify_opts.build();
      if (suite_opt->count() > 0) cfg.suite = suite_flag;
      cfg.validate();
      const Report r = run_suite(cfg.suite, cfg);
      write_output(cfg.out, dump(report_json(r, cfg.to_json())));
      std::cerr << "suite " << cfg.suite << ": " << r.records.size() << " checks, " << r.failures() << " failed ("
                << seconds_since(t0) << " s)\n";
      return r.pass() ? kExitPass : kExitFail;
    }
    const JobConfig cfg = qlimit_opts.build();
    cfg.validate();
    const Report r = run_qlimit(cfg);
    write_output(cfg.out, dump(report_json(r, cfg.to_json())));
    std::cerr << "qlimit: " << r.records.size() << " checks, " << r.failures() << " failed (" << seconds_since(t0)
              << " s)\n";
    return r.pass() ? kExitPass : kExitFail;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
