#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tgaudin/report.hpp"

namespace tgaudin {

/// Bad configuration: maps to the usage exit code.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct JobConfig {
  int n = 2;
  std::vector<Rational> points{Rational(1), Rational(3)};
  int m_max = 3;
  bool shifted = false;
  std::string suite = "all";
  std::string out;  // empty: standard output
  int workers = 1;
  int u_order = 3;
  int v_order = 3;
  int x_order = 8;

  [[nodiscard]] int sites() const { return static_cast<int>(points.size()); }
  /// Throws ConfigError on invalid values.
  void validate() const;
  /// Everything that determines report content (the worker count does not).
  [[nodiscard]] Json to_json() const;
};

/// "1,3,7" or "1/2,-3"; throws ConfigError.
std::vector<Rational> parse_points(const std::string& text);
/// Default points 1, 3, 5, ... for l sites.
std::vector<Rational> default_points(int sites);

/// key=value lines; '#' starts a comment. Keys use the long flag names
/// (n, sites, points, m-max, ...); underscores are accepted for dashes.
std::map<std::string, std::string> read_config_file(const std::string& path);

const std::vector<std::string>& suite_names();  // without "all"
bool is_suite(const std::string& name);

Report run_suite(const std::string& name, const JobConfig& cfg);

/// qlimit subcommand: classical-limit comparisons for m <= m_max plus the
/// central-term and f-series checks.
Report run_qlimit(const JobConfig& cfg);

/// Hamiltonian family as a JSON document.
Json hamiltonians_json(const JobConfig& cfg);

/// Writes text to path atomically (temporary file, then rename), or to
/// standard output when path is empty.
void write_output(const std::string& path, const std::string& text);

}  // namespace tgaudin
