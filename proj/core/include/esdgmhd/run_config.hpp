#ifndef ESDGMHD_RUN_CONFIG_HPP
#define ESDGMHD_RUN_CONFIG_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "esdgmhd/semidiscrete.hpp"

namespace esdg {

/// Parsed key=value run configuration with documented defaults.
struct RunConfig {
  std::string scenario;
  int order = 3;
  int kx = 20;
  int ky = 20;
  double cfl = 0.5;
  double dfl = 0.5;
  double fixed_dt = 0.0;    // > 0 overrides cfl/dfl
  double t_final = -1.0;    // < 0: scenario default
  SchemeMode::Volume volume = SchemeMode::Volume::ec_split;
  SchemeMode::Surface surface = SchemeMode::Surface::es;
  double alpha = 0.0;
  bool glm = true;
  std::string output_dir = ".";
  long dump_every = 0;      // 0 disables field dumps
  long max_steps = 0;       // 0: unlimited
  bool deterministic = true;
  unsigned long seed = 0;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& message)
      : std::runtime_error("config line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_ = 0;
};

/// Flat key=value text, one pair per line, '#' comments. Unknown keys and
/// unparsable values raise ConfigError with the line number.
RunConfig parse_config(std::istream& in);
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

}  // namespace esdg

#endif
