#include "esdgmhd/run_config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace esdg {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

bool parse_bool(const std::string& v, int line) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(line, "expected a boolean, got '" + v + "'");
}

double parse_double(const std::string& v, int line) {
  size_t pos = 0;
  double x;
  try {
    x = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError(line, "expected a number, got '" + v + "'");
  }
  if (pos != v.size()) throw ConfigError(line, "trailing characters in number '" + v + "'");
  return x;
}

long parse_long(const std::string& v, int line) {
  size_t pos = 0;
  long x;
  try {
    x = std::stol(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError(line, "expected an integer, got '" + v + "'");
  }
  if (pos != v.size()) throw ConfigError(line, "trailing characters in integer '" + v + "'");
  return x;
}

}  // namespace

RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    const std::string text = trim(raw);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "expected key = value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty()) throw ConfigError(line, "empty key");
    if (value.empty()) throw ConfigError(line, "empty value for key '" + key + "'");

    if (key == "scenario") {
      cfg.scenario = value;
    } else if (key == "order") {
      const long n = parse_long(value, line);
      if (n < 1) throw ConfigError(line, "order must be >= 1");
      cfg.order = static_cast<int>(n);
    } else if (key == "kx") {
      cfg.kx = static_cast<int>(parse_long(value, line));
    } else if (key == "ky") {
      cfg.ky = static_cast<int>(parse_long(value, line));
    } else if (key == "cfl") {
      cfg.cfl = parse_double(value, line);
    } else if (key == "dfl") {
      cfg.dfl = parse_double(value, line);
    } else if (key == "fixed_dt") {
      cfg.fixed_dt = parse_double(value, line);
    } else if (key == "t_final") {
      cfg.t_final = parse_double(value, line);
    } else if (key == "volume") {
      if (value == "ec_split") {
        cfg.volume = SchemeMode::Volume::ec_split;
      } else if (value == "standard") {
        cfg.volume = SchemeMode::Volume::standard;
      } else {
        throw ConfigError(line, "volume must be 'ec_split' or 'standard'");
      }
    } else if (key == "surface") {
      if (value == "ec") {
        cfg.surface = SchemeMode::Surface::ec;
      } else if (value == "es") {
        cfg.surface = SchemeMode::Surface::es;
      } else {
        throw ConfigError(line, "surface must be 'ec' or 'es'");
      }
    } else if (key == "alpha") {
      cfg.alpha = parse_double(value, line);
    } else if (key == "glm") {
      cfg.glm = parse_bool(value, line);
    } else if (key == "output_dir") {
      cfg.output_dir = value;
    } else if (key == "dump_every") {
      cfg.dump_every = parse_long(value, line);
    } else if (key == "max_steps") {
      cfg.max_steps = parse_long(value, line);
    } else if (key == "deterministic") {
      cfg.deterministic = parse_bool(value, line);
    } else if (key == "seed") {
      cfg.seed = static_cast<unsigned long>(parse_long(value, line));
    } else {
      throw ConfigError(line, "unknown key '" + key + "'");
    }
  }
  return cfg;
}

RunConfig parse_config_text(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  return parse_config(in);
}

}  // namespace esdg
