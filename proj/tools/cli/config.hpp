#pragma once

// Run configuration: JSON in, validated library objects out.

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "padic/padic.hpp"

namespace padic::cli {

/// A config field failed validation; `path` is like "distribution.alpha.re".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

struct TGrid {
  std::int64_t M_min = 0;
  std::int64_t M_max = 0;
  int units_per_sphere = 3;
};

struct OutputSpec {
  std::string format = "csv";  // csv | json
  std::string path = "-";      // "-" is stdout
};

struct RunConfig {
  Prime prime{2};
  std::optional<QahDistribution> distribution;
  std::optional<TestFunction> test_function;
  TGrid t_grid;
  std::optional<std::int64_t> split_level;
  double tolerance = 1e-9;
  bool oracle = false;
  int oracle_refine = 0;
  OutputSpec output;
};

/// "2", "-0.7+0.3i", "1.3-1.1i", "0.5i".
std::complex<double> parse_complex(const std::string& text);

/// Throws ConfigError on the first invalid field. Library validation errors
/// (bad character table, bad window, ...) are rethrown as ConfigError with
/// the field path that produced them.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

CharacterSpec parse_character(const nlohmann::json& j, const std::string& path);
TestFunction parse_test_function(const nlohmann::json& j, const Prime& p, const std::string& path);

}  // namespace padic::cli
