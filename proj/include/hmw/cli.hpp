#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace hmw {

// Input problem: thrown during parsing/validation; the CLI reports the field
// name and exits with code 2.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string key, const std::string& message)
        : std::runtime_error(key + ": " + message), key_(std::move(key)) {}
    const std::string& key() const { return key_; }

  private:
    std::string key_;
};

struct RunConfig {
    // physics inputs (required)
    double eta = 0.0;
    double omega = 0.0;
    double mass = 0.0;
    double dipole = 0.0;
    double e0 = 0.0;
    // table ranges
    int n_max = 4;
    int l_min = -2;
    int l_max = 2;
    int spin = 0; // +1, -1, or 0 = both
    // numerics
    int grid_points = 8001;        // closed node count; interior N = grid_points - 2
    double rho_inf_sigma = 36.0;   // delta * rho_inf^2 target
    double weak_field_threshold = 0.01;
    bool strict = false;
    bool allow_disclination = false;
    // per-state selectors (wavefunction / currents)
    int n = 0;
    int l = 0;
    // verify tolerance
    double tol = 1e-4;
    // output path prefix; defaults to the command name
    std::string out;
};

using KeyValues = std::map<std::string, std::string>;

// Plain key=value lines, '#' comments, blank lines ignored.
// Throws ConfigError on a malformed line.
KeyValues read_key_value_file(const std::string& path);

// Merges file values and flag overrides (flags win), rejects unknown keys,
// converts and validates every field. Throws ConfigError naming the key on
// any missing required key, non-numeric value, or constraint violation.
RunConfig parse_config(const KeyValues& file_values, const KeyValues& overrides);

// Validation only (used by parse_config; exposed for tests).
void validate_config(const RunConfig& cfg);

nlohmann::json config_to_json(const RunConfig& cfg);

// cmd is one of: fields, spectrum, verify, wavefunction, currents, limits.
// Writes CSV/JSON artifacts under the configured prefix. Returns the process
// exit code: 0 success, 1 verification failure (or weak-field failure with
// strict set). Throws ConfigError for input problems (exit code 2).
int run_command(const std::string& cmd, const RunConfig& cfg);

} // namespace hmw
