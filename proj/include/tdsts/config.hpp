#pragma once

#include <stdexcept>
#include <string>

#include "tdsts/model.hpp"

namespace tdsts {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct TimeGrid {
    double start = 0.0;
    double stop = 0.0;
    int count = 1;

    double at(int i) const;
};

struct GridSpec {
    double halfwidth_sigmas = 8.0;
    int points = 201;
};

struct OracleConfig {
    int fock_cutoff = 60;
    int quad_points = 2001;
};

struct OutputConfig {
    std::string format = "csv";  // csv | json
    std::string path = "-";      // "-" writes to stdout
};

/// Full run configuration; see the README for the file layout. Unknown keys
/// are rejected, alpha may be given as {re, im} or {mod, arg} but not both,
/// temperatures as {T: absolute} or {tau: kb T/(hbar omega)}.
struct RunConfig {
    StateSpec state;
    TimeGrid time_grid;
    GridSpec grid_x;
    GridSpec grid_p;
    OracleConfig oracle;
    OutputConfig output;
};

RunConfig parse_config_text(const std::string& text);
/// Reads the file, applies the TDSTS_FOCK_CUTOFF environment override.
RunConfig load_config_file(const std::string& path);

}  // namespace tdsts
