#pragma once

#include <string>
#include <vector>

#include "tdsts/config.hpp"
#include "tdsts/validate.hpp"

namespace tdsts {

enum class DensityKind { position, momentum, wavefunction, rho };

/// CLI entry points. Each returns the process exit code: 0 success,
/// 1 validation failure, 2 invalid configuration or arguments.
int cmd_evaluate(const RunConfig& cfg);
int cmd_density(const RunConfig& cfg, DensityKind kind);
int cmd_sweep(const RunConfig& cfg, const std::string& axis,
              const std::vector<double>& values);
int cmd_validate(const validation::Options& opt);

DensityKind parse_density_kind(const std::string& name);

}  // namespace tdsts
