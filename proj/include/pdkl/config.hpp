#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pdkl/fem.hpp"
#include "pdkl/kernel_fit.hpp"
#include "pdkl/microstructure.hpp"

namespace pdkl {

/// Parsed pipeline configuration.  All physical quantities carry SI units in
/// their config keys (E_s_pa, T_s_s, ...).
struct PipelineConfig {
  MicroStructureSpec medium;
  BoundaryDrive drive;
  int elements_per_cell = 0;   // default 40 (1D) or 12 (2D)
  double safety_factor = 0.5;  // on the CFL timestep
  double t_end = 0.0;          // T
  double dt_out = 0.0;         // snapshot cadence, default T/1000
  int horizon_cells = 0;       // m = epsilon / l
  std::vector<double> train_times;  // T_t sweep
  std::vector<SolveMode> modes;     // default {Unconstrained, EqualityConstrained}
  double penalty_alpha = 0.0;
  std::optional<std::string> predict_kernel_csv;  // validation runs
  std::optional<double> predict_t_start;
  std::string output_dir;
  std::uint64_t seed = 0x5eedu;
};

SolveMode parse_solve_mode(const std::string& name);

/// Every parse-time violation (empty when valid); advisory notes go to
/// warnings when non-null.
std::vector<std::string> config_violations(const PipelineConfig& config,
                                           std::vector<std::string>* warnings = nullptr);

/// Parses and validates; throws ConfigError whose message lists every
/// violation on its own line.
PipelineConfig load_config(const std::filesystem::path& file);

std::string tt_label(double T_t);

}  // namespace pdkl
