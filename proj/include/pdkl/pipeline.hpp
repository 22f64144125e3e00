#pragma once

#include <filesystem>

#include "pdkl/config.hpp"
#include "pdkl/pd.hpp"

namespace pdkl {

/// Directories for one stage: `out` receives this stage's artifacts, `in`
/// holds the previous stage's (both default to the config's output_dir).
struct StagePaths {
  std::filesystem::path out;
  std::filesystem::path in;
};

void stage_simulate(const PipelineConfig& config, const StagePaths& paths);
void stage_coarsen(const PipelineConfig& config, const StagePaths& paths);
void stage_fit(const PipelineConfig& config, const StagePaths& paths);
void stage_predict(const PipelineConfig& config, const StagePaths& paths);
void stage_report(const PipelineConfig& config, const StagePaths& paths);

/// All five stages in order against the same directory.
void run_pipeline(const PipelineConfig& config, const StagePaths& paths);

}  // namespace pdkl
