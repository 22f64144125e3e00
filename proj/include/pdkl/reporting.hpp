#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "pdkl/coarse_grain.hpp"
#include "pdkl/kernel_fit.hpp"
#include "pdkl/pd.hpp"
#include "pdkl/types.hpp"

namespace pdkl {

/// ||pred - ref||_2 / ||ref||_2 over every entry.  Throws NumericalError when
/// the reference norm is zero (the ratio is undefined, not 0).
double relative_l2(const MatrixXd& pred, const MatrixXd& ref);
double relative_l2(const std::vector<MatrixXd>& pred, const std::vector<MatrixXd>& ref);

/// Relative l2 errors of a prediction against reference data, computed over
/// interior cells and the test window only.
struct ErrorSummary {
  double T_t = 0.0;
  std::string solver_mode;
  double acceleration_error = 0.0;                 // all components
  std::vector<double> acceleration_error_comp;     // per component
  double displacement_error = 0.0;
  std::vector<double> displacement_error_comp;
};

ErrorSummary summarize_errors(const Prediction& pred, const MacroSeries& reference_test,
                              int horizon_cells, double T_t, const std::string& solver_mode);

/// Figure-data CSVs; deterministic full-precision output, one file per curve.
/// Every writer emits the header line
///   # quantity=<q> units=<u> T_t=<v> solver_mode=<s>
/// followed by a column-name row.

/// Kernel values over offsets -m..m (2D: the (i, 0) slice).  The zero offset
/// repeats the nearest-neighbor value, the usual plotting convention for
/// discrete micro-moduli.
void write_kernel_plot_csv(const std::filesystem::path& file, const MicroModulus& kernel,
                           double T_t, const std::string& solver_mode);

/// Time trace of the middle cell (index floor(n/2) per axis).
void write_midcell_trace_csv(const std::filesystem::path& file, const MacroSeries& series,
                             bool acceleration, int component, double T_t,
                             const std::string& solver_mode);

/// One row per T_t for a single solver mode.
void write_error_sweep_csv(const std::filesystem::path& file,
                           const std::vector<ErrorSummary>& sweep,
                           const std::string& solver_mode);

/// Middle-cell column of a series, for trace checks.
VectorXd midcell_trace(const MacroSeries& series, bool acceleration, int component);

}  // namespace pdkl
