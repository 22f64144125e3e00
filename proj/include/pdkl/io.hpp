#pragma once

#include <cstdio>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "pdkl/coarse_grain.hpp"
#include "pdkl/fem.hpp"
#include "pdkl/kernel_fit.hpp"
#include "pdkl/types.hpp"

namespace pdkl {

/// Shortest decimal representation that round-trips a double exactly ("%.17g"
/// trimmed where fewer digits already round-trip).
std::string format_full(double v);

/// Deterministic CSV emission: a '#' metadata line of space-separated
/// key=value pairs, a column-name row, then full-precision numeric rows.
class CsvWriter {
 public:
  explicit CsvWriter(const std::filesystem::path& file);
  ~CsvWriter();
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  void header(const std::map<std::string, std::string>& meta);
  void row_names(const std::vector<std::string>& names);
  void numeric_row(const std::vector<double>& values);

 private:
  std::FILE* f_ = nullptr;
};

struct CsvData {
  std::map<std::string, std::string> meta;
  std::vector<std::string> columns;
  MatrixXd values;
};
CsvData read_csv(const std::filesystem::path& file);

/// Nodal time history, binary:
///   magic "PDKLSTA1" | int64 dimension, n_dofs, n_times | f64 dt_out |
///   per snapshot: f64 t, then u, v, a (n_dofs f64 each).
void write_microstate(const std::filesystem::path& file, const MicroState& state);
MicroState read_microstate(const std::filesystem::path& file);

/// One CSV per quantity and component (u.csv / a.csv, 2D u_x.csv ...):
/// column 0 is t, then one column c<p>_<q> per cell in grid order.
void write_macro_series(const std::filesystem::path& dir, const MacroSeries& series);
MacroSeries read_macro_series(const std::filesystem::path& dir);

/// Canonical kernel entries: offset indices + values, metadata in the header.
void write_kernel_csv(const std::filesystem::path& file, const MicroModulus& kernel);
MicroModulus read_kernel_csv(const std::filesystem::path& file);

void write_fit_report_json(const std::filesystem::path& file, const FitReport& report,
                           const std::map<std::string, std::string>& extra = {});

}  // namespace pdkl
