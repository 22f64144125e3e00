#pragma once

#include <cstdint>
#include <vector>

#include "pdkl/coarse_grain.hpp"
#include "pdkl/kernel_fit.hpp"
#include "pdkl/types.hpp"

namespace pdkl {

/// Cell field on the full grid: one n_cells x n_components matrix, cell order
/// matching MacroSeries (q * nx + p).
using CellField = MatrixXd;

/// Discrete bond-based forward model on a cell grid.  Cells within
/// horizon_cells of the boundary form the collar; their displacements are
/// prescribed from collar_drive (a full-grid series read on collar cells,
/// cubically interpolated in time).
struct PDModel {
  MicroModulus kernel;
  double density = 0.0;  // rho_bar
  int nx = 0;
  int ny = 1;
  MacroSeries collar_drive;

  Index n_cells() const { return static_cast<Index>(nx) * ny; }
};

/// L[u]_i = sum over horizon offsets of omega * (u_{i+off} - u_i) on interior
/// cells; collar rows are zero.  2D applies the scalar weight componentwise.
CellField apply_operator(const PDModel& model, const CellField& u);

/// Dense interior matrix and collar coupling with
/// L[u]_interior = interior_matrix * u_interior + collar_coupling * u_collar.
struct PDMatrix {
  std::vector<Index> interior;  // cell ids, ascending
  std::vector<Index> collar;    // cell ids, ascending
  MatrixXd interior_matrix;     // scalar block, applied per component in 2D
  MatrixXd collar_coupling;
};
PDMatrix assemble_matrix(const PDModel& model);

/// Stable-timestep bound 2/sqrt(lambda_max(-L/rho)) for the interior operator.
double stable_timestep(const PDModel& model, std::uint64_t seed = 0x5eedu);

/// Central-difference integration of rho u'' = L[u] from t_start to t_end,
/// collar cells overwritten from the drive every step; records on the
/// dt_record grid anchored at t_start (dt is rounded down to divide it; pass
/// dt = 0 for the default 0.25 * stable_timestep).  Initial fields are read
/// on interior cells.  Recorded acceleration is L[u]/rho (zero on the collar).
MacroSeries integrate(const PDModel& model, const CellField& u0, const CellField& v0,
                      double t_start, double t_end, double dt, double dt_record);

struct Prediction {
  MacroSeries acceleration;  // L[u_data]/rho on the test snapshots
  MacroSeries displacement;  // integrated from the state at T_t
};

/// Test-window prediction: accelerations from the data displacements without
/// integration, displacements by integrating from u_data(T_t) with the
/// centered-difference velocity at T_t.
Prediction predict_from_split(const PDModel& model, const TrainTestSplit& split,
                              double dt = 0.0);

/// Validation prediction over a whole series: integrate from its first
/// snapshot (one-sided initial velocity, collar from the data); acceleration
/// rows hold the operator applied to every data snapshot.
Prediction predict_full_series(const PDModel& model, const MacroSeries& data, double dt = 0.0);

}  // namespace pdkl
