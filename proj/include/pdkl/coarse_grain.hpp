#pragma once

#include <vector>

#include "pdkl/fem.hpp"
#include "pdkl/microstructure.hpp"
#include "pdkl/types.hpp"

namespace pdkl {

/// Per-unit-cell averaged displacement and acceleration on a shared time grid.
/// Cells form a complete rectangular grid; cell (p, q) flattens to q*nx + p
/// (q = 0, ny = 1 in 1D).  One matrix per component, one row per time.
struct MacroSeries {
  int dimension = 1;
  int nx = 0;
  int ny = 1;
  double cell_length = 0.0;
  double density = 0.0;  // rho_bar, uniform across cells
  VectorXd times;
  std::vector<MatrixXd> displacement;  // size = dimension, each n_times x n_cells
  std::vector<MatrixXd> acceleration;

  Index n_cells() const { return static_cast<Index>(nx) * ny; }
  Index n_times() const { return times.size(); }
  Index cell_index(int p, int q = 0) const { return static_cast<Index>(q) * nx + p; }
};

struct TrainTestSplit {
  MacroSeries train;  // t <= T_t (a snapshot exactly at T_t goes to train)
  MacroSeries test;   // t > T_t
  double T_t = 0.0;
};

/// Volume average of the FEM interpolant over each unit cell, applied to both
/// displacement and acceleration (trapezoid over nodes in 1D; per-element
/// four-node means in 2D; exact for the interpolant).
MacroSeries cell_average(const MicroState& state, const FemMesh& mesh,
                         const MicroStructureSpec& spec);

TrainTestSplit split(const MacroSeries& series, double T_t);

/// Flattened indices of cells at least horizon_cells away (per axis) from
/// every domain boundary, ascending.  Errors when empty.
std::vector<Index> interior_cells(const MacroSeries& series, int horizon_cells);
std::vector<Index> interior_cell_indices(int nx, int ny, int horizon_cells);

/// Sub-series on the interior rectangle (nx - 2m) x (ny - 2m).
MacroSeries restrict_to_interior(const MacroSeries& series, int horizon_cells);
/// Sub-series on a time window [t_min, t_max] (inclusive, with grid tolerance).
MacroSeries time_window(const MacroSeries& series, double t_min, double t_max);

}  // namespace pdkl
