#pragma once

#include <optional>
#include <string>
#include <utility>

#include "pdkl/coarse_grain.hpp"
#include "pdkl/microstructure.hpp"
#include "pdkl/types.hpp"

namespace pdkl {

/// Discrete micro-modulus over cell offsets, stored in canonical form.
/// 1D: values[j-1] = omega_j for j = 1..m with omega_{-j} = omega_j.
/// 2D: values[k] = omega_{i,j} for 1 <= i <= m, 0 <= j <= i, with the dihedral
/// expansion omega_{i,j} = omega_{-i,j} = omega_{i,-j} = omega_{j,i}.
/// The zero offset multiplies u_i - u_i = 0 and is not stored.
/// Units: kg m^-3 s^-2.
struct MicroModulus {
  int dimension = 1;
  int horizon_cells = 0;  // m = epsilon / l
  double cell_length = 0.0;
  VectorXd values;

  /// Symmetric expansion; throws DomainError for the zero offset or outside
  /// the horizon.
  double value_at(int i, int j = 0) const;
};

/// Number of canonical 2D entries: m (m + 3) / 2.
int canonical_count_2d(int horizon_cells);
/// Canonical column of offset (i, j) != (0, 0) under the dihedral symmetry.
int canonical_index_2d(int i, int j);
/// Representative offset (i, j), i >= j >= 0, of canonical column k.
std::pair<int, int> canonical_offset_2d(int k);
/// Lattice offsets in one dihedral orbit: 8 for i > j > 0, else 4.
int orbit_size_2d(int i, int j);

/// Single linear equality c . omega = d.
struct ConstraintRow {
  RowVectorXd c;
  double d = 0.0;
};

/// Least-squares system rho_bar * u''_i(t) ~ sum_k A[row, k] omega_k over
/// interior cells and training snapshots (two rows per cell/time in 2D).
struct RegressionSystem {
  int dimension = 1;
  int horizon_cells = 0;
  double cell_length = 0.0;
  MatrixXd design;
  VectorXd target;
  VectorXd row_weights;
  std::optional<ConstraintRow> constraint;
};

enum class SolveMode { Unconstrained, EqualityConstrained, Penalty };
std::string to_string(SolveMode mode);

struct FitReport {
  double residual_norm = 0.0;
  double relative_residual = 0.0;
  double constraint_violation = 0.0;  // |c.w - d| / |d|, NaN without constraint
  double condition_estimate = 0.0;    // after column scaling
  std::optional<bool> positive_definite;
  std::string solver;
};

struct FitResult {
  MicroModulus kernel;
  FitReport report;
};

/// One row per (interior cell, snapshot); column j holds
/// u_{i+j} + u_{i-j} - 2 u_i, target rho_bar * u''_i, unit weights.
/// The series must cover the full cell grid; rows are built for its interior.
RegressionSystem build_system_1d(const MacroSeries& train, int horizon_cells);

/// Inverse-RMS weights of (rho_bar * u''_x, rho_bar * u''_y) over the
/// interior training rows; components with zero RMS get weight 1.
Vector2d component_weights(const MacroSeries& train, int horizon_cells);

/// Square horizon max(|i|,|j|) <= m; canonical columns accumulate every
/// symmetry-equivalent offset; x rows weighted weights[0], y rows weights[1].
RegressionSystem build_system_2d(const MacroSeries& train, int horizon_cells,
                                 const Vector2d& weights);

/// c_j = (j l1)^2, d = homogenized_modulus_1d(spec).
ConstraintRow energy_constraint_1d(const MicroStructureSpec& spec, int horizon_cells);

/// Discretized unit-cell strain energy density under isotropic extension:
/// canonical column k gets 1/4 * sum over its orbit of |xi|^2; d is the FEM
/// energy density per unit squared strain.
ConstraintRow energy_constraint_2d(double W_uc_per_s2, int horizon_cells,
                                   double cell_length);

/// Column-scaled QR least squares; EqualityConstrained eliminates the single
/// equality through a Householder null-space basis; Penalty appends the row
/// sqrt(alpha) * (c, d).
FitResult solve(const RegressionSystem& system, SolveMode mode, double penalty_alpha = 0.0);

/// Scalar interior-cell operator matrix with a Dirichlet collar on an
/// nx x ny cell grid: off-diagonal omega at interior neighbors, diagonal
/// -sum of omega over the full horizon.  In 2D the vector operator is this
/// block once per component.
MatrixXd interior_operator_matrix(const MicroModulus& kernel, int nx, int ny);

/// Dirichlet-collar certificate for the interior-cell operator matrix L
/// (n_cells per side): attempts a Cholesky factorization of -L and estimates
/// the smallest eigenvalue by inverse power iteration.
struct PdCertificate {
  bool positive_definite = false;
  double min_eigenvalue = 0.0;  // NaN when factorization fails
  Index failed_pivot = -1;      // first nonpositive pivot, -1 on success
};
PdCertificate certify_positive_definite(const MicroModulus& kernel, int n_cells);

}  // namespace pdkl
