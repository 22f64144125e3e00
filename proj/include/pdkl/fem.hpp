#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pdkl/microstructure.hpp"
#include "pdkl/types.hpp"

namespace pdkl {

/// Structured mesh over the full domain (or a single unit cell): 1D two-node
/// segments, 2D axis-aligned bilinear quadrilaterals.  Element phases are
/// assigned at centroids; the per-cell element counts keep element edges on
/// phase interfaces so centroid sampling is exact.
struct FemMesh {
  int dimension = 1;
  int n_cells = 0;            // unit cells per side
  int elements_per_cell = 0;  // per side in 2D
  double cell_length = 0.0;
  double h = 0.0;             // element edge length
  MatrixXd nodes;             // n_nodes x dimension
  Eigen::MatrixXi elements;   // n_elements x (2 | 4); 2D connectivity counterclockwise
  std::vector<MaterialPhase> element_phase;

  Index n_nodes() const { return nodes.rows(); }
  Index n_elements() const { return elements.rows(); }
  Index n_dofs() const { return nodes.rows() * dimension; }
  int nodes_per_side() const { return n_cells * elements_per_cell + 1; }
};

enum class DriveKind {
  PolynomialPulse,   // 1D: u0*a0*t^6(t-Ts)^6 up to Ts, then zero
  SinusoidalBurst,   // 1D: u0*a0*sin(2*pi*t/Ts) up to Ts, then zero
  Extension2D,       // polynomial pulse on the x-displacement of the right edge
  Shear2D,           // polynomial pulse on the y-displacement of the right edge
};

struct BoundaryDrive {
  DriveKind kind = DriveKind::PolynomialPulse;
  double u0 = 0.0;   // m
  double a0 = 0.0;   // time-profile normalization
  double T_s = 0.0;  // s
};

/// a0 making the pulse peak displacement equal u0: (T_s/2)^-12.
double default_pulse_a0(double T_s);
BoundaryDrive make_polynomial_pulse(double u0, double T_s);
BoundaryDrive make_sinusoidal_burst(double u0, double T_s);  // a0 = 1
BoundaryDrive make_extension_2d(double u0, double T_s);
BoundaryDrive make_shear_2d(double u0, double T_s);

/// Prescribed boundary displacement at time t; identically zero for t >= T_s.
double drive_displacement(const BoundaryDrive& drive, double t);

/// Nodal time history recorded on a uniform output grid.
struct MicroState {
  int dimension = 1;
  double dt_out = 0.0;
  VectorXd times;
  std::vector<VectorXd> displacement;  // one n_dofs vector per snapshot
  std::vector<VectorXd> velocity;
  std::vector<VectorXd> acceleration;  // residual M^-1(f - K u), f = 0
};

FemMesh build_mesh(const MicroStructureSpec& spec, int elements_per_cell);
/// Mesh of a single unit cell, used by the static energy solve.
FemMesh build_cell_mesh(const MicroStructureSpec& spec, int elements_per_cell);

struct AssembledSystem {
  SparseMatrixd stiffness;  // symmetric positive semi-definite
  VectorXd lumped_mass;     // strictly positive (row-sum lumping)
};
AssembledSystem assemble(const FemMesh& mesh);

/// Two-node bar: (E A / h) [[1,-1],[-1,1]], unit cross-section.
Eigen::Matrix2d bar_element_stiffness(double elastic_modulus, double h);
/// Bilinear quad of edge h, plane stress, 2x2 Gauss quadrature; DOFs ordered
/// (ux0, uy0, ux1, uy1, ...) over counterclockwise nodes.
Eigen::Matrix<double, 8, 8> quad_element_stiffness(double elastic_modulus,
                                                   double poisson_ratio, double h);

/// Stable-timestep estimate 2/sqrt(lambda_max) with lambda_max the largest
/// generalized eigenvalue of (K, M) from power iteration (~1% accuracy).
double cfl_timestep(const SparseMatrixd& K, const VectorXd& M,
                    std::uint64_t seed = 0x5eedu);

/// Central-difference integration of M u'' = -K u with fixed DOFs pinned at
/// zero and driven DOFs following drive_value(t).  Records every dt_out
/// (dt must divide dt_out).  Throws NumericalError when any |u| exceeds
/// blowup_limit.  Building block for explicit_dynamics and for verification
/// studies needing nonzero initial conditions.
MicroState integrate_central_difference(
    const SparseMatrixd& K, const VectorXd& M, int dimension,
    std::span<const Index> fixed_dofs, std::span<const Index> driven_dofs,
    const std::function<double(double)>& drive_value, const VectorXd& u0,
    const VectorXd& v0, double t_end, double dt, double dt_out, double blowup_limit);

/// Fixed/driven DOF sets for the standard loading: 1D left node fixed, right
/// node driven; 2D left edge fully fixed, right edge driven in the component
/// selected by the drive kind (the other component traction-free).
struct BoundarySets {
  std::vector<Index> fixed;
  std::vector<Index> driven;
};
BoundarySets boundary_sets(const FemMesh& mesh, const BoundaryDrive& drive);

/// Full micro-scale run from rest: dt = dt_out / ceil(dt_out / (safety * dt_CFL)).
MicroState explicit_dynamics(const FemMesh& mesh, const AssembledSystem& sys,
                             const BoundaryDrive& drive, double t_end, double dt_out,
                             double safety_factor = 0.5);

/// Static solve with prescribed displacements (and optional nodal loads):
/// K_ff u_f = f_f - K_fc u_c.  Returns the full displacement vector.
VectorXd static_dirichlet_solve(const SparseMatrixd& K,
                                std::span<const Index> dirichlet_dofs,
                                const VectorXd& dirichlet_values,
                                const VectorXd& loads = VectorXd());

/// Average strain energy density of one unit cell under the affine boundary
/// condition u = strain * x on all cell boundary nodes (isotropic extension,
/// kinematic uniform BC).  2D only; scales exactly as strain^2.
double unit_cell_energy_density(const MicroStructureSpec& spec, double strain,
                                int elements_per_cell = 12);

}  // namespace pdkl
