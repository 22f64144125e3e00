#pragma once

#include <cstdint>
#include <functional>

#include "pdkl/types.hpp"

namespace pdkl {

/// Deterministic probe vector in [-0.5, 0.5)^n, reproducible across platforms
/// (raw mt19937_64 draws mapped through ldexp; no distribution adapters).
VectorXd random_probe(Index n, std::uint64_t seed);

/// Dominant eigenvalue of a linear operator by power iteration with Rayleigh
/// quotient stopping.  Throws NumericalError after max_iter iterations without
/// the relative change dropping below rel_tol.
double power_iteration_max(const std::function<VectorXd(const VectorXd&)>& op,
                           Index n, std::uint64_t seed = 0x9e3779b97f4a7c15ull,
                           double rel_tol = 1e-4, int max_iter = 10000);

/// 4-point Lagrange interpolation of a uniformly sampled time series; the
/// stencil is clamped at the ends.  values holds one row per sample time.
RowVectorXd interp_time_cubic(const VectorXd& times, const MatrixXd& values, double t);

}  // namespace pdkl
