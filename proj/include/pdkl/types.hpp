#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace pdkl {

using Scalar = double;
using Index = Eigen::Index;

template <class S> using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S> using VectorX = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S> using RowVectorX = Eigen::Matrix<S, 1, Eigen::Dynamic>;

using MatrixXd = MatrixX<Scalar>;
using VectorXd = VectorX<Scalar>;
using RowVectorXd = RowVectorX<Scalar>;
using VectorXi = Eigen::VectorXi;
using Vector2d = Eigen::Matrix<Scalar, 2, 1>;
using SparseMatrixd = Eigen::SparseMatrix<Scalar>;

}  // namespace pdkl
