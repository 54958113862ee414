#pragma once

#include <Eigen/Core>

namespace fastgrpo {

using Index = Eigen::Index;
using Scalar = double;

using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;
using Matrix = Eigen::MatrixXd;

using MatrixMap = Eigen::Map<Matrix>;
using ConstMatrixMap = Eigen::Map<const Matrix>;

}  // namespace fastgrpo
