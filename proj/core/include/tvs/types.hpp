#pragma once

#include <Eigen/Dense>

namespace tvs {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

}  // namespace tvs
