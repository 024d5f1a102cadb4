// linalg.hpp — LAPACK-backed dense eigendecomposition of general complex matrices.
#pragma once

#include <Eigen/Dense>

namespace knr::internal {

struct GeneralEig {
    Eigen::VectorXcd values;
    Eigen::MatrixXcd vectors;  // right eigenvectors, one per column
};

// zgeev wrapper; throws knr::NumericalError on failure.
GeneralEig eig_general(const Eigen::MatrixXcd& matrix);

}  // namespace knr::internal
