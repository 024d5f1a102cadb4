#include "internal/linalg.hpp"

#include <complex>

#include "knrspec/model.hpp"

#define LAPACK_COMPLEX_CUSTOM
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace knr::internal {

GeneralEig eig_general(const Eigen::MatrixXcd& matrix) {
    if (matrix.rows() != matrix.cols()) {
        throw NumericalError("eig_general: matrix must be square");
    }
    const auto n = static_cast<lapack_int>(matrix.rows());
    Eigen::MatrixXcd work = matrix;  // zgeev overwrites its input
    GeneralEig out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    const lapack_int info =
        LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'V', n, work.data(), n, out.values.data(),
                      nullptr, 1, out.vectors.data(), n);
    if (info != 0) {
        throw NumericalError("eig_general: zgeev failed with info=" + std::to_string(info));
    }
    return out;
}

}  // namespace knr::internal
