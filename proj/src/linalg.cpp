#include "qslbath/linalg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#ifdef QSLBATH_WITH_LAPACKE
#include <lapacke.h>
#endif

namespace qslbath {

double max_asymmetry(const Matrix& a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& a, double tolerance) {
    return a.rows() == a.cols() && max_asymmetry(a) <= tolerance;
}

namespace {

void require_square(const Matrix& a, const char* who) {
    if (a.rows() != a.cols() || a.rows() < 1) {
        std::ostringstream msg;
        msg << who << ": expected a square matrix, got " << a.rows() << "x" << a.cols();
        throw std::invalid_argument(msg.str());
    }
}

void require_hermitian(const Matrix& a, const char* who) {
    require_square(a, who);
    const double asym = max_asymmetry(a);
    if (asym > tol::hermitian) {
        std::ostringstream msg;
        msg << who << ": matrix is not Hermitian, max |A - A^dag| = " << asym;
        throw std::invalid_argument(msg.str());
    }
}

void require_same_dim(const Matrix& a, const Matrix& b, const char* who) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::ostringstream msg;
        msg << who << ": dimension mismatch, " << a.rows() << "x" << a.cols() << " vs "
            << b.rows() << "x" << b.cols();
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

EigenDecomposition herm_eig(const Matrix& a) {
    require_hermitian(a, "herm_eig");
    const Index n = a.rows();
#ifdef QSLBATH_WITH_LAPACKE
    EigenDecomposition eig;
    eig.eigenvalues.resize(n);
    eig.eigenvectors = a;
    const int info = LAPACKE_zheevd(
        LAPACK_COL_MAJOR, 'V', 'L', static_cast<lapack_int>(n),
        reinterpret_cast<lapack_complex_double*>(eig.eigenvectors.data()),
        static_cast<lapack_int>(n), eig.eigenvalues.data());
    if (info != 0) {
        throw std::runtime_error("herm_eig: zheevd failed with info = " + std::to_string(info));
    }
    return eig;
#else
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("herm_eig: eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
#endif
}

Matrix matrix_function(const Matrix& a, const std::function<double(double)>& f) {
    const EigenDecomposition eig = herm_eig(a);
    RealVector mapped(eig.eigenvalues.size());
    for (Index i = 0; i < mapped.size(); ++i) {
        const double value = f(eig.eigenvalues(i));
        if (!std::isfinite(value)) {
            std::ostringstream msg;
            msg << "matrix_function: f undefined at eigenvalue " << eig.eigenvalues(i);
            throw std::domain_error(msg.str());
        }
        mapped(i) = value;
    }
    return eig.eigenvectors * mapped.asDiagonal() * eig.eigenvectors.adjoint();
}

Matrix matrix_sqrt_psd(const Matrix& a) {
    EigenDecomposition eig = herm_eig(a);
    for (Index i = 0; i < eig.eigenvalues.size(); ++i) {
        double& w = eig.eigenvalues(i);
        if (w < -tol::psd_clamp) {
            std::ostringstream msg;
            msg << "matrix_sqrt_psd: matrix is not PSD, eigenvalue " << w;
            throw std::invalid_argument(msg.str());
        }
        // |w| below the clamp is treated as an exact zero so numerically
        // rank-deficient inputs do not pick up sqrt(eps)-sized roots.
        w = w > tol::psd_clamp ? std::sqrt(w) : 0.0;
    }
    return eig.eigenvectors * eig.eigenvalues.asDiagonal() * eig.eigenvectors.adjoint();
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b, "commutator");
    return a * b - b * a;
}

Matrix anticommutator(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b, "anticommutator");
    return a * b + b * a;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    const Index rows = a.rows() * b.rows();
    const Index cols = a.cols() * b.cols();
    if (rows > kCompositeDimCap || cols > kCompositeDimCap) {
        std::ostringstream msg;
        msg << "kron: composite dimension " << rows << "x" << cols << " exceeds the cap "
            << kCompositeDimCap;
        throw std::invalid_argument(msg.str());
    }
    Matrix out(rows, cols);
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix embed(const Matrix& op, std::span<const Index> site_dims, std::size_t site_index) {
    require_square(op, "embed");
    if (site_index >= site_dims.size()) {
        throw std::invalid_argument("embed: site_index " + std::to_string(site_index) +
                                    " out of range for " + std::to_string(site_dims.size()) +
                                    " sites");
    }
    if (op.rows() != site_dims[site_index]) {
        throw std::invalid_argument("embed: operator dimension does not match the site dimension");
    }
    Index left = 1;
    Index right = 1;
    for (std::size_t k = 0; k < site_dims.size(); ++k) {
        if (site_dims[k] < 1) throw std::invalid_argument("embed: site dimensions must be >= 1");
        if (k < site_index) left *= site_dims[k];
        if (k > site_index) right *= site_dims[k];
    }
    if (left * op.rows() * right > kCompositeDimCap) {
        throw std::invalid_argument("embed: composite dimension exceeds the cap " +
                                    std::to_string(kCompositeDimCap));
    }
    Matrix out = kron(Matrix::Identity(left, left), op);
    return kron(out, Matrix::Identity(right, right));
}

Matrix partial_trace(const Matrix& rho, Index dim_system, Index dim_bath, Keep keep) {
    require_square(rho, "partial_trace");
    if (dim_system < 1 || dim_bath < 1 || rho.rows() != dim_system * dim_bath) {
        std::ostringstream msg;
        msg << "partial_trace: dimension " << rho.rows() << " does not factor as "
            << dim_system << " * " << dim_bath;
        throw std::invalid_argument(msg.str());
    }
    if (keep == Keep::System) {
        Matrix out = Matrix::Zero(dim_system, dim_system);
        for (Index a = 0; a < dim_system; ++a) {
            for (Index b = 0; b < dim_system; ++b) {
                Complex sum = 0.0;
                for (Index m = 0; m < dim_bath; ++m) sum += rho(a * dim_bath + m, b * dim_bath + m);
                out(a, b) = sum;
            }
        }
        return out;
    }
    Matrix out = Matrix::Zero(dim_bath, dim_bath);
    for (Index m = 0; m < dim_bath; ++m) {
        for (Index n = 0; n < dim_bath; ++n) {
            Complex sum = 0.0;
            for (Index a = 0; a < dim_system; ++a) sum += rho(a * dim_bath + m, a * dim_bath + n);
            out(m, n) = sum;
        }
    }
    return out;
}

}  // namespace qslbath
