// linalg.hpp — dense complex linear algebra: Hermitian eigendecompositions,
// matrix functions, tensor products and partial traces.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <span>

namespace qslbath {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Tolerances shared across the library. Hermiticity is absolute and
// entrywise; reconstruction tolerances are relative Frobenius.
namespace tol {
inline constexpr double hermitian = 1e-12;
inline constexpr double psd_clamp = 1e-12;       // eigenvalues in [-psd_clamp, 0) are treated as 0
inline constexpr double trace_unit = 1e-10;
inline constexpr double reconstruction = 1e-10;
}  // namespace tol

// Largest composite dimension the dense routines accept.
inline constexpr Index kCompositeDimCap = 8192;

struct EigenDecomposition {
    RealVector eigenvalues;  // ascending
    Matrix eigenvectors;     // columns, unitary
};

double max_asymmetry(const Matrix& a);
bool is_hermitian(const Matrix& a, double tolerance = tol::hermitian);

// Eigendecomposition of a Hermitian matrix. Rejects non-Hermitian input
// with the measured asymmetry in the message.
EigenDecomposition herm_eig(const Matrix& a);

// f applied to a Hermitian matrix through its eigendecomposition.
Matrix matrix_function(const Matrix& a, const std::function<double(double)>& f);

// Square root of a Hermitian positive semidefinite matrix. Eigenvalues in
// [-psd_clamp, 0) are clamped to zero; anything below that is rejected.
Matrix matrix_sqrt_psd(const Matrix& a);

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);

Matrix kron(const Matrix& a, const Matrix& b);

// op placed at site_index of a chain with the given site dimensions,
// identity everywhere else.
Matrix embed(const Matrix& op, std::span<const Index> site_dims, std::size_t site_index);

enum class Keep { System, Bath };

// Partial trace of a (dim_system * dim_bath)-dimensional operator.
Matrix partial_trace(const Matrix& rho, Index dim_system, Index dim_bath, Keep keep);

}  // namespace qslbath
