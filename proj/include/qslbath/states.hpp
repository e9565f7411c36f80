// states.hpp — density matrices, thermal and Bloch states, the Hellinger
// distance and the Wigner-Yanase skew information.

#pragma once

#include "qslbath/linalg.hpp"

#include <array>
#include <functional>

namespace qslbath {

// Hermitian, positive semidefinite, unit-trace matrix with its
// eigendecomposition and square root computed once at construction.
// Instances are immutable and safe to share across threads.
class DensityMatrix {
public:
    explicit DensityMatrix(Matrix rho);

    static DensityMatrix pure(const Vector& psi);

    const Matrix& matrix() const { return rho_; }
    const Matrix& sqrt() const { return sqrt_; }
    const RealVector& eigenvalues() const { return eigenvalues_; }
    const Matrix& eigenvectors() const { return eigenvectors_; }
    Index dim() const { return rho_.rows(); }

    // log of the state; rejects singular states.
    Matrix log() const;

private:
    Matrix rho_;
    Matrix sqrt_;
    RealVector eigenvalues_;
    Matrix eigenvectors_;
};

// Qubit polarization: magnitude p in [0, 1] along a unit axis.
struct BlochState {
    double p;
    std::array<double, 3> axis;

    BlochState(double p, std::array<double, 3> axis);
    bool pure() const { return p >= 1.0; }
};

// rho_B = exp(-beta H_B) / Z. The ground energy is subtracted before
// exponentiation so large beta * E never overflows.
DensityMatrix thermal_state(const Matrix& h_bath, double beta);

double log_partition_function(const Matrix& h_bath, double beta);

DensityMatrix bloch_state(const BlochState& state);

// f applied to a Bloch state splits as f(rho) = a + b n.sigma.
struct BlochCoefficients {
    double a;
    double b;
};

BlochCoefficients bloch_function(const std::function<double(double)>& f, const BlochState& state);

// D(rho1, rho2) = 1 - tr(sqrt(rho1) sqrt(rho2)), in [0, 1], contractive
// under the partial trace.
double hellinger_distance(const DensityMatrix& rho1, const DensityMatrix& rho2);

// I = -1/2 tr([H, sqrt(rho_S x rho_B)]^2) for a drive H on the composite
// space, evaluated as a Frobenius norm so the result is nonnegative by
// construction.
double skew_information(const DensityMatrix& system, const DensityMatrix& bath,
                        const Matrix& drive);

// Same quantity for a single (non-product) state.
double skew_information(const DensityMatrix& rho, const Matrix& drive);

}  // namespace qslbath
