// bounds.hpp — matrix-level evaluation of the speed-limit bounds and the
// bound-curve integrator.

#pragma once

#include "qslbath/states.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace qslbath {

// System and system-bath coupling Hamiltonians, either constant or
// time-indexed callbacks evaluated pointwise on the supplied grid.
class DriveSpec {
public:
    DriveSpec(Matrix h_system, Matrix h_interaction, std::vector<double> times);
    DriveSpec(std::function<Matrix(double)> h_system, std::function<Matrix(double)> h_interaction,
              Index dim_system, Index dim_bath, std::vector<double> times);

    bool constant() const { return constant_; }
    Index system_dim() const { return dim_system_; }
    Index bath_dim() const { return dim_bath_; }
    Index composite_dim() const { return dim_system_ * dim_bath_; }
    const std::vector<double>& times() const { return times_; }

    Matrix system_at(double t) const;
    Matrix interaction_at(double t) const;
    // kron(H_S, 1_B) + H_int on the composite space.
    Matrix total_at(double t) const;

private:
    std::function<Matrix(double)> h_system_;
    std::function<Matrix(double)> h_interaction_;
    Index dim_system_;
    Index dim_bath_;
    std::vector<double> times_;
    bool constant_;
};

// Accumulated speed-limit curve: information samples I(t), the phase
// integral of sqrt(2 I), the distance bound 1 - cos(phase) and the horizon
// t_max where the phase reaches pi/2 (empty when beyond the grid).
struct BoundCurve {
    std::vector<double> times;
    std::vector<double> information;
    std::vector<double> phase;
    std::vector<double> bound;
    std::optional<double> t_max;
};

// Trapezoid accumulation of information samples into a bound curve.
BoundCurve bound_curve_from_information(std::vector<double> times, std::vector<double> information);

// Bound curve for a drive acting on system x thermal-bath product state.
// For constant drives the horizon is pi / sqrt(8 I) exactly.
BoundCurve mds_curve(const DriveSpec& drive, const DensityMatrix& system,
                     const DensityMatrix& bath);

// Variance-style relaxation tr((H - c)^2 rho0). An empty c picks
// c = tr(H rho0), which makes the bound the variance of the drive.
double relaxed_bound(const DriveSpec& drive, const DensityMatrix& system, const DensityMatrix& bath,
                     std::optional<double> c = std::nullopt, double t = 0.0);

// Temperature-explicit bound built from [H_int, H_B] and [H, sqrt(rho_S)];
// requires the bath state to be thermal for h_bath at inverse temperature
// beta for the inequality to apply.
double thermal_bound(const DriveSpec& drive, const DensityMatrix& system, const DensityMatrix& bath,
                     const Matrix& h_bath, double beta, double t = 0.0);

// Log-variant temperature-explicit bound; requires a full-rank system state.
double thermal_log_bound(const DriveSpec& drive, const DensityMatrix& system,
                         const DensityMatrix& bath, const Matrix& h_bath, double beta,
                         double t = 0.0);

}  // namespace qslbath
