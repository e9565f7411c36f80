// evolve.hpp — exact composite-state evolution and the central-spin
// tightness experiment comparing the actual Hellinger distance against the
// accumulated speed-limit bound.

#pragma once

#include "qslbath/bounds.hpp"
#include "qslbath/models.hpp"

#include <optional>
#include <span>
#include <vector>

namespace qslbath {

// rho_t = U rho_0 U^dag with U = exp(-i H t), one eigendecomposition for
// all requested times. Intended for moderate dimensions; use
// tightness_trajectory for the large central-spin runs.
std::vector<DensityMatrix> evolve_constant(const Matrix& h, const DensityMatrix& rho0,
                                           std::span<const double> times);

// Midpoint-exponential stepping for time-dependent Hamiltonians; one step
// per grid interval, local error O(dt^3). Evolution starts at t = 0.
std::vector<DensityMatrix> evolve_stepped(const std::function<Matrix(double)>& h,
                                          const DensityMatrix& rho0, std::span<const double> times);

struct TrajectoryRecord {
    std::vector<double> times;
    std::vector<double> hellinger;          // D(rho_0, rho_t)
    std::vector<double> reduced_hellinger;  // D of the reduced system states
    std::vector<double> phase;              // sqrt(2 I) t
    std::vector<double> bound;              // 1 - cos(phase)
    std::optional<double> t_max;
    double information = 0.0;               // constant skew information of the drive
    std::uint64_t seed = 0;
};

// Exact evolution of a sampled central-spin instance, recorded against the
// bound built from the closed-form skew information. Works in the
// eigenbasis of the composite Hamiltonian so each time point costs O(dim^2).
TrajectoryRecord tightness_trajectory(const CentralSpinInstance& instance,
                                      std::span<const double> times);

// Uniform grid over [0, span_factor * t_max] (or [0, 1] when the horizon
// is infinite) with the first point at t = 0.
std::vector<double> default_time_grid(const CentralSpinInstance& instance, int points = 400,
                                      double span_factor = 1.25);

}  // namespace qslbath
