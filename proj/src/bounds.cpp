#include "qslbath/bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qslbath {

namespace {

void require_grid(const std::vector<double>& times, const char* who) {
    if (times.empty()) throw std::invalid_argument(std::string(who) + ": empty time grid");
    for (std::size_t k = 1; k < times.size(); ++k) {
        if (!(times[k] > times[k - 1])) {
            throw std::invalid_argument(std::string(who) + ": time grid must be ascending");
        }
    }
}

Matrix checked_hermitian(Matrix m, const char* who) {
    if (!is_hermitian(m)) {
        std::ostringstream msg;
        msg << who << ": matrix is not Hermitian, max |A - A^dag| = " << max_asymmetry(m);
        throw std::invalid_argument(msg.str());
    }
    return m;
}

}  // namespace

DriveSpec::DriveSpec(Matrix h_system, Matrix h_interaction, std::vector<double> times)
    : dim_system_(h_system.rows()), times_(std::move(times)), constant_(true) {
    checked_hermitian(h_system, "DriveSpec(system)");
    checked_hermitian(h_interaction, "DriveSpec(interaction)");
    if (dim_system_ < 1 || h_interaction.rows() % dim_system_ != 0) {
        throw std::invalid_argument(
            "DriveSpec: interaction dimension must be a multiple of the system dimension");
    }
    dim_bath_ = h_interaction.rows() / dim_system_;
    require_grid(times_, "DriveSpec");
    h_system_ = [m = std::move(h_system)](double) { return m; };
    h_interaction_ = [m = std::move(h_interaction)](double) { return m; };
}

DriveSpec::DriveSpec(std::function<Matrix(double)> h_system,
                     std::function<Matrix(double)> h_interaction, Index dim_system, Index dim_bath,
                     std::vector<double> times)
    : h_system_(std::move(h_system)),
      h_interaction_(std::move(h_interaction)),
      dim_system_(dim_system),
      dim_bath_(dim_bath),
      times_(std::move(times)),
      constant_(false) {
    if (dim_system_ < 1 || dim_bath_ < 1) {
        throw std::invalid_argument("DriveSpec: dimensions must be positive");
    }
    require_grid(times_, "DriveSpec");
}

Matrix DriveSpec::system_at(double t) const {
    Matrix m = checked_hermitian(h_system_(t), "DriveSpec::system_at");
    if (m.rows() != dim_system_) {
        throw std::invalid_argument("DriveSpec::system_at: wrong dimension");
    }
    return m;
}

Matrix DriveSpec::interaction_at(double t) const {
    Matrix m = checked_hermitian(h_interaction_(t), "DriveSpec::interaction_at");
    if (m.rows() != composite_dim()) {
        throw std::invalid_argument("DriveSpec::interaction_at: wrong dimension");
    }
    return m;
}

Matrix DriveSpec::total_at(double t) const {
    return kron(system_at(t), Matrix::Identity(dim_bath_, dim_bath_)) + interaction_at(t);
}

BoundCurve bound_curve_from_information(std::vector<double> times,
                                        std::vector<double> information) {
    require_grid(times, "bound_curve_from_information");
    if (times.size() != information.size()) {
        throw std::invalid_argument("bound_curve_from_information: grid/sample size mismatch");
    }
    BoundCurve curve;
    curve.times = std::move(times);
    curve.information = std::move(information);
    curve.phase.resize(curve.times.size());
    curve.bound.resize(curve.times.size());
    std::vector<double> speed(curve.times.size());
    for (std::size_t k = 0; k < curve.times.size(); ++k) {
        double value = curve.information[k];
        if (value < -1e-10) {
            throw std::runtime_error(
                "bound_curve_from_information: negative information sample " +
                std::to_string(value));
        }
        if (value < 0.0) value = 0.0;
        speed[k] = std::sqrt(2.0 * value);
    }
    double phase = 0.0;
    curve.phase[0] = 0.0;
    curve.bound[0] = 1.0 - std::cos(phase);
    constexpr double half_pi = std::numbers::pi / 2.0;
    for (std::size_t k = 1; k < curve.times.size(); ++k) {
        const double dt = curve.times[k] - curve.times[k - 1];
        const double previous = phase;
        phase += 0.5 * dt * (speed[k - 1] + speed[k]);
        curve.phase[k] = phase;
        curve.bound[k] = 1.0 - std::cos(std::min(phase, std::numbers::pi));
        if (!curve.t_max && phase >= half_pi) {
            if (phase == previous) {
                curve.t_max = curve.times[k];
            } else {
                const double fraction = (half_pi - previous) / (phase - previous);
                curve.t_max = curve.times[k - 1] + fraction * dt;
            }
        }
    }
    return curve;
}

BoundCurve mds_curve(const DriveSpec& drive, const DensityMatrix& system,
                     const DensityMatrix& bath) {
    if (system.dim() != drive.system_dim() || bath.dim() != drive.bath_dim()) {
        throw std::invalid_argument("mds_curve: state dimensions do not match the drive");
    }
    const std::vector<double>& times = drive.times();
    std::vector<double> information(times.size());
    if (drive.constant()) {
        const double value = skew_information(system, bath, drive.total_at(times.front()));
        std::fill(information.begin(), information.end(), value);
        BoundCurve curve = bound_curve_from_information(times, std::move(information));
        if (value > 0.0) {
            curve.t_max = std::numbers::pi / std::sqrt(8.0 * value);
        }
        return curve;
    }
    for (std::size_t k = 0; k < times.size(); ++k) {
        information[k] = skew_information(system, bath, drive.total_at(times[k]));
    }
    return bound_curve_from_information(times, std::move(information));
}

namespace {

struct EmbeddedFactors {
    Matrix sqrt_system;  // sqrt(rho_S) x 1
    Matrix sqrt_bath;    // 1 x sqrt(rho_B)
};

EmbeddedFactors embedded_roots(const DensityMatrix& system, const DensityMatrix& bath) {
    const Index db = bath.dim();
    const Index ds = system.dim();
    return {kron(system.sqrt(), Matrix::Identity(db, db)),
            kron(Matrix::Identity(ds, ds), bath.sqrt())};
}

void require_state_dims(const DriveSpec& drive, const DensityMatrix& system,
                        const DensityMatrix& bath, const char* who) {
    if (system.dim() != drive.system_dim() || bath.dim() != drive.bath_dim()) {
        throw std::invalid_argument(std::string(who) + ": state dimensions do not match the drive");
    }
}

}  // namespace

double relaxed_bound(const DriveSpec& drive, const DensityMatrix& system, const DensityMatrix& bath,
                     std::optional<double> c, double t) {
    require_state_dims(drive, system, bath, "relaxed_bound");
    const Matrix h = drive.total_at(t);
    double shift;
    if (c) {
        shift = *c;
    } else {
        const Matrix rho0 = kron(system.matrix(), bath.matrix());
        shift = (h * rho0).trace().real();
    }
    Matrix centered = h;
    centered.diagonal().array() -= shift;
    const Matrix root = kron(system.sqrt(), bath.sqrt());
    return (centered * root).squaredNorm();
}

double thermal_bound(const DriveSpec& drive, const DensityMatrix& system, const DensityMatrix& bath,
                     const Matrix& h_bath, double beta, double t) {
    require_state_dims(drive, system, bath, "thermal_bound");
    if (beta < 0.0) throw std::invalid_argument("thermal_bound: beta must be nonnegative");
    if (h_bath.rows() != bath.dim()) {
        throw std::invalid_argument("thermal_bound: bath Hamiltonian dimension mismatch");
    }
    const auto [sqrt_s, sqrt_b] = embedded_roots(system, bath);
    const Matrix h_bath_embedded =
        kron(Matrix::Identity(system.dim(), system.dim()), h_bath);
    const Matrix c = commutator(drive.interaction_at(t), h_bath_embedded);
    const double first = beta * beta / 8.0 *
                         ((sqrt_b * c * sqrt_s).squaredNorm() + (c * sqrt_s * sqrt_b).squaredNorm());
    const Matrix g = commutator(drive.total_at(t), sqrt_s);
    return first + (g * sqrt_b).squaredNorm();
}

double thermal_log_bound(const DriveSpec& drive, const DensityMatrix& system,
                         const DensityMatrix& bath, const Matrix& h_bath, double beta, double t) {
    require_state_dims(drive, system, bath, "thermal_log_bound");
    if (beta < 0.0) throw std::invalid_argument("thermal_log_bound: beta must be nonnegative");
    if (h_bath.rows() != bath.dim()) {
        throw std::invalid_argument("thermal_log_bound: bath Hamiltonian dimension mismatch");
    }
    const Index ds = system.dim();
    const Index db = bath.dim();
    const Matrix generator = beta * kron(Matrix::Identity(ds, ds), h_bath) -
                             kron(system.log(), Matrix::Identity(db, db));
    const Matrix g = commutator(drive.total_at(t), generator);
    const Matrix root = kron(system.sqrt(), bath.sqrt());
    return (g * root).squaredNorm() / 8.0;
}

}  // namespace qslbath
