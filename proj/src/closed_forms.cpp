#include "qslbath/closed_forms.hpp"

#include "qslbath/models.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qslbath {

void BosonicBathSpec::validate() const {
    if (omega.size() != g.size() || omega.size() != coupling.size() || omega.empty()) {
        throw std::invalid_argument("BosonicBathSpec: omega, g and coupling must have equal size");
    }
    for (double w : omega) {
        if (!(w > 0.0)) throw std::invalid_argument("BosonicBathSpec: mode energies must be > 0");
    }
    const Index dim = coupling.front().rows();
    for (const Matrix& s : coupling) {
        if (s.rows() != dim || s.cols() != dim) {
            throw std::invalid_argument("BosonicBathSpec: coupling operators must share one dimension");
        }
    }
}

void SpinBathSpec::validate() const {
    if (omega.size() != g.size() || omega.size() != coupling.size() || omega.empty()) {
        throw std::invalid_argument("SpinBathSpec: omega, g and coupling must have equal size");
    }
    const Index dim = coupling.front().rows();
    for (const Matrix& s : coupling) {
        if (s.rows() != dim || s.cols() != dim || !is_hermitian(s)) {
            throw std::invalid_argument("SpinBathSpec: coupling operators must be Hermitian");
        }
    }
}

OhmicSpectralDensity::OhmicSpectralDensity(double alpha_in) : alpha(alpha_in) {
    if (!(alpha > 0.0)) {
        throw std::invalid_argument("OhmicSpectralDensity: alpha must be positive");
    }
}

double OhmicSpectralDensity::operator()(double omega) const {
    return omega * std::exp(-alpha * omega);
}

double wy_bosonic(const BosonicBathSpec& spec, const Matrix& h_system, const DensityMatrix& system,
                  double beta) {
    spec.validate();
    if (!(beta > 0.0)) {
        throw std::invalid_argument("wy_bosonic: beta must be positive (Bose weights diverge)");
    }
    if (h_system.rows() != system.dim() || spec.coupling.front().rows() != system.dim()) {
        throw std::invalid_argument("wy_bosonic: operator dimensions do not match the state");
    }
    const Matrix& root = system.sqrt();
    const double n = static_cast<double>(spec.modes());
    const Matrix c = commutator(h_system, root);
    double result = 0.5 * c.squaredNorm();
    const double g2 = spec.gamma * spec.gamma;
    for (std::size_t k = 0; k < spec.modes(); ++k) {
        const double weight = g2 * std::norm(spec.g[k]) / n;
        const double x = beta * spec.omega[k];
        const Matrix& s = spec.coupling[k];
        const Matrix sdag = s.adjoint();
        // (e^x S^dag S + S S^dag) / (e^x - 1) traced against rho, written with
        // expm1 so moderate x stays accurate.
        const double bose = 1.0 / std::expm1(x);
        const Matrix quadratic = (1.0 + bose) * sdag * s + bose * s * sdag;
        result += weight * (quadratic * system.matrix()).trace().real();
        result -= weight / std::sinh(0.5 * x) * (sdag * root * s * root).trace().real();
    }
    return result;
}

double wy_spin_bath(const SpinBathSpec& spec, const Matrix& h_system, const DensityMatrix& system,
                    double beta) {
    spec.validate();
    if (beta < 0.0) throw std::invalid_argument("wy_spin_bath: beta must be nonnegative");
    if (h_system.rows() != system.dim() || spec.coupling.front().rows() != system.dim()) {
        throw std::invalid_argument("wy_spin_bath: operator dimensions do not match the state");
    }
    const Matrix& root = system.sqrt();
    const double n = static_cast<double>(spec.spins());
    const Matrix c = commutator(h_system, root);
    double result = 0.5 * c.squaredNorm();
    const double g2 = spec.gamma * spec.gamma;
    for (std::size_t j = 0; j < spec.spins(); ++j) {
        const double weight = g2 * spec.g[j] * spec.g[j] / n;
        const Matrix& s = spec.coupling[j];
        result += weight * (s * s * system.matrix()).trace().real();
        result -= weight / std::cosh(0.5 * beta * spec.omega[j]) *
                  (s * root * s * root).trace().real();
    }
    return result;
}

double bch_conjugation_check(double omega, double beta, Index cutoff) {
    if (cutoff < 2) throw std::invalid_argument("bch_conjugation_check: cutoff must be >= 2");
    const Matrix b = boson_annihilation(cutoff);
    const Matrix number = boson_number(cutoff);
    RealVector energies = omega * number.diagonal().real();
    Matrix left(cutoff, cutoff);
    for (Index i = 0; i < cutoff; ++i) {
        for (Index j = 0; j < cutoff; ++j) {
            left(i, j) = std::exp(-0.5 * beta * (energies(i) - energies(j))) * b(i, j);
        }
    }
    const Matrix right = std::exp(0.5 * beta * omega) * b;
    return (left - right).cwiseAbs().maxCoeff();
}

namespace {

// Integrands of the three thermal integrals, in overflow-safe hyperbolic
// form: (e^x + 1)/(e^x - 1) = coth(x/2) and e^{x/2}/(e^x - 1) = 1/(2 sinh(x/2)).
double coth_weight(double x) {
    if (x > 700.0) return 1.0;
    return 1.0 / std::tanh(0.5 * x);
}

double inv_two_sinh(double x) {
    if (x > 1400.0) return 0.0;
    if (x > 40.0) return std::exp(-0.5 * x);
    return 0.5 / std::sinh(0.5 * x);
}

BoundCoefficients quadrature_coefficients(const std::function<double(double)>& k_integrand,
                                          const std::function<double(double)>& m_integrand,
                                          const std::function<double(double)>& l_integrand,
                                          double scale, double tolerance, const char* who) {
    BoundCoefficients out;
    const std::pair<const std::function<double(double)>&, double*> parts[] = {
        {k_integrand, &out.k}, {m_integrand, &out.m}, {l_integrand, &out.l}};
    for (const auto& [integrand, slot] : parts) {
        const QuadratureResult r = quad_semiinf(integrand, tolerance, scale);
        if (!r.converged) {
            std::ostringstream msg;
            msg << who << ": quadrature did not converge, error estimate " << r.error_estimate
                << " after " << r.evaluations << " evaluations";
            throw std::runtime_error(msg.str());
        }
        *slot = r.value;
    }
    return out;
}

}  // namespace

BoundCoefficients ohmic_coefficients(const OhmicSpectralDensity& j, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("ohmic_coefficients: beta must be positive");
    const double ratio = j.alpha / beta;
    const double b2a2 = (beta / j.alpha) * (beta / j.alpha);
    return {2.0 * polygamma(1, ratio) - b2a2,
            2.0 * polygamma(3, ratio) - 6.0 * b2a2 * b2a2,
            polygamma(1, ratio + 0.5)};
}

BoundCoefficients ohmic_coefficients_quadrature(const OhmicSpectralDensity& j, double beta,
                                                double tolerance) {
    if (!(beta > 0.0)) {
        throw std::invalid_argument("ohmic_coefficients_quadrature: beta must be positive");
    }
    const double b2 = beta * beta;
    const auto k = [&](double w) { return b2 * j(w) * coth_weight(beta * w); };
    const auto m = [&](double w) { return b2 * b2 * w * w * j(w) * coth_weight(beta * w); };
    const auto l = [&](double w) { return b2 * j(w) * inv_two_sinh(beta * w); };
    const double scale = std::max(1.0 / beta, 1.0 / j.alpha);
    return quadrature_coefficients(k, m, l, scale, tolerance, "ohmic_coefficients_quadrature");
}

BoundCoefficients discrete_bosonic_coefficients(std::span<const double> omega,
                                                std::span<const Complex> g, double beta) {
    if (omega.size() != g.size() || omega.empty()) {
        throw std::invalid_argument("discrete_bosonic_coefficients: size mismatch");
    }
    if (!(beta > 0.0)) {
        throw std::invalid_argument("discrete_bosonic_coefficients: beta must be positive");
    }
    const double n = static_cast<double>(omega.size());
    BoundCoefficients out;
    for (std::size_t i = 0; i < omega.size(); ++i) {
        const double g2 = std::norm(g[i]) / n;
        const double x = beta * omega[i];
        out.k += beta * beta * g2 * coth_weight(x);
        out.m += beta * beta * beta * beta * g2 * omega[i] * omega[i] * coth_weight(x);
        out.l += beta * beta * g2 * inv_two_sinh(x);
    }
    return out;
}

BoundCoefficients spin_bath_coefficients(std::span<const double> omega, std::span<const double> g,
                                         double beta) {
    if (omega.size() != g.size() || omega.empty()) {
        throw std::invalid_argument("spin_bath_coefficients: size mismatch");
    }
    if (beta < 0.0) throw std::invalid_argument("spin_bath_coefficients: beta must be >= 0");
    const double n = static_cast<double>(omega.size());
    BoundCoefficients out;
    for (std::size_t j = 0; j < omega.size(); ++j) {
        const double g2 = g[j] * g[j] / n;
        out.k += beta * beta * g2;
        out.m += beta * beta * beta * beta * g2 * omega[j] * omega[j];
        out.l += beta * beta * g2 * 0.5 / std::cosh(0.5 * beta * omega[j]);
    }
    return out;
}

BoundCoefficients spin_bath_coefficients_continuum(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw std::invalid_argument("spin_bath_coefficients_continuum: alpha, beta must be > 0");
    }
    const double b2a2 = (beta / alpha) * (beta / alpha);
    const double shift = 0.5 * alpha / beta;
    return {b2a2, 6.0 * b2a2 * b2a2,
            0.25 * (polygamma(1, 0.25 + shift) - polygamma(1, 0.75 + shift))};
}

BoundCoefficients spin_bath_coefficients_continuum_quadrature(double alpha, double beta,
                                                              double tolerance) {
    const OhmicSpectralDensity j(alpha);
    if (!(beta > 0.0)) {
        throw std::invalid_argument("spin_bath_coefficients_continuum_quadrature: beta must be > 0");
    }
    const double b2 = beta * beta;
    const auto k = [&](double w) { return b2 * j(w); };
    const auto m = [&](double w) { return b2 * b2 * w * w * j(w); };
    const auto l = [&](double w) {
        const double x = 0.5 * beta * w;
        return b2 * j(w) * (x > 700.0 ? 0.0 : 0.5 / std::cosh(x));
    };
    const double scale = std::max(1.0 / beta, 1.0 / alpha);
    return quadrature_coefficients(k, m, l, scale, tolerance,
                                   "spin_bath_coefficients_continuum_quadrature");
}

DiscreteBath discretize_ohmic(const OhmicSpectralDensity& j, std::size_t modes, double omega_max) {
    if (modes == 0 || !(omega_max > 0.0)) {
        throw std::invalid_argument("discretize_ohmic: need modes > 0 and omega_max > 0");
    }
    DiscreteBath bath;
    bath.omega.resize(modes);
    bath.g.resize(modes);
    const double domega = omega_max / static_cast<double>(modes);
    for (std::size_t k = 0; k < modes; ++k) {
        const double w = (static_cast<double>(k) + 0.5) * domega;
        bath.omega[k] = w;
        bath.g[k] = std::sqrt(static_cast<double>(modes) * j(w) * domega);
    }
    return bath;
}

double polarization_coefficient_sq(double p) {
    if (!(p >= 0.0) || p > 1.0) {
        throw std::invalid_argument("polarization_coefficient_sq: p must lie in [0, 1]");
    }
    return 0.25 * (1.0 - std::sqrt(std::max(0.0, 1.0 - p * p)));
}

double log_polarization_coefficient(double p) {
    if (!(p >= 0.0) || p >= 1.0) {
        throw std::invalid_argument(
            "log_polarization_coefficient: defined for p in [0, 1) only, got " + std::to_string(p));
    }
    return 0.5 * std::log((1.0 + p) / (1.0 - p));
}

QubitBathBounds qubit_bath_bounds(double delta, double gamma, double beta,
                                  const BlochState& polarization,
                                  const BoundCoefficients& coefficients) {
    if (!(beta > 0.0)) throw std::invalid_argument("qubit_bath_bounds: beta must be positive");
    const double p = polarization.p;
    const double nx2 = polarization.axis[0] * polarization.axis[0];
    const double nz2 = polarization.axis[2] * polarization.axis[2];
    const double pz = p * polarization.axis[2];
    const double bp2 = polarization_coefficient_sq(p);
    const double g2b2 = gamma * gamma / (beta * beta);
    const double d2 = delta * delta;

    QubitBathBounds out;
    out.relaxed = 0.25 * (1.0 - pz * pz) * d2 + g2b2 * coefficients.k;
    out.thermal = 0.25 * g2b2 * coefficients.m + 2.0 * d2 * bp2 * (1.0 - nz2) +
                  8.0 * bp2 * (1.0 - nx2) * g2b2 * coefficients.k;
    out.exact = d2 * bp2 * (1.0 - nz2) + g2b2 * coefficients.k -
                2.0 * g2b2 * coefficients.l * (1.0 - 4.0 * bp2 * (1.0 - nx2));
    if (p < 1.0) {
        const double tb = log_polarization_coefficient(p);
        const double tb2 = tb * tb;
        out.thermal_log = 0.125 * g2b2 * coefficients.m + 0.125 * d2 * tb2 * (1.0 - nz2) +
                          0.5 * tb2 * (1.0 - nx2) * g2b2 * coefficients.k;
    }
    return out;
}

}  // namespace qslbath
