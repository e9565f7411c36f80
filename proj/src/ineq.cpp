#include "qslbath/ineq.hpp"

#include "qslbath/rng.hpp"
#include "qslbath/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace qslbath {

double ProofChainSlacks::worst_relative() const {
    double worst = std::min({split, lemma_step, thermal_end_to_end});
    if (log_chain_evaluated) {
        worst = std::min({worst, log_lemma_step, log_end_to_end});
    }
    worst /= scale;
    worst = std::min(worst, -eigenbasis_identity);
    if (log_chain_evaluated) worst = std::min(worst, -log_identity);
    return worst;
}

double check_lemma(double x, double y) {
    const double lhs = std::pow(std::exp(-x) - std::exp(-y), 2);
    const double rhs = 0.5 * (std::exp(-2.0 * x) + std::exp(-2.0 * y)) * (x - y) * (x - y);
    return rhs - lhs;
}

double check_hermite_hadamard(const std::function<double(double)>& f, double a, double b) {
    if (!(b >= a)) throw std::invalid_argument("check_hermite_hadamard: requires a <= b");
    const QuadratureResult integral = quad_finite(f, a, b, 1e-12);
    return 0.5 * (f(a) + f(b)) * (b - a) - integral.value;
}

double check_commutator_relaxation(const Matrix& a, const DensityMatrix& rho, double c) {
    if (a.rows() != rho.dim()) {
        throw std::invalid_argument("check_commutator_relaxation: dimension mismatch");
    }
    const Matrix comm = a * rho.sqrt() - rho.sqrt() * a;
    const double lhs = comm.squaredNorm();
    Matrix centered = a;
    centered.diagonal().array() -= c;
    const double rhs = 2.0 * (centered * rho.sqrt()).squaredNorm();
    return rhs - lhs;
}

double check_trace_pairing(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("check_trace_pairing: dimension mismatch");
    }
    const double cross = 2.0 * (a.adjoint() * b).trace().real();
    return a.squaredNorm() + b.squaredNorm() - cross;
}

namespace {

struct ChainWorkspace {
    Matrix h_total;            // composite drive
    Matrix sqrt_s_embedded;    // sqrt(rho_S) x 1
    Matrix sqrt_b_embedded;    // 1 x sqrt(rho_B)
    Matrix root_product;       // sqrt(rho_S) x sqrt(rho_B)
    RealVector bath_energies;  // ascending
    Matrix bath_vectors;
};

ChainWorkspace make_workspace(const Matrix& h_system, const Matrix& h_interaction,
                              const DensityMatrix& system, const Matrix& h_bath, double beta) {
    const Index ds = system.dim();
    const EigenDecomposition bath_eig = herm_eig(h_bath);
    const Index db = h_bath.rows();
    if (h_interaction.rows() != ds * db || h_system.rows() != ds) {
        throw std::invalid_argument("check_proof_chain: dimension mismatch");
    }
    // sqrt(rho_B) straight from the bath eigendecomposition; rebuilding the
    // thermal matrix and re-diagonalizing would halve the precision of the
    // near-null thermal directions at large beta.
    RealVector root_weights(db);
    const double ground = bath_eig.eigenvalues(0);
    double z = 0.0;
    for (Index m = 0; m < db; ++m) {
        const double weight = std::exp(-beta * (bath_eig.eigenvalues(m) - ground));
        root_weights(m) = std::sqrt(weight);
        z += weight;
    }
    root_weights /= std::sqrt(z);
    const Matrix sqrt_bath =
        bath_eig.eigenvectors * root_weights.asDiagonal() * bath_eig.eigenvectors.adjoint();
    ChainWorkspace w{
        kron(h_system, Matrix::Identity(db, db)) + h_interaction,
        kron(system.sqrt(), Matrix::Identity(db, db)),
        kron(Matrix::Identity(ds, ds), sqrt_bath),
        kron(system.sqrt(), sqrt_bath),
        bath_eig.eigenvalues,
        bath_eig.eigenvectors,
    };
    return w;
}

}  // namespace

ProofChainSlacks check_proof_chain(const Matrix& h_system, const Matrix& h_interaction,
                                   const DensityMatrix& system, const Matrix& h_bath, double beta) {
    if (beta < 0.0) throw std::invalid_argument("check_proof_chain: beta must be nonnegative");
    const Index ds = system.dim();
    const Index db = h_bath.rows();
    ChainWorkspace w = make_workspace(h_system, h_interaction, system, h_bath, beta);

    // two_i = -tr [H, sqrt(rho_S rho_B)]^2.
    const Matrix full_comm = w.h_total * w.root_product - w.root_product * w.h_total;
    const double two_i = full_comm.squaredNorm();

    // Split into the bath-root and system-root commutators.
    const Matrix comm_bath = h_interaction * w.sqrt_b_embedded - w.sqrt_b_embedded * h_interaction;
    const double bath_term = (comm_bath * w.sqrt_s_embedded).squaredNorm();
    const Matrix comm_system = w.h_total * w.sqrt_s_embedded - w.sqrt_s_embedded * w.h_total;
    const double system_term = (comm_system * w.sqrt_b_embedded).squaredNorm();
    ProofChainSlacks slacks{};
    slacks.split = 2.0 * (bath_term + system_term) - two_i;

    // Eigenbasis expansion of the bath term. Energies are shifted by the
    // ground state; the weights (e^{-b E_m / 2} - e^{-b E_n / 2})^2 / Z are
    // shift-invariant.
    const Matrix q = kron(system.eigenvectors(), w.bath_vectors);
    const Matrix h_int_eigbasis = q.adjoint() * h_interaction * q;
    const double ground = w.bath_energies(0);
    double z_bath = 0.0;
    for (Index m = 0; m < db; ++m) z_bath += std::exp(-beta * (w.bath_energies(m) - ground));
    double eigen_sum = 0.0;
    for (Index mu = 0; mu < ds; ++mu) {
        for (Index nu = 0; nu < ds; ++nu) {
            const double weight_pair = system.eigenvalues()(mu) + system.eigenvalues()(nu);
            for (Index m = 0; m < db; ++m) {
                const double em = w.bath_energies(m) - ground;
                for (Index n = 0; n < db; ++n) {
                    const double en = w.bath_energies(n) - ground;
                    const double gap = std::exp(-0.5 * beta * em) - std::exp(-0.5 * beta * en);
                    eigen_sum += gap * gap * weight_pair *
                                 std::norm(h_int_eigbasis(mu * db + m, nu * db + n));
                }
            }
        }
    }
    eigen_sum /= 2.0 * z_bath;
    // Identity deviations are relative to the magnitude of the quantity.
    slacks.eigenbasis_identity = std::abs(eigen_sum - bath_term) / std::max(1.0, bath_term);

    // Lemma applied to the thermal factors: the bath term is at most the
    // anticommutator expression entering the temperature-explicit bound.
    const Matrix h_bath_embedded = kron(Matrix::Identity(ds, ds), h_bath);
    const Matrix c = h_interaction * h_bath_embedded - h_bath_embedded * h_interaction;
    const double lemma_rhs =
        beta * beta / 8.0 *
        ((w.sqrt_b_embedded * c * w.sqrt_s_embedded).squaredNorm() +
         (c * w.sqrt_s_embedded * w.sqrt_b_embedded).squaredNorm());
    slacks.lemma_step = lemma_rhs - bath_term;

    const double information = 0.5 * two_i;
    slacks.thermal_end_to_end = (lemma_rhs + system_term) - information;

    slacks.log_chain_evaluated = system.eigenvalues()(0) > tol::psd_clamp;
    if (slacks.log_chain_evaluated) {
        // 2I expanded in the product eigenbasis with weights
        // (e^{-b E_n / 2} sqrt(w_nu) - e^{-b E_m / 2} sqrt(w_mu))^2 / Z.
        const Matrix h_total_eigbasis = q.adjoint() * w.h_total * q;
        double log_sum = 0.0;
        for (Index mu = 0; mu < ds; ++mu) {
            const double w_mu = std::max(system.eigenvalues()(mu), 0.0);
            for (Index nu = 0; nu < ds; ++nu) {
                const double w_nu = std::max(system.eigenvalues()(nu), 0.0);
                for (Index m = 0; m < db; ++m) {
                    const double em = w.bath_energies(m) - ground;
                    for (Index n = 0; n < db; ++n) {
                        const double en = w.bath_energies(n) - ground;
                        const double gap = std::exp(-0.5 * beta * en) * std::sqrt(w_nu) -
                                           std::exp(-0.5 * beta * em) * std::sqrt(w_mu);
                        log_sum += gap * gap *
                                   std::norm(h_total_eigbasis(mu * db + m, nu * db + n));
                    }
                }
            }
        }
        log_sum /= z_bath;
        slacks.log_identity = std::abs(log_sum - two_i) / std::max(1.0, two_i);

        const Matrix generator = beta * h_bath_embedded -
                                 kron(system.log(), Matrix::Identity(db, db));
        const Matrix g = w.h_total * generator - generator * w.h_total;
        const double log_rhs = 0.25 * (g * w.root_product).squaredNorm();
        slacks.log_lemma_step = log_rhs - two_i;
        slacks.log_end_to_end = 0.5 * log_rhs - information;
        slacks.scale = std::max({1.0, two_i, lemma_rhs + system_term, log_rhs});
    } else {
        slacks.log_identity = 0.0;
        slacks.log_lemma_step = 0.0;
        slacks.log_end_to_end = 0.0;
        slacks.scale = std::max({1.0, two_i, lemma_rhs + system_term});
    }
    return slacks;
}

namespace {

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Index j = 0; j < m.cols(); ++j) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const nlohmann::json& rows) {
    const Index n = static_cast<Index>(rows.size());
    Matrix m(n, static_cast<Index>(rows.at(0).size()));
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            const auto& cell = rows.at(i).at(j);
            m(i, j) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
        }
    }
    return m;
}

template <typename Generator, typename Evaluate>
InequalityReport run_suite(const std::string& name, long trials, std::uint64_t seed,
                           double threshold, Generator&& generate, Evaluate&& evaluate) {
    InequalityReport report;
    report.name = name;
    report.trials = trials;
    report.threshold = threshold;
    Rng rng(seed);
    for (long trial = 0; trial < trials; ++trial) {
        auto inputs = generate(rng);
        const double slack = evaluate(inputs);
        const double violation = std::max(0.0, -slack);
        if (trial == 0 || violation > report.max_violation) {
            report.max_violation = violation;
            report.worst_case = inputs;
            report.worst_case["check"] = name;
            report.worst_case["slack"] = slack;
        }
    }
    return report;
}

}  // namespace

InequalityReport run_lemma_suite(long trials, std::uint64_t seed) {
    return run_suite(
        "lemma", trials, seed, 1e-12,
        [](Rng& rng) {
            return nlohmann::json{{"x", rng.uniform(-5.0, 5.0)}, {"y", rng.uniform(-5.0, 5.0)}};
        },
        [](const nlohmann::json& in) {
            return check_lemma(in.at("x").get<double>(), in.at("y").get<double>());
        });
}

InequalityReport run_hermite_hadamard_suite(long trials, std::uint64_t seed) {
    // Convex family t -> exp(s t) + q t^2 with s in [-2, 2], q in [0, 2].
    return run_suite(
        "hermite_hadamard", trials, seed, 1e-10,
        [](Rng& rng) {
            const double a = rng.uniform(-2.0, 2.0);
            return nlohmann::json{{"s", rng.uniform(-2.0, 2.0)},
                                  {"q", rng.uniform(0.0, 2.0)},
                                  {"a", a},
                                  {"b", a + rng.uniform(0.0, 3.0)}};
        },
        [](const nlohmann::json& in) {
            const double s = in.at("s").get<double>();
            const double q = in.at("q").get<double>();
            const auto f = [s, q](double t) { return std::exp(s * t) + q * t * t; };
            return check_hermite_hadamard(f, in.at("a").get<double>(), in.at("b").get<double>());
        });
}

InequalityReport run_commutator_suite(long trials, std::uint64_t seed) {
    return run_suite(
        "commutator_relaxation", trials, seed, 1e-10,
        [](Rng& rng) {
            const Index dims[] = {2, 4, 8};
            const Index dim = dims[rng.raw() % 3];
            const Matrix a = rng.hermitian(dim);
            const Matrix rho = rng.density(dim);
            const double pick = rng.uniform();
            const double c = pick < 0.5 ? 0.0 : (a * rho).trace().real();
            return nlohmann::json{
                {"a", matrix_to_json(a)}, {"rho", matrix_to_json(rho)}, {"c", c}};
        },
        [](const nlohmann::json& in) {
            const Matrix a = matrix_from_json(in.at("a"));
            const DensityMatrix rho(matrix_from_json(in.at("rho")));
            return check_commutator_relaxation(a, rho, in.at("c").get<double>());
        });
}

InequalityReport run_trace_pairing_suite(long trials, std::uint64_t seed) {
    return run_suite(
        "trace_pairing", trials, seed, 1e-12,
        [](Rng& rng) {
            const Index dims[] = {2, 4, 8};
            const Index dim = dims[rng.raw() % 3];
            Matrix a(dim, dim), b(dim, dim);
            for (Index i = 0; i < dim; ++i) {
                for (Index j = 0; j < dim; ++j) {
                    a(i, j) = rng.complex_gaussian();
                    b(i, j) = rng.complex_gaussian();
                }
            }
            return nlohmann::json{{"a", matrix_to_json(a)}, {"b", matrix_to_json(b)}};
        },
        [](const nlohmann::json& in) {
            return check_trace_pairing(matrix_from_json(in.at("a")),
                                       matrix_from_json(in.at("b")));
        });
}

InequalityReport run_proof_chain_suite(long instances, std::uint64_t seed) {
    return run_suite(
        "proof_chain", instances, seed, 1e-9,
        [](Rng& rng) {
            const Index ds = 2;
            const Index db = 2 + static_cast<Index>(rng.raw() % 7);  // up to 8
            return nlohmann::json{{"h_system", matrix_to_json(rng.hermitian(ds))},
                                  {"h_interaction", matrix_to_json(rng.hermitian(ds * db))},
                                  {"rho_system", matrix_to_json(rng.density(ds))},
                                  {"h_bath", matrix_to_json(rng.hermitian(db))},
                                  {"beta", rng.uniform(0.0, 4.0)}};
        },
        [](const nlohmann::json& in) {
            const ProofChainSlacks slacks = check_proof_chain(
                matrix_from_json(in.at("h_system")), matrix_from_json(in.at("h_interaction")),
                DensityMatrix(matrix_from_json(in.at("rho_system"))),
                matrix_from_json(in.at("h_bath")), in.at("beta").get<double>());
            return slacks.worst_relative();
        });
}

double replay_worst_case(const nlohmann::json& worst_case) {
    const std::string check = worst_case.at("check").get<std::string>();
    if (check == "lemma") {
        return check_lemma(worst_case.at("x").get<double>(), worst_case.at("y").get<double>());
    }
    if (check == "hermite_hadamard") {
        const double s = worst_case.at("s").get<double>();
        const double q = worst_case.at("q").get<double>();
        const auto f = [s, q](double t) { return std::exp(s * t) + q * t * t; };
        return check_hermite_hadamard(f, worst_case.at("a").get<double>(),
                                      worst_case.at("b").get<double>());
    }
    if (check == "commutator_relaxation") {
        return check_commutator_relaxation(matrix_from_json(worst_case.at("a")),
                                           DensityMatrix(matrix_from_json(worst_case.at("rho"))),
                                           worst_case.at("c").get<double>());
    }
    if (check == "trace_pairing") {
        return check_trace_pairing(matrix_from_json(worst_case.at("a")),
                                   matrix_from_json(worst_case.at("b")));
    }
    if (check == "proof_chain") {
        const ProofChainSlacks slacks = check_proof_chain(
            matrix_from_json(worst_case.at("h_system")),
            matrix_from_json(worst_case.at("h_interaction")),
            DensityMatrix(matrix_from_json(worst_case.at("rho_system"))),
            matrix_from_json(worst_case.at("h_bath")), worst_case.at("beta").get<double>());
        return slacks.worst_relative();
    }
    throw std::invalid_argument("replay_worst_case: unknown check name '" + check + "'");
}

}  // namespace qslbath
