#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "qslbath/bounds.hpp"
#include "qslbath/bruteforce.hpp"
#include "qslbath/closed_forms.hpp"
#include "qslbath/evolve.hpp"
#include "qslbath/ineq.hpp"
#include "qslbath/linalg.hpp"
#include "qslbath/models.hpp"
#include "qslbath/specfun.hpp"
#include "qslbath/states.hpp"
#include "qslbath/verify.hpp"
#include "qslbath/version.hpp"

namespace py = pybind11;
using namespace qslbath;

namespace {

BlochState bloch_from_args(double p, const std::array<double, 3>& axis) {
    return BlochState(p, axis);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Speed-limit bounds for open quantum systems coupled to thermal baths";
    m.attr("__version__") = std::string(kVersion);

    // ---- linalg ----
    m.def("herm_eig", [](const Matrix& a) {
        EigenDecomposition eig = herm_eig(a);
        return py::make_tuple(eig.eigenvalues, eig.eigenvectors);
    });
    m.def("matrix_sqrt_psd", &matrix_sqrt_psd);
    m.def("matrix_function", &matrix_function);
    m.def("commutator", &commutator);
    m.def("anticommutator", &anticommutator);
    m.def("kron", &kron);
    m.def("embed", [](const Matrix& op, const std::vector<Index>& dims, std::size_t site) {
        return embed(op, dims, site);
    });
    m.def("partial_trace", [](const Matrix& rho, Index dim_system, Index dim_bath,
                              const std::string& keep) {
        if (keep != "system" && keep != "bath") {
            throw std::invalid_argument("partial_trace: keep must be 'system' or 'bath'");
        }
        return partial_trace(rho, dim_system, dim_bath,
                             keep == "system" ? Keep::System : Keep::Bath);
    }, py::arg("rho"), py::arg("dim_system"), py::arg("dim_bath"), py::arg("keep") = "system");

    // ---- states ----
    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def(py::init<Matrix>())
        .def_static("pure", &DensityMatrix::pure)
        .def_property_readonly("matrix", &DensityMatrix::matrix)
        .def_property_readonly("sqrt", &DensityMatrix::sqrt)
        .def_property_readonly("eigenvalues", &DensityMatrix::eigenvalues)
        .def_property_readonly("eigenvectors", &DensityMatrix::eigenvectors)
        .def_property_readonly("dim", &DensityMatrix::dim)
        .def("log", &DensityMatrix::log);

    py::class_<BlochState>(m, "BlochState")
        .def(py::init(&bloch_from_args), py::arg("p"), py::arg("n"))
        .def_readonly("p", &BlochState::p)
        .def_readonly("n", &BlochState::axis)
        .def_property_readonly("pure", &BlochState::pure);

    m.def("thermal_state", &thermal_state, py::arg("h_bath"), py::arg("beta"));
    m.def("log_partition_function", &log_partition_function);
    m.def("bloch_state", &bloch_state);
    m.def("bloch_function", [](const std::function<double(double)>& f, const BlochState& state) {
        const BlochCoefficients c = bloch_function(f, state);
        return py::make_tuple(c.a, c.b);
    });
    m.def("hellinger_distance", &hellinger_distance);
    m.def("skew_information",
          py::overload_cast<const DensityMatrix&, const DensityMatrix&, const Matrix&>(
              &skew_information),
          py::arg("system"), py::arg("bath"), py::arg("drive"));
    m.def("skew_information_single",
          py::overload_cast<const DensityMatrix&, const Matrix&>(&skew_information));

    // ---- bounds ----
    py::class_<DriveSpec>(m, "DriveSpec")
        .def(py::init<Matrix, Matrix, std::vector<double>>(), py::arg("h_system"),
             py::arg("h_interaction"), py::arg("times"))
        .def_property_readonly("constant", &DriveSpec::constant)
        .def_property_readonly("system_dim", &DriveSpec::system_dim)
        .def_property_readonly("bath_dim", &DriveSpec::bath_dim)
        .def("total_at", &DriveSpec::total_at);

    py::class_<BoundCurve>(m, "BoundCurve")
        .def_readonly("times", &BoundCurve::times)
        .def_readonly("information", &BoundCurve::information)
        .def_readonly("phase", &BoundCurve::phase)
        .def_readonly("bound", &BoundCurve::bound)
        .def_readonly("t_max", &BoundCurve::t_max);

    m.def("bound_curve_from_information", &bound_curve_from_information);
    m.def("mds_curve", &mds_curve);
    m.def("relaxed_bound", &relaxed_bound, py::arg("drive"), py::arg("system"), py::arg("bath"),
          py::arg("c") = std::nullopt, py::arg("t") = 0.0);
    m.def("thermal_bound", &thermal_bound, py::arg("drive"), py::arg("system"), py::arg("bath"),
          py::arg("h_bath"), py::arg("beta"), py::arg("t") = 0.0);
    m.def("thermal_log_bound", &thermal_log_bound, py::arg("drive"), py::arg("system"),
          py::arg("bath"), py::arg("h_bath"), py::arg("beta"), py::arg("t") = 0.0);

    // ---- closed forms ----
    py::class_<BosonicBathSpec>(m, "BosonicBathSpec")
        .def(py::init<>())
        .def_readwrite("omega", &BosonicBathSpec::omega)
        .def_readwrite("g", &BosonicBathSpec::g)
        .def_readwrite("coupling", &BosonicBathSpec::coupling)
        .def_readwrite("gamma", &BosonicBathSpec::gamma);
    py::class_<SpinBathSpec>(m, "SpinBathSpec")
        .def(py::init<>())
        .def_readwrite("omega", &SpinBathSpec::omega)
        .def_readwrite("g", &SpinBathSpec::g)
        .def_readwrite("coupling", &SpinBathSpec::coupling)
        .def_readwrite("gamma", &SpinBathSpec::gamma);
    py::class_<OhmicSpectralDensity>(m, "OhmicSpectralDensity")
        .def(py::init<double>(), py::arg("alpha"))
        .def_readonly("alpha", &OhmicSpectralDensity::alpha)
        .def("__call__", &OhmicSpectralDensity::operator());
    py::class_<BoundCoefficients>(m, "BoundCoefficients")
        .def(py::init<>())
        .def_readwrite("k", &BoundCoefficients::k)
        .def_readwrite("m", &BoundCoefficients::m)
        .def_readwrite("l", &BoundCoefficients::l);
    py::class_<QubitBathBounds>(m, "QubitBathBounds")
        .def_readonly("relaxed", &QubitBathBounds::relaxed)
        .def_readonly("thermal", &QubitBathBounds::thermal)
        .def_readonly("thermal_log", &QubitBathBounds::thermal_log)
        .def_readonly("exact", &QubitBathBounds::exact);

    m.def("wy_bosonic", &wy_bosonic);
    m.def("wy_spin_bath", &wy_spin_bath);
    m.def("bch_conjugation_check", &bch_conjugation_check);
    m.def("ohmic_coefficients", &ohmic_coefficients);
    m.def("ohmic_coefficients_quadrature", &ohmic_coefficients_quadrature, py::arg("j"),
          py::arg("beta"), py::arg("tolerance") = 1e-10);
    m.def("discrete_bosonic_coefficients",
          [](const std::vector<double>& omega, const std::vector<Complex>& g, double beta) {
              return discrete_bosonic_coefficients(omega, g, beta);
          });
    m.def("spin_bath_coefficients",
          [](const std::vector<double>& omega, const std::vector<double>& g, double beta) {
              return spin_bath_coefficients(omega, g, beta);
          });
    m.def("spin_bath_coefficients_continuum", &spin_bath_coefficients_continuum);
    m.def("spin_bath_coefficients_continuum_quadrature", &spin_bath_coefficients_continuum_quadrature,
          py::arg("alpha"), py::arg("beta"), py::arg("tolerance") = 1e-10);
    py::class_<DiscreteBath>(m, "DiscreteBath")
        .def_readonly("omega", &DiscreteBath::omega)
        .def_readonly("g", &DiscreteBath::g);
    m.def("discretize_ohmic", &discretize_ohmic);
    m.def("polarization_coefficient_sq", &polarization_coefficient_sq);
    m.def("log_polarization_coefficient", &log_polarization_coefficient);
    m.def("qubit_bath_bounds", &qubit_bath_bounds, py::arg("delta"), py::arg("gamma"),
          py::arg("beta"), py::arg("polarization"), py::arg("coefficients"));

    // ---- special functions ----
    py::class_<QuadratureResult>(m, "QuadratureResult")
        .def_readonly("value", &QuadratureResult::value)
        .def_readonly("error_estimate", &QuadratureResult::error_estimate)
        .def_readonly("evaluations", &QuadratureResult::evaluations)
        .def_readonly("converged", &QuadratureResult::converged);
    m.def("polygamma", &polygamma, py::arg("order"), py::arg("z"));
    m.def("quad_semiinf", &quad_semiinf, py::arg("f"), py::arg("tolerance"),
          py::arg("scale") = 1.0);
    m.def("quad_finite", &quad_finite, py::arg("f"), py::arg("a"), py::arg("b"),
          py::arg("tolerance"));

    // ---- models / evolution ----
    m.def("pauli_x", &pauli_x);
    m.def("pauli_y", &pauli_y);
    m.def("pauli_z", &pauli_z);
    m.def("boson_annihilation", &boson_annihilation);
    m.def("boson_number", &boson_number);

    py::class_<CentralSpinModel>(m, "CentralSpinModel")
        .def_readonly("h_system", &CentralSpinModel::h_system)
        .def_readonly("h_bath", &CentralSpinModel::h_bath)
        .def_readonly("h_interaction", &CentralSpinModel::h_interaction);
    py::class_<SpinBosonModel>(m, "SpinBosonModel")
        .def_readonly("h_system", &SpinBosonModel::h_system)
        .def_readonly("h_bath", &SpinBosonModel::h_bath)
        .def_readonly("h_interaction", &SpinBosonModel::h_interaction)
        .def_readonly("bath_dim", &SpinBosonModel::bath_dim);
    m.def("build_central_spin",
          [](double delta, double gamma, const std::vector<double>& omega,
             const std::vector<double>& g) { return build_central_spin(delta, gamma, omega, g); });
    m.def("build_spin_boson_truncated",
          [](double delta, double gamma, const std::vector<double>& omega,
             const std::vector<double>& g, Index cutoff) {
              return build_spin_boson_truncated(delta, gamma, omega, g, cutoff);
          });

    py::class_<CentralSpinInstance>(m, "CentralSpinInstance")
        .def_static("sample", &CentralSpinInstance::sample, py::arg("bath_spins"),
                    py::arg("delta"), py::arg("gamma"), py::arg("beta"), py::arg("polarization"),
                    py::arg("seed"))
        .def_readonly("bath_spins", &CentralSpinInstance::bath_spins)
        .def_readonly("delta", &CentralSpinInstance::delta)
        .def_readonly("gamma", &CentralSpinInstance::gamma)
        .def_readonly("beta", &CentralSpinInstance::beta)
        .def_readonly("g", &CentralSpinInstance::g)
        .def_readonly("omega", &CentralSpinInstance::omega)
        .def_readonly("seed", &CentralSpinInstance::seed)
        .def("build", &CentralSpinInstance::build)
        .def("information", &CentralSpinInstance::information);

    m.def("evolve_constant",
          [](const Matrix& h, const DensityMatrix& rho0, const std::vector<double>& times) {
              return evolve_constant(h, rho0, times);
          });
    m.def("evolve_stepped",
          [](const std::function<Matrix(double)>& h, const DensityMatrix& rho0,
             const std::vector<double>& times) { return evolve_stepped(h, rho0, times); });

    py::class_<TrajectoryRecord>(m, "TrajectoryRecord")
        .def_readonly("times", &TrajectoryRecord::times)
        .def_readonly("hellinger", &TrajectoryRecord::hellinger)
        .def_readonly("reduced_hellinger", &TrajectoryRecord::reduced_hellinger)
        .def_readonly("phase", &TrajectoryRecord::phase)
        .def_readonly("bound", &TrajectoryRecord::bound)
        .def_readonly("t_max", &TrajectoryRecord::t_max)
        .def_readonly("information", &TrajectoryRecord::information)
        .def_readonly("seed", &TrajectoryRecord::seed);
    m.def("tightness_trajectory",
          [](const CentralSpinInstance& instance, const std::vector<double>& times) {
              return tightness_trajectory(instance, times);
          });
    m.def("default_time_grid", &default_time_grid, py::arg("instance"), py::arg("points") = 400,
          py::arg("span_factor") = 1.25);

    // ---- reference oracles ----
    m.def("wy_spin_boson_bruteforce",
          [](double delta, double gamma, const std::vector<double>& omega,
             const std::vector<double>& g, double beta, const BlochState& polarization,
             Index cutoff) {
              return wy_spin_boson_bruteforce(delta, gamma, omega, g, beta, polarization, cutoff);
          });
    m.def("wy_central_spin_bruteforce", &wy_central_spin_bruteforce);

    // ---- inequality lab ----
    m.def("check_lemma", &check_lemma);
    m.def("check_hermite_hadamard", &check_hermite_hadamard);
    m.def("check_commutator_relaxation", &check_commutator_relaxation);
    m.def("check_trace_pairing", &check_trace_pairing);
    py::class_<ProofChainSlacks>(m, "ProofChainSlacks")
        .def_readonly("split", &ProofChainSlacks::split)
        .def_readonly("eigenbasis_identity", &ProofChainSlacks::eigenbasis_identity)
        .def_readonly("lemma_step", &ProofChainSlacks::lemma_step)
        .def_readonly("thermal_end_to_end", &ProofChainSlacks::thermal_end_to_end)
        .def_readonly("log_chain_evaluated", &ProofChainSlacks::log_chain_evaluated)
        .def_readonly("log_identity", &ProofChainSlacks::log_identity)
        .def_readonly("log_lemma_step", &ProofChainSlacks::log_lemma_step)
        .def_readonly("log_end_to_end", &ProofChainSlacks::log_end_to_end);
    m.def("check_proof_chain", &check_proof_chain);

    py::class_<InequalityReport>(m, "InequalityReport")
        .def_readonly("name", &InequalityReport::name)
        .def_readonly("trials", &InequalityReport::trials)
        .def_readonly("max_violation", &InequalityReport::max_violation)
        .def_readonly("threshold", &InequalityReport::threshold)
        .def("passed", &InequalityReport::passed)
        .def_property_readonly("worst_case",
                               [](const InequalityReport& r) { return r.worst_case.dump(); });
    m.def("run_lemma_suite", &run_lemma_suite);
    m.def("run_hermite_hadamard_suite", &run_hermite_hadamard_suite);
    m.def("run_commutator_suite", &run_commutator_suite);
    m.def("run_trace_pairing_suite", &run_trace_pairing_suite);
    m.def("run_proof_chain_suite", &run_proof_chain_suite);
}
