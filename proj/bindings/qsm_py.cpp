#include "qsm/dynamics.hpp"
#include "qsm/theta_gaussian.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

std::vector<double> lattice_returns(const qsm::GridSpec& grid)
{
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(grid.d));
    for (int n = -grid.q; n <= grid.q; ++n) {
        values.push_back(grid.value(n));
    }
    return values;
}

} // namespace

PYBIND11_MODULE(_qsm, m)
{
    m.doc() = "Finite-dimensional quantum model of a price-limited stock market";

    py::register_exception<qsm::NumericError>(m, "NumericError", PyExc_ArithmeticError);
    py::register_exception<qsm::InvalidArgument>(m, "InvalidArgumentError", PyExc_ValueError);
    py::register_exception<qsm::DimensionMismatch>(m, "DimensionMismatchError", PyExc_ValueError);
    py::register_exception<qsm::NormalizationError>(m, "NormalizationError", PyExc_ValueError);

    py::class_<qsm::GridSpec>(m, "GridSpec")
        .def_readonly("q", &qsm::GridSpec::q)
        .def_readonly("d", &qsm::GridSpec::d)
        .def("value", &qsm::GridSpec::value, py::arg("n"))
        .def("contains", &qsm::GridSpec::contains, py::arg("n"))
        .def("returns", &lattice_returns, "Lattice values n/100 in order n = -q..q")
        .def("__eq__", [](const qsm::GridSpec& a, const qsm::GridSpec& b) { return a == b; })
        .def("__repr__", [](const qsm::GridSpec& g) {
            return "GridSpec(q=" + std::to_string(g.q) + ", d=" + std::to_string(g.d) + ")";
        });

    m.def("make_grid", &qsm::make_grid, py::arg("q"));

    py::class_<qsm::StateVector>(m, "StateVector")
        .def(py::init<qsm::GridSpec, qsm::Vector>(), py::arg("grid"), py::arg("amplitudes"))
        .def_readonly("grid", &qsm::StateVector::grid)
        .def_readonly("amplitudes", &qsm::StateVector::amplitudes)
        .def("norm", &qsm::StateVector::norm)
        .def("__len__", &qsm::StateVector::size)
        .def("__getitem__",
             [](const qsm::StateVector& s, int n) {
                 if (!s.grid.contains(n)) {
                     throw py::index_error("lattice index out of range");
                 }
                 return s(n);
             },
             py::arg("n"), "Amplitude at signed lattice index n");

    m.def("zero_state", &qsm::zero_state, py::arg("grid"));
    m.def("basis_state", &qsm::basis_state, py::arg("grid"), py::arg("n"));
    m.def("trend_basis_state", &qsm::trend_basis_state, py::arg("grid"), py::arg("n"));
    m.def("inner_product", &qsm::inner_product, py::arg("a"), py::arg("b"));
    m.def("normalize", &qsm::normalize, py::arg("psi"));
    m.def("is_normalized", &qsm::is_normalized, py::arg("psi"), py::arg("tol") = 1e-10);
    m.def("probabilities", &qsm::probabilities, py::arg("psi"));

    m.def("dft_matrix", &qsm::dft_matrix, py::arg("grid"));
    m.def("dft_inverse_matrix", &qsm::dft_inverse_matrix, py::arg("grid"));
    m.def("dft_forward", &qsm::dft_forward, py::arg("psi"));
    m.def("dft_inverse", &qsm::dft_inverse, py::arg("psi"));

    py::class_<qsm::HermitianOperator>(m, "HermitianOperator")
        .def(py::init<qsm::GridSpec, qsm::Matrix, double>(), py::arg("grid"), py::arg("entries"),
             py::arg("tol") = qsm::HermitianOperator::kHermiticityTol)
        .def_property_readonly("grid", &qsm::HermitianOperator::grid)
        .def_property_readonly("entries", &qsm::HermitianOperator::entries)
        .def("entry", &qsm::HermitianOperator::entry, py::arg("n"), py::arg("m"))
        .def("apply", &qsm::HermitianOperator::apply, py::arg("psi"));

    py::class_<qsm::EigenSystem>(m, "EigenSystem")
        .def_readonly("eigenvalues", &qsm::EigenSystem::eigenvalues)
        .def_readonly("eigenvectors", &qsm::EigenSystem::eigenvectors);

    m.def("rate_of_return_operator", &qsm::rate_of_return_operator, py::arg("grid"));
    m.def("trend_operator", &qsm::trend_operator, py::arg("grid"));
    m.def("price_operator", &qsm::price_operator, py::arg("grid"), py::arg("p0"));
    m.def("expectation", &qsm::expectation, py::arg("op"), py::arg("psi"));
    m.def("eigendecompose", &qsm::eigendecompose, py::arg("op"));

    m.def(
        "g_alpha",
        [](const qsm::GridSpec& grid, double alpha, int n, double truncation_tol) {
            return qsm::g_alpha(qsm::ThetaGaussianSpec{alpha, grid, truncation_tol}, n);
        },
        py::arg("grid"), py::arg("alpha"), py::arg("n"), py::arg("truncation_tol") = 1e-16,
        "Theta lattice sum g_alpha(n/100)");
    m.def(
        "gaussian_state",
        [](const qsm::GridSpec& grid, double alpha, double truncation_tol) {
            return qsm::gaussian_state(qsm::ThetaGaussianSpec{alpha, grid, truncation_tol});
        },
        py::arg("grid"), py::arg("alpha"), py::arg("truncation_tol") = 1e-16,
        "Normalized equilibrium state gamma_alpha");
    m.def("check_ruzzi", &qsm::check_ruzzi, py::arg("alpha"), py::arg("grid"),
          "Max deviation of F[g_alpha] from g_{1/alpha}/sqrt(alpha)");

    py::enum_<qsm::IntegrationMethod>(m, "IntegrationMethod")
        .value("unitary_midpoint", qsm::IntegrationMethod::unitary_midpoint)
        .value("rk4", qsm::IntegrationMethod::rk4);

    py::class_<qsm::EvolutionParams>(m, "EvolutionParams")
        .def(py::init([](double mu, double beta, double omega, double dt,
                         qsm::IntegrationMethod method) {
                 return qsm::EvolutionParams{mu, beta, omega, dt, method};
             }),
             py::arg("mu") = 1.0, py::arg("beta") = 0.0, py::arg("omega") = 1.0,
             py::arg("dt") = 1.0, py::arg("method") = qsm::IntegrationMethod::unitary_midpoint)
        .def_readwrite("mu", &qsm::EvolutionParams::mu)
        .def_readwrite("beta", &qsm::EvolutionParams::beta)
        .def_readwrite("omega", &qsm::EvolutionParams::omega)
        .def_readwrite("dt", &qsm::EvolutionParams::dt)
        .def_readwrite("method", &qsm::EvolutionParams::method);

    py::class_<qsm::PotentialSpec>(m, "PotentialSpec")
        .def_static("none", &qsm::PotentialSpec::none)
        .def_static("cosine_information", &qsm::PotentialSpec::cosine_information,
                    py::arg("beta"), py::arg("omega"))
        .def_static("custom_diagonal", &qsm::PotentialSpec::custom_diagonal, py::arg("v"))
        .def("value", &qsm::PotentialSpec::value, py::arg("r"), py::arg("t"));

    py::class_<qsm::Trajectory>(m, "Trajectory")
        .def_readonly("sample_times", &qsm::Trajectory::sample_times)
        .def_readonly("states", &qsm::Trajectory::states)
        .def_readonly("raw_norm_drift", &qsm::Trajectory::raw_norm_drift)
        .def_readonly("norm_drift", &qsm::Trajectory::norm_drift);

    py::class_<qsm::MostProbableReturn>(m, "MostProbableReturn")
        .def_readonly("argmax", &qsm::MostProbableReturn::argmax)
        .def_readonly("tied", &qsm::MostProbableReturn::tied);

    m.def("hamiltonian_at", &qsm::hamiltonian_at, py::arg("grid"), py::arg("params"),
          py::arg("pot"), py::arg("t"));
    m.def("propagator_matrix", &qsm::propagator_matrix, py::arg("h"), py::arg("t"));
    m.def("propagate_static", &qsm::propagate_static, py::arg("h"), py::arg("psi0"),
          py::arg("t"));
    // no gil release here: a custom_diagonal potential may call back into python
    m.def("integrate_tdse", &qsm::integrate_tdse, py::arg("grid"), py::arg("params"),
          py::arg("pot"), py::arg("psi0"), py::arg("sample_times"));
    m.def("most_probable_return", &qsm::most_probable_return, py::arg("psi"),
          py::arg("tie_tol") = 1e-6);
}
