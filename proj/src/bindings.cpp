#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "deltacomb/oracle.hpp"
#include "deltacomb/polynomial.hpp"
#include "deltacomb/transmission.hpp"

namespace py = pybind11;
using namespace deltacomb;

namespace {

py::object to_py_int(const mpz_class& v) {
    // arbitrary-precision bridge via the decimal string
    return py::module_::import("builtins").attr("int")(v.get_str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "transmission through equally spaced delta potentials";

    py::class_<PhysicalParams>(m, "PhysicalParams")
        .def(py::init([](double hbar, double mass, double strength, double spacing, int count) {
                 PhysicalParams p{hbar, mass, strength, spacing, count};
                 p.validate();
                 return p;
             }),
             py::arg("hbar") = 1.0, py::arg("mass") = 1.0, py::arg("strength") = 0.5,
             py::arg("spacing") = 1.0, py::arg("count") = 1)
        .def_static("natural", &PhysicalParams::natural, py::arg("count"),
                    py::arg("spacing") = 1.0)
        .def_readwrite("hbar", &PhysicalParams::hbar)
        .def_readwrite("mass", &PhysicalParams::mass)
        .def_readwrite("strength", &PhysicalParams::strength)
        .def_readwrite("spacing", &PhysicalParams::spacing)
        .def_readwrite("count", &PhysicalParams::count)
        .def("__repr__", [](const PhysicalParams& p) {
            std::ostringstream os;
            os << "PhysicalParams(hbar=" << p.hbar << ", mass=" << p.mass
               << ", strength=" << p.strength << ", spacing=" << p.spacing
               << ", count=" << p.count << ")";
            return os.str();
        });

    py::class_<TransferMatrix>(m, "TransferMatrix")
        .def_readonly("m11", &TransferMatrix::m11)
        .def_readonly("m12", &TransferMatrix::m12)
        .def_readonly("m21", &TransferMatrix::m21)
        .def_readonly("m22", &TransferMatrix::m22)
        .def("det", &TransferMatrix::det)
        .def("__matmul__", &TransferMatrix::operator*);

    py::class_<BivariatePolynomial>(m, "BivariatePolynomial")
        .def("evaluate", &BivariatePolynomial::evaluate, py::arg("alpha"), py::arg("beta"))
        .def("terms",
             [](const BivariatePolynomial& p) {
                 py::list out;
                 for (const auto& [key, coeff] : p.terms())
                     out.append(py::make_tuple(key.first, key.second, to_py_int(coeff)));
                 return out;
             })
        .def("__len__", &BivariatePolynomial::term_count)
        .def("__str__", [](const BivariatePolynomial& p) { return format_polynomial(p); })
        .def("__repr__", [](const BivariatePolynomial& p) {
            return "BivariatePolynomial(" + format_polynomial(p) + ")";
        });

    py::class_<SweepRecord>(m, "SweepRecord")
        .def_readonly("k", &SweepRecord::k)
        .def_readonly("transmission", &SweepRecord::transmission)
        .def_readonly("reflection", &SweepRecord::reflection)
        .def("__repr__", [](const SweepRecord& r) {
            std::ostringstream os;
            os << "SweepRecord(k=" << r.k << ", T=" << r.transmission << ", R=" << r.reflection
               << ")";
            return os.str();
        });

    py::class_<ResonanceRecord>(m, "ResonanceRecord")
        .def_readonly("k_star", &ResonanceRecord::k_star)
        .def_readonly("t_peak", &ResonanceRecord::t_peak)
        .def_readonly("bracket_lo", &ResonanceRecord::bracket_lo)
        .def_readonly("bracket_hi", &ResonanceRecord::bracket_hi)
        .def("__repr__", [](const ResonanceRecord& r) {
            std::ostringstream os;
            os << "ResonanceRecord(k_star=" << r.k_star << ", t_peak=" << r.t_peak << ")";
            return os.str();
        });

    py::class_<IdentityReport>(m, "IdentityReport")
        .def_readonly("count", &IdentityReport::count)
        .def_readonly("trials", &IdentityReport::trials)
        .def_readonly("seed", &IdentityReport::seed)
        .def_readonly("max_rel_err", &IdentityReport::max_rel_err)
        .def_readonly("tolerance", &IdentityReport::tolerance)
        .def_readonly("pass_", &IdentityReport::pass)
        .def("line", &IdentityReport::line)
        .def("__repr__", [](const IdentityReport& r) { return r.line(); });

    // single-step machinery
    m.def("energy_parameter", &energy_parameter, py::arg("k"), py::arg("params"));
    m.def("phase_factor", &phase_factor, py::arg("k"), py::arg("spacing"));
    m.def(
        "alpha_beta",
        [](Complex c, Complex K) {
            const auto ab = alpha_beta(c, K);
            return py::make_tuple(ab.alpha, ab.beta);
        },
        py::arg("c"), py::arg("K"));
    m.def("single_barrier_matrix", &single_barrier_matrix, py::arg("c"), py::arg("K"));
    m.def("matrix_power", &matrix_power, py::arg("matrix"), py::arg("n"));
    m.def(
        "scattering_from_matrix",
        [](const TransferMatrix& mat, Complex c, int count) {
            const auto probs = scattering_from_matrix(mat, c, count);
            return py::make_tuple(probs.transmission, probs.reflection);
        },
        py::arg("matrix"), py::arg("c"), py::arg("count"));

    // combinatorial closed form
    m.def(
        "triangle_coefficient",
        [](int order, int g, int k) { return to_py_int(triangle_coefficient(order, g, k)); },
        py::arg("m"), py::arg("g"), py::arg("k"));
    m.def(
        "triangle_rows",
        [](int order, int rows) {
            py::list out;
            for (const auto& row : triangle_rows(order, rows)) {
                py::list r;
                for (const auto& v : row) r.append(to_py_int(v));
                out.append(r);
            }
            return out;
        },
        py::arg("m"), py::arg("rows"));
    m.def("submultinomial", &submultinomial, py::arg("m"), py::arg("g"));
    m.def("principal_element", &principal_element, py::arg("count"));
    m.def("format_polynomial", &format_polynomial, py::arg("polynomial"));

    // transmission results
    m.def("omega", &omega, py::arg("count"), py::arg("c"), py::arg("K"));
    m.def("transmission_closed", &transmission_closed, py::arg("count"), py::arg("k"),
          py::arg("params"));
    m.def("transmission_single", &transmission_single, py::arg("k"), py::arg("params"));
    m.def("transmission_double", &transmission_double, py::arg("k"), py::arg("spacing"),
          py::arg("params"));
    m.def(
        "omega4_re_im",
        [](double k, double spacing, const PhysicalParams& p) {
            const auto parts = omega4_re_im(k, spacing, p);
            return py::make_tuple(parts.re, parts.im);
        },
        py::arg("k"), py::arg("spacing"), py::arg("params"));
    m.def("transmission_quad", &transmission_quad, py::arg("k"), py::arg("spacing"),
          py::arg("params"));
    m.def("sweep", &sweep, py::arg("count"), py::arg("k_lo"), py::arg("k_hi"), py::arg("steps"),
          py::arg("params"));
    m.def("find_resonances", &find_resonances, py::arg("count"), py::arg("k_lo"), py::arg("k_hi"),
          py::arg("params"), py::arg("grid"), py::arg("tol"));

    // independent verification paths
    m.def("transmission_direct", &transmission_direct, py::arg("k"), py::arg("params"));
    m.def("polynomial_identity_check", &polynomial_identity_check, py::arg("count"),
          py::arg("trials"), py::arg("seed"));
}
