#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "digit_dirichlet/beta_series.hpp"
#include "digit_dirichlet/delange.hpp"
#include "digit_dirichlet/digit_sums.hpp"
#include "digit_dirichlet/integer_base_series.hpp"
#include "digit_dirichlet/pole_catalog.hpp"
#include "digit_dirichlet/special_functions.hpp"

namespace py = pybind11;
namespace dd = digit_dirichlet;

namespace {

py::dict eval_result_dict(const dd::EvalResult& r) {
  py::dict out;
  out["value"] = r.value;
  out["abs_error_estimate"] = r.abs_error_estimate;
  out["K_used"] = r.k_used;
  if (r.quadrature) {
    py::dict q;
    q["abs_error_estimate"] = r.quadrature->abs_error_estimate;
    q["evaluation_count"] = r.quadrature->evaluation_count;
    out["quadrature"] = q;
  }
  return out;
}

py::dict pole_dict(const dd::PoleDescriptor& p) {
  py::dict out;
  out["tag"] = std::string(dd::to_string(p.tag));
  out["b"] = p.base;
  out["k"] = p.lattice_k;
  out["m"] = p.lattice_m;
  out["location"] = p.location;
  out["order"] = p.order;
  out["residue"] = p.residue;
  if (p.order == 2) out["laurent_minus2"] = p.laurent_minus2;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dirichlet series of base-b digit sums: meromorphic continuation, "
            "pole catalogs, and the Delange interpolation to real bases.";

  py::register_exception<dd::InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<dd::OutOfDomain>(m, "OutOfDomain", PyExc_ValueError);
  py::register_exception<dd::PoleAt>(m, "PoleError", PyExc_ArithmeticError);
  py::register_exception<dd::NonConvergence>(m, "NonConvergence",
                                             PyExc_RuntimeError);
  py::register_exception<dd::TableTooShort>(m, "TableTooShort",
                                            PyExc_RuntimeError);

  // digit arithmetic
  m.def("digit_sum", &dd::digit_sum, py::arg("b"), py::arg("n"),
        "Base-b digit sum d_b(n).");
  m.def("cumulative_digit_sum", &dd::cumulative_digit_sum, py::arg("b"),
        py::arg("n"), "S_b(n) = sum_{m<n} d_b(m).");
  m.def("differenced_digit_sum", &dd::differenced_digit_sum, py::arg("b"),
        py::arg("n"));
  m.def("p_lambert", &dd::p_lambert, py::arg("b"), py::arg("y"),
        "Lambert-form evaluation of sum (d_b(n)-d_b(n-1)) y^n.");

  // special functions
  m.def("bernoulli", [](int k) {
    const auto& b = dd::bernoulli_number(k);
    py::object to_int = py::module_::import("builtins").attr("int");
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_int(b.numerator().to_string()),
                    to_int(b.denominator().to_string()));
  }, py::arg("k"), "Exact Bernoulli number B_k (B_1 = -1/2) as a Fraction.");
  m.def("zeta", [](std::complex<double> s) { return dd::riemann_zeta(s); },
        py::arg("s"));
  m.def("zeta_derivative",
        [](std::complex<double> s) { return dd::riemann_zeta_derivative(s); },
        py::arg("s"));
  m.def("gamma", [](std::complex<double> s) { return dd::complex_gamma(s); },
        py::arg("s"));
  m.def("gamma_ratio", &dd::gamma_ratio, py::arg("s"), py::arg("k"),
        "Gamma(s-1+k)/Gamma(s) as a finite product.");

  // integer-base series
  m.def("zb", [](std::int64_t b, std::complex<double> s) {
    return dd::zb_eval(b, s);
  }, py::arg("b"), py::arg("s"), "Z_b(s) = (b^s-b)/(b^s-1) zeta(s).");
  m.def("fb", [](std::int64_t b, std::complex<double> s, int K, double tol) {
    if (K <= 0) K = dd::default_truncation(dd::SeriesTag::Fb, s);
    return eval_result_dict(dd::fb_eval(b, s, K, tol));
  }, py::arg("b"), py::arg("s"), py::arg("K") = 0, py::arg("tol") = 1e-10,
        "F_b(s) on its meromorphic continuation.");
  m.def("gb", [](std::int64_t b, std::complex<double> s, int K, double tol) {
    if (K <= 0) K = dd::default_truncation(dd::SeriesTag::Gb, s);
    return eval_result_dict(dd::gb_eval(b, s, K, tol));
  }, py::arg("b"), py::arg("s"), py::arg("K") = 0, py::arg("tol") = 1e-10,
        "G_b(s) on its meromorphic continuation.");

  // pole catalog
  m.def("poles", [](const std::string& tag, std::int64_t b, double radius) {
    py::list out;
    for (const auto& p :
         dd::enumerate_poles(dd::series_tag_from_string(tag), b, radius)) {
      out.append(pole_dict(p));
    }
    return out;
  }, py::arg("tag"), py::arg("b"), py::arg("radius"),
        "All poles with |s| < radius, with closed-form residues.");
  m.def("count_poles", [](const std::string& tag, std::int64_t b, double r) {
    return dd::count_poles(dd::series_tag_from_string(tag), b, r);
  }, py::arg("tag"), py::arg("b"), py::arg("radius"));

  // Delange interpolation
  m.def("delange_coefficient", [](double beta, int k) {
    return dd::delange_coefficient(dd::BetaParam(beta), k).value;
  }, py::arg("beta"), py::arg("k"), "Fourier coefficient c_beta(k).");
  m.def("h_beta", [](double beta, double x, int cutoff) {
    return dd::h_beta(dd::BetaParam(beta), x, dd::FourierTruncation{cutoff});
  }, py::arg("beta"), py::arg("x"), py::arg("cutoff") = 1000);
  m.def("s_beta", [](double beta, std::int64_t n, int cutoff) {
    return dd::s_beta(dd::BetaParam(beta), n, dd::FourierTruncation{cutoff});
  }, py::arg("beta"), py::arg("n"), py::arg("cutoff") = 1000);
  m.def("d_beta", [](double beta, std::int64_t n, int cutoff) {
    return dd::d_beta(dd::BetaParam(beta), n, dd::FourierTruncation{cutoff});
  }, py::arg("beta"), py::arg("n"), py::arg("cutoff") = 1000);

  // beta series
  py::class_<dd::SbetaTable>(m, "SbetaTable")
      .def("__len__", &dd::SbetaTable::n_max)
      .def("at", &dd::SbetaTable::at, py::arg("n"))
      .def_property_readonly("beta", &dd::SbetaTable::beta)
      .def_property_readonly("cutoff_K", &dd::SbetaTable::cutoff_K);
  m.def("build_sbeta_table", [](double beta, std::int64_t n_max, int cutoff) {
    return dd::build_sbeta_table(beta, n_max, dd::FourierTruncation{cutoff});
  }, py::arg("beta"), py::arg("n_max") = 100000, py::arg("cutoff") = 1000);
  m.def("g_beta", [](double beta, std::complex<double> s, int cutoff) {
    return eval_result_dict(
        dd::g_beta_eval(beta, s, dd::FourierTruncation{cutoff}));
  }, py::arg("beta"), py::arg("s"), py::arg("cutoff") = 1000,
        "G_beta(s) on Re(s) > 1.");
  m.def("f_beta", [](const dd::SbetaTable& table, std::complex<double> s,
                     double tol) {
    return eval_result_dict(dd::f_beta_eval(table, s, tol));
  }, py::arg("table"), py::arg("s"), py::arg("tol") = 1e-6,
        "F_beta(s) on Re(s) > 0, using a prebuilt S_beta table.");
}
