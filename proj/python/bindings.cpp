#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "ndfourier/errors.hpp"
#include "ndfourier/fourier.hpp"
#include "ndfourier/io.hpp"
#include "ndfourier/sawtooth.hpp"
#include "ndfourier/selftest.hpp"

namespace py = pybind11;

// Rational <-> fractions.Fraction (ints are accepted on the way in).
namespace pybind11::detail {
template <>
struct type_caster<ndf::Rational> {
  PYBIND11_TYPE_CASTER(ndf::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src || py::isinstance<py::float_>(src)) return false;
    if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
    std::string num = py::str(src.attr("numerator"));
    std::string den = py::str(src.attr("denominator"));
    value = ndf::make_rational(ndf::Integer(num), ndf::Integer(den));
    return true;
  }

  static handle cast(const ndf::Rational& q, return_value_policy, handle) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::int_ num(py::str(q.get_num().get_str()));
    py::int_ den(py::str(q.get_den().get_str()));
    return fraction(num, den).release();
  }
};
}  // namespace pybind11::detail

PYBIND11_MODULE(_core, m) {
  m.doc() = "Non-Diophantine arithmetic and Fourier analysis on Cantor sets";

  auto base = py::register_exception<ndf::Error>(m, "Error");
  auto domain = py::register_exception<ndf::DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ndf::NotInCantorSet>(m, "NotInCantorSet", domain.ptr());
  py::register_exception<ndf::DivisionByZeroPrime>(m, "DivisionByZeroPrime", domain.ptr());
  py::register_exception<ndf::ContextMismatch>(m, "ContextMismatch", base.ptr());
  py::register_exception<ndf::UnsupportedContext>(m, "UnsupportedContext", base.ptr());
  py::register_exception<ndf::QuadratureNonConvergent>(m, "QuadratureNonConvergent", base.ptr());
  py::register_exception<ndf::ParseError>(m, "ParseError", base.ptr());

  py::enum_<ndf::Branch>(m, "Branch").value("MINUS", ndf::Branch::Minus).value("PLUS", ndf::Branch::Plus);

  m.def("double_digits", &ndf::double_digits, py::arg("y"), py::arg("base"), py::arg("branch"));
  m.def("halve_digits", &ndf::halve_digits, py::arg("x"), py::arg("base"));
  m.def(
      "digits", [](const ndf::Rational& q, int base) { return ndf::to_digits(q, base).to_string(); }, py::arg("q"),
      py::arg("base"));

  py::class_<ndf::ArithmeticContext, std::shared_ptr<ndf::ArithmeticContext>>(m, "Context")
      .def(py::init([](const std::string& spec, long bits) {
             return std::make_shared<ndf::ArithmeticContext>(ndf::ArithmeticContext::parse(spec, bits));
           }),
           py::arg("spec"), py::arg("precision_bits") = ndf::kDefaultPrecisionBits)
      .def_property_readonly("name", &ndf::ArithmeticContext::name)
      .def_property_readonly("precision_bits", &ndf::ArithmeticContext::precision_bits)
      .def("forward", &ndf::ArithmeticContext::forward, py::arg("upper"))
      .def("inverse", &ndf::ArithmeticContext::inverse, py::arg("lower"))
      .def("__eq__", [](const ndf::ArithmeticContext& a, const ndf::ArithmeticContext& b) { return a == b; })
      .def("__repr__", [](const ndf::ArithmeticContext& c) { return "Context('" + c.name() + "')"; });

  py::class_<ndf::NDNumber>(m, "Number")
      .def(py::init([](std::shared_ptr<ndf::ArithmeticContext> ctx, const ndf::Rational& lower) {
             return ndf::NDNumber(ctx, lower);
           }),
           py::arg("context"), py::arg("lower"))
      .def_static(
          "from_upper",
          [](std::shared_ptr<ndf::ArithmeticContext> ctx, const ndf::Rational& upper) {
            return ndf::NDNumber::from_upper(ctx, upper);
          },
          py::arg("context"), py::arg("upper"))
      .def_property_readonly("lower", &ndf::NDNumber::lower)
      .def_property_readonly("upper", &ndf::NDNumber::upper)
      .def("__add__", &ndf::add)
      .def("__sub__", &ndf::sub)
      .def("__mul__", &ndf::mul)
      .def("__truediv__", &ndf::div)
      .def("__neg__", &ndf::neg)
      .def("__eq__", [](const ndf::NDNumber& a, const ndf::NDNumber& b) { return a == b; })
      .def("__repr__", [](const ndf::NDNumber& x) {
        return "Number(" + x.ctx().name() + ", lower=" + ndf::to_string(x.lower()) + ")";
      });

  m.def(
      "nat",
      [](std::shared_ptr<ndf::ArithmeticContext> ctx, long n) { return ndf::nat(ctx, n); }, py::arg("context"),
      py::arg("n"));
  m.def(
      "spectrum",
      [](std::shared_ptr<ndf::ArithmeticContext> ctx, unsigned long terms) {
        std::vector<ndf::Rational> out;
        for (unsigned long n = 1; n <= terms; ++n) out.push_back(ndf::spectrum_n_prime(ctx, n));
        return out;
      },
      py::arg("context"), py::arg("terms"));

  py::class_<ndf::FourierSeries>(m, "FourierSeries")
      .def_property_readonly("n_max", &ndf::FourierSeries::n_max)
      .def_readonly("period_lower", &ndf::FourierSeries::period_lower)
      .def("cos", [](const ndf::FourierSeries& s, unsigned n) { return s.cos_coeff(n).lower(); })
      .def("sin", [](const ndf::FourierSeries& s, unsigned n) { return s.sin_coeff(n).lower(); })
      .def("reconstruct",
           [](const ndf::FourierSeries& s, const ndf::Rational& x_lower, unsigned terms) {
             return ndf::reconstruct(s, ndf::NDNumber(s.context, x_lower), terms);
           })
      .def("to_json", [](const ndf::FourierSeries& s) { return ndf::to_json(s).dump(); });

  m.def(
      "analyze_sawtooth",
      [](std::shared_ptr<ndf::ArithmeticContext> ctx, unsigned n_max, const ndf::Rational& period) {
        py::gil_scoped_release release;
        return ndf::analyze(ndf::sawtooth_nd(ctx, period), period, n_max);
      },
      py::arg("context"), py::arg("n_max"), py::arg("period_lower") = ndf::Rational(1));

  m.def(
      "selftest",
      [](std::shared_ptr<ndf::ArithmeticContext> ctx) {
        py::gil_scoped_release release;
        std::vector<std::pair<std::string, bool>> out;
        for (const auto& r : ndf::run_selftest(ctx)) out.emplace_back(r.name, r.passed);
        return out;
      },
      py::arg("context"));

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = ndf::cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line front end; returns (exit_code, stdout, stderr).");
}
