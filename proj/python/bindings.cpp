#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "primroot/dft.hpp"
#include "primroot/errors.hpp"
#include "primroot/phi_map.hpp"
#include "primroot/primitivity.hpp"
#include "primroot/root_solver.hpp"
#include "primroot/zeta.hpp"

namespace py = pybind11;
using namespace primroot;

namespace {

// Real and imaginary parts cross the boundary as exact decimal strings.
using Pair = std::tuple<std::string, std::string>;

Pair to_pair(const Complex& z) { return {z.re().to_string(), z.im().to_string()}; }

Complex from_pair(const Pair& p, int precision) {
  return {Real::parse(std::get<0>(p), precision), Real::parse(std::get<1>(p), precision)};
}

py::dict root_set_dict(const RootSet& set) {
  std::vector<Pair> roots;
  for (const auto& z : set.roots) roots.push_back(to_pair(z));
  py::dict d;
  d["n"] = set.n;
  d["precision"] = set.precision;
  d["residual_bound"] = set.residual_bound.to_string();
  d["roots"] = roots;
  return d;
}

py::dict zeta_dict(const Zeta& z) {
  py::dict d;
  d["n"] = z.n;
  d["precision"] = z.precision;
  d["a"] = z.a.to_string();
  d["b"] = z.b.to_string();
  d["r"] = z.r.to_string();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Primitive roots of unity from basic arithmetic and square roots";
  m.attr("DEFAULT_PRECISION") = Real::kDefaultPrecision;

  static auto* error = new py::exception<Error>(m, "PrimrootError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(*error)(py::str(e.what()));
      inst.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error->ptr(), inst.ptr());
    }
  });

  m.def("construct_zeta", [](int n, int precision) { return zeta_dict(construct_zeta(n, precision)); },
        py::arg("n"), py::arg("precision") = Real::kDefaultPrecision);

  m.def("solve_unity", [](int n, int precision) { return root_set_dict(solve_unity(n, precision)); },
        py::arg("n"), py::arg("precision") = Real::kDefaultPrecision);

  m.def(
      "solve_binomial",
      [](const Pair& c, int n, int precision) {
        return root_set_dict(solve_binomial(from_pair(c, precision), n, precision));
      },
      py::arg("c"), py::arg("n"), py::arg("precision") = Real::kDefaultPrecision);

  m.def(
      "roots_of",
      [](const Pair& c, int n, int precision) {
        return root_set_dict(roots_of(from_pair(c, precision), n, precision));
      },
      py::arg("c"), py::arg("n"), py::arg("precision") = Real::kDefaultPrecision);

  m.def(
      "certificate",
      [](int n, int precision) {
        const Zeta zeta = construct_zeta(n, precision);
        const ZetaCertificate cert = build_certificate(zeta, solve_unity(n, precision));
        std::vector<std::string> xs;
        for (const auto& x : cert.xs) xs.push_back(x.to_string());
        py::dict checks;
        for (const auto& [name, ok] : cert.checks.named()) checks[py::str(name)] = ok;
        py::dict d;
        d["n"] = cert.n;
        d["p"] = cert.p;
        d["xs"] = xs;
        d["checks"] = checks;
        d["tolerance"] = cert.tolerance.to_string();
        d["passed"] = cert.checks.all();
        return d;
      },
      py::arg("n"), py::arg("precision") = Real::kDefaultPrecision);

  m.def(
      "order",
      [](int n, int m_exp, int precision) {
        const bool gcd_ok = gcd_primitivity(m_exp, n);
        const Complex w = complex_pow(construct_zeta(n, precision).value(), static_cast<std::uint64_t>(m_exp));
        const PrimitivityReport r = multiplicative_order(w, n, order_tolerance(precision));
        py::dict d;
        d["n"] = n;
        d["m"] = m_exp;
        d["w"] = to_pair(w);
        d["order"] = r.order;
        d["is_primitive"] = r.is_primitive;
        d["gcd_criterion"] = gcd_ok;
        return d;
      },
      py::arg("n"), py::arg("m"), py::arg("precision") = Real::kDefaultPrecision);

  m.def(
      "dft",
      [](const std::vector<Pair>& values, bool inverse, int precision) {
        std::vector<Complex> x;
        for (const auto& v : values) x.push_back(from_pair(v, precision));
        if (x.empty()) throw Error(ErrorKind::InvalidArgument, "empty input");
        const TwiddleTable table = twiddle_table(static_cast<int>(x.size()), precision);
        const auto out = inverse ? dft_inverse(x, table) : dft_forward(x, table);
        std::vector<Pair> result;
        for (const auto& z : out) result.push_back(to_pair(z));
        return result;
      },
      py::arg("values"), py::arg("inverse") = false, py::arg("precision") = Real::kDefaultPrecision);
}
