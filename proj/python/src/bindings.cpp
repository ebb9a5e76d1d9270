// padcat._core: bindings for the main pipeline operations.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "padcat/prove.hpp"

namespace py = pybind11;
using namespace padcat;

namespace {

py::int_ to_pyint(const BigInt& n) { return py::int_(py::str(n.get_str())); }

BigInt from_pyint(const py::int_& v) {
  return BigInt(py::str(v).cast<std::string>(), 10);
}

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

ConstantFn tau_fn() {
  return [](Prec p) {
    CubicData c = compute_cubic(p);
    return log_int(10, p) / log(c.alpha);
  };
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Padovan numbers that are concatenations of two distinct repdigits: "
            "exact search, certified bounds, and the full proof pipeline.";
  m.attr("__version__") = kToolVersion;

  m.def("padovan", [](unsigned long n) { return to_pyint(padovan(n)); },
        py::arg("n"), "Exact n-th Padovan number (P0=0, P1=P2=1).");

  m.def(
      "repdigit_concat_value",
      [](int d1, int d2, long l1, long l2) {
        return to_pyint(RepdigitConcat(d1, d2, l1, l2).value());
      },
      py::arg("d1"), py::arg("d2"), py::arg("l1"), py::arg("l2"),
      "Integer whose decimal string is d1 repeated l1 times then d2 repeated l2 times.");

  m.def(
      "parse_concat",
      [](const py::int_& value) -> py::object {
        auto rc = parse_concat(from_pyint(value));
        if (!rc) return py::none();
        return py::make_tuple(rc->d1(), rc->d2(), rc->l1(), rc->l2());
      },
      py::arg("value"),
      "Decompose into (d1, d2, l1, l2) when the decimal expansion is exactly "
      "two runs of distinct digits; None otherwise.");

  m.def(
      "search",
      [](unsigned long n_max, int threads) {
        py::list out;
        for (const auto& r : brute_force(n_max, threads)) {
          py::dict d;
          d["n"] = r.n;
          d["d1"] = r.concat.d1();
          d["d2"] = r.concat.d2();
          d["l1"] = r.concat.l1();
          d["l2"] = r.concat.l2();
          d["value"] = to_pyint(r.value);
          out.append(std::move(d));
        }
        return out;
      },
      py::arg("n_max") = 500, py::arg("threads") = 1,
      "All P_n with n <= n_max that are concatenations of two distinct repdigits.");

  m.def(
      "tau_quotients",
      [](std::size_t terms, long digits) {
        ContinuedFraction cf =
            continued_fraction(tau_fn(), terms, BigInt(0), digits_to_bits(digits));
        py::list out;
        for (std::size_t i = 0; i < std::min(terms, cf.size()); ++i)
          out.append(to_pyint(cf.quotients()[i]));
        return out;
      },
      py::arg("terms") = 31, py::arg("digits") = kDefaultDigits,
      "Leading partial quotients of tau = log 10 / log alpha.");

  m.def(
      "tau_convergent",
      [](std::size_t index, long digits) {
        if (index < 1) throw std::invalid_argument("index is 1-based");
        ContinuedFraction cf =
            continued_fraction(tau_fn(), index, BigInt(0), digits_to_bits(digits));
        return py::make_tuple(to_pyint(cf.p(index - 1)), to_pyint(cf.q(index - 1)));
      },
      py::arg("index"), py::arg("digits") = kDefaultDigits,
      "(p, q) of the index-th convergent of tau (1-based, as printed in the write-up).");

  m.def(
      "initial_bounds",
      [](const std::string& mode, long digits) {
        InitialBounds ib = initial_bounds(mode_from_name(mode), digits_to_bits(digits));
        py::dict d;
        d["mode"] = mode_name(ib.mode);
        d["n_max"] = ib.n_max.midpoint_string(30);
        d["l_total_max"] = ib.l_total_max.midpoint_string(30);
        d["computed_n_max"] = ib.computed_n_max.midpoint_string(30);
        d["computed_l_total"] = ib.computed_l_total.midpoint_string(30);
        return d;
      },
      py::arg("mode") = "paper", py::arg("digits") = kDefaultDigits,
      "Initial bounds on n and l1+l2 before reduction.");

  m.def(
      "prove",
      [](const std::string& mode, long digits, long n_max, int threads) {
        ProveOptions opt;
        opt.mode = mode_from_name(mode);
        opt.precision_digits = digits;
        opt.search_n_max = n_max;
        opt.threads = threads;
        nlohmann::json j = run_prove(opt);
        return json_to_py(j);
      },
      py::arg("mode") = "paper", py::arg("digits") = kDefaultDigits,
      py::arg("n_max") = 500, py::arg("threads") = 1,
      "Run the whole pipeline; returns the proof certificate as a dict.");
}
