#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wldu/bounds.hpp"
#include "wldu/cli.hpp"
#include "wldu/du.hpp"
#include "wldu/ff.hpp"
#include "wldu/poly.hpp"
#include "wldu/sweep.hpp"
#include "wldu/wanlidl.hpp"

namespace py = pybind11;
using namespace wldu;

namespace {

std::vector<Elem> to_elems(const Field& field, const std::vector<std::int64_t>& values) {
  std::vector<Elem> out;
  out.reserve(values.size());
  for (std::int64_t v : values) {
    if (field.is_prime_field()) {
      out.push_back(field.from_int(v));
    } else {
      if (v < 0) throw Error(ErrorCode::InvalidArgument, "extension field elements must be canonical");
      out.push_back(field.element(static_cast<std::uint64_t>(v)));
    }
  }
  return out;
}

py::dict du_dict(const DuResult& du) {
  py::dict d;
  d["delta"] = du.delta;
  d["witness_a"] = du.witness_a.value;
  d["witness_c"] = du.witness_c.value;
  return d;
}

}  // namespace

PYBIND11_MODULE(_wldu, m) {
  m.doc() = "Wan-Lidl polynomials: permutation test, differential uniformity, table sweeps";

  static py::exception<Error> error(m, "WlduError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Field>(m, "Field")
      .def(py::init([](std::uint64_t p, unsigned e) { return Field::make(p, e); }), py::arg("p"), py::arg("e") = 1)
      .def_property_readonly("order", &Field::order)
      .def_property_readonly("characteristic", &Field::characteristic)
      .def_property_readonly("is_prime_field", &Field::is_prime_field)
      .def_property_readonly("gamma", [](const Field& f) { return f.gamma().value; })
      .def("subgroup", [](const Field& f, std::uint64_t d) {
        std::vector<std::uint64_t> out;
        for (Elem x : f.subgroup_H(d)) out.push_back(x.value);
        return out;
      })
      .def("__repr__", [](const Field& f) { return "Field(q=" + std::to_string(f.order()) + ")"; });

  py::class_<WanLidlParams>(m, "WanLidlParams")
      .def(py::init([](const Field& field, const std::vector<std::int64_t>& h, std::uint64_t s, std::uint64_t d) {
             return WanLidlParams::create(Poly(field, to_elems(field, h)), s, d);
           }),
           py::arg("field"), py::arg("h"), py::arg("s"), py::arg("d"))
      .def_property_readonly("s", &WanLidlParams::s)
      .def_property_readonly("d", &WanLidlParams::d)
      .def_property_readonly("h", [](const WanLidlParams& w) {
        std::vector<std::uint64_t> out;
        for (Elem c : w.h().coeffs()) out.push_back(c.value);
        return out;
      })
      .def("__call__", [](const WanLidlParams& w, std::int64_t x) { return w.eval(to_elems(w.field(), {x})[0]).value; })
      .def("values", [](const WanLidlParams& w) {
        const FunctionTable table = w.tabulate();
        std::vector<std::uint64_t> out;
        for (Elem v : table.values()) out.push_back(v.value);
        return out;
      });

  m.def(
      "is_pp",
      [](const WanLidlParams& w) {
        const PpVerdict v = wl_is_pp(w);
        py::object failed = py::none();
        if (v.failed) failed = py::str(std::string(to_string(*v.failed)));
        return py::make_tuple(v.is_pp, failed);
      },
      "(is_pp, first failing condition or None)");

  m.def(
      "differential_uniformity",
      [](const Field& field, const std::vector<std::int64_t>& values) {
        return du_dict(differential_uniformity(FunctionTable(field, to_elems(field, values))));
      },
      py::arg("field"), py::arg("values"));
  m.def("du_wanlidl", [](const WanLidlParams& w) { return du_dict(du_wanlidl(w)); });
  m.def(
      "du_binomial",
      [](const Field& field, std::uint64_t s, std::int64_t b) {
        return du_dict(du_fast_binomial(BinomialParams::create(field, s, to_elems(field, {b})[0])));
      },
      py::arg("field"), py::arg("s"), py::arg("b"));

  m.def("bound_general", &bound_general, py::arg("s"), py::arg("d"));
  m.def("bound_binomial_even_s", &bound_binomial_even_s, py::arg("s"));
  m.def("bound_s2_even_d", &bound_s2_even_d, py::arg("d"));

  m.def("corollary_certify", [](const Field& field) {
    const CorollaryCertificate c = corollary_b3_certify(field);
    py::dict d;
    d["q"] = c.q;
    d["plus_is_pp"] = c.plus_is_pp;
    d["minus_is_pp"] = c.minus_is_pp;
    d["plus_delta"] = c.plus_delta;
    d["minus_delta"] = c.minus_delta;
    d["holds"] = c.holds();
    return d;
  });

  m.def(
      "sweep_row",
      [](std::uint64_t p, std::uint64_t s, const std::string& engine) {
        return sweep_row(p, s, parse_engine(engine)).counts;
      },
      py::arg("p"), py::arg("s"), py::arg("engine") = "fast");
  m.def(
      "run_sweep",
      [](std::uint64_t s, std::uint64_t p_min, std::uint64_t p_max, const std::string& engine, unsigned jobs) {
        SweepConfig config;
        config.s = s;
        config.p_min = p_min;
        config.p_max = p_max;
        config.engine = parse_engine(engine);
        config.jobs = jobs;
        SweepResult result;
        {
          py::gil_scoped_release release;
          result = run_sweep(config);
        }
        std::vector<std::pair<std::uint64_t, std::map<std::uint64_t, std::uint64_t>>> rows;
        for (const TableRow& r : result.rows) rows.emplace_back(r.p, r.counts);
        return rows;
      },
      py::arg("s"), py::arg("p_min"), py::arg("p_max"), py::arg("engine") = "fast", py::arg("jobs") = 0);

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Runs one command-line invocation; returns (exit_code, stdout, stderr).");
}
