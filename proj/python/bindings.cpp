/* Copyright 2026 The ordproof Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "ordproof/extraction.hpp"
#include "ordproof/fgh.hpp"
#include "ordproof/finite_proof.hpp"
#include "ordproof/infinite_proof.hpp"
#include "ordproof/ordinal.hpp"
#include "ordproof/sexp.hpp"
#include "ordproof/stepdown.hpp"

namespace py = pybind11;
using namespace ordproof;

namespace {

BigInt big(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }
py::int_ pyint(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object outcome(const FghOutcome& o) {
  if (o.defined) return pyint(o.value);
  return py::none();
}

}  // namespace

PYBIND11_MODULE(_ordproof, m) {
  m.doc() = "Ordinals below epsilon_0, the fast-growing hierarchy and witness extraction";

  py::register_exception<OrdinalError>(m, "OrdinalError", PyExc_ValueError);
  py::register_exception<StepDownError>(m, "StepDownError", PyExc_ValueError);
  py::register_exception<SexpError>(m, "SexpError", PyExc_ValueError);
  py::register_exception<FpError>(m, "ProofError", PyExc_ValueError);
  py::register_exception<ExError>(m, "ExtractionError", PyExc_RuntimeError);
  py::register_exception<FghBudgetError>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<Ordinal>(m, "Ordinal")
      .def(py::init([](const std::string& s) { return parse_ordinal(s); }))
      .def(py::init([](const py::int_& n) { return Ordinal(big(n)); }))
      .def("__str__", &Ordinal::str)
      .def("__repr__", [](const Ordinal& a) { return "Ordinal('" + a.str() + "')"; })
      .def("__eq__", [](const Ordinal& a, const Ordinal& b) { return a == b; })
      .def("__lt__", [](const Ordinal& a, const Ordinal& b) { return a < b; })
      .def("__le__", [](const Ordinal& a, const Ordinal& b) { return a <= b; })
      .def("__add__", [](const Ordinal& a, const Ordinal& b) { return a + b; })
      .def("__hash__", [](const Ordinal& a) { return std::hash<std::string>()(a.str()); })
      .def("is_zero", &Ordinal::is_zero)
      .def("is_limit", &Ordinal::is_limit)
      .def("is_successor", &Ordinal::is_successor)
      .def("fund", [](const Ordinal& a, const py::int_& n) { return fund_one(a, big(n)); })
      .def("num_bound", [](const Ordinal& a, const py::int_& n) { return pyint(num_bound(a, big(n))); });
  py::implicitly_convertible<py::str, Ordinal>();
  py::implicitly_convertible<py::int_, Ordinal>();

  m.def(
      "fgh_eval",
      [](const Ordinal& a, const py::int_& n, std::uint64_t steps, std::optional<py::int_> cap) {
        FghBudget b;
        b.steps = steps;
        if (cap) b.value_cap = big(*cap);
        return outcome(fgh_eval(a, big(n), b));
      },
      py::arg("alpha"), py::arg("n"), py::arg("steps") = 1000000, py::arg("cap") = py::none(),
      "F_alpha(n), or None when the budget runs out (default cap 2^64)");
  m.def(
      "fgh_cmp",
      [](const Ordinal& a, const py::int_& n, const py::int_& c, std::uint64_t steps) -> py::object {
        CmpResult r = fgh_cmp_const(a, big(n), big(c), steps);
        if (r.below) return pyint(r.value);
        return py::none();
      },
      py::arg("alpha"), py::arg("n"), py::arg("c"), py::arg("steps") = 10000000,
      "F_alpha(n) when it is below c, otherwise None");

  m.def(
      "sd_verify",
      [](const std::string& text, std::optional<py::int_> base) {
        StepDown s = parse_stepdown(text);
        std::string diag;
        bool valid = sd_validate(s, &diag);
        py::dict d;
        d["bo"] = s.bo();
        d["to"] = s.to();
        d["ba"] = pyint(s.ba());
        d["valid"] = valid;
        if (!valid) {
          d["diagnostic"] = diag;
        } else {
          d["semantics"] = sd_check_name(sd_check_semantics(s, base ? big(*base) : s.ba()));
        }
        return d;
      },
      py::arg("certificate"), py::arg("base") = py::none());

  m.def(
      "proof_check",
      [](const std::string& text, int n) -> py::object {
        auto d = fp_check(parse_proof(text), n);
        if (!d) return py::none();
        return py::make_tuple(d->path, d->message);
      },
      py::arg("proof"), py::arg("n") = 1, "None when the proof checks, else (path, message)");
  m.def(
      "proof_metrics",
      [](const std::string& text, int n) {
        FpMetrics mt = fp_metrics(parse_proof(text), n);
        py::dict d;
        d["height"] = mt.height;
        d["dterm"] = mt.dterm;
        d["dcut"] = mt.dcut;
        d["end"] = mt.end.str();
        return d;
      },
      py::arg("proof"), py::arg("n") = 1);
  m.def(
      "inf_metrics",
      [](const std::string& text) {
        IpMetrics mt = ip_metrics(parse_inf_proof(text));
        py::dict d;
        d["pend"] = mt.pend.str();
        d["pord"] = mt.pord;
        d["dcut"] = mt.dcut;
        d["dacc"] = mt.dacc;
        return d;
      },
      py::arg("term"));

  m.def(
      "extract",
      [](const std::string& text, int n, std::uint64_t max_iter, std::uint64_t witness_cap,
         std::uint64_t fgh_steps, const std::string& stop) {
        ExLimits lim;
        lim.max_iterations = max_iter;
        lim.witness_cap = witness_cap;
        lim.fgh_steps = fgh_steps;
        if (stop != "eager" && stop != "axiom") throw py::value_error("stop must be eager or axiom");
        lim.stop = stop == "axiom" ? ExStop::Axiom : ExStop::Eager;
        ExtractionReport r;
        {
          py::gil_scoped_release release;
          r = ex_extract(parse_proof(text), n, lim);
        }
        py::dict d;
        d["outcome"] = std::string(ex_outcome_name(r.outcome));
        d["witness"] = r.outcome == ExtractionReport::Witness ? py::object(py::int_(r.witness)) : py::none();
        d["formula"] = r.formula ? py::object(py::str(r.formula->str())) : py::none();
        d["reason"] = r.outcome == ExtractionReport::Exhausted
                          ? py::object(py::str(ex_reason_name(r.reason))) : py::none();
        d["iterations"] = r.iteration;
        d["bound_confirmed"] = r.bound_confirmed ? py::object(py::bool_(*r.bound_confirmed)) : py::none();
        py::list trace;
        for (const TraceEntry& t : r.trace) {
          py::dict e;
          e["iteration"] = t.iteration;
          e["rule"] = t.rule;
          e["ord"] = t.ord;
          e["kEnd"] = t.k_end;
          e["truth"] = t.truth;
          e["action"] = t.action;
          trace.append(e);
        }
        d["trace"] = trace;
        return d;
      },
      py::arg("proof"), py::arg("n") = 2, py::arg("max_iter") = 10000,
      py::arg("witness_cap") = 10000, py::arg("fgh_steps") = 10000000, py::arg("stop") = "eager");
}
