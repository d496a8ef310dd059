// Copyright 2026 The Hurwitz Orbits Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings: groups are built from spec strings, tuples and types are
// passed in the same text syntax the command-line tool accepts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/group_io.hpp"
#include "hurwitz/homology.hpp"
#include "hurwitz/orbit.hpp"
#include "hurwitz/stabilize.hpp"
#include "hurwitz/syntax.hpp"

namespace py = pybind11;
using namespace hurwitz;

namespace {

py::dict class_dict(const FiniteGroup& g, const OrbitClass& c) {
  py::dict d;
  d["canonical"] = format_tuple(g, c.canonical);
  d["size"] = to_string(c.size);
  d["evaluation"] = format_element(g, c.evaluation);
  d["nielsen"] = c.nielsen.to_string();
  d["subgroup_order"] = c.subgroup.order();
  return d;
}

GammaSet gamma_or_all(const FiniteGroup& g, const std::string& gamma) {
  return gamma.empty() ? make_gamma_all_nontrivial(g) : parse_gamma(g, gamma);
}

py::dict stability_dict(const StabilityReport& r) {
  py::dict d;
  d["bound"] = r.bound ? py::cast(*r.bound) : py::none();
  d["uniform_bound"] = r.uniform_bound ? py::cast(*r.uniform_bound) : py::none();
  d["window"] = r.window;
  d["confident"] = r.confident;
  d["base"] = r.base.to_string();
  py::list levels;
  for (const auto& l : r.levels) {
    py::dict e;
    e["nielsen"] = l.nielsen.to_string();
    e["classes"] = l.class_count;
    e["generating"] = l.generating_count;
    e["bijective"] = l.bijective ? py::cast(*l.bijective) : py::none();
    levels.append(e);
  }
  d["levels"] = levels;
  d["diagnostic"] = r.diagnostic;
  return d;
}

}  // namespace

PYBIND11_MODULE(_hurwitz, m) {
  m.doc() = "Braid group orbits on tuples in finite groups";

  static py::exception<Indeterminate> indeterminate(m, "IndeterminateError",
                                                    PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Indeterminate& e) {
      indeterminate(e.what());
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<FiniteGroup>(m, "Group")
      .def(py::init([](const std::string& spec) { return resolve_group(spec); }),
           py::arg("spec"))
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("class_count", &FiniteGroup::class_count)
      .def_property_readonly("is_abelian", &FiniteGroup::is_abelian)
      .def("elements", [](const FiniteGroup& g) {
        std::vector<std::string> out;
        for (Element a = 0; a < g.order(); ++a) out.push_back(format_element(g, a));
        return out;
      })
      .def("digest", [](const FiniteGroup& g) { return table_digest(g); });

  m.def("evaluate", [](const FiniteGroup& g, const std::string& v) {
    return format_element(g, evaluate(g, parse_tuple(g, v)));
  }, py::arg("group"), py::arg("tuple"));
  m.def("nielsen", [](const FiniteGroup& g, const std::string& v) {
    return nielsen(g, parse_tuple(g, v)).to_string();
  }, py::arg("group"), py::arg("tuple"));
  m.def("sigma", [](const FiniteGroup& g, const std::string& v, std::size_t i, bool inverse) {
    const HurwitzVector t = parse_tuple(g, v);
    return format_tuple(g, inverse ? sigma_inv(g, t, i) : sigma(g, t, i));
  }, py::arg("group"), py::arg("tuple"), py::arg("i"), py::arg("inverse") = false);
  m.def("orbit", [](const FiniteGroup& g, const std::string& v) {
    return class_dict(g, orbit(g, parse_tuple(g, v)));
  }, py::arg("group"), py::arg("tuple"));
  m.def("braid_equivalent", [](const FiniteGroup& g, const std::string& v, const std::string& w) {
    return braid_equivalent(g, parse_tuple(g, v), parse_tuple(g, w));
  }, py::arg("group"), py::arg("v"), py::arg("w"));
  m.def("classes", [](const FiniteGroup& g, const std::string& nu, bool generating) {
    FiberSpec spec;
    spec.nielsen = parse_nielsen(g, nu);
    if (generating) {
      spec.generated = SubgroupConstraint{whole_group(g), SubgroupConstraint::Mode::kExact};
    }
    py::list out;
    for (const auto& c : enumerate_classes(g, spec)) out.append(class_dict(g, c));
    return out;
  }, py::arg("group"), py::arg("nielsen"), py::arg("generating") = false);
  m.def("stability", [](const FiniteGroup& g, const std::string& gamma, std::uint32_t window) {
    StabilityOptions so;
    so.window = window;
    return stability_dict(find_stability_bound(g, gamma_or_all(g, gamma), so));
  }, py::arg("group"), py::arg("gamma") = "", py::arg("window") = 3);
  m.def("h2", [](const FiniteGroup& g, const std::string& gamma, bool structure) {
    const GammaSet gs = gamma_or_all(g, gamma);
    const H2Report r = structure ? h2_structure(g, gs) : h2_order(g, gs);
    py::dict d;
    d["order"] = r.order;
    d["structure"] = structure ? py::cast(r.structure) : py::none();
    d["stable_level"] = r.stable_level.to_string();
    d["multiple"] = r.multiple;
    d["generating_count"] = r.generating_count;
    d["commutator_order"] = r.commutator_order;
    return d;
  }, py::arg("group"), py::arg("gamma") = "", py::arg("structure") = false);
  m.def("stable_equivalent", [](const FiniteGroup& g, const std::string& v,
                                const std::string& w, const std::string& gamma,
                                std::uint32_t max_level) {
    StableOptions so;
    so.max_level = max_level;
    const auto r = stable_equivalent(g, parse_tuple(g, v), parse_tuple(g, w),
                                     u_gamma(g, gamma_or_all(g, gamma)), so);
    return py::make_tuple(std::string(verdict_name(r.verdict)), r.level, r.reason);
  }, py::arg("group"), py::arg("v"), py::arg("w"), py::arg("gamma") = "",
     py::arg("max_level") = 3);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run a hurwitz subcommand in-process; returns (exit code, stdout, stderr).");
}
