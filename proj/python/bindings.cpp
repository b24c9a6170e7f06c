#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orelab/batch.hpp"
#include "orelab/catalog.hpp"
#include "orelab/localize.hpp"
#include "orelab/maxden.hpp"
#include "orelab/report.hpp"
#include "orelab/ring_io.hpp"
#include "orelab/theorems.hpp"

namespace py = pybind11;
using namespace orelab;

namespace {

Limits limits_from(std::size_t guard_order, std::size_t guard_bruteforce) {
  Limits l = Limits::from_environment();
  if (guard_order) l.max_order = guard_order;
  if (guard_bruteforce) l.max_brute_force_order = guard_bruteforce;
  return l;
}

MulSet closure(const FiniteRing& r, const std::vector<Elem>& elements) {
  for (Elem e : elements)
    if (e >= r.order()) throw py::index_error("element " + std::to_string(e) + " out of range");
  return mul_closure(r, elements);
}

}  // namespace

PYBIND11_MODULE(_orelab, m) {
  m.doc() = "Finite ring left localization";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<AxiomViolation>(m, "AxiomViolation", error.ptr());
  py::register_exception<SizeGuardExceeded>(m, "SizeGuardExceeded", error.ptr());
  py::register_exception<ZeroAbsorbed>(m, "ZeroAbsorbed", error.ptr());
  py::register_exception<NotOre>(m, "NotOre", error.ptr());
  py::register_exception<NotDenominator>(m, "NotDenominator", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<BadSpec>(m, "BadSpec", error.ptr());
  py::register_exception<InternalInconsistency>(m, "InternalInconsistency", error.ptr());

  py::class_<FiniteRing>(m, "Ring")
      .def_property_readonly("order", &FiniteRing::order)
      .def_property_readonly("zero", &FiniteRing::zero)
      .def_property_readonly("one", &FiniteRing::one)
      .def("add", &FiniteRing::add)
      .def("mul", &FiniteRing::mul)
      .def("label", &FiniteRing::label)
      .def("is_commutative", &FiniteRing::is_commutative)
      .def("units", [](const FiniteRing& r) { return units(r).elements(); })
      .def("hash", [](const FiniteRing& r) { return canonical_hash(r); })
      .def("to_text", [](const FiniteRing& r) { return ring_to_text(r); })
      .def("opposite", [](const FiniteRing& r) { return opposite(r); })
      .def("__repr__", [](const FiniteRing& r) {
        return "<Ring order=" + std::to_string(r.order()) + " hash=" + canonical_hash(r) + ">";
      });

  m.def(
      "construct",
      [](const std::string& spec, std::size_t guard_order) { return construct(spec, limits_from(guard_order, 0)); },
      py::arg("spec"), py::arg("guard_order") = 0);
  m.def("from_text", [](const std::string& text) { return ring_from_text(text); }, py::arg("text"));
  m.def("default_catalog", &default_catalog);
  m.def("theorem_ids", &theorem_ids);

  m.def(
      "info_json",
      [](const FiniteRing& r, std::size_t guard_order) {
        return render_info(r, Format::json, limits_from(guard_order, 0));
      },
      py::arg("ring"), py::arg("guard_order") = 0);
  m.def(
      "ore_json",
      [](const FiniteRing& r, const std::vector<Elem>& elements) {
        return render_ore(ore_report(closure(r, elements)), Format::json);
      },
      py::arg("ring"), py::arg("elements"));
  m.def(
      "localize_json",
      [](const FiniteRing& r, const std::vector<Elem>& elements) {
        return render_fraction(build_fraction_ring(r, closure(r, elements)), Format::json);
      },
      py::arg("ring"), py::arg("elements"));
  m.def(
      "profile_json",
      [](const FiniteRing& r, bool sided, std::size_t guard_order, std::size_t guard_bruteforce) {
        const Limits l = limits_from(guard_order, guard_bruteforce);
        py::gil_scoped_release release;
        return sided ? render_sided(sided_profiles(r, l), Format::json) : render_profile(profile(r, l), Format::json);
      },
      py::arg("ring"), py::arg("sided") = false, py::arg("guard_order") = 0, py::arg("guard_bruteforce") = 0);
  m.def(
      "verify",
      [](const FiniteRing& r, const std::vector<std::string>& ids) {
        for (const auto& id : ids)
          if (!is_theorem_id(id)) throw py::value_error("unknown theorem id '" + id + "'");
        std::vector<std::tuple<std::string, std::string, bool, std::string>> out;
        std::vector<TheoremCheck> checks;
        {
          py::gil_scoped_release release;
          checks = verify_theorems(r, ids.empty() ? theorem_ids() : ids);
        }
        for (auto& c : checks) out.emplace_back(c.theorem, c.check, c.pass, c.detail);
        return out;
      },
      py::arg("ring"), py::arg("ids") = std::vector<std::string>{});
  m.def(
      "batch_summary",
      [](const std::vector<std::string>& specs, unsigned jobs) {
        BatchManifest manifest;
        manifest.specs = specs;
        BatchResult result;
        {
          py::gil_scoped_release release;
          result = run_batch(manifest, jobs, Format::text);
        }
        return py::make_tuple(result.summary, result.exit_code);
      },
      py::arg("specs"), py::arg("jobs") = 1);
}
