#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "zdext/cli.hpp"
#include "zdext/extensions.hpp"
#include "zdext/maps.hpp"
#include "zdext/proximity.hpp"
#include "zdext/text.hpp"
#include "zdext/verify.hpp"

namespace py = pybind11;
using namespace zdext;

namespace {

py::dict zeq_dict(const ZeqResult& r) {
  py::dict d;
  d["zeq1"] = r.zeq1;
  d["zeq2"] = r.zeq2;
  d["g_witness"] = r.g_witness ? py::cast(r.g_witness->to_string()) : py::none();
  d["f_witness"] = r.f_witness ? py::cast(r.f_witness->to_string()) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "zero-dimensional local compactifications of pierced Cantor spaces";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

  py::class_<World>(m, "World")
      .def_static("parse", [](const std::string& line) { return parse_world_line(line); })
      .def_property_readonly("size", &World::size)
      .def_property_readonly("punctures",
                             [](const World& w) {
                               std::vector<std::string> out;
                               for (const Point& p : w.punctures()) out.push_back(p.to_string());
                               return out;
                             })
      .def("__str__", &format_world)
      .def("__eq__", [](const World& a, const World& b) { return a == b; });

  py::class_<Zlba>(m, "Zlba")
      .def_static("top", &Zlba::top)
      .def_static("trivial", &Zlba::trivial)
      .def_property_readonly("world", &Zlba::world)
      .def_property_readonly("label", &Zlba::label)
      .def_property_readonly("is_compact", &Zlba::is_compact)
      .def("is_valid", [](const Zlba& z) { return check_zlba(z).valid; })
      .def("text", [](const Zlba& z, const std::string& name) { return format_zlba(name, z); }, py::arg("name") = "Z")
      .def("__repr__", [](const Zlba& z) { return "Zlba" + z.label(); })
      .def("__eq__", [](const Zlba& a, const Zlba& b) { return a == b; });

  py::class_<Extension>(m, "Extension")
      .def_property_readonly("structure", [](const Extension& e) { return e.structure; })
      .def_property_readonly("is_compact", &Extension::is_compact)
      .def("describe", &Extension::describe)
      .def("equivalent", [](const Extension& a, const Extension& b) { return equivalent(a, b); });

  py::class_<PresentedMap>(m, "PresentedMap")
      .def_property_readonly("domain", &PresentedMap::domain)
      .def_property_readonly("codomain", &PresentedMap::codomain)
      .def("__str__", &PresentedMap::to_string);

  py::class_<InstanceFile>(m, "Instance")
      .def_static("parse", [](const std::string& text) { return parse_instance(text); })
      .def_static("read", &read_instance)
      .def_property_readonly("world", &InstanceFile::require_world)
      .def("zlba", &InstanceFile::zlba, py::arg("name") = "", py::return_value_policy::copy)
      .def("extension", &InstanceFile::extension, py::arg("name") = "", py::return_value_policy::copy)
      .def("map",
           [](const InstanceFile& f, const std::string& name, const World* codomain) {
             return f.map(name).build(f.require_world(), codomain ? *codomain : f.require_world());
           },
           py::arg("name"), py::arg("codomain") = nullptr)
      .def_property_readonly("zlba_names",
                             [](const InstanceFile& f) {
                               std::vector<std::string> out;
                               for (const auto& z : f.zlbas) out.push_back(z.first);
                               return out;
                             })
      .def("__str__", &print_instance);

  m.def("check_zlba", [](const Zlba& z) {
    const ZlbaCheck c = check_zlba(z);
    py::dict d;
    d["valid"] = c.valid;
    if (c.certificate) {
      d["upper1"] = c.certificate->upper1.to_string();
      d["upper2"] = c.certificate->upper2.to_string();
      d["certificate_ok"] = verify_certificate(z, *c.certificate).ok;
    }
    return d;
  });
  m.def("beta0", &beta0);
  m.def("alpha0", &alpha0);
  m.def("leq0", &leq0);
  m.def("extension_leq", [](const Extension& a, const Extension& b) { return extension_leq(a, b).holds; });
  m.def("partial_partitions", [](const World& w) { return partial_partitions(w); });
  m.def("bell", &bell);
  m.def("catalog", [](const World& w) {
    const Catalog c = enumerate_catalog(w);
    py::dict d;
    d["zlbas"] = c.zlbas;
    d["leq0"] = c.leq0_matrix;
    d["extension_leq"] = c.extension_matrix;
    d["compact"] = c.compact;
    d["dot"] = catalog_dot(c);
    return d;
  });
  m.def("check_zeq", [](const PresentedMap& f, const Zlba& z1, const Zlba& z2) { return zeq_dict(check_zeq(f, z1, z2)); });
  m.def("extend_remainder", [](const PresentedMap& f, const Zlba& z1, const Zlba& z2) {
    std::vector<std::string> out;
    for (const YPoint& u : extend(f, z1, z2).remainder) out.push_back(u.to_string());
    return out;
  });
  m.def("main_theorem", [](const PresentedMap& f, const Zlba& z1, const Zlba& z2) {
    std::vector<py::dict> rows;
    for (const ClauseRow& r : verify_main_theorem(f, z1, z2).rows) {
      py::dict d;
      d["clause"] = r.clause;
      d["statement"] = r.statement;
      d["predicted"] = r.predicted;
      d["actual"] = r.actual;
      rows.push_back(d);
    }
    return rows;
  });
  m.def("is_skeletal", &is_skeletal);
  m.def("check_axioms",
        [](const Zlba& z, std::uint64_t seed, int randoms) {
          const AxiomReport r = check_axioms(L_X(z), seed, randoms);
          py::dict d;
          for (const AxiomLine& l : r.lines) d[py::str(l.axiom)] = py::make_tuple(l.checked, l.failed);
          return d;
        },
        py::arg("z"), py::arg("seed") = 7, py::arg("randoms") = 500);
  m.def("proximity_round_trip", [](const Zlba& z) { return l_X(L_X(z)) == z; });
  m.def("verify",
        [](const std::string& level, std::uint64_t seed, std::vector<int> criteria) {
          VerifyOptions o;
          o.level = level == "smoke" ? Level::smoke : Level::full;
          o.seed = seed;
          const auto rs = run_verify(o, std::move(criteria));
          std::vector<py::tuple> out;
          for (const auto& r : rs) out.push_back(py::make_tuple(r.id, r.pass, r.checked, r.detail));
          return out;
        },
        py::arg("level") = "smoke", py::arg("seed") = 7, py::arg("criteria") = std::vector<int>{});
  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "zdext");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
