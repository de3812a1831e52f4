#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "equilift/commands.hpp"
#include "equilift/common.hpp"
#include "equilift/grp.hpp"
#include "equilift/instance.hpp"
#include "equilift/parallel.hpp"
#include "json.hpp"

namespace py = pybind11;
using namespace equilift;

namespace {

ExecPolicy policy(int workers) { return ExecPolicy::make(workers); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite-scale engine for sites, cocycle classes, and "
              "equivariant lifting";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<unsupported_error>(m, "UnsupportedError",
                                              PyExc_NotImplementedError);

    py::class_<instance::InstanceFile>(m, "Instance",
                                       "A parsed and validated instance file.")
        .def_property_readonly("version",
                               [](const instance::InstanceFile& f) { return f.version; })
        .def_property_readonly("blocks", [](const instance::InstanceFile& f) {
            std::vector<std::string> out;
            if (f.site) out.push_back("site");
            if (f.classify) out.push_back("classify");
            if (f.lift) out.push_back("lift");
            if (f.extension) out.push_back("extension");
            if (f.homogeneous) out.push_back("homogeneous");
            if (f.clutch) out.push_back("clutch");
            return out;
        });

    m.def("load", &instance::load, py::arg("path"),
          "Read, parse, and validate an instance file.");
    m.def(
        "loads",
        [](const std::string& text) {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(text);
            } catch (const nlohmann::json::parse_error& e) {
                throw input_error(std::string("JSON syntax error: ") + e.what());
            }
            return instance::parse(j);
        },
        py::arg("text"), "Parse and validate an instance from a JSON string.");
    m.def(
        "dumps",
        [](const instance::InstanceFile& f) { return instance::to_json(f).dump(2); },
        py::arg("instance"), "Serialize an instance back to JSON text.");

    m.def(
        "check_site",
        [](const instance::InstanceFile& f) {
            return commands::cmd_check_site(f).doc.dump();
        },
        py::arg("instance"), "Site report as a JSON string.");
    m.def(
        "classify",
        [](const instance::InstanceFile& f, int degree, int workers) {
            return commands::cmd_classify(f, degree, policy(workers)).doc.dump();
        },
        py::arg("instance"), py::arg("degree") = 1, py::arg("workers") = 1,
        "Classification report as a JSON string.");
    m.def(
        "lift",
        [](const instance::InstanceFile& f, int workers) {
            return commands::cmd_lift(f, policy(workers)).doc.dump();
        },
        py::arg("instance"), py::arg("workers") = 1,
        "Lifting report as a JSON string.");
    m.def(
        "homogeneous",
        [](const instance::InstanceFile& f) {
            return commands::cmd_homogeneous(f).doc.dump();
        },
        py::arg("instance"), "Homogeneous-bundle report as a JSON string.");
    m.def(
        "clutch",
        [](const instance::InstanceFile& f, int workers) {
            return commands::cmd_clutch(f, policy(workers)).doc.dump();
        },
        py::arg("instance"), py::arg("workers") = 1,
        "Clutching report as a JSON string.");

    m.def(
        "group_names",
        [](const std::string& spec) { return grp::FiniteGroup::named(spec).names(); },
        py::arg("spec"),
        "Element names of a built-in group (\"Z1\", \"Zn\", \"S3\", \"S4\", "
        "\"V4\", \"Q8\", or products like \"Z2xZ2\").");
    m.def(
        "group_order",
        [](const std::string& spec) { return grp::FiniteGroup::named(spec).order(); },
        py::arg("spec"), "Order of a built-in group.");
}
