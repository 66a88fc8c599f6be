// Python bindings. Big integers cross the boundary as Python ints (via strings).
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symcone/classifier.hpp"
#include "symcone/io.hpp"
#include "symcone/verification.hpp"

namespace py = pybind11;
using namespace symcone;

namespace {

py::int_ to_py(const Integer& z)
{
    return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::list to_py(const IntVector& v)
{
    py::list out;
    for (const auto& z : v)
        out.append(to_py(z));
    return out;
}

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

PermGroup group_of(const std::string& gens, int degree, const std::string& name)
{
    if (!name.empty()) {
        const auto catalog = load_group_catalog(data_dir() / "groups.json");
        const auto* e = find_group_loose(catalog, name);
        if (!e || !e->group)
            throw py::value_error("unknown group name: " + name);
        return *e->group;
    }
    if (degree < 1)
        throw py::value_error("degree is required with generators");
    return group_from_string(gens, degree);
}

OrbitStructure structure_of(const std::string& gens, int degree, const std::string& name)
{
    return orbit_structure(group_of(gens, degree, name));
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "symmetric Shannon cones";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ClassificationContradiction>(m, "ClassificationContradiction");

    m.def("data_dir", [] { return data_dir().string(); });

    m.def("group_order", [](const std::string& gens, int degree, const std::string& name) {
        return group_of(gens, degree, name).order();
    }, py::arg("gens") = "", py::arg("degree") = 0, py::arg("name") = "");

    m.def("orbits", [](const std::string& gens, int degree, const std::string& name) {
        const auto s = structure_of(gens, degree, name);
        py::list out;
        for (const auto& o : s.orbits) {
            py::list members;
            for (Mask a : o)
                members.append(mask_label(a));
            out.append(members);
        }
        return out;
    }, py::arg("gens") = "", py::arg("degree") = 0, py::arg("name") = "",
       "orbits of the group on nonempty subsets, in canonical order");

    m.def("cone", [](const std::string& gens, int degree, const std::string& name) {
        const auto h = build_hrep(structure_of(gens, degree, name));
        py::list rows;
        for (const auto& r : h.rows)
            rows.append(py::cast(r));
        return py::make_tuple(orbit_labels(h.structure), rows);
    }, py::arg("gens") = "", py::arg("degree") = 0, py::arg("name") = "",
       "(orbit labels, rows a) of the symmetrized Shannon cone a.x >= 0");

    m.def("rays", [](const std::string& gens, int degree, const std::string& name, bool brute) {
        const auto h = build_hrep(structure_of(gens, degree, name));
        const auto v = brute ? cross_check_brute(h, 15) : double_description(h);
        py::list rays;
        for (const auto& r : v.rays)
            rays.append(to_py(r));
        return rays;
    }, py::arg("gens") = "", py::arg("degree") = 0, py::arg("name") = "", py::arg("brute_force") = false,
       "extreme rays, primitive integer vectors in lexicographic order");

    m.def("certify", [](const std::string& gens, int degree, const std::string& name, const std::string& certs,
                     std::uint64_t search_budget) {
        const auto s = structure_of(gens, degree, name);
        const auto evidence = load_matrices(certs.empty() ? data_dir() / "certificates" : std::filesystem::path(certs));
        const auto c = certify_class(s, evidence, false, search_budget);
        py::list rays;
        for (std::size_t k = 0; k < c.rays.size(); ++k)
            rays.append(py::dict(py::arg("ray") = to_py(c.vrep.rays[k]),
                                 py::arg("status") = to_string(c.rays[k].kind),
                                 py::arg("reason") = c.rays[k].reason));
        return py::dict(py::arg("status") = to_string(c.value), py::arg("summary") = c.summary,
                        py::arg("rays") = rays);
    }, py::arg("gens") = "", py::arg("degree") = 0, py::arg("name") = "", py::arg("certs") = "",
       py::arg("search_budget") = std::uint64_t{1} << 20);

    m.def("classify", [](int degree, const std::string& mode) {
        ClassifyOptions opt;
        if (mode == "enumerate")
            opt.mode = ClassifyMode::Enumerate;
        else if (mode != "catalog")
            throw py::value_error("mode must be 'catalog' or 'enumerate'");
        ClassificationReport r;
        {
            py::gil_scoped_release release;
            r = classify_degree(degree, opt);
        }
        return to_py(r.to_json());
    }, py::arg("degree"), py::arg("mode") = "catalog");

    m.def("subgroup_classes", [](int degree) {
        py::list out;
        for (const auto& g : enumerate_subgroup_classes(degree).representatives)
            out.append(g.generator_string());
        return out;
    }, py::arg("degree"));

    m.def("acceptance", [](std::vector<int> only, int instances) {
        AcceptanceOptions opt;
        opt.only.insert(only.begin(), only.end());
        opt.property_instances = instances;
        std::vector<CriterionResult> results;
        {
            py::gil_scoped_release release;
            results = run_acceptance(opt);
        }
        py::list out;
        for (const auto& r : results)
            out.append(py::dict(py::arg("id") = r.id, py::arg("title") = r.title, py::arg("passed") = r.pass,
                                py::arg("details") = r.details, py::arg("seconds") = r.seconds));
        return out;
    }, py::arg("only") = std::vector<int>{}, py::arg("instances") = 200);
}
