// Python bindings for the main operations: catalog queries, Mordell-Weil
// groups, nef/effective/moving cones, Mori chambers, the degree-2 walker,
// intersection graphs, and the grading checker.

#include <map>
#include <optional>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dpell/chambers.hpp"
#include "dpell/cones.hpp"
#include "dpell/coxcheck.hpp"
#include "dpell/errors.hpp"
#include "dpell/graphs.hpp"
#include "dpell/jsonio.hpp"
#include "dpell/mw.hpp"

namespace py = pybind11;
using namespace dpell;

namespace {

Int int_from_py(py::handle h) {
    return Int(std::string_view(py::str(h).cast<std::string>()));
}

py::int_ int_to_py(const Int& v) {
    PyObject* obj = PyLong_FromString(v.to_string().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

Vec vec_from_py(const py::sequence& seq) {
    Vec out;
    for (auto item : seq) out.push_back(int_from_py(item));
    return out;
}

py::list vec_to_py(const Vec& v) {
    py::list out;
    for (const auto& x : v) out.append(int_to_py(x));
    return out;
}

py::list vecs_to_py(const std::vector<Vec>& vs) {
    py::list out;
    for (const auto& v : vs) out.append(vec_to_py(v));
    return out;
}

py::object json_to_py(const ordered_json& j) {
    switch (j.type()) {
        case ordered_json::value_t::null: return py::none();
        case ordered_json::value_t::boolean: return py::bool_(j.get<bool>());
        case ordered_json::value_t::number_integer: return py::int_(j.get<long long>());
        case ordered_json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case ordered_json::value_t::number_float: return py::float_(j.get<double>());
        case ordered_json::value_t::string: return py::str(j.get<std::string>());
        case ordered_json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case ordered_json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

const Catalog& catalog_from(const py::object& path) {
    if (path.is_none()) return Catalog::builtin();
    static std::map<std::string, Catalog> cache;
    std::string p = path.cast<std::string>();
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, Catalog::load_file(p)).first;
    return it->second;
}

py::dict cone_to_py(const RationalCone& c) {
    py::dict out;
    out["rays"] = vecs_to_py(c.rays);
    out["facets"] = vecs_to_py(c.facets);
    out["lineality"] = vecs_to_py(c.lineality);
    return out;
}

} // namespace

PYBIND11_MODULE(dpell, m) {
    m.doc() = "exact lattice and cone computations for del Pezzo elliptic fibrations";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def(
        "list_types",
        [](py::object degree, py::object finite_mw, py::object catalog) {
            std::optional<int> d;
            if (!degree.is_none()) d = degree.cast<int>();
            std::optional<bool> f;
            if (!finite_mw.is_none()) f = finite_mw.cast<bool>();
            return catalog_from(catalog).list_keys(d, f);
        },
        py::arg("degree") = py::none(), py::arg("finite_mw") = py::none(),
        py::arg("catalog") = py::none(), "list catalog type keys");

    m.def(
        "mw",
        [](const std::string& key, py::object catalog) {
            return mordell_weil(catalog_from(catalog).get(key)).to_string();
        },
        py::arg("key"), py::arg("catalog") = py::none(),
        "Mordell-Weil group rendered as text");

    m.def(
        "mw_group",
        [](const std::string& key, py::object catalog) {
            FgAbelianGroup g = mordell_weil(catalog_from(catalog).get(key));
            py::list torsion;
            for (const auto& d : g.torsion) torsion.append(int_to_py(d));
            return py::make_tuple(g.free_rank, torsion);
        },
        py::arg("key"), py::arg("catalog") = py::none(),
        "Mordell-Weil group as (free_rank, invariant_factors)");

    m.def(
        "nef_cone",
        [](const std::string& key, py::object catalog) {
            return cone_to_py(nef_cone(catalog_from(catalog).get(key)));
        },
        py::arg("key"), py::arg("catalog") = py::none());
    m.def(
        "eff_cone",
        [](const std::string& key, py::object catalog) {
            return cone_to_py(eff_cone(catalog_from(catalog).get(key)));
        },
        py::arg("key"), py::arg("catalog") = py::none());
    m.def(
        "mov_cone",
        [](const std::string& key, py::object catalog) {
            return cone_to_py(mov_cone(catalog_from(catalog).get(key)));
        },
        py::arg("key"), py::arg("catalog") = py::none());

    m.def(
        "nef_decompose",
        [](const std::string& key, const py::sequence& coords, py::object catalog) {
            const FibrationType& t = catalog_from(catalog).get(key);
            return json_to_py(json_of(nef_decompose(t, DivisorClass(vec_from_py(coords)))));
        },
        py::arg("key"), py::arg("divisor"), py::arg("catalog") = py::none(),
        "write a nef class as a non-negative combination of H and the F_I");

    m.def(
        "mori_chambers",
        [](const std::string& key, py::object catalog) {
            return json_to_py(json_of(mori_chambers(catalog_from(catalog).get(key))));
        },
        py::arg("key"), py::arg("catalog") = py::none(),
        "Mori chamber decomposition with its cover certificate");

    m.def(
        "chamber_Ni",
        [](const std::string& key, int i, py::object catalog) {
            return cone_to_py(chamber_Ni(catalog_from(catalog).get(key), i));
        },
        py::arg("key"), py::arg("i"), py::arg("catalog") = py::none());

    m.def(
        "x11_chamber",
        [](long long k) {
            RationalCone c = x11_deg2_chamber(k);
            py::dict out;
            out["rays_basis_b"] = vecs_to_py(c.rays);
            const IntMat to_std = X11Walker::basis_b_to_standard();
            std::vector<Vec> std_rays;
            for (const auto& r : c.rays) std_rays.push_back(to_std.apply(r));
            out["rays"] = vecs_to_py(std_rays);
            return out;
        },
        py::arg("k"), "degree-2 X_11 chamber sigma^k(Nef) in basis B and standard coordinates");

    m.def(
        "graph_dot",
        [](const std::string& key, bool weighted, py::object catalog) {
            return to_dot(build_graph(catalog_from(catalog).get(key)), weighted);
        },
        py::arg("key"), py::arg("weighted") = false, py::arg("catalog") = py::none());

    m.def(
        "graph",
        [](const std::string& key, py::object catalog) {
            return json_to_py(json_of(build_graph(catalog_from(catalog).get(key))));
        },
        py::arg("key"), py::arg("catalog") = py::none(),
        "intersection graph with explicit multiplicities");

    m.def(
        "check_homogeneity",
        [](const std::string& path, bool as_printed) {
            return json_to_py(json_of(check_homogeneity(GradedPresentation::from_file(path),
                                                        as_printed)));
        },
        py::arg("path"), py::arg("as_printed") = false,
        "multigrading homogeneity report for a presentation file");

    m.def(
        "check_homogeneity_text",
        [](const std::string& json_text, bool as_printed) {
            return json_to_py(json_of(
                check_homogeneity(GradedPresentation::from_json_text(json_text), as_printed)));
        },
        py::arg("json_text"), py::arg("as_printed") = false);

    m.def(
        "pairing",
        [](int degree, const py::sequence& a, const py::sequence& b) {
            PicardLattice lat(degree);
            return int_to_py(
                lat.pairing(DivisorClass(vec_from_py(a)), DivisorClass(vec_from_py(b))));
        },
        py::arg("degree"), py::arg("a"), py::arg("b"),
        "intersection pairing on the degree-d Picard lattice");

    m.def(
        "div_curve_pairing",
        [](int degree, const py::sequence& d, const py::sequence& c) {
            PicardLattice lat(degree);
            return int_to_py(
                lat.div_curve_pairing(DivisorClass(vec_from_py(d)), CurveClass(vec_from_py(c))));
        },
        py::arg("degree"), py::arg("divisor"), py::arg("curve"));

    m.def(
        "fiber_class",
        [](int degree) { return vec_to_py(PicardLattice(degree).fiber_class().coords); },
        py::arg("degree"));

    m.def(
        "f_perp_root_type",
        [](int degree, int r) {
            auto res = f_perp_root_type(PicardLattice(degree), r);
            py::dict out;
            out["label"] = res.label;
            out["basis"] = vecs_to_py(res.basis);
            out["gram"] = vecs_to_py(res.gram.m);
            out["cartan_gram"] = vecs_to_py(res.cartan_gram.m);
            out["radical"] = res.radical.empty() ? py::object(py::none())
                                                 : py::object(vec_to_py(res.radical));
            return out;
        },
        py::arg("degree"), py::arg("r"));

    m.def(
        "smith_normal_form",
        [](const py::sequence& rows) {
            std::vector<Vec> r;
            for (auto row : rows) r.push_back(vec_from_py(row.cast<py::sequence>()));
            SmithResult s = smith_normal_form(IntMat::from_rows(std::move(r)));
            return py::make_tuple(vecs_to_py(s.u.m), vecs_to_py(s.d.m), vecs_to_py(s.v.m));
        },
        py::arg("matrix"), "(U, D, V) with D = U * M * V in Smith normal form");

    m.def(
        "quotient",
        [](std::size_t ambient_rank, const py::sequence& generators) {
            std::vector<Vec> gens;
            for (auto g : generators) gens.push_back(vec_from_py(g.cast<py::sequence>()));
            FgAbelianGroup q = quotient(ambient_rank, gens);
            py::list torsion;
            for (const auto& d : q.torsion) torsion.append(int_to_py(d));
            return py::make_tuple(q.free_rank, torsion);
        },
        py::arg("ambient_rank"), py::arg("generators"));

    m.def("selftest", []() {
        for (const auto& t : Catalog::builtin().types()) {
            if (mordell_weil(t) != t.expected_mw) return false;
            if (t.degree == 4 && t.finite_mw && t.mori_curves &&
                !mori_chambers(t).certificate.ok())
                return false;
        }
        return true;
    });
}
