#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "extlab/charmatrix.hpp"
#include "extlab/inequality.hpp"
#include "extlab/lattice.hpp"
#include "extlab/linext.hpp"
#include "extlab/poset.hpp"
#include "extlab/suites.hpp"

namespace py = pybind11;
using namespace extlab;

namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::str(v.get_str())); }

py::object poly_to_py(const QPoly& p)
{
    py::dict d;
    for (auto& [e, c] : p.terms()) d[py::int_(e)] = to_py(c);
    return d;
}

py::object json_to_py(const nlohmann::ordered_json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

ElementTriple triple_of(const std::tuple<int, int, int>& t)
{
    return {std::get<0>(t), std::get<1>(t), std::get<2>(t)};
}

std::pair<std::vector<int>, std::vector<int>> chains_of(const ChainDecomposition& d) { return {d.c1, d.c2}; }

ChainDecomposition decomposition(const Poset& p, const std::optional<std::pair<std::vector<int>, std::vector<int>>>& c)
{
    if (!c) return chain_decomposition_width_two(p);
    ChainDecomposition d{c->first, c->second};
    if (!valid_decomposition(p, d)) throw py::value_error("not a chain decomposition of the poset");
    return d;
}

RunConfig config(int max_n, std::uint64_t seed, int jobs, std::optional<std::uint64_t> budget)
{
    RunConfig c;
    c.max_n = max_n;
    c.seed = seed;
    c.jobs = jobs;
    c.budget = budget;
    return c;
}

}

PYBIND11_MODULE(_extlab, m)
{
    m.doc() = "linear extensions of finite posets: correlation tables, lattice paths, inequality checks";

    py::register_exception<WidthError>(m, "WidthError", PyExc_ValueError);
    py::register_exception<CapError>(m, "CapError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CycleError>(m, "CycleError", PyExc_ValueError);

    py::class_<Poset>(m, "Poset")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init(&Poset::from_relations), py::arg("n"), py::arg("relations"))
        .def_static("parse", &parse_poset, py::arg("text"))
        .def("__len__", &Poset::size)
        .def("less", &Poset::less)
        .def("covers", &Poset::covers)
        .def("width", [](const Poset& p) { return width(p); })
        .def("canonical_form", [](const Poset& p) { return canonical_form(p); })
        .def("dual", [](const Poset& p) { return dual(p); })
        .def("__str__", [](const Poset& p) { return to_text(p); })
        .def("__repr__", [](const Poset& p) { return "Poset('" + to_text(p) + "')"; })
        .def(py::self == py::self);

    m.def("all_posets", &all_posets, py::arg("n"), "unlabeled posets on n elements, one per isomorphism class");
    m.def(
        "width_two_posets",
        [](int a, int b) {
            std::vector<std::pair<Poset, std::pair<std::vector<int>, std::vector<int>>>> out;
            for (auto& w : enumerate_width_two_posets(a, b)) out.emplace_back(w.poset, chains_of(w.chains));
            return out;
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "chain_decomposition", [](const Poset& p) { return chains_of(chain_decomposition_width_two(p)); },
        py::arg("poset"));

    m.def("count_extensions", [](const Poset& p) { return to_py(count_extensions(p)); }, py::arg("poset"));
    m.def(
        "extensions",
        [](const Poset& p) {
            std::vector<std::vector<int>> out;
            for (auto& l : enumerate_extensions(p)) out.push_back(l.labels);
            return out;
        },
        py::arg("poset"), "position lists, positions 1..n indexed by element");

    m.def(
        "correlation_table",
        [](const Poset& p, std::tuple<int, int, int> t, bool signed_offsets, bool q) {
            std::optional<ChainDecomposition> d;
            if (q) d = chain_decomposition_width_two(p);
            CorrelationTable tab = correlation_table(p, d, triple_of(t), signed_offsets);
            py::dict out;
            for (auto& [ij, f] : tab.entries)
                out[py::make_tuple(ij.first, ij.second)] = q ? poly_to_py(f) : py::object(to_py(f.at_one()));
            return out;
        },
        py::arg("poset"), py::arg("triple"), py::arg("signed") = false, py::arg("q") = false,
        "F(i,j) keyed by (i,j); with q=True each value is {exponent: coefficient}");

    m.def(
        "n_matrix",
        [](const Poset& p, std::optional<std::pair<std::vector<int>, std::vector<int>>> chains) {
            Matrix n = n_matrix_product(characteristic_sequence(p, decomposition(p, chains)));
            std::vector<std::vector<py::int_>> rows;
            for (int i = 1; i <= n.rows(); ++i) {
                rows.emplace_back();
                for (int j = 1; j <= n.cols(); ++j) rows.back().push_back(to_py(n(i, j)));
            }
            return rows;
        },
        py::arg("poset"), py::arg("chains") = py::none());

    m.def(
        "render",
        [](const Poset& p, std::optional<int> path) {
            ChainDecomposition d = chain_decomposition_width_two(p);
            LatticeRegion r = region_of(p, d);
            if (!path) return r.render();
            auto exts = enumerate_extensions(p);
            if (*path < 0 || *path >= static_cast<int>(exts.size())) throw py::index_error("extension index");
            return r.render(path_of_extension(exts[*path], d));
        },
        py::arg("poset"), py::arg("path") = py::none());

    m.def(
        "lattice_path",
        [](const Poset& p, const std::vector<int>& positions) {
            return path_of_extension(LinearExtension{positions}, chain_decomposition_width_two(p)).steps;
        },
        py::arg("poset"), py::arg("positions"));

    m.def(
        "classify_equality",
        [](const Poset& p, std::tuple<int, int, int> t, int k, int l) {
            CpcEquality e = classify_cpc_equality(p, chain_decomposition_width_two(p), triple_of(t), k, l);
            py::dict out;
            out["cases"] = e.case_name();
            out["equality"] = e.equality;
            out["q_equality"] = e.q_equality;
            out["consistent"] = e.verdict.holds;
            return out;
        },
        py::arg("poset"), py::arg("triple"), py::arg("k"), py::arg("l"));

    m.def(
        "xyz_gap", [](const Poset& p, int x, int y, int z) { return to_py(xyz_gap(p, x, y, z)); }, py::arg("poset"),
        py::arg("x"), py::arg("y"), py::arg("z"));

    m.def("suite_names", &suite_names);
    m.def("search_scopes", &search_scopes);
    m.def(
        "verify",
        [](const std::string& suite, int max_n, std::uint64_t seed, int jobs) {
            RunConfig c = config(max_n, seed, jobs, std::nullopt);
            c.suite = suite;
            if (suite != "all" && !known_suite(suite)) throw py::value_error("unknown suite: " + suite);
            std::vector<SuiteReport> rs;
            {
                py::gil_scoped_release nogil;
                rs = run_verify(c);
            }
            return json_to_py(verify_body(c, rs));
        },
        py::arg("suite") = "all", py::arg("max_n") = 4, py::arg("seed") = 1, py::arg("jobs") = 1,
        "deterministic report body, as written by the command-line tool");
    m.def(
        "search",
        [](const std::string& scope, int max_n, std::optional<std::uint64_t> budget, std::uint64_t seed, int jobs) {
            RunConfig c = config(max_n, seed, jobs, budget);
            c.command = "search";
            c.scope = scope;
            std::optional<SuiteReport> r;
            {
                py::gil_scoped_release nogil;
                r = search_counterexample(scope, c);
            }
            return json_to_py(search_body(c, *r));
        },
        py::arg("scope"), py::arg("max_n") = 6, py::arg("budget") = py::none(), py::arg("seed") = 1,
        py::arg("jobs") = 1);
}
