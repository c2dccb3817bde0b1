#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "teqset/counterexample.hpp"
#include "teqset/isomorphism.hpp"
#include "teqset/random.hpp"
#include "teqset/report_json.hpp"
#include "teqset/search.hpp"
#include "teqset/teq.hpp"
#include "teqset/text_format.hpp"

namespace py = pybind11;
using namespace teqset;

namespace {

// Sets cross the boundary as sorted lists of 0-based indices.
AltSet to_set(const std::vector<int>& members, int order) {
    AltSet s;
    for (int m : members) {
        if (m < 0 || m >= order) throw py::index_error("alternative " + std::to_string(m) + " out of range");
        s = s.with(m);
    }
    return s;
}

std::vector<std::vector<int>> to_lists(const std::vector<AltSet>& sets) {
    std::vector<std::vector<int>> out;
    for (AltSet s : sets) out.push_back(s.members());
    return out;
}

}  // namespace

PYBIND11_MODULE(_teqset, m) {
    m.doc() = "Tournament equilibrium set and retentive-set computations (0-based indices).";

    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    m.attr("MAX_ORDER") = kMaxOrder;

    py::class_<Tournament>(m, "Tournament")
        .def(py::init([](const std::vector<std::vector<bool>>& matrix) { return Tournament::from_matrix(matrix); }),
             py::arg("matrix"), "Build from a square 0/1 matrix; matrix[i][j] means i dominates j.")
        .def_property_readonly("order", &Tournament::order)
        .def("dominates", &Tournament::dominates)
        .def("out_set", [](const Tournament& t, int i) { return t.out_set(i).members(); })
        .def("in_set", [](const Tournament& t, int i) { return t.in_set(i).members(); })
        .def("score_sequence", &Tournament::score_sequence)
        .def("serialize", &serialize_tournament)
        .def("__eq__", [](const Tournament& a, const Tournament& b) { return a == b; })
        .def("__repr__", [](const Tournament& t) { return "<Tournament order=" + std::to_string(t.order()) + ">"; });

    m.def("parse", &parse_tournament, py::arg("text"));
    m.def("random_tournament", &random_tournament, py::arg("order"), py::arg("seed"));
    m.def(
        "dominators",
        [](const Tournament& t, int x, std::optional<std::vector<int>> within) {
            if (x < 0 || x >= t.order()) throw py::index_error("alternative out of range");
            const AltSet w = within ? to_set(*within, t.order()) : t.universe();
            return dominators(t, w, x).members();
        },
        py::arg("t"), py::arg("x"), py::arg("within") = py::none());
    m.def(
        "restrict",
        [](const Tournament& t, const std::vector<int>& subset) {
            Restriction r = restrict(t, to_set(subset, t.order()));
            return py::make_tuple(r.tournament, r.to_original);
        },
        py::arg("t"), py::arg("subset"));
    m.def(
        "find_isomorphism",
        [](const Tournament& a, const Tournament& b) -> std::optional<std::vector<int>> {
            auto iso = find_isomorphism(a, b);
            if (!iso) return std::nullopt;
            return iso->map;
        },
        py::arg("a"), py::arg("b"));
    m.def("teq", [](const Tournament& t) { return teq(t).members(); }, py::arg("t"));
    m.def("teq_bruteforce", [](const Tournament& t) { return teq_bruteforce(t).members(); }, py::arg("t"));
    m.def(
        "minimal_retentive_sets", [](const Tournament& t) { return to_lists(minimal_retentive_sets(t)); },
        py::arg("t"));
    m.def(
        "is_retentive",
        [](const Tournament& t, const std::vector<int>& set) {
            TeqCache cache(t);
            return is_retentive(cache, to_set(set, t.order()));
        },
        py::arg("t"), py::arg("set"));
    m.def("compose_structured", &compose_structured, py::arg("half"), py::arg("split"));

    m.def("build_counterexample", [] { return build_counterexample().tournament; });
    m.def("verify_counterexample_json", [] {
        py::gil_scoped_release release;
        return report_to_json(verify_counterexample_claims(build_counterexample())).dump();
    });
    m.def(
        "search_random_json",
        [](int order, std::uint64_t trials, std::uint64_t seed, const std::string& mode, std::size_t witness_cap,
           unsigned threads) {
            SearchConfig c;
            c.order = order;
            c.trials = trials;
            c.seed = seed;
            c.mode = parse_search_mode(mode);
            c.witness_cap = witness_cap;
            c.threads = threads;
            py::gil_scoped_release release;
            return report_to_json(search_random(c)).dump();
        },
        py::arg("order"), py::arg("trials"), py::arg("seed"), py::arg("mode") = "uniform",
        py::arg("witness_cap") = 10, py::arg("threads") = 0);
}
