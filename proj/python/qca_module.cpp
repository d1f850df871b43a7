#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qca/errors.hpp"
#include "qca/json_io.hpp"
#include "qca/transport.hpp"
#include "qca/tropical.hpp"
#include "qca/uq.hpp"

namespace py = pybind11;
using namespace qca;

namespace {

// dicts cross the boundary as JSON text
py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }
json from_py(const py::object& o) { return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>()); }

Word word_of(const CartanData& c, const std::string& w) { return w.empty() ? c.w0 : parse_word(w, c.r); }

}  // namespace

PYBIND11_MODULE(_qca, m) {
    m.doc() = "exact quantum cluster algebra kernel";

    static py::exception<Error> error(m, "QcaError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object kind = py::str(e.kind());
            PyErr_SetObject(error.ptr(), py::make_tuple(kind, py::str(e.what())).ptr());
        }
    });

    m.def(
        "build",
        [](const std::string& type, const std::string& word, const std::string& shape) {
            auto c = parse_type(type);
            auto w = word_of(c, word);
            if (shape == "triangle") return to_py(triangle_to_json(build_triangle(c, w)));
            if (shape != "disk") throw ParseError("unknown shape " + shape);
            return to_py(disk_to_json(build_disk_seed(c, w)));
        },
        py::arg("type"), py::arg("word") = "", py::arg("shape") = "disk");

    m.def(
        "mutate",
        [](const py::object& seed, const std::string& vertex) {
            return to_py(quiver_from_any(from_py(seed)).mutated(vertex).to_json());
        },
        py::arg("seed"), py::arg("vertex"));

    m.def(
        "transport",
        [](const py::object& seed, const py::object& element, const std::vector<std::string>& path) {
            auto s = make_seed(quiver_from_any(from_py(seed)));
            auto f = element_from_json(from_py(element), s);
            return to_py(element_to_json(transport(f, path)));
        },
        py::arg("seed"), py::arg("element"), py::arg("path"));

    m.def(
        "verify",
        [](const std::string& type, const std::string& word, bool quotient, bool braid) {
            auto c = parse_type(type);
            auto ctx = make_kappa_context(c, word_of(c, word), quotient);
            return to_py(report_to_json(braid ? braid_relation_suite(ctx) : relation_suite(ctx)));
        },
        py::arg("type"), py::arg("word") = "", py::arg("quotient") = false, py::arg("braid") = false);

    m.def(
        "kappa",
        [](const std::string& type, const std::string& word, const std::string& expr, bool quotient) {
            auto c = parse_type(type);
            auto ctx = make_kappa_context(c, word_of(c, word), quotient);
            return to_py(element_to_json(kappa(ctx, UqExpression::parse(expr))));
        },
        py::arg("type"), py::arg("word") = "", py::arg("expr") = "", py::arg("quotient") = false);

    m.def(
        "count",
        [](const std::string& type, const std::string& word, const IntVec& left, const IntVec& right) {
            auto c = parse_type(type);
            return count_F0_dim(c, word_of(c, word), {left, right});
        },
        py::arg("type"), py::arg("word"), py::arg("left"), py::arg("right"));

    m.def(
        "trop_mutate",
        [](const py::object& seed, const std::map<std::string, long long>& point, const std::vector<std::string>& path) {
            auto s = make_seed(quiver_from_any(from_py(seed)));
            TropicalPoint p{s, std::vector<long long>(s->size(), 0)};
            for (const auto& [id, v] : point) p.coords[s->index(id)] = v;
            for (const auto& id : path) p = trop_mutate(p, p.chart->index(id));
            std::map<std::string, long long> out;
            for (size_t i = 0; i < s->size(); ++i) out[s->vertex(i).id] = p.coords[i];
            return out;
        },
        py::arg("seed"), py::arg("point"), py::arg("path"));
}
