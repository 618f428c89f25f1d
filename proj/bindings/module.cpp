// Python bindings for the main operations: parsing and rendering,
// rewriting to normal form, commutators, the central elements, basis
// enumeration, the module-action checks, and the Ore witnesses.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "redalg/drsl2.hpp"
#include "redalg/expr.hpp"
#include "redalg/ore.hpp"
#include "redalg/presentation_io.hpp"
#include "redalg/rewrite.hpp"
#include "redalg/weylmod.hpp"

namespace py = pybind11;
using namespace redalg;

namespace {

const DRsl2& algebra() {
    static const DRsl2 alg = build_drsl2();
    return alg;
}

}  // namespace

PYBIND11_MODULE(_redalg, m) {
    m.doc() =
        "exact rewriting engine for the diagonal reduction algebra of sl(2)";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<NCElement>(m, "Element")
        .def(py::init([](const std::string& src) {
                 return parse_element(src);
             }),
             py::arg("source"))
        .def("__add__",
             [](const NCElement& a, const NCElement& b) { return a + b; })
        .def("__sub__",
             [](const NCElement& a, const NCElement& b) { return a - b; })
        .def("__mul__",
             [](const NCElement& a, const NCElement& b) { return a * b; })
        .def("__neg__", [](const NCElement& a) { return -a; })
        .def("__eq__",
             [](const NCElement& a, const NCElement& b) { return a == b; })
        .def("__repr__", [](const NCElement& a) { return render(a); })
        .def("__str__", [](const NCElement& a) { return render(a); })
        .def("is_zero", &NCElement::is_zero)
        .def("term_count", &NCElement::term_count)
        .def("words", [](const NCElement& a) {
            std::vector<std::vector<std::string>> out;
            for (const auto& [w, c] : a.terms()) {
                std::vector<std::string> word;
                for (const Generator& g : w) word.push_back(g.name);
                out.push_back(std::move(word));
            }
            return out;
        });

    m.def("parse", [](const std::string& src) { return parse_element(src); },
          py::arg("source"), "parse an expression to an element");
    m.def("render", [](const NCElement& e) { return render(e); },
          py::arg("element"), "canonical text rendering");
    m.def(
        "normal_form",
        [](const NCElement& e, std::size_t max_steps) {
            return normal_form(algebra().presentation, e, max_steps);
        },
        py::arg("element"), py::arg("max_steps") = kDefaultMaxSteps,
        "rewrite to the ordered normal form");
    m.def(
        "commutator",
        [](const NCElement& a, const NCElement& b) {
            return commutator(algebra(), a, b);
        },
        py::arg("a"), py::arg("b"), "normal form of a*b - b*a");
    m.def("casimir1", [] { return casimir1(algebra()); },
          "the linear central element");
    m.def("casimir2", [] { return casimir2(algebra()); },
          "the quadratic central element");
    m.def(
        "check_confluence",
        [] {
            ConfluenceReport r = check_confluence(algebra().presentation);
            return r.overall;
        },
        "resolve every decreasing triple both ways and compare");
    m.def(
        "basis",
        [](std::size_t max_degree) {
            std::vector<std::vector<std::string>> out;
            for (const Word& w :
                 enumerate_basis(algebra().presentation, max_degree)) {
                std::vector<std::string> word;
                for (const Generator& g : w) word.push_back(g.name);
                out.push_back(std::move(word));
            }
            return out;
        },
        py::arg("max_degree"), "ordered basis words up to a length bound");
    m.def(
        "graded_symbol_check",
        [] { return graded_symbol_check(algebra()).overall; },
        "leading-coefficient constraints of the rules");
    m.def(
        "zero_divisor_probe",
        [](std::uint64_t seed, std::size_t trials, std::size_t max_degree) {
            return !zero_divisor_probe(algebra(), seed, trials, max_degree)
                        .found;
        },
        py::arg("seed") = 0, py::arg("trials") = 200,
        py::arg("max_degree") = 3,
        "True when no random product vanishes");
    m.def(
        "oracle_check",
        [](const NCElement& e) {
            ActionCoeffs cf = power_basis_action();
            return oracle_check_relation(
                cf, e, normal_form(algebra().presentation, e));
        },
        py::arg("element"),
        "compare the module action of an element and of its normal form");
    m.def(
        "casimir_scalars",
        [] {
            CasimirScalars cs =
                casimir_scalars(power_basis_action(), algebra());
            return std::make_pair(cs.c1.str(), cs.c2.str());
        },
        "scalars by which the central elements act on the module");
    m.def(
        "ore_witness",
        [](const NCElement& a, int k) {
            OreWitness w = ore_right(a, Denominator{k});
            return std::make_pair(w.s_tilde.str(), w.a_tilde);
        },
        py::arg("a"), py::arg("k") = 0,
        "(s_tilde, a_tilde) with a * s_tilde = (h+k) * a_tilde");
    m.def("presentation_text",
          [] { return write_presentation(algebra().presentation); },
          "the built-in presentation in the declarative text format");
}
