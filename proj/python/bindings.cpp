/* Python bindings: a thin text-based facade over the core library. Objects,
   morphisms and braid words cross the boundary as strings in the CLI
   grammar; matrices come back as nested lists of Laurent-polynomial
   strings; reports come back as plain dicts. */

#include "braidcoh/braid.hpp"
#include "braidcoh/conditions.hpp"
#include "braidcoh/parser.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace braidcoh;

namespace {

Assignment to_assignment(const std::map<std::string, std::vector<int>>& atoms) {
    if (atoms.empty()) return default_assignment();
    Assignment asg;
    for (const auto& [name, degrees] : atoms) asg.atoms[name] = degrees;
    return asg;
}

py::list matrix_rows(const PolyMatrix& m) {
    py::list rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        py::list row;
        for (std::size_t c = 0; c < m.cols(); ++c) row.append(m.at(r, c).str());
        rows.append(row);
    }
    return rows;
}

py::dict eval_morphism(const std::string& word,
                       const std::map<std::string, std::vector<int>>& atoms, bool q_one) {
    const Morph m = parse_morphism(word);
    const Ends e = ends(m);
    const Assignment asg = to_assignment(atoms);
    GradedModel model;
    model.q_one = q_one;
    const PolyMatrix mat = interpret_morphism(m, asg, model);
    py::dict out;
    out["input"] = to_string(m);
    out["dom"] = to_string(e.dom);
    out["cod"] = to_string(e.cod);
    out["rows"] = mat.rows();
    out["cols"] = mat.cols();
    out["entries"] = matrix_rows(mat);
    return out;
}

py::dict report_dict(const ConditionReport& r) {
    py::dict d;
    d["name"] = r.id;
    d["figure"] = r.figure;
    d["verdict"] = r.commutes ? "commutes" : "fails";
    d["expected"] = r.expected_commutes ? "commutes" : "fails";
    d["met"] = r.met;
    d["vacuous"] = r.vacuous;
    d["base_vertex"] = r.base_vertex;
    d["max_dim"] = r.max_dim;
    if (r.witness.has_value()) {
        py::dict w;
        w["row"] = r.witness->row;
        w["col"] = r.witness->col;
        w["lhs"] = r.witness->lhs.str();
        w["rhs"] = r.witness->rhs.str();
        d["witness"] = w;
    }
    return d;
}

py::dict check(const std::string& selector,
               const std::map<std::string, std::vector<int>>& atoms, bool q_one,
               std::size_t base) {
    const auto name = lookup(selector);
    if (!name.has_value()) throw py::value_error("unknown condition: " + selector);
    GradedModel model;
    model.q_one = q_one;
    return report_dict(check_condition(*name, model, to_assignment(atoms), base));
}

py::dict run_suite_py(const std::map<std::string, std::vector<int>>& atoms, bool q_one) {
    GradedModel model;
    model.q_one = q_one;
    const SuiteReport rep = run_suite(model, to_assignment(atoms));
    py::list conditions;
    for (const auto& r : rep.conditions) conditions.append(report_dict(r));
    py::dict out;
    out["ok"] = rep.ok;
    out["conditions"] = conditions;
    return out;
}

py::list conditions_py() {
    py::list out;
    for (const auto& ci : registry()) {
        py::dict d;
        d["name"] = std::string(ci.id);
        d["figure"] = std::string(ci.figure);
        d["arity"] = ci.arity;
        d["expected"] = ci.expect_fail ? "fails" : "commutes";
        out.append(d);
    }
    return out;
}

bool braid_equal_py(const std::string& a, const std::string& b) {
    BraidWord wa = parse_braid(a);
    BraidWord wb = parse_braid(b);
    const int strands = std::max(wa.strands, wb.strands);
    wa.strands = wb.strands = strands;
    return braid_equal(wa, wb);
}

std::string braid_image(const std::string& word, const std::string& atom_name) {
    const BraidWord w = strict_image(parse_morphism(word), atom_name);
    std::string out;
    for (const BraidGen& g : w.gens) {
        if (!out.empty()) out += ' ';
        out += 's' + std::to_string(g.index) + (g.sign < 0 ? "'" : "");
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "coherence verification for a symmetric (+) and a braided (*) "
              "monoidal structure with distributivity";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<TypeError>(m, "TypeCheckError", PyExc_ValueError);
    py::register_exception<ArityError>(m, "ArityError", PyExc_ValueError);
    py::register_exception<UnassignedAtom>(m, "UnassignedAtomError", PyExc_KeyError);

    m.def("eval_morphism", &eval_morphism, py::arg("word"),
          py::arg("atoms") = std::map<std::string, std::vector<int>>{},
          py::arg("q_one") = false,
          "Parse and typecheck a morphism word, then evaluate it to a matrix "
          "of Laurent-polynomial strings in the graded model.");
    m.def(
        "dom",
        [](const std::string& word) { return to_string(ends(parse_morphism(word)).dom); },
        py::arg("word"), "Domain object of a morphism word.");
    m.def(
        "cod",
        [](const std::string& word) { return to_string(ends(parse_morphism(word)).cod); },
        py::arg("word"), "Codomain object of a morphism word.");
    m.def("check", &check, py::arg("selector"),
          py::arg("atoms") = std::map<std::string, std::vector<int>>{},
          py::arg("q_one") = false, py::arg("base") = 0,
          "Check one named condition; selector is a name like 'MulHexFront' "
          "or a figure label like 'F6'.");
    m.def("run_suite", &run_suite_py,
          py::arg("atoms") = std::map<std::string, std::vector<int>>{},
          py::arg("q_one") = false, "Run every registered condition.");
    m.def("conditions", &conditions_py, "List the registered conditions.");
    m.def("braid_equal", &braid_equal_py, py::arg("a"), py::arg("b"),
          "Decide equality of two braid words like \"s1 s2 s1'\".");
    m.def("braid_image", &braid_image, py::arg("word"), py::arg("atom") = "x",
          "Braid word of a morphism in the strict multiplicative fragment "
          "over tensor powers of one atom.");
}
