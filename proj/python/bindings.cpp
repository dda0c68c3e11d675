#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "moqa/decision.hpp"
#include "moqa/dfa.hpp"
#include "moqa/error.hpp"
#include "moqa/monoid.hpp"
#include "moqa/qfa_format.hpp"
#include "moqa/quantum.hpp"

namespace py = pybind11;
using namespace moqa;

namespace {

// Python words and alphabets are strings of single-character symbols.
Word to_word(const std::string& s) { return word_from_chars(s); }

std::vector<std::vector<Complex>> to_rows(const ComplexMatrix& m) {
    std::vector<std::vector<Complex>> rows(m.rows(), std::vector<Complex>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            rows[r][c] = m(r, c);
        }
    }
    return rows;
}

BoolOp to_op(const std::string& name) {
    if (name == "union") return BoolOp::Union;
    if (name == "intersection") return BoolOp::Intersection;
    if (name == "difference") return BoolOp::Difference;
    if (name == "symmetric_difference") return BoolOp::SymmetricDifference;
    throw InputError("unknown boolean operation '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_moqa, m) {
    m.doc() = "Measure-only quantum finite automata and literally idempotent piecewise testable languages";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<SpecError>(m, "SpecError", base.ptr());
    py::register_exception<InputError>(m, "InputError", base.ptr());
    py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
    py::register_exception<ResourceError>(m, "ResourceError", base.ptr());

    py::class_<PTSpec>(m, "PTSpec")
        .def(py::init(&PTSpec::from_chars), py::arg("letters"), py::arg("alphabet"))
        .def_property_readonly("letters", [](const PTSpec& s) { return word_to_string(s.letters()); })
        .def_property_readonly("alphabet", [](const PTSpec& s) { return s.alphabet().to_string(); })
        .def_property_readonly("k", &PTSpec::k)
        .def("matches", [](const PTSpec& s, const std::string& w) { return s.matches(to_word(w)); })
        .def("__repr__", [](const PTSpec& s) { return "PTSpec([" + s.to_string() + "])"; });

    py::class_<Mon1qfa>(m, "Mon1qfa")
        .def_property_readonly("dimension", &Mon1qfa::dimension)
        .def_property_readonly("alphabet", [](const Mon1qfa& a) { return a.alphabet().to_string(); })
        .def_property_readonly("accepting", &Mon1qfa::accepting)
        .def("probability",
             [](const Mon1qfa& a, const std::string& w) { return acceptance_probability(a, to_word(w)); })
        .def("serialize", &serialize_mon1qfa);

    m.def("build_mon1qfa", &build_mon1qfa, py::arg("spec"));
    m.def("parse_mon1qfa", [](const std::string& text) { return parse_mon1qfa(text); });
    m.def("acceptance_probability",
          [](const Mon1qfa& a, const std::string& w) { return acceptance_probability(a, to_word(w)); },
          py::arg("automaton"), py::arg("word"));
    m.def("build_up_projector",
          [](const PTSpec& s, const std::string& alpha) { return to_rows(build_up_projector(s, alpha)); });
    m.def("build_down_projector",
          [](const PTSpec& s, const std::string& alpha) { return to_rows(build_down_projector(s, alpha)); });
    m.def("cutpoint_params", [](std::size_t k) {
        const auto c = cutpoint_params(k);
        return py::make_tuple(c.lambda, c.delta);
    }, py::arg("k"));

    py::class_<Dfa>(m, "Dfa")
        .def_property_readonly("state_count", &Dfa::state_count)
        .def_property_readonly("alphabet", [](const Dfa& d) { return d.alphabet().to_string(); })
        .def_property_readonly("initial", &Dfa::initial)
        .def_property_readonly("accepting_states", &Dfa::accepting_states)
        .def("accepts", [](const Dfa& d, const std::string& w) { return accepts(d, to_word(w)); })
        .def("serialize", &serialize_dfa)
        .def("__eq__", [](const Dfa& a, const Dfa& b) { return a == b; });

    m.def("parse_dfa", [](const std::string& text) { return parse_dfa(text); });
    m.def("minimize", &minimize);
    m.def("pt_canonical_dfa", &pt_canonical_dfa);
    m.def("complement", &complement);
    m.def("product", [](const Dfa& a, const Dfa& b, const std::string& op) { return product(a, b, to_op(op)); },
          py::arg("lhs"), py::arg("rhs"), py::arg("op"));
    m.def("equivalent", &equivalent);
    m.def("is_literally_idempotent", &is_literally_idempotent);
    m.def("is_partially_ordered", &is_partially_ordered);
    m.def("variation", [](const Dfa& d, const std::string& w) { return variation(d, to_word(w)); });
    m.def("sup_variation", [](const Dfa& d) { return sup_variation(d).bound; },
          "Longest state-change count over all words, or None when unbounded.");
    m.def("random_dfa", [](std::uint64_t seed, std::size_t n, const std::string& alphabet) {
        return random_dfa(seed, n, Alphabet::from_chars(alphabet));
    }, py::arg("seed"), py::arg("n_states"), py::arg("alphabet"));

    py::class_<GreenReport>(m, "GreenReport")
        .def_readonly("monoid_size", &GreenReport::monoid_size)
        .def_readonly("r_trivial", &GreenReport::r_trivial)
        .def_readonly("l_trivial", &GreenReport::l_trivial)
        .def_readonly("j_trivial", &GreenReport::j_trivial)
        .def_readonly("block_group", &GreenReport::block_group)
        .def_readonly("letters_idempotent", &GreenReport::letters_idempotent)
        .def_readonly("idempotent_count", &GreenReport::idempotent_count);
    m.def("green_report", [](const Dfa& d) { return green_report(minimize(d)); },
          "Green's-relation report for the syntactic monoid of the DFA's language.");

    py::class_<Diagnosis>(m, "Diagnosis")
        .def_readonly("minimal_state_count", &Diagnosis::minimal_state_count)
        .def_readonly("literally_idempotent", &Diagnosis::literally_idempotent)
        .def_readonly("partially_ordered", &Diagnosis::partially_ordered)
        .def_readonly("piecewise_testable", &Diagnosis::piecewise_testable)
        .def_readonly("verdict", &Diagnosis::verdict)
        .def_property_readonly("failure_reason", [](const Diagnosis& d) -> std::optional<std::string> {
            if (!d.failure_reason) return std::nullopt;
            return std::string(to_string(*d.failure_reason));
        });
    m.def("is_lmo_member", &is_lmo_member);
    m.def("lmo_oracle", [](const Dfa& d) { return lmo_oracle(d); });
    m.def("is_piecewise_testable", [](const Dfa& d) { return is_piecewise_testable(minimize(d)); });

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("lambda_", &VerificationReport::lambda)
        .def_readonly("delta", &VerificationReport::delta)
        .def_readonly("max_len", &VerificationReport::max_len)
        .def_readonly("words_checked", &VerificationReport::words_checked)
        .def_readonly("min_margin", &VerificationReport::min_margin)
        .def_property_readonly("misclassified", [](const VerificationReport& r) {
            std::vector<std::string> out;
            for (const auto& w : r.misclassified) out.push_back(word_to_string(w));
            return out;
        })
        .def_property_readonly("isolation_violations", [](const VerificationReport& r) {
            std::vector<std::string> out;
            for (const auto& w : r.isolation_violations) out.push_back(word_to_string(w));
            return out;
        })
        .def_property_readonly("passed", &VerificationReport::pass);
    m.def("verify_construction",
          [](const PTSpec& s, std::size_t max_len) { return verify_construction(s, max_len); },
          py::arg("spec"), py::arg("max_len"));
}
