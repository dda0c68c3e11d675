#include "moqa/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "moqa/error.hpp"

namespace moqa {

Observable::Observable(std::size_t dimension, std::vector<Outcome> outcomes)
    : dimension_(dimension), outcomes_(std::move(outcomes)) {}

Observable Observable::trivial(std::size_t dimension, std::string label) {
    return Observable(dimension, {Outcome{std::move(label), ComplexMatrix::identity(dimension)}});
}

Observable Observable::binary(ComplexMatrix projector, std::string label, std::string complement_label) {
    if (!projector.is_square()) {
        throw DimensionError("binary observable needs a square projector");
    }
    const std::size_t n = projector.rows();
    ComplexMatrix rest = ComplexMatrix::identity(n) - projector;
    return Observable(n, {Outcome{std::move(label), std::move(projector)},
                          Outcome{std::move(complement_label), std::move(rest)}});
}

const Outcome* Observable::find(std::string_view label) const {
    for (const auto& o : outcomes_) {
        if (o.label == label) {
            return &o;
        }
    }
    return nullptr;
}

std::vector<std::string> Observable::labels() const {
    std::vector<std::string> out;
    out.reserve(outcomes_.size());
    for (const auto& o : outcomes_) {
        out.push_back(o.label);
    }
    return out;
}

const char* to_string(ObservableIssue issue) {
    switch (issue) {
        case ObservableIssue::Structural: return "structural";
        case ObservableIssue::DuplicateLabel: return "duplicate-label";
        case ObservableIssue::NotHermitian: return "not-hermitian";
        case ObservableIssue::NotIdempotent: return "not-idempotent";
        case ObservableIssue::NotOrthogonal: return "not-orthogonal";
        case ObservableIssue::Incomplete: return "incomplete";
    }
    return "unknown";
}

bool ValidationReport::structural() const noexcept { return has(ObservableIssue::Structural); }

bool ValidationReport::has(ObservableIssue issue) const noexcept {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const ObservableViolation& v) { return v.issue == issue; });
}

ValidationReport validate_observable(const Observable& obs, double eps) {
    ValidationReport report;
    const std::size_t n = obs.dimension();
    if (n == 0) {
        report.violations.push_back({ObservableIssue::Structural, "dimension is zero"});
    }
    for (const auto& o : obs.outcomes()) {
        if (o.projector.rows() != n || o.projector.cols() != n) {
            report.violations.push_back(
                {ObservableIssue::Structural,
                 "projector '" + o.label + "' is " + std::to_string(o.projector.rows()) + "x" +
                     std::to_string(o.projector.cols()) + ", expected " + std::to_string(n) + "x" +
                     std::to_string(n)});
        }
    }
    if (report.structural()) {
        return report;
    }

    std::set<std::string> seen;
    for (const auto& o : obs.outcomes()) {
        if (!seen.insert(o.label).second) {
            report.violations.push_back({ObservableIssue::DuplicateLabel, "label '" + o.label + "'"});
        }
    }

    ComplexMatrix total(n, n);
    const auto& outcomes = obs.outcomes();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto& p = outcomes[i].projector;
        if (!p.is_hermitian(eps)) {
            report.violations.push_back({ObservableIssue::NotHermitian, "'" + outcomes[i].label + "'"});
        }
        if (!(p * p).approx_equal(p, eps)) {
            report.violations.push_back({ObservableIssue::NotIdempotent, "'" + outcomes[i].label + "'"});
        }
        for (std::size_t j = i + 1; j < outcomes.size(); ++j) {
            if ((p * outcomes[j].projector).max_abs() > eps) {
                report.violations.push_back(
                    {ObservableIssue::NotOrthogonal,
                     "'" + outcomes[i].label + "' and '" + outcomes[j].label + "'"});
            }
        }
        total += p;
    }
    if (!total.approx_equal(ComplexMatrix::identity(n), eps)) {
        report.violations.push_back({ObservableIssue::Incomplete, "projectors do not sum to identity"});
    }
    return report;
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, double eps) : matrix_(std::move(matrix)) {
    if (!matrix_.is_square()) {
        throw DimensionError("density matrix must be square");
    }
    const auto problems = violations(eps);
    if (!problems.empty()) {
        std::string msg = "invalid density matrix:";
        for (const auto& p : problems) {
            msg += " " + p + ";";
        }
        throw InputError(msg);
    }
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix matrix) {
    DensityMatrix rho;
    rho.matrix_ = std::move(matrix);
    return rho;
}

DensityMatrix DensityMatrix::from_state(std::span<const Complex> row) {
    return DensityMatrix(ComplexMatrix::projector_onto(row));
}

std::vector<std::string> DensityMatrix::violations(double eps) const {
    std::vector<std::string> out;
    if (!matrix_.is_hermitian(eps)) {
        out.emplace_back("not hermitian");
        return out;
    }
    const Complex t = matrix_.trace();
    if (std::abs(t - Complex{1.0}) > eps) {
        out.emplace_back("trace " + std::to_string(t.real()) + " != 1");
    }
    if (matrix_.min_hermitian_eigenvalue() < -eps) {
        out.emplace_back("negative eigenvalue");
    }
    return out;
}

DensityMatrix measure(const DensityMatrix& rho, const Observable& obs) {
    if (rho.dimension() != obs.dimension()) {
        throw DimensionError("measure: state has dimension " + std::to_string(rho.dimension()) +
                             ", observable has dimension " + std::to_string(obs.dimension()));
    }
    ComplexMatrix out(rho.dimension(), rho.dimension());
    for (const auto& o : obs.outcomes()) {
        if (o.projector.rows() != rho.dimension() || o.projector.cols() != rho.dimension()) {
            throw DimensionError("measure: projector '" + o.label + "' has the wrong shape");
        }
        out += sandwich(o.projector, rho.matrix());
    }
    return DensityMatrix::unchecked(std::move(out));
}

Mon1qfa::Mon1qfa(Alphabet alphabet, std::vector<Complex> initial, std::vector<Observable> observables,
                 Observable end_observable, std::vector<std::string> accepting, double eps)
    : alphabet_(std::move(alphabet)),
      initial_(std::move(initial)),
      observables_(std::move(observables)),
      end_observable_(std::move(end_observable)),
      accepting_(std::move(accepting)) {
    const std::size_t m = initial_.size();
    if (m == 0) {
        throw InputError("automaton dimension must be positive");
    }
    double norm2 = 0.0;
    for (const auto& z : initial_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InputError("initial state entries must be finite");
        }
        norm2 += std::norm(z);
    }
    if (std::abs(std::sqrt(norm2) - 1.0) > eps) {
        throw InputError("initial state must have unit norm, got " + std::to_string(std::sqrt(norm2)));
    }
    if (observables_.size() != alphabet_.size()) {
        throw InputError("expected one observable per alphabet symbol (" +
                         std::to_string(alphabet_.size()) + "), got " +
                         std::to_string(observables_.size()));
    }

    auto check = [&](const Observable& obs, const std::string& name) {
        if (obs.dimension() != m) {
            throw InputError("observable " + name + " has dimension " + std::to_string(obs.dimension()) +
                             ", automaton has dimension " + std::to_string(m));
        }
        const auto report = validate_observable(obs, eps);
        if (!report.valid()) {
            std::string msg = "observable " + name + " is invalid:";
            for (const auto& v : report.violations) {
                msg += std::string(" ") + to_string(v.issue) + " (" + v.detail + ");";
            }
            throw InputError(msg);
        }
    };
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        check(observables_[i], "'" + alphabet_[i] + "'");
    }
    check(end_observable_, "end");

    accepting_projector_ = ComplexMatrix(m, m);
    std::set<std::string> seen;
    for (const auto& label : accepting_) {
        const Outcome* o = end_observable_.find(label);
        if (o == nullptr) {
            throw InputError("accepting label '" + label + "' is not an outcome of the end observable");
        }
        if (!seen.insert(label).second) {
            throw InputError("accepting label '" + label + "' listed twice");
        }
        accepting_projector_ += o->projector;
    }
}

const Observable& Mon1qfa::observable(std::string_view symbol) const {
    return observables_[alphabet_.index_of(symbol)];
}

std::vector<DensityMatrix> cascade(const Mon1qfa& automaton, const Word& word) {
    const auto indices = automaton.alphabet().encode(word);
    std::vector<DensityMatrix> states;
    states.reserve(word.size() + 1);
    states.push_back(automaton.initial_density());
    for (auto i : indices) {
        states.push_back(measure(states.back(), automaton.observables()[i]));
    }
    return states;
}

DensityMatrix evolve(const Mon1qfa& automaton, const Word& word) {
    const auto indices = automaton.alphabet().encode(word);
    DensityMatrix rho = automaton.initial_density();
    for (auto i : indices) {
        rho = measure(rho, automaton.observables()[i]);
    }
    return rho;
}

double acceptance_probability(const Mon1qfa& automaton, const Word& word) {
    const DensityMatrix rho = evolve(automaton, word);
    const double p = (automaton.accepting_projector() * rho.matrix()).trace().real();
    return std::clamp(p, 0.0, 1.0);
}

namespace {

std::vector<std::size_t> require_positions(const PTSpec& spec, std::string_view alpha) {
    auto positions = spec.positions(alpha);
    if (positions.empty()) {
        throw SpecError("symbol '" + std::string(alpha) + "' does not occur in the letter sequence [" +
                        spec.to_string() + "]");
    }
    return positions;
}

// Fills the 2x2 block at 0-based rows/cols {j-1, j} for each 1-based position j.
void place_blocks(ComplexMatrix& m, const std::vector<std::size_t>& positions, double diag, double off) {
    for (auto j : positions) {
        const std::size_t r = j - 1;
        m(r, r) = diag;
        m(r + 1, r + 1) = diag;
        m(r, r + 1) = off;
        m(r + 1, r) = off;
    }
}

}  // namespace

ComplexMatrix build_up_projector(const PTSpec& spec, std::string_view alpha) {
    const auto positions = require_positions(spec, alpha);
    ComplexMatrix m = ComplexMatrix::identity(spec.k() + 1);
    place_blocks(m, positions, 0.5, 0.5);
    return m;
}

ComplexMatrix build_down_projector(const PTSpec& spec, std::string_view alpha) {
    const auto positions = require_positions(spec, alpha);
    ComplexMatrix m(spec.k() + 1, spec.k() + 1);
    place_blocks(m, positions, 0.5, -0.5);
    return m;
}

Mon1qfa build_mon1qfa(const PTSpec& spec) {
    const std::size_t m = spec.k() + 1;
    std::vector<Complex> initial(m);
    initial[0] = 1.0;

    std::vector<Observable> observables;
    observables.reserve(spec.alphabet().size());
    for (const auto& sigma : spec.alphabet().symbols()) {
        if (spec.uses(sigma)) {
            observables.emplace_back(
                m, std::vector<Outcome>{{kUpLabel, build_up_projector(spec, sigma)},
                                        {kDownLabel, build_down_projector(spec, sigma)}});
        } else {
            observables.push_back(Observable::trivial(m, kPassLabel));
        }
    }

    ComplexMatrix last(m, m);
    last(m - 1, m - 1) = 1.0;
    return Mon1qfa(spec.alphabet(), std::move(initial), std::move(observables),
                   Observable::binary(std::move(last), kAcceptLabel, kRejectLabel), {kAcceptLabel});
}

CutPoint cutpoint_params(std::size_t k) {
    const int e = static_cast<int>(2 * k);
    return CutPoint{std::ldexp(1.0, -(e + 1)), std::ldexp(1.0, -(e + 2))};
}

CutPointReport recognizes_with_cutpoint(const Mon1qfa& automaton, double lambda, double delta,
                                        const std::function<bool(const Word&)>& member,
                                        std::span<const Word> words, double slack) {
    if (!(delta > 0.0)) {
        throw InputError("isolation delta must be positive");
    }
    CutPointReport report;
    report.entries.reserve(words.size());
    for (const auto& w : words) {
        CutPointEntry e;
        e.word = w;
        e.probability = acceptance_probability(automaton, w);
        e.member = member(w);
        e.accepted = e.probability > lambda;
        e.isolated = std::abs(e.probability - lambda) >= delta - slack;
        if (e.accepted != e.member || !e.isolated) {
            report.pass = false;
        }
        report.entries.push_back(std::move(e));
    }
    return report;
}

}  // namespace moqa
