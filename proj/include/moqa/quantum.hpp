#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "moqa/complex_matrix.hpp"
#include "moqa/pt_spec.hpp"
#include "moqa/word.hpp"

namespace moqa {

/// One measurement outcome: an opaque label and its orthogonal projector.
struct Outcome {
    std::string label;
    ComplexMatrix projector;

    friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// A finite family of projectors indexed by outcome labels. Construction does
/// not check the projector-family invariants; use validate_observable.
class Observable {
public:
    Observable() = default;
    Observable(std::size_t dimension, std::vector<Outcome> outcomes);

    /// The single-outcome observable {identity}.
    static Observable trivial(std::size_t dimension, std::string label = "pass");

    /// The two-outcome observable {P, I - P}.
    static Observable binary(ComplexMatrix projector, std::string label, std::string complement_label);

    std::size_t dimension() const noexcept { return dimension_; }
    const std::vector<Outcome>& outcomes() const noexcept { return outcomes_; }
    const Outcome* find(std::string_view label) const;
    std::vector<std::string> labels() const;

    friend bool operator==(const Observable&, const Observable&) = default;

private:
    std::size_t dimension_ = 0;
    std::vector<Outcome> outcomes_;
};

enum class ObservableIssue {
    Structural,  ///< dimensions do not fit; numeric checks were skipped
    DuplicateLabel,
    NotHermitian,
    NotIdempotent,
    NotOrthogonal,
    Incomplete,
};

const char* to_string(ObservableIssue issue);

struct ObservableViolation {
    ObservableIssue issue;
    std::string detail;
};

struct ValidationReport {
    std::vector<ObservableViolation> violations;

    bool valid() const noexcept { return violations.empty(); }
    bool structural() const noexcept;
    bool has(ObservableIssue issue) const noexcept;
};

/// Checks Hermiticity, idempotence, pairwise orthogonality, completeness and
/// label distinctness. Shape problems are reported as Structural and suppress
/// the numeric checks.
ValidationReport validate_observable(const Observable& obs, double eps = kTolerance);

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
public:
    /// Validates the invariants within `eps`; throws InputError otherwise.
    explicit DensityMatrix(ComplexMatrix matrix, double eps = kTolerance);

    /// Skips validation. The caller guarantees the invariants.
    static DensityMatrix unchecked(ComplexMatrix matrix);

    /// pi^dagger pi for a unit-norm row state pi.
    static DensityMatrix from_state(std::span<const Complex> row);

    std::size_t dimension() const noexcept { return matrix_.rows(); }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    double trace() const { return matrix_.trace().real(); }

    /// Human-readable list of violated invariants; empty when valid.
    std::vector<std::string> violations(double eps = kTolerance) const;

private:
    DensityMatrix() = default;
    ComplexMatrix matrix_;
};

/// Nonselective measurement: sum over outcomes of P rho P.
DensityMatrix measure(const DensityMatrix& rho, const Observable& obs);

/// Measure-only one-way quantum finite automaton. Every observable is
/// validated on construction.
class Mon1qfa {
public:
    /// `observables[i]` belongs to `alphabet[i]`. Throws InputError when an
    /// invariant fails (norm of the initial state, observable validity,
    /// dimensions, accepting labels).
    Mon1qfa(Alphabet alphabet, std::vector<Complex> initial, std::vector<Observable> observables,
            Observable end_observable, std::vector<std::string> accepting, double eps = kTolerance);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t dimension() const noexcept { return initial_.size(); }
    const std::vector<Complex>& initial() const noexcept { return initial_; }
    const std::vector<Observable>& observables() const noexcept { return observables_; }
    const Observable& observable(std::string_view symbol) const;
    const Observable& end_observable() const noexcept { return end_observable_; }
    const std::vector<std::string>& accepting() const noexcept { return accepting_; }

    /// Sum of the accepting projectors of the end observable.
    const ComplexMatrix& accepting_projector() const noexcept { return accepting_projector_; }

    DensityMatrix initial_density() const { return DensityMatrix::from_state(initial_); }

private:
    Alphabet alphabet_;
    std::vector<Complex> initial_;
    std::vector<Observable> observables_;
    Observable end_observable_;
    std::vector<std::string> accepting_;
    ComplexMatrix accepting_projector_;
};

/// States rho_0, ..., rho_n of the measurement cascade on `word`.
std::vector<DensityMatrix> cascade(const Mon1qfa& automaton, const Word& word);

/// Final state rho_n of the cascade.
DensityMatrix evolve(const Mon1qfa& automaton, const Word& word);

/// Probability that the end measurement lands in the accepting labels,
/// clamped to [0, 1]. Throws InputError on a foreign symbol.
double acceptance_probability(const Mon1qfa& automaton, const Word& word);

/// Up projector of the shuffle-ideal construction: a 2x2 block of 1/2 entries
/// over rows {j, j+1} for every 1-based position j of `alpha`, identity elsewhere.
ComplexMatrix build_up_projector(const PTSpec& spec, std::string_view alpha);

/// Down projector: blocks [[1/2, -1/2], [-1/2, 1/2]] at the same positions,
/// zero elsewhere. Complements the up projector.
ComplexMatrix build_down_projector(const PTSpec& spec, std::string_view alpha);

/// Outcome labels used by build_mon1qfa.
inline constexpr const char* kUpLabel = "up";
inline constexpr const char* kDownLabel = "down";
inline constexpr const char* kPassLabel = "pass";
inline constexpr const char* kAcceptLabel = "accept";
inline constexpr const char* kRejectLabel = "reject";

/// The (k+1)-dimensional automaton recognizing the shuffle ideal of `spec`:
/// initial state e_1, up/down observables for letters in the sequence,
/// trivial observables elsewhere, acceptance on the last coordinate.
Mon1qfa build_mon1qfa(const PTSpec& spec);

struct CutPoint {
    double lambda;
    double delta;
};

/// lambda = 2^-(2k+1), delta = 2^-(2k+2).
CutPoint cutpoint_params(std::size_t k);
inline CutPoint cutpoint_params(const PTSpec& spec) { return cutpoint_params(spec.k()); }

struct CutPointEntry {
    Word word;
    double probability;
    bool member;
    bool accepted;  ///< probability > lambda
    bool isolated;  ///< |probability - lambda| >= delta - slack
};

struct CutPointReport {
    std::vector<CutPointEntry> entries;
    bool pass = true;
};

/// Checks isolated cut-point recognition of `member` on a finite word set.
/// Throws InputError unless delta > 0.
CutPointReport recognizes_with_cutpoint(const Mon1qfa& automaton, double lambda, double delta,
                                        const std::function<bool(const Word&)>& member,
                                        std::span<const Word> words, double slack = kTolerance);

}  // namespace moqa
