#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "moqa/dfa.hpp"
#include "moqa/monoid.hpp"
#include "moqa/pt_spec.hpp"

namespace moqa {

/// For every pair of letters a, b and every state q there is a word w over
/// {a, b} with q.a.w == q.b.w. Requires a partially ordered DFA; on those the
/// joins are decided through the unique {a, b}-fixed state reached by (ab)^n.
bool is_locally_confluent(const Dfa& po_dfa);

/// Piecewise testability of the language of a minimal DFA: partially ordered
/// and locally confluent. Runs in O(|Q| |Sigma|^2).
bool is_piecewise_testable(const Dfa& min_dfa);

/// Same predicate via the syntactic monoid: partially ordered pre-filter,
/// then J-triviality. Throws ResourceError above `cap` elements.
bool is_piecewise_testable_by_monoid(const Dfa& min_dfa, std::size_t cap = kDefaultMonoidCap);

enum class FailureReason { NotLiterallyIdempotent, NotPiecewiseTestable };

/// "NOT_LI" or "NOT_PT".
const char* to_string(FailureReason reason);

struct Diagnosis {
    std::size_t minimal_state_count = 0;
    bool literally_idempotent = false;
    bool partially_ordered = false;
    bool piecewise_testable = false;
    bool verdict = false;
    std::optional<FailureReason> failure_reason;  ///< first failed check
};

/// Membership in the class of languages recognized by measure-only quantum
/// automata with isolated cut point: minimize, then require literal
/// idempotency and piecewise testability.
Diagnosis is_lmo_member(const Dfa& dfa);

/// Independent route to the same verdict: the syntactic monoid is J-trivial
/// and every letter maps to an idempotent.
bool lmo_oracle(const Dfa& dfa, std::size_t cap = kDefaultMonoidCap);

inline constexpr std::size_t kDefaultWordBudget = 10'000'000;

struct VerificationReport {
    PTSpec spec;
    double lambda = 0.0;
    double delta = 0.0;
    std::size_t max_len = 0;
    std::size_t words_checked = 0;
    std::vector<Word> misclassified;
    std::vector<Word> isolation_violations;
    double min_margin = 0.0;

    bool pass() const noexcept { return misclassified.empty() && isolation_violations.empty(); }
};

/// Runs the shuffle-ideal automaton of `spec` on every word of length <=
/// max_len (length-lexicographic order) and compares it with the subsequence
/// test at the cut point lambda = 2^-(2k+1), isolation delta = 2^-(2k+2).
/// Throws ResourceError when more than `budget` words would be enumerated.
VerificationReport verify_construction(const PTSpec& spec, std::size_t max_len,
                                       std::size_t budget = kDefaultWordBudget);

/// Uniform integer in [0, bound) drawn from a std::mt19937_64 stream by
/// rejecting the low residue class; the same on every platform.
std::uint64_t draw_below(std::mt19937_64& gen, std::uint64_t bound);

/// Seeded random total DFA: initial state 0; for each state in order and each
/// symbol in order the target is drawn uniformly from [0, n); then one fair
/// accept bit per state in order.
Dfa random_dfa(std::uint64_t seed, std::size_t n_states, const Alphabet& alphabet);

/// Like random_dfa but the target of state q is drawn from [q, n), so the
/// automaton is partially ordered by construction.
Dfa random_partially_ordered_dfa(std::uint64_t seed, std::size_t n_states, const Alphabet& alphabet);

/// Every DFA with `n_states` states over `alphabet` with initial state 0.
std::vector<Dfa> exhaustive_dfas(std::size_t n_states, const Alphabet& alphabet);

/// `count` random DFAs with 1..max_states states over the first 1..max_letters
/// letters of "abcdefgh". Sizes and per-DFA seeds come from one stream seeded by `seed`.
std::vector<Dfa> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_states,
                               std::size_t max_letters);

}  // namespace moqa
