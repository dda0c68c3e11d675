#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "moqa/pt_spec.hpp"
#include "moqa/word.hpp"

namespace moqa {

using State = std::size_t;

/// Total deterministic finite automaton. Transitions are stored as a dense
/// table indexed by (state, symbol index).
class Dfa {
public:
    /// `transitions[q * alphabet.size() + a]` is the target of state q on the
    /// a-th symbol. Throws InputError when the table is not total and in range.
    Dfa(std::size_t state_count, Alphabet alphabet, std::vector<State> transitions, State initial,
        std::vector<bool> accepting);

    /// One state, accepting everything (or nothing).
    static Dfa universal(Alphabet alphabet, bool accept_all = true);

    std::size_t state_count() const noexcept { return accepting_.size(); }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    State initial() const noexcept { return initial_; }
    bool is_accepting(State q) const { return accepting_[q]; }
    const std::vector<bool>& accepting() const noexcept { return accepting_; }
    std::vector<State> accepting_states() const;

    State next(State q, std::size_t symbol) const { return transitions_[q * alphabet_.size() + symbol]; }
    State next(State q, std::string_view symbol) const { return next(q, alphabet_.index_of(symbol)); }
    std::span<const State> transitions() const noexcept { return transitions_; }

    /// State reached from `from` after reading symbol indices.
    State run(std::span<const std::size_t> symbols, State from) const;
    State run(std::span<const std::size_t> symbols) const { return run(symbols, initial_); }

    friend bool operator==(const Dfa&, const Dfa&) = default;

private:
    Alphabet alphabet_;
    std::vector<State> transitions_;
    State initial_ = 0;
    std::vector<bool> accepting_;
};

/// Reads the line-oriented DFA format:
///
///     states <n>
///     alphabet <sym> <sym> ...
///     initial <q>
///     accepting <q> ...
///     trans <from> <sym> <to>      (exactly n * |alphabet| lines)
///
/// Lines starting with '#' are comments. Symbols are single printable
/// characters. Throws ParseError naming the offending line.
Dfa parse_dfa(std::string_view text);

/// Writes the format read by parse_dfa, transitions ordered by state then symbol.
std::string serialize_dfa(const Dfa& dfa);

/// Throws InputError on a foreign symbol.
bool accepts(const Dfa& dfa, const Word& word);

/// Renumbers reachable states in breadth-first order over the ordered
/// alphabet and drops unreachable states.
Dfa canonicalize(const Dfa& dfa);

/// Hopcroft partition refinement on the reachable part, followed by
/// canonicalize. Equal languages over the same ordered alphabet give equal results.
Dfa minimize(const Dfa& dfa);

/// Minimal DFA of the shuffle ideal: state i advances on letter i+1, the last
/// state absorbs and accepts.
Dfa pt_canonical_dfa(const PTSpec& spec);

/// Whether spec's letters form a subsequence of `word`.
bool word_in_shuffle_ideal(const PTSpec& spec, const Word& word);

enum class BoolOp { Union, Intersection, Difference, SymmetricDifference };

const char* to_string(BoolOp op);

Dfa complement(const Dfa& dfa);

/// Reachable part of the pairing construction. The alphabets must contain
/// the same symbols; the result uses the order of `lhs`.
Dfa product(const Dfa& lhs, const Dfa& rhs, BoolOp op);

/// Language equality, decided by searching the pair graph for a reachable
/// state accepted by exactly one side.
bool equivalent(const Dfa& lhs, const Dfa& rhs);

/// A shortest word accepted by exactly one side, if any.
std::optional<Word> distinguishing_word(const Dfa& lhs, const Dfa& rhs);

/// delta(delta(q, a), a) == delta(q, a) for every state and symbol. Equivalent
/// to literal idempotency of the language when the DFA is minimal.
bool is_literally_idempotent(const Dfa& dfa);

/// Number of steps of the run from the initial state that change state.
std::size_t variation(const Dfa& dfa, const Word& word);

/// No cycles among reachable states other than self-loops.
bool is_partially_ordered(const Dfa& dfa);

struct SupVariation {
    std::optional<std::size_t> bound;  ///< empty means unbounded
    Word witness;                      ///< attains bound when finite

    bool finite() const noexcept { return bound.has_value(); }
    std::string to_string() const;
};

/// Supremum of variation over all words: longest path from the initial state
/// in the graph of state-changing edges, or unbounded if that graph has a
/// reachable cycle.
SupVariation sup_variation(const Dfa& dfa);

}  // namespace moqa
