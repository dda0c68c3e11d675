#include "moqa/decision.hpp"

#include <algorithm>
#include <cmath>

#include "moqa/error.hpp"
#include "moqa/quantum.hpp"

namespace moqa {

bool is_locally_confluent(const Dfa& dfa) {
    const std::size_t n = dfa.state_count();
    const std::size_t k = dfa.alphabet().size();
    // Reverse topological order of the state-changing graph: every successor
    // of a state is finished before the state itself.
    // Only reachable states take part.
    std::vector<State> order;
    {
        std::vector<char> seen(n, 0);
        std::vector<std::pair<State, std::size_t>> stack{{dfa.initial(), 0}};
        seen[dfa.initial()] = 1;
        while (!stack.empty()) {
            auto& [q, a] = stack.back();
            if (a == k) {
                order.push_back(q);
                stack.pop_back();
                continue;
            }
            const State t = dfa.next(q, a++);
            if (!seen[t]) {
                seen[t] = 1;
                stack.emplace_back(t, 0);
            }
        }
    }

    std::vector<State> sink(n);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            // sink[p] = p.(ab)^n, the {a,b}-fixed state that p drifts to
            for (State p : order) {
                const State step = dfa.next(dfa.next(p, a), b);
                sink[p] = step == p ? p : sink[step];
            }
            for (State q : order) {
                if (sink[dfa.next(q, a)] != sink[dfa.next(q, b)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_piecewise_testable(const Dfa& min_dfa) {
    return is_partially_ordered(min_dfa) && is_locally_confluent(min_dfa);
}

bool is_piecewise_testable_by_monoid(const Dfa& min_dfa, std::size_t cap) {
    if (!is_partially_ordered(min_dfa)) {
        return false;
    }
    return is_j_trivial(FiniteMonoid::transition_monoid(min_dfa, cap));
}

const char* to_string(FailureReason reason) {
    switch (reason) {
        case FailureReason::NotLiterallyIdempotent: return "NOT_LI";
        case FailureReason::NotPiecewiseTestable: return "NOT_PT";
    }
    return "unknown";
}

Diagnosis is_lmo_member(const Dfa& dfa) {
    const Dfa min = minimize(dfa);
    Diagnosis d;
    d.minimal_state_count = min.state_count();
    d.literally_idempotent = is_literally_idempotent(min);
    d.partially_ordered = is_partially_ordered(min);
    d.piecewise_testable = d.partially_ordered && is_locally_confluent(min);
    d.verdict = d.literally_idempotent && d.piecewise_testable;
    if (!d.literally_idempotent) {
        d.failure_reason = FailureReason::NotLiterallyIdempotent;
    } else if (!d.piecewise_testable) {
        d.failure_reason = FailureReason::NotPiecewiseTestable;
    }
    return d;
}

bool lmo_oracle(const Dfa& dfa, std::size_t cap) {
    const auto m = FiniteMonoid::transition_monoid(minimize(dfa), cap);
    return is_j_trivial(m) && letters_idempotent(m);
}

VerificationReport verify_construction(const PTSpec& spec, std::size_t max_len, std::size_t budget) {
    const std::size_t total = count_words_up_to(spec.alphabet().size(), max_len);
    if (total > budget) {
        throw ResourceError("enumerating " + std::to_string(total) + " words exceeds the budget of " +
                            std::to_string(budget));
    }
    const Mon1qfa automaton = build_mon1qfa(spec);
    const auto [lambda, delta] = cutpoint_params(spec);
    const auto& alphabet = spec.alphabet();

    VerificationReport report{.spec = spec,
                              .lambda = lambda,
                              .delta = delta,
                              .max_len = max_len,
                              .words_checked = 0,
                              .misclassified = {},
                              .isolation_violations = {},
                              .min_margin = INFINITY};

    auto check = [&](const Word& w, const DensityMatrix& rho) {
        const double p =
            std::clamp((automaton.accepting_projector() * rho.matrix()).trace().real(), 0.0, 1.0);
        ++report.words_checked;
        if ((p > lambda) != spec.matches(w)) {
            report.misclassified.push_back(w);
        }
        const double margin = std::abs(p - lambda);
        if (margin < delta - kTolerance) {
            report.isolation_violations.push_back(w);
        }
        report.min_margin = std::min(report.min_margin, margin);
    };

    // Layer-by-layer extension keeps words in length-lexicographic order and
    // shares the measurement cascade of every prefix.
    std::vector<Word> words{Word{}};
    std::vector<DensityMatrix> states{automaton.initial_density()};
    check(words[0], states[0]);
    for (std::size_t len = 1; len <= max_len && !alphabet.empty(); ++len) {
        std::vector<Word> next_words;
        std::vector<DensityMatrix> next_states;
        next_words.reserve(words.size() * alphabet.size());
        next_states.reserve(words.size() * alphabet.size());
        for (std::size_t i = 0; i < words.size(); ++i) {
            for (std::size_t a = 0; a < alphabet.size(); ++a) {
                Word w = words[i];
                w.push_back(alphabet[a]);
                next_states.push_back(measure(states[i], automaton.observables()[a]));
                check(w, next_states.back());
                next_words.push_back(std::move(w));
            }
        }
        words = std::move(next_words);
        states = std::move(next_states);
    }
    return report;
}

std::uint64_t draw_below(std::mt19937_64& gen, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t x;
    do {
        x = gen();
    } while (x < threshold);
    return x % bound;
}

namespace {

template <typename TargetFn>
Dfa random_dfa_with(std::uint64_t seed, std::size_t n, const Alphabet& alphabet, TargetFn target) {
    if (n == 0) {
        throw InputError("a random DFA needs at least one state");
    }
    std::mt19937_64 gen(seed);
    const std::size_t k = alphabet.size();
    std::vector<State> table(n * k);
    for (State q = 0; q < n; ++q) {
        for (std::size_t a = 0; a < k; ++a) {
            table[q * k + a] = target(gen, q);
        }
    }
    std::vector<bool> acc(n);
    for (State q = 0; q < n; ++q) {
        acc[q] = draw_below(gen, 2) == 1;
    }
    return Dfa(n, alphabet, std::move(table), 0, std::move(acc));
}

}  // namespace

Dfa random_dfa(std::uint64_t seed, std::size_t n_states, const Alphabet& alphabet) {
    return random_dfa_with(seed, n_states, alphabet,
                           [n_states](std::mt19937_64& g, State) { return draw_below(g, n_states); });
}

Dfa random_partially_ordered_dfa(std::uint64_t seed, std::size_t n_states, const Alphabet& alphabet) {
    return random_dfa_with(seed, n_states, alphabet, [n_states](std::mt19937_64& g, State q) {
        return q + draw_below(g, n_states - q);
    });
}

std::vector<Dfa> exhaustive_dfas(std::size_t n, const Alphabet& alphabet) {
    const std::size_t cells = n * alphabet.size();
    std::size_t tables = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        tables *= n;
    }
    std::vector<Dfa> out;
    out.reserve(tables << n);
    std::vector<State> table(cells, 0);
    for (std::size_t t = 0; t < tables; ++t) {
        std::size_t code = t;
        for (std::size_t i = 0; i < cells; ++i) {
            table[i] = code % n;
            code /= n;
        }
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            std::vector<bool> acc(n);
            for (std::size_t q = 0; q < n; ++q) {
                acc[q] = (mask >> q) & 1;
            }
            out.emplace_back(n, alphabet, table, 0, std::move(acc));
        }
    }
    return out;
}

std::vector<Dfa> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_states,
                               std::size_t max_letters) {
    static constexpr std::string_view letters = "abcdefgh";
    if (max_states == 0 || max_letters == 0 || max_letters > letters.size()) {
        throw InputError("random corpus needs 1..8 letters and at least one state");
    }
    std::mt19937_64 gen(seed);
    std::vector<Dfa> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = 1 + draw_below(gen, max_states);
        const std::size_t k = 1 + draw_below(gen, max_letters);
        const std::uint64_t dfa_seed = gen();
        out.push_back(random_dfa(dfa_seed, n, Alphabet::from_chars(letters.substr(0, k))));
    }
    return out;
}

}  // namespace moqa
