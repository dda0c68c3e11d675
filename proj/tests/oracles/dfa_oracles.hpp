#pragma once

// Brute-force references for DFA algorithms, kept independent of the library
// implementations they check.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "moqa/dfa.hpp"

namespace oracle {

inline std::vector<moqa::State> reachable_states(const moqa::Dfa& d) {
    std::vector<char> seen(d.state_count(), 0);
    std::vector<moqa::State> order{d.initial()};
    seen[d.initial()] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
            const auto t = d.next(order[i], a);
            if (!seen[t]) {
                seen[t] = 1;
                order.push_back(t);
            }
        }
    }
    return order;
}

// Classic pair-marking: returns the equivalence-class id of every reachable
// state (unreachable states get -1 cast to size_t).
inline std::vector<std::size_t> table_filling_classes(const moqa::Dfa& d) {
    const std::size_t n = d.state_count();
    const auto reach = reachable_states(d);
    std::vector<char> reachable(n, 0);
    for (auto q : reach) reachable[q] = 1;

    std::vector<std::vector<char>> distinct(n, std::vector<char>(n, 0));
    for (auto p : reach)
        for (auto q : reach) distinct[p][q] = d.is_accepting(p) != d.is_accepting(q);
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto p : reach) {
            for (auto q : reach) {
                if (distinct[p][q]) continue;
                for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
                    if (distinct[d.next(p, a)][d.next(q, a)]) {
                        distinct[p][q] = distinct[q][p] = 1;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    std::vector<std::size_t> cls(n, static_cast<std::size_t>(-1));
    std::size_t next = 0;
    for (auto p : reach) {
        if (cls[p] != static_cast<std::size_t>(-1)) continue;
        for (auto q : reach)
            if (!distinct[p][q]) cls[q] = next;
        ++next;
    }
    return cls;
}

inline std::size_t table_filling_state_count(const moqa::Dfa& d) {
    const auto cls = table_filling_classes(d);
    std::size_t count = 0;
    for (auto c : cls)
        if (c != static_cast<std::size_t>(-1)) count = std::max(count, c + 1);
    return count;
}

// Quotient automaton from the table-filling classes.
inline moqa::Dfa table_filling_minimize(const moqa::Dfa& d) {
    const auto cls = table_filling_classes(d);
    const std::size_t m = table_filling_state_count(d);
    const std::size_t k = d.alphabet().size();
    std::vector<moqa::State> table(m * k);
    std::vector<bool> acc(m);
    for (moqa::State q = 0; q < d.state_count(); ++q) {
        if (cls[q] == static_cast<std::size_t>(-1)) continue;
        acc[cls[q]] = d.is_accepting(q);
        for (std::size_t a = 0; a < k; ++a) table[cls[q] * k + a] = cls[d.next(q, a)];
    }
    return moqa::Dfa(m, d.alphabet(), std::move(table), cls[d.initial()], std::move(acc));
}

// Membership agreement of two automata on every word of length <= max_len.
inline bool agree_up_to(const moqa::Dfa& lhs, const moqa::Dfa& rhs, std::size_t max_len) {
    for (const auto& w : moqa::words_up_to(lhs.alphabet(), max_len)) {
        if (moqa::accepts(lhs, w) != moqa::accepts(rhs, w)) return false;
    }
    return true;
}

// Literal idempotency checked on words: x a a y in L <=> x a y in L for all
// |x| + |y| <= max_len.
inline bool literally_idempotent_on_words(const moqa::Dfa& d, std::size_t max_len) {
    const auto words = moqa::words_up_to(d.alphabet(), max_len);
    for (const auto& x : words) {
        for (const auto& y : words) {
            if (x.size() + y.size() > max_len) continue;
            for (const auto& a : d.alphabet().symbols()) {
                moqa::Word once = x, twice = x;
                once.push_back(a);
                twice.push_back(a);
                twice.push_back(a);
                once.insert(once.end(), y.begin(), y.end());
                twice.insert(twice.end(), y.begin(), y.end());
                if (moqa::accepts(d, once) != moqa::accepts(d, twice)) return false;
            }
        }
    }
    return true;
}

// Largest number of state changes over all words of length <= max_len, by
// dynamic programming on (state, length) rather than word enumeration.
inline std::size_t max_variation_up_to(const moqa::Dfa& d, std::size_t max_len) {
    constexpr long kUnreached = -1;
    std::vector<long> best(d.state_count(), kUnreached);
    best[d.initial()] = 0;
    long overall = 0;
    for (std::size_t len = 0; len < max_len; ++len) {
        std::vector<long> next = best;
        for (moqa::State q = 0; q < d.state_count(); ++q) {
            if (best[q] == kUnreached) continue;
            for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
                const moqa::State r = d.next(q, a);
                next[r] = std::max(next[r], best[q] + (r != q ? 1 : 0));
            }
        }
        best = std::move(next);
    }
    for (long v : best) overall = std::max(overall, v);
    return static_cast<std::size_t>(overall);
}

}  // namespace oracle
