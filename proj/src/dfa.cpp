#include "moqa/dfa.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <sstream>

#include "moqa/error.hpp"

namespace moqa {

Dfa::Dfa(std::size_t state_count, Alphabet alphabet, std::vector<State> transitions, State initial,
         std::vector<bool> accepting)
    : alphabet_(std::move(alphabet)),
      transitions_(std::move(transitions)),
      initial_(initial),
      accepting_(std::move(accepting)) {
    if (state_count == 0) {
        throw InputError("a DFA needs at least one state");
    }
    if (accepting_.size() != state_count) {
        throw InputError("accepting flags must cover every state");
    }
    if (transitions_.size() != state_count * alphabet_.size()) {
        throw InputError("transition table must have one entry per (state, symbol)");
    }
    if (initial_ >= state_count) {
        throw InputError("initial state out of range");
    }
    for (auto t : transitions_) {
        if (t >= state_count) {
            throw InputError("transition target out of range");
        }
    }
}

Dfa Dfa::universal(Alphabet alphabet, bool accept_all) {
    const std::size_t k = alphabet.size();
    return Dfa(1, std::move(alphabet), std::vector<State>(k, 0), 0, {accept_all});
}

std::vector<State> Dfa::accepting_states() const {
    std::vector<State> out;
    for (State q = 0; q < accepting_.size(); ++q) {
        if (accepting_[q]) {
            out.push_back(q);
        }
    }
    return out;
}

State Dfa::run(std::span<const std::size_t> symbols, State from) const {
    State q = from;
    for (auto a : symbols) {
        q = next(q, a);
    }
    return q;
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

std::size_t parse_index(const std::string& s, std::size_t line, const char* what) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError(line, std::string("malformed ") + what + " '" + s + "'");
    }
    return v;
}

bool valid_file_symbol(const std::string& s) {
    return s.size() == 1 && std::isgraph(static_cast<unsigned char>(s[0]));
}

}  // namespace

Dfa parse_dfa(std::string_view text) {
    std::optional<std::size_t> states;
    std::optional<Alphabet> alphabet;
    std::optional<std::pair<State, std::size_t>> initial;
    std::vector<std::pair<State, std::size_t>> accepting;
    bool seen_accepting = false;
    struct Trans {
        std::string from, symbol, to;
        std::size_t line;
    };
    std::vector<Trans> trans;

    std::size_t line_no = 0;
    std::size_t content_line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        const auto line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        const auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') {
            continue;
        }
        content_line = line_no;
        const auto& kw = toks[0];
        if (kw == "states") {
            if (states) throw ParseError(line_no, "duplicate 'states' line");
            if (toks.size() != 2) throw ParseError(line_no, "expected 'states <n>'");
            states = parse_index(toks[1], line_no, "state count");
            if (*states == 0) throw ParseError(line_no, "state count must be positive");
        } else if (kw == "alphabet") {
            if (alphabet) throw ParseError(line_no, "duplicate 'alphabet' line");
            std::vector<Symbol> syms(toks.begin() + 1, toks.end());
            for (const auto& s : syms) {
                if (!valid_file_symbol(s)) {
                    throw ParseError(line_no, "symbol '" + s + "' must be a single printable character");
                }
            }
            try {
                alphabet = Alphabet(std::move(syms));
            } catch (const InputError& e) {
                throw ParseError(line_no, e.what());
            }
        } else if (kw == "initial") {
            if (initial) throw ParseError(line_no, "duplicate 'initial' line");
            if (toks.size() != 2) throw ParseError(line_no, "expected 'initial <q>'");
            initial = {parse_index(toks[1], line_no, "state"), line_no};
        } else if (kw == "accepting") {
            if (seen_accepting) throw ParseError(line_no, "duplicate 'accepting' line");
            seen_accepting = true;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                accepting.emplace_back(parse_index(toks[i], line_no, "state"), line_no);
            }
        } else if (kw == "trans") {
            if (toks.size() != 4) throw ParseError(line_no, "expected 'trans <from> <sym> <to>'");
            trans.push_back({toks[1], toks[2], toks[3], line_no});
        } else {
            throw ParseError(line_no, "unknown keyword '" + kw + "'");
        }
    }
    const std::size_t last_line = content_line == 0 ? 1 : content_line;

    if (!states) throw ParseError(last_line, "missing 'states' line");
    if (!alphabet) throw ParseError(last_line, "missing 'alphabet' line");
    if (!initial) throw ParseError(last_line, "missing 'initial' line");
    const std::size_t n = *states;
    const std::size_t k = alphabet->size();

    auto check_state = [&](std::size_t q, std::size_t line) {
        if (q >= n) {
            throw ParseError(line, "state " + std::to_string(q) + " out of range [0," +
                                       std::to_string(n) + ")");
        }
    };
    check_state(initial->first, initial->second);
    std::vector<bool> acc(n, false);
    for (auto [q, line] : accepting) {
        check_state(q, line);
        acc[q] = true;
    }

    constexpr State unset = static_cast<State>(-1);
    std::vector<State> table(n * k, unset);
    for (const auto& t : trans) {
        const State from = parse_index(t.from, t.line, "state");
        const State to = parse_index(t.to, t.line, "state");
        check_state(from, t.line);
        check_state(to, t.line);
        const auto a = alphabet->find(t.symbol);
        if (!a) {
            throw ParseError(t.line, "unknown symbol '" + t.symbol + "'");
        }
        auto& slot = table[from * k + *a];
        if (slot != unset) {
            throw ParseError(t.line, "duplicate transition for state " + std::to_string(from) +
                                         " on '" + t.symbol + "'");
        }
        slot = to;
    }
    for (State q = 0; q < n; ++q) {
        for (std::size_t a = 0; a < k; ++a) {
            if (table[q * k + a] == unset) {
                throw ParseError(last_line, "missing transition for state " + std::to_string(q) +
                                                " on '" + (*alphabet)[a] + "'");
            }
        }
    }
    return Dfa(n, std::move(*alphabet), std::move(table), initial->first, std::move(acc));
}

std::string serialize_dfa(const Dfa& dfa) {
    std::ostringstream out;
    out << "states " << dfa.state_count() << '\n';
    out << "alphabet";
    for (const auto& s : dfa.alphabet().symbols()) {
        out << ' ' << s;
    }
    out << '\n';
    out << "initial " << dfa.initial() << '\n';
    out << "accepting";
    for (auto q : dfa.accepting_states()) {
        out << ' ' << q;
    }
    out << '\n';
    for (State q = 0; q < dfa.state_count(); ++q) {
        for (std::size_t a = 0; a < dfa.alphabet().size(); ++a) {
            out << "trans " << q << ' ' << dfa.alphabet()[a] << ' ' << dfa.next(q, a) << '\n';
        }
    }
    return out.str();
}

bool accepts(const Dfa& dfa, const Word& word) {
    return dfa.is_accepting(dfa.run(dfa.alphabet().encode(word)));
}

Dfa canonicalize(const Dfa& dfa) {
    const std::size_t k = dfa.alphabet().size();
    constexpr State unseen = static_cast<State>(-1);
    std::vector<State> renumber(dfa.state_count(), unseen);
    std::vector<State> order{dfa.initial()};
    renumber[dfa.initial()] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t a = 0; a < k; ++a) {
            const State t = dfa.next(order[i], a);
            if (renumber[t] == unseen) {
                renumber[t] = order.size();
                order.push_back(t);
            }
        }
    }
    std::vector<State> table(order.size() * k);
    std::vector<bool> acc(order.size());
    for (State q = 0; q < order.size(); ++q) {
        acc[q] = dfa.is_accepting(order[q]);
        for (std::size_t a = 0; a < k; ++a) {
            table[q * k + a] = renumber[dfa.next(order[q], a)];
        }
    }
    return Dfa(order.size(), dfa.alphabet(), std::move(table), 0, std::move(acc));
}

Dfa pt_canonical_dfa(const PTSpec& spec) {
    const auto& alphabet = spec.alphabet();
    const std::size_t n = spec.k() + 1;
    const std::size_t k = alphabet.size();
    std::vector<State> table(n * k);
    for (State q = 0; q < n; ++q) {
        for (std::size_t a = 0; a < k; ++a) {
            const bool advances = q < spec.k() && alphabet[a] == spec.letters()[q];
            table[q * k + a] = advances ? q + 1 : q;
        }
    }
    std::vector<bool> acc(n, false);
    acc[n - 1] = true;
    return Dfa(n, alphabet, std::move(table), 0, std::move(acc));
}

bool word_in_shuffle_ideal(const PTSpec& spec, const Word& word) { return spec.matches(word); }

const char* to_string(BoolOp op) {
    switch (op) {
        case BoolOp::Union: return "union";
        case BoolOp::Intersection: return "intersection";
        case BoolOp::Difference: return "difference";
        case BoolOp::SymmetricDifference: return "symmetric-difference";
    }
    return "unknown";
}

Dfa complement(const Dfa& dfa) {
    std::vector<bool> acc(dfa.state_count());
    for (State q = 0; q < acc.size(); ++q) {
        acc[q] = !dfa.is_accepting(q);
    }
    return Dfa(dfa.state_count(), dfa.alphabet(),
               std::vector<State>(dfa.transitions().begin(), dfa.transitions().end()), dfa.initial(),
               std::move(acc));
}

namespace {

std::vector<std::size_t> symbol_map(const Dfa& lhs, const Dfa& rhs) {
    if (!lhs.alphabet().same_set(rhs.alphabet())) {
        throw InputError("alphabet mismatch: {" + lhs.alphabet().to_string() + "} vs {" +
                         rhs.alphabet().to_string() + "}");
    }
    std::vector<std::size_t> map;
    for (const auto& s : lhs.alphabet().symbols()) {
        map.push_back(rhs.alphabet().index_of(s));
    }
    return map;
}

bool combine(BoolOp op, bool a, bool b) {
    switch (op) {
        case BoolOp::Union: return a || b;
        case BoolOp::Intersection: return a && b;
        case BoolOp::Difference: return a && !b;
        case BoolOp::SymmetricDifference: return a != b;
    }
    return false;
}

}  // namespace

Dfa product(const Dfa& lhs, const Dfa& rhs, BoolOp op) {
    const auto map = symbol_map(lhs, rhs);
    const std::size_t k = map.size();
    const std::size_t n2 = rhs.state_count();
    constexpr State unseen = static_cast<State>(-1);
    std::vector<State> index(lhs.state_count() * n2, unseen);
    std::vector<std::pair<State, State>> pairs{{lhs.initial(), rhs.initial()}};
    index[lhs.initial() * n2 + rhs.initial()] = 0;
    std::vector<State> table;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [p, q] = pairs[i];
        for (std::size_t a = 0; a < k; ++a) {
            const State p2 = lhs.next(p, a);
            const State q2 = rhs.next(q, map[a]);
            auto& slot = index[p2 * n2 + q2];
            if (slot == unseen) {
                slot = pairs.size();
                pairs.emplace_back(p2, q2);
            }
            table.push_back(slot);
        }
    }
    std::vector<bool> acc(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        acc[i] = combine(op, lhs.is_accepting(pairs[i].first), rhs.is_accepting(pairs[i].second));
    }
    return Dfa(pairs.size(), lhs.alphabet(), std::move(table), 0, std::move(acc));
}

std::optional<Word> distinguishing_word(const Dfa& lhs, const Dfa& rhs) {
    const auto map = symbol_map(lhs, rhs);
    const std::size_t k = map.size();
    const std::size_t n2 = rhs.state_count();
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);
    // parent[pair] = (previous pair, symbol) for witness reconstruction
    std::vector<std::pair<std::size_t, std::size_t>> parent(lhs.state_count() * n2, {unseen, unseen});
    std::deque<std::size_t> queue;
    const std::size_t start = lhs.initial() * n2 + rhs.initial();
    parent[start] = {start, unseen};
    queue.push_back(start);
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        const State p = cur / n2;
        const State q = cur % n2;
        if (lhs.is_accepting(p) != rhs.is_accepting(q)) {
            std::vector<std::size_t> symbols;
            for (std::size_t at = cur; at != start; at = parent[at].first) {
                symbols.push_back(parent[at].second);
            }
            std::reverse(symbols.begin(), symbols.end());
            return lhs.alphabet().decode(symbols);
        }
        for (std::size_t a = 0; a < k; ++a) {
            const std::size_t nxt = lhs.next(p, a) * n2 + rhs.next(q, map[a]);
            if (parent[nxt].first == unseen) {
                parent[nxt] = {cur, a};
                queue.push_back(nxt);
            }
        }
    }
    return std::nullopt;
}

bool equivalent(const Dfa& lhs, const Dfa& rhs) { return !distinguishing_word(lhs, rhs).has_value(); }

bool is_literally_idempotent(const Dfa& dfa) {
    for (State q = 0; q < dfa.state_count(); ++q) {
        for (std::size_t a = 0; a < dfa.alphabet().size(); ++a) {
            const State once = dfa.next(q, a);
            if (dfa.next(once, a) != once) {
                return false;
            }
        }
    }
    return true;
}

std::size_t variation(const Dfa& dfa, const Word& word) {
    std::size_t changes = 0;
    State q = dfa.initial();
    for (auto a : dfa.alphabet().encode(word)) {
        const State next = dfa.next(q, a);
        changes += next != q;
        q = next;
    }
    return changes;
}

namespace {

// Reachable states in DFS post-order over state-changing edges; nullopt when
// a reachable cycle exists.
std::optional<std::vector<State>> change_graph_postorder(const Dfa& dfa) {
    const std::size_t k = dfa.alphabet().size();
    enum : char { White, Grey, Black };
    std::vector<char> colour(dfa.state_count(), White);
    std::vector<State> post;
    std::vector<std::pair<State, std::size_t>> stack{{dfa.initial(), 0}};
    colour[dfa.initial()] = Grey;
    while (!stack.empty()) {
        auto& [q, a] = stack.back();
        if (a == k) {
            colour[q] = Black;
            post.push_back(q);
            stack.pop_back();
            continue;
        }
        const State t = dfa.next(q, a++);
        if (t == q) {
            continue;
        }
        if (colour[t] == Grey) {
            return std::nullopt;
        }
        if (colour[t] == White) {
            colour[t] = Grey;
            stack.emplace_back(t, 0);
        }
    }
    return post;
}

}  // namespace

bool is_partially_ordered(const Dfa& dfa) { return change_graph_postorder(dfa).has_value(); }

std::string SupVariation::to_string() const {
    return bound ? std::to_string(*bound) : std::string("INFINITE");
}

SupVariation sup_variation(const Dfa& dfa) {
    const auto post = change_graph_postorder(dfa);
    if (!post) {
        return {};
    }
    const std::size_t k = dfa.alphabet().size();
    std::vector<std::size_t> longest(dfa.state_count(), 0);
    std::vector<std::size_t> best_symbol(dfa.state_count(), k);
    // post-order visits successors before predecessors
    for (State q : *post) {
        for (std::size_t a = 0; a < k; ++a) {
            const State t = dfa.next(q, a);
            if (t != q && longest[t] + 1 > longest[q]) {
                longest[q] = longest[t] + 1;
                best_symbol[q] = a;
            }
        }
    }
    SupVariation out;
    out.bound = longest[dfa.initial()];
    std::vector<std::size_t> symbols;
    for (State q = dfa.initial(); best_symbol[q] != k; q = dfa.next(q, best_symbol[q])) {
        symbols.push_back(best_symbol[q]);
    }
    out.witness = dfa.alphabet().decode(symbols);
    return out;
}

}  // namespace moqa
