#include "moqa/monoid.hpp"

#include <algorithm>

#include "moqa/error.hpp"

namespace moqa {

Transformation compose(const Transformation& first, const Transformation& second) {
    Transformation out(first.size());
    for (std::size_t q = 0; q < first.size(); ++q) {
        out[q] = second[first[q]];
    }
    return out;
}

std::size_t FiniteMonoid::Hash::operator()(const Transformation& t) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : t) {
        h = (h ^ v) * 1099511628211ull;
    }
    return h;
}

FiniteMonoid FiniteMonoid::transition_monoid(const Dfa& dfa, std::size_t cap) {
    FiniteMonoid m;
    m.alphabet_ = dfa.alphabet();
    const std::size_t n = dfa.state_count();
    const std::size_t k = m.alphabet_.size();

    std::vector<Transformation> letters(k, Transformation(n));
    for (std::size_t a = 0; a < k; ++a) {
        for (State q = 0; q < n; ++q) {
            letters[a][q] = static_cast<std::uint32_t>(dfa.next(q, a));
        }
    }

    Transformation id(n);
    for (std::size_t q = 0; q < n; ++q) {
        id[q] = static_cast<std::uint32_t>(q);
    }
    auto add = [&](Transformation t, Word w) {
        if (m.elements_.size() >= cap) {
            throw ResourceError("transition monoid exceeds " + std::to_string(cap) + " elements");
        }
        const std::size_t i = m.elements_.size();
        m.index_.emplace(t, i);
        m.elements_.push_back(std::move(t));
        m.witnesses_.push_back(std::move(w));
        return i;
    };
    add(id, {});

    for (std::size_t x = 0; x < m.elements_.size(); ++x) {
        for (std::size_t a = 0; a < k; ++a) {
            Transformation t = compose(m.elements_[x], letters[a]);
            std::size_t idx;
            if (auto it = m.index_.find(t); it != m.index_.end()) {
                idx = it->second;
            } else {
                Word w = m.witnesses_[x];
                w.push_back(m.alphabet_[a]);
                idx = add(std::move(t), std::move(w));
            }
            m.right_.push_back(idx);
        }
    }

    m.generators_.resize(k);
    for (std::size_t a = 0; a < k; ++a) {
        m.generators_[a] = m.right_[a];  // identity * letter
    }
    m.left_.resize(m.size() * k);
    for (std::size_t x = 0; x < m.size(); ++x) {
        for (std::size_t a = 0; a < k; ++a) {
            m.left_[x * k + a] = m.index_.at(compose(letters[a], m.elements_[x]));
        }
    }
    return m;
}

std::size_t FiniteMonoid::find(const Transformation& t) const {
    auto it = index_.find(t);
    return it == index_.end() ? size() : it->second;
}

std::size_t FiniteMonoid::multiply(std::size_t x, std::size_t y) const {
    return index_.at(compose(elements_[x], elements_[y]));
}

std::vector<std::size_t> green_classes(const FiniteMonoid& m, Ideal side) {
    const std::size_t n = m.size();
    const std::size_t k = m.alphabet().size();
    auto successors = [&](std::size_t x, std::size_t i) {
        // edge i in [0, k) is right multiplication, [k, 2k) left
        return i < k ? m.right_mul(x, i) : m.left_mul(x, i - k);
    };
    const std::size_t first_edge = side == Ideal::Left ? k : 0;
    const std::size_t last_edge = side == Ideal::Right ? k : 2 * k;

    // iterative Tarjan
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n), comp(n, unvisited);
    std::vector<char> on_stack(n, 0);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> call;
    std::size_t counter = 0, components = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) {
            continue;
        }
        call.emplace_back(root, first_edge);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [v, e] = call.back();
            if (e < last_edge) {
                const std::size_t w = successors(v, e++);
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.emplace_back(w, first_edge);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const std::size_t done = v;
            call.pop_back();
            if (!call.empty()) {
                low[call.back().first] = std::min(low[call.back().first], low[done]);
            }
            if (low[done] == index[done]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = components;
                } while (w != done);
                ++components;
            }
        }
    }
    return comp;
}

namespace {

bool all_singletons(const std::vector<std::size_t>& comp) {
    std::vector<char> seen(comp.size(), 0);
    for (auto c : comp) {
        if (seen[c]++) {
            return false;
        }
    }
    return true;
}

bool at_most_one_idempotent_per_class(const FiniteMonoid& m, const std::vector<std::size_t>& comp) {
    std::vector<char> has(comp.size(), 0);
    for (std::size_t x = 0; x < m.size(); ++x) {
        if (m.is_idempotent(x) && has[comp[x]]++) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_r_trivial(const FiniteMonoid& m) { return all_singletons(green_classes(m, Ideal::Right)); }
bool is_l_trivial(const FiniteMonoid& m) { return all_singletons(green_classes(m, Ideal::Left)); }
bool is_j_trivial(const FiniteMonoid& m) { return all_singletons(green_classes(m, Ideal::TwoSided)); }

bool is_block_group(const FiniteMonoid& m) {
    return at_most_one_idempotent_per_class(m, green_classes(m, Ideal::Right)) &&
           at_most_one_idempotent_per_class(m, green_classes(m, Ideal::Left));
}

bool letters_idempotent(const FiniteMonoid& m) {
    for (std::size_t a = 0; a < m.alphabet().size(); ++a) {
        if (!m.is_idempotent(m.generator(a))) {
            return false;
        }
    }
    return true;
}

GreenReport green_report(const FiniteMonoid& m) {
    GreenReport r;
    r.monoid_size = m.size();
    const auto right = green_classes(m, Ideal::Right);
    const auto left = green_classes(m, Ideal::Left);
    r.r_trivial = all_singletons(right);
    r.l_trivial = all_singletons(left);
    r.j_trivial = all_singletons(green_classes(m, Ideal::TwoSided));
    r.block_group = at_most_one_idempotent_per_class(m, right) && at_most_one_idempotent_per_class(m, left);
    r.letters_idempotent = letters_idempotent(m);
    for (std::size_t x = 0; x < m.size(); ++x) {
        r.idempotent_count += m.is_idempotent(x);
    }
    return r;
}

GreenReport green_report(const Dfa& min_dfa, std::size_t cap) {
    return green_report(FiniteMonoid::transition_monoid(min_dfa, cap));
}

}  // namespace moqa
