#include <algorithm>
#include <vector>

#include "moqa/dfa.hpp"

namespace moqa {

namespace {

// Refinable partition of {0, ..., n-1}. Each block owns a contiguous range of
// `elems`; marking moves an element to the front of its block's range.
class Partition {
public:
    explicit Partition(std::size_t n) : elems_(n), loc_(n), block_of_(n, 0) {
        for (std::size_t i = 0; i < n; ++i) {
            elems_[i] = i;
            loc_[i] = i;
        }
        if (n > 0) {
            first_.push_back(0);
            end_.push_back(n);
            marked_.push_back(0);
        }
    }

    std::size_t block_count() const { return first_.size(); }
    std::size_t block_of(std::size_t x) const { return block_of_[x]; }
    std::size_t size(std::size_t b) const { return end_[b] - first_[b]; }

    std::vector<std::size_t> members(std::size_t b) const {
        return {elems_.begin() + static_cast<std::ptrdiff_t>(first_[b]),
                elems_.begin() + static_cast<std::ptrdiff_t>(end_[b])};
    }

    /// Returns true the first time a block receives a mark in this round.
    bool mark(std::size_t x) {
        const std::size_t b = block_of_[x];
        const std::size_t target = first_[b] + marked_[b];
        const std::size_t other = elems_[target];
        std::swap(elems_[loc_[x]], elems_[target]);
        loc_[other] = loc_[x];
        loc_[x] = target;
        return marked_[b]++ == 0;
    }

    /// Splits the marked prefix of `b` into a new block when it is a proper
    /// subset; returns the new block id or npos. Clears the marks of `b`.
    std::size_t split(std::size_t b) {
        const std::size_t m = marked_[b];
        marked_[b] = 0;
        if (m == size(b)) {
            return npos;
        }
        const std::size_t nb = first_.size();
        first_.push_back(first_[b]);
        end_.push_back(first_[b] + m);
        marked_.push_back(0);
        first_[b] += m;
        for (std::size_t i = first_[nb]; i < end_[nb]; ++i) {
            block_of_[elems_[i]] = nb;
        }
        return nb;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<std::size_t> elems_, loc_, block_of_;
    std::vector<std::size_t> first_, end_, marked_;
};

}  // namespace

Dfa minimize(const Dfa& input) {
    const Dfa dfa = canonicalize(input);
    const std::size_t n = dfa.state_count();
    const std::size_t k = dfa.alphabet().size();

    // predecessors per symbol in CSR layout: pred_[a][offset[a][t] .. offset[a][t+1])
    std::vector<std::vector<std::size_t>> offset(k, std::vector<std::size_t>(n + 1, 0));
    std::vector<std::vector<State>> preds(k, std::vector<State>(n));
    for (std::size_t a = 0; a < k; ++a) {
        for (State q = 0; q < n; ++q) {
            ++offset[a][dfa.next(q, a) + 1];
        }
        for (State t = 0; t < n; ++t) {
            offset[a][t + 1] += offset[a][t];
        }
        std::vector<std::size_t> fill(offset[a].begin(), offset[a].end() - 1);
        for (State q = 0; q < n; ++q) {
            preds[a][fill[dfa.next(q, a)]++] = q;
        }
    }

    Partition part(n);
    for (State q = 0; q < n; ++q) {
        if (dfa.is_accepting(q)) {
            part.mark(q);
        }
    }
    const std::size_t accepting_block = part.split(0);

    std::vector<std::pair<std::size_t, std::size_t>> work;
    std::vector<char> in_work;
    auto enqueue = [&](std::size_t b, std::size_t a) {
        if (in_work.size() < part.block_count() * k) {
            in_work.resize(part.block_count() * k, 0);
        }
        if (!in_work[b * k + a]) {
            in_work[b * k + a] = 1;
            work.emplace_back(b, a);
        }
    };
    if (accepting_block != Partition::npos) {
        const std::size_t smaller = part.size(accepting_block) <= part.size(0) ? accepting_block : 0;
        for (std::size_t a = 0; a < k; ++a) {
            enqueue(smaller, a);
        }
    }

    std::vector<std::size_t> touched;
    while (!work.empty()) {
        const auto [splitter, a] = work.back();
        work.pop_back();
        in_work[splitter * k + a] = 0;

        touched.clear();
        for (State t : part.members(splitter)) {
            for (std::size_t i = offset[a][t]; i < offset[a][t + 1]; ++i) {
                const State p = preds[a][i];
                if (part.mark(p)) {
                    touched.push_back(part.block_of(p));
                }
            }
        }
        for (std::size_t b : touched) {
            const std::size_t nb = part.split(b);
            if (nb == Partition::npos) {
                continue;
            }
            for (std::size_t c = 0; c < k; ++c) {
                if (in_work.size() > b * k + c && in_work[b * k + c]) {
                    enqueue(nb, c);
                } else {
                    enqueue(part.size(nb) <= part.size(b) ? nb : b, c);
                }
            }
        }
    }

    const std::size_t blocks = part.block_count();
    std::vector<State> table(blocks * k);
    std::vector<bool> acc(blocks);
    std::vector<bool> done(blocks, false);
    for (State q = 0; q < n; ++q) {
        const std::size_t b = part.block_of(q);
        if (done[b]) {
            continue;
        }
        done[b] = true;
        acc[b] = dfa.is_accepting(q);
        for (std::size_t c = 0; c < k; ++c) {
            table[b * k + c] = part.block_of(dfa.next(q, c));
        }
    }
    return canonicalize(Dfa(blocks, dfa.alphabet(), std::move(table), part.block_of(dfa.initial()),
                            std::move(acc)));
}

}  // namespace moqa
