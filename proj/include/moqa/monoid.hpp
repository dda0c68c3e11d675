#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "moqa/dfa.hpp"

namespace moqa {

/// A map from DFA states to DFA states, stored as its image tuple.
using Transformation = std::vector<std::uint32_t>;

/// Transformation of the word uv: apply `first`, then `second`.
Transformation compose(const Transformation& first, const Transformation& second);

/// Default cap on the number of monoid elements.
inline constexpr std::size_t kDefaultMonoidCap = 1'000'000;

/// Transition monoid of a DFA with the letter morphism. Element 0 is the
/// identity; elements are numbered in the order their shortlex-least words
/// are discovered.
class FiniteMonoid {
public:
    /// Breadth-first closure under right multiplication by letters. Throws
    /// ResourceError when more than `cap` elements appear.
    static FiniteMonoid transition_monoid(const Dfa& dfa, std::size_t cap = kDefaultMonoidCap);

    std::size_t size() const noexcept { return elements_.size(); }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const Transformation& element(std::size_t i) const { return elements_[i]; }
    const std::vector<Transformation>& elements() const noexcept { return elements_; }

    /// Element index of the image of the i-th letter.
    std::size_t generator(std::size_t letter) const { return generators_[letter]; }

    /// Shortlex-least word mapping to element i.
    const Word& witness(std::size_t i) const { return witnesses_[i]; }

    /// Index of the element equal to `t`, or size() if absent.
    std::size_t find(const Transformation& t) const;

    /// x * generator(letter) and generator(letter) * x.
    std::size_t right_mul(std::size_t x, std::size_t letter) const { return right_[x * alphabet_.size() + letter]; }
    std::size_t left_mul(std::size_t x, std::size_t letter) const { return left_[x * alphabet_.size() + letter]; }

    /// Product of two elements (x then y).
    std::size_t multiply(std::size_t x, std::size_t y) const;

    bool is_idempotent(std::size_t x) const { return multiply(x, x) == x; }

private:
    struct Hash {
        std::size_t operator()(const Transformation& t) const noexcept;
    };

    Alphabet alphabet_;
    std::vector<Transformation> elements_;
    std::vector<Word> witnesses_;
    std::vector<std::size_t> generators_;
    std::vector<std::size_t> right_;
    std::vector<std::size_t> left_;
    std::unordered_map<Transformation, std::size_t, Hash> index_;
};

/// Shorthand for FiniteMonoid::transition_monoid. On a minimal DFA this is the
/// syntactic monoid of its language.
inline FiniteMonoid transition_monoid(const Dfa& min_dfa, std::size_t cap = kDefaultMonoidCap) {
    return FiniteMonoid::transition_monoid(min_dfa, cap);
}

/// Strongly connected component id of every element, for the graph with
/// edges x -> x*g (right), x -> g*x (left), or both (two-sided).
enum class Ideal { Right, Left, TwoSided };
std::vector<std::size_t> green_classes(const FiniteMonoid& m, Ideal side);

bool is_r_trivial(const FiniteMonoid& m);
bool is_l_trivial(const FiniteMonoid& m);
bool is_j_trivial(const FiniteMonoid& m);

/// Every R-class and every L-class holds at most one idempotent.
bool is_block_group(const FiniteMonoid& m);

/// phi(s) * phi(s) == phi(s) for every letter s.
bool letters_idempotent(const FiniteMonoid& m);

struct GreenReport {
    std::size_t monoid_size = 0;
    bool r_trivial = false;
    bool l_trivial = false;
    bool j_trivial = false;
    bool block_group = false;
    bool letters_idempotent = false;
    std::size_t idempotent_count = 0;
};

GreenReport green_report(const FiniteMonoid& m);

/// Builds the transition monoid of `min_dfa` and reports on it.
GreenReport green_report(const Dfa& min_dfa, std::size_t cap = kDefaultMonoidCap);

}  // namespace moqa
