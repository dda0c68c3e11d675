#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "moqa/word.hpp"

namespace moqa {

/// A letter sequence a1...ak over an alphabet, denoting the shuffle ideal of
/// all words that contain a1...ak as a subsequence. Adjacent letters differ.
class PTSpec {
public:
    /// Throws SpecError when two adjacent letters coincide or a letter is
    /// missing from the alphabet.
    PTSpec(std::vector<Symbol> letters, Alphabet alphabet);

    static PTSpec from_chars(std::string_view letters, std::string_view alphabet);

    const std::vector<Symbol>& letters() const noexcept { return letters_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t k() const noexcept { return letters_.size(); }

    /// Distinct letters of the sequence in order of first occurrence.
    std::vector<Symbol> support() const;
    bool uses(std::string_view symbol) const;

    /// 1-based positions i with letters()[i-1] == symbol, increasing.
    std::vector<std::size_t> positions(std::string_view symbol) const;

    /// Whether a1...ak is a subsequence of `word` (greedy scan).
    /// Throws InputError on a foreign symbol.
    bool matches(const Word& word) const;

    /// Letters joined by spaces, e.g. "a b a".
    std::string to_string() const;

    friend bool operator==(const PTSpec&, const PTSpec&) = default;

private:
    std::vector<Symbol> letters_;
    Alphabet alphabet_;
};

/// All valid specs with k <= max_k over `alphabet`, shortest first.
std::vector<PTSpec> enumerate_specs(const Alphabet& alphabet, std::size_t max_k);

}  // namespace moqa
