#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace moqa {

using Symbol = std::string;
using Word = std::vector<Symbol>;

/// Ordered set of distinct symbols. Symbol order drives every
/// length-lexicographic enumeration in the library.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Symbol> symbols);

    /// One symbol per character of `chars`.
    static Alphabet from_chars(std::string_view chars);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

    std::optional<std::size_t> find(std::string_view symbol) const;
    bool contains(std::string_view symbol) const { return find(symbol).has_value(); }

    /// Index of `symbol`; throws InputError for a foreign symbol.
    std::size_t index_of(std::string_view symbol) const;

    /// Converts a word to symbol indices, rejecting foreign symbols.
    std::vector<std::size_t> encode(const Word& word) const;
    Word decode(const std::vector<std::size_t>& indices) const;

    /// Same symbols, order ignored.
    bool same_set(const Alphabet& other) const;

    /// Symbols concatenated, e.g. "ab".
    std::string to_string() const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<Symbol> symbols_;
};

/// One symbol per character.
Word word_from_chars(std::string_view chars);

/// Concatenation of the symbols; the empty word renders as "".
std::string word_to_string(const Word& word);

/// Number of words of length <= max_len, saturating at SIZE_MAX.
std::size_t count_words_up_to(std::size_t alphabet_size, std::size_t max_len);

/// All words of length <= max_len in length-lexicographic order.
std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t max_len);

/// Length-lexicographic comparison with symbol ranks taken from `alphabet`.
bool shortlex_less(const Alphabet& alphabet, const Word& lhs, const Word& rhs);

}  // namespace moqa
