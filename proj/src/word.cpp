#include "moqa/word.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "moqa/error.hpp"

namespace moqa {

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    std::set<Symbol> seen;
    for (const auto& s : symbols_) {
        if (s.empty()) {
            throw InputError("alphabet symbols must be non-empty");
        }
        if (!seen.insert(s).second) {
            throw InputError("duplicate alphabet symbol '" + s + "'");
        }
    }
}

Alphabet Alphabet::from_chars(std::string_view chars) {
    std::vector<Symbol> symbols;
    symbols.reserve(chars.size());
    for (char c : chars) {
        symbols.emplace_back(1, c);
    }
    return Alphabet(std::move(symbols));
}

std::optional<std::size_t> Alphabet::find(std::string_view symbol) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] == symbol) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t Alphabet::index_of(std::string_view symbol) const {
    if (auto i = find(symbol)) {
        return *i;
    }
    throw InputError("symbol '" + std::string(symbol) + "' is not in the alphabet {" + to_string() +
                     "}");
}

std::vector<std::size_t> Alphabet::encode(const Word& word) const {
    std::vector<std::size_t> out;
    out.reserve(word.size());
    for (const auto& s : word) {
        out.push_back(index_of(s));
    }
    return out;
}

Word Alphabet::decode(const std::vector<std::size_t>& indices) const {
    Word out;
    out.reserve(indices.size());
    for (auto i : indices) {
        out.push_back(symbols_.at(i));
    }
    return out;
}

bool Alphabet::same_set(const Alphabet& other) const {
    if (size() != other.size()) {
        return false;
    }
    return std::all_of(symbols_.begin(), symbols_.end(),
                       [&](const Symbol& s) { return other.contains(s); });
}

std::string Alphabet::to_string() const {
    std::string out;
    for (const auto& s : symbols_) {
        out += s;
    }
    return out;
}

Word word_from_chars(std::string_view chars) {
    Word w;
    w.reserve(chars.size());
    for (char c : chars) {
        w.emplace_back(1, c);
    }
    return w;
}

std::string word_to_string(const Word& word) {
    std::string out;
    for (const auto& s : word) {
        out += s;
    }
    return out;
}

std::size_t count_words_up_to(std::size_t alphabet_size, std::size_t max_len) {
    constexpr auto cap = std::numeric_limits<std::size_t>::max();
    std::size_t total = 0;
    std::size_t layer = 1;
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (total > cap - layer) {
            return cap;
        }
        total += layer;
        if (alphabet_size != 0 && layer > cap / alphabet_size) {
            layer = cap;
        } else {
            layer *= alphabet_size;
        }
        if (layer == 0) {
            break;
        }
    }
    return total;
}

std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::size_t layer_begin = 0;
    for (std::size_t len = 1; len <= max_len && !alphabet.empty(); ++len) {
        const std::size_t layer_end = out.size();
        for (std::size_t i = layer_begin; i < layer_end; ++i) {
            for (const auto& s : alphabet.symbols()) {
                Word w = out[i];
                w.push_back(s);
                out.push_back(std::move(w));
            }
        }
        layer_begin = layer_end;
    }
    return out;
}

bool shortlex_less(const Alphabet& alphabet, const Word& lhs, const Word& rhs) {
    if (lhs.size() != rhs.size()) {
        return lhs.size() < rhs.size();
    }
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        const auto a = alphabet.index_of(lhs[i]);
        const auto b = alphabet.index_of(rhs[i]);
        if (a != b) {
            return a < b;
        }
    }
    return false;
}

}  // namespace moqa
