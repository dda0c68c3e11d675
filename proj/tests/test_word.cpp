#include <doctest.h>

#include "moqa/error.hpp"
#include "moqa/pt_spec.hpp"
#include "moqa/word.hpp"

using namespace moqa;

TEST_CASE("alphabet") {
    const auto ab = Alphabet::from_chars("ab");
    CHECK(ab.size() == 2);
    CHECK(ab.index_of("b") == 1);
    CHECK_THROWS_AS(ab.index_of("c"), InputError);
    CHECK_THROWS_AS(Alphabet::from_chars("aa"), InputError);
    CHECK(ab.same_set(Alphabet::from_chars("ba")));
    CHECK_FALSE(ab.same_set(Alphabet::from_chars("abc")));
    const Alphabet multi({"up", "down"});
    CHECK(multi.encode({"down", "up"}) == std::vector<std::size_t>{1, 0});
}

TEST_CASE("length-lexicographic enumeration") {
    const auto ab = Alphabet::from_chars("ab");
    const auto words = words_up_to(ab, 2);
    REQUIRE(words.size() == 7);
    CHECK(word_to_string(words[0]).empty());
    CHECK(word_to_string(words[1]) == "a");
    CHECK(word_to_string(words[3]) == "aa");
    CHECK(word_to_string(words[6]) == "bb");
    for (std::size_t i = 1; i < words.size(); ++i) {
        CHECK(shortlex_less(ab, words[i - 1], words[i]));
    }
    CHECK(count_words_up_to(2, 2) == 7);
    CHECK(count_words_up_to(3, 8) == 9841);
    CHECK(count_words_up_to(0, 5) == 1);
    CHECK(count_words_up_to(1, 4) == 5);
    CHECK(count_words_up_to(10, 100) == static_cast<std::size_t>(-1));
    CHECK(words_up_to(Alphabet{}, 3).size() == 1);
}

TEST_CASE("PTSpec") {
    const auto s = PTSpec::from_chars("aba", "abc");
    CHECK(s.k() == 3);
    CHECK(s.positions("a") == std::vector<std::size_t>{1, 3});
    CHECK(s.positions("c").empty());
    CHECK(s.support() == std::vector<Symbol>{"a", "b"});
    CHECK(s.to_string() == "a b a");
    CHECK(s.matches(word_from_chars("cabca")));
    CHECK_FALSE(s.matches(word_from_chars("abb")));
    CHECK_THROWS_AS(s.matches(word_from_chars("x")), InputError);
    CHECK_THROWS_AS(PTSpec::from_chars("abb", "ab"), SpecError);

    const auto specs = enumerate_specs(Alphabet::from_chars("abc"), 3);
    CHECK(specs.size() == 1 + 3 + 6 + 12);
}
