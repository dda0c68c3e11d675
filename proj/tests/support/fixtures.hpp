#pragma once

#include "moqa/dfa.hpp"

namespace fixtures {

// Sigma* a Sigma* over {a, b}
inline constexpr const char* kContainsA =
    "states 2\n"
    "alphabet a b\n"
    "initial 0\n"
    "accepting 1\n"
    "trans 0 a 1\n"
    "trans 0 b 0\n"
    "trans 1 a 1\n"
    "trans 1 b 1\n";

// Sigma* a over {a, b}: remembers whether the last letter was a
inline constexpr const char* kEndsWithA =
    "states 2\n"
    "alphabet a b\n"
    "initial 0\n"
    "accepting 1\n"
    "trans 0 a 1\n"
    "trans 0 b 0\n"
    "trans 1 a 1\n"
    "trans 1 b 0\n";

// (aa)* over {a}
inline constexpr const char* kEvenA =
    "states 2\n"
    "alphabet a\n"
    "initial 0\n"
    "accepting 0\n"
    "trans 0 a 1\n"
    "trans 1 a 0\n";

// Sigma* a Sigma* with two equivalent accepting states and an unreachable one
inline constexpr const char* kRedundantContainsA =
    "states 4\n"
    "alphabet a b\n"
    "initial 0\n"
    "accepting 1 2 3\n"
    "trans 0 a 1\n"
    "trans 0 b 0\n"
    "trans 1 a 2\n"
    "trans 1 b 1\n"
    "trans 2 a 1\n"
    "trans 2 b 2\n"
    "trans 3 a 3\n"
    "trans 3 b 0\n";

inline moqa::Dfa contains_a() { return moqa::parse_dfa(kContainsA); }
inline moqa::Dfa ends_with_a() { return moqa::parse_dfa(kEndsWithA); }
inline moqa::Dfa even_a() { return moqa::parse_dfa(kEvenA); }

}  // namespace fixtures
