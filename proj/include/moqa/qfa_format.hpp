#pragma once

#include <string>
#include <string_view>

#include "moqa/quantum.hpp"

namespace moqa {

/// Text form of a Mon1qfa:
///
///     mon1qfa dim=<m> alphabet=<symbols>
///     initial: <re,im> x m
///     observable <symbol>
///     outcome <label> <re,im> x m*m (row-major)
///     ...
///     end-observable
///     outcome <label> ...
///     accepting: <labels>
///
/// Tokens are whitespace-separated; lines starting with '#' are comments.
/// Symbols must be single characters.
std::string serialize_mon1qfa(const Mon1qfa& automaton);

/// Inverse of serialize_mon1qfa. Throws ParseError naming the line.
Mon1qfa parse_mon1qfa(std::string_view text);

}  // namespace moqa
