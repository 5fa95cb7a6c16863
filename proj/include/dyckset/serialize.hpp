#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "dyckset/scaled_set.hpp"

namespace dyckset {

// Canonical JSON form of a set together with its lambda:
//   {"mode":"power","lambda":"symbolic","exponents":["0","1/2","3/4"]}
//   {"mode":"plain","lambda":"2","elements":["1","2","3","6"]}
// Rationals are rendered in lowest terms ("p" or "p/q"), elements in
// ascending order. parse(serialize(x)) is the identity and
// serialize(parse(s)) reproduces canonical s byte for byte.
std::string set_to_json(const ScaledSet& set, const LambdaParam& lambda);

// Throws ParseError naming the offending field on malformed input, and
// ModeMismatchError for a plain set with symbolic lambda.
std::pair<ScaledSet, LambdaParam> set_from_json(std::string_view text);

}  // namespace dyckset
