#pragma once

#include "dyckset/scaled_set.hpp"
#include "dyckset/word.hpp"

namespace dyckset {

// Builds a Power-mode witness set for an irreducible Dyck word: the base
// word "ab" maps to {0}; longer words peel the last peak, synthesize the
// shortened word, and insert the exponent midpoint of the two profile
// entries straddling the peak index (the geometric mean of the magnitudes).
// The result satisfies S with S and lambda*S disjoint, |S| = |w|/2, and
// encode(S, lambda) = w for every lambda > 1.
// Throws std::invalid_argument if the word is not irreducible.
ScaledSet synthesize_irreducible(const DyckWord& word);

// Smallest integer k with k > 1 + max_exponent(s1) - min_exponent(s2), so
// that shifting s2 by k leaves a multiplicative gap strictly above lambda.
// Throws std::invalid_argument on an empty or non-Power input.
Rational choose_offset(const ScaledSet& s1, const ScaledSet& s2);

// Union of s1 with s2 shifted by choose_offset(s1, s2); encodes to the
// concatenation of the two encodings. Either side may be empty, in which
// case the other is returned unchanged.
ScaledSet concat_sets(const ScaledSet& s1, const ScaledSet& s2);

// Witness set for an arbitrary Dyck word: factor into irreducibles,
// synthesize each, and fold left with concat_sets. The empty word maps to
// the empty set. encode(synthesize(w), lambda) = w for every lambda > 1.
ScaledSet synthesize(const DyckWord& word);

}  // namespace dyckset
