#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dyckset/rational.hpp"
#include "dyckset/word.hpp"

namespace dyckset {

// How the rational elements of a ScaledSet are interpreted:
//   Power — element q denotes the real lambda^q (lambda symbolic or rational);
//   Plain — element r denotes the real r itself (lambda must be rational).
enum class SetMode { Power, Plain };

// The scaling parameter lambda > 1. Symbolic lambda stands for an
// arbitrary real > 1 and is handled purely through exponent ordering;
// a rational lambda carries its exact value.
class LambdaParam {
public:
    static LambdaParam symbolic() { return LambdaParam(std::nullopt); }

    // Throws std::invalid_argument unless value > 1.
    static LambdaParam rational(Rational value);

    bool is_symbolic() const { return !value_.has_value(); }
    const Rational& value() const;

    friend bool operator==(const LambdaParam&, const LambdaParam&) = default;

private:
    explicit LambdaParam(std::optional<Rational> value) : value_(std::move(value)) {}
    std::optional<Rational> value_;
};

// A finite set of positive reals in one of the two exact representations.
// Elements are stored sorted ascending and deduplicated; a set never
// mixes modes.
class ScaledSet {
public:
    // Power-mode set of exponents (any rationals; lambda^q > 0 always).
    static ScaledSet power(std::vector<Rational> exponents);

    // Plain-mode set of values; throws std::invalid_argument on any
    // element <= 0.
    static ScaledSet plain(std::vector<Rational> values);

    SetMode mode() const { return mode_; }
    const std::vector<Rational>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

    friend bool operator==(const ScaledSet&, const ScaledSet&) = default;

private:
    ScaledSet(SetMode mode, std::vector<Rational> elements);
    SetMode mode_;
    std::vector<Rational> elements_;  // sorted ascending, distinct
};

// Which side of the symmetric difference an entry came from.
enum class Origin { FromS, FromLambdaS };

// One element of S (symmetric difference) lambda*S. In Power mode the
// magnitude is the exponent, in Plain mode the value itself; either way
// magnitudes are strictly increasing along a Profile.
struct ProfileEntry {
    Rational magnitude;
    Origin origin;

    friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

using Profile = std::vector<ProfileEntry>;

// Sorted, origin-tagged symmetric difference of S and lambda*S. Elements
// in both sets are dropped. Throws ModeMismatchError for a Plain set with
// a symbolic lambda.
Profile symmetric_difference_profile(const ScaledSet& set, const LambdaParam& lambda);

// Reads the word off the profile: 'a' for FromS entries, 'b' for FromLambdaS.
Word encode(const ScaledSet& set, const LambdaParam& lambda);

// Power mode: shifts every exponent by alpha (the multiplier lambda^alpha).
// Plain mode: multiplies every element by alpha; throws
// std::invalid_argument unless alpha > 0.
ScaledSet scale(const ScaledSet& set, const Rational& alpha);

// Plain-mode set of all positive divisors of n; throws
// std::invalid_argument for n = 0. Intended for use with lambda = 2.
ScaledSet divisor_set(std::uint64_t n);

}  // namespace dyckset
