#include "dyckset/scaled_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyckset {

LambdaParam LambdaParam::rational(Rational value) {
    if (value <= 1)
        throw std::invalid_argument("lambda must be > 1, got " + rational_to_string(value));
    return LambdaParam(std::move(value));
}

const Rational& LambdaParam::value() const {
    if (!value_) throw std::logic_error("symbolic lambda has no rational value");
    return *value_;
}

ScaledSet::ScaledSet(SetMode mode, std::vector<Rational> elements)
    : mode_(mode), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

ScaledSet ScaledSet::power(std::vector<Rational> exponents) {
    return ScaledSet(SetMode::Power, std::move(exponents));
}

ScaledSet ScaledSet::plain(std::vector<Rational> values) {
    for (const Rational& value : values) {
        if (value <= 0)
            throw std::invalid_argument("plain-mode elements must be positive, got " +
                                        rational_to_string(value));
    }
    return ScaledSet(SetMode::Plain, std::move(values));
}

Profile symmetric_difference_profile(const ScaledSet& set, const LambdaParam& lambda) {
    if (set.mode() == SetMode::Plain && lambda.is_symbolic())
        throw ModeMismatchError("plain-mode set requires a rational lambda");

    // lambda*S in magnitude space: exponent + 1 in Power mode, value * lambda
    // in Plain mode. Both maps are strictly increasing, so the scaled list
    // stays sorted.
    const std::vector<Rational>& s = set.elements();
    std::vector<Rational> scaled;
    scaled.reserve(s.size());
    for (const Rational& element : s) {
        if (set.mode() == SetMode::Power) {
            scaled.push_back(element + 1);
        } else {
            scaled.push_back(element * lambda.value());
        }
    }

    // Sorted two-pointer merge; equal magnitudes lie in both sets and are
    // dropped (symmetric difference).
    Profile profile;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < s.size() && j < scaled.size()) {
        if (s[i] == scaled[j]) {
            ++i;
            ++j;
        } else if (s[i] < scaled[j]) {
            profile.push_back({s[i], Origin::FromS});
            ++i;
        } else {
            profile.push_back({scaled[j], Origin::FromLambdaS});
            ++j;
        }
    }
    for (; i < s.size(); ++i) profile.push_back({s[i], Origin::FromS});
    for (; j < scaled.size(); ++j) profile.push_back({scaled[j], Origin::FromLambdaS});
    return profile;
}

Word encode(const ScaledSet& set, const LambdaParam& lambda) {
    const Profile profile = symmetric_difference_profile(set, lambda);
    std::vector<Letter> letters;
    letters.reserve(profile.size());
    for (const ProfileEntry& entry : profile)
        letters.push_back(entry.origin == Origin::FromS ? Letter::A : Letter::B);
    return Word(std::move(letters));
}

ScaledSet scale(const ScaledSet& set, const Rational& alpha) {
    std::vector<Rational> elements;
    elements.reserve(set.size());
    if (set.mode() == SetMode::Power) {
        for (const Rational& element : set.elements()) elements.push_back(element + alpha);
        return ScaledSet::power(std::move(elements));
    }
    if (alpha <= 0)
        throw std::invalid_argument("plain-mode scaling factor must be positive, got " +
                                    rational_to_string(alpha));
    for (const Rational& element : set.elements()) elements.push_back(element * alpha);
    return ScaledSet::plain(std::move(elements));
}

ScaledSet divisor_set(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("divisor_set requires n >= 1");
    std::vector<Rational> divisors;
    for (std::uint64_t d = 1; d <= n / d; ++d) {
        if (n % d == 0) {
            divisors.emplace_back(d);
            if (d != n / d) divisors.emplace_back(n / d);
        }
    }
    return ScaledSet::plain(std::move(divisors));
}

}  // namespace dyckset
