#include "dyckset/synthesize.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

namespace dyckset {
namespace {

const LambdaParam kSymbolic = LambdaParam::symbolic();

void require_power(const ScaledSet& set, const char* op) {
    if (set.mode() != SetMode::Power)
        throw std::invalid_argument(std::string(op) + " requires Power-mode sets");
}

}  // namespace

ScaledSet synthesize_irreducible(const DyckWord& word) {
    if (!is_irreducible(word))
        throw std::invalid_argument("synthesize_irreducible requires an irreducible Dyck word, got \"" +
                                    word.str() + "\"");

    // Record the peak index of each strip step down to "ab", then replay
    // the chain in reverse, inserting one midpoint exponent per step.
    // Iterative on purpose: no recursion depth limit for long words.
    std::vector<std::size_t> peaks;
    DyckWord current = word;
    while (current.size() > 2) {
        StripResult stripped = strip_last_peak(current);
        peaks.push_back(stripped.peak_index);
        current = std::move(stripped.word);
    }

    std::vector<Rational> exponents = {Rational(0)};
    for (auto it = peaks.rbegin(); it != peaks.rend(); ++it) {
        const std::size_t i = *it;
        const Profile profile = symmetric_difference_profile(ScaledSet::power(exponents), kSymbolic);
        // Irreducibility puts the peak strictly inside the profile of the
        // shortened word: 1 <= i <= |profile| - 1.
        assert(i >= 1 && i < profile.size());
        exponents.push_back((profile[i - 1].magnitude + profile[i].magnitude) / 2);
    }

    ScaledSet result = ScaledSet::power(std::move(exponents));
    assert(encode(result, kSymbolic) == word.word());
    return result;
}

Rational choose_offset(const ScaledSet& s1, const ScaledSet& s2) {
    require_power(s1, "choose_offset");
    require_power(s2, "choose_offset");
    if (s1.empty() || s2.empty())
        throw std::invalid_argument("choose_offset requires nonempty sets");
    const Rational bound = 1 + s1.elements().back() - s2.elements().front();
    return Rational(floor_rational(bound) + 1);
}

ScaledSet concat_sets(const ScaledSet& s1, const ScaledSet& s2) {
    require_power(s1, "concat_sets");
    require_power(s2, "concat_sets");
    if (s1.empty()) return s2;
    if (s2.empty()) return s1;
    const ScaledSet shifted = scale(s2, choose_offset(s1, s2));
    std::vector<Rational> exponents = s1.elements();
    exponents.insert(exponents.end(), shifted.elements().begin(), shifted.elements().end());
    return ScaledSet::power(std::move(exponents));
}

ScaledSet synthesize(const DyckWord& word) {
    ScaledSet result = ScaledSet::power({});
    for (const DyckWord& factor : factor_irreducible(word))
        result = concat_sets(result, synthesize_irreducible(factor));
    assert(encode(result, kSymbolic) == word.word());
    return result;
}

}  // namespace dyckset
