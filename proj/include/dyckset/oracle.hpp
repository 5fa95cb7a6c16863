#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dyckset/scaled_set.hpp"
#include "dyckset/word.hpp"

namespace dyckset {

// Ceiling on half-lengths accepted by the enumerators; Catalan(10) = 16796
// words is comfortable desk scale.
inline constexpr std::size_t kDefaultEnumerationBound = 10;

// All Dyck words of length 2n in lexicographic order (a < b), built by
// first-return decomposition: w = a u b v with u, v Dyck. Count is
// Catalan(n). Throws BoundError when n exceeds the bound.
std::vector<DyckWord> enumerate_dyck(std::size_t n,
                                     std::size_t bound = kDefaultEnumerationBound);

// All irreducible Dyck words of length 2n (n >= 1), lexicographic; the
// is_irreducible filter of enumerate_dyck(n). Count is Catalan(n-1).
std::vector<DyckWord> enumerate_irreducible(std::size_t n,
                                            std::size_t bound = kDefaultEnumerationBound);

struct RandomSetOptions {
    SetMode mode = SetMode::Power;
    std::size_t min_size = 0;
    std::size_t max_size = 8;
    // Power mode draws numerators in [-max_numerator, max_numerator];
    // Plain mode in [1, max_numerator]. Denominators in [1, max_denominator].
    std::int64_t max_numerator = 64;
    std::int64_t max_denominator = 8;
};

// Deterministic pseudorandom set: the same seed and options always produce
// the same set, on every platform (the generator never goes through
// implementation-defined distributions). Throws std::invalid_argument on
// unusable bounds.
ScaledSet random_scaled_set(std::uint64_t seed, const RandomSetOptions& options = {});

struct PropertySuiteConfig {
    // Exhaustive checks cover all Dyck words of length <= 2 * n_max.
    std::size_t n_max = 7;
    std::uint64_t seed = 1;
    std::size_t random_sets_per_mode = 1000;  // encoded-word Dyck membership draws
    std::size_t scale_cases_per_mode = 1000;  // scale-invariance draws
    std::size_t concat_cases = 1000;          // concatenation-homomorphism draws
    std::size_t enumeration_bound = kDefaultEnumerationBound;
    // Encoding hook, defaulting to encode(); substituting a deliberately
    // broken encoder must surface as property counterexamples.
    std::function<Word(const ScaledSet&, const LambdaParam&)> encoder;
};

struct PropertyResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    // Minimal-length counterexample among the failures; empty when passed.
    std::string counterexample;

    bool passed() const { return failures == 0; }
};

struct PropertyReport {
    std::vector<PropertyResult> properties;

    bool all_passed() const;
};

// Runs every cross-module invariant: encoded words are Dyck, encoding is
// scale invariant, stripping preserves irreducibility, concatenation of
// witness sets is a homomorphism, synthesis round-trips exactly, and
// synthesized exponent sets are disjoint from their shift by one.
// Property failures are data in the report, never exceptions; only a
// misconfiguration (n_max above the enumeration bound) throws.
PropertyReport run_property_suite(const PropertySuiteConfig& config = {});

std::string report_to_text(const PropertyReport& report);
std::string report_to_json(const PropertyReport& report);

}  // namespace dyckset
