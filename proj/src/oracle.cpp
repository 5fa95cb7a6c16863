#include "dyckset/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "dyckset/serialize.hpp"
#include "dyckset/synthesize.hpp"

namespace dyckset {
namespace {

void check_bound(std::size_t n, std::size_t bound) {
    if (n > bound)
        throw BoundError("enumeration bound exceeded: n = " + std::to_string(n) + " > " +
                         std::to_string(bound));
}

// Inclusive uniform draw. Plain modulo keeps the stream identical across
// platforms; the slight bias is irrelevant for test-case generation.
std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
}

std::int64_t uniform_signed(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational random_rational(std::mt19937_64& rng, std::int64_t min_numerator,
                         std::int64_t max_numerator, std::int64_t max_denominator) {
    const std::int64_t num = uniform_signed(rng, min_numerator, max_numerator);
    const std::int64_t den = uniform_signed(rng, 1, max_denominator);
    return Rational(num, den);
}

// Tracks the minimal-length counterexample across all failures.
class FailureTracker {
public:
    void record(std::size_t metric, std::string description) {
        ++failures_;
        if (failures_ == 1 || metric < best_metric_) {
            best_metric_ = metric;
            best_ = std::move(description);
        }
    }

    std::size_t failures() const { return failures_; }
    const std::string& counterexample() const { return best_; }

private:
    std::size_t failures_ = 0;
    std::size_t best_metric_ = 0;
    std::string best_;
};

std::string describe_set(const ScaledSet& set, const LambdaParam& lambda) {
    return set_to_json(set, lambda);
}

// Per-property seed streams stay disjoint regardless of case counts.
std::uint64_t stream_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) {
    return base + stream * 0x9E3779B97F4A7C15ull + index;
}

const std::vector<Rational> kPlainLambdas = {Rational(3, 2), Rational(2), Rational(10)};

}  // namespace

std::vector<DyckWord> enumerate_dyck(std::size_t n, std::size_t bound) {
    check_bound(n, bound);

    // tables[m] holds all Dyck words of length 2m. Every word has a unique
    // first-return decomposition w = a u b v, so the cross product over
    // (u, v) is complete and duplicate-free; a final sort delivers the
    // promised lexicographic order (first-return blocks interleave, e.g.
    // aaabbbab < aabaabbb, so no emission order is sorted by itself).
    std::vector<std::vector<Word>> tables(n + 1);
    tables[0] = {Word()};
    const Word a(std::vector<Letter>{Letter::A});
    const Word b(std::vector<Letter>{Letter::B});
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t k = m; k-- > 0;) {
            for (const Word& u : tables[k]) {
                const Word prefix = a + u + b;
                for (const Word& v : tables[m - 1 - k]) tables[m].push_back(prefix + v);
            }
        }
    }
    std::sort(tables[n].begin(), tables[n].end());

    std::vector<DyckWord> result;
    result.reserve(tables[n].size());
    for (Word& word : tables[n]) result.emplace_back(std::move(word));
    return result;
}

std::vector<DyckWord> enumerate_irreducible(std::size_t n, std::size_t bound) {
    if (n == 0) throw std::invalid_argument("enumerate_irreducible requires n >= 1");
    check_bound(n, bound);
    std::vector<DyckWord> result;
    for (DyckWord& word : enumerate_dyck(n, bound)) {
        if (is_irreducible(word)) result.push_back(std::move(word));
    }
    return result;
}

ScaledSet random_scaled_set(std::uint64_t seed, const RandomSetOptions& options) {
    if (options.min_size > options.max_size)
        throw std::invalid_argument("random_scaled_set: min_size > max_size");
    if (options.max_numerator < 1 || options.max_denominator < 1)
        throw std::invalid_argument("random_scaled_set: numerator/denominator bounds must be >= 1");

    std::mt19937_64 rng(seed);
    const std::size_t size =
        static_cast<std::size_t>(uniform(rng, options.min_size, options.max_size));
    const std::int64_t min_numerator = options.mode == SetMode::Power ? -options.max_numerator : 1;

    std::set<Rational> elements;
    std::size_t attempts = 0;
    while (elements.size() < size) {
        if (++attempts > 1000 + 200 * size)
            throw std::invalid_argument(
                "random_scaled_set: bounds too tight to draw a distinct set of size " +
                std::to_string(size));
        elements.insert(
            random_rational(rng, min_numerator, options.max_numerator, options.max_denominator));
    }

    std::vector<Rational> list(elements.begin(), elements.end());
    return options.mode == SetMode::Power ? ScaledSet::power(std::move(list))
                                          : ScaledSet::plain(std::move(list));
}

bool PropertyReport::all_passed() const {
    return std::all_of(properties.begin(), properties.end(),
                       [](const PropertyResult& r) { return r.passed(); });
}

PropertyReport run_property_suite(const PropertySuiteConfig& config) {
    if (config.n_max > config.enumeration_bound)
        throw BoundError("n_max = " + std::to_string(config.n_max) +
                         " exceeds enumeration bound " + std::to_string(config.enumeration_bound));

    const auto encoder = config.encoder
                             ? config.encoder
                             : [](const ScaledSet& s, const LambdaParam& l) { return encode(s, l); };
    const LambdaParam symbolic = LambdaParam::symbolic();
    PropertyReport report;

    // Every encoded word lies in the Dyck language.
    {
        PropertyResult result{"dyck-inclusion"};
        FailureTracker tracker;
        for (SetMode mode : {SetMode::Power, SetMode::Plain}) {
            RandomSetOptions options;
            options.mode = mode;
            for (std::size_t i = 0; i < config.random_sets_per_mode; ++i) {
                const ScaledSet set =
                    random_scaled_set(stream_seed(config.seed, 1, i + (mode == SetMode::Plain ?
                                                                           config.random_sets_per_mode
                                                                         : 0)),
                                      options);
                const LambdaParam lambda =
                    mode == SetMode::Power ? symbolic
                                           : LambdaParam::rational(kPlainLambdas[i % 3]);
                const Word word = encoder(set, lambda);
                ++result.cases;
                if (!is_dyck(word))
                    tracker.record(word.size(),
                                   describe_set(set, lambda) + " encodes to non-Dyck \"" +
                                       word.str() + "\"");
            }
        }
        result.failures = tracker.failures();
        result.counterexample = tracker.counterexample();
        report.properties.push_back(std::move(result));
    }

    // Scaling a set never changes its encoding.
    {
        PropertyResult result{"scale-invariance"};
        FailureTracker tracker;
        for (SetMode mode : {SetMode::Power, SetMode::Plain}) {
            RandomSetOptions options;
            options.mode = mode;
            for (std::size_t i = 0; i < config.scale_cases_per_mode; ++i) {
                const std::uint64_t case_seed =
                    stream_seed(config.seed, 2,
                                i + (mode == SetMode::Plain ? config.scale_cases_per_mode : 0));
                const ScaledSet set = random_scaled_set(case_seed, options);
                std::mt19937_64 rng(case_seed ^ 0x5DEECE66Dull);
                const Rational alpha = mode == SetMode::Power
                                           ? random_rational(rng, -64, 64, 8)
                                           : random_rational(rng, 1, 64, 8);
                const LambdaParam lambda =
                    mode == SetMode::Power ? symbolic
                                           : LambdaParam::rational(kPlainLambdas[i % 3]);
                const Word before = encoder(set, lambda);
                const Word after = encoder(scale(set, alpha), lambda);
                ++result.cases;
                if (before != after)
                    tracker.record(before.size(),
                                   describe_set(set, lambda) + " scaled by " +
                                       rational_to_string(alpha) + ": \"" + before.str() +
                                       "\" became \"" + after.str() + "\"");
            }
        }
        result.failures = tracker.failures();
        result.counterexample = tracker.counterexample();
        report.properties.push_back(std::move(result));
    }

    // Deleting the last peak of an irreducible word keeps it irreducible
    // and shortens it by exactly two letters.
    {
        PropertyResult result{"strip-preserves-irreducible"};
        FailureTracker tracker;
        for (std::size_t n = 2; n <= config.n_max; ++n) {
            for (const DyckWord& word : enumerate_irreducible(n, config.enumeration_bound)) {
                ++result.cases;
                try {
                    const StripResult stripped = strip_last_peak(word);
                    if (!is_irreducible(stripped.word) || stripped.word.size() != word.size() - 2)
                        tracker.record(word.size(), "strip of \"" + word.str() + "\" gave \"" +
                                                        stripped.word.str() + "\"");
                } catch (const std::exception& e) {
                    tracker.record(word.size(), "strip of \"" + word.str() + "\" threw: " + e.what());
                }
            }
        }
        result.failures = tracker.failures();
        result.counterexample = tracker.counterexample();
        report.properties.push_back(std::move(result));
    }

    // Concatenating witness sets encodes to the concatenated words.
    {
        PropertyResult result{"concat-homomorphism"};
        FailureTracker tracker;
        RandomSetOptions options;
        options.mode = SetMode::Power;
        options.min_size = 1;
        for (std::size_t i = 0; i < config.concat_cases; ++i) {
            const ScaledSet s1 = random_scaled_set(stream_seed(config.seed, 3, 2 * i), options);
            const ScaledSet s2 = random_scaled_set(stream_seed(config.seed, 3, 2 * i + 1), options);
            const Word expected = encoder(s1, symbolic) + encoder(s2, symbolic);
            const Word actual = encoder(concat_sets(s1, s2), symbolic);
            ++result.cases;
            if (expected != actual)
                tracker.record(expected.size(), describe_set(s1, symbolic) + " ++ " +
                                                    describe_set(s2, symbolic) + " encoded to \"" +
                                                    actual.str() + "\", expected \"" +
                                                    expected.str() + "\"");
        }
        result.failures = tracker.failures();
        result.counterexample = tracker.counterexample();
        report.properties.push_back(std::move(result));
    }

    // Synthesis inverts encoding on every Dyck word up to the bound.
    {
        PropertyResult result{"synthesis-round-trip"};
        FailureTracker tracker;
        for (std::size_t n = 0; n <= config.n_max; ++n) {
            for (const DyckWord& word : enumerate_dyck(n, config.enumeration_bound)) {
                ++result.cases;
                const Word encoded = encoder(synthesize(word), symbolic);
                if (encoded != word.word())
                    tracker.record(word.size(), "\"" + word.str() + "\" round-tripped to \"" +
                                                    encoded.str() + "\"");
            }
        }
        result.failures = tracker.failures();
        result.counterexample = tracker.counterexample();
        report.properties.push_back(std::move(result));
    }

    // Synthesized exponent sets E satisfy E disjoint from E+1 and |S| = |w|/2.
    {
        PropertyResult result{"synthesis-disjointness"};
        FailureTracker tracker;
        for (std::size_t n = 0; n <= config.n_max; ++n) {
            for (const DyckWord& word : enumerate_dyck(n, config.enumeration_bound)) {
                ++result.cases;
                const ScaledSet set = synthesize(word);
                const std::vector<Rational>& exponents = set.elements();
                bool overlap = false;
                for (const Rational& e : exponents)
                    overlap |= std::binary_search(exponents.begin(), exponents.end(), e + 1);
                if (overlap || set.size() != word.size() / 2)
                    tracker.record(word.size(),
                                   "witness for \"" + word.str() + "\": " +
                                       describe_set(set, symbolic) +
                                       (overlap ? " overlaps its shift by one" : " has wrong size"));
            }
        }
        result.failures = tracker.failures();
        result.counterexample = tracker.counterexample();
        report.properties.push_back(std::move(result));
    }

    return report;
}

std::string report_to_text(const PropertyReport& report) {
    std::ostringstream out;
    std::size_t failed = 0;
    for (const PropertyResult& result : report.properties) {
        out << (result.passed() ? "pass" : "FAIL") << "  " << result.name << ": " << result.cases
            << " cases";
        if (!result.passed()) {
            ++failed;
            out << ", " << result.failures << " failures; counterexample: "
                << result.counterexample;
        }
        out << "\n";
    }
    if (failed == 0) {
        out << "all " << report.properties.size() << " properties passed\n";
    } else {
        out << failed << " of " << report.properties.size() << " properties failed\n";
    }
    return out.str();
}

std::string report_to_json(const PropertyReport& report) {
    nlohmann::ordered_json properties = nlohmann::ordered_json::array();
    for (const PropertyResult& result : report.properties) {
        nlohmann::ordered_json entry;
        entry["property"] = result.name;
        entry["cases"] = result.cases;
        entry["failures"] = result.failures;
        entry["passed"] = result.passed();
        if (!result.passed()) entry["counterexample"] = result.counterexample;
        properties.push_back(std::move(entry));
    }
    nlohmann::ordered_json doc;
    doc["properties"] = std::move(properties);
    doc["all_passed"] = report.all_passed();
    return doc.dump();
}

}  // namespace dyckset
