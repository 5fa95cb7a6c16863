#include <doctest.h>

#include <string>
#include <vector>

#include "brute_force.hpp"
#include "dyckset/word.hpp"

using namespace dyckset;

namespace {

// All strings over {a,b} of the given length.
std::vector<std::string> all_strings(std::size_t length) {
    std::vector<std::string> words;
    for (std::uint64_t mask = 0; mask < (1ull << length); ++mask) {
        std::string word(length, 'a');
        for (std::size_t i = 0; i < length; ++i)
            if (mask & (1ull << i)) word[i] = 'b';
        words.push_back(word);
    }
    return words;
}

}  // namespace

TEST_CASE("word parsing and rendering") {
    CHECK(Word::parse("").empty());
    CHECK(Word::parse("ab").str() == "ab");
    CHECK(Word::parse("(())", Alphabet::Parens).str() == "aabb");
    CHECK(Word::parse("aabb").str(Alphabet::Parens) == "(())");

    CHECK_THROWS_AS(Word::parse("abx"), ParseError);
    CHECK_THROWS_AS(Word::parse("ab", Alphabet::Parens), ParseError);
    try {
        Word::parse("abcab");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("reduce_bicyclic examples") {
    CHECK(reduce_bicyclic(Word::parse("abab")) == BicyclicNormalForm{0, 0});
    CHECK(reduce_bicyclic(Word::parse("ba")) == BicyclicNormalForm{1, 1});
    // hand rewriting: aab -> a(ab) -> a
    CHECK(brute::rewrite_bicyclic("aab") == BicyclicNormalForm{0, 1});
    CHECK(reduce_bicyclic(Word::parse("aab")) == BicyclicNormalForm{0, 1});
    CHECK(reduce_bicyclic(Word()) == BicyclicNormalForm{0, 0});
}

TEST_CASE("reduce_bicyclic agrees with exhaustive rewriting up to length 10") {
    for (std::size_t length = 0; length <= 10; ++length) {
        for (const std::string& text : all_strings(length)) {
            const BicyclicNormalForm fast = reduce_bicyclic(Word::parse(text));
            // several cancellation orders: confluence means all agree
            for (std::uint64_t pick = 0; pick < 3; ++pick)
                CHECK(fast == brute::rewrite_bicyclic(text, pick));
        }
    }
}

TEST_CASE("is_dyck examples and equivalence of the three criteria") {
    CHECK(is_dyck(Word::parse("ab")));
    CHECK_FALSE(is_dyck(Word::parse("ba")));
    CHECK(is_dyck(Word::parse("aaababbabb")));

    for (std::size_t length = 0; length <= 10; ++length) {
        for (const std::string& text : all_strings(length)) {
            const Word word = Word::parse(text);
            // prefix-counter criterion, computed locally
            long counter = 0;
            bool prefix_ok = true;
            for (char c : text) {
                counter += c == 'a' ? 1 : -1;
                if (counter < 0) prefix_ok = false;
            }
            const bool by_prefix = prefix_ok && counter == 0;
            CHECK(is_dyck(word) == by_prefix);
            CHECK(is_dyck(word) == reduce_bicyclic(word).is_identity());
            CHECK(is_dyck(word) == !first_dyck_violation(word).has_value());
        }
    }
}

TEST_CASE("dyck validation reports the first violating position") {
    CHECK_THROWS_AS(DyckWord::parse("ba"), NotDyckError);
    try {
        DyckWord::parse("ba");
    } catch (const NotDyckError& e) {
        CHECK(e.position() == 0);
    }
    try {
        DyckWord::parse("aab");
    } catch (const NotDyckError& e) {
        CHECK(e.position() == 3);  // imbalance only visible at end of input
    }
    try {
        DyckWord::parse("abba");
    } catch (const NotDyckError& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("factor_irreducible examples") {
    auto factors = factor_irreducible(DyckWord::parse("abab"));
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].str() == "ab");
    CHECK(factors[1].str() == "ab");

    factors = factor_irreducible(DyckWord::parse("aaababbbaaababbabb"));
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].str() == "aaababbb");
    CHECK(factors[1].str() == "aaababbabb");

    CHECK(factor_irreducible(DyckWord()).empty());
}

TEST_CASE("factorization reproduces, is irreducible, and is unique up to length 12") {
    for (std::size_t length = 0; length <= 12; length += 2) {
        for (const std::string& text : brute::enumerate_dyck_strings(length)) {
            const DyckWord word = DyckWord::parse(text);
            const auto factors = factor_irreducible(word);
            Word joined;
            for (const DyckWord& factor : factors) {
                CHECK(is_irreducible(factor));
                joined = joined + factor.word();
            }
            CHECK(joined == word.word());
            CHECK(brute::count_irreducible_factorizations(text) == 1);
        }
    }
}

TEST_CASE("is_irreducible examples") {
    CHECK(is_irreducible(DyckWord::parse("ab")));
    CHECK_FALSE(is_irreducible(DyckWord::parse("abab")));
    CHECK(is_irreducible(DyckWord::parse("aaababbb")));
    CHECK_FALSE(is_irreducible(DyckWord()));

    for (std::size_t length = 2; length <= 12; length += 2) {
        for (const std::string& text : brute::enumerate_dyck_strings(length)) {
            const DyckWord word = DyckWord::parse(text);
            CHECK(is_irreducible(word) == (factor_irreducible(word).size() == 1));
        }
    }
}

TEST_CASE("strip_last_peak examples") {
    StripResult stripped = strip_last_peak(DyckWord::parse("aabb"));
    CHECK(stripped.word.str() == "ab");
    CHECK(stripped.peak_index == 1);

    stripped = strip_last_peak(DyckWord::parse("aaababbabb"));
    CHECK(stripped.word.str() == "aaababbb");
    CHECK(stripped.peak_index == 7);

    stripped = strip_last_peak(DyckWord::parse("aaababbb"));
    CHECK(stripped.word.str() == "aaabbb");
    CHECK(stripped.peak_index == 4);
}

TEST_CASE("strip_last_peak rejects short and reducible input") {
    CHECK_THROWS_AS(strip_last_peak(DyckWord::parse("ab")), std::invalid_argument);
    CHECK_THROWS_AS(strip_last_peak(DyckWord::parse("abab")), std::invalid_argument);
    CHECK_THROWS_AS(strip_last_peak(DyckWord()), std::invalid_argument);
}

TEST_CASE("strip_last_peak preserves irreducibility up to length 16") {
    for (std::size_t length = 4; length <= 16; length += 2) {
        std::size_t seen = 0;
        for (const std::string& text : brute::enumerate_dyck_strings(length)) {
            if (!brute::is_irreducible_string(text)) continue;
            ++seen;
            const DyckWord word = DyckWord::parse(text);
            const StripResult stripped = strip_last_peak(word);
            CHECK(stripped.word.size() == word.size() - 2);
            CHECK(is_irreducible(stripped.word));

            // everything strictly after the deleted 'a' is 'b', and the
            // deleted 'a' is never in the final two positions
            CHECK(stripped.peak_index <= word.size() - 3);
            for (std::size_t i = stripped.peak_index + 1; i < word.size(); ++i)
                CHECK(word.word()[i] == Letter::B);
        }
        CHECK(seen == brute::catalan(length / 2 - 1));
    }
}

TEST_CASE("word ordering is lexicographic with a before b") {
    CHECK(Word::parse("aabb") < Word::parse("abab"));
    CHECK(Word::parse("ab") < Word::parse("abab"));
    CHECK(Word::parse("") < Word::parse("a"));
}
