#pragma once

// Independent oracles for the test suites. Everything here recomputes
// results from first principles (string rewriting, bitmask enumeration,
// set arithmetic) rather than calling the library code under test.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "dyckset/rational.hpp"
#include "dyckset/scaled_set.hpp"
#include "dyckset/word.hpp"

namespace brute {

inline std::uint64_t catalan(std::size_t n) {
    std::vector<std::uint64_t> c(n + 1, 0);
    c[0] = 1;
    for (std::size_t m = 1; m <= n; ++m)
        for (std::size_t k = 0; k < m; ++k) c[m] += c[k] * c[m - 1 - k];
    return c[n];
}

// Normal form in the bicyclic monoid by literal rewriting: repeatedly
// delete the "ab" occurrence at a caller-chosen position until none is
// left. Quadratic and proud of it.
inline dyckset::BicyclicNormalForm rewrite_bicyclic(std::string word, std::uint64_t pick_seed = 0) {
    std::uint64_t state = pick_seed * 6364136223846793005ull + 1442695040888963407ull;
    while (true) {
        std::vector<std::size_t> sites;
        for (std::size_t i = 0; i + 1 < word.size(); ++i)
            if (word[i] == 'a' && word[i + 1] == 'b') sites.push_back(i);
        if (sites.empty()) break;
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        word.erase(sites[state % sites.size()], 2);
    }
    dyckset::BicyclicNormalForm form;
    for (char c : word) (c == 'b' ? form.b_count : form.a_count)++;
    return form;
}

// All Dyck words of the given (even) length, by filtering every bitmask
// with a local prefix counter.
inline std::vector<std::string> enumerate_dyck_strings(std::size_t length) {
    std::vector<std::string> words;
    for (std::uint64_t mask = 0; mask < (1ull << length); ++mask) {
        std::string word(length, 'a');
        long counter = 0;
        bool ok = true;
        for (std::size_t i = 0; i < length && ok; ++i) {
            if (mask & (1ull << i)) word[i] = 'b';
            counter += word[i] == 'a' ? 1 : -1;
            ok = counter >= 0;
        }
        if (ok && counter == 0) words.push_back(word);
    }
    return words;
}

// Symmetric-difference profile via std::set arithmetic in magnitude space.
inline dyckset::Profile profile_by_sets(const dyckset::ScaledSet& set,
                                        const dyckset::LambdaParam& lambda) {
    using dyckset::Rational;
    std::set<Rational> s(set.elements().begin(), set.elements().end());
    std::set<Rational> scaled;
    for (const Rational& x : s)
        scaled.insert(set.mode() == dyckset::SetMode::Power ? Rational(x + 1)
                                                            : Rational(x * lambda.value()));
    std::set<Rational> all;
    all.insert(s.begin(), s.end());
    all.insert(scaled.begin(), scaled.end());
    dyckset::Profile profile;
    for (const Rational& x : all) {
        const bool in_s = s.count(x) > 0;
        const bool in_scaled = scaled.count(x) > 0;
        if (in_s && in_scaled) continue;
        profile.push_back({x, in_s ? dyckset::Origin::FromS : dyckset::Origin::FromLambdaS});
    }
    return profile;
}

// True iff the string is a nonempty Dyck word whose counter stays
// strictly positive before the end.
inline bool is_irreducible_string(const std::string& word) {
    if (word.empty()) return false;
    long counter = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        counter += word[i] == 'a' ? 1 : -1;
        if (counter <= 0 && i + 1 < word.size()) return false;
    }
    return counter == 0;
}

// Number of ways to write the word as a concatenation of irreducible Dyck
// words, trying every prefix naively. Unique factorization means this is
// 1 for every Dyck word (the empty product for the empty word).
inline std::uint64_t count_irreducible_factorizations(const std::string& word) {
    if (word.empty()) return 1;
    std::uint64_t total = 0;
    for (std::size_t end = 2; end <= word.size(); end += 2) {
        if (is_irreducible_string(word.substr(0, end)))
            total += count_irreducible_factorizations(word.substr(end));
    }
    return total;
}

}  // namespace brute
