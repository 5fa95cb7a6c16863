#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dyckset/errors.hpp"

namespace dyckset {

// The two-letter alphabet. A plays the role of an opening parenthesis,
// B of a closing one; A < B gives the lexicographic order used throughout.
enum class Letter : std::uint8_t { A = 0, B = 1 };

// Rendering/parsing alphabet: 'a'/'b' by default, '('/')' in alias mode.
enum class Alphabet { Letters, Parens };

char letter_to_char(Letter letter, Alphabet alphabet = Alphabet::Letters);

// A finite word over {a, b}; the empty word is the default value.
// Immutable after construction.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    // Parses a string over {a,b} (or {(,)} in alias mode). Rejects any
    // other character with a ParseError carrying its offset.
    static Word parse(std::string_view text, Alphabet alphabet = Alphabet::Letters);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }

    std::string str(Alphabet alphabet = Alphabet::Letters) const;

    Word operator+(const Word& rhs) const;

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

// Image of a word in the bicyclic monoid <a, b | ab = e>, as the unique
// normal form b^b_count a^a_count. The identity has both counts zero.
struct BicyclicNormalForm {
    std::uint64_t b_count = 0;
    std::uint64_t a_count = 0;

    bool is_identity() const { return b_count == 0 && a_count == 0; }

    friend bool operator==(const BicyclicNormalForm&, const BicyclicNormalForm&) = default;
};

// Canonical projection onto the bicyclic monoid: exhaustively cancels
// adjacent "ab" factors. Single left-to-right pass; the rewriting system
// is confluent so the result is independent of cancellation order.
BicyclicNormalForm reduce_bicyclic(const Word& word);

// True iff the word lies in the Dyck language (reduces to the identity).
bool is_dyck(const Word& word);

// First position witnessing that the word is not Dyck: the index where
// the running #a - #b counter first goes negative, or word.size() when
// unmatched a's remain. nullopt for Dyck words.
std::optional<std::size_t> first_dyck_violation(const Word& word);

// A word validated to lie in the Dyck language.
class DyckWord {
public:
    // Throws NotDyckError (with the violating position) if the word is not Dyck.
    explicit DyckWord(Word word);
    DyckWord() = default;  // the empty Dyck word

    static DyckWord parse(std::string_view text, Alphabet alphabet = Alphabet::Letters);

    const Word& word() const { return word_; }
    std::size_t size() const { return word_.size(); }
    bool empty() const { return word_.empty(); }
    std::string str(Alphabet alphabet = Alphabet::Letters) const { return word_.str(alphabet); }

    friend bool operator==(const DyckWord&, const DyckWord&) = default;
    friend auto operator<=>(const DyckWord&, const DyckWord&) = default;

private:
    Word word_;
};

// Unique factorization of a Dyck word into irreducible Dyck words:
// split after each position where the running #a - #b counter returns
// to zero. Concatenating the factors reproduces the input; the empty
// word factors into the empty list.
std::vector<DyckWord> factor_irreducible(const DyckWord& word);

// True iff the word is nonempty and not a concatenation of two nonempty
// Dyck words (equivalently, its factorization has exactly one element).
bool is_irreducible(const DyckWord& word);

// Result of deleting the last peak: the shortened word plus the index i
// (in the input) of the deleted 'a'.
struct StripResult {
    DyckWord word;
    std::size_t peak_index;
};

// Deletes the letter at the largest index i with w_i = a together with
// the final letter. Requires an irreducible input of length >= 4; the
// output is again irreducible, of length |w| - 2.
StripResult strip_last_peak(const DyckWord& word);

}  // namespace dyckset
