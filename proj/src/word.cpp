#include "dyckset/word.hpp"

#include <stdexcept>

namespace dyckset {

char letter_to_char(Letter letter, Alphabet alphabet) {
    if (alphabet == Alphabet::Parens) return letter == Letter::A ? '(' : ')';
    return letter == Letter::A ? 'a' : 'b';
}

Word Word::parse(std::string_view text, Alphabet alphabet) {
    const char open = letter_to_char(Letter::A, alphabet);
    const char close = letter_to_char(Letter::B, alphabet);
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == open) {
            letters.push_back(Letter::A);
        } else if (text[i] == close) {
            letters.push_back(Letter::B);
        } else {
            throw ParseError(std::string("invalid character '") + text[i] + "' at position " +
                                 std::to_string(i) + " (expected '" + open + "' or '" + close +
                                 "')",
                             i);
        }
    }
    return Word(std::move(letters));
}

std::string Word::str(Alphabet alphabet) const {
    std::string out;
    out.reserve(letters_.size());
    for (Letter letter : letters_) out.push_back(letter_to_char(letter, alphabet));
    return out;
}

Word Word::operator+(const Word& rhs) const {
    std::vector<Letter> letters = letters_;
    letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word(std::move(letters));
}

BicyclicNormalForm reduce_bicyclic(const Word& word) {
    BicyclicNormalForm form;
    for (Letter letter : word) {
        if (letter == Letter::A) {
            ++form.a_count;
        } else if (form.a_count > 0) {
            --form.a_count;  // cancels a trailing "ab"
        } else {
            ++form.b_count;
        }
    }
    return form;
}

bool is_dyck(const Word& word) { return reduce_bicyclic(word).is_identity(); }

std::optional<std::size_t> first_dyck_violation(const Word& word) {
    std::int64_t counter = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        counter += word[i] == Letter::A ? 1 : -1;
        if (counter < 0) return i;
    }
    if (counter != 0) return word.size();
    return std::nullopt;
}

DyckWord::DyckWord(Word word) : word_(std::move(word)) {
    if (auto position = first_dyck_violation(word_)) {
        const std::string detail =
            *position < word_.size()
                ? "unmatched '" + std::string(1, letter_to_char(Letter::B)) + "' at position " +
                      std::to_string(*position)
                : "unmatched '" + std::string(1, letter_to_char(Letter::A)) +
                      "' remains at end of input (position " + std::to_string(*position) + ")";
        throw NotDyckError("not a Dyck word: " + detail, *position);
    }
}

DyckWord DyckWord::parse(std::string_view text, Alphabet alphabet) {
    return DyckWord(Word::parse(text, alphabet));
}

std::vector<DyckWord> factor_irreducible(const DyckWord& word) {
    std::vector<DyckWord> factors;
    std::vector<Letter> current;
    std::int64_t counter = 0;
    for (Letter letter : word.word()) {
        current.push_back(letter);
        counter += letter == Letter::A ? 1 : -1;
        if (counter == 0) {
            factors.emplace_back(Word(std::move(current)));
            current.clear();
        }
    }
    return factors;
}

bool is_irreducible(const DyckWord& word) {
    if (word.empty()) return false;
    // Irreducible iff the counter returns to zero only at the very end.
    std::int64_t counter = 0;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        counter += word.word()[i] == Letter::A ? 1 : -1;
        if (counter == 0) return false;
    }
    return true;
}

StripResult strip_last_peak(const DyckWord& word) {
    if (word.size() < 4)
        throw std::invalid_argument("strip_last_peak requires length >= 4, got " +
                                    std::to_string(word.size()));
    if (!is_irreducible(word))
        throw std::invalid_argument("strip_last_peak requires an irreducible Dyck word, got \"" +
                                    word.str() + "\"");
    std::size_t peak = word.size();
    for (std::size_t i = word.size(); i-- > 0;) {
        if (word.word()[i] == Letter::A) {
            peak = i;
            break;
        }
    }
    std::vector<Letter> letters;
    letters.reserve(word.size() - 2);
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (i != peak) letters.push_back(word.word()[i]);
    }
    return StripResult{DyckWord(Word(std::move(letters))), peak};
}

}  // namespace dyckset
