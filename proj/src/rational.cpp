#include "dyckset/rational.hpp"

#include <cctype>

namespace dyckset {
namespace {

// Scans an optionally signed integer starting at `pos`; advances `pos`
// one past the last digit consumed.
Int scan_integer(std::string_view text, std::size_t& pos, bool allow_sign) {
    const std::size_t start = pos;
    if (allow_sign && pos < text.size() && text[pos] == '-') ++pos;
    const std::size_t digits_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_begin)
        throw ParseError("expected digits in rational \"" + std::string(text) + "\"", start);
    return Int(std::string(text.substr(start, pos - start)));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    const Int num = scan_integer(text, pos, /*allow_sign=*/true);
    if (pos == text.size()) return Rational(num);
    if (text[pos] != '/')
        throw ParseError("unexpected character '" + std::string(1, text[pos]) +
                             "' in rational \"" + std::string(text) + "\"",
                         pos);
    ++pos;
    const std::size_t den_pos = pos;
    const Int den = scan_integer(text, pos, /*allow_sign=*/false);
    if (pos != text.size())
        throw ParseError("trailing characters in rational \"" + std::string(text) + "\"", pos);
    if (den == 0)
        throw ParseError("zero denominator in rational \"" + std::string(text) + "\"", den_pos);
    return Rational(num, den);
}

std::string rational_to_string(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

Int floor_rational(const Rational& value) {
    // cpp_int division truncates toward zero; adjust for negatives.
    Int quotient = numerator(value) / denominator(value);
    if (numerator(value) < 0 && quotient * denominator(value) != numerator(value)) --quotient;
    return quotient;
}

}  // namespace dyckset
