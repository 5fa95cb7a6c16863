#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dyckset {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input (word text, rational text, JSON). `position`
// is a 0-based offset into the offending string when known, npos otherwise.
class ParseError : public Error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit ParseError(const std::string& msg, std::size_t position = npos)
        : Error(msg), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Incompatible set mode / lambda kind combination (plain set with symbolic lambda).
class ModeMismatchError : public Error {
public:
    using Error::Error;
};

// Input word fails Dyck validation. `position` is the first violating
// prefix position: the index of the unmatched 'b', or the length of the
// word when letters remain unmatched at the end.
class NotDyckError : public Error {
public:
    NotDyckError(const std::string& msg, std::size_t position)
        : Error(msg), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Enumeration request exceeds the configured bound.
class BoundError : public Error {
public:
    using Error::Error;
};

}  // namespace dyckset
