#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lextrop {

// Base for every error raised by the library. Anything deriving from Error
// that is not a ParseError is a precondition violation.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RankMismatch : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), detail_(what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }
    // The message without the offset suffix.
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string detail_;
    std::size_t offset_;
};

class PointNotInComplex : public Error {
public:
    using Error::Error;
};

class Disconnected : public Error {
public:
    using Error::Error;
};

} // namespace lextrop
