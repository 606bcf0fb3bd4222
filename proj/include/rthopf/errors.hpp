#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rthopf {

// Raised by the tree/forest/expression parsers; `offset` is the byte
// position of the first offending character in the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
          message_(message),
          offset_(offset) {}

    // message without the position suffix
    const std::string& message() const { return message_; }
    std::size_t offset() const { return offset_; }

private:
    std::string message_;
    std::size_t offset_;
};

// Raised when an operation would exceed a configured desk-scale bound
// (brute-force generation, pairing evaluation, CLI degree limits).
class BoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace rthopf
