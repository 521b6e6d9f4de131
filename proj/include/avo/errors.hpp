#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace avo {

// Domain error: invalid argument, violated precondition, unusable input.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text; carries the byte offset of the offending data.
struct parse_error : error {
    parse_error(const std::string& what, std::size_t byte_offset)
        : error(what + " (at byte " + std::to_string(byte_offset) + ")")
        , offset(byte_offset)
    {
    }
    std::size_t offset;
};

// A configured exhaustiveness bound was exceeded.
struct bound_error : error {
    using error::error;
};

} // namespace avo
