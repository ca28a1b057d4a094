#pragma once

#include <stdexcept>
#include <string>

namespace graphpoly {

// Malformed textual or JSON input.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A configured size limit (canonicalisation, subset enumeration, state count)
// would be exceeded.
struct LimitError : std::runtime_error {
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

// Mathematically undefined operation for the given input (division by a
// vanishing normaliser, logarithm of a nonpositive quantity, and so on).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace graphpoly
