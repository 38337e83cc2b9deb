#pragma once

#include <stdexcept>
#include <string>

namespace chebknot {

/// Bad user-facing input: malformed words, fractions, names, CLI values.
class InvalidInputError : public std::invalid_argument {
public:
    explicit InvalidInputError(const std::string& what) : std::invalid_argument(what) {}
};

/// The requested object is a two-component link, not a knot
/// (word length 2 mod 3, or an even continued-fraction numerator).
class LinkNotKnotError : public InvalidInputError {
public:
    explicit LinkNotKnotError(const std::string& what) : InvalidInputError(what) {}
};

/// A mathematical invariant that should be unreachable failed.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// The request is well-formed but too large for exhaustive treatment.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace chebknot
