#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slq {

/// Raised when operands are incompatible (different ell, different algebra
/// modes, a quotient projection in the wrong direction, ...).
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class division_by_zero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class singular_matrix : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text input that does not follow the scalar/element grammar.  `position()`
/// is the byte offset into the input where parsing stopped.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}

    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

} // namespace slq
