#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "slq/error.hpp"

namespace slq::detail {

// Minimal hand-rolled scanner shared by the scalar and element grammars.
struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char ch) {
        if (peek() == ch) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char ch) {
        if (!accept(ch))
            fail(std::string("expected '") + ch + "'");
    }
    bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    // Unsigned decimal integer as text (arbitrary length).
    std::string digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            fail("expected integer");
        return std::string(text.substr(start, pos - start));
    }

    long small_int() {
        bool neg = accept('-');
        std::string d = digits();
        if (d.size() > 9)
            fail("exponent too large");
        long v = std::stol(d);
        return neg ? -v : v;
    }

    [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, pos); }
};

} // namespace slq::detail
