// Textual form of F2[a,b] elements.
//
// Grammar (whitespace insignificant):
//   poly   := '0' | term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := 'a' pow? | 'b' pow? | '1'
//   pow    := '^' uint
//
// The canonical rendering lists monomials in decreasing a-exponent within
// decreasing degree, with `^1` and `*1` suppressed, terms joined by " + ".

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "klein/poly.hpp"

namespace klein {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what)
        : std::runtime_error("syntax error at position " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, int degree_cap) : text_(text), cap_(degree_cap) {}

    BiPoly run() {
        skip_ws();
        if (peek() == '0') {
            ++pos_;
            skip_ws();
            if (pos_ != text_.size()) fail("trailing input after '0'");
            return BiPoly::zero();
        }
        BiPoly result = term();
        skip_ws();
        while (peek() == '+') {
            ++pos_;
            result += term();
            skip_ws();
        }
        if (pos_ != text_.size()) fail("unexpected character");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                       text_[pos_] == '\r'))
            ++pos_;
    }

    long parse_uint() {
        if (peek() < '0' || peek() > '9') fail("expected an exponent");
        long v = 0;
        while (peek() >= '0' && peek() <= '9') {
            v = v * 10 + (peek() - '0');
            if (v > kMaxDegree) fail("exponent exceeds the representable maximum");
            ++pos_;
        }
        return v;
    }

    // Accumulates exponents of one term into (a_exp, b_exp).
    BiPoly term() {
        long a_exp = 0, b_exp = 0;
        factor(a_exp, b_exp);
        skip_ws();
        while (peek() == '*') {
            ++pos_;
            factor(a_exp, b_exp);
            skip_ws();
        }
        if (a_exp + b_exp > cap_)
            fail("monomial degree " + std::to_string(a_exp + b_exp) + " exceeds the degree cap " +
                 std::to_string(cap_));
        return BiPoly(HomogPoly::monomial(static_cast<int>(a_exp), static_cast<int>(a_exp + b_exp)));
    }

    void factor(long& a_exp, long& b_exp) {
        skip_ws();
        const char c = peek();
        if (c == 'a' || c == 'b') {
            ++pos_;
            skip_ws();
            long e = 1;
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                e = parse_uint();
            }
            (c == 'a' ? a_exp : b_exp) += e;
            if (a_exp + b_exp > kMaxDegree) fail("monomial degree exceeds the representable maximum");
        } else if (c == '1') {
            ++pos_;
        } else if (c == '\0') {
            fail("unexpected end of input");
        } else {
            fail(std::string("expected 'a', 'b' or '1', got '") + c + "'");
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int cap_;
};

inline void render_monomial(std::string& out, int a_exp, int b_exp) {
    if (a_exp == 0 && b_exp == 0) {
        out += '1';
        return;
    }
    if (a_exp > 0) {
        out += 'a';
        if (a_exp > 1) out += '^' + std::to_string(a_exp);
    }
    if (b_exp > 0) {
        if (a_exp > 0) out += '*';
        out += 'b';
        if (b_exp > 1) out += '^' + std::to_string(b_exp);
    }
}

}  // namespace detail

inline BiPoly parse_poly(std::string_view text, int degree_cap = kDefaultDegreeCap) {
    return detail::PolyParser(text, degree_cap).run();
}

inline std::string to_string(const BiPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (auto it = f.components().rbegin(); it != f.components().rend(); ++it) {
        const auto& [n, p] = *it;
        for (int i = n; i >= 0; --i) {
            if (!p.bit(i)) continue;
            if (!out.empty()) out += " + ";
            detail::render_monomial(out, i, n - i);
        }
    }
    return out;
}

inline std::string to_string(const HomogPoly& f) { return to_string(BiPoly(f)); }

}  // namespace klein
