#pragma once

/**
 * @file parse.hpp
 * @brief Recursive-descent parser for weight-polynomial expressions.
 *
 * Grammar (whitespace-insensitive):
 *   expr  := ("+" | "-")? term (("+" | "-") term)*
 *   term  := coeff? var ("^" uint)? | coeff
 *   coeff := int ("/" uint)?
 *   var   := letter            (must be the configured variable, default "k")
 *
 * Repeated powers accumulate: "k + k" parses to 2k.
 */

#include "fibsum/poly.hpp"
#include "fibsum/rational.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibsum {

/// Malformed input; position() is the offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Syntactically recognizable input the grammar deliberately excludes:
/// non-integer or negative exponents, variables other than the configured one.
class UnsupportedError : public ParseError {
public:
    using ParseError::ParseError;
};

struct PolyExpr {
    std::string source;
    Poly parsed;
    char variable = 'k';
};

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, char variable) : text_(text), variable_(variable) {}

    Poly parse() {
        std::vector<Rational> coeffs;
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial expression", pos_);
        bool negative = accept_sign();
        while (true) {
            parse_term(coeffs, negative);
            skip_ws();
            if (at_end()) break;
            if (peek() == '+') {
                negative = false;
            } else if (peek() == '-') {
                negative = true;
            } else {
                throw ParseError(std::string("expected '+' or '-', found '") + peek() + "'",
                                 pos_);
            }
            ++pos_;
        }
        return Poly(std::move(coeffs));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool accept_sign() {
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            const bool negative = peek() == '-';
            ++pos_;
            return negative;
        }
        return false;
    }

    Integer parse_uint(const char* what) {
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError(std::string("expected ") + what, pos_);
        }
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            ++pos_;
        }
        if (!at_end() && peek() == '.') {
            throw UnsupportedError(std::string("non-integer ") + what, pos_);
        }
        return Integer(digits);
    }

    // coeff := int ("/" uint)?   (sign handled by the caller)
    Rational parse_coeff() {
        Integer num = parse_uint("coefficient");
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            const std::size_t den_pos = pos_;
            Integer den = parse_uint("denominator");
            if (den == 0) throw ParseError("zero denominator", den_pos);
            return make_rational(std::move(num), std::move(den));
        }
        return Rational(num);
    }

    void parse_term(std::vector<Rational>& coeffs, bool negative) {
        skip_ws();
        if (at_end()) throw ParseError("expected a term", pos_);

        Rational coeff(1);
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_coeff();
            saw_coeff = true;
        }
        skip_ws();

        std::size_t exponent = 0;
        if (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
            if (peek() != variable_) {
                throw UnsupportedError(std::string("unsupported variable '") + peek() +
                                           "', expected '" + variable_ + "'",
                                       pos_);
            }
            ++pos_;
            exponent = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                if (!at_end() && peek() == '-') {
                    throw UnsupportedError("negative exponent", pos_);
                }
                Integer e = parse_uint("exponent");
                if (e > Integer(kMaxParseDegree)) {
                    throw UnsupportedError("exponent exceeds the supported cap of 64", pos_);
                }
                exponent = e.convert_to<std::size_t>();
            }
        } else if (!saw_coeff) {
            throw ParseError(std::string("expected a coefficient or '") + variable_ + "'",
                             pos_);
        }

        if (negative) coeff = -coeff;
        if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, Rational(0));
        coeffs[exponent] += coeff;
    }

    static constexpr std::size_t kMaxParseDegree = 64;

    std::string_view text_;
    char variable_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Poly parse_poly(std::string_view text, char variable = 'k') {
    return detail::PolyParser(text, variable).parse();
}

inline PolyExpr parse_poly_expr(std::string_view text, char variable = 'k') {
    return PolyExpr{std::string(text), parse_poly(text, variable), variable};
}

/// Canonical text form, descending degree, re-parseable by parse_poly.
/// Examples: "k^2 + 3k - 1/2", "0".
inline std::string render_poly_text(const Poly& p, char variable = 'k') {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t down = p.coefficients().size(); down-- > 0;) {
        const Rational& c = p.coeff(down);
        if (c == 0) continue;
        const bool first = out.empty();
        const bool negative = c < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = negative ? Rational(-c) : c;
        if (down == 0) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag);
            out += variable;
            if (down > 1) out += '^' + std::to_string(down);
        }
    }
    return out;
}

}  // namespace fibsum
