#pragma once

/**
 * @file rational.hpp
 * @brief Exact scalar arithmetic: arbitrary-precision integers and rationals.
 *
 * Every scalar in this library is a Rational in canonical form (reduced,
 * positive denominator). Boost.Multiprecision maintains that invariant;
 * the helpers here add the serialization format, integer square roots and
 * binomial coefficients the rest of the library needs.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace fibsum {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den with any signs; the sign moves to the numerator.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) {
        throw std::domain_error("make_rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

/// "num/den" in lowest terms, "num" alone when den = 1.
inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

/// Inverse of to_string. Accepts unreduced input and canonicalizes it.
inline Rational parse_rational(std::string_view text) {
    const auto bad = [&](const char* why) {
        return std::invalid_argument("parse_rational: " + std::string(why) + " in \"" +
                                     std::string(text) + "\"");
    };
    if (text.empty()) throw bad("empty string");

    const auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    std::string_view den_part =
        slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

    const auto is_integer = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = allow_sign && (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
        }
        return true;
    };
    if (!is_integer(num_part, true)) throw bad("malformed numerator");
    if (num_part[0] == '+') num_part.remove_prefix(1);  // cpp_int rejects a leading '+'

    Integer num{std::string(num_part)};
    if (slash == std::string_view::npos) return Rational(num);

    if (!is_integer(den_part, false)) throw bad("malformed denominator");
    Integer den{std::string(den_part)};
    if (den == 0) throw bad("zero denominator");
    return make_rational(std::move(num), std::move(den));
}

/// Floor of the square root; n must be non-negative.
inline Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

/// The exact square root when n is a perfect square, nullopt otherwise.
inline std::optional<Integer> perfect_sqrt(const Integer& n) {
    if (n < 0) return std::nullopt;
    Integer r = boost::multiprecision::sqrt(n);
    if (r * r != n) return std::nullopt;
    return r;
}

/// C(n, k); zero when k > n.
inline Integer binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        result *= static_cast<unsigned long>(n - k + i);
        result /= static_cast<unsigned long>(i);  // divides exactly at every step
    }
    return result;
}

/// 2^e as an Integer.
inline Integer pow2(std::size_t e) { return Integer(1) << e; }

}  // namespace fibsum
