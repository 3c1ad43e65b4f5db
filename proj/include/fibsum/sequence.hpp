#pragma once

/**
 * @file sequence.hpp
 * @brief Horadam-type sequences s0 = c0, s1 = c1, s_{n+1} = a*s_n + b*s_{n-1}.
 *
 * Term generation, zero-term location and degeneracy classification are all
 * exact integer arithmetic. The Binet-type evaluation and the consecutive-term
 * ratio probe are the only floating-point entry points, and both are
 * diagnostics, not computation paths.
 */

#include "fibsum/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fibsum {

struct SeqParams {
    std::int64_t a = 1;
    std::int64_t b = 1;
    std::int64_t c0 = 0;
    std::int64_t c1 = 1;
    Integer disc;                       // a^2 + 4b
    std::optional<Integer> disc_sqrt;   // present iff disc is a perfect square

    /// Validates a >= 1, b >= 1 and (c0, c1) != (0, 0).
    static SeqParams create(std::int64_t a, std::int64_t b, std::int64_t c0, std::int64_t c1) {
        if (a < 1) throw std::invalid_argument("SeqParams: a must be a positive integer");
        if (b < 1) throw std::invalid_argument("SeqParams: b must be a positive integer");
        if (c0 == 0 && c1 == 0) {
            throw std::invalid_argument("SeqParams: seeds (c0, c1) must not both be zero");
        }
        SeqParams p;
        p.a = a;
        p.b = b;
        p.c0 = c0;
        p.c1 = c1;
        p.disc = Integer(a) * a + 4 * Integer(b);
        p.disc_sqrt = perfect_sqrt(p.disc);
        return p;
    }

    friend bool operator==(const SeqParams& lhs, const SeqParams& rhs) {
        return lhs.a == rhs.a && lhs.b == rhs.b && lhs.c0 == rhs.c0 && lhs.c1 == rhs.c1;
    }
};

inline SeqParams fibonacci_params() { return SeqParams::create(1, 1, 0, 1); }
inline SeqParams lucas_params() { return SeqParams::create(1, 1, 2, 1); }
inline SeqParams pell_params() { return SeqParams::create(2, 1, 0, 1); }
inline SeqParams jacobsthal_params() { return SeqParams::create(1, 2, 1, 0); }

enum class DegeneracyKind { NonDegenerate, DegenerateJ1, DegenerateJ2 };

/// Degenerate sequences are pure geometric progressions s_n = c0 * r^n with
/// r = ratio_root; the closed-form triple is then non-unique.
struct DegeneracyClass {
    DegeneracyKind kind = DegeneracyKind::NonDegenerate;
    std::optional<Rational> ratio_root;  // j1/2 or j2/2, rational in the degenerate cases
};

/// s_0 .. s_{n_max}, exact.
inline std::vector<Integer> terms(const SeqParams& p, std::size_t n_max) {
    std::vector<Integer> s;
    s.reserve(n_max + 1);
    s.emplace_back(p.c0);
    if (n_max >= 1) s.emplace_back(p.c1);
    for (std::size_t n = 2; n <= n_max; ++n) {
        s.push_back(p.a * s[n - 1] + p.b * s[n - 2]);
    }
    return s;
}

/// Binet-type evaluation in double precision. For large n the dominant power
/// overflows to infinity; that is accepted behavior for this diagnostic.
inline double binet_float(const SeqParams& p, std::size_t n) {
    const double sd = std::sqrt(p.disc.convert_to<double>());
    const double j1 = static_cast<double>(p.a) + sd;
    const double j2 = static_cast<double>(p.a) - sd;
    const double w1 = 2.0 * static_cast<double>(p.c1) - j2 * static_cast<double>(p.c0);
    const double w2 = 2.0 * static_cast<double>(p.c1) - j1 * static_cast<double>(p.c0);
    const double e = static_cast<double>(n);
    return (w1 * std::pow(j1 / 2.0, e) - w2 * std::pow(j2 / 2.0, e)) / (2.0 * sd);
}

/// Exact degeneracy test: 2c1 = (a±t)c0 can only hold when disc = t^2.
/// No floating point is involved.
inline DegeneracyClass classify(const SeqParams& p) {
    if (!p.disc_sqrt) return {};
    const Integer& t = *p.disc_sqrt;
    const Integer two_c1 = 2 * Integer(p.c1);
    if (two_c1 == (p.a + t) * p.c0) {
        return {DegeneracyKind::DegenerateJ1, make_rational(p.a + t, 2)};
    }
    if (two_c1 == (p.a - t) * p.c0) {
        return {DegeneracyKind::DegenerateJ2, make_rational(p.a - t, 2)};
    }
    return {};
}

/// Indices n <= n_max with s_n = 0, by exact scan. At most one index >= 1
/// can occur; the scan makes that a checkable property rather than an input
/// assumption.
inline std::vector<std::size_t> find_zero_terms(const SeqParams& p, std::size_t n_max) {
    if (n_max < 1) throw std::invalid_argument("find_zero_terms: n_max must be >= 1");
    std::vector<std::size_t> zeros;
    const auto s = terms(p, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (s[n] == 0) zeros.push_back(n);
    }
    return zeros;
}

/// s_{n+1}/s_n as a double: the quotient is formed exactly, then rounded once.
inline double ratio_probe(const SeqParams& p, std::size_t n) {
    const auto s = terms(p, n + 1);
    if (s[n] == 0) throw std::domain_error("ratio_probe: s_n is zero");
    return make_rational(s[n + 1], s[n]).convert_to<double>();
}

}  // namespace fibsum
