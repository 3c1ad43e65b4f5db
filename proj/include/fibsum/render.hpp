#pragma once

/**
 * @file render.hpp
 * @brief LaTeX, plaintext and JSON rendering of identities.
 *
 * A rendered identity reads
 *     2\sum_{k=1}^{n} P(k) s_{k-1} = F(n) s_{n+1} + G(n) s_n + H(n)
 * with the polynomials expanded, "+ -c" collapsed to "- c", unit coefficients
 * on nonconstant monomials omitted, zero terms dropped, and the sequence
 * symbol chosen from the named parameter tuples (F, L, P, J) with s as the
 * fallback. render_table never emits an identity that has not passed the
 * brute-force verifier.
 */

#include "fibsum/closed_form.hpp"
#include "fibsum/json_io.hpp"
#include "fibsum/parse.hpp"
#include "fibsum/sequence.hpp"
#include "fibsum/verify.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

namespace fibsum {

enum class OutputFormat { Latex, Text, Json };

inline std::optional<OutputFormat> parse_output_format(std::string_view name) {
    if (name == "latex") return OutputFormat::Latex;
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    return std::nullopt;
}

namespace detail {

inline std::string render_coeff(const Rational& mag, bool latex) {
    if (latex && denominator(mag) != 1) {
        return "\\frac{" + numerator(mag).str() + "}{" + denominator(mag).str() + "}";
    }
    return to_string(mag);
}

inline std::string render_power(char var, std::size_t e, bool latex) {
    std::string out(1, var);
    if (e > 1) {
        const std::string digits = std::to_string(e);
        out += '^';
        if (latex && digits.size() > 1) {
            out += '{' + digits + '}';
        } else {
            out += digits;
        }
    }
    return out;
}

/// Expanded polynomial, descending degree: "n^2 + 2n - 1/2".
inline std::string render_poly(const Poly& p, char var, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t down = p.coefficients().size(); down-- > 0;) {
        const Rational& c = p.coeff(down);
        if (c == 0) continue;
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = negative ? Rational(-c) : c;
        if (down == 0) {
            out += render_coeff(mag, latex);
        } else {
            if (mag != 1) {
                const bool wrap = !latex && denominator(mag) != 1;
                if (wrap) out += '(';
                out += render_coeff(mag, latex);
                if (wrap) out += ')';
            }
            out += render_power(var, down, latex);
        }
    }
    return out;
}

/// If p is a single term, its (degree, coefficient).
inline std::optional<std::pair<std::size_t, Rational>> single_term(const Poly& p) {
    std::optional<std::pair<std::size_t, Rational>> found;
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        if (p.coeff(i) == 0) continue;
        if (found) return std::nullopt;
        found = {i, p.coeff(i)};
    }
    return found;
}

struct SignedPart {
    bool negative = false;
    std::string body;
};

/// p rendered as a multiplier of a sequence symbol: "n", "(n^2 + 2n)", "2".
/// A unit coefficient disappears into the symbol that follows.
inline SignedPart render_factor(const Poly& p, char var, bool latex,
                                const std::string& symbol) {
    if (const auto term = single_term(p)) {
        const auto& [deg, c] = *term;
        SignedPart part{c < 0, {}};
        const Rational mag = part.negative ? Rational(-c) : c;
        std::string body;
        if (mag != 1) {
            const bool wrap = !latex && denominator(mag) != 1 && deg > 0;
            if (wrap) body += '(';
            body += render_coeff(mag, latex);
            if (wrap) body += ')';
        }
        if (deg > 0) {
            if (!body.empty()) body += ' ';
            body += render_power(var, deg, latex);
        }
        if (!body.empty()) body += ' ';
        part.body = body + symbol;
        return part;
    }
    const bool negative = p.leading() < 0;
    const Poly inner = negative ? -p : p;
    return SignedPart{negative, "(" + render_poly(inner, var, latex) + ") " + symbol};
}

inline void append_part(std::string& out, const SignedPart& part) {
    if (out.empty()) {
        if (part.negative) out += '-';
    } else {
        out += part.negative ? " - " : " + ";
    }
    out += part.body;
}

/// Sequence symbol: the four named tuples get their customary letter.
inline std::string sequence_symbol(const SeqParams& p) {
    if (p == fibonacci_params()) return "F";
    if (p == lucas_params()) return "L";
    if (p == pell_params()) return "P";
    if (p == jacobsthal_params()) return "J";
    return "s";
}

inline std::string render_identity_display(const ClosedFormTriple& t, bool latex) {
    if (t.weight.is_zero()) return "0 = 0";

    const std::string sym = sequence_symbol(t.params);
    const std::string sub_sum = sym + "_{k-1}";
    const std::string sub_next = sym + "_{n+1}";
    const std::string sub_cur = sym + "_n";

    std::string lhs = latex ? "2\\sum_{k=1}^{n} " : "2 sum_{k=1}^{n} ";
    const auto wterm = single_term(t.weight);
    if (wterm && wterm->second == 1) {
        if (wterm->first > 0) lhs += render_power('k', wterm->first, latex) + ' ';
    } else {
        lhs += "(" + render_poly(t.weight, 'k', latex) + ") ";
    }
    lhs += sub_sum;

    std::string rhs;
    if (!t.F.is_zero()) append_part(rhs, render_factor(t.F, 'n', latex, sub_next));
    if (!t.G.is_zero()) append_part(rhs, render_factor(t.G, 'n', latex, sub_cur));
    if (!t.H.is_zero()) {
        const Poly& h = t.H;
        if (h.degree() == std::size_t{0}) {
            const Rational c = h.coeff(0);
            const bool negative = c < 0;
            append_part(rhs, {negative, render_coeff(negative ? Rational(-c) : c, latex)});
        } else {
            const bool negative = h.leading() < 0;
            append_part(rhs, {negative, "(" + render_poly(negative ? -h : h, 'n', latex) + ")"});
        }
    }
    if (rhs.empty()) rhs = "0";

    return lhs + " = " + rhs;
}

}  // namespace detail

inline std::string render_identity(const ClosedFormTriple& t, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json:
            return nlohmann::json(t).dump();
        case OutputFormat::Latex:
            return detail::render_identity_display(t, true);
        case OutputFormat::Text:
            return detail::render_identity_display(t, false);
    }
    throw std::invalid_argument("render_identity: unknown format");
}

/// One identity per d = 0..d_max, each brute-force verified to verify_n_max
/// before it may be rendered. Throws VerificationError on a failing identity.
inline std::string render_table(const SeqParams& params, std::size_t d_max,
                                OutputFormat format, std::size_t verify_n_max = 100) {
    nlohmann::json array = nlohmann::json::array();
    std::string lines;
    for (std::size_t d = 0; d <= d_max; ++d) {
        const auto triple = monomial_triple(d, params);
        if (const auto report = verify_triple(triple, verify_n_max); !report.ok) {
            throw VerificationError(report);
        }
        if (format == OutputFormat::Json) {
            array.push_back(triple);
        } else {
            if (!lines.empty()) lines += '\n';
            lines += render_identity(triple, format);
        }
    }
    return format == OutputFormat::Json ? array.dump() : lines;
}

}  // namespace fibsum
