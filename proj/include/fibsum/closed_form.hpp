#pragma once

/**
 * @file closed_form.hpp
 * @brief Construction of the closed-form triples (F, G, H) with
 *        2*sum_{k=1..n} P(k)*s_{k-1} = F(n)*s_{n+1} + G(n)*s_n + H(n).
 *
 * For the monomial weight x^d the coefficients of F come from an upper
 * triangular system whose matrix has constant diagonal a+b-1; G and H are
 * assembled from that solution. Triples for arbitrary weights are linear
 * combinations of the monomial triples. In the degenerate (geometric) case
 * the triple is one member of an infinite family, sampled by family_sample.
 */

#include "fibsum/poly.hpp"
#include "fibsum/sequence.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fibsum {

/// Weight degrees above this are rejected; coefficients grow like 2^d and the
/// construction is meant for desk-scale degrees.
inline constexpr std::size_t kMaxWeightDegree = 64;

/// Dense (dim x dim) matrix that is zero below the diagonal. Indexing is
/// 1-based to match the subscript convention of the entry formulas.
class UpperTriangular {
public:
    explicit UpperTriangular(std::size_t dim)
        : dim_(dim), entries_(dim * dim, Rational(0)) {
        if (dim == 0) throw std::invalid_argument("UpperTriangular: dim must be positive");
    }

    std::size_t dim() const { return dim_; }

    const Rational& at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return entries_[(i - 1) * dim_ + (j - 1)];
    }

    void set(std::size_t i, std::size_t j, Rational value) {
        check_index(i, j);
        if (i > j && value != 0) {
            throw std::invalid_argument("UpperTriangular: nonzero entry below the diagonal");
        }
        entries_[(i - 1) * dim_ + (j - 1)] = std::move(value);
    }

    /// Product of the diagonal.
    Rational determinant() const {
        Rational det(1);
        for (std::size_t i = 1; i <= dim_; ++i) det *= at(i, i);
        return det;
    }

    bool operator==(const UpperTriangular&) const = default;

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i < 1 || i > dim_ || j < 1 || j > dim_) {
            throw std::out_of_range("UpperTriangular: index out of range");
        }
    }

    std::size_t dim_;
    std::vector<Rational> entries_;
};

namespace detail {
inline void check_degree(std::size_t d) {
    if (d > kMaxWeightDegree) {
        throw std::invalid_argument("weight degree exceeds the supported cap of 64");
    }
}
}  // namespace detail

/// The (d+1)x(d+1) matrix with diagonal a+b-1 and entry (2^{j-i} b + a) C(j-1, i-1)
/// above it.
inline UpperTriangular build_matrix_general(std::size_t d, std::int64_t a, std::int64_t b) {
    detail::check_degree(d);
    if (a < 1 || b < 1) {
        throw std::invalid_argument("build_matrix_general: a and b must be positive integers");
    }
    UpperTriangular m(d + 1);
    for (std::size_t i = 1; i <= d + 1; ++i) {
        m.set(i, i, Rational(Integer(a) + b - 1));
        for (std::size_t j = i + 1; j <= d + 1; ++j) {
            m.set(i, j, Rational((pow2(j - i) * b + a) * binomial(j - 1, i - 1)));
        }
    }
    return m;
}

/// The Pell-case matrix: diagonal 2, entry (2^{j-i} + 2) C(j-1, i-1) above it.
/// Coincides with build_matrix_general(d, 2, 1).
inline UpperTriangular build_matrix_pell(std::size_t d) {
    detail::check_degree(d);
    UpperTriangular m(d + 1);
    for (std::size_t i = 1; i <= d + 1; ++i) {
        m.set(i, i, Rational(2));
        for (std::size_t j = i + 1; j <= d + 1; ++j) {
            m.set(i, j, Rational((pow2(j - i) + 2) * binomial(j - 1, i - 1)));
        }
    }
    return m;
}

/// Right-hand side 2*(C(d,0) 2^d, C(d,1) 2^{d-1}, ..., C(d,d) 2^0).
inline std::vector<Rational> rhs_vector(std::size_t d) {
    detail::check_degree(d);
    std::vector<Rational> rhs;
    rhs.reserve(d + 1);
    for (std::size_t k = 0; k <= d; ++k) {
        rhs.emplace_back(2 * binomial(d, k) * pow2(d - k));
    }
    return rhs;
}

/// Solution (b_0(d), ..., b_d(d)) of the triangular system.
struct CoefficientTuple {
    std::size_t d = 0;
    std::vector<Rational> values;
};

/// Exact back substitution from the last row upward. The diagonal of a valid
/// matrix is a+b-1 >= 1; the zero check guards hand-built inputs.
inline CoefficientTuple solve_coefficients(const UpperTriangular& m,
                                           const std::vector<Rational>& rhs) {
    const std::size_t dim = m.dim();
    if (rhs.size() != dim) {
        throw std::invalid_argument("solve_coefficients: rhs length must equal matrix dimension");
    }
    for (std::size_t i = 1; i <= dim; ++i) {
        if (m.at(i, i) == 0) {
            throw std::domain_error("solve_coefficients: singular matrix (zero diagonal entry)");
        }
    }
    std::vector<Rational> x(dim, Rational(0));
    for (std::size_t row = dim; row >= 1; --row) {
        Rational acc = rhs[row - 1];
        for (std::size_t col = row + 1; col <= dim; ++col) {
            acc -= m.at(row, col) * x[col - 1];
        }
        x[row - 1] = acc / m.at(row, row);
    }
    return CoefficientTuple{dim - 1, std::move(x)};
}

/// A closed-form triple together with the weight polynomial and sequence
/// parameters it serves.
struct ClosedFormTriple {
    Poly F;
    Poly G;
    Poly H;
    SeqParams params;
    Poly weight;

    friend bool operator==(const ClosedFormTriple& lhs, const ClosedFormTriple& rhs) {
        return lhs.F == rhs.F && lhs.G == rhs.G && lhs.H == rhs.H &&
               lhs.params == rhs.params && lhs.weight == rhs.weight;
    }
};

/// Thrown by family_sample when the sequence admits only the unique triple.
class NonDegenerateError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The triple for weight x^d:
///   F = sum b_i(d) x^i
///   G = -2(x+1)^d + b * F(x+1)
///   H = 2c0 + 2^{d+1} c1 - (a c1 + b c0) sum b_i(d) - b c1 sum 2^i b_i(d)
inline ClosedFormTriple monomial_triple(std::size_t d, const SeqParams& p) {
    const auto tuple = solve_coefficients(build_matrix_general(d, p.a, p.b), rhs_vector(d));

    Poly F{std::vector<Rational>(tuple.values)};
    Poly G = Rational(-2) * Poly::monomial(d).shifted(Rational(1)) +
             Rational(p.b) * F.shifted(Rational(1));

    Rational sum_b(0);
    Rational sum_pow2_b(0);
    for (std::size_t i = 0; i <= d; ++i) {
        sum_b += tuple.values[i];
        sum_pow2_b += Rational(pow2(i)) * tuple.values[i];
    }
    const Rational h = Rational(2 * Integer(p.c0) + pow2(d + 1) * p.c1) -
                       Rational(Integer(p.a) * p.c1 + Integer(p.b) * p.c0) * sum_b -
                       Rational(Integer(p.b) * p.c1) * sum_pow2_b;

    return ClosedFormTriple{std::move(F), std::move(G), Poly::constant(h), p,
                            Poly::monomial(d)};
}

/// The triple for an arbitrary weight P: the linear combination of monomial
/// triples weighted by P's coefficients. The zero weight yields the zero triple.
inline ClosedFormTriple general_triple(const Poly& P, const SeqParams& p) {
    ClosedFormTriple out{Poly{}, Poly{}, Poly{}, p, P};
    if (P.is_zero()) return out;
    detail::check_degree(*P.degree());
    for (std::size_t d = 0; d <= *P.degree(); ++d) {
        const Rational& a_d = P.coeff(d);
        if (a_d == 0) continue;
        const auto mono = monomial_triple(d, p);
        out.F = out.F + a_d * mono.F;
        out.G = out.G + a_d * mono.G;
        out.H = out.H + a_d * mono.H;
    }
    return out;
}

/// One member of the infinite triple family that exists for degenerate
/// (geometric) sequences: (free, -r*free + r*F* + G*, H*) where (F*, G*, H*)
/// is the canonical triple and r the geometric ratio. Choosing free = F*
/// returns the canonical triple itself.
inline ClosedFormTriple family_sample(const Poly& P, const SeqParams& p, const Poly& free) {
    const auto cls = classify(p);
    if (cls.kind == DegeneracyKind::NonDegenerate) {
        throw NonDegenerateError(
            "family_sample: sequence is non-degenerate, the closed-form triple is unique");
    }
    const Rational& r = *cls.ratio_root;
    auto base = general_triple(P, p);
    Poly G = (-r) * free + r * base.F + base.G;
    return ClosedFormTriple{free, std::move(G), std::move(base.H), p, P};
}

}  // namespace fibsum
