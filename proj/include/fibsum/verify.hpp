#pragma once

/**
 * @file verify.hpp
 * @brief Independent checks on closed-form triples.
 *
 * brute_force_sum evaluates the weighted partial sum directly from exact
 * sequence terms and is the oracle every emitted identity is checked
 * against. reconstruct_triple goes the other way: it solves for a triple
 * from raw sequence data alone, so agreement with the builder is evidence
 * of uniqueness and a rank-deficient system is a witness of the infinite
 * family. Rank decisions are exact eliminations over Rational, never
 * tolerance-based.
 */

#include "fibsum/closed_form.hpp"
#include "fibsum/poly.hpp"
#include "fibsum/sequence.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fibsum {

struct FailureSample {
    std::size_t n = 0;
    Rational lhs;  // brute-force sum
    Rational rhs;  // F(n)s_{n+1} + G(n)s_n + H(n)
};

struct VerificationReport {
    std::size_t checked_n_max = 0;
    bool ok = false;
    std::optional<FailureSample> first_failure;
};

/// Thrown when an identity that is about to be emitted fails verification;
/// reaching this is an internal error, not a user error.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(VerificationReport report)
        : std::runtime_error("identity failed brute-force verification"),
          report_(std::move(report)) {}

    const VerificationReport& report() const { return report_; }

private:
    VerificationReport report_;
};

/// Exact 2 * sum_{k=1..n} P(k) * s_{k-1}.
inline Rational brute_force_sum(const Poly& P, const SeqParams& p, std::size_t n) {
    const auto s = terms(p, n == 0 ? 0 : n - 1);
    Rational acc(0);
    for (std::size_t k = 1; k <= n; ++k) {
        acc += P(Rational(k)) * s[k - 1];
    }
    return 2 * acc;
}

/// Checks lhs = rhs for n = 1..n_max; stops at the first failure.
inline VerificationReport verify_triple(const ClosedFormTriple& t, std::size_t n_max) {
    if (n_max < 1) throw std::invalid_argument("verify_triple: n_max must be >= 1");
    const auto s = terms(t.params, n_max + 1);
    Rational sum(0);
    for (std::size_t n = 1; n <= n_max; ++n) {
        sum += t.weight(Rational(n)) * s[n - 1];
        const Rational lhs = 2 * sum;
        const Rational rhs =
            t.F(Rational(n)) * s[n + 1] + t.G(Rational(n)) * s[n] + t.H(Rational(n));
        if (lhs != rhs) {
            return VerificationReport{n_max, false, FailureSample{n, lhs, rhs}};
        }
    }
    return VerificationReport{n_max, true, std::nullopt};
}

enum class ReconstructionStatus { UniqueSolution, RankDeficient };

struct ReconstructionResult {
    ReconstructionStatus status = ReconstructionStatus::RankDeficient;
    std::optional<ClosedFormTriple> triple;
};

namespace detail {

/// Row echelon form of the augmented matrix [m | rhs] by exact elimination.
/// Returns the pivot column of each eliminated row (columns < width only).
inline std::vector<std::size_t> row_echelon(std::vector<std::vector<Rational>>& rows,
                                            std::size_t width) {
    std::vector<std::size_t> pivot_cols;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < width && next_row < rows.size(); ++col) {
        std::size_t pivot = next_row;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[next_row], rows[pivot]);
        const Rational inv = Rational(1) / rows[next_row][col];
        for (auto& v : rows[next_row]) v *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next_row || rows[r][col] == 0) continue;
            const Rational factor = rows[r][col];
            for (std::size_t c = col; c < rows[r].size(); ++c) {
                rows[r][c] -= factor * rows[next_row][c];
            }
        }
        pivot_cols.push_back(col);
        ++next_row;
    }
    return pivot_cols;
}

}  // namespace detail

/// Solves for a triple of degree <= deg_bound from the sample equations
/// F(n)s_{n+1} + G(n)s_n + H(n) = 2*sum_{k<=n} P(k)s_{k-1} for
/// n = 1..3*deg_bound+6 (strictly more equations than the 3*(deg_bound+1)
/// unknowns, so rank deficiency reflects the model, not undersampling).
inline ReconstructionResult reconstruct_triple(const Poly& P, const SeqParams& p,
                                               std::size_t deg_bound) {
    if (!P.is_zero() && *P.degree() > deg_bound) {
        throw std::invalid_argument("reconstruct_triple: deg_bound is below degree(P)");
    }
    const std::size_t block = deg_bound + 1;
    const std::size_t unknowns = 3 * block;
    const std::size_t n_rows = 3 * deg_bound + 6;

    const auto s = terms(p, n_rows + 1);
    std::vector<std::vector<Rational>> rows;
    rows.reserve(n_rows);
    Rational sum(0);
    for (std::size_t n = 1; n <= n_rows; ++n) {
        sum += P(Rational(n)) * s[n - 1];
        std::vector<Rational> row;
        row.reserve(unknowns + 1);
        Rational power(1);
        for (std::size_t j = 0; j < block; ++j) {
            row.emplace_back(power * s[n + 1]);
            power *= static_cast<int>(n);
        }
        power = 1;
        for (std::size_t j = 0; j < block; ++j) {
            row.emplace_back(power * s[n]);
            power *= static_cast<int>(n);
        }
        power = 1;
        for (std::size_t j = 0; j < block; ++j) {
            row.emplace_back(power);
            power *= static_cast<int>(n);
        }
        row.emplace_back(2 * sum);
        rows.push_back(std::move(row));
    }

    const auto pivot_cols = detail::row_echelon(rows, unknowns);
    const std::size_t rank = pivot_cols.size();
    for (std::size_t r = rank; r < rows.size(); ++r) {
        if (rows[r][unknowns] != 0) {
            // a solution always exists; landing here would be a builder bug
            throw std::logic_error("reconstruct_triple: inconsistent sample system");
        }
    }
    if (rank < unknowns) {
        return ReconstructionResult{ReconstructionStatus::RankDeficient, std::nullopt};
    }

    // Full column rank with reduced rows: pivot row i solves unknown i directly.
    std::vector<Rational> x(unknowns);
    for (std::size_t i = 0; i < unknowns; ++i) x[i] = rows[i][unknowns];
    const auto slice = [&](std::size_t offset) {
        return Poly{std::vector<Rational>(x.begin() + offset, x.begin() + offset + block)};
    };
    ClosedFormTriple t{slice(0), slice(block), slice(2 * block), p, P};
    return ReconstructionResult{ReconstructionStatus::UniqueSolution, std::move(t)};
}

}  // namespace fibsum
