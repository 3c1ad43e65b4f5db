#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over Rational.
 *
 * coeffs[i] holds the coefficient of x^i. The representation is canonical:
 * the highest-index coefficient is nonzero, and the zero polynomial is the
 * empty list (its degree is deliberately not a number).
 */

#include "fibsum/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace fibsum {

class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Poly constant(Rational c) {
        Poly p;
        if (c != 0) p.coeffs_.push_back(std::move(c));
        return p;
    }

    /// coeff * x^deg
    static Poly monomial(std::size_t deg, Rational coeff = Rational(1)) {
        Poly p;
        if (coeff != 0) {
            p.coeffs_.assign(deg + 1, Rational(0));
            p.coeffs_.back() = std::move(coeff);
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Coefficient of x^i (zero beyond the stored range).
    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }

    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    /// Horner evaluation, exact.
    Rational operator()(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    /// p(x + t), by exact binomial expansion of each power of (x + t).
    Poly shifted(const Rational& t) const {
        Poly result;
        Poly power = Poly::constant(Rational(1));
        const Poly base{t, Rational(1)};  // x + t
        for (const auto& c : coeffs_) {
            if (c != 0) result = result + c * power;
            power = power * base;
        }
        return result;
    }

    Poly operator-() const {
        Poly p(*this);
        for (auto& c : p.coeffs_) c = -c;
        return p;
    }

    friend Poly operator+(const Poly& lhs, const Poly& rhs) {
        std::vector<Rational> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = lhs.coeff(i) + rhs.coeff(i);
        }
        return Poly(std::move(out));
    }

    friend Poly operator-(const Poly& lhs, const Poly& rhs) { return lhs + (-rhs); }

    friend Poly operator*(const Poly& lhs, const Poly& rhs) {
        if (lhs.is_zero() || rhs.is_zero()) return Poly{};
        std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
            if (lhs.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
                out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
            }
        }
        return Poly(std::move(out));
    }

    friend Poly operator*(const Rational& c, const Poly& p) {
        if (c == 0) return Poly{};
        Poly out(p);
        for (auto& v : out.coeffs_) v *= c;
        return out;
    }

    friend Poly operator*(const Poly& p, const Rational& c) { return c * p; }

    bool operator==(const Poly&) const = default;

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

}  // namespace fibsum
