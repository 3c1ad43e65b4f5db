#pragma once

/// JSON wire formats. Rational coefficients travel as "num/den" strings in
/// lowest terms ("num" alone when den = 1); polynomials as arrays of those,
/// ascending by degree.

#include "fibsum/closed_form.hpp"
#include "fibsum/poly.hpp"
#include "fibsum/sequence.hpp"
#include "fibsum/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fibsum {

inline void to_json(nlohmann::json& j, const Poly& p) {
    j = nlohmann::json::array();
    for (const auto& c : p.coefficients()) j.push_back(to_string(c));
}

inline void from_json(const nlohmann::json& j, Poly& p) {
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& item : j) coeffs.push_back(parse_rational(item.get<std::string>()));
    p = Poly(std::move(coeffs));
}

inline void to_json(nlohmann::json& j, const SeqParams& p) {
    j = nlohmann::json{{"a", p.a}, {"b", p.b}, {"c0", p.c0}, {"c1", p.c1}};
}

inline void from_json(const nlohmann::json& j, SeqParams& p) {
    p = SeqParams::create(j.at("a").get<std::int64_t>(), j.at("b").get<std::int64_t>(),
                          j.at("c0").get<std::int64_t>(), j.at("c1").get<std::int64_t>());
}

inline void to_json(nlohmann::json& j, const DegeneracyClass& c) {
    const char* kind = "non_degenerate";
    if (c.kind == DegeneracyKind::DegenerateJ1) kind = "degenerate_j1";
    if (c.kind == DegeneracyKind::DegenerateJ2) kind = "degenerate_j2";
    j = nlohmann::json{{"kind", kind},
                       {"ratio_root", c.ratio_root ? nlohmann::json(to_string(*c.ratio_root))
                                                   : nlohmann::json(nullptr)}};
}

inline void to_json(nlohmann::json& j, const ClosedFormTriple& t) {
    j = nlohmann::json{{"params", t.params},
                       {"weight", t.weight},
                       {"F", t.F},
                       {"G", t.G},
                       {"H", t.H}};
}

inline void from_json(const nlohmann::json& j, ClosedFormTriple& t) {
    t.params = j.at("params").get<SeqParams>();
    t.weight = j.at("weight").get<Poly>();
    t.F = j.at("F").get<Poly>();
    t.G = j.at("G").get<Poly>();
    t.H = j.at("H").get<Poly>();
}

inline void to_json(nlohmann::json& j, const VerificationReport& r) {
    j = nlohmann::json{{"n_max", r.checked_n_max}, {"ok", r.ok}, {"first_failure", nullptr}};
    if (r.first_failure) {
        j["first_failure"] = nlohmann::json{{"n", r.first_failure->n},
                                            {"lhs", to_string(r.first_failure->lhs)},
                                            {"rhs", to_string(r.first_failure->rhs)}};
    }
}

}  // namespace fibsum
