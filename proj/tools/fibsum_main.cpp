// fibsum CLI: closed-form identities for polynomial-weighted partial sums of
// Horadam-type sequences, with every emitted identity verified against the
// exact brute-force oracle first.
//
// Exit codes: 0 success, 1 verification failed (verify), 2 input parse error,
// 3 invalid sequence parameters, 4 internal verification failure, 5 family
// requested for a non-degenerate sequence.

#include "fibsum/closed_form.hpp"
#include "fibsum/json_io.hpp"
#include "fibsum/parse.hpp"
#include "fibsum/render.hpp"
#include "fibsum/sequence.hpp"
#include "fibsum/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace fibsum;

struct ParamOpts {
    std::optional<std::int64_t> a, b, c0, c1;
    std::string preset;
};

void add_param_options(CLI::App* cmd, ParamOpts& opts) {
    auto* a = cmd->add_option("--a", opts.a, "recurrence coefficient a (>= 1)");
    auto* b = cmd->add_option("--b", opts.b, "recurrence coefficient b (>= 1)");
    auto* c0 = cmd->add_option("--c0", opts.c0, "seed s_0");
    auto* c1 = cmd->add_option("--c1", opts.c1, "seed s_1");
    auto* preset =
        cmd->add_option("--preset", opts.preset, "named sequence: fibonacci|lucas|pell|jacobsthal")
            ->check(CLI::IsMember({"fibonacci", "lucas", "pell", "jacobsthal"}));
    preset->excludes(a)->excludes(b)->excludes(c0)->excludes(c1);
}

SeqParams resolve_params(const ParamOpts& opts) {
    if (!opts.preset.empty()) {
        if (opts.preset == "fibonacci") return fibonacci_params();
        if (opts.preset == "lucas") return lucas_params();
        if (opts.preset == "pell") return pell_params();
        return jacobsthal_params();
    }
    if (!opts.a || !opts.b || !opts.c0 || !opts.c1) {
        throw std::invalid_argument("sequence parameters required: --a --b --c0 --c1 or --preset");
    }
    return SeqParams::create(*opts.a, *opts.b, *opts.c0, *opts.c1);
}

OutputFormat resolve_format(const std::string& name) {
    const auto format = parse_output_format(name);
    if (!format) throw std::invalid_argument("unknown format: " + name);
    return *format;
}

ClosedFormTriple verified_general_triple(const Poly& weight, const SeqParams& params,
                                         std::size_t n_max) {
    auto triple = general_triple(weight, params);
    if (const auto report = verify_triple(triple, n_max); !report.ok) {
        throw VerificationError(report);
    }
    return triple;
}

int run_gen(const ParamOpts& popts, const std::string& poly_text, const std::string& format_name,
            std::size_t n_max) {
    const SeqParams params = resolve_params(popts);
    const OutputFormat format = resolve_format(format_name);
    const Poly weight = parse_poly(poly_text);
    std::cout << render_identity(verified_general_triple(weight, params, n_max), format) << '\n';
    return 0;
}

int run_table(const ParamOpts& popts, std::size_t d_max, const std::string& format_name,
              std::size_t n_max) {
    const SeqParams params = resolve_params(popts);
    const OutputFormat format = resolve_format(format_name);
    std::cout << render_table(params, d_max, format, n_max) << '\n';
    return 0;
}

int run_classify(const ParamOpts& popts, const std::string& format_name) {
    const SeqParams params = resolve_params(popts);
    const OutputFormat format = resolve_format(format_name);
    const DegeneracyClass cls = classify(params);
    if (format == OutputFormat::Json) {
        std::cout << nlohmann::json(cls).dump() << '\n';
        return 0;
    }
    switch (cls.kind) {
        case DegeneracyKind::NonDegenerate:
            std::cout << "non_degenerate: the closed-form triple (F, G, H) is unique for "
                         "every weight polynomial.\n";
            break;
        case DegeneracyKind::DegenerateJ1:
        case DegeneracyKind::DegenerateJ2:
            std::cout << (cls.kind == DegeneracyKind::DegenerateJ1 ? "degenerate_j1"
                                                                   : "degenerate_j2")
                      << ": ratio_root = " << to_string(*cls.ratio_root)
                      << "; infinitely many closed-form triples satisfy the identity for "
                         "every weight polynomial.\n";
            break;
    }
    return 0;
}

Poly random_free_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> degree_dist(0, 3);
    std::uniform_int_distribution<int> coeff_dist(-9, 9);
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree_dist(rng)) + 1);
    for (auto& c : coeffs) c = coeff_dist(rng);
    return Poly(std::move(coeffs));
}

int run_family(const ParamOpts& popts, const std::string& poly_text,
               const std::string& format_name, std::size_t count, std::uint64_t seed,
               std::size_t n_max) {
    const SeqParams params = resolve_params(popts);
    const OutputFormat format = resolve_format(format_name);
    const Poly weight = parse_poly(poly_text);

    // The first member is the canonical triple; further free polynomials are
    // drawn deterministically from the seed, skipping duplicates.
    std::vector<Poly> frees{general_triple(weight, params).F};
    std::mt19937_64 rng(seed);
    while (frees.size() < count) {
        Poly candidate = random_free_poly(rng);
        if (std::find(frees.begin(), frees.end(), candidate) == frees.end()) {
            frees.push_back(std::move(candidate));
        }
    }

    nlohmann::json array = nlohmann::json::array();
    std::string lines;
    for (const auto& free : frees) {
        auto triple = family_sample(weight, params, free);
        if (const auto report = verify_triple(triple, n_max); !report.ok) {
            throw VerificationError(report);
        }
        if (format == OutputFormat::Json) {
            array.push_back(triple);
        } else {
            if (!lines.empty()) lines += '\n';
            lines += render_identity(triple, format);
        }
    }
    std::cout << (format == OutputFormat::Json ? array.dump() : lines) << '\n';
    return 0;
}

int run_verify(const std::string& input, const std::string& format_name, std::size_t n_max) {
    const OutputFormat format = resolve_format(format_name);
    ClosedFormTriple triple;
    try {
        std::string text;
        if (input == "-") {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            text = buf.str();
        } else {
            std::ifstream file(input);
            if (!file) throw std::runtime_error("cannot open " + input);
            std::ostringstream buf;
            buf << file.rdbuf();
            text = buf.str();
        }
        triple = nlohmann::json::parse(text).get<ClosedFormTriple>();
    } catch (const std::exception& e) {
        std::cerr << "error: malformed triple JSON: " << e.what() << '\n';
        return 2;
    }

    const VerificationReport report = verify_triple(triple, n_max);
    if (format == OutputFormat::Json) {
        std::cout << nlohmann::json(report).dump() << '\n';
    } else if (report.ok) {
        std::cout << "ok: identity holds for n = 1.." << report.checked_n_max << '\n';
    } else {
        std::cout << "FAIL at n = " << report.first_failure->n
                  << ": lhs = " << to_string(report.first_failure->lhs)
                  << ", rhs = " << to_string(report.first_failure->rhs) << '\n';
    }
    return report.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-form identities for weighted sums of Horadam-type sequences"};
    app.require_subcommand(1);

    ParamOpts popts;
    std::string poly_text;
    std::string format_name = "text";
    std::string input = "-";
    std::size_t d_max = 0;
    std::size_t n_max_gen = 100;
    std::size_t n_max_verify = 300;
    std::size_t count = 1;
    std::uint64_t seed = 0;

    auto* gen = app.add_subcommand("gen", "build and print one verified identity");
    add_param_options(gen, popts);
    gen->add_option("--poly", poly_text, "weight polynomial, e.g. \"k^2 + 3k - 1/2\"")
        ->required();
    gen->add_option("--n-max", n_max_gen, "verification bound before printing");
    gen->add_option("--format", format_name, "latex|text|json");

    auto* table = app.add_subcommand("table", "identities for weights k^0 .. k^d");
    add_param_options(table, popts);
    table->add_option("--d-max", d_max, "largest monomial degree")->required();
    table->add_option("--n-max", n_max_gen, "verification bound before printing");
    table->add_option("--format", format_name, "latex|text|json");

    auto* cls = app.add_subcommand("classify", "degeneracy class and uniqueness consequence");
    add_param_options(cls, popts);
    cls->add_option("--format", format_name, "latex|text|json");

    auto* family = app.add_subcommand("family", "sample the infinite triple family "
                                                "(degenerate sequences only)");
    add_param_options(family, popts);
    family->add_option("--poly", poly_text, "weight polynomial")->required();
    family->add_option("--count", count, "number of distinct triples")
        ->check(CLI::PositiveNumber);
    family->add_option("--seed", seed, "seed for the free-polynomial draws");
    family->add_option("--n-max", n_max_gen, "verification bound per member");
    family->add_option("--format", format_name, "latex|text|json");

    auto* verify = app.add_subcommand("verify", "check a triple JSON against the oracle");
    verify->add_option("--input", input, "triple JSON file, or - for standard input");
    verify->add_option("--n-max", n_max_verify, "check the identity for n = 1..n_max");
    verify->add_option("--format", format_name, "latex|text|json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return run_gen(popts, poly_text, format_name, n_max_gen);
        if (table->parsed()) return run_table(popts, d_max, format_name, n_max_gen);
        if (cls->parsed()) return run_classify(popts, format_name);
        if (family->parsed()) {
            return run_family(popts, poly_text, format_name, count, seed, n_max_gen);
        }
        if (verify->parsed()) return run_verify(input, format_name, n_max_verify);
    } catch (const fibsum::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const fibsum::NonDegenerateError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const fibsum::VerificationError& e) {
        std::cerr << "internal error: " << e.what() << " (first failure at n = "
                  << e.report().first_failure->n << ")\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
