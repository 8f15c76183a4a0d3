// Copyright 2026 the asdescent authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <cerrno>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "asdescent/error.hpp"
#include "asdescent/report.hpp"

namespace {

int emit_error(const std::string& code, const std::string& message) {
    nlohmann::ordered_json j;
    j["error"]["code"] = code;
    j["error"]["message"] = message;
    std::cerr << j.dump() << "\n";
    return (code == "ORACLE_MISMATCH" || code == "GOLDEN_MISMATCH") ? 3 : 2;
}

std::vector<int64_t> parse_modulus(const std::string& text) {
    std::vector<int64_t> coeffs;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        size_t used = 0;
        int64_t value = 0;
        try {
            value = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("modulus coefficient '" + tok + "' is not an integer");
        }
        if (used != tok.size())
            throw std::invalid_argument("modulus coefficient '" + tok + "' is not an integer");
        coeffs.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return coeffs;
}

std::optional<uint64_t> size_cap_from_env() {
    const char* env = std::getenv("AS_DESCENT_CAP");
    if (env == nullptr) return std::nullopt;
    errno = 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || end == env || *end != '\0' || v == 0)
        throw std::invalid_argument("AS_DESCENT_CAP must be a positive integer, got '" +
                                    std::string(env) + "'");
    return static_cast<uint64_t>(v);
}

} // namespace

int main(int argc, char** argv) {
    using namespace asdescent;

    CLI::App app{"Frobenius descent analyzer for additive subgroups of F_(p^2s)"};
    app.require_subcommand(1);

    uint64_t p = 0;
    uint32_t s = 0;
    std::vector<uint32_t> t_list;
    std::string modulus_text = "auto";
    std::string format_text = "text";
    bool oracle = false;
    std::vector<uint32_t> dims;
    CLI::App* analyze = app.add_subcommand("analyze", "Run a full descent analysis");
    analyze->add_option("--p", p, "Field characteristic (prime)")->required();
    analyze->add_option("--s", s, "Galois group rank; the field is F_(p^2s)")->required();
    analyze->add_option("--t", t_list,
                        "Base-field degrees to test (default: every divisor of 2s)");
    analyze->add_option("--modulus", modulus_text,
                        "Ascending comma-separated coefficients, or 'auto'");
    analyze->add_option("--format", format_text, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    analyze->add_flag("--oracle", oracle, "Run brute-force cross-checks");
    analyze->add_option("--dims", dims, "Subspace dimensions to inventory (default: 1)");

    CLI::App* appendix =
        app.add_subcommand("appendix", "Reproduce the embedded reference tables");

    uint64_t search_p = 0;
    uint32_t search_n = 0;
    CLI::App* search = app.add_subcommand(
        "search-poly", "Smallest primitive polynomial of degree n over F_p");
    search->add_option("--p", search_p, "Field characteristic (prime)")->required();
    search->add_option("--n", search_n, "Degree")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        return emit_error("BAD_CONFIG", e.what());
    }

    try {
        uint64_t size_cap = size_cap_from_env().value_or(Field::kDefaultSizeCap);

        if (analyze->parsed()) {
            RunConfig cfg;
            cfg.p = p;
            cfg.s = s;
            cfg.t_list = t_list;
            if (modulus_text != "auto") cfg.modulus = parse_modulus(modulus_text);
            cfg.format = (format_text == "json") ? OutputFormat::json : OutputFormat::text;
            cfg.oracle = oracle;
            if (!dims.empty()) cfg.subspace_dims = dims;
            cfg.size_cap = size_cap;
            std::cout << render(run(cfg), cfg.format);
            return 0;
        }

        if (appendix->parsed()) {
            std::vector<AppendixOutcome> outcomes = appendix_mode(size_cap);
            size_t failures = 0;
            for (const AppendixOutcome& outcome : outcomes) {
                std::cout << "== p=" << outcome.report.p << " ==\n";
                std::cout << render_text(outcome.report);
                if (outcome.golden_ok) {
                    std::cout << "golden: PASS\n\n";
                } else {
                    ++failures;
                    std::cout << "golden: FAIL\n";
                    for (const std::string& d : outcome.diffs) std::cout << "  " << d << "\n";
                    std::cout << "\n";
                }
            }
            if (failures > 0)
                raise(Errc::golden_mismatch, std::to_string(failures) + " of " +
                                                 std::to_string(outcomes.size()) +
                                                 " reference tables differ");
            return 0;
        }

        if (search->parsed()) {
            std::vector<int64_t> poly = search_primitive_polynomial(search_p, search_n, size_cap);
            for (size_t i = 0; i < poly.size(); ++i) std::cout << (i ? "," : "") << poly[i];
            std::cout << "\n";
            return 0;
        }
    } catch (const Error& e) {
        return emit_error(errc_name(e.code()), e.what());
    } catch (const std::invalid_argument& e) {
        return emit_error("BAD_CONFIG", e.what());
    }
    return 0;
}
