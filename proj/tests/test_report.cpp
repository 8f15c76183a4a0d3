// Copyright 2026 the asdescent authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "asdescent/error.hpp"
#include "asdescent/report.hpp"

#include "oracle.hpp"

using namespace asdescent;
using nlohmann::json;

namespace {

template <typename Fn>
std::optional<Errc> thrown_code(Fn fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

RunConfig a1_config() {
    RunConfig cfg;
    cfg.p = 5;
    cfg.s = 2;
    cfg.t_list = {1};
    cfg.modulus = std::vector<int64_t>{3, 1, 0, 1, 1};
    cfg.format = OutputFormat::json;
    cfg.oracle = true;
    return cfg;
}

std::set<std::string> keys_of(const json& j) {
    std::set<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.insert(it.key());
    return keys;
}

} // namespace

TEST_CASE("reference run: JSON schema and content") {
    DescentReport rep = run(a1_config());
    json j = json::parse(render_json(rep));

    CHECK(keys_of(j) == std::set<std::string>{"field", "case", "wilson_roots", "G_exponents",
                                              "subgroups", "orbits", "oracle_ok"});
    CHECK(keys_of(j["field"]) == std::set<std::string>{"p", "n", "modulus", "beta_order"});

    CHECK(j["field"]["p"] == 5);
    CHECK(j["field"]["n"] == 4);
    CHECK(j["field"]["modulus"] == json::array({3, 1, 0, 1, 1}));
    CHECK(j["field"]["beta_order"] == 624);
    CHECK(j["case"] == "one_mod_four");
    CHECK(j["wilson_roots"] == json::array({2, 3}));
    CHECK(j["G_exponents"].size() == 24);
    CHECK(j["G_exponents"][0] == 13);

    REQUIRE(j["subgroups"].size() == 6);
    const json& stable = j["subgroups"][1];
    CHECK(keys_of(stable) == std::set<std::string>{"gen_exp", "exps", "verdicts", "poly"});
    CHECK(stable["gen_exp"] == 39);
    CHECK(stable["exps"] == json::array({39, 195, 351, 507}));
    CHECK(stable["verdicts"] == json({{"1", true}}));
    CHECK(keys_of(stable["poly"]) == std::set<std::string>{"1", "5"});
    CHECK(stable["poly"]["5"] == json::array({1, 0, 0, 0}));
    // The degree-1 coefficient is a scalar square root of -1 up to sign.
    CHECK(stable["poly"]["1"][1] == 0);
    CHECK(stable["poly"]["1"][2] == 0);
    CHECK(stable["poly"]["1"][3] == 0);
    uint32_t c = stable["poly"]["1"][0].get<uint32_t>();
    CHECK((c == 2 || c == 3));

    CHECK(j["subgroups"][0]["verdicts"] == json({{"1", false}}));
    CHECK(j["orbits"] == json({{"1", {{"fixed", {1, 4}}, {"pairs", {{0, 2}, {3, 5}}}}}}));
    CHECK(j["oracle_ok"] == true);
}

TEST_CASE("reports are byte-deterministic") {
    RunConfig cfg = a1_config();
    CHECK(render_json(run(cfg)) == render_json(run(cfg)));
    cfg.format = OutputFormat::text;
    CHECK(render_text(run(cfg)) == render_text(run(cfg)));
}

TEST_CASE("characteristic 2 with automatic modulus") {
    RunConfig cfg;
    cfg.p = 2;
    cfg.s = 2;
    cfg.t_list = {1, 2};
    DescentReport rep = run(cfg);
    json j = json::parse(render_json(rep));

    CHECK(j["field"]["modulus"] == json::array({1, 0, 0, 1, 1}));
    CHECK(j["case"] == "char_two");
    CHECK(j["wilson_roots"] == json::array());
    REQUIRE(j["subgroups"].size() == 3);
    CHECK(j["subgroups"][0]["verdicts"] == json({{"1", true}, {"2", true}}));
    CHECK(j["subgroups"][1]["verdicts"] == json({{"1", false}, {"2", true}}));
    CHECK(j["subgroups"][2]["verdicts"] == json({{"1", false}, {"2", true}}));
    CHECK(j["orbits"]["1"]["fixed"] == json::array({0}));
    CHECK(j["orbits"]["1"]["pairs"] == json::array({{1, 2}}));
    CHECK(j["orbits"]["2"]["fixed"] == json::array({0, 1, 2}));
    CHECK(j["orbits"]["2"]["pairs"] == json::array());
    CHECK(j["oracle_ok"].is_null());
}

TEST_CASE("empty t list expands to every divisor of 2s") {
    RunConfig cfg;
    cfg.p = 3;
    cfg.s = 2;
    DescentReport rep = run(cfg);
    CHECK(rep.config.t_list == std::vector<uint32_t>{1, 2, 4});
    CHECK(rep.orbits.size() == 3);
    // Verdict keys mirror the t list on every record.
    for (const SubgroupRecord& rec : rep.subgroups) {
        REQUIRE(rec.verdicts.size() == 3);
        CHECK(rec.verdicts[0].first == 1);
        CHECK(rec.verdicts[1].first == 2);
        CHECK(rec.verdicts[2].first == 4);
        CHECK(rec.verdicts[2].second);
    }
}

TEST_CASE("longer cycles appear in the report only when present") {
    RunConfig cfg;
    cfg.p = 3;
    cfg.s = 3;
    cfg.t_list = {1};
    DescentReport rep = run(cfg);
    json j = json::parse(render_json(rep));
    REQUIRE(j["orbits"]["1"].contains("cycles"));
    CHECK(j["orbits"]["1"]["cycles"].size() == 4);
    CHECK(j["orbits"]["1"]["fixed"].size() == 1);
    size_t fixed_idx = j["orbits"]["1"]["fixed"][0].get<size_t>();
    CHECK(j["subgroups"][fixed_idx]["exps"] == json::array({182, 546}));

    std::string text = render_text(rep);
    CHECK(text.find("cycles={(") != std::string::npos);

    RunConfig flat = a1_config();
    json j2 = json::parse(render_json(run(flat)));
    CHECK_FALSE(j2["orbits"]["1"].contains("cycles"));
}

TEST_CASE("configuration validation") {
    RunConfig cfg = a1_config();
    cfg.t_list = {3};
    CHECK(thrown_code([&] { run(cfg); }) == Errc::not_a_divisor);

    cfg = a1_config();
    cfg.p = 9;
    CHECK(thrown_code([&] { run(cfg); }) == Errc::not_prime);

    cfg = a1_config();
    cfg.s = 0;
    CHECK(thrown_code([&] { run(cfg); }) == Errc::bad_config);

    cfg = a1_config();
    cfg.subspace_dims = {3};
    CHECK(thrown_code([&] { run(cfg); }) == Errc::bad_config);

    cfg = a1_config();
    cfg.modulus = std::vector<int64_t>{3, 1, 1};
    CHECK(thrown_code([&] { run(cfg); }) == Errc::not_monic);

    cfg = a1_config();
    cfg.enum_cap = 3;
    CHECK(thrown_code([&] { run(cfg); }) == Errc::enumeration_cap_exceeded);

    cfg = a1_config();
    cfg.size_cap = 100;
    CHECK(thrown_code([&] { run(cfg); }) == Errc::size_cap_exceeded);
}

TEST_CASE("primitive polynomial search is lexicographically minimal") {
    CHECK(search_primitive_polynomial(2, 2) == std::vector<int64_t>{1, 1, 1});
    CHECK(search_primitive_polynomial(3, 1) == std::vector<int64_t>{1, 1});
    CHECK(search_primitive_polynomial(2, 4) == std::vector<int64_t>{1, 0, 0, 1, 1});

    // Independent primitivity certificate for the winner, then exhaustive
    // confirmation that everything lexicographically below it fails.
    std::vector<int64_t> winner = search_primitive_polynomial(5, 4);
    oracle::Poly wp(winner.begin(), winner.end());
    CHECK(oracle::order_of_x(wp, 5, 625) == 624);

    oracle::Poly cand = {0, 0, 0, 0, 1};
    auto next = [&]() {
        int i = 3;
        while (i >= 0 && cand[i] == 4) cand[i--] = 0;
        REQUIRE(i >= 0);
        ++cand[i];
    };
    while (oracle::Poly(winner.begin(), winner.end()) != cand) {
        CHECK(oracle::order_of_x(cand, 5, 625) != 624);
        next();
    }

    CHECK(thrown_code([] { search_primitive_polynomial(6, 2); }) == Errc::not_prime);
    CHECK(thrown_code([] { search_primitive_polynomial(2, 25); }) == Errc::size_cap_exceeded);
}

TEST_CASE("embedded reference tables pass their own goldens") {
    const std::vector<AppendixGolden>& goldens = appendix_goldens();
    REQUIRE(goldens.size() == 3);

    // Independent certificate that the embedded moduli are primitive.
    for (const AppendixGolden& g : goldens) {
        oracle::Poly m(g.modulus.begin(), g.modulus.end());
        uint64_t unit_order = g.p * g.p * g.p * g.p - 1;
        CHECK(oracle::order_of_x(m, g.p, unit_order + 1) == unit_order);
    }

    std::vector<AppendixOutcome> outcomes = appendix_mode();
    REQUIRE(outcomes.size() == 3);
    for (size_t i = 0; i < 3; ++i) {
        CAPTURE(i);
        CHECK(outcomes[i].golden_ok);
        CHECK(outcomes[i].diffs.empty());
        CHECK(outcomes[i].report.p == goldens[i].p);
        CHECK(outcomes[i].report.oracle_ok == true);
    }
    CHECK(outcomes[0].report.wilson_roots == std::vector<uint32_t>{2, 3});
    CHECK(outcomes[1].report.wilson_roots == std::vector<uint32_t>{5, 8});
    CHECK(outcomes[2].report.wilson_roots == std::vector<uint32_t>{4, 13});
}

TEST_CASE("golden diffs call out the offending exponents") {
    DescentReport rep = run(a1_config());
    AppendixGolden doctored = appendix_goldens()[0];
    doctored.stable_sets[0][0] = 41;
    std::sort(doctored.stable_sets[0].begin(), doctored.stable_sets[0].end());

    std::vector<std::string> diffs = golden_diffs(rep, doctored);
    REQUIRE(diffs.size() == 1);
    CHECK(diffs[0].find("missing {41}") != std::string::npos);
    CHECK(diffs[0].find("extra {39}") != std::string::npos);

    doctored = appendix_goldens()[0];
    doctored.wilson_roots = {1, 4};
    diffs = golden_diffs(rep, doctored);
    REQUIRE(diffs.size() == 1);
    CHECK(diffs[0].find("wilson roots") != std::string::npos);
}

TEST_CASE("text rendering mirrors the brace-set style") {
    RunConfig cfg = a1_config();
    cfg.format = OutputFormat::text;
    std::string text = render_text(run(cfg));

    CHECK(text.find("field: p=5 n=4 modulus=3,1,0,1,1 beta_order=624") != std::string::npos);
    CHECK(text.find("case: one_mod_four") != std::string::npos);
    CHECK(text.find("wilson_roots: {2, 3}") != std::string::npos);
    CHECK(text.find("[1] dim=1 gen_exp=39 exps={39, 195, 351, 507}") != std::string::npos);
    CHECK(text.find("poly: T^5 + ") != std::string::npos);
    CHECK(text.find("t=1: stable, descends to F_5") != std::string::npos);
    CHECK(text.find("t=1: moves") != std::string::npos);
    CHECK(text.find("t=1: fixed={1, 4} pairs={(0, 2), (3, 5)}") != std::string::npos);
    CHECK(text.find("oracle: ok") != std::string::npos);

    CHECK(render(run(cfg), OutputFormat::text) == text);
    cfg.format = OutputFormat::json;
    CHECK(render(run(cfg), OutputFormat::json) == render_json(run(cfg)));
}

TEST_CASE("full subspace ladder in one report") {
    RunConfig cfg = a1_config();
    cfg.subspace_dims = {0, 1, 2};
    DescentReport rep = run(cfg);
    REQUIRE(rep.subgroups.size() == 8);
    CHECK(rep.subgroups[0].dim == 0);
    CHECK_FALSE(rep.subgroups[0].gen_exp.has_value());
    CHECK(rep.subgroups[0].verdicts[0].second);
    CHECK(rep.subgroups[7].dim == 2);
    CHECK(rep.subgroups[7].exps.size() == 24);
    CHECK(rep.subgroups[7].verdicts[0].second);
    // G's own vanishing polynomial is the defining equation, with zero
    // coefficient in the middle.
    REQUIRE(rep.subgroups[7].poly.size() == 3);
    CHECK(rep.subgroups[7].poly[0].degree == 1);
    CHECK(rep.subgroups[7].poly[1].degree == 5);
    CHECK_FALSE(rep.subgroups[7].poly[1].exp.has_value());
    CHECK(rep.subgroups[7].poly[2].degree == 25);

    json j = json::parse(render_json(rep));
    CHECK(j["subgroups"][0]["gen_exp"].is_null());
    CHECK(j["subgroups"][7]["poly"]["5"] == json::array({0, 0, 0, 0}));
}
