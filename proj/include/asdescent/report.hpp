// Copyright 2026 the asdescent authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asdescent/descent.hpp"
#include "asdescent/field.hpp"
#include "asdescent/subgroups.hpp"

namespace asdescent {

enum class OutputFormat { json, text };

struct RunConfig {
    uint64_t p = 0;
    uint32_t s = 0;
    /// Base-field degrees to test; empty means every divisor of 2s.
    std::vector<uint32_t> t_list;
    /// Ascending coefficients of a degree-2s modulus; empty means auto-search.
    std::optional<std::vector<int64_t>> modulus;
    OutputFormat format = OutputFormat::text;
    bool oracle = false;
    /// Subspace dimensions to inventory.
    std::vector<uint32_t> subspace_dims = {1};
    uint64_t size_cap = Field::kDefaultSizeCap;
    uint64_t enum_cap = kDefaultEnumCap;
};

/// One coefficient of a subgroup's vanishing polynomial.
struct PolyCoeff {
    uint64_t degree = 0;
    /// Polynomial-basis coordinates, constant digit first.
    std::vector<uint32_t> digits;
    /// Discrete log of the coefficient; empty when the coefficient is zero.
    std::optional<uint64_t> exp;
};

struct SubgroupRecord {
    uint32_t dim = 0;
    /// Exponent of the canonical (smallest-exponent) basis element; empty for
    /// the zero subgroup.
    std::optional<uint64_t> gen_exp;
    std::vector<uint64_t> exps;
    /// (t, stable) pairs, ascending t.
    std::vector<std::pair<uint32_t, bool>> verdicts;
    /// Coefficients at the degrees p^0 .. p^dim, ascending.
    std::vector<PolyCoeff> poly;
};

struct OrbitRecord {
    uint32_t t = 0;
    std::vector<size_t> fixed;
    std::vector<std::pair<size_t, size_t>> pairs;
    std::vector<std::vector<size_t>> cycles;
};

struct DescentReport {
    RunConfig config;
    uint64_t p = 0;
    uint32_t n = 0;
    std::vector<uint32_t> modulus;
    uint64_t beta_order = 0;
    CaseTag case_tag;
    /// Both square roots of -1 in F_p, ascending; empty unless p = 1 mod 4.
    std::vector<uint32_t> wilson_roots;
    std::vector<uint64_t> g_exponents;
    std::vector<SubgroupRecord> subgroups;
    std::vector<OrbitRecord> orbits;
    /// True when cross-checks ran (and passed); empty when oracle mode is off.
    std::optional<bool> oracle_ok;
};

/// Full pipeline: field, G, inventory, verdicts, orbits.
DescentReport run(const RunConfig& config);

std::string render_json(const DescentReport& report);
std::string render_text(const DescentReport& report);
std::string render(const DescentReport& report, OutputFormat format);

/// Lexicographically smallest monic primitive polynomial of degree n over
/// F_p, coefficients compared from the constant term upward. Returned
/// ascending, length n+1, leading 1.
std::vector<int64_t> search_primitive_polynomial(uint64_t p, uint32_t n,
                                                 uint64_t size_cap = Field::kDefaultSizeCap);

/// One embedded reference table: the field, its two square roots of -1, and
/// the exponent sets of the two order-p subgroups stable under phi_1.
struct AppendixGolden {
    uint64_t p = 0;
    std::vector<int64_t> modulus;
    std::vector<uint32_t> wilson_roots;
    std::array<std::vector<uint64_t>, 2> stable_sets;
};

const std::vector<AppendixGolden>& appendix_goldens();

/// Differences between a run's stable order-p subgroups and one golden table;
/// empty means exact agreement.
std::vector<std::string> golden_diffs(const DescentReport& report, const AppendixGolden& golden);

struct AppendixOutcome {
    DescentReport report;
    bool golden_ok = false;
    std::vector<std::string> diffs;
};

/// Reruns every embedded reference configuration (t = 1, oracle on) and diffs
/// each against its golden table. Never throws on mismatch; callers inspect
/// golden_ok.
std::vector<AppendixOutcome> appendix_mode(uint64_t size_cap = Field::kDefaultSizeCap);

} // namespace asdescent
