// Copyright 2026 the asdescent authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "asdescent/subgroups.hpp"

namespace asdescent {

/// Outcome of testing one subgroup H against one base field F_{p^t}.
struct DescentVerdict {
    Subgroup subgroup;
    uint32_t t = 0;
    bool stable = false;
    /// Sorted exponent view of phi_t(H), for reporting even when unstable.
    std::vector<uint64_t> image_exponents;
    /// p^t when stable, empty otherwise.
    std::optional<uint64_t> descends_to;
};

/// How phi_t permutes a list of subgroups: indices into the input list.
struct OrbitStructure {
    uint32_t t = 0;
    std::vector<size_t> fixed;
    std::vector<std::pair<size_t, size_t>> pairs;
    /// Cycles of length >= 3, each rotated to start at its smallest index.
    std::vector<std::vector<size_t>> longer_cycles;
};

enum class CaseKind { char_two, one_mod_four, three_mod_four };

struct CaseTag {
    CaseKind kind = CaseKind::char_two;
    /// The square root of -1 in F_p, present only when p = 1 mod 4.
    std::optional<uint32_t> wilson_root;
};

/// Applies x -> x^(p^t) elementwise. Every image is cross-checked against the
/// exponent shortcut (discrete log times p^t); disagreement is ORACLE_MISMATCH.
Subgroup frobenius_image(const Subgroup& subgroup, uint32_t t);

/// Tests phi_t(H) = H and certifies the verdict a second way: H is stable
/// exactly when every coefficient of its vanishing polynomial lies in F_{p^t}.
/// The two answers must agree or ORACLE_MISMATCH is raised. Requires t | n.
DescentVerdict is_descendable(const Subgroup& subgroup, uint32_t t);

/// Decomposes the phi_t action on a list of pairwise distinct subgroups into
/// fixed points, 2-cycles, and longer cycles. IMAGE_NOT_IN_LIST if the list
/// is not closed under phi_t.
OrbitStructure orbit_structure(const std::vector<Subgroup>& list, uint32_t t);

/// ((p-1)/2)! mod p. Returns its value when it squares to -1 (p = 1 mod 4);
/// returns empty after checking it squares to +1 (p = 3 mod 4). EVEN_PRIME
/// for p = 2.
std::optional<uint64_t> wilson_sqrt_minus_one(uint64_t p);

/// For F_{p^4} with p = 1 mod 4: the canonical generators beta^e and
/// beta^(3e), e = (p^2+1)(p+1)/4, of the two phi_1-stable order-p subgroups.
/// WRONG_CASE_TAG outside that case.
std::pair<Element, Element> stable_line_generators(const Field& field);

CaseTag classify_case(uint64_t p);

} // namespace asdescent
