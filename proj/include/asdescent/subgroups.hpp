// Copyright 2026 the asdescent authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "asdescent/field.hpp"

namespace asdescent {

/// An F_p-subspace of F_{p^n} under addition. Identity is canonical: two
/// subgroups are equal iff their sorted nonzero-exponent lists agree.
class Subgroup {
public:
    /// Builds from an explicit element set; rejects anything that is not an
    /// F_p-subspace (missing zero, or |set| != p^rank of its span).
    static Subgroup from_elements(const Field& field, std::vector<Element> elems);

    /// Span of a generator list (duplicates and dependent vectors are fine,
    /// the dimension comes out of the span itself).
    static Subgroup spanned_by(const Field& field, const std::vector<Element>& gens);

    const Field& field() const noexcept { return *field_; }

    /// Zero first, then ascending discrete log.
    const std::vector<Element>& elements() const noexcept { return elements_; }

    /// Greedy minimal-exponent F_p-basis; generators()[0] is the canonical
    /// generator of an order-p subgroup.
    const std::vector<Element>& generators() const noexcept { return generators_; }

    uint32_t dim() const noexcept { return dim_; }
    uint64_t size() const noexcept { return static_cast<uint64_t>(elements_.size()); }

    /// Sorted discrete logs of the nonzero elements: the canonical identity.
    const std::vector<uint64_t>& exponent_view() const noexcept { return exponent_view_; }

    bool contains(const Element& a) const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
        return a.field_ == b.field_ && a.exponent_view_ == b.exponent_view_;
    }
    friend bool operator!=(const Subgroup& a, const Subgroup& b) noexcept { return !(a == b); }

private:
    Subgroup() = default;

    const Field* field_ = nullptr;
    std::vector<Element> elements_;
    std::vector<Element> generators_;
    std::vector<uint64_t> exponent_view_;
    std::vector<uint64_t> codes_sorted_;
    uint32_t dim_ = 0;
};

enum class GroupOrigin { brute_force, formula };

/// The group G = {a in F_{p^{2s}} : a^(p^s) + a = 0}, i.e. the root space of
/// T^(p^s) + T, carried with the route that built it.
struct GaloisGroup {
    uint32_t s = 0;
    GroupOrigin built_by = GroupOrigin::brute_force;
    Subgroup sub;
};

/// Scans every field element for a^(p^s) + a = 0. Requires n = 2s.
GaloisGroup galois_group_by_scan(const Field& field, uint32_t s);

/// Builds G from its exponent description: 0 together with beta^(m(p^s+1)/2)
/// for odd m. Requires n = 2s and odd p (ODD_PRIME_REQUIRED for p = 2;
/// callers fall back to the scan).
GaloisGroup galois_group_by_formula(const Field& field, uint32_t s);

/// The subfield F_{p^t} inside F_{p^n}: zero plus the powers of
/// beta^((p^n-1)/(p^t-1)). Requires t | n.
Subgroup subfield(const Field& field, uint32_t t);

/// Literal set intersection of F_{p^t} with G. The result is {0} whenever
/// t | s and p is odd; in characteristic 2 it is the genuine subfield
/// F_{2^gcd(t,s)}, which is why this computes rather than asserts.
Subgroup intersect_subfield(const GaloisGroup& group, uint32_t t);

/// All (p^s-1)/(p-1) order-p subgroups {0, a, 2a, ..., (p-1)a} of G, sorted
/// by canonical generator exponent. They partition G \ {0}.
std::vector<Subgroup> order_p_subgroups(const GaloisGroup& group);

constexpr uint64_t kDefaultEnumCap = 100000;

/// All F_p-subspaces of G of dimension d (reduced-echelon enumeration),
/// sorted by exponent view. Count equals gaussian_binomial(s, d, p);
/// ENUM_CAP if that exceeds the cap.
std::vector<Subgroup> all_subspaces(const GaloisGroup& group, uint32_t d,
                                    uint64_t cap = kDefaultEnumCap);

/// Coefficients of A_H(T) = prod_{h in H} (T - h), keyed by degree. Only the
/// degrees p^0, p^1, ..., p^dim appear (A_H is linearized); the leading
/// coefficient is 1 and A_H vanishes exactly on H.
std::map<uint64_t, Element> subgroup_polynomial(const Subgroup& subgroup);

/// Number of d-dimensional subspaces of F_p^s; saturates to UINT64_MAX when
/// the exact count overflows.
uint64_t gaussian_binomial(uint32_t s, uint32_t d, uint64_t p);

} // namespace asdescent
