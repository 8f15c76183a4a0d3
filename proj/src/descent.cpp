// Copyright 2026 the asdescent authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "asdescent/descent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "asdescent/error.hpp"

namespace asdescent {

Subgroup frobenius_image(const Subgroup& subgroup, uint32_t t) {
    const Field& field = subgroup.field();
    uint64_t m = field.unit_order();
    // p^t mod (p^n - 1), the multiplier the Frobenius applies to exponents.
    uint64_t mult = 1;
    for (uint32_t i = 0; i < t; ++i) mult = (unsigned __int128)mult * field.p() % m;

    std::vector<Element> images;
    images.reserve(subgroup.elements().size());
    for (const Element& h : subgroup.elements()) {
        Element img = field.frobenius(h, t);
        if (!h.is_zero()) {
            uint64_t shortcut = (unsigned __int128)field.dlog(h) * mult % m;
            if (field.dlog(img) != shortcut)
                raise(Errc::oracle_mismatch,
                      "frobenius image disagrees with the exponent shortcut at exponent " +
                          std::to_string(field.dlog(h)));
        } else if (!img.is_zero()) {
            raise(Errc::oracle_mismatch, "frobenius moved zero");
        }
        images.push_back(img);
    }
    return Subgroup::from_elements(field, std::move(images));
}

DescentVerdict is_descendable(const Subgroup& subgroup, uint32_t t) {
    const Field& field = subgroup.field();
    if (t == 0 || field.degree() % t != 0)
        raise(Errc::not_a_divisor,
              "t = " + std::to_string(t) + " does not divide n = " + std::to_string(field.degree()));

    Subgroup image = frobenius_image(subgroup, t);
    bool stable = (image == subgroup);

    // Independent certificate: H is phi_t-stable iff A_H has all coefficients
    // in F_{p^t}, i.e. each coefficient is fixed by phi_t.
    bool coeffs_fixed = true;
    for (const auto& [deg, c] : subgroup_polynomial(subgroup)) {
        if (field.frobenius(c, t) != c) {
            coeffs_fixed = false;
            break;
        }
    }
    if (coeffs_fixed != stable)
        raise(Errc::oracle_mismatch,
              "set stability and coefficient-field certificate disagree for t = " +
                  std::to_string(t));

    DescentVerdict v{subgroup, t, stable, image.exponent_view(), std::nullopt};
    if (stable) {
        uint64_t q = 1;
        for (uint32_t i = 0; i < t; ++i) q *= field.p();
        v.descends_to = q;
    }
    return v;
}

OrbitStructure orbit_structure(const std::vector<Subgroup>& list, uint32_t t) {
    std::map<std::vector<uint64_t>, size_t> index_of;
    for (size_t i = 0; i < list.size(); ++i) {
        auto [it, fresh] = index_of.emplace(list[i].exponent_view(), i);
        if (!fresh) throw std::invalid_argument("subgroup list has duplicates");
    }

    std::vector<size_t> next(list.size());
    for (size_t i = 0; i < list.size(); ++i) {
        Subgroup image = frobenius_image(list[i], t);
        auto it = index_of.find(image.exponent_view());
        if (it == index_of.end())
            raise(Errc::image_not_in_list,
                  "frobenius image of entry " + std::to_string(i) + " is outside the list");
        next[i] = it->second;
    }

    OrbitStructure orbits;
    orbits.t = t;
    std::vector<bool> done(list.size(), false);
    for (size_t i = 0; i < list.size(); ++i) {
        if (done[i]) continue;
        std::vector<size_t> cycle;
        size_t j = i;
        do {
            cycle.push_back(j);
            done[j] = true;
            j = next[j];
        } while (j != i);
        if (cycle.size() == 1) {
            orbits.fixed.push_back(cycle[0]);
        } else if (cycle.size() == 2) {
            orbits.pairs.emplace_back(std::min(cycle[0], cycle[1]),
                                      std::max(cycle[0], cycle[1]));
        } else {
            // Cycles start at their smallest index; first-visit order already
            // guarantees that, since i is the minimum of any fresh cycle.
            orbits.longer_cycles.push_back(std::move(cycle));
        }
    }
    std::sort(orbits.fixed.begin(), orbits.fixed.end());
    std::sort(orbits.pairs.begin(), orbits.pairs.end());
    std::sort(orbits.longer_cycles.begin(), orbits.longer_cycles.end());
    return orbits;
}

std::optional<uint64_t> wilson_sqrt_minus_one(uint64_t p) {
    if (p == 2) raise(Errc::even_prime, "no square root of -1 story in characteristic 2");
    uint64_t w = 1;
    for (uint64_t k = 2; k <= (p - 1) / 2; ++k) w = (unsigned __int128)w * k % p;
    uint64_t w2 = (unsigned __int128)w * w % p;
    if (p % 4 == 1) {
        if (w2 != p - 1)
            raise(Errc::internal, "half factorial squared to " + std::to_string(w2) +
                                      " mod " + std::to_string(p) + ", expected -1");
        return w;
    }
    if (w2 != 1)
        raise(Errc::internal, "half factorial squared to " + std::to_string(w2) + " mod " +
                                  std::to_string(p) + ", expected 1");
    return std::nullopt;
}

std::pair<Element, Element> stable_line_generators(const Field& field) {
    if (field.degree() != 4 || field.p() % 4 != 1)
        raise(Errc::wrong_case_tag,
              "stable generators exist only for degree 4 with p = 1 mod 4");
    uint64_t p = field.p();
    uint64_t e = (p * p + 1) * (p + 1) / 4;
    return {field.from_exp(static_cast<int64_t>(e)),
            field.from_exp(static_cast<int64_t>(3 * e))};
}

CaseTag classify_case(uint64_t p) {
    CaseTag tag;
    if (p == 2) {
        tag.kind = CaseKind::char_two;
        return tag;
    }
    if (p % 4 == 1) {
        tag.kind = CaseKind::one_mod_four;
        tag.wilson_root = static_cast<uint32_t>(*wilson_sqrt_minus_one(p));
    } else {
        tag.kind = CaseKind::three_mod_four;
        wilson_sqrt_minus_one(p);
    }
    return tag;
}

} // namespace asdescent
