// Copyright 2026 the asdescent authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "asdescent/subgroups.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "asdescent/error.hpp"

namespace asdescent {

namespace {

// Orders: zero first, then ascending discrete log.
bool element_less(const Field& field, const Element& a, const Element& b) {
    if (a.is_zero()) return !b.is_zero();
    if (b.is_zero()) return false;
    return field.dlog(a) < field.dlog(b);
}

uint64_t pow_u64_sat(uint64_t base, uint32_t exp) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < exp; ++i) {
        if (r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

} // namespace

Subgroup Subgroup::from_elements(const Field& field, std::vector<Element> elems) {
    for (const Element& e : elems) {
        if (&e.field() != &field) raise(Errc::field_mismatch, "element from a different field");
    }
    std::sort(elems.begin(), elems.end(),
              [&](const Element& a, const Element& b) { return element_less(field, a, b); });
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());

    if (elems.empty() || !elems.front().is_zero())
        throw std::invalid_argument("subgroup must contain zero");

    // Greedy basis: walk elements by ascending exponent, keep each one that
    // enlarges the span. The span is grown incrementally so membership checks
    // stay O(1) per element.
    std::set<uint64_t> span_codes = {0};
    std::vector<Element> gens;
    for (const Element& e : elems) {
        if (e.is_zero() || span_codes.count(e.code())) continue;
        gens.push_back(e);
        std::vector<Element> snapshot;
        snapshot.reserve(span_codes.size());
        for (uint64_t c : span_codes) snapshot.push_back(field.from_code(c));
        for (const Element& old : snapshot) {
            Element acc = old;
            for (uint64_t k = 1; k < field.p(); ++k) {
                acc = field.add(acc, e);
                span_codes.insert(acc.code());
            }
        }
    }

    uint64_t expected = 1;
    for (size_t i = 0; i < gens.size(); ++i) expected *= field.p();
    if (elems.size() != expected || elems.size() != span_codes.size())
        throw std::invalid_argument("element set is not an additive subgroup: got " +
                                    std::to_string(elems.size()) + " elements, span has " +
                                    std::to_string(span_codes.size()));

    Subgroup sub;
    sub.field_ = &field;
    sub.elements_ = std::move(elems);
    sub.generators_ = std::move(gens);
    sub.dim_ = static_cast<uint32_t>(sub.generators_.size());
    for (const Element& e : sub.elements_) {
        sub.codes_sorted_.push_back(e.code());
        if (!e.is_zero()) sub.exponent_view_.push_back(field.dlog(e));
    }
    std::sort(sub.codes_sorted_.begin(), sub.codes_sorted_.end());
    return sub;
}

Subgroup Subgroup::spanned_by(const Field& field, const std::vector<Element>& gens) {
    std::set<uint64_t> span_codes = {0};
    for (const Element& g : gens) {
        if (&g.field() != &field) raise(Errc::field_mismatch, "generator from a different field");
        if (g.is_zero() || span_codes.count(g.code())) continue;
        std::vector<Element> snapshot;
        snapshot.reserve(span_codes.size());
        for (uint64_t c : span_codes) snapshot.push_back(field.from_code(c));
        for (const Element& old : snapshot) {
            Element acc = old;
            for (uint64_t k = 1; k < field.p(); ++k) {
                acc = field.add(acc, g);
                span_codes.insert(acc.code());
            }
        }
    }
    std::vector<Element> elems;
    elems.reserve(span_codes.size());
    for (uint64_t c : span_codes) elems.push_back(field.from_code(c));
    return from_elements(field, std::move(elems));
}

bool Subgroup::contains(const Element& a) const {
    if (&a.field() != field_) raise(Errc::field_mismatch, "element from a different field");
    return std::binary_search(codes_sorted_.begin(), codes_sorted_.end(), a.code());
}

GaloisGroup galois_group_by_scan(const Field& field, uint32_t s) {
    if (field.degree() != 2 * s)
        raise(Errc::degree_mismatch, "field degree " + std::to_string(field.degree()) +
                                         " is not 2*" + std::to_string(s));
    std::vector<Element> roots;
    for (uint64_t code = 0; code < field.order(); ++code) {
        Element a = field.from_code(code);
        if (field.add(field.frobenius(a, s), a).is_zero()) roots.push_back(a);
    }
    uint64_t expected = 1;
    for (uint32_t i = 0; i < s; ++i) expected *= field.p();
    if (roots.size() != expected)
        raise(Errc::internal, "root space of T^(p^s)+T has size " +
                                  std::to_string(roots.size()) + ", expected " +
                                  std::to_string(expected));
    return GaloisGroup{s, GroupOrigin::brute_force, Subgroup::from_elements(field, std::move(roots))};
}

GaloisGroup galois_group_by_formula(const Field& field, uint32_t s) {
    if (field.degree() != 2 * s)
        raise(Errc::degree_mismatch, "field degree " + std::to_string(field.degree()) +
                                         " is not 2*" + std::to_string(s));
    if (field.p() == 2)
        raise(Errc::odd_prime_required,
              "exponent formula needs odd characteristic, use the scan for p = 2");

    // Nonzero roots of T^(p^s)+T are the elements of exponent m*(p^s+1)/2
    // with m odd: these are exactly the x with x^(p^s-1) = -1. There are
    // p^s - 1 of them, reached by m = 1, 3, ..., 2(p^s-1) - 1.
    uint64_t half_order = 1;
    for (uint32_t i = 0; i < s; ++i) half_order *= field.p();
    uint64_t step = (half_order + 1) / 2;
    std::vector<Element> roots;
    roots.push_back(field.zero());
    for (uint64_t m = 1; m < 2 * half_order - 1; m += 2)
        roots.push_back(field.from_exp(static_cast<int64_t>(m * step)));

    return GaloisGroup{s, GroupOrigin::formula, Subgroup::from_elements(field, std::move(roots))};
}

Subgroup subfield(const Field& field, uint32_t t) {
    if (t == 0 || field.degree() % t != 0)
        raise(Errc::not_a_divisor,
              "t = " + std::to_string(t) + " does not divide n = " + std::to_string(field.degree()));
    uint64_t sub_order = 1;
    for (uint32_t i = 0; i < t; ++i) sub_order *= field.p();
    uint64_t step = field.unit_order() / (sub_order - 1);
    std::vector<Element> elems;
    elems.push_back(field.zero());
    for (uint64_t m = 1; m < sub_order; ++m)
        elems.push_back(field.from_exp(static_cast<int64_t>(m * step)));
    return Subgroup::from_elements(field, std::move(elems));
}

Subgroup intersect_subfield(const GaloisGroup& group, uint32_t t) {
    Subgroup k = subfield(group.sub.field(), t);
    std::vector<Element> common;
    for (const Element& e : k.elements())
        if (group.sub.contains(e)) common.push_back(e);
    return Subgroup::from_elements(group.sub.field(), std::move(common));
}

std::vector<Subgroup> order_p_subgroups(const GaloisGroup& group) {
    const Field& field = group.sub.field();
    std::vector<Subgroup> lines;
    std::set<uint64_t> seen;
    for (const Element& e : group.sub.elements()) {
        if (e.is_zero() || seen.count(e.code())) continue;
        Subgroup line = Subgroup::spanned_by(field, {e});
        for (const Element& m : line.elements()) seen.insert(m.code());
        lines.push_back(std::move(line));
    }
    // elements() walks ascending exponent, so lines come out sorted by
    // canonical generator already; keep the guarantee explicit.
    std::sort(lines.begin(), lines.end(), [](const Subgroup& a, const Subgroup& b) {
        return a.exponent_view().front() < b.exponent_view().front();
    });
    return lines;
}

std::vector<Subgroup> all_subspaces(const GaloisGroup& group, uint32_t d, uint64_t cap) {
    const Field& field = group.sub.field();
    const uint32_t s = group.s;
    if (d > s)
        raise(Errc::bad_config, "dimension " + std::to_string(d) + " exceeds rank " +
                                    std::to_string(s) + " of the group");
    uint64_t count = gaussian_binomial(s, d, field.p());
    if (count > cap)
        raise(Errc::enumeration_cap_exceeded,
              "subspace count " + std::to_string(count) + " exceeds cap " + std::to_string(cap));
    if (d == 0) return {Subgroup::spanned_by(field, {})};

    const std::vector<Element>& basis = group.sub.generators();
    const uint64_t p = field.p();

    // Enumerate d x s reduced-echelon matrices over F_p: choose pivot columns,
    // then run an odometer over the free entries (entries right of a pivot and
    // not in a pivot column).
    std::vector<Subgroup> result;
    std::vector<uint32_t> pivots(d);
    for (uint32_t i = 0; i < d; ++i) pivots[i] = i;

    auto emit_for_pivots = [&]() {
        std::vector<bool> is_pivot(s, false);
        for (uint32_t c : pivots) is_pivot[c] = true;
        std::vector<std::pair<uint32_t, uint32_t>> free_pos;
        for (uint32_t r = 0; r < d; ++r)
            for (uint32_t c = pivots[r] + 1; c < s; ++c)
                if (!is_pivot[c]) free_pos.emplace_back(r, c);

        std::vector<uint64_t> digits(free_pos.size(), 0);
        while (true) {
            std::vector<std::vector<uint64_t>> mat(d, std::vector<uint64_t>(s, 0));
            for (uint32_t r = 0; r < d; ++r) mat[r][pivots[r]] = 1;
            for (size_t i = 0; i < free_pos.size(); ++i)
                mat[free_pos[i].first][free_pos[i].second] = digits[i];

            std::vector<Element> gens;
            for (uint32_t r = 0; r < d; ++r) {
                Element v = field.zero();
                for (uint32_t c = 0; c < s; ++c)
                    if (mat[r][c] != 0) v = field.add(v, field.scale(mat[r][c], basis[c]));
                gens.push_back(v);
            }
            result.push_back(Subgroup::spanned_by(field, gens));

            size_t i = 0;
            while (i < digits.size() && digits[i] == p - 1) digits[i++] = 0;
            if (i == digits.size()) break;
            ++digits[i];
        }
    };

    while (true) {
        emit_for_pivots();
        // Next pivot-column combination in lexicographic order.
        int32_t i = static_cast<int32_t>(d) - 1;
        while (i >= 0 && pivots[i] == s - d + static_cast<uint32_t>(i)) --i;
        if (i < 0) break;
        ++pivots[i];
        for (uint32_t j = static_cast<uint32_t>(i) + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
    }

    std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) {
        return a.exponent_view() < b.exponent_view();
    });
    result.erase(std::unique(result.begin(), result.end()), result.end());
    if (result.size() != count)
        raise(Errc::internal, "echelon enumeration produced " + std::to_string(result.size()) +
                                  " subspaces, expected " + std::to_string(count));
    return result;
}

std::map<uint64_t, Element> subgroup_polynomial(const Subgroup& subgroup) {
    const Field& field = subgroup.field();

    // Expand prod (T - h) with coefficients in the field; coeffs[i] multiplies T^i.
    std::vector<Element> coeffs = {field.one()};
    for (const Element& h : subgroup.elements()) {
        std::vector<Element> next(coeffs.size() + 1, field.zero());
        for (size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] = field.add(next[i + 1], coeffs[i]);
            next[i] = field.add(next[i], field.mul(field.neg(h), coeffs[i]));
        }
        coeffs = std::move(next);
    }

    // A vanishing polynomial of an F_p-subspace is linearized: only degrees
    // p^0 .. p^dim survive. Anything else means the input set was not a group.
    std::set<uint64_t> allowed;
    uint64_t q = 1;
    for (uint32_t i = 0; i <= subgroup.dim(); ++i) {
        allowed.insert(q);
        q *= field.p();
    }
    std::map<uint64_t, Element> poly;
    for (size_t deg = 0; deg < coeffs.size(); ++deg) {
        if (allowed.count(deg)) {
            poly.emplace(static_cast<uint64_t>(deg), coeffs[deg]);
        } else if (!coeffs[deg].is_zero()) {
            raise(Errc::oracle_mismatch, "vanishing polynomial has a stray coefficient at degree " +
                                             std::to_string(deg));
        }
    }
    return poly;
}

uint64_t gaussian_binomial(uint32_t s, uint32_t d, uint64_t p) {
    if (d > s) return 0;
    // q-Pascal: [m, k] = [m-1, k-1] + p^k [m-1, k], saturating on overflow.
    std::vector<std::vector<uint64_t>> table(s + 1, std::vector<uint64_t>(d + 1, 0));
    for (uint32_t m = 0; m <= s; ++m) table[m][0] = 1;
    for (uint32_t m = 1; m <= s; ++m) {
        for (uint32_t k = 1; k <= d && k <= m; ++k) {
            uint64_t lower = table[m - 1][k - 1];
            uint64_t same = (k <= m - 1) ? table[m - 1][k] : 0;
            uint64_t pk = pow_u64_sat(p, k);
            uint64_t scaled = (same != 0 && pk > UINT64_MAX / same) ? UINT64_MAX : pk * same;
            uint64_t sum = lower + scaled;
            if (sum < lower) sum = UINT64_MAX;
            table[m][k] = sum;
        }
    }
    return table[s][d];
}

} // namespace asdescent
