// Copyright 2026 the asdescent authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "asdescent/field.hpp"

#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace asdescent {

namespace {

constexpr uint32_t kNoExp = std::numeric_limits<uint32_t>::max();

// Codes live in uint32 tables, so p^n may never exceed this regardless of
// the configured cap.
constexpr uint64_t kHardSizeLimit = (uint64_t{1} << 32) - 1;

bool is_prime(uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t mod) {
    if (mod == 1) return 0;
    unsigned __int128 acc = 1;
    unsigned __int128 b = base % mod;
    while (exp > 0) {
        if (exp & 1) acc = acc * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<uint64_t>(acc);
}

} // namespace

std::vector<uint32_t> Element::coeffs() const { return field_->decode(code_); }

Element Element::operator+(const Element& b) const { return field_->add(*this, b); }
Element Element::operator-(const Element& b) const { return field_->sub(*this, b); }
Element Element::operator-() const { return field_->neg(*this); }
Element Element::operator*(const Element& b) const { return field_->mul(*this, b); }

std::ostream& operator<<(std::ostream& os, const Element& a) {
    os << "(";
    const auto cs = a.coeffs();
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i) os << ",";
        os << cs[i];
    }
    return os << ")";
}

Field::Field(uint64_t p, uint32_t degree, const std::vector<int64_t>& modulus_coeffs,
             uint64_t size_cap)
    : p_(p), degree_(degree) {
    if (!is_prime(p)) {
        raise(Errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    }
    if (degree < 1) {
        raise(Errc::not_monic, "extension degree must be at least 1");
    }
    if (modulus_coeffs.size() != static_cast<size_t>(degree) + 1) {
        raise(Errc::not_monic, "modulus needs exactly degree+1 coefficients, got " +
                                   std::to_string(modulus_coeffs.size()));
    }
    modulus_.resize(degree + 1);
    const auto sp = static_cast<int64_t>(p);
    for (size_t i = 0; i <= degree; ++i) {
        modulus_[i] = static_cast<uint32_t>(((modulus_coeffs[i] % sp) + sp) % sp);
    }
    if (modulus_.back() != 1) {
        raise(Errc::not_monic, "modulus is not monic");
    }

    const uint64_t cap = std::min(size_cap, kHardSizeLimit);
    order_ = 1;
    for (uint32_t i = 0; i < degree; ++i) {
        if (order_ > cap / p) {
            raise(Errc::size_cap_exceeded,
                  "p^n exceeds the configured field-size cap of " + std::to_string(cap));
        }
        order_ *= p;
    }
    if (order_ > cap) {
        raise(Errc::size_cap_exceeded,
              "p^n = " + std::to_string(order_) + " exceeds the cap of " + std::to_string(cap));
    }

    build_table();
}

void Field::build_table() {
    if (modulus_[0] == 0) {
        raise(Errc::not_primitive, "modulus is reducible: x divides it (zero divisor)");
    }

    exp_of_.assign(order_, kNoExp);
    elem_of_.assign(order_ - 1, 0);

    std::vector<uint32_t> cur(degree_, 0);
    cur[0] = 1;
    exp_of_[1] = 0;
    elem_of_[0] = 1;

    auto encode = [&](const std::vector<uint32_t>& cs) {
        uint64_t code = 0;
        for (uint32_t i = degree_; i-- > 0;) code = code * p_ + cs[i];
        return code;
    };
    auto step = [&]() {
        // cur <- x * cur mod P, using x^n = -(P - x^n).
        const uint64_t top = cur[degree_ - 1];
        for (uint32_t i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0) {
            for (uint32_t i = 0; i < degree_; ++i) {
                const uint64_t s = top * modulus_[i] % p_;
                cur[i] = static_cast<uint32_t>((cur[i] + p_ - s) % p_);
            }
        }
    };

    for (uint64_t e = 1; e + 1 < order_; ++e) {
        step();
        const uint64_t code = encode(cur);
        if (code == 0) {
            raise(Errc::not_primitive, "modulus is reducible: zero divisor at power " +
                                           std::to_string(e));
        }
        if (code == 1) {
            raise(Errc::not_primitive,
                  "beta has multiplicative order " + std::to_string(e) + " < " +
                      std::to_string(order_ - 1) + ": modulus is not primitive");
        }
        if (exp_of_[code] != kNoExp) {
            raise(Errc::not_primitive, "modulus is reducible: power cycle does not close at 1");
        }
        exp_of_[code] = static_cast<uint32_t>(e);
        elem_of_[e] = static_cast<uint32_t>(code);
    }
    step();
    if (encode(cur) != 1) {
        raise(Errc::internal, "power table failed to close after p^n - 1 steps");
    }
}

std::vector<uint32_t> Field::decode(uint64_t code) const {
    std::vector<uint32_t> cs(degree_);
    for (uint32_t i = 0; i < degree_; ++i) {
        cs[i] = static_cast<uint32_t>(code % p_);
        code /= p_;
    }
    return cs;
}

Element Field::from_code(uint64_t code) const {
    if (code >= order_) {
        raise(Errc::bad_config, "element code " + std::to_string(code) + " out of range");
    }
    return Element(this, code);
}

Element Field::from_coeffs(const std::vector<int64_t>& coeffs) const {
    if (coeffs.size() > degree_) {
        raise(Errc::bad_config, "coefficient vector longer than the extension degree");
    }
    const auto sp = static_cast<int64_t>(p_);
    uint64_t code = 0;
    for (size_t i = coeffs.size(); i-- > 0;) {
        code = code * p_ + static_cast<uint64_t>(((coeffs[i] % sp) + sp) % sp);
    }
    return Element(this, code);
}

Element Field::from_scalar(int64_t c) const {
    const auto sp = static_cast<int64_t>(p_);
    return Element(this, static_cast<uint64_t>(((c % sp) + sp) % sp));
}

Element Field::from_exp(int64_t e) const {
    const auto m = static_cast<int64_t>(unit_order());
    const int64_t r = ((e % m) + m) % m;
    return Element(this, elem_of_[static_cast<uint64_t>(r)]);
}

uint64_t Field::dlog(const Element& a) const {
    check_member(a);
    if (a.is_zero()) raise(Errc::log_of_zero, "discrete log of zero is undefined");
    return exp_of_[a.code()];
}

void Field::check_member(const Element& a) const {
    if (&a.field() != this) {
        raise(Errc::field_mismatch, "element belongs to a different field");
    }
}

Element Field::add(const Element& a, const Element& b) const {
    check_member(a);
    check_member(b);
    uint64_t ca = a.code(), cb = b.code(), code = 0, scale = 1;
    for (uint32_t i = 0; i < degree_; ++i) {
        code += (ca % p_ + cb % p_) % p_ * scale;
        ca /= p_;
        cb /= p_;
        scale *= p_;
    }
    return Element(this, code);
}

Element Field::neg(const Element& a) const {
    check_member(a);
    uint64_t ca = a.code(), code = 0, scale = 1;
    for (uint32_t i = 0; i < degree_; ++i) {
        code += (p_ - ca % p_) % p_ * scale;
        ca /= p_;
        scale *= p_;
    }
    return Element(this, code);
}

Element Field::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element Field::mul(const Element& a, const Element& b) const {
    check_member(a);
    check_member(b);
    if (a.is_zero() || b.is_zero()) return zero();
    const uint64_t e = (exp_of_[a.code()] + uint64_t{exp_of_[b.code()]}) % unit_order();
    return Element(this, elem_of_[e]);
}

Element Field::inv(const Element& a) const {
    check_member(a);
    if (a.is_zero()) raise(Errc::division_by_zero, "zero has no multiplicative inverse");
    const uint64_t e = (unit_order() - exp_of_[a.code()]) % unit_order();
    return Element(this, elem_of_[e]);
}

Element Field::pow(const Element& a, int64_t k) const {
    check_member(a);
    if (a.is_zero()) {
        if (k == 0) return one();
        if (k < 0) raise(Errc::division_by_zero, "negative power of zero");
        return zero();
    }
    const auto m = static_cast<int64_t>(unit_order());
    const auto kr = static_cast<uint64_t>(((k % m) + m) % m);
    const auto e = static_cast<uint64_t>(
        static_cast<unsigned __int128>(exp_of_[a.code()]) * kr % unit_order());
    return Element(this, elem_of_[e]);
}

Element Field::frobenius(const Element& a, uint32_t t) const {
    check_member(a);
    if (a.is_zero()) return zero();
    const uint64_t q = mod_pow(p_, t, unit_order());
    const auto e = static_cast<uint64_t>(
        static_cast<unsigned __int128>(exp_of_[a.code()]) * q % unit_order());
    return Element(this, elem_of_[e]);
}

Element Field::scale(uint64_t c, const Element& a) const {
    return mul(from_scalar(static_cast<int64_t>(c % p_)), a);
}

} // namespace asdescent
