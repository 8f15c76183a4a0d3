// Copyright 2026 the asdescent authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "asdescent/error.hpp"

namespace asdescent {

class Field;

/// Element of F_{p^n} in the polynomial basis. Internally an element is the
/// radix-p packing of its canonical coefficient vector (coefficient of x^i at
/// digit i), so equality is plain integer equality within one field.
class Element {
public:
    const Field& field() const noexcept { return *field_; }
    uint64_t code() const noexcept { return code_; }
    bool is_zero() const noexcept { return code_ == 0; }

    /// Coefficient vector of length n, ascending degree, entries in [0, p).
    std::vector<uint32_t> coeffs() const;

    friend bool operator==(const Element& a, const Element& b) noexcept {
        return a.field_ == b.field_ && a.code_ == b.code_;
    }
    friend bool operator!=(const Element& a, const Element& b) noexcept {
        return !(a == b);
    }

    Element operator+(const Element& b) const;
    Element operator-(const Element& b) const;
    Element operator-() const;
    Element operator*(const Element& b) const;

private:
    friend class Field;
    Element(const Field* f, uint64_t code) : field_(f), code_(code) {}

    const Field* field_;
    uint64_t code_;
};

std::ostream& operator<<(std::ostream& os, const Element& a);

/// F_{p^n} = F_p[x]/(P(x)) for a monic primitive modulus P, together with a
/// full discrete-log table for beta, the residue class of x.
///
/// Construction walks the powers 1, beta, beta^2, ... and records each one;
/// the walk closing exactly after p^n - 1 distinct nonzero elements is the
/// primitivity certificate. A table that closes early or meets a zero
/// divisor rejects the modulus.
///
/// Instances are immutable once constructed and safe to read from any number
/// of threads. Elements keep a pointer to their field, so a Field must
/// outlive its elements and is neither copyable nor movable.
class Field {
public:
    static constexpr uint64_t kDefaultSizeCap = uint64_t{1} << 24;

    /// Modulus coefficients ascending, length degree+1, reduced mod p on
    /// input (negative values allowed). Throws NOT_PRIME, NOT_MONIC,
    /// NOT_PRIMITIVE or SIZE_CAP.
    Field(uint64_t p, uint32_t degree, const std::vector<int64_t>& modulus_coeffs,
          uint64_t size_cap = kDefaultSizeCap);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    uint64_t p() const noexcept { return p_; }
    uint32_t degree() const noexcept { return degree_; }
    uint64_t order() const noexcept { return order_; }           // p^n
    uint64_t unit_order() const noexcept { return order_ - 1; }  // = order of beta
    const std::vector<uint32_t>& modulus() const noexcept { return modulus_; }

    Element zero() const noexcept { return Element(this, 0); }
    Element one() const noexcept { return Element(this, 1); }
    Element beta() const noexcept { return Element(this, p_); }

    Element from_code(uint64_t code) const;
    Element from_coeffs(const std::vector<int64_t>& coeffs) const;
    Element from_scalar(int64_t c) const;  // embeds F_p
    /// beta^e, with e reduced mod p^n - 1 (negative e allowed).
    Element from_exp(int64_t e) const;

    /// Exponent of a nonzero element in [0, p^n - 2]. Throws LOG_OF_ZERO.
    uint64_t dlog(const Element& a) const;

    Element add(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element sub(const Element& a, const Element& b) const;
    Element mul(const Element& a, const Element& b) const;
    Element inv(const Element& a) const;  // throws DIVISION_BY_ZERO for 0

    /// a^k for any integer k; negative k goes through the inverse. For a
    /// nonzero base the exponent is reduced mod p^n - 1.
    Element pow(const Element& a, int64_t k) const;

    /// phi_t(a) = a^(p^t). Total on the field; frobenius(a, degree) == a.
    Element frobenius(const Element& a, uint32_t t) const;

    Element scale(uint64_t c, const Element& a) const;  // (c mod p) * a

    std::vector<uint32_t> decode(uint64_t code) const;

private:
    void build_table();
    void check_member(const Element& a) const;

    uint64_t p_ = 0;
    uint32_t degree_ = 0;
    uint64_t order_ = 0;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> exp_of_;   // code -> exponent (code 0 unused)
    std::vector<uint32_t> elem_of_;  // exponent -> code
};

} // namespace asdescent
