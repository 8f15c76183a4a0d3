// Copyright 2026 the asdescent authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace asdescent {

// Stable failure codes. The CLI maps these 1:1 onto the "code" field of its
// machine-readable error objects, so names must not change between releases.
enum class Errc {
    not_prime,
    not_monic,
    not_primitive,
    size_cap_exceeded,
    division_by_zero,
    field_mismatch,
    log_of_zero,
    degree_mismatch,
    odd_prime_required,
    not_a_divisor,
    enumeration_cap_exceeded,
    image_not_in_list,
    wrong_case_tag,
    even_prime,
    bad_config,
    oracle_mismatch,
    golden_mismatch,
    internal,
};

inline const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::not_prime: return "NOT_PRIME";
    case Errc::not_monic: return "NOT_MONIC";
    case Errc::not_primitive: return "NOT_PRIMITIVE";
    case Errc::size_cap_exceeded: return "SIZE_CAP";
    case Errc::division_by_zero: return "DIVISION_BY_ZERO";
    case Errc::field_mismatch: return "FIELD_MISMATCH";
    case Errc::log_of_zero: return "LOG_OF_ZERO";
    case Errc::degree_mismatch: return "DEGREE_MISMATCH";
    case Errc::odd_prime_required: return "ODD_PRIME_REQUIRED";
    case Errc::not_a_divisor: return "NOT_A_DIVISOR";
    case Errc::enumeration_cap_exceeded: return "ENUM_CAP";
    case Errc::image_not_in_list: return "IMAGE_NOT_IN_LIST";
    case Errc::wrong_case_tag: return "WRONG_CASE_TAG";
    case Errc::even_prime: return "EVEN_PRIME";
    case Errc::bad_config: return "BAD_CONFIG";
    case Errc::oracle_mismatch: return "ORACLE_MISMATCH";
    case Errc::golden_mismatch: return "GOLDEN_MISMATCH";
    case Errc::internal: return "INTERNAL";
    }
    return "INTERNAL";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace asdescent
