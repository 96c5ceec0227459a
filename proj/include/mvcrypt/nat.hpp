// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace mvcrypt {

/// Arbitrary-precision non-negative integer. GMP keeps the limb
/// representation canonical, so equality and hashing are value-based.
using Nat = mpz_class;

/// Number of significant bits; bit_length(0) == 0.
std::size_t bit_length(const Nat& n);

/// Strict decimal parse: nonempty, digits 0-9 only. Throws ParamError.
Nat nat_from_decimal(const std::string& text);

std::string to_decimal(const Nat& n);

bool fits_u64(const Nat& n);

/// Requires fits_u64(n).
std::uint64_t to_u64(const Nat& n);

Nat nat_from_u64(std::uint64_t v);

}  // namespace mvcrypt
