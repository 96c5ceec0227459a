// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "mvcrypt/nat.hpp"

#include <cctype>

#include "mvcrypt/error.hpp"

namespace mvcrypt {

std::size_t bit_length(const Nat& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

Nat nat_from_decimal(const std::string& text) {
  if (text.empty()) throw ParamError("empty decimal string");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParamError("not a decimal digit string: '" + text + "'");
  }
  Nat n;
  if (mpz_set_str(n.get_mpz_t(), text.c_str(), 10) != 0)
    throw ParamError("unparseable decimal string: '" + text + "'");
  return n;
}

std::string to_decimal(const Nat& n) { return n.get_str(10); }

bool fits_u64(const Nat& n) { return n >= 0 && bit_length(n) <= 64; }

std::uint64_t to_u64(const Nat& n) {
  if (!fits_u64(n)) throw ParamError("value does not fit in 64 bits");
  return static_cast<std::uint64_t>(mpz_get_ui(n.get_mpz_t()));
}

Nat nat_from_u64(std::uint64_t v) {
  Nat n;
  mpz_import(n.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return n;
}

}  // namespace mvcrypt
