// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>

#include "mvcrypt/nat.hpp"
#include "mvcrypt/random.hpp"

namespace mvcrypt {

/// Default Miller-Rabin round count; error probability <= 4^-64.
inline constexpr int kDefaultMrRounds = 64;

enum class GeneratorOrder {
  kFullGroup,   // order 2q: generates all of F_p^*
  kQrSubgroup,  // order q: generates the quadratic residues
};

/// Safe-prime group: p = 2q + 1 with p and q prime, and a generator of
/// either the full multiplicative group or its quadratic-residue subgroup.
struct GroupParams {
  Nat p;
  Nat q;
  Nat g;
  GeneratorOrder g_order = GeneratorOrder::kQrSubgroup;

  Nat group_order() const;  // 2q or q, per g_order

  /// Throws ParamError unless p = 2q+1, both probably prime, 1 < g < p,
  /// and g^q is 1 (kQrSubgroup) or p-1 (kFullGroup).
  void validate(int mr_rounds = kDefaultMrRounds) const;

  /// Builds params with q = (p-1)/2 and validates them.
  static GroupParams checked(Nat p, Nat g, GeneratorOrder g_order,
                             int mr_rounds = kDefaultMrRounds);
};

/// base^exp mod modulus. modulus >= 2.
Nat mod_pow(const Nat& base, const Nat& exp, const Nat& modulus);

/// x with a*x = 1 (mod modulus). Throws ParamError when gcd(a, modulus) != 1.
Nat mod_inv(const Nat& a, const Nat& modulus);

/// Jacobi symbol (a/n) for odd n >= 3, computed by the binary reciprocity
/// algorithm. Equals the Legendre symbol for prime n.
int jacobi(const Nat& a, const Nat& n);

/// Square root of a modulo a prime p = 3 (mod 4), as a^((p+1)/4). Returns
/// one root r; the other is p-r. Throws ParamError if p != 3 (mod 4) or if
/// the result fails r^2 = a (i.e. a is not a residue).
Nat sqrt_mod(const Nat& a, const Nat& p);

/// Probabilistic primality: deterministic trial division below 2^16,
/// Miller-Rabin with `rounds` bases above. rounds >= 1.
bool is_probable_prime(const Nat& n, int rounds = kDefaultMrRounds);

/// Generates a safe prime p of exactly `bits` bits (3 <= bits <= 4096) and
/// a generator of the requested order: the smallest quadratic non-residue
/// >= 2 for kFullGroup, or its square for kQrSubgroup.
GroupParams gen_safe_prime(std::size_t bits, RandomSource& rng,
                           GeneratorOrder g_order = GeneratorOrder::kQrSubgroup);

}  // namespace mvcrypt
