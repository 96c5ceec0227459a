// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "mvcrypt/elgamal.hpp"
#include "mvcrypt/modmath.hpp"

namespace mvcrypt {

/// Ceiling on subgroup orders the generic solvers accept. Anything larger
/// needs index-calculus machinery, which is out of scope for this toolkit;
/// the key-recovery attack is exercised structurally at desk-scale sizes.
inline constexpr std::uint64_t kMaxGenericOrder = std::uint64_t{1} << 56;

/// Memory bound for baby-step/giant-step (sqrt(order) table entries).
inline constexpr std::uint64_t kMaxBsgsOrder = std::uint64_t{1} << 50;

/// Orders at or below this go to baby-step/giant-step; above it the
/// constant-memory rho walk takes over.
inline constexpr std::uint64_t kBsgsMaxOrder = std::uint64_t{1} << 44;

/// One discrete-log problem: find x with g^x = target (mod p).
struct DlpInstance {
  GroupParams params;
  Nat target;
  std::uint64_t max_iterations = 0;  // 0 = automatic budget
};

/// Baby-step/giant-step in the subgroup of the given order mod p.
/// O(sqrt(order)) time and memory. Throws SolverError if h is not in <g>.
Nat bsgs(const Nat& g, const Nat& h, const Nat& order, const Nat& p);

/// Pollard rho with an additive 32-partition walk and Brent cycle
/// detection; restarts with fresh randomization on degenerate collisions.
/// `order` must be prime. Throws SolverBudgetError (carrying the iteration
/// count) once the budget is spent; max_iterations 0 picks one
/// proportional to sqrt(order).
Nat pollard_rho(const Nat& g, const Nat& h, const Nat& order, const Nat& p,
                RandomSource& rng, std::uint64_t max_iterations = 0);

/// Full-group instance over a safe prime: solve modulo q on the squared
/// instance, read the parity bit off the Jacobi symbol, and recombine by
/// CRT to x in [0, 2q). The result is re-exponentiated before returning.
Nat solve_safe_prime_dlog(const GroupParams& params, const Nat& h);

/// Dispatches on the generator order and verifies the result.
Nat solve(const DlpInstance& instance);

/// sk with g^sk = pk, in [0, order(g)).
Nat recover_private_key(const GroupParams& params, const Nat& pk);

struct KeyRecovery {
  std::optional<Nat> sk;
  std::string error;      // set when sk is empty
  double seconds = 0.0;

  bool ok() const { return sk.has_value(); }
};

/// Recovers the three level keys independently, on up to `workers`
/// concurrent solvers. A failed level is reported in its slot without
/// aborting the others.
std::array<KeyRecovery, 3> recover_multi_keys(const MultiParams& mp,
                                              const std::array<Nat, 3>& pks,
                                              unsigned workers = 3);

}  // namespace mvcrypt
