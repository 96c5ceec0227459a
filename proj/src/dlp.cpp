// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "mvcrypt/dlp.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>
#include <unordered_map>
#include <vector>

#include "mvcrypt/error.hpp"

namespace mvcrypt {

namespace {

// Exponent arithmetic always fits 64 bits (order <= 2^50); only the group
// elements need arbitrary precision, and only when p does not fit a word.

struct U64Group {
  using Elem = std::uint64_t;
  std::uint64_t p;

  static Elem from_nat(const Nat& x) { return to_u64(x); }
  static Nat to_nat(Elem x) { return nat_from_u64(x); }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % p);
  }
  Elem pow(Elem base, std::uint64_t e) const {
    Elem acc = 1 % p;
    while (e != 0) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }
  static std::uint64_t low_bits(Elem x) { return x; }
  static std::uint64_t hash(Elem x) { return x; }
};

struct MpzGroup {
  using Elem = Nat;
  Nat p;

  static Elem from_nat(const Nat& x) { return x; }
  static Nat to_nat(const Elem& x) { return x; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b % p; }
  Elem pow(const Elem& base, std::uint64_t e) const {
    return mod_pow(base, nat_from_u64(e), p);
  }
  static std::uint64_t low_bits(const Elem& x) {
    return mpz_get_ui(x.get_mpz_t());
  }
  static std::uint64_t hash(const Elem& x) {
    return mpz_get_ui(x.get_mpz_t()) ^ (mpz_size(x.get_mpz_t()) << 56);
  }
};

std::uint64_t isqrt_ceil(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  while (r > 0 && (r - 1) * (r - 1) >= n) --r;
  while (r * r < n) ++r;
  return r;
}

template <class G>
Nat bsgs_core(const G& grp, typename G::Elem g, typename G::Elem h,
              std::uint64_t order) {
  const std::uint64_t m = std::max<std::uint64_t>(1, isqrt_ceil(order));

  struct ElemHash {
    std::size_t operator()(const typename G::Elem& e) const {
      return static_cast<std::size_t>(G::hash(e));
    }
  };
  std::unordered_map<typename G::Elem, std::uint32_t, ElemHash> baby;
  baby.reserve(m);

  typename G::Elem cur = grp.pow(g, 0);
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(cur, static_cast<std::uint32_t>(j));  // keep smallest j
    cur = grp.mul(cur, g);
  }

  const typename G::Elem giant = grp.pow(grp.pow(g, order - 1), m);  // g^-m
  typename G::Elem gamma = h;
  for (std::uint64_t i = 0; i <= m; ++i) {
    auto it = baby.find(gamma);
    if (it != baby.end()) {
      const std::uint64_t x = (i * m + it->second) % order;
      if (grp.pow(g, x) == h) return nat_from_u64(x);
    }
    gamma = grp.mul(gamma, giant);
  }
  throw SolverError("bsgs: target not found in the subgroup");
}

// Additive walk: 32 partitions, each multiplying by g^a_s * h^b_s, with
// exponent pairs tracked mod the (prime) order. Brent cycle detection.
template <class G>
Nat rho_core(const G& grp, typename G::Elem g, typename G::Elem h,
             std::uint64_t order, RandomSource& rng, std::uint64_t budget) {
  constexpr int kPartitions = 32;
  const auto add = [order](std::uint64_t a, std::uint64_t b) {
    return (a + b) % order;
  };
  const auto mul_mod_order = [order](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b %
                                      order);
  };
  const auto inv_mod_order = [&](std::uint64_t a) {
    // order is prime, so a^(order-2) inverts a != 0.
    std::uint64_t acc = 1, base = a % order, e = order - 2;
    while (e != 0) {
      if (e & 1) acc = mul_mod_order(acc, base);
      base = mul_mod_order(base, base);
      e >>= 1;
    }
    return acc;
  };

  std::uint64_t used = 0;
  while (used < budget) {
    std::uint64_t step_a[kPartitions], step_b[kPartitions];
    typename G::Elem step_m[kPartitions];
    for (int s = 0; s < kPartitions; ++s) {
      step_a[s] = to_u64(rng.below(nat_from_u64(order)));
      step_b[s] = to_u64(rng.below(nat_from_u64(order)));
      step_m[s] = grp.mul(grp.pow(g, step_a[s]), grp.pow(h, step_b[s]));
    }

    std::uint64_t a = to_u64(rng.below(nat_from_u64(order)));
    std::uint64_t b = to_u64(rng.below(nat_from_u64(order)));
    typename G::Elem x = grp.mul(grp.pow(g, a), grp.pow(h, b));

    typename G::Elem slow = x;
    std::uint64_t slow_a = a, slow_b = b;
    std::uint64_t power = 1, lam = 0;
    bool collided = false;

    while (used < budget) {
      const int s = static_cast<int>(G::low_bits(x) & (kPartitions - 1));
      x = grp.mul(x, step_m[s]);
      a = add(a, step_a[s]);
      b = add(b, step_b[s]);
      ++used;
      ++lam;
      if (x == slow) {
        collided = true;
        break;
      }
      if (lam == power) {  // Brent: teleport the anchor
        slow = x;
        slow_a = a;
        slow_b = b;
        power <<= 1;
        lam = 0;
      }
    }
    if (!collided) break;

    // g^a h^b = g^slow_a h^slow_b  =>  x * (b - slow_b) = slow_a - a.
    const std::uint64_t db = add(b, order - slow_b % order);
    if (db == 0) continue;  // degenerate; rerandomize the walk
    const std::uint64_t da = add(slow_a, order - a % order);
    const std::uint64_t x_log = mul_mod_order(da, inv_mod_order(db));
    if (grp.pow(g, x_log) == h) return nat_from_u64(x_log);
    // h outside <g> or a false identity; rerandomize.
  }
  throw SolverBudgetError("pollard_rho: iteration budget exhausted", used);
}

std::uint64_t checked_order(const Nat& order, std::uint64_t ceiling,
                            const char* what) {
  if (order < 1) throw ParamError("solver: order must be >= 1");
  if (order > nat_from_u64(ceiling)) throw ParamError(what);
  return to_u64(order);
}

void check_solver_inputs(const Nat& g, const Nat& h, const Nat& p) {
  if (p < 2) throw ParamError("solver: modulus must be >= 2");
  if (g < 1 || g > p - 1 || h < 1 || h > p - 1)
    throw ParamError("solver: g and h must lie in [1, p-1]");
}

std::uint64_t default_rho_budget(std::uint64_t order) {
  const std::uint64_t root = isqrt_ceil(order);
  return 1000 + 64 * root;
}

}  // namespace

Nat bsgs(const Nat& g, const Nat& h, const Nat& order, const Nat& p) {
  check_solver_inputs(g, h, p);
  const std::uint64_t ord = checked_order(
      order, kMaxBsgsOrder, "bsgs: order exceeds the 2^50 memory bound");
  if (mod_pow(g, order, p) != 1)
    throw ParamError("bsgs: g does not have the stated order");
  if (fits_u64(p)) {
    const U64Group grp{to_u64(p)};
    return bsgs_core(grp, U64Group::from_nat(g), U64Group::from_nat(h), ord);
  }
  const MpzGroup grp{p};
  return bsgs_core(grp, g, h, ord);
}

Nat pollard_rho(const Nat& g, const Nat& h, const Nat& order, const Nat& p,
                RandomSource& rng, std::uint64_t max_iterations) {
  check_solver_inputs(g, h, p);
  const std::uint64_t ord = checked_order(
      order, kMaxGenericOrder,
      "pollard_rho: order exceeds the 2^56 generic-solver ceiling");
  if (!is_probable_prime(order))
    throw ParamError("pollard_rho: order must be prime");
  if (mod_pow(g, order, p) != 1)
    throw ParamError("pollard_rho: g does not have the stated order");
  const std::uint64_t budget =
      max_iterations != 0 ? max_iterations : default_rho_budget(ord);
  if (fits_u64(p)) {
    const U64Group grp{to_u64(p)};
    return rho_core(grp, U64Group::from_nat(g), U64Group::from_nat(h), ord, rng,
                    budget);
  }
  const MpzGroup grp{p};
  return rho_core(grp, g, h, ord, rng, budget);
}

namespace {

// Prime-order solve with automatic algorithm choice.
Nat solve_prime_order(const Nat& g, const Nat& h, const Nat& order,
                      const Nat& p, std::uint64_t max_iterations) {
  if (order <= nat_from_u64(kBsgsMaxOrder)) return bsgs(g, h, order, p);
  RandomSource rng = RandomSource::seeded(0x726f68706c6c6fULL);
  return pollard_rho(g, h, order, p, rng, max_iterations);
}

}  // namespace

namespace {

Nat solve_full_group(const GroupParams& params, const Nat& h,
                     std::uint64_t max_iterations) {
  if (params.g_order != GeneratorOrder::kFullGroup)
    throw ParamError(
        "solve_safe_prime_dlog: params must use a full-group generator");
  check_solver_inputs(params.g, h, params.p);

  // Square both sides into the order-q subgroup, solve there, then pin the
  // lost parity bit with a Jacobi symbol and recombine by CRT.
  const Nat g_sq = params.g * params.g % params.p;
  const Nat h_sq = h * h % params.p;
  const Nat x_mod_q =
      solve_prime_order(g_sq, h_sq, params.q, params.p, max_iterations);

  const int parity = jacobi(h, params.p) == 1 ? 0 : 1;
  Nat x = x_mod_q;
  if (mpz_tstbit(x.get_mpz_t(), 0) != parity) x += params.q;

  if (mod_pow(params.g, x, params.p) != h)
    throw InternalError("solve_safe_prime_dlog: reexponentiation check failed");
  return x;
}

}  // namespace

Nat solve_safe_prime_dlog(const GroupParams& params, const Nat& h) {
  return solve_full_group(params, h, 0);
}

Nat solve(const DlpInstance& instance) {
  const GroupParams& params = instance.params;
  check_solver_inputs(params.g, instance.target, params.p);
  const Nat order = params.group_order();
  if (mod_pow(instance.target, order, params.p) != 1)
    throw ParamError("solve: target is not in the subgroup generated by g");

  Nat x;
  if (params.g_order == GeneratorOrder::kFullGroup) {
    x = solve_full_group(params, instance.target, instance.max_iterations);
  } else {
    x = solve_prime_order(params.g, instance.target, params.q, params.p,
                          instance.max_iterations);
  }
  if (mod_pow(params.g, x, params.p) != instance.target)
    throw InternalError("solve: reexponentiation check failed");
  return x;
}

Nat recover_private_key(const GroupParams& params, const Nat& pk) {
  return solve(DlpInstance{params, pk});
}

std::array<KeyRecovery, 3> recover_multi_keys(const MultiParams& mp,
                                              const std::array<Nat, 3>& pks,
                                              unsigned workers) {
  std::array<KeyRecovery, 3> out;
  std::atomic<int> next{0};

  const auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= 3) return;
      const auto start = std::chrono::steady_clock::now();
      try {
        out[i].sk = recover_private_key(mp.level[i], pks[i]);
      } catch (const Error& e) {
        out[i].error = e.what();
      }
      out[i].seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
              .count();
    }
  };

  const unsigned n_threads = std::clamp(workers, 1u, 3u);
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace mvcrypt
