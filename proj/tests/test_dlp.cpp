// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "mvcrypt/dlp.hpp"

#include <doctest.h>

#include <chrono>

#include "mvcrypt/error.hpp"

using namespace mvcrypt;

namespace {

GroupParams full23() { return GroupParams::checked(23, 5, GeneratorOrder::kFullGroup); }
GroupParams qr23() { return GroupParams::checked(23, 4, GeneratorOrder::kQrSubgroup); }

// Independent oracle: exhaustive scan of g^x.
Nat exhaustive_dlog(const Nat& g, const Nat& h, std::uint64_t order,
                    const Nat& p) {
  Nat cur = 1;
  for (std::uint64_t x = 0; x < order; ++x) {
    if (cur == h) return nat_from_u64(x);
    cur = cur * g % p;
  }
  throw SolverError("oracle: not in subgroup");
}

double elapsed_s(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

TEST_CASE("bsgs: frozen small cases and exhaustive agreement") {
  CHECK(bsgs(4, 18, 11, 23) == 3);
  CHECK(bsgs(4, 1, 11, 23) == 0);
  for (std::uint64_t x = 0; x < 11; ++x) {
    const Nat h = mod_pow(4, x, 23);
    CHECK(bsgs(4, h, 11, 23) == exhaustive_dlog(4, h, 11, 23));
    CHECK(bsgs(4, h, 11, 23) == x);
  }
  // full-group order 22 also works (bsgs has no primality requirement)
  for (std::uint64_t x = 0; x < 22; ++x)
    CHECK(bsgs(5, mod_pow(5, x, 23), 22, 23) == x);
}

TEST_CASE("bsgs: not-found and parameter errors") {
  // 5 is a non-residue, hence outside the order-11 subgroup of 4.
  CHECK_THROWS_AS(bsgs(4, 5, 11, 23), SolverError);
  CHECK_THROWS_AS(bsgs(4, 18, 10, 23), ParamError);  // wrong order for g
  CHECK_THROWS_AS(bsgs(4, 18, Nat(1) << 51, 23), ParamError);
  CHECK_THROWS_AS(bsgs(0, 18, 11, 23), ParamError);
}

TEST_CASE("pollard_rho: frozen small cases") {
  RandomSource rng = RandomSource::seeded(21);
  CHECK(pollard_rho(4, 4, 11, 23, rng) == 1);
  CHECK(pollard_rho(4, 18, 11, 23, rng) == 3);
  CHECK(pollard_rho(4, 1, 11, 23, rng) == 0);
  CHECK_THROWS_AS(pollard_rho(5, 17, 22, 23, rng), ParamError);  // composite order
}

TEST_CASE("pollard_rho: budget exhaustion carries the iteration count") {
  RandomSource grng = RandomSource::seeded(31);
  const GroupParams params = gen_safe_prime(40, grng, GeneratorOrder::kQrSubgroup);
  const Nat h = mod_pow(params.g, 123456789, params.p);
  RandomSource rng = RandomSource::seeded(32);
  try {
    pollard_rho(params.g, h, params.q, params.p, rng, 10);
    FAIL("expected SolverBudgetError");
  } catch (const SolverBudgetError& e) {
    CHECK(e.iterations() >= 1);
    CHECK(e.iterations() <= 10);
  }
}

TEST_CASE("solvers agree with each other and the oracle at small orders") {
  RandomSource rng = RandomSource::seeded(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t bits = 6 + static_cast<std::size_t>(to_u64(rng.below(10)));
    const GroupParams params =
        gen_safe_prime(bits, rng,
                       trial % 2 ? GeneratorOrder::kQrSubgroup
                                 : GeneratorOrder::kFullGroup);
    // rho needs a prime order, so exercise it inside the q-subgroup.
    const Nat gq = params.g_order == GeneratorOrder::kQrSubgroup
                       ? params.g
                       : params.g * params.g % params.p;
    const std::uint64_t q = to_u64(params.q);
    const Nat h = mod_pow(gq, rng.below(params.q), params.p);
    const Nat expected = exhaustive_dlog(gq, h, q, params.p);
    CHECK(bsgs(gq, h, params.q, params.p) == expected);
    CHECK(pollard_rho(gq, h, params.q, params.p, rng) == expected);
  }
}

TEST_CASE("bsgs and rho agree on 100 instances over a 40-bit safe prime") {
  RandomSource rng = RandomSource::seeded(51);
  const GroupParams params = gen_safe_prime(40, rng, GeneratorOrder::kQrSubgroup);
  for (int i = 0; i < 100; ++i) {
    const Nat x = rng.below(params.q);
    const Nat h = mod_pow(params.g, x, params.p);
    CHECK(bsgs(params.g, h, params.q, params.p) == x);
    CHECK(pollard_rho(params.g, h, params.q, params.p, rng) == x);
  }
}

TEST_CASE("solvers handle moduli beyond 64 bits") {
  // Build a prime p = k * r + 1 just above 2^64 with a known order-r
  // subgroup, forcing the arbitrary-precision code path.
  const Nat r = 10007;
  Nat k = (Nat(1) << 64) / r + 1;
  Nat p;
  Nat g = 0;
  for (;; ++k) {
    p = k * r + 1;
    if (!is_probable_prime(p)) continue;
    const Nat candidate = mod_pow(3, k, p);
    if (candidate != 1) {
      g = candidate;
      break;
    }
  }
  REQUIRE(bit_length(p) > 64);
  REQUIRE(mod_pow(g, r, p) == 1);

  RandomSource rng = RandomSource::seeded(61);
  for (int i = 0; i < 5; ++i) {
    const Nat x = rng.below(r);
    const Nat h = mod_pow(g, x, p);
    CHECK(bsgs(g, h, r, p) == x);
    CHECK(pollard_rho(g, h, r, p, rng) == x);
  }
}

TEST_CASE("solve_safe_prime_dlog: frozen values and parity") {
  const GroupParams params = full23();
  CHECK(exhaustive_dlog(5, 17, 22, 23) == 7);
  CHECK(solve_safe_prime_dlog(params, 17) == 7);
  CHECK(jacobi(17, 23) == -1);  // odd exponent, parity bit set
  CHECK(solve_safe_prime_dlog(params, 1) == 0);
  CHECK(solve_safe_prime_dlog(params, 22) == 11);  // g^q = -1

  for (std::uint64_t h = 1; h < 23; ++h) {
    const Nat x = solve_safe_prime_dlog(params, h);
    CHECK(x == exhaustive_dlog(5, h, 22, 23));
    const int parity_bit = (1 - jacobi(h, 23)) / 2;
    CHECK(Nat(x % 2) == parity_bit);
  }
  CHECK_THROWS_AS(solve_safe_prime_dlog(qr23(), 2), ParamError);
}

TEST_CASE("recover_private_key inverts keygen") {
  CHECK(recover_private_key(full23(), 1) == 0);
  CHECK(recover_private_key(full23(), 5) == 1);
  CHECK(recover_private_key(qr23(), 4) == 1);

  RandomSource rng = RandomSource::seeded(71);
  const GroupParams full = gen_safe_prime(40, rng, GeneratorOrder::kFullGroup);
  const GroupParams qr = gen_safe_prime(40, rng, GeneratorOrder::kQrSubgroup);
  for (int i = 0; i < 25; ++i) {
    const KeyPair kf = keygen(full, rng);
    CHECK(recover_private_key(full, kf.pk) == kf.sk);
    const KeyPair kq = keygen(qr, rng);
    CHECK(recover_private_key(qr, kq.pk) == kq.sk);
  }
}

TEST_CASE("solve rejects targets outside the subgroup") {
  // 5 is a non-residue mod 23: not in the order-11 subgroup of 4.
  CHECK_THROWS_AS(solve(DlpInstance{qr23(), 5}), ParamError);
}

TEST_CASE("recover_multi_keys: end-to-end and worker counts") {
  RandomSource rng = RandomSource::seeded(81);
  std::array<GroupParams, 3> levels = {
      gen_safe_prime(28, rng, GeneratorOrder::kFullGroup),
      gen_safe_prime(30, rng, GeneratorOrder::kFullGroup),
      gen_safe_prime(32, rng, GeneratorOrder::kFullGroup)};
  const MultiParams mp = MultiParams::checked(std::move(levels));
  const auto keys = multi_keygen(mp, rng);
  const std::array<Nat, 3> pks = {keys[0].pk, keys[1].pk, keys[2].pk};

  const auto t0 = std::chrono::steady_clock::now();
  const auto seq = recover_multi_keys(mp, pks, 1);
  const double t_seq = elapsed_s(t0);
  const auto t1 = std::chrono::steady_clock::now();
  const auto par = recover_multi_keys(mp, pks, 3);
  const double t_par = elapsed_s(t1);

  for (int i = 0; i < 3; ++i) {
    REQUIRE(seq[i].ok());
    REQUIRE(par[i].ok());
    CHECK(*seq[i].sk == keys[i].sk);
    CHECK(*par[i].sk == *seq[i].sk);
    CHECK(mod_pow(mp.level[i].g, *par[i].sk, mp.level[i].p) == pks[i]);
  }

  // Smoke check only; scheduling noise makes a strict bound meaningless.
  WARN_LE(t_par, t_seq * 2.0 + 0.05);

  // Recovered keys decrypt a fresh ciphertext.
  const Nat m = 1 + rng.below(mp.level[0].p - 1);
  const MultiCiphertext mct = multi_encrypt(mp, pks, m, rng);
  CHECK(multi_decrypt(mp, {*par[0].sk, *par[1].sk, *par[2].sk}, mct) == m);
}
