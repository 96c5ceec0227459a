// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "mvcrypt/modmath.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "mvcrypt/error.hpp"

namespace mvcrypt {

Nat GroupParams::group_order() const {
  return g_order == GeneratorOrder::kFullGroup ? Nat(2 * q) : q;
}

void GroupParams::validate(int mr_rounds) const {
  if (p != 2 * q + 1) throw ParamError("group params: p != 2q + 1");
  if (!is_probable_prime(p, mr_rounds))
    throw ParamError("group params: p is not prime");
  if (!is_probable_prime(q, mr_rounds))
    throw ParamError("group params: (p-1)/2 is not prime");
  if (g <= 1 || g >= p) throw ParamError("group params: g out of range");
  const Nat gq = mod_pow(g, q, p);
  if (g_order == GeneratorOrder::kQrSubgroup) {
    if (gq != 1)
      throw ParamError("group params: g does not generate the QR subgroup");
  } else {
    if (gq != p - 1)
      throw ParamError("group params: g does not generate the full group");
  }
}

GroupParams GroupParams::checked(Nat p, Nat g, GeneratorOrder g_order,
                                 int mr_rounds) {
  GroupParams params{std::move(p), 0, std::move(g), g_order};
  params.q = (params.p - 1) / 2;
  params.validate(mr_rounds);
  return params;
}

Nat mod_pow(const Nat& base, const Nat& exp, const Nat& modulus) {
  if (modulus < 2) throw ParamError("mod_pow: modulus must be >= 2");
  Nat out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(),
           modulus.get_mpz_t());
  return out;
}

Nat mod_inv(const Nat& a, const Nat& modulus) {
  if (modulus < 2) throw ParamError("mod_inv: modulus must be >= 2");
  Nat out;
  if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw ParamError("mod_inv: value is not invertible modulo " +
                     to_decimal(modulus));
  return out;
}

int jacobi(const Nat& a_in, const Nat& n_in) {
  if (n_in < 3 || mpz_even_p(n_in.get_mpz_t()))
    throw ParamError("jacobi: modulus must be odd and >= 3");
  Nat a = a_in % n_in;
  Nat n = n_in;
  int result = 1;
  while (a != 0) {
    const auto twos = mpz_scan1(a.get_mpz_t(), 0);
    if (twos > 0) {
      mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), twos);
      const auto n_mod_8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
      if ((twos & 1) && (n_mod_8 == 3 || n_mod_8 == 5)) result = -result;
    }
    // a and n are both odd here; flip per quadratic reciprocity, swap,
    // and reduce.
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3)
      result = -result;
    std::swap(a, n);
    a %= n;
  }
  return n == 1 ? result : 0;
}

Nat sqrt_mod(const Nat& a, const Nat& p) {
  if (p < 3 || p % 4 != 3)
    throw ParamError("sqrt_mod: modulus must be a prime congruent to 3 mod 4");
  const Nat reduced = a % p;
  const Nat r = mod_pow(reduced, (p + 1) / 4, p);
  if (r * r % p != reduced)
    throw ParamError("sqrt_mod: value is not a quadratic residue mod p");
  return r;
}

namespace {

bool trial_division_prime(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool miller_rabin(const Nat& n, int rounds) {
  Nat d = n - 1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  // Fixed-seed base selection keeps the test a pure function of (n, rounds).
  RandomSource rng = RandomSource::seeded(0x9e3779b97f4a7c15ULL);
  const Nat base_span = n - 3;  // bases drawn from [2, n-2]
  const Nat n_minus_1 = n - 1;

  for (int round = 0; round < rounds; ++round) {
    const Nat base = 2 + rng.below(base_span);
    Nat x = mod_pow(base, d, n);
    if (x == 1 || x == n_minus_1) continue;
    bool witness = true;
    for (mp_bitcnt_t i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n_minus_1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace

bool is_probable_prime(const Nat& n, int rounds) {
  if (rounds < 1) throw ParamError("is_probable_prime: rounds must be >= 1");
  if (n < (1 << 16)) return trial_division_prime(mpz_get_ui(n.get_mpz_t()));
  if (mpz_even_p(n.get_mpz_t())) return false;
  return miller_rabin(n, rounds);
}

namespace {

// Odd primes below 2^16, for sieving safe-prime candidates.
const std::vector<std::uint32_t>& small_odd_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t limit = 1 << 16;
    std::vector<bool> composite(limit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 3; i < limit; i += 2) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j < limit; j += 2 * i)
        composite[static_cast<std::uint32_t>(j)] = true;
    }
    return out;
  }();
  return primes;
}

bool single_mr_round(const Nat& n, unsigned long base) {
  Nat d = n - 1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Nat x = mod_pow(Nat(base), d, n);
  if (x == 1 || x == n - 1) return true;
  for (mp_bitcnt_t i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

// Direct sampling works fine up to 32 bits, where every primality test is
// cheap trial division or a handful of tiny Miller-Rabin rounds.
std::pair<Nat, Nat> sample_small_safe_prime(std::size_t bits,
                                            RandomSource& rng) {
  const Nat lo = Nat(1) << (bits - 2);  // q range: [2^(bits-2), 2^(bits-1))
  for (;;) {
    const Nat q = lo + rng.below(lo);
    if (!is_probable_prime(q, kDefaultMrRounds)) continue;
    const Nat p = 2 * q + 1;
    if (is_probable_prime(p, kDefaultMrRounds)) return {p, q};
  }
}

// Windowed search: pick a random odd start for q, sieve a window of odd
// candidates against small primes simultaneously for q and p = 2q+1, then
// confirm survivors with Miller-Rabin.
std::pair<Nat, Nat> sample_sieved_safe_prime(std::size_t bits,
                                             RandomSource& rng) {
  constexpr std::uint64_t kWindow = 1 << 14;  // odd candidates per window
  const Nat lo = Nat(1) << (bits - 2);
  const Nat span = lo - 2 * kWindow - 2;
  const auto& primes = small_odd_primes();

  for (;;) {
    Nat q0 = lo + rng.below(span);
    mpz_setbit(q0.get_mpz_t(), 0);  // odd

    std::vector<bool> bad(kWindow, false);
    for (const std::uint32_t r : primes) {
      const std::uint64_t m = mpz_fdiv_ui(q0.get_mpz_t(), r);
      const std::uint64_t inv2 = (r + 1) / 2;  // 2^-1 mod r
      const std::uint64_t inv4 = inv2 * inv2 % r;
      // q0 + 2k = 0 (mod r)
      std::uint64_t k = (r - m) % r * inv2 % r;
      for (; k < kWindow; k += r) bad[k] = true;
      // 2(q0 + 2k) + 1 = 0 (mod r)
      k = (r - (2 * m + 1) % r) % r * inv4 % r;
      for (; k < kWindow; k += r) bad[k] = true;
    }

    for (std::uint64_t k = 0; k < kWindow; ++k) {
      if (bad[k]) continue;
      const Nat q = q0 + 2 * k;
      if (!single_mr_round(q, 2)) continue;
      const Nat p = 2 * q + 1;
      if (!single_mr_round(p, 2)) continue;
      if (is_probable_prime(q, kDefaultMrRounds) &&
          is_probable_prime(p, kDefaultMrRounds))
        return {p, q};
    }
  }
}

}  // namespace

GroupParams gen_safe_prime(std::size_t bits, RandomSource& rng,
                           GeneratorOrder g_order) {
  if (bits < 3 || bits > 4096)
    throw ParamError("gen_safe_prime: bits must be in [3, 4096]");

  auto [p, q] = bits <= 32 ? sample_small_safe_prime(bits, rng)
                           : sample_sieved_safe_prime(bits, rng);

  // Smallest quadratic non-residue; its square generates the QR subgroup.
  Nat g = 2;
  while (jacobi(g, p) != -1) ++g;
  if (g_order == GeneratorOrder::kQrSubgroup) g = g * g % p;

  GroupParams params{std::move(p), std::move(q), std::move(g), g_order};
  return params;
}

}  // namespace mvcrypt
