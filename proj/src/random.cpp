// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "mvcrypt/random.hpp"

#include <random>

#include "mvcrypt/error.hpp"

namespace mvcrypt {

RandomSource::RandomSource() { gmp_randinit_mt(state_); }

RandomSource::RandomSource(RandomSource&& other) noexcept {
  gmp_randinit_set(state_, other.state_);
}

RandomSource::~RandomSource() { gmp_randclear(state_); }

RandomSource RandomSource::seeded(std::uint64_t seed) {
  RandomSource r;
  gmp_randseed_ui(r.state_, static_cast<unsigned long>(seed));
  return r;
}

RandomSource RandomSource::from_os_entropy() {
  RandomSource r;
  std::random_device dev;
  Nat seed = 0;
  for (int i = 0; i < 8; ++i) {
    seed <<= 32;
    seed += static_cast<unsigned long>(dev());
  }
  gmp_randseed(r.state_, seed.get_mpz_t());
  return r;
}

Nat RandomSource::below(const Nat& bound) {
  if (bound < 1) throw ParamError("RandomSource::below: bound must be >= 1");
  Nat out;
  mpz_urandomm(out.get_mpz_t(), state_, bound.get_mpz_t());
  return out;
}

Nat RandomSource::bits(std::size_t nbits) {
  Nat out;
  mpz_urandomb(out.get_mpz_t(), state_, nbits);
  return out;
}

std::uint64_t RandomSource::next_u64() {
  Nat out;
  mpz_urandomb(out.get_mpz_t(), state_, 64);
  return static_cast<std::uint64_t>(mpz_get_ui(out.get_mpz_t()));
}

double RandomSource::unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

RandomSource RandomSource::fork() {
  RandomSource child;
  Nat seed = bits(256);
  gmp_randseed(child.state_, seed.get_mpz_t());
  return child;
}

}  // namespace mvcrypt
