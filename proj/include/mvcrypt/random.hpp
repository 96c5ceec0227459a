// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>

#include "mvcrypt/nat.hpp"

namespace mvcrypt {

/// Injectable randomness source. Deterministic when seeded, so every
/// simulation and attack scenario can be replayed bit for bit. Instances
/// must not be shared across threads; give each worker its own (fork()).
class RandomSource {
 public:
  static RandomSource seeded(std::uint64_t seed);
  static RandomSource from_os_entropy();

  RandomSource(const RandomSource&) = delete;
  RandomSource& operator=(const RandomSource&) = delete;
  RandomSource(RandomSource&& other) noexcept;
  RandomSource& operator=(RandomSource&&) = delete;
  ~RandomSource();

  /// Uniform in [0, bound); bound >= 1.
  Nat below(const Nat& bound);

  /// Uniform in [0, 2^nbits).
  Nat bits(std::size_t nbits);

  std::uint64_t next_u64();

  /// Uniform in [0, 1) with 53 bits of precision.
  double unit();

  /// Derive an independent stream, consuming state from this one.
  RandomSource fork();

 private:
  RandomSource();

  gmp_randstate_t state_;
};

}  // namespace mvcrypt
