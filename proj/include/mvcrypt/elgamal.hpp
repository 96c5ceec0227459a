// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>

#include "mvcrypt/modmath.hpp"
#include "mvcrypt/random.hpp"

namespace mvcrypt {

/// The deployed scheme's three historical revisions. The primitives below
/// are version-agnostic; the version only selects parameter shape and
/// message encoding at the harness/CLI layer.
///   kOriginal: three-level chain over full-group generators, small primes
///   kModified: single level, 1024-bit prime, QR generator, raw messages
///   kFinal:    like kModified but messages squared before encryption
enum class SchemeVersion { kOriginal, kModified, kFinal };

struct KeyPair {
  Nat sk;  // secret exponent in [0, q)
  Nat pk;  // g^sk mod p

  static KeyPair from_secret(const GroupParams& params, Nat sk);
};

struct Ciphertext {
  Nat a;  // g^r
  Nat b;  // pk^r * m
};

/// Three chained groups with strictly increasing moduli, so that lifting a
/// level-i element into level i+1 loses no information.
struct MultiParams {
  std::array<GroupParams, 3> level;

  static MultiParams checked(std::array<GroupParams, 3> level);
};

/// The quadruple that survives multilevel encryption; a1 and a2 are
/// discarded after use.
struct MultiCiphertext {
  Nat b1;  // mod p1
  Nat b2;  // mod p2
  Nat a3;  // mod p3
  Nat b3;  // mod p3
};

struct MultiKeySet {
  MultiParams params;
  std::array<KeyPair, 3> keys;
};

KeyPair keygen(const GroupParams& params, RandomSource& rng);

std::array<KeyPair, 3> multi_keygen(const MultiParams& mp, RandomSource& rng);

/// Textbook encryption (g^r, pk^r * m) with fresh r uniform in [0, q).
/// Accepts any m in [1, p-1]; whether that range is safe is exactly the
/// question the qrattack module answers.
Ciphertext encrypt(const GroupParams& params, const Nat& pk, const Nat& m,
                   RandomSource& rng);

/// Same with caller-chosen randomness r in [0, q); used by tests and the
/// known-randomness leak demonstrations.
Ciphertext encrypt_with_randomness(const GroupParams& params, const Nat& pk,
                                   const Nat& m, const Nat& r);

/// b * (a^sk)^-1 mod p.
Nat decrypt(const GroupParams& params, const Nat& sk, const Ciphertext& ct);

/// Chained encryption: (a1,b1) = Enc_1(m), (a2,b2) = Enc_2(a1),
/// (a3,b3) = Enc_3(a2); returns (b1, b2, a3, b3). m in [1, p1-1].
MultiCiphertext multi_encrypt(const MultiParams& mp,
                              const std::array<Nat, 3>& pks, const Nat& m,
                              RandomSource& rng);

MultiCiphertext multi_encrypt_with_randomness(const MultiParams& mp,
                                              const std::array<Nat, 3>& pks,
                                              const Nat& m,
                                              const std::array<Nat, 3>& rs);

/// Decryption chain; throws CorruptionError if a recovered intermediate
/// does not fit the next level down (impossible for honest ciphertexts).
Nat multi_decrypt(const MultiParams& mp, const std::array<Nat, 3>& sks,
                  const MultiCiphertext& mct);

/// Final-version message encoding: m^2 mod p, always a quadratic residue.
/// Requires 1 <= m <= (p-1)/2 so decoding is unambiguous.
Nat encode_qr(const Nat& m, const Nat& p);

/// Inverse of encode_qr: the square root in [1, (p-1)/2].
Nat decode_qr(const Nat& c, const Nat& p);

}  // namespace mvcrypt
