// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "mvcrypt/elgamal.hpp"

#include <utility>

#include "mvcrypt/error.hpp"

namespace mvcrypt {

KeyPair KeyPair::from_secret(const GroupParams& params, Nat sk) {
  if (sk < 0 || sk >= params.q)
    throw ParamError("key pair: secret exponent out of [0, q)");
  Nat pk = mod_pow(params.g, sk, params.p);
  return KeyPair{std::move(sk), std::move(pk)};
}

KeyPair keygen(const GroupParams& params, RandomSource& rng) {
  return KeyPair::from_secret(params, rng.below(params.q));
}

std::array<KeyPair, 3> multi_keygen(const MultiParams& mp, RandomSource& rng) {
  return {keygen(mp.level[0], rng), keygen(mp.level[1], rng),
          keygen(mp.level[2], rng)};
}

namespace {

void check_element(const Nat& x, const Nat& p, const char* what) {
  if (x < 1 || x > p - 1)
    throw ParamError(std::string(what) + " out of range [1, p-1]");
}

}  // namespace

Ciphertext encrypt_with_randomness(const GroupParams& params, const Nat& pk,
                                   const Nat& m, const Nat& r) {
  check_element(m, params.p, "message");
  check_element(pk, params.p, "public key");
  if (r < 0 || r >= params.q)
    throw ParamError("encryption randomness out of [0, q)");
  Nat a = mod_pow(params.g, r, params.p);
  Nat b = mod_pow(pk, r, params.p) * m % params.p;
  return Ciphertext{std::move(a), std::move(b)};
}

Ciphertext encrypt(const GroupParams& params, const Nat& pk, const Nat& m,
                   RandomSource& rng) {
  return encrypt_with_randomness(params, pk, m, rng.below(params.q));
}

Nat decrypt(const GroupParams& params, const Nat& sk, const Ciphertext& ct) {
  check_element(ct.a, params.p, "ciphertext a");
  check_element(ct.b, params.p, "ciphertext b");
  const Nat a_sk = mod_pow(ct.a, sk, params.p);
  return ct.b * mod_inv(a_sk, params.p) % params.p;
}

MultiParams MultiParams::checked(std::array<GroupParams, 3> level) {
  if (!(level[0].p < level[1].p && level[1].p < level[2].p))
    throw ParamError("multilevel params: moduli must satisfy p1 < p2 < p3");
  return MultiParams{std::move(level)};
}

MultiCiphertext multi_encrypt_with_randomness(const MultiParams& mp,
                                              const std::array<Nat, 3>& pks,
                                              const Nat& m,
                                              const std::array<Nat, 3>& rs) {
  // Each a_i is lifted to a plain integer and used as the next level's
  // message; p1 < p2 < p3 makes the lift lossless.
  auto [a1, b1] = encrypt_with_randomness(mp.level[0], pks[0], m, rs[0]);
  auto [a2, b2] = encrypt_with_randomness(mp.level[1], pks[1], a1, rs[1]);
  auto [a3, b3] = encrypt_with_randomness(mp.level[2], pks[2], a2, rs[2]);
  return MultiCiphertext{std::move(b1), std::move(b2), std::move(a3),
                         std::move(b3)};
}

MultiCiphertext multi_encrypt(const MultiParams& mp,
                              const std::array<Nat, 3>& pks, const Nat& m,
                              RandomSource& rng) {
  const std::array<Nat, 3> rs = {rng.below(mp.level[0].q),
                                 rng.below(mp.level[1].q),
                                 rng.below(mp.level[2].q)};
  return multi_encrypt_with_randomness(mp, pks, m, rs);
}

Nat multi_decrypt(const MultiParams& mp, const std::array<Nat, 3>& sks,
                  const MultiCiphertext& mct) {
  check_element(mct.b1, mp.level[0].p, "ciphertext b1");
  check_element(mct.b2, mp.level[1].p, "ciphertext b2");
  check_element(mct.a3, mp.level[2].p, "ciphertext a3");
  check_element(mct.b3, mp.level[2].p, "ciphertext b3");

  const Nat a2 = decrypt(mp.level[2], sks[2], Ciphertext{mct.a3, mct.b3});
  if (a2 >= mp.level[1].p)
    throw CorruptionError("multilevel ciphertext: recovered a2 >= p2");
  const Nat a1 = decrypt(mp.level[1], sks[1], Ciphertext{a2, mct.b2});
  if (a1 >= mp.level[0].p)
    throw CorruptionError("multilevel ciphertext: recovered a1 >= p1");
  return decrypt(mp.level[0], sks[0], Ciphertext{a1, mct.b1});
}

Nat encode_qr(const Nat& m, const Nat& p) {
  if (m < 1 || m > (p - 1) / 2)
    throw ParamError("encode_qr: message must lie in [1, (p-1)/2]");
  return m * m % p;
}

Nat decode_qr(const Nat& c, const Nat& p) {
  const Nat r = sqrt_mod(c, p);
  const Nat other = p - r;
  return r < other ? r : other;
}

}  // namespace mvcrypt
