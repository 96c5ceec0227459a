// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "mvcrypt/qrattack.hpp"

#include <cmath>

#include "mvcrypt/error.hpp"

namespace mvcrypt {

const char* to_string(QrClass c) {
  return c == QrClass::kResidue ? "residue" : "non-residue";
}

QrClass class_of(const Nat& value, const Nat& p) {
  const int symbol = jacobi(value, p);
  if (symbol == 0)
    throw ParamError("class_of: value is not an element of F_p^*");
  return symbol == 1 ? QrClass::kResidue : QrClass::kNonResidue;
}

QrClass plaintext_class(const Ciphertext& ct, const GroupParams& params) {
  if (params.g_order != GeneratorOrder::kQrSubgroup)
    throw AttackInapplicableError(
        "plaintext_class: requires a QR-subgroup generator; with a full-group "
        "generator jacobi(b) mixes pk^r into the plaintext's class");
  // g and pk are squares, so pk^r is a square and b = pk^r * m carries
  // exactly m's class, whatever r was.
  return class_of(ct.b, params.p);
}

namespace {

Nat sample_with_class(const GroupParams& params, const Nat& hi, QrClass want,
                      RandomSource& rng) {
  for (;;) {
    const Nat m = 1 + rng.below(hi);
    if (class_of(m, params.p) == want) return m;
  }
}

}  // namespace

double distinguisher_game(const GroupParams& params, std::uint64_t trials,
                          RandomSource& rng, MessageEncoding encoding) {
  if (params.g_order != GeneratorOrder::kQrSubgroup)
    throw AttackInapplicableError(
        "distinguisher_game: requires QR-subgroup params");
  if (trials == 0) return 0.0;

  const KeyPair kp = keygen(params, rng);
  // Squared encoding restricts messages to the decodable half-range.
  const Nat hi = encoding == MessageEncoding::kSquared ? Nat((params.p - 1) / 2)
                                                       : Nat(params.p - 1);

  std::uint64_t wins = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Nat m0 = sample_with_class(params, hi, QrClass::kResidue, rng);
    const Nat m1 = sample_with_class(params, hi, QrClass::kNonResidue, rng);
    const int bit = static_cast<int>(to_u64(rng.below(2)));
    const Nat& m = bit == 0 ? m0 : m1;
    const Nat pt =
        encoding == MessageEncoding::kSquared ? encode_qr(m, params.p) : m;
    const Ciphertext ct = encrypt(params, kp.pk, pt, rng);
    const int guess =
        plaintext_class(ct, params) == QrClass::kResidue ? 0 : 1;
    if (guess == bit) ++wins;
  }
  const double rate = static_cast<double>(wins) / static_cast<double>(trials);
  return std::abs(rate - 0.5) * 2.0;
}

std::map<DeputyId, QrClass> classify_ids(const std::vector<DeputyId>& ids,
                                         const Nat& p) {
  std::map<DeputyId, QrClass> out;
  for (const DeputyId id : ids) {
    if (id == 0)
      throw ParamError("classify_ids: id 0 is not an element of F_p^*");
    out.emplace(id, class_of(nat_from_u64(id), p));
  }
  return out;
}

TwoCandidateTally two_candidate_decode(const std::vector<Ciphertext>& ballots,
                                       DeputyId id_a, DeputyId id_b,
                                       const GroupParams& params) {
  const auto classes = classify_ids({id_a, id_b}, params.p);
  const QrClass class_a = classes.at(id_a);
  const QrClass class_b = classes.at(id_b);
  if (class_a == class_b)
    throw AmbiguityError(
        "two_candidate_decode: both ids fall in the same residuosity class; "
        "only aggregate class counts are recoverable");

  TwoCandidateTally tally;
  tally.per_ballot.reserve(ballots.size());
  for (const Ciphertext& ct : ballots) {
    const bool is_a = plaintext_class(ct, params) == class_a;
    tally.per_ballot.push_back(is_a ? 0 : 1);
    if (is_a)
      ++tally.votes_a;
    else
      ++tally.votes_b;
  }
  return tally;
}

}  // namespace mvcrypt
