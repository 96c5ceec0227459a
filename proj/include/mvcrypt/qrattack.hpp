// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mvcrypt/elgamal.hpp"
#include "mvcrypt/modmath.hpp"

namespace mvcrypt {

enum class QrClass { kResidue, kNonResidue };

const char* to_string(QrClass c);

/// The candidate identifier a ballot encrypts: a 32-bit unsigned integer.
using DeputyId = std::uint32_t;

/// Residuosity class of a nonzero value mod p.
QrClass class_of(const Nat& value, const Nat& p);

/// The leak: under a QR-subgroup generator, jacobi(b, p) equals the
/// plaintext's class for every encryption randomness, so a ciphertext
/// alone reveals it. Throws AttackInapplicableError for full-group
/// params, where b's class mixes in pk^r and is not determined by m.
QrClass plaintext_class(const Ciphertext& ct, const GroupParams& params);

enum class MessageEncoding {
  kRaw,      // modified version: any integer in [1, p-1]
  kSquared,  // final version: m^2, always a residue
};

/// Plays the semantic-security game `trials` times: sample one message per
/// class, encrypt a coin-flipped choice, guess from the ciphertext class.
/// Returns |win rate - 1/2| * 2: 1.0 for raw encoding, ~0 for squared.
double distinguisher_game(const GroupParams& params, std::uint64_t trials,
                          RandomSource& rng,
                          MessageEncoding encoding = MessageEncoding::kRaw);

/// Residuosity class of each id lifted into F_p^*.
std::map<DeputyId, QrClass> classify_ids(const std::vector<DeputyId>& ids,
                                         const Nat& p);

struct TwoCandidateTally {
  std::uint64_t votes_a = 0;
  std::uint64_t votes_b = 0;
  std::vector<int> per_ballot;  // 0 = id_a, 1 = id_b, in ballot order
};

/// Decodes every ballot of a two-candidate election whose ids fall in
/// distinct residuosity classes, with no key material. Throws
/// AmbiguityError when the ids share a class.
TwoCandidateTally two_candidate_decode(const std::vector<Ciphertext>& ballots,
                                       DeputyId id_a, DeputyId id_b,
                                       const GroupParams& params);

}  // namespace mvcrypt
