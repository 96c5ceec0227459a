// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mvcrypt/dlp.hpp"
#include "mvcrypt/elgamal.hpp"
#include "mvcrypt/ledger.hpp"
#include "mvcrypt/qrattack.hpp"

namespace mvcrypt {

struct Candidate {
  std::string name;
  DeputyId id = 0;
};

struct SingleSetup {
  GroupParams params;
  KeyPair keys;
};

struct MultiSetup {
  MultiParams params;
  std::array<KeyPair, 3> keys;
};

/// A simulated election. Ballots carry nothing but the encrypted deputy
/// id, with no nonce and no metadata, which is the weakness under study.
/// Secret keys live here, with the simulated authority; attackers only
/// ever see a PublicElection.
struct Election {
  SchemeVersion version = SchemeVersion::kFinal;
  std::vector<Candidate> candidates;
  std::variant<SingleSetup, MultiSetup> setup;

  static Election create(SchemeVersion version,
                         std::vector<Candidate> candidates, GroupParams params,
                         RandomSource& rng);
  static Election create_multilevel(std::vector<Candidate> candidates,
                                    MultiParams params, RandomSource& rng);
};

struct PublicElection {
  SchemeVersion version = SchemeVersion::kFinal;
  std::vector<Candidate> candidates;
  std::variant<GroupParams, MultiParams> params;
  std::vector<Nat> public_keys;  // 1 or 3
};

PublicElection public_view(const Election& e);

/// Sealed per-ballot ground truth, kept apart from the ledger. Attack code
/// never touches it; only the verification step does.
struct GroundTruth {
  std::vector<std::uint32_t> choice;  // candidate index per ballot
  std::vector<std::uint64_t> counts;  // per candidate

  void save(std::ostream& out, const std::vector<Candidate>& candidates) const;
};

struct ElectionRun {
  BallotLedger ledger;
  GroundTruth truth;
};

/// Casts n encrypted ballots in order; vote_distribution weights must sum
/// to 1 over the candidates.
ElectionRun run_election(const Election& e, std::uint64_t n_voters,
                         const std::vector<double>& vote_distribution,
                         RandomSource& rng);

// ---------------------------------------------------------------------
// Attack 1: key recovery from public keys, then full ledger decryption.

struct Attack1Options {
  std::size_t bits = 40;  // per-level safe-prime size; solver cap is 56
  std::uint64_t voters = 200;
  unsigned workers = 3;
  std::uint64_t seed = 1;
  std::size_t n_candidates = 4;
  /// When set, one ledger record is corrupted before the attack runs, to
  /// show that junk decryptions are flagged rather than miscounted.
  std::optional<std::uint64_t> tamper_index;
};

struct Attack1Report {
  bool success = false;
  std::string failure;  // set when !success
  std::array<KeyRecovery, 3> keys;
  std::vector<std::string> candidate_names;
  std::vector<std::uint64_t> recovered_counts;
  std::vector<std::uint64_t> true_counts;
  std::vector<std::uint64_t> invalid_ballots;  // indices that decode to junk
  bool tally_matches = false;
  double total_seconds = 0.0;

  std::string to_text() const;
  std::string to_machine() const;
};

/// Original-version end-to-end: build a 3-level election at `bits`-bit
/// primes, publish the public keys, recover all three secret keys, decrypt
/// the whole ledger, and compare the tally against sealed ground truth.
Attack1Report attack1_scenario(const Attack1Options& opts);

// ---------------------------------------------------------------------
// Attack 2: keyless ballot decoding via residuosity classes.

struct Attack2Options {
  std::uint64_t voters = 500;
  std::uint64_t seed = 1;
  /// kModified demonstrates the break; kFinal shows the squaring fix
  /// reducing the attacker to a refusal.
  SchemeVersion version = SchemeVersion::kModified;
  double weight_a = 0.63;  // vote share of the first candidate
};

struct Attack2Report {
  bool success = false;
  std::string status;  // "decoded", "uninformative", or "ambiguous"
  QrClass class_a = QrClass::kResidue;
  QrClass class_b = QrClass::kResidue;
  std::vector<int> per_ballot;  // attacker's per-ballot decision
  std::vector<std::pair<std::uint64_t, std::uint64_t>> prefix_tallies;
  std::uint64_t votes_a = 0, votes_b = 0;
  std::uint64_t true_a = 0, true_b = 0;
  bool exact_match = false;  // every per-ballot decision correct
  double seconds = 0.0;

  std::string to_text() const;
  std::string to_machine() const;
};

/// Modified-version election over the published 1024-bit modulus with the
/// August 28 candidate ids, decoded ballot by ballot with no key material,
/// running tallies after every prefix.
Attack2Report attack2_scenario(const Attack2Options& opts);

// ---------------------------------------------------------------------
// Reproductions of the published computations.

struct AppendixBReport {
  std::vector<QrClass> classes;  // one per published b-value
  bool euler_check_agrees = false;
  std::size_t residue_count = 0;
  bool ok = false;  // exactly 5 of 10 residues, checks consistent
  double seconds = 0.0;

  std::string to_text() const;
  std::string to_machine() const;
};

AppendixBReport reproduce_appendix_b();

struct AppendixCReport {
  DeputyId id1 = 0;
  DeputyId id2 = 0;
  QrClass class_m1 = QrClass::kResidue;
  QrClass class_m2 = QrClass::kResidue;
  bool distinct = false;
  bool euler_check_agrees = false;
  DeputyId residue_id = 0;
  Attack2Report demo;  // fresh 100-voter simulation with these ids
  bool ok = false;
  double seconds = 0.0;

  std::string to_text() const;
  std::string to_machine() const;
};

AppendixCReport reproduce_appendix_c();

}  // namespace mvcrypt
