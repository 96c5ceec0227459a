// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "mvcrypt/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "mvcrypt/error.hpp"
#include "mvcrypt/fixtures.hpp"

namespace mvcrypt {

namespace {

using ordered_json = nlohmann::ordered_json;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_candidates(const std::vector<Candidate>& candidates) {
  if (candidates.size() < 2)
    throw ParamError("election: at least two candidates required");
  std::set<DeputyId> ids;
  for (const Candidate& c : candidates) {
    if (c.id == 0) throw ParamError("election: candidate id must be nonzero");
    if (!ids.insert(c.id).second)
      throw ParamError("election: candidate ids must be pairwise distinct");
  }
}

Nat max_plain_id(SchemeVersion version, const Nat& p) {
  // Final squares the id, which is only decodable from the half-range.
  return version == SchemeVersion::kFinal ? Nat((p - 1) / 2) : Nat(p - 1);
}

}  // namespace

Election Election::create(SchemeVersion version,
                          std::vector<Candidate> candidates, GroupParams params,
                          RandomSource& rng) {
  if (version == SchemeVersion::kOriginal)
    throw ParamError("election: the original version is multilevel");
  check_candidates(candidates);
  const Nat hi = max_plain_id(version, params.p);
  for (const Candidate& c : candidates)
    if (nat_from_u64(c.id) > hi)
      throw ParamError("election: candidate id does not fit the message range");
  KeyPair keys = keygen(params, rng);
  return Election{version, std::move(candidates),
                  SingleSetup{std::move(params), std::move(keys)}};
}

Election Election::create_multilevel(std::vector<Candidate> candidates,
                                     MultiParams params, RandomSource& rng) {
  check_candidates(candidates);
  for (const Candidate& c : candidates)
    if (nat_from_u64(c.id) > params.level[0].p - 1)
      throw ParamError("election: candidate id does not fit level-1 messages");
  std::array<KeyPair, 3> keys = multi_keygen(params, rng);
  return Election{SchemeVersion::kOriginal, std::move(candidates),
                  MultiSetup{std::move(params), std::move(keys)}};
}

PublicElection public_view(const Election& e) {
  PublicElection pub;
  pub.version = e.version;
  pub.candidates = e.candidates;
  if (const auto* single = std::get_if<SingleSetup>(&e.setup)) {
    pub.params = single->params;
    pub.public_keys = {single->keys.pk};
  } else {
    const auto& multi = std::get<MultiSetup>(e.setup);
    pub.params = multi.params;
    for (const KeyPair& kp : multi.keys) pub.public_keys.push_back(kp.pk);
  }
  return pub;
}

void GroundTruth::save(std::ostream& out,
                       const std::vector<Candidate>& candidates) const {
  for (std::size_t i = 0; i < choice.size(); ++i) {
    ordered_json line;
    line["index"] = i;
    line["choice"] = choice[i];
    line["name"] = candidates.at(choice[i]).name;
    out << line.dump() << "\n";
  }
}

ElectionRun run_election(const Election& e, std::uint64_t n_voters,
                         const std::vector<double>& vote_distribution,
                         RandomSource& rng) {
  if (vote_distribution.size() != e.candidates.size())
    throw ParamError("run_election: one weight per candidate required");
  double sum = 0;
  for (double w : vote_distribution) {
    if (w < 0) throw ParamError("run_election: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw ParamError("run_election: weights must sum to 1");

  std::vector<double> cumulative(vote_distribution.size());
  double acc = 0;
  for (std::size_t i = 0; i < vote_distribution.size(); ++i) {
    acc += vote_distribution[i];
    cumulative[i] = acc;
  }
  cumulative.back() = 1.0;

  ElectionRun run;
  run.truth.counts.assign(e.candidates.size(), 0);

  for (std::uint64_t v = 0; v < n_voters; ++v) {
    const double u = rng.unit();
    std::size_t k = 0;
    while (k + 1 < cumulative.size() && u >= cumulative[k]) ++k;

    const Nat id = nat_from_u64(e.candidates[k].id);
    if (const auto* single = std::get_if<SingleSetup>(&e.setup)) {
      const Nat m = e.version == SchemeVersion::kFinal
                        ? encode_qr(id, single->params.p)
                        : id;
      const Ciphertext ct = encrypt(single->params, single->keys.pk, m, rng);
      run.ledger.append(ciphertext_fields(ct));
    } else {
      const auto& multi = std::get<MultiSetup>(e.setup);
      const MultiCiphertext mct = multi_encrypt(
          multi.params,
          {multi.keys[0].pk, multi.keys[1].pk, multi.keys[2].pk}, id, rng);
      run.ledger.append(ciphertext_fields(mct));
    }
    run.truth.choice.push_back(static_cast<std::uint32_t>(k));
    ++run.truth.counts[k];
  }
  return run;
}

// ---------------------------------------------------------------------
// Attack 1

namespace {

struct LedgerDecryption {
  std::vector<std::uint64_t> counts;
  std::vector<std::uint64_t> invalid;
};

// Runs entirely on public data plus the recovered keys; the sealed truth
// is only consulted afterwards, in the comparison step.
LedgerDecryption decrypt_ledger(const PublicElection& pub,
                                const std::array<Nat, 3>& sks,
                                const BallotLedger& ledger) {
  const auto& mp = std::get<MultiParams>(pub.params);
  std::map<std::uint64_t, std::size_t> by_id;
  for (std::size_t i = 0; i < pub.candidates.size(); ++i)
    by_id[pub.candidates[i].id] = i;

  LedgerDecryption out;
  out.counts.assign(pub.candidates.size(), 0);
  for (const BallotRecord& rec : ledger) {
    try {
      const Nat m = multi_decrypt(mp, sks, multi_ciphertext_from_record(rec));
      const auto it =
          fits_u64(m) ? by_id.find(to_u64(m)) : by_id.end();
      if (it == by_id.end()) {
        out.invalid.push_back(rec.index);
        continue;
      }
      ++out.counts[it->second];
    } catch (const Error&) {
      out.invalid.push_back(rec.index);
    }
  }
  return out;
}

MultiParams gen_multilevel_params(std::size_t bits, RandomSource& rng) {
  std::array<GroupParams, 3> levels = {
      gen_safe_prime(bits, rng, GeneratorOrder::kFullGroup),
      gen_safe_prime(bits, rng, GeneratorOrder::kFullGroup),
      gen_safe_prime(bits, rng, GeneratorOrder::kFullGroup)};
  for (;;) {
    std::sort(levels.begin(), levels.end(),
              [](const GroupParams& a, const GroupParams& b) { return a.p < b.p; });
    if (levels[0].p != levels[1].p && levels[1].p != levels[2].p) break;
    levels[2] = gen_safe_prime(bits, rng, GeneratorOrder::kFullGroup);
  }
  return MultiParams::checked(std::move(levels));
}

BallotLedger tamper_record(const BallotLedger& ledger, std::uint64_t index,
                           const Nat& p1) {
  BallotLedger copy;
  for (const BallotRecord& rec : ledger) {
    auto fields = rec.fields;
    if (rec.index == index) {
      for (auto& [name, value] : fields) {
        if (name != "b1") continue;
        const Nat b1 = nat_from_decimal(value);
        value = to_decimal(b1 == p1 - 1 ? Nat(1) : Nat(b1 + 1));
      }
    }
    copy.append(std::move(fields));
  }
  return copy;
}

}  // namespace

Attack1Report attack1_scenario(const Attack1Options& opts) {
  if (opts.bits < 17 || opts.bits > 56)
    throw ParamError("attack1: bits must lie in [17, 56]");
  if (opts.n_candidates < 2)
    throw ParamError("attack1: at least two candidates required");

  const auto start = Clock::now();
  RandomSource rng = RandomSource::seeded(opts.seed);
  Attack1Report report;

  MultiParams mp = gen_multilevel_params(opts.bits, rng);

  // Synthetic candidate roster with ids drawn like the real ones: random
  // 32-bit integers, capped by the level-1 message range.
  Nat id_bound = mp.level[0].p - 1;
  if (bit_length(id_bound) > 32) id_bound = (Nat(1) << 32) - 1;
  std::vector<Candidate> candidates;
  std::set<std::uint64_t> used;
  for (std::size_t i = 0; i < opts.n_candidates; ++i) {
    std::uint64_t id;
    do {
      id = to_u64(1 + rng.below(id_bound));
    } while (!used.insert(id).second);
    candidates.push_back(
        {"candidate-" + std::to_string(i + 1), static_cast<DeputyId>(id)});
  }
  std::vector<double> weights(opts.n_candidates);
  const double denom =
      static_cast<double>(opts.n_candidates * (opts.n_candidates + 1)) / 2.0;
  for (std::size_t i = 0; i < opts.n_candidates; ++i)
    weights[i] = static_cast<double>(opts.n_candidates - i) / denom;

  const Election election =
      Election::create_multilevel(std::move(candidates), std::move(mp), rng);
  ElectionRun run = run_election(election, opts.voters, weights, rng);

  if (opts.tamper_index) {
    if (*opts.tamper_index >= run.ledger.size())
      throw ParamError("attack1: tamper index out of range");
    const auto& multi = std::get<MultiSetup>(election.setup);
    run.ledger =
        tamper_record(run.ledger, *opts.tamper_index, multi.params.level[0].p);
  }

  // The attacker's side: public keys in, private keys out.
  const PublicElection pub = public_view(election);
  const auto& pub_mp = std::get<MultiParams>(pub.params);
  report.keys = recover_multi_keys(
      pub_mp, {pub.public_keys[0], pub.public_keys[1], pub.public_keys[2]},
      opts.workers);

  for (const Candidate& c : pub.candidates)
    report.candidate_names.push_back(c.name);
  report.true_counts = run.truth.counts;

  if (!report.keys[0].ok() || !report.keys[1].ok() || !report.keys[2].ok()) {
    report.failure = "key recovery failed";
    report.total_seconds = seconds_since(start);
    return report;
  }

  const LedgerDecryption dec = decrypt_ledger(
      pub, {*report.keys[0].sk, *report.keys[1].sk, *report.keys[2].sk},
      run.ledger);
  report.recovered_counts = dec.counts;
  report.invalid_ballots = dec.invalid;
  report.tally_matches = dec.counts == run.truth.counts;
  report.success = report.tally_matches && dec.invalid.empty();
  if (!report.success)
    report.failure = dec.invalid.empty() ? "tally mismatch"
                                         : "ledger records decode to junk";
  report.total_seconds = seconds_since(start);
  return report;
}

// ---------------------------------------------------------------------
// Attack 2

namespace {

GroupParams published_modified_params() {
  const fixtures::AppendixC fx = fixtures::load_appendix_c();
  // QR-subgroup generator: square of the smallest non-residue.
  Nat g0 = 2;
  while (jacobi(g0, fx.p) != -1) ++g0;
  return GroupParams::checked(fx.p, g0 * g0 % fx.p,
                              GeneratorOrder::kQrSubgroup);
}

}  // namespace

Attack2Report attack2_scenario(const Attack2Options& opts) {
  if (opts.version == SchemeVersion::kOriginal)
    throw ParamError("attack2: scenario targets the single-level versions");
  if (opts.weight_a < 0 || opts.weight_a > 1)
    throw ParamError("attack2: weight_a must lie in [0, 1]");

  const auto start = Clock::now();
  RandomSource rng = RandomSource::seeded(opts.seed);
  const fixtures::AppendixC fx = fixtures::load_appendix_c();
  GroupParams params = published_modified_params();

  std::vector<Candidate> candidates = {{"candidate-a", fx.m1},
                                       {"candidate-b", fx.m2}};
  const Election election =
      Election::create(opts.version, candidates, params, rng);
  const ElectionRun run = run_election(
      election, opts.voters, {opts.weight_a, 1.0 - opts.weight_a}, rng);

  Attack2Report report;
  report.true_a = run.truth.counts[0];
  report.true_b = run.truth.counts[1];

  // Attacker's side: ledger plus public candidate list, no key material.
  std::vector<Ciphertext> ballots;
  ballots.reserve(run.ledger.size());
  for (const BallotRecord& rec : run.ledger)
    ballots.push_back(ciphertext_from_record(rec));

  report.class_a = class_of(nat_from_u64(fx.m1), params.p);
  report.class_b = class_of(nat_from_u64(fx.m2), params.p);
  if (report.class_a == report.class_b) {
    report.status = "ambiguous";
    report.seconds = seconds_since(start);
    return report;
  }

  bool any_nonresidue = false;
  for (const Ciphertext& ct : ballots)
    if (plaintext_class(ct, params) == QrClass::kNonResidue) {
      any_nonresidue = true;
      break;
    }
  if (!ballots.empty() && !any_nonresidue) {
    // Every ballot is a residue: consistent with squared encoding, so the
    // class read-out carries no information about the vote.
    report.status = "uninformative";
    report.seconds = seconds_since(start);
    return report;
  }

  const TwoCandidateTally tally =
      two_candidate_decode(ballots, fx.m1, fx.m2, params);
  report.per_ballot = tally.per_ballot;
  report.votes_a = tally.votes_a;
  report.votes_b = tally.votes_b;

  std::uint64_t run_a = 0, run_b = 0;
  report.prefix_tallies.reserve(tally.per_ballot.size());
  for (const int pick : tally.per_ballot) {
    if (pick == 0)
      ++run_a;
    else
      ++run_b;
    report.prefix_tallies.emplace_back(run_a, run_b);
  }

  report.status = "decoded";
  report.exact_match =
      tally.per_ballot.size() == run.truth.choice.size() &&
      std::equal(tally.per_ballot.begin(), tally.per_ballot.end(),
                 run.truth.choice.begin(),
                 [](int a, std::uint32_t b) {
                   return static_cast<std::uint32_t>(a) == b;
                 });
  report.success = report.exact_match;
  report.seconds = seconds_since(start);
  return report;
}

// ---------------------------------------------------------------------
// Reproductions

AppendixBReport reproduce_appendix_b() {
  const auto start = Clock::now();
  const fixtures::AppendixB fx = fixtures::load_appendix_b();
  const Nat q = (fx.p - 1) / 2;

  AppendixBReport report;
  report.euler_check_agrees = true;
  for (const Nat& b : fx.b) {
    const QrClass c = class_of(b, fx.p);
    report.classes.push_back(c);
    if (c == QrClass::kResidue) ++report.residue_count;
    // Euler criterion cross-check: b^q is 1 exactly for residues.
    const bool euler_residue = mod_pow(b, q, fx.p) == 1;
    if (euler_residue != (c == QrClass::kResidue))
      report.euler_check_agrees = false;
  }
  report.ok = report.residue_count == 5 && report.euler_check_agrees;
  report.seconds = seconds_since(start);
  return report;
}

AppendixCReport reproduce_appendix_c() {
  const auto start = Clock::now();
  const fixtures::AppendixC fx = fixtures::load_appendix_c();
  const Nat q = (fx.p - 1) / 2;

  AppendixCReport report;
  report.id1 = fx.m1;
  report.id2 = fx.m2;
  report.class_m1 = class_of(nat_from_u64(fx.m1), fx.p);
  report.class_m2 = class_of(nat_from_u64(fx.m2), fx.p);
  report.distinct = report.class_m1 != report.class_m2;
  report.euler_check_agrees =
      (mod_pow(nat_from_u64(fx.m1), q, fx.p) == 1) ==
          (report.class_m1 == QrClass::kResidue) &&
      (mod_pow(nat_from_u64(fx.m2), q, fx.p) == 1) ==
          (report.class_m2 == QrClass::kResidue);
  report.residue_id = report.class_m1 == QrClass::kResidue ? fx.m1 : fx.m2;

  Attack2Options demo;
  demo.voters = 100;
  demo.seed = 42;
  report.demo = attack2_scenario(demo);

  report.ok =
      report.distinct && report.euler_check_agrees && report.demo.success;
  report.seconds = seconds_since(start);
  return report;
}

// ---------------------------------------------------------------------
// Report rendering

namespace {

ordered_json key_recovery_json(const KeyRecovery& kr) {
  ordered_json out;
  out["ok"] = kr.ok();
  if (kr.ok())
    out["sk"] = to_decimal(*kr.sk);
  else
    out["error"] = kr.error;
  out["seconds"] = kr.seconds;
  return out;
}

}  // namespace

std::string Attack1Report::to_text() const {
  std::ostringstream out;
  out << "attack-dlp: " << (success ? "success" : "FAILED") << "\n";
  if (!success && !failure.empty()) out << "  reason: " << failure << "\n";
  for (std::size_t i = 0; i < keys.size(); ++i) {
    out << "  key " << i + 1 << ": ";
    if (keys[i].ok())
      out << "recovered in " << keys[i].seconds << " s (sk = "
          << to_decimal(*keys[i].sk) << ")";
    else
      out << "failed: " << keys[i].error;
    out << "\n";
  }
  out << "  tally (recovered / ground truth):\n";
  for (std::size_t i = 0; i < candidate_names.size(); ++i) {
    out << "    " << candidate_names[i] << ": ";
    if (i < recovered_counts.size())
      out << recovered_counts[i];
    else
      out << "-";
    out << " / " << true_counts[i] << "\n";
  }
  if (!invalid_ballots.empty()) {
    out << "  flagged ballots (decode to no candidate):";
    for (const auto idx : invalid_ballots) out << " " << idx;
    out << "\n";
  }
  out << "  total: " << total_seconds << " s\n";
  return out.str();
}

std::string Attack1Report::to_machine() const {
  ordered_json out;
  out["scenario"] = "attack-dlp";
  out["success"] = success;
  if (!failure.empty()) out["failure"] = failure;
  ordered_json key_list = ordered_json::array();
  for (const KeyRecovery& kr : keys) key_list.push_back(key_recovery_json(kr));
  out["keys"] = key_list;
  out["candidates"] = candidate_names;
  out["recovered_counts"] = recovered_counts;
  out["true_counts"] = true_counts;
  out["invalid_ballots"] = invalid_ballots;
  out["tally_matches"] = tally_matches;
  out["total_seconds"] = total_seconds;
  return out.dump();
}

std::string Attack2Report::to_text() const {
  std::ostringstream out;
  out << "attack-qr: " << status << (success ? "" : " (attack failed)") << "\n";
  out << "  id classes: candidate-a " << to_string(class_a) << ", candidate-b "
      << to_string(class_b) << "\n";
  if (status == "decoded") {
    out << "  decoded tally: " << votes_a << " / " << votes_b
        << "  (truth: " << true_a << " / " << true_b << ")\n";
    out << "  per-ballot decisions exact: " << (exact_match ? "yes" : "no")
        << "\n";
  }
  out << "  elapsed: " << seconds << " s\n";
  return out.str();
}

std::string Attack2Report::to_machine() const {
  ordered_json out;
  out["scenario"] = "attack-qr";
  out["success"] = success;
  out["status"] = status;
  out["class_a"] = to_string(class_a);
  out["class_b"] = to_string(class_b);
  out["votes_a"] = votes_a;
  out["votes_b"] = votes_b;
  out["true_a"] = true_a;
  out["true_b"] = true_b;
  out["exact_match"] = exact_match;
  ordered_json prefixes = ordered_json::array();
  for (const auto& [a, b] : prefix_tallies)
    prefixes.push_back(ordered_json::array({a, b}));
  out["prefix_tallies"] = prefixes;
  out["seconds"] = seconds;
  return out.dump();
}

std::string AppendixBReport::to_text() const {
  std::ostringstream out;
  out << "appendix-b reproduction: " << (ok ? "pass" : "FAIL") << "\n";
  for (std::size_t i = 0; i < classes.size(); ++i)
    out << "  b[" << i << "]: " << to_string(classes[i]) << "\n";
  out << "  residues: " << residue_count << " of " << classes.size()
      << " (expected 5 of 10)\n";
  out << "  euler-criterion cross-check: "
      << (euler_check_agrees ? "agrees" : "DISAGREES") << "\n";
  out << "  elapsed: " << seconds << " s\n";
  return out.str();
}

std::string AppendixBReport::to_machine() const {
  ordered_json out;
  out["scenario"] = "reproduce-appendix-b";
  out["ok"] = ok;
  ordered_json cls = ordered_json::array();
  for (const QrClass c : classes) cls.push_back(to_string(c));
  out["classes"] = cls;
  out["residue_count"] = residue_count;
  out["euler_check_agrees"] = euler_check_agrees;
  out["seconds"] = seconds;
  return out.dump();
}

std::string AppendixCReport::to_text() const {
  std::ostringstream out;
  out << "appendix-c reproduction: " << (ok ? "pass" : "FAIL") << "\n";
  out << "  id " << id1 << ": " << to_string(class_m1) << "\n";
  out << "  id " << id2 << ": " << to_string(class_m2) << "\n";
  out << "  distinct classes: " << (distinct ? "yes" : "NO") << "\n";
  out << "  euler-criterion cross-check: "
      << (euler_check_agrees ? "agrees" : "DISAGREES") << "\n";
  out << "  100-voter decode demo: "
      << (demo.success ? "exact" : "failed") << "\n";
  out << "  elapsed: " << seconds << " s\n";
  return out.str();
}

std::string AppendixCReport::to_machine() const {
  ordered_json out;
  out["scenario"] = "reproduce-appendix-c";
  out["ok"] = ok;
  out["id1"] = id1;
  out["id2"] = id2;
  out["class_m1"] = to_string(class_m1);
  out["class_m2"] = to_string(class_m2);
  out["distinct"] = distinct;
  out["euler_check_agrees"] = euler_check_agrees;
  out["residue_id"] = residue_id;
  out["demo_exact"] = demo.success;
  out["seconds"] = seconds;
  return out.dump();
}

}  // namespace mvcrypt
