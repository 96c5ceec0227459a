// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Acceptance suite: one test per release criterion, each printing a
// single PASS/FAIL line. Tolerances and time limits are pinned in code.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "mvcrypt/audit.hpp"
#include "mvcrypt/dlp.hpp"
#include "mvcrypt/elgamal.hpp"
#include "mvcrypt/fixtures.hpp"
#include "mvcrypt/harness.hpp"
#include "mvcrypt/qrattack.hpp"

using namespace mvcrypt;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_s(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report_line(int number, const char* name, bool ok,
                 const std::string& note = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number, name,
              note.empty() ? "" : ": ", note.c_str());
  std::fflush(stdout);
}

GroupParams published_qr_params() {
  const auto fx = fixtures::load_appendix_c();
  Nat g0 = 2;
  while (jacobi(g0, fx.p) != -1) ++g0;
  return GroupParams::checked(fx.p, g0 * g0 % fx.p, GeneratorOrder::kQrSubgroup);
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

TEST_CASE("criterion 1: appendix-b residue split is exactly 5 of 10") {
  const AppendixBReport rep = reproduce_appendix_b();
  const bool ok =
      rep.ok && rep.residue_count == 5 && rep.euler_check_agrees &&
      rep.seconds < 1.0;
  report_line(1, "appendix-b reproduction (5/10 residues, < 1 s)", ok,
              std::to_string(rep.residue_count) + "/10 residues in " +
                  std::to_string(rep.seconds) + " s");
  CHECK(rep.residue_count == 5);
  CHECK(rep.euler_check_agrees);
  CHECK(rep.seconds < 1.0);
  CHECK(ok);
}

TEST_CASE("criterion 2: appendix-c ids fall in distinct classes") {
  const auto fx = fixtures::load_appendix_c();
  const auto t0 = Clock::now();
  const auto classes = classify_ids({fx.m1, fx.m2}, fx.p);
  const double secs = elapsed_s(t0);
  const bool distinct = classes.at(fx.m1) != classes.at(fx.m2);

  const AppendixCReport rep = reproduce_appendix_c();
  const bool ok = distinct && secs < 1.0 && rep.ok;
  report_line(2, "appendix-c id classes distinct (< 1 s)", ok,
              std::string(to_string(classes.at(fx.m1))) + " vs " +
                  to_string(classes.at(fx.m2)) + " in " +
                  std::to_string(secs) + " s");
  CHECK(distinct);
  CHECK(secs < 1.0);
  CHECK(rep.ok);
}

TEST_CASE("criterion 3: 3-level key recovery at 40-bit scale, 5 seeds") {
  double total = 0.0;
  bool all_ok = true;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Attack1Options opts;
    opts.bits = 40;
    opts.voters = 200;
    opts.workers = 3;
    opts.seed = seed;
    const Attack1Report rep = attack1_scenario(opts);
    total += rep.total_seconds;
    const bool keys_ok = rep.keys[0].ok() && rep.keys[1].ok() && rep.keys[2].ok();
    if (!rep.success || !keys_ok || !rep.tally_matches ||
        !rep.invalid_ballots.empty()) {
      all_ok = false;
    }
    CHECK(rep.success);
    CHECK(rep.tally_matches);
  }
  const bool ok = all_ok && total < 60.0;
  report_line(3, "attack-dlp exact tallies over 5 seeds (< 60 s total)", ok,
              std::to_string(total) + " s total");
  CHECK(total < 60.0);
  CHECK(all_ok);
}

TEST_CASE("criterion 4: distinguisher advantage 1.0 raw, <= 0.1 squared") {
  const auto t0 = Clock::now();
  const GroupParams params = published_qr_params();

  RandomSource rng1 = RandomSource::seeded(1001);
  const double adv_raw = distinguisher_game(params, 1000, rng1);

  RandomSource rng2 = RandomSource::seeded(1002);
  const double adv_sq =
      distinguisher_game(params, 1000, rng2, MessageEncoding::kSquared);

  const double secs = elapsed_s(t0);
  const bool ok = adv_raw == 1.0 && adv_sq <= 0.1 && secs < 30.0;
  report_line(4, "distinguisher advantage at 1024 bits (< 30 s)", ok,
              "raw " + std::to_string(adv_raw) + ", squared " +
                  std::to_string(adv_sq) + " in " + std::to_string(secs) + " s");
  CHECK(adv_raw == 1.0);
  CHECK(adv_sq <= 0.1);
  CHECK(secs < 30.0);
}

TEST_CASE("criterion 5: keyless two-candidate decode of 500 ballots") {
  const auto t0 = Clock::now();
  Attack2Options opts;
  opts.voters = 500;
  opts.seed = 2026;
  const Attack2Report rep = attack2_scenario(opts);
  const double secs = elapsed_s(t0);

  bool prefixes_consistent = rep.prefix_tallies.size() == 500;
  std::uint64_t a = 0, b = 0;
  for (std::size_t i = 0; i < rep.prefix_tallies.size(); ++i) {
    if (rep.per_ballot[i] == 0)
      ++a;
    else
      ++b;
    if (rep.prefix_tallies[i] != std::make_pair(a, b)) prefixes_consistent = false;
  }
  const bool ok = rep.success && rep.status == "decoded" && rep.exact_match &&
                  rep.votes_a == rep.true_a && rep.votes_b == rep.true_b &&
                  prefixes_consistent && secs < 10.0;
  report_line(5, "attack-qr 100% decode of 500 ballots (< 10 s)", ok,
              std::to_string(rep.votes_a) + "/" + std::to_string(rep.votes_b) +
                  " in " + std::to_string(secs) + " s");
  CHECK(rep.success);
  CHECK(rep.exact_match);
  CHECK(prefixes_consistent);
  CHECK(secs < 10.0);
}

TEST_CASE("criterion 6: squared-encoding pipeline is the identity") {
  bool ok = true;

  // Exhaustive half-range roundtrip at p = 23.
  const GroupParams small = GroupParams::checked(23, 4, GeneratorOrder::kQrSubgroup);
  RandomSource rng = RandomSource::seeded(3001);
  const KeyPair small_kp = keygen(small, rng);
  for (unsigned long m = 1; m <= 11; ++m) {
    const Ciphertext ct = encrypt(small, small_kp.pk, encode_qr(m, small.p), rng);
    if (jacobi(ct.b, small.p) != 1) ok = false;
    if (decode_qr(decrypt(small, small_kp.sk, ct), small.p) != m) ok = false;
  }

  // 500 random trials at the published 1024-bit modulus.
  const GroupParams big = published_qr_params();
  const KeyPair big_kp = keygen(big, rng);
  const Nat half = (big.p - 1) / 2;
  for (int i = 0; i < 500; ++i) {
    const Nat m = 1 + rng.below(half);
    const Ciphertext ct = encrypt(big, big_kp.pk, encode_qr(m, big.p), rng);
    if (jacobi(ct.b, big.p) != 1) ok = false;
    if (decode_qr(decrypt(big, big_kp.sk, ct), big.p) != m) ok = false;
  }

  report_line(6, "final-version roundtrip (exhaustive p=23, 500 @ 1024-bit)",
              ok);
  CHECK(ok);
}

TEST_CASE("criterion 7: solver agreement on 1000 small instances") {
  bool ok = true;
  RandomSource rng = RandomSource::seeded(4001);
  int instances = 0;

  // 20 random safe-prime groups with q < 2^15, 50 instances each; the
  // exhaustive scan is the ground truth for both solvers.
  for (int grp = 0; grp < 20; ++grp) {
    const std::size_t bits = 8 + static_cast<std::size_t>(to_u64(rng.below(9)));
    const GroupParams params = gen_safe_prime(bits, rng);
    const std::uint64_t p = to_u64(params.p);
    const std::uint64_t g = to_u64(params.g);
    for (int i = 0; i < 50; ++i, ++instances) {
      const std::uint64_t x = to_u64(rng.below(params.q));
      std::uint64_t h = 1;
      for (std::uint64_t e = 0; e < x; ++e) h = mulmod_u64(h, g, p);
      std::uint64_t expected = 0;
      for (std::uint64_t cur = 1;; cur = mulmod_u64(cur, g, p), ++expected)
        if (cur == h) break;
      if (bsgs(params.g, nat_from_u64(h), params.q, params.p) != expected)
        ok = false;
      if (pollard_rho(params.g, nat_from_u64(h), params.q, params.p, rng) !=
          nat_from_u64(expected))
        ok = false;
      if (expected != x) ok = false;
    }
  }

  // Safe-prime solves are verified by reexponentiation on every call; an
  // external recheck over fresh instances confirms it never returns junk.
  RandomSource frng = RandomSource::seeded(4002);
  for (int i = 0; i < 100; ++i) {
    const std::size_t bits = 18 + static_cast<std::size_t>(to_u64(frng.below(8)));
    const GroupParams params = gen_safe_prime(bits, frng, GeneratorOrder::kFullGroup);
    const Nat h = 1 + frng.below(params.p - 1);
    const Nat x = solve_safe_prime_dlog(params, h);
    if (mod_pow(params.g, x, params.p) != h) ok = false;
    if (x >= 2 * params.q) ok = false;
  }

  report_line(7, "bsgs / rho / exhaustive agree on 1000 instances", ok,
              std::to_string(instances) + " instances");
  CHECK(instances == 1000);
  CHECK(ok);
}

TEST_CASE("criterion 8: audit verdicts at the historical key sizes") {
  RandomSource rng = RandomSource::seeded(5001);

  const GroupParams p256 = gen_safe_prime(256, rng);
  const Severity s256 = AuditReport{audit_group(p256.p, p256.g)}.overall();

  const GroupParams p1024 = published_qr_params();
  const Severity s1024 = AuditReport{audit_group(p1024.p, p1024.g)}.overall();

  const GroupParams p2048 = gen_safe_prime(2048, rng);
  const Severity s2048 = AuditReport{audit_group(p2048.p, p2048.g)}.overall();

  const auto modified =
      audit_message_encoding(SchemeVersion::kModified, p1024);
  bool leak_found = false;
  for (const Finding& f : modified)
    if (f.reason_code == "semantic_security_break" &&
        f.severity == Severity::kCritical)
      leak_found = true;

  // Determinism: identical inputs give identical reports.
  const AuditReport once{audit_group(p1024.p, p1024.g)};
  const AuditReport twice{audit_group(p1024.p, p1024.g)};
  const bool deterministic = once.to_machine() == twice.to_machine();

  const bool ok = s256 == Severity::kCritical && s1024 == Severity::kWarn &&
                  s2048 == Severity::kOk && leak_found && deterministic;
  report_line(8, "audit verdicts (256 critical / 1024 warn / 2048 ok)", ok,
              std::string("256=") + to_string(s256) + " 1024=" +
                  to_string(s1024) + " 2048=" + to_string(s2048));
  CHECK(s256 == Severity::kCritical);
  CHECK(s1024 == Severity::kWarn);
  CHECK(s2048 == Severity::kOk);
  CHECK(leak_found);
  CHECK(deterministic);
}
