// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
//
// mvcrypt: cryptanalysis workbench for the ElGamal variants deployed by
// the 2019 Moscow internet-voting system.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "mvcrypt/audit.hpp"
#include "mvcrypt/dlp.hpp"
#include "mvcrypt/elgamal.hpp"
#include "mvcrypt/error.hpp"
#include "mvcrypt/fixtures.hpp"
#include "mvcrypt/harness.hpp"
#include "mvcrypt/qrattack.hpp"

namespace {

using namespace mvcrypt;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitAttackFailed = 1;
constexpr int kExitInputError = 2;

const std::map<std::string, SchemeVersion> kVersionNames = {
    {"original", SchemeVersion::kOriginal},
    {"modified", SchemeVersion::kModified},
    {"final", SchemeVersion::kFinal}};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParamError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParamError("cannot write " + path);
  out << content;
}

RandomSource make_rng(std::optional<std::uint64_t> seed) {
  return seed ? RandomSource::seeded(*seed) : RandomSource::from_os_entropy();
}

GroupParams params_from_keyfile_level(const KeyFileV1& kf, std::size_t i) {
  const Nat& p = kf.modulos.at(i);
  const Nat& g = kf.generators.at(i);
  const Nat q = (p - 1) / 2;
  const Nat gq = mod_pow(g, q, p);
  GeneratorOrder order;
  if (gq == 1)
    order = GeneratorOrder::kQrSubgroup;
  else if (gq == p - 1)
    order = GeneratorOrder::kFullGroup;
  else
    throw ParamError("keyfile level " + std::to_string(i + 1) +
                     ": generator order is neither q nor 2q");
  return GroupParams::checked(p, g, order);
}

struct KeygenArgs {
  SchemeVersion version = SchemeVersion::kFinal;
  std::size_t bits = 0;  // 0 = per-version default
  std::optional<std::uint64_t> seed;
  std::string out = "public-key.json";
  std::string secret_out = "private-key.json";
};

int run_keygen(const KeygenArgs& args) {
  RandomSource rng = make_rng(args.seed);
  KeyFileV1 kf;
  ordered_json secrets;
  ordered_json sk_array = ordered_json::array();

  if (args.version == SchemeVersion::kOriginal) {
    const std::size_t bits = args.bits ? args.bits : 256;
    std::array<GroupParams, 3> levels = {
        gen_safe_prime(bits, rng, GeneratorOrder::kFullGroup),
        gen_safe_prime(bits, rng, GeneratorOrder::kFullGroup),
        gen_safe_prime(bits, rng, GeneratorOrder::kFullGroup)};
    for (;;) {
      std::sort(levels.begin(), levels.end(),
                [](const GroupParams& a, const GroupParams& b) {
                  return a.p < b.p;
                });
      if (levels[0].p != levels[1].p && levels[1].p != levels[2].p) break;
      levels[2] = gen_safe_prime(bits, rng, GeneratorOrder::kFullGroup);
    }
    const MultiParams mp = MultiParams::checked(std::move(levels));
    const auto keys = multi_keygen(mp, rng);
    for (int i = 0; i < 3; ++i) {
      kf.modulos.push_back(mp.level[i].p);
      kf.generators.push_back(mp.level[i].g);
      kf.public_keys.push_back(keys[i].pk);
      sk_array.push_back(to_decimal(keys[i].sk));
    }
  } else {
    const std::size_t bits = args.bits ? args.bits : 1024;
    const GroupParams params =
        gen_safe_prime(bits, rng, GeneratorOrder::kQrSubgroup);
    const KeyPair kp = keygen(params, rng);
    kf.modulos.push_back(params.p);
    kf.generators.push_back(params.g);
    kf.public_keys.push_back(kp.pk);
    sk_array.push_back(to_decimal(kp.sk));
  }

  secrets["privateKeys"] = sk_array;
  write_file(args.out, serialize_keyfile(kf));
  write_file(args.secret_out, secrets.dump(2) + "\n");
  std::cout << "wrote " << args.out << " and " << args.secret_out << "\n";
  return kExitOk;
}

struct CryptArgs {
  SchemeVersion version = SchemeVersion::kFinal;
  std::string keyfile;
  std::string secrets;
  std::string message;     // encrypt
  std::string in;          // decrypt: ciphertext JSON path ("-" = stdin)
  std::optional<std::uint64_t> seed;
};

int run_encrypt(const CryptArgs& args) {
  const KeyFileV1 kf = parse_keyfile(read_file(args.keyfile));
  RandomSource rng = make_rng(args.seed);
  const Nat m = nat_from_decimal(args.message);
  ordered_json out;

  if (args.version == SchemeVersion::kOriginal) {
    if (kf.levels() != 3)
      throw ParamError("original-version encryption needs a 3-level keyfile");
    const MultiParams mp = MultiParams::checked({params_from_keyfile_level(kf, 0),
                                                 params_from_keyfile_level(kf, 1),
                                                 params_from_keyfile_level(kf, 2)});
    const MultiCiphertext mct = multi_encrypt(
        mp, {kf.public_keys[0], kf.public_keys[1], kf.public_keys[2]}, m, rng);
    out["b1"] = to_decimal(mct.b1);
    out["b2"] = to_decimal(mct.b2);
    out["a3"] = to_decimal(mct.a3);
    out["b3"] = to_decimal(mct.b3);
  } else {
    if (kf.levels() != 1)
      throw ParamError("single-level encryption needs a 1-level keyfile");
    const GroupParams params = params_from_keyfile_level(kf, 0);
    const Nat pt =
        args.version == SchemeVersion::kFinal ? encode_qr(m, params.p) : m;
    const Ciphertext ct = encrypt(params, kf.public_keys[0], pt, rng);
    out["a"] = to_decimal(ct.a);
    out["b"] = to_decimal(ct.b);
  }
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int run_decrypt(const CryptArgs& args) {
  const KeyFileV1 kf = parse_keyfile(read_file(args.keyfile));
  const ordered_json sec = ordered_json::parse(read_file(args.secrets));
  if (!sec.contains("privateKeys") || !sec["privateKeys"].is_array())
    throw ParamError("secrets file: missing privateKeys array");
  std::vector<Nat> sks;
  for (const auto& s : sec["privateKeys"])
    sks.push_back(nat_from_decimal(s.get<std::string>()));

  std::string ct_text;
  if (args.in == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    ct_text = buf.str();
  } else {
    ct_text = read_file(args.in);
  }
  const ordered_json ct_doc = ordered_json::parse(ct_text);

  Nat m;
  if (args.version == SchemeVersion::kOriginal) {
    if (kf.levels() != 3 || sks.size() != 3)
      throw ParamError("original-version decryption needs 3 levels and 3 keys");
    const MultiParams mp = MultiParams::checked({params_from_keyfile_level(kf, 0),
                                                 params_from_keyfile_level(kf, 1),
                                                 params_from_keyfile_level(kf, 2)});
    const MultiCiphertext mct{
        nat_from_decimal(ct_doc.at("b1").get<std::string>()),
        nat_from_decimal(ct_doc.at("b2").get<std::string>()),
        nat_from_decimal(ct_doc.at("a3").get<std::string>()),
        nat_from_decimal(ct_doc.at("b3").get<std::string>())};
    m = multi_decrypt(mp, {sks[0], sks[1], sks[2]}, mct);
  } else {
    if (kf.levels() != 1 || sks.size() != 1)
      throw ParamError("single-level decryption needs 1 level and 1 key");
    const GroupParams params = params_from_keyfile_level(kf, 0);
    const Ciphertext ct{nat_from_decimal(ct_doc.at("a").get<std::string>()),
                        nat_from_decimal(ct_doc.at("b").get<std::string>())};
    m = decrypt(params, sks[0], ct);
    if (args.version == SchemeVersion::kFinal) m = decode_qr(m, params.p);
  }
  std::cout << to_decimal(m) << "\n";
  return kExitOk;
}

struct AuditArgs {
  std::string keyfile;
  std::string format = "text";
  std::size_t critical_bits = 512;
  std::size_t warn_bits = 2048;
  std::optional<SchemeVersion> version;
};

int run_audit(const AuditArgs& args) {
  const KeyFileV1 kf = parse_keyfile(read_file(args.keyfile));
  const AuditThresholds thresholds{args.critical_bits, args.warn_bits};
  AuditReport report = audit_keyfile(kf, thresholds);

  if (args.version) {
    // Encoding audit applies to the level whose group carries messages.
    try {
      const GroupParams level1 = params_from_keyfile_level(kf, 0);
      auto extra = audit_message_encoding(*args.version, level1, thresholds);
      report.findings.insert(report.findings.end(), extra.begin(), extra.end());
    } catch (const ParamError&) {
      // Group checks above already flag the broken structure.
    }
  }

  if (args.format == "machine")
    std::cout << report.to_machine();
  else
    std::cout << report.to_text();
  return kExitOk;
}

struct AttackDlpArgs {
  std::size_t bits = 40;
  std::uint64_t voters = 200;
  unsigned workers = 3;
  std::uint64_t seed = 1;
  std::size_t candidates = 4;
  std::optional<std::uint64_t> tamper;
  std::string format = "text";
};

int run_attack_dlp(const AttackDlpArgs& args) {
  Attack1Options opts;
  opts.bits = args.bits;
  opts.voters = args.voters;
  opts.workers = args.workers;
  opts.seed = args.seed;
  opts.n_candidates = args.candidates;
  opts.tamper_index = args.tamper;
  const Attack1Report report = attack1_scenario(opts);
  if (args.format == "machine")
    std::cout << report.to_machine() << "\n";
  else
    std::cout << report.to_text();
  return report.success ? kExitOk : kExitAttackFailed;
}

struct AttackQrArgs {
  std::uint64_t voters = 500;
  std::uint64_t seed = 1;
  SchemeVersion version = SchemeVersion::kModified;
  double weight_a = 0.63;
  std::string format = "text";
};

int run_attack_qr(const AttackQrArgs& args) {
  Attack2Options opts;
  opts.voters = args.voters;
  opts.seed = args.seed;
  opts.version = args.version;
  opts.weight_a = args.weight_a;
  const Attack2Report report = attack2_scenario(opts);
  if (args.format == "machine")
    std::cout << report.to_machine() << "\n";
  else
    std::cout << report.to_text();
  return report.success ? kExitOk : kExitAttackFailed;
}

struct SimulateArgs {
  SchemeVersion version = SchemeVersion::kFinal;
  std::size_t bits = 0;  // 0 = published 1024-bit modulus / 40-bit chain
  std::uint64_t voters = 100;
  std::uint64_t seed = 1;
  std::size_t candidates = 2;
  std::string ledger_out = "ledger.jsonl";
  std::string truth_out = "truth.jsonl";
  std::string keys_out = "public-key.json";
};

Election build_single_level_election(const SimulateArgs& args,
                                     RandomSource& rng) {
  GroupParams params = [&] {
    if (args.bits == 0) {
      const auto fx = fixtures::load_appendix_c();
      Nat g0 = 2;
      while (jacobi(g0, fx.p) != -1) ++g0;
      return GroupParams::checked(fx.p, g0 * g0 % fx.p,
                                  GeneratorOrder::kQrSubgroup);
    }
    return gen_safe_prime(args.bits, rng, GeneratorOrder::kQrSubgroup);
  }();

  std::vector<Candidate> candidates;
  if (args.bits == 0) {
    const auto fx = fixtures::load_appendix_c();
    candidates = {{"candidate-a", fx.m1}, {"candidate-b", fx.m2}};
  } else {
    // Two synthetic ids in distinct residuosity classes.
    Nat hi = args.version == SchemeVersion::kFinal ? Nat((params.p - 1) / 2)
                                                   : Nat(params.p - 1);
    if (bit_length(hi) > 32) hi = (Nat(1) << 32) - 1;
    for (;;) {
      const DeputyId a = static_cast<DeputyId>(to_u64(1 + rng.below(hi)));
      const DeputyId b = static_cast<DeputyId>(to_u64(1 + rng.below(hi)));
      if (a == b) continue;
      if (class_of(nat_from_u64(a), params.p) ==
          class_of(nat_from_u64(b), params.p))
        continue;
      candidates = {{"candidate-a", a}, {"candidate-b", b}};
      break;
    }
  }
  return Election::create(args.version, std::move(candidates), std::move(params),
                          rng);
}

int run_simulate(const SimulateArgs& args) {
  RandomSource rng = RandomSource::seeded(args.seed);

  Election election = [&] {
    if (args.version != SchemeVersion::kOriginal)
      return build_single_level_election(args, rng);

    const std::size_t bits = args.bits ? args.bits : 40;
    std::array<GroupParams, 3> levels = {
        gen_safe_prime(bits, rng, GeneratorOrder::kFullGroup),
        gen_safe_prime(bits, rng, GeneratorOrder::kFullGroup),
        gen_safe_prime(bits, rng, GeneratorOrder::kFullGroup)};
    std::sort(levels.begin(), levels.end(),
              [](const GroupParams& a, const GroupParams& b) { return a.p < b.p; });
    MultiParams mp = MultiParams::checked(std::move(levels));
    Nat hi = mp.level[0].p - 1;
    if (bit_length(hi) > 32) hi = (Nat(1) << 32) - 1;
    std::vector<Candidate> candidates;
    std::set<std::uint64_t> used;
    for (std::size_t i = 0; i < std::max<std::size_t>(args.candidates, 2); ++i) {
      std::uint64_t id;
      do {
        id = to_u64(1 + rng.below(hi));
      } while (!used.insert(id).second);
      candidates.push_back(
          {"candidate-" + std::to_string(i + 1), static_cast<DeputyId>(id)});
    }
    return Election::create_multilevel(std::move(candidates), std::move(mp), rng);
  }();

  std::vector<double> weights(election.candidates.size());
  const std::size_t n = weights.size();
  const double denom = static_cast<double>(n * (n + 1)) / 2.0;
  for (std::size_t i = 0; i < n; ++i)
    weights[i] = static_cast<double>(n - i) / denom;

  const ElectionRun run = run_election(election, args.voters, weights, rng);

  std::ofstream ledger_file(args.ledger_out, std::ios::trunc);
  if (!ledger_file) throw ParamError("cannot write " + args.ledger_out);
  run.ledger.save(ledger_file);

  std::ofstream truth_file(args.truth_out, std::ios::trunc);
  if (!truth_file) throw ParamError("cannot write " + args.truth_out);
  run.truth.save(truth_file, election.candidates);

  KeyFileV1 kf;
  if (const auto* single = std::get_if<SingleSetup>(&election.setup)) {
    kf.modulos = {single->params.p};
    kf.generators = {single->params.g};
    kf.public_keys = {single->keys.pk};
  } else {
    const auto& multi = std::get<MultiSetup>(election.setup);
    for (int i = 0; i < 3; ++i) {
      kf.modulos.push_back(multi.params.level[i].p);
      kf.generators.push_back(multi.params.level[i].g);
      kf.public_keys.push_back(multi.keys[i].pk);
    }
  }
  write_file(args.keys_out, serialize_keyfile(kf));

  std::cout << "wrote " << args.ledger_out << " (" << run.ledger.size()
            << " ballots), " << args.truth_out << ", " << args.keys_out << "\n";
  return kExitOk;
}

int run_reproduce(const std::string& which, const std::string& format) {
  if (which == "appendix-b") {
    const AppendixBReport report = reproduce_appendix_b();
    if (format == "machine")
      std::cout << report.to_machine() << "\n";
    else
      std::cout << report.to_text();
    return report.ok ? kExitOk : kExitAttackFailed;
  }
  const AppendixCReport report = reproduce_appendix_c();
  if (format == "machine")
    std::cout << report.to_machine() << "\n";
  else
    std::cout << report.to_text();
  return report.ok ? kExitOk : kExitAttackFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "mvcrypt: cryptanalysis workbench for the ElGamal variants of the "
      "2019 Moscow internet-voting system"};
  app.require_subcommand(1);

  // keygen ------------------------------------------------------------
  KeygenArgs keygen_args;
  auto* keygen_cmd = app.add_subcommand(
      "keygen", "Generate parameters and a key pair for a scheme version");
  keygen_cmd->add_option("--version", keygen_args.version, "Scheme version")
      ->transform(CLI::CheckedTransformer(kVersionNames, CLI::ignore_case));
  keygen_cmd->add_option("--bits", keygen_args.bits,
                         "Safe-prime size (default: 256 original, 1024 others)");
  std::uint64_t keygen_seed = 0;
  auto* keygen_seed_opt =
      keygen_cmd->add_option("--seed", keygen_seed, "Deterministic seed");
  keygen_cmd->add_option("--out", keygen_args.out, "Public key file");
  keygen_cmd->add_option("--secret-out", keygen_args.secret_out,
                         "Private key file");

  // encrypt / decrypt ---------------------------------------------------
  CryptArgs encrypt_args;
  auto* encrypt_cmd =
      app.add_subcommand("encrypt", "Encrypt a message under a public key file");
  encrypt_cmd->add_option("--version", encrypt_args.version, "Scheme version")
      ->transform(CLI::CheckedTransformer(kVersionNames, CLI::ignore_case));
  encrypt_cmd->add_option("--keyfile", encrypt_args.keyfile, "Public key file")
      ->required();
  encrypt_cmd->add_option("--message", encrypt_args.message,
                          "Plaintext as a decimal integer")
      ->required();
  std::uint64_t encrypt_seed = 0;
  auto* encrypt_seed_opt =
      encrypt_cmd->add_option("--seed", encrypt_seed, "Deterministic seed");

  CryptArgs decrypt_args;
  auto* decrypt_cmd =
      app.add_subcommand("decrypt", "Decrypt a ciphertext with the secret keys");
  decrypt_cmd->add_option("--version", decrypt_args.version, "Scheme version")
      ->transform(CLI::CheckedTransformer(kVersionNames, CLI::ignore_case));
  decrypt_cmd->add_option("--keyfile", decrypt_args.keyfile, "Public key file")
      ->required();
  decrypt_cmd->add_option("--secrets", decrypt_args.secrets, "Private key file")
      ->required();
  decrypt_cmd
      ->add_option("--in", decrypt_args.in, "Ciphertext JSON file ('-' = stdin)")
      ->required();

  // audit ---------------------------------------------------------------
  AuditArgs audit_args;
  auto* audit_cmd =
      app.add_subcommand("audit", "Audit a public key file for weaknesses");
  audit_cmd->add_option("keyfile", audit_args.keyfile, "Key file to audit")
      ->required();
  audit_cmd->add_option("--format", audit_args.format, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}));
  audit_cmd->add_option("--critical-bits", audit_args.critical_bits,
                        "Bit length below which size is critical");
  audit_cmd->add_option("--warn-bits", audit_args.warn_bits,
                        "Bit length below which size is a warning");
  SchemeVersion audit_version = SchemeVersion::kModified;
  auto* audit_version_opt =
      audit_cmd->add_option("--version", audit_version,
                            "Also audit the message encoding of this version");
  audit_version_opt->transform(
      CLI::CheckedTransformer(kVersionNames, CLI::ignore_case));

  // attack-dlp ----------------------------------------------------------
  AttackDlpArgs dlp_args;
  auto* dlp_cmd = app.add_subcommand(
      "attack-dlp",
      "Original-version key recovery and full ledger decryption");
  dlp_cmd->add_option("--bits", dlp_args.bits, "Per-level safe-prime size")
      ->check(CLI::Range(std::size_t{17}, std::size_t{56}));
  dlp_cmd->add_option("--voters", dlp_args.voters, "Number of ballots");
  dlp_cmd->add_option("--workers", dlp_args.workers, "Concurrent solvers (1-3)");
  dlp_cmd->add_option("--seed", dlp_args.seed, "Scenario seed");
  dlp_cmd->add_option("--candidates", dlp_args.candidates, "Candidate count");
  std::uint64_t tamper_index = 0;
  auto* tamper_opt = dlp_cmd->add_option(
      "--tamper", tamper_index, "Corrupt this ledger record before attacking");
  dlp_cmd->add_option("--format", dlp_args.format, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}));

  // attack-qr -----------------------------------------------------------
  AttackQrArgs qr_args;
  auto* qr_cmd = app.add_subcommand(
      "attack-qr", "Keyless ballot decoding via residuosity classes");
  qr_cmd->add_option("--voters", qr_args.voters, "Number of ballots");
  qr_cmd->add_option("--seed", qr_args.seed, "Scenario seed");
  qr_cmd->add_option("--version", qr_args.version,
                     "modified (break) or final (fix demonstration)")
      ->transform(CLI::CheckedTransformer(kVersionNames, CLI::ignore_case));
  qr_cmd->add_option("--weight-a", qr_args.weight_a,
                     "Vote share of the first candidate");
  qr_cmd->add_option("--format", qr_args.format, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}));

  // simulate --------------------------------------------------------
  SimulateArgs sim_args;
  auto* sim_cmd = app.add_subcommand(
      "simulate", "Run an election and write ledger, truth, and key files");
  sim_cmd->add_option("--version", sim_args.version, "Scheme version")
      ->transform(CLI::CheckedTransformer(kVersionNames, CLI::ignore_case));
  sim_cmd->add_option("--bits", sim_args.bits,
                      "Generate fresh parameters of this size (default: "
                      "published 1024-bit modulus, 40-bit original chain)");
  sim_cmd->add_option("--voters", sim_args.voters, "Number of ballots");
  sim_cmd->add_option("--seed", sim_args.seed, "Scenario seed");
  sim_cmd->add_option("--candidates", sim_args.candidates,
                      "Candidate count (original version only)");
  sim_cmd->add_option("--ledger-out", sim_args.ledger_out, "Ledger file");
  sim_cmd->add_option("--truth-out", sim_args.truth_out,
                      "Sealed ground-truth file");
  sim_cmd->add_option("--keys-out", sim_args.keys_out, "Public key file");

  // reproduce -------------------------------------------------------
  auto* repro_cmd = app.add_subcommand(
      "reproduce", "Replay the published residuosity computations");
  repro_cmd->require_subcommand(1);
  std::string repro_format = "text";
  auto* repro_b = repro_cmd->add_subcommand(
      "appendix-b", "Classify the ten published ciphertext components");
  repro_b->add_option("--format", repro_format, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}));
  auto* repro_c = repro_cmd->add_subcommand(
      "appendix-c", "Classify the two published candidate ids");
  repro_c->add_option("--format", repro_format, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*keygen_cmd) {
      if (*keygen_seed_opt) keygen_args.seed = keygen_seed;
      return run_keygen(keygen_args);
    }
    if (*encrypt_cmd) {
      if (*encrypt_seed_opt) encrypt_args.seed = encrypt_seed;
      return run_encrypt(encrypt_args);
    }
    if (*decrypt_cmd) return run_decrypt(decrypt_args);
    if (*audit_cmd) {
      if (*audit_version_opt) audit_args.version = audit_version;
      return run_audit(audit_args);
    }
    if (*dlp_cmd) {
      if (*tamper_opt) dlp_args.tamper = tamper_index;
      return run_attack_dlp(dlp_args);
    }
    if (*qr_cmd) return run_attack_qr(qr_args);
    if (*sim_cmd) return run_simulate(sim_args);
    if (*repro_cmd)
      return run_reproduce(*repro_b ? "appendix-b" : "appendix-c", repro_format);
  } catch (const SolverBudgetError& e) {
    std::cerr << "attack failed: " << e.what() << " (after " << e.iterations()
              << " iterations)\n";
    return kExitAttackFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
