// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "mvcrypt/audit.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "mvcrypt/error.hpp"

namespace mvcrypt {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<Nat> parse_decimal_array(const nlohmann::json& doc,
                                     const std::string& field) {
  if (!doc.contains(field)) throw ParseError(field, "missing field");
  const auto& arr = doc.at(field);
  if (!arr.is_array()) throw ParseError(field, "expected an array");
  std::vector<Nat> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = field + "[" + std::to_string(i) + "]";
    if (!arr[i].is_string())
      throw ParseError(path, "expected a decimal string");
    Nat value;
    try {
      value = nat_from_decimal(arr[i].get<std::string>());
    } catch (const ParamError& e) {
      throw ParseError(path, e.what());
    }
    if (value == 0) throw ParseError(path, "value must be positive");
    out.push_back(std::move(value));
  }
  return out;
}

}  // namespace

KeyFileV1 parse_keyfile(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("(root)", e.what());
  }
  if (!doc.is_object()) throw ParseError("(root)", "expected a JSON object");

  KeyFileV1 kf;
  kf.modulos = parse_decimal_array(doc, "modulos");
  kf.generators = parse_decimal_array(doc, "generators");
  kf.public_keys = parse_decimal_array(doc, "publicKeys");
  if (kf.modulos.empty())
    throw ParseError("modulos", "at least one level is required");
  if (kf.generators.size() != kf.modulos.size())
    throw ParseError("generators", "length mismatch with modulos");
  if (kf.public_keys.size() != kf.modulos.size())
    throw ParseError("publicKeys", "length mismatch with modulos");
  return kf;
}

std::string serialize_keyfile(const KeyFileV1& kf) {
  ordered_json doc;
  const auto dump = [](const std::vector<Nat>& values) {
    ordered_json arr = ordered_json::array();
    for (const Nat& v : values) arr.push_back(to_decimal(v));
    return arr;
  };
  doc["modulos"] = dump(kf.modulos);
  doc["generators"] = dump(kf.generators);
  doc["publicKeys"] = dump(kf.public_keys);
  return doc.dump(2) + "\n";
}

const char* to_string(Severity s) {
  switch (s) {
    case Severity::kOk:
      return "ok";
    case Severity::kWarn:
      return "warn";
    case Severity::kCritical:
      return "critical";
  }
  return "?";
}

Severity AuditReport::overall() const {
  Severity worst = Severity::kOk;
  for (const Finding& f : findings) worst = std::max(worst, f.severity);
  return worst;
}

std::string AuditReport::to_text() const {
  std::ostringstream out;
  for (const Finding& f : findings) {
    out << "level " << f.level << "  [" << to_string(f.severity) << "]  "
        << f.check << " (" << f.reason_code << "): " << f.detail << "\n";
  }
  out << "overall: " << to_string(overall()) << "\n";
  return out.str();
}

std::string AuditReport::to_machine() const {
  std::ostringstream out;
  for (const Finding& f : findings) {
    ordered_json line;
    line["level"] = f.level;
    line["check"] = f.check;
    line["severity"] = to_string(f.severity);
    line["reason_code"] = f.reason_code;
    line["detail"] = f.detail;
    out << line.dump() << "\n";
  }
  return out.str();
}

namespace {

Finding bit_length_finding(const Nat& p, const AuditThresholds& t, int level) {
  const std::size_t bits = bit_length(p);
  Finding f{level, "modulus_size", Severity::kOk, "modulus_size_ok",
            std::to_string(bits) + "-bit modulus"};
  if (bits < t.critical_bits) {
    f.severity = Severity::kCritical;
    f.reason_code = "modulus_below_" + std::to_string(t.critical_bits);
    f.detail += ": discrete logarithms at this size are practical with "
                "commodity hardware and public software";
  } else if (bits < t.warn_bits) {
    f.severity = Severity::kWarn;
    f.reason_code = "modulus_below_" + std::to_string(t.warn_bits);
    f.detail += ": too small for medium-term security";
  } else {
    f.detail += ": meets the configured size floor";
  }
  return f;
}

}  // namespace

std::vector<Finding> audit_group(const Nat& p, const Nat& g,
                                 const AuditThresholds& thresholds, int level) {
  std::vector<Finding> findings;
  if (p < 3) {
    findings.push_back({level, "modulus_prime", Severity::kCritical,
                        "modulus_not_prime", "modulus is smaller than 3"});
    return findings;
  }

  const bool p_prime = is_probable_prime(p);
  findings.push_back({level, "modulus_prime",
                      p_prime ? Severity::kOk : Severity::kCritical,
                      p_prime ? "modulus_prime" : "modulus_not_prime",
                      p_prime ? "modulus passes primality testing"
                              : "modulus is composite"});

  const Nat q = (p - 1) / 2;
  const bool q_prime = p_prime && is_probable_prime(q);
  findings.push_back(
      {level, "safe_prime", q_prime ? Severity::kOk : Severity::kCritical,
       q_prime ? "safe_prime" : "subgroup_order_composite",
       q_prime ? "(p-1)/2 is prime: the group has no small subgroups beyond "
                 "{1, p-1}"
               : "(p-1)/2 is not prime: small-subgroup confinement attacks "
                 "apply"});

  findings.push_back(bit_length_finding(p, thresholds, level));
  if (bit_length(p) <= 256) {
    findings.push_back(
        {level, "uint256_cap", Severity::kOk, "fits_uint256_word",
         "modulus fits a 256-bit machine word; historical deployments capped "
         "primes at the largest integer type of their smart-contract VM"});
  }

  // Generator order classification inside the order-2q group: the only
  // possible orders are 1, 2, q, and 2q.
  Finding order_finding{level, "generator_order", Severity::kCritical,
                        "generator_order_other",
                        "generator order is neither q nor 2q"};
  if (g < 1 || g > p - 1) {
    order_finding.reason_code = "generator_out_of_range";
    order_finding.detail = "generator lies outside [1, p-1]";
  } else if (g == 1) {
    order_finding.reason_code = "generator_trivial";
    order_finding.detail = "generator has order 1";
  } else if (g == p - 1) {
    order_finding.reason_code = "generator_order_two";
    order_finding.detail = "generator has order 2";
  } else {
    const Nat gq = mod_pow(g, q, p);
    if (gq == 1) {
      order_finding.severity = Severity::kOk;
      order_finding.reason_code = "generator_order_q";
      order_finding.detail =
          "generator spans the prime-order quadratic-residue subgroup";
    } else if (gq == p - 1) {
      order_finding.severity = Severity::kWarn;
      order_finding.reason_code = "generator_order_2q";
      order_finding.detail =
          "generator spans the full group (order 2q): ciphertexts leak the "
          "plaintext's residuosity class unless messages are encoded into "
          "the subgroup";
    }
  }
  findings.push_back(std::move(order_finding));

  findings.push_back(
      {level, "prime_provenance", Severity::kOk, "prime_provenance_unverifiable",
       "how this prime was generated is not documented; a maliciously chosen "
       "prime can hide a trapdoor that makes discrete logarithms easy"});
  return findings;
}

std::vector<Finding> audit_message_encoding(SchemeVersion version,
                                            const GroupParams& params,
                                            const AuditThresholds& thresholds) {
  std::vector<Finding> findings;
  switch (version) {
    case SchemeVersion::kOriginal:
      findings.push_back(
          {1, "message_encoding", Severity::kCritical,
           "plaintext_residuosity_leak",
           "messages enter the group unencoded under full-group generators; "
           "a ciphertext plus the public key reveals the plaintext's "
           "residuosity class"});
      findings.push_back(
          {1, "multilevel", Severity::kOk, "multilevel_no_asymmetric_gain",
           "each level's key is recoverable independently from its public "
           "key, so chaining three encryptions adds no asymmetric-security "
           "margin over the weakest group"});
      break;
    case SchemeVersion::kModified:
      findings.push_back(
          {1, "message_encoding", Severity::kCritical,
           "semantic_security_break",
           "plaintext may be any field element while the generator spans "
           "only the residue subgroup; jacobi(b) then equals the plaintext's "
           "class for every randomness, a perfect distinguisher"});
      break;
    case SchemeVersion::kFinal:
      findings.push_back(
          {1, "message_encoding", Severity::kOk, "message_squared_into_subgroup",
           "messages are squared before encryption, so encrypted data always "
           "lies in the residue subgroup; the residuosity channel is closed"});
      break;
  }
  findings.push_back(bit_length_finding(params.p, thresholds, 1));
  return findings;
}

AuditReport audit_keyfile(const KeyFileV1& kf,
                          const AuditThresholds& thresholds) {
  AuditReport report;
  for (std::size_t i = 0; i < kf.levels(); ++i) {
    const int level = static_cast<int>(i) + 1;
    const Nat& p = kf.modulos[i];
    const Nat& g = kf.generators[i];
    const Nat& pk = kf.public_keys[i];
    auto findings = audit_group(p, g, thresholds, level);
    report.findings.insert(report.findings.end(),
                           std::make_move_iterator(findings.begin()),
                           std::make_move_iterator(findings.end()));

    if (pk < 1 || pk > p - 1) {
      report.findings.push_back({level, "public_key", Severity::kCritical,
                                 "public_key_out_of_range",
                                 "public key lies outside [1, p-1]"});
      continue;
    }
    // Subgroup membership only means something when g has order q.
    const Nat q = (p - 1) / 2;
    if (p > 3 && q > 1 && mod_pow(g, q, p) == 1) {
      const bool member = mod_pow(pk, q, p) == 1;
      report.findings.push_back(
          {level, "public_key", member ? Severity::kOk : Severity::kCritical,
           member ? "public_key_in_subgroup" : "public_key_outside_subgroup",
           member ? "public key lies in the generator's subgroup"
                  : "public key is not in the subgroup generated by g"});
    } else {
      report.findings.push_back({level, "public_key", Severity::kOk,
                                 "public_key_in_range",
                                 "public key lies in [1, p-1]"});
    }
  }
  return report;
}

}  // namespace mvcrypt
