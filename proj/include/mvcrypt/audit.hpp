// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mvcrypt/elgamal.hpp"
#include "mvcrypt/modmath.hpp"

namespace mvcrypt {

/// The public-key file shape the deployed system used: three parallel
/// arrays of decimal integer strings, one entry per encryption level.
struct KeyFileV1 {
  std::vector<Nat> modulos;
  std::vector<Nat> generators;
  std::vector<Nat> public_keys;  // serialized as "publicKeys"

  std::size_t levels() const { return modulos.size(); }
};

/// Parses the JSON key file. Throws ParseError carrying the field path.
KeyFileV1 parse_keyfile(const std::string& text);

std::string serialize_keyfile(const KeyFileV1& kf);

enum class Severity { kOk, kWarn, kCritical };

const char* to_string(Severity s);

struct Finding {
  int level = 0;  // 1-based encryption level; 0 = whole file
  std::string check;
  Severity severity = Severity::kOk;
  std::string reason_code;  // stable across runs, machine-matchable
  std::string detail;
};

/// Bit-length verdict boundaries. The deployed system's history fixes the
/// interesting points (256, 1024, 2048); the cutoffs themselves are this
/// tool's policy and can be overridden.
struct AuditThresholds {
  std::size_t critical_bits = 512;
  std::size_t warn_bits = 2048;
};

struct AuditReport {
  std::vector<Finding> findings;

  Severity overall() const;
  std::string to_text() const;
  /// One JSON object per line, fields: level, check, severity,
  /// reason_code, detail.
  std::string to_machine() const;
};

/// Group-structure checks on (p, g): primality of p and (p-1)/2, bit
/// length verdict, generator order class (q, 2q, other), and the
/// unverifiable-provenance note. Returns findings, never throws on bad
/// parameters.
std::vector<Finding> audit_group(const Nat& p, const Nat& g,
                                 const AuditThresholds& thresholds = {},
                                 int level = 0);

/// Message-encoding checks for a scheme version over the given params.
std::vector<Finding> audit_message_encoding(SchemeVersion version,
                                            const GroupParams& params,
                                            const AuditThresholds& thresholds = {});

/// Full audit of a key file: per-level group checks plus public-key range
/// and subgroup membership.
AuditReport audit_keyfile(const KeyFileV1& kf,
                          const AuditThresholds& thresholds = {});

}  // namespace mvcrypt
