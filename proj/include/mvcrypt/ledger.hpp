// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mvcrypt/elgamal.hpp"

namespace mvcrypt {

/// One encrypted ballot as stored: ciphertext components as decimal
/// strings, in a fixed field order, plus a logical timestamp. The deployed
/// system wrote one blockchain transaction per ballot; here the chain is a
/// local append-only line file, which preserves the two properties the
/// attacks need: ordering and public readability.
struct BallotRecord {
  std::uint64_t index = 0;
  std::uint64_t ts = 0;  // logical clock, monotone with index
  std::vector<std::pair<std::string, std::string>> fields;

  std::string to_line() const;  // deterministic JSON, fixed field order
};

class BallotLedger {
 public:
  /// Appends a record; index and ts are assigned, records are immutable
  /// afterwards. Returns the new index.
  std::uint64_t append(std::vector<std::pair<std::string, std::string>> fields);

  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  const BallotRecord& at(std::size_t pos) const;
  auto begin() const { return records_.begin(); }
  auto end() const { return records_.end(); }

  /// One record per line; replaying save() after further appends
  /// reproduces the earlier lines byte for byte.
  void save(std::ostream& out) const;
  std::string to_lines() const;

  /// Throws CorruptionError unless indices increase strictly from 0.
  static BallotLedger load(std::istream& in);

 private:
  std::vector<BallotRecord> records_;
};

std::vector<std::pair<std::string, std::string>> ciphertext_fields(
    const Ciphertext& ct);
std::vector<std::pair<std::string, std::string>> ciphertext_fields(
    const MultiCiphertext& mct);

/// Throws CorruptionError if the record does not carry the expected fields.
Ciphertext ciphertext_from_record(const BallotRecord& rec);
MultiCiphertext multi_ciphertext_from_record(const BallotRecord& rec);

}  // namespace mvcrypt
