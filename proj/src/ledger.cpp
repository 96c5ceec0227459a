// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "mvcrypt/ledger.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>

#include "mvcrypt/error.hpp"

namespace mvcrypt {

std::string BallotRecord::to_line() const {
  nlohmann::ordered_json line;
  line["index"] = index;
  line["ts"] = ts;
  for (const auto& [name, value] : fields) line[name] = value;
  return line.dump();
}

std::uint64_t BallotLedger::append(
    std::vector<std::pair<std::string, std::string>> fields) {
  BallotRecord rec;
  rec.index = records_.size();
  rec.ts = rec.index;
  rec.fields = std::move(fields);
  records_.push_back(std::move(rec));
  return records_.back().index;
}

const BallotRecord& BallotLedger::at(std::size_t pos) const {
  if (pos >= records_.size())
    throw ParamError("ledger: record index out of range");
  return records_[pos];
}

void BallotLedger::save(std::ostream& out) const {
  for (const BallotRecord& rec : records_) out << rec.to_line() << "\n";
}

std::string BallotLedger::to_lines() const {
  std::ostringstream out;
  save(out);
  return out.str();
}

BallotLedger BallotLedger::load(std::istream& in) {
  BallotLedger ledger;
  std::string line;
  std::uint64_t expected = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::ordered_json doc;
    try {
      doc = nlohmann::ordered_json::parse(line);
    } catch (const nlohmann::ordered_json::parse_error& e) {
      throw CorruptionError(std::string("ledger: unparseable record: ") +
                            e.what());
    }
    if (!doc.contains("index") || !doc["index"].is_number_unsigned())
      throw CorruptionError("ledger: record without an index");
    const std::uint64_t index = doc["index"].get<std::uint64_t>();
    if (index != expected)
      throw CorruptionError("ledger: indices must increase strictly from 0");
    BallotRecord rec;
    rec.index = index;
    rec.ts = doc.value("ts", index);
    for (const auto& [key, value] : doc.items()) {
      if (key == "index" || key == "ts") continue;
      if (!value.is_string())
        throw CorruptionError("ledger: field " + key + " is not a string");
      rec.fields.emplace_back(key, value.get<std::string>());
    }
    ledger.records_.push_back(std::move(rec));
    ++expected;
  }
  return ledger;
}

std::vector<std::pair<std::string, std::string>> ciphertext_fields(
    const Ciphertext& ct) {
  return {{"a", to_decimal(ct.a)}, {"b", to_decimal(ct.b)}};
}

std::vector<std::pair<std::string, std::string>> ciphertext_fields(
    const MultiCiphertext& mct) {
  return {{"b1", to_decimal(mct.b1)},
          {"b2", to_decimal(mct.b2)},
          {"a3", to_decimal(mct.a3)},
          {"b3", to_decimal(mct.b3)}};
}

namespace {

Nat field_value(const BallotRecord& rec, const std::string& name) {
  for (const auto& [key, value] : rec.fields) {
    if (key == name) {
      try {
        return nat_from_decimal(value);
      } catch (const ParamError& e) {
        throw CorruptionError("ledger record field " + name + ": " + e.what());
      }
    }
  }
  throw CorruptionError("ledger record is missing field " + name);
}

}  // namespace

Ciphertext ciphertext_from_record(const BallotRecord& rec) {
  return Ciphertext{field_value(rec, "a"), field_value(rec, "b")};
}

MultiCiphertext multi_ciphertext_from_record(const BallotRecord& rec) {
  return MultiCiphertext{field_value(rec, "b1"), field_value(rec, "b2"),
                         field_value(rec, "a3"), field_value(rec, "b3")};
}

}  // namespace mvcrypt
