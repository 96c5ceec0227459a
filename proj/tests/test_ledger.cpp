// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "mvcrypt/ledger.hpp"

#include <doctest.h>

#include <sstream>

#include "mvcrypt/error.hpp"

using namespace mvcrypt;

TEST_CASE("appending never rewrites earlier lines") {
  BallotLedger ledger;
  CHECK(ledger.append({{"a", "16"}, {"b", "18"}}) == 0);
  CHECK(ledger.append({{"a", "4"}, {"b", "9"}}) == 1);
  const std::string before = ledger.to_lines();

  ledger.append({{"a", "2"}, {"b", "7"}});
  ledger.append({{"a", "3"}, {"b", "11"}});
  const std::string after = ledger.to_lines();

  CHECK(after.substr(0, before.size()) == before);
  CHECK(ledger.size() == 4);
  CHECK(ledger.at(2).index == 2);
  CHECK(ledger.at(2).ts == 2);
  CHECK_THROWS_AS(ledger.at(9), ParamError);
}

TEST_CASE("save and load are inverse") {
  BallotLedger ledger;
  ledger.append({{"b1", "17"}, {"b2", "1"}, {"a3", "1"}, {"b3", "1"}});
  ledger.append({{"b1", "5"}, {"b2", "30"}, {"a3", "12"}, {"b3", "44"}});

  std::stringstream stream;
  ledger.save(stream);
  const BallotLedger back = BallotLedger::load(stream);
  CHECK(back.size() == 2);
  CHECK(back.to_lines() == ledger.to_lines());

  const MultiCiphertext mct = multi_ciphertext_from_record(back.at(1));
  CHECK(mct.b1 == 5);
  CHECK(mct.b2 == 30);
  CHECK(mct.a3 == 12);
  CHECK(mct.b3 == 44);
}

TEST_CASE("load rejects broken index sequences and junk") {
  std::stringstream gap(
      R"({"index":0,"ts":0,"a":"1","b":"2"}
{"index":2,"ts":2,"a":"1","b":"2"})");
  CHECK_THROWS_AS(BallotLedger::load(gap), CorruptionError);

  std::stringstream junk("this is not a record\n");
  CHECK_THROWS_AS(BallotLedger::load(junk), CorruptionError);

  std::stringstream noindex(R"({"ts":0,"a":"1","b":"2"})");
  CHECK_THROWS_AS(BallotLedger::load(noindex), CorruptionError);
}

TEST_CASE("record field extraction and corruption reporting") {
  BallotLedger ledger;
  ledger.append(ciphertext_fields(Ciphertext{16, 18}));
  const Ciphertext ct = ciphertext_from_record(ledger.at(0));
  CHECK(ct.a == 16);
  CHECK(ct.b == 18);
  CHECK_THROWS_AS(multi_ciphertext_from_record(ledger.at(0)), CorruptionError);

  BallotLedger bad;
  bad.append({{"a", "16"}, {"b", "1x8"}});
  CHECK_THROWS_AS(ciphertext_from_record(bad.at(0)), CorruptionError);
}
