// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "mvcrypt/fixtures.hpp"

#include <openssl/evp.h>

#include <array>

#include "mvcrypt/error.hpp"

namespace mvcrypt {

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int md_len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &md_len, EVP_sha256(),
                 nullptr) != 1)
    throw InternalError("sha256: digest computation failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * md_len);
  for (unsigned int i = 0; i < md_len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

namespace fixtures {

namespace {
#include "fixtures_data.inc"
}  // namespace

std::string canonical_form(const AppendixB& fx) {
  std::string out = "appendix-b\np=" + to_decimal(fx.p) + "\n";
  for (const Nat& b : fx.b) out += "b=" + to_decimal(b) + "\n";
  return out;
}

std::string canonical_form(const AppendixC& fx) {
  return "appendix-c\np=" + to_decimal(fx.p) + "\nm1=" + std::to_string(fx.m1) +
         "\nm2=" + std::to_string(fx.m2) + "\n";
}

void verify(const AppendixB& fx) {
  if (fx.b.size() != 10)
    throw FixtureError("appendix-b fixture: expected 10 ciphertext values");
  if (sha256_hex(canonical_form(fx)) != kAppendixBDigest)
    throw FixtureError("appendix-b fixture: digest mismatch, data corrupt");
}

void verify(const AppendixC& fx) {
  if (sha256_hex(canonical_form(fx)) != kAppendixCDigest)
    throw FixtureError("appendix-c fixture: digest mismatch, data corrupt");
}

AppendixB load_appendix_b() {
  AppendixB fx;
  fx.p = nat_from_decimal(kAppendixBPrime);
  fx.b.reserve(10);
  for (const char* value : kAppendixBValues)
    fx.b.push_back(nat_from_decimal(value));
  verify(fx);
  return fx;
}

AppendixC load_appendix_c() {
  AppendixC fx;
  fx.p = nat_from_decimal(kAppendixCPrime);
  fx.m1 = kAppendixCId1;
  fx.m2 = kAppendixCId2;
  verify(fx);
  return fx;
}

}  // namespace fixtures
}  // namespace mvcrypt
