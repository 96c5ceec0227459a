// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mvcrypt/nat.hpp"
#include "mvcrypt/qrattack.hpp"

namespace mvcrypt {

std::string sha256_hex(std::string_view data);

namespace fixtures {

/// The modified-version public-test challenge: the 1024-bit modulus and
/// the b-components of the ten published encrypted messages.
struct AppendixB {
  Nat p;
  std::vector<Nat> b;  // exactly 10
};

/// The parameters served to voters in the August 28 public test: the
/// 1024-bit modulus and the two candidate ids on the ballot.
struct AppendixC {
  Nat p;
  DeputyId m1 = 0;
  DeputyId m2 = 0;
};

/// Canonical serializations the recorded digests are taken over.
std::string canonical_form(const AppendixB& fx);
std::string canonical_form(const AppendixC& fx);

/// Throw FixtureError when the digest does not match the recorded value.
void verify(const AppendixB& fx);
void verify(const AppendixC& fx);

/// Load and verify the bundled constants.
AppendixB load_appendix_b();
AppendixC load_appendix_c();

}  // namespace fixtures
}  // namespace mvcrypt
