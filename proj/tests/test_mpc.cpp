/*
Copyright 2026 The rs2 Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "rs2/mpc.hpp"

#include <doctest.h>

using namespace rs2;

TEST_CASE("primitive charges") {
  RoundLedger ledger(MpcConfig::linear(10, 10));
  ledger.charge_primitive(Primitive::Sort);
  CHECK(ledger.rounds(Category::Primitives) == 1);
  ledger.charge_primitive(Primitive::Aggregate);
  CHECK(ledger.rounds(Category::Primitives) == 2);
  CHECK(ledger.total_rounds() == 2);

  MpcConfig c = MpcConfig::linear(10, 10);
  c.c_prim = 3;
  c.c_derand = 5;
  RoundLedger scaled(c);
  scaled.charge_primitive(Primitive::Sort);
  scaled.charge_derand("x");
  CHECK(scaled.rounds(Category::Primitives) == 3);
  CHECK(scaled.rounds(Category::Derandomization) == 5);
  CHECK(scaled.entries().size() == 2);
}

TEST_CASE("charges after finalize are flagged") {
  RoundLedger ledger;
  ledger.charge(Category::Mis, 2, "mis");
  ledger.finalize();
  CHECK_FALSE(ledger.misuse());
  ledger.charge(Category::Mis, 1, "late");
  CHECK(ledger.misuse());
  CHECK(ledger.rounds(Category::Mis) == 2);
}

TEST_CASE("gather feasibility") {
  const MpcConfig lin = MpcConfig::linear(1000, 5000);
  CHECK(lin.local_memory() == 8000);
  CHECK(check_gather(lin, 3000).ok);
  CHECK(check_gather(lin, 0).ok);
  const GatherVerdict v = check_gather(lin, 8001);
  CHECK_FALSE(v.ok);
  CHECK(v.deficit == 1);

  const MpcConfig sub = MpcConfig::sublinear(1000000, 1000000, {1, 2});
  CHECK(sub.local_memory() == 4000);
  CHECK_FALSE(check_gather(sub, 1000000).ok);
  CHECK(MpcConfig::sublinear(10, 0, {1, 2}).local_memory() == 13);
}

TEST_CASE("global space") {
  const MpcConfig c = MpcConfig::linear(100, 400);
  RoundLedger ledger(c);
  CHECK(c.global_cap() == 8 * 500);
  ledger.account_space(500);
  CHECK_FALSE(ledger.over_cap());
  ledger.account_space(300);
  CHECK(ledger.peak_space() == 500);
  ledger.account_space(c.global_cap() + 1);
  CHECK(ledger.over_cap());
  CHECK(ledger.peak_space() == c.global_cap() + 1);
  CHECK(c.machines() == 5);
}

TEST_CASE("category names") {
  CHECK(std::string(to_string(Category::Derandomization)) == "derandomization");
  CHECK(std::string(to_string(Category::Mis)) == "mis");
}
