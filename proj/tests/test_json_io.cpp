// Copyright 2026 The detlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdlib>

#include "detlab/driver.hpp"
#include "detlab/json_io.hpp"
#include "support.hpp"

using namespace detlab;
using namespace detlab::testsupport;

TEST_CASE("ring specs round-trip") {
  for (const char* text : {
           R"({"kind":"Integers"})",
           R"({"kind":"Rationals"})",
           R"({"kind":"Zmod","n":7})",
           R"({"kind":"Fp","p":7})",
           R"({"kind":"Poly","base":{"kind":"Integers"},"vars":["t1","t2"]})",
           R"({"kind":"Dual","base":{"kind":"Rationals"}})",
       }) {
    RingContextPtr ctx = ring_from_json(parse_json_text(text));
    RingContextPtr again = ring_from_json(ring_to_json(ctx));
    CHECK(same_context(ctx, again));
  }
  CHECK_THROWS_WITH_AS(ring_from_json(parse_json_text(R"({"kind":"Galaxy"})")),
                       doctest::Contains("ParseError"), Error);
  // moduli accept decimal strings so nothing overflows
  RingContextPtr big = ring_from_json(parse_json_text(R"({"kind":"Zmod","n":"123456789012345678901"})"));
  CHECK(big->modulus == Int("123456789012345678901"));
}

TEST_CASE("scalar parsing accepts integers and fractions") {
  auto q = RingContext::rationals();
  CHECK(scalar_from_json(Json("3/2"), q) == RingElem::from_rat(q, Rat(3, 2)));
  CHECK(scalar_from_json(Json("-7"), q) == RingElem::from_int(q, -7));
  CHECK(scalar_from_json(Json(5), q) == RingElem::from_int(q, 5));
  CHECK_THROWS_WITH_AS(scalar_from_json(Json("1/0"), q), doctest::Contains("ParseError"), Error);
}

TEST_CASE("group parsing validates the table and permutations") {
  auto s3 = group_from_json(parse_json_text(R"({"permutations":[[1,0,2],[1,2,0]]})"));
  CHECK(s3->size() == 6);
  // corpus file agrees with the closure of its generators
  auto from_file = corpus_group("s3.json");
  CHECK(from_file->table() == s3->table());

  CHECK_THROWS_WITH_AS(
      group_from_json(
          parse_json_text(R"({"identity":0,"table":[[0,1,2],[1,2,0],[2,1,0]]})")),
      doctest::Contains("associativity fails"), Error);
  CHECK_THROWS_WITH_AS(group_from_json(parse_json_text(R"({"size":2})")),
                       doctest::Contains("ParseError"), Error);
}

TEST_CASE("representation parsing validates images") {
  Json rep = corpus_json("rep_z2_reg_q.json");
  CHECK(rep_from_json(rep)->dim() == 2);
  rep["images"]["1"][0][0] = "5";
  CHECK_THROWS_WITH_AS(rep_from_json(rep), doctest::Contains("NotAHomomorphism"), Error);
}

TEST_CASE("reports are deterministic and thread-count independent") {
  Json rep = corpus_json("rep_s3_std_q.json");
  Report a = driver::pseudochar_report(rep, 2, true, 0, 42);
  Report b = driver::pseudochar_report(rep, 2, true, 0, 42);
  CHECK(a.to_json().dump() == b.to_json().dump());

  setenv("DETLAB_THREADS", "4", 1);
  Report c = driver::pseudochar_report(rep, 2, true, 0, 42);
  unsetenv("DETLAB_THREADS");
  CHECK(a.to_json().dump() == c.to_json().dump());
}

TEST_CASE("driver reports carry anchors and origins") {
  Json rep = corpus_json("rep_z2_reg_q.json");
  Report r = driver::newton_report(rep, -1, 4);
  REQUIRE(!r.checks.empty());
  for (const auto& c : r.checks) {
    CHECK(!c.anchor.empty());
    CHECK(!c.origin.empty());
  }
}
