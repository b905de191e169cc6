// Copyright 2026 The QOS3 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qos3/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <random>

#include "qos3/json_io.hpp"

using namespace qos3;

TEST_CASE("the comparison table reproduces every expected row") {
  std::vector<TableRow> rows = compute_table(1234);
  REQUIRE(rows.size() == 8);
  CHECK(table_all_pass(rows));
  CHECK(rows[0].eta == Rational(1, 10));
  CHECK(rows[1].p == Rational(1, 3));
  CHECK(rows[1].eta == Rational(1, 24));
  for (int i : {2, 3, 4}) {
    CHECK(rows[static_cast<std::size_t>(i)].p == Rational(2, 3));
    CHECK(rows[static_cast<std::size_t>(i)].eta == Rational(1, 12));
  }
  for (int i : {5, 6, 7}) {
    CHECK(rows[static_cast<std::size_t>(i)].p == Rational(1));
    CHECK(rows[static_cast<std::size_t>(i)].eta == Rational(1, 8));
  }
  for (const TableRow &r : rows) {
    CHECK(r.channel_qutrits == (r.scheme == Scheme::S1 ? 5 : 4));
    CHECK(r.classical_trits == (r.scheme == Scheme::S1 ? 5 : 4));
  }
}

TEST_CASE("classify report: identity boosts every preset") {
  ClassifyReport r = compute_classify(Unitary::identity(3));
  CHECK(r.memberships ==
        std::set<FamilyId>{FamilyId::U1, FamilyId::U3, FamilyId::U6, FamilyId::U9});
  for (const ClassifyReport::CaseEntry &c : r.cases) CHECK(c.p == Rational(1));
  std::string text = render_classify(r);
  CHECK(text.find("U1") != std::string::npos);
}

TEST_CASE("classify report: generic operation stays at a third") {
  std::mt19937_64 rng(61);
  ClassifyReport r = compute_classify(generic_unitary(rng));
  CHECK(r.memberships.empty());
  for (const ClassifyReport::CaseEntry &c : r.cases) CHECK(c.p == Rational(1, 3));
  for (const ClassifyReport::SignEntry &s : r.signs) CHECK(s.sign == Sign::None);
}

TEST_CASE("structured output round-trips byte-identically") {
  std::mt19937_64 rng(62);
  BranchEnumeration e = run_scheme2(random_unitary(rng), random_chi(rng),
                                    XiSpec::from_preset(CaseId::C1), FamilyId::U34minus12);
  std::string doc = enumeration_to_json(e, 62);
  nlohmann::json parsed = nlohmann::json::parse(doc);
  CHECK(parsed.dump(2) + "\n" == doc);
  CHECK(parsed["resources"]["eta"]["den"] == 12);
  CHECK(parsed["branches"].size() == 81);

  std::string table_doc = table_to_json(compute_table(7), 7);
  CHECK(nlohmann::json::parse(table_doc).dump(2) + "\n" == table_doc);

  std::string classify_doc = classify_to_json(compute_classify(random_unitary(rng)));
  CHECK(nlohmann::json::parse(classify_doc).dump(2) + "\n" == classify_doc);
}

TEST_CASE("renders are deterministic") {
  std::mt19937_64 rng(63);
  Unitary u = random_unitary(rng);
  std::array<Complex, 3> chi = random_chi(rng);
  BranchEnumeration e = run_scheme1(u, chi);
  CHECK(render_enumeration(e) == render_enumeration(e));
  CHECK(render_bases() == render_bases());
  CHECK(render_table(compute_table(5)) == render_table(compute_table(5)));
}
