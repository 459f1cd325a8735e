/* Copyright 2026 The stringcone Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <doctest.h>

#include "stringcone/diagram.hpp"

using namespace stringcone;

namespace {

std::vector<std::vector<long long>> as_ll(const std::vector<std::vector<int>>& m) {
  std::vector<std::vector<long long>> out;
  for (const auto& r : m) out.emplace_back(r.begin(), r.end());
  return out;
}

}  // namespace

TEST_SUITE("diagram") {
  TEST_CASE("crossings follow the word") {
    const WiringDiagram d = build_diagram({1, 2, 1});
    CHECK(d.wire_count() == 3);
    CHECK(d.length() == 3);
    CHECK(d.node(0).lo == 1);
    CHECK(d.node(0).hi == 2);
    CHECK(d.node(1).lo == 1);
    CHECK(d.node(1).hi == 3);
    CHECK(d.node(2).lo == 2);
    CHECK(d.node(2).hi == 3);
    CHECK(d.arrangement().back() == std::vector<int>{3, 2, 1});
    CHECK(d.wire_nodes(1) == std::vector<int>{0, 1});
    CHECK(d.rank_on_wire(3, 2) == 1);
    CHECK(d.rank_on_wire(1, 2) == -1);
  }

  TEST_CASE("chamber change of basis is unimodular") {
    for (const Word& w : {Word{1, 2, 1}, Word{1, 2, 1, 3, 2, 1}, Word{1, 3, 2, 1, 3, 2},
                          Word{2, 1, 3, 2, 1, 4, 3, 2, 1, 4}}) {
      const ChamberStructure cs = chamber_structure(build_diagram(w));
      CHECK(cs.chambers.size() == w.size());
      const long long det = integer_determinant(as_ll(cs.phi));
      CHECK((det == 1 || det == -1));
    }
  }

  TEST_CASE("integer determinant") {
    CHECK(integer_determinant({{2, 1}, {1, 1}}) == 1);
    CHECK(integer_determinant({{0, 1}, {1, 0}}) == -1);
    CHECK(integer_determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
    CHECK(integer_determinant({{2, 0, 0}, {0, 3, 0}, {1, 1, 4}}) == 24);
  }

  TEST_CASE("symplectic labels and mirror") {
    const LieType C2 = LieType::parse("C2");
    const SympWiringDiagram d = build_symp_diagram(C2, {2, 1, 2, 1});
    CHECK(d.lift().wire_count() == 4);
    CHECK(d.lift().length() == 6);
    int wall = 0;
    for (int j = 0; j < d.lift().length(); ++j) {
      CHECK(d.mirror_node(d.mirror_node(j)) == j);
      const Node& a = d.lift().node(j);
      const Node& b = d.lift().node(d.mirror_node(j));
      CHECK(b.lo == d.bar(a.hi));
      CHECK(b.hi == d.bar(a.lo));
      if (d.on_wall(j)) {
        ++wall;
        CHECK(d.mirror_node(j) == j);
      }
    }
    CHECK(wall == 2);
    CHECK(d.letter_nodes(0).size() == 1);
    CHECK(d.letter_nodes(1).size() == 2);
    CHECK(symp_wire_name(2, 1) == "1");
    CHECK(symp_wire_name(2, 4) == "1̄");
    CHECK(symp_node_name(d, d.letter_nodes(0).front()) == "t1");
  }

  TEST_CASE("type B and C share the lift") {
    const Word w{3, 2, 3, 2, 1, 2, 3, 2, 1};
    const auto b = build_symp_diagram(LieType::parse("B3"), w);
    const auto c = build_symp_diagram(LieType::parse("C3"), w);
    CHECK(b.lift().word() == c.lift().word());
  }

  TEST_CASE("orientation") {
    const WiringDiagram d = build_diagram({1, 2, 1});
    const OrientedDiagram o = orient(d, 2);
    CHECK(o.upward(1));
    CHECK(o.upward(2));
    CHECK_FALSE(o.upward(3));
  }
}
