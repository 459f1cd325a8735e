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

#include <set>

#include "stringcone/polytopes.hpp"

using namespace stringcone;

TEST_SUITE("polytopes") {
  TEST_CASE("symbolic lambda-cone of (1,3,2,1,3,2)") {
    const LambdaCone lc = lambda_cone_symbolic(LieType::parse("A3"), {1, 3, 2, 1, 3, 2});
    std::set<std::pair<IntVec, IntVec>> got;
    for (const auto& r : lc.rows) got.insert({r.a, r.lambda});
    const std::set<std::pair<IntVec, IntVec>> want = {
        {{1, 0, -1, 2, 0, -1}, {1, 0, 0}}, {{0, 1, -1, 0, 2, -1}, {0, 0, 1}},
        {{0, 0, 1, -1, -1, 2}, {0, 1, 0}}, {{0, 0, 0, 1, 0, -1}, {1, 0, 0}},
        {{0, 0, 0, 0, 1, -1}, {0, 0, 1}},  {{0, 0, 0, 0, 0, 1}, {0, 1, 0}}};
    CHECK(got == want);
    CHECK(lc.rows.front().a == IntVec{0, 0, 0, 0, 0, 1});
  }

  TEST_CASE("specialization checks the weight") {
    const LieType A3 = LieType::parse("A3");
    const LambdaCone lc = lambda_cone_symbolic(A3, {1, 3, 2, 1, 3, 2});
    CHECK_THROWS_AS(lc.specialize(Weight::rho(LieType::parse("A2"))), InputError);
    CHECK_THROWS_AS(lc.specialize(Weight{A3, {1, -1, 0}}), InputError);
  }

  TEST_CASE("the zero weight gives a point") {
    const LieType C2 = LieType::parse("C2");
    const HRep h = string_polytope(C2, {2, 1, 2, 1}, Weight::parse(C2, "0"));
    const VRep v = to_vrep(h);
    CHECK(v.vertices.size() == 1);
    CHECK(v.vertices.front() == Vec(4, 0));
  }

  TEST_CASE("lattice points count the crystal") {
    // dim V(rho) for C2 is 16, for A2 it is 8
    const LieType C2 = LieType::parse("C2"), A2 = LieType::parse("A2");
    CHECK(lattice_points(string_polytope(C2, {2, 1, 2, 1}, Weight::rho(C2))) == 16);
    CHECK(lattice_points(string_polytope(C2, {1, 2, 1, 2}, Weight::rho(C2))) == 16);
    CHECK(lattice_points(string_polytope(A2, {1, 2, 1}, Weight::rho(A2))) == 8);
    CHECK(lattice_points(gt_polytope_C(Weight::rho(C2), 2)) == 16);
  }

  TEST_CASE("polytope facets of the rank-two words") {
    const LieType C2 = LieType::parse("C2");
    CHECK(remove_redundant(string_polytope(C2, word_iC(2), Weight::rho(C2))).rows.size() == 8);
    CHECK(remove_redundant(string_polytope(C2, word_jC(2), Weight::rho(C2))).rows.size() == 8);
  }

  TEST_CASE("GT polytope layout") {
    const GTShape s = gt_shape(3);
    CHECK(s.size() == 9);
    std::set<int> idx;
    for (int i = 1; i <= 3; ++i)
      for (int k = 1; k + i - 1 <= 3; ++k) {
        idx.insert(s.a(i, k));
        if (i >= 2) idx.insert(s.b(i, k));
      }
    CHECK(idx.size() == 9);
    CHECK(*idx.begin() == 0);
    CHECK(*idx.rbegin() == 8);
    CHECK(s.labels().size() == 9);
    const LieType C3 = LieType::parse("C3");
    const HRep gt = gt_polytope_C(Weight::rho(C3), 3);
    CHECK(gt.rows.size() == 18);
    CHECK(remove_redundant(gt).rows.size() == 18);
  }

  TEST_CASE("GT polytope of C3 at rho") {
    const Invariants inv = compute_invariants(gt_polytope_C(Weight::rho(LieType::parse("C3")), 3));
    CHECK(inv.f_vector == std::vector<long>{1, 176, 936, 2244, 3126, 2760, 1590, 594, 138, 18, 1});
    CHECK(inv.integral);
    CHECK(inv.lattice_t1 == 512);  // dim V(rho) = 2^9
    CHECK(inv.lattice_t2 == 19683);
    CHECK(inv.volume == 362880);
  }

  TEST_CASE("GT equivalence in rank two") {
    const auto rep = verify_gt_theorem(2);
    CHECK(rep.holds);
    CHECK(rep.equivalent == std::vector<Word>{word_iC(2)});
  }
}
