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

#include "oracles.hpp"
#include "stringcone/polyhedra.hpp"

using namespace stringcone;

namespace {

Vec unit(int d, int i, long s = 1) {
  Vec v(d, 0);
  v[i] = s;
  return v;
}

HRep box(const std::vector<long>& hi) {
  const int d = static_cast<int>(hi.size());
  HRep h(d);
  for (int i = 0; i < d; ++i) {
    h.add_ge(unit(d, i), 0);
    h.add_le(unit(d, i), hi[i]);
  }
  return h;
}

HRep simplex(int d) {
  HRep h(d);
  for (int i = 0; i < d; ++i) h.add_ge(unit(d, i), 0);
  h.add_le(Vec(d, 1), 1);
  return h;
}

}  // namespace

TEST_SUITE("polyhedra") {
  TEST_CASE("row normalization") {
    const Halfspace h = normalize({{Rat(1, 2), Rat(3, 4)}, Rat(5, 4)});
    CHECK(h.a == Vec{2, 3});
    CHECK(h.b == 5);
  }

  TEST_CASE("linear programs") {
    const HRep h = box({2, 3});
    const LPResult r = lp_maximize(h, {1, 1});
    CHECK(r.status == LPStatus::Optimal);
    CHECK(r.value == 5);
    HRep open(2);
    open.add_ge(unit(2, 0), 0);
    CHECK(lp_maximize(open, {1, 0}).status == LPStatus::Unbounded);
    HRep empty(1);
    empty.add_ge(unit(1, 0), 1);
    empty.add_le(unit(1, 0), 0);
    CHECK_FALSE(feasible(empty));
    CHECK(lp_maximize(empty, {1}).status == LPStatus::Infeasible);
  }

  TEST_CASE("redundancy") {
    HRep h = box({1, 1});
    h.add_le({1, 1}, 3);
    h.add_le({2, 0}, 2);
    CHECK(is_redundant(h, 4));
    CHECK(remove_redundant(h).rows.size() == 4);
    HRep empty(1);
    empty.add_ge(unit(1, 0), 1);
    empty.add_le(unit(1, 0), 0);
    const HRep e = remove_redundant(empty);
    CHECK(e.rows.size() == 1);
    CHECK_FALSE(feasible(e));
  }

  TEST_CASE("vertex enumeration") {
    const VRep v = to_vrep(box({1, 1, 1}));
    CHECK(v.vertices.size() == 8);
    CHECK(v.rays.empty());
    HRep quadrant(2);
    quadrant.add_ge(unit(2, 0), 0);
    quadrant.add_ge(unit(2, 1), 0);
    const VRep q = to_vrep(quadrant);
    CHECK(q.vertices.size() == 1);
    CHECK(q.rays.size() == 2);
    HRep strip(2);
    strip.add_ge(unit(2, 0), 0);
    strip.add_le(unit(2, 0), 1);
    strip.add_ge(unit(2, 1), 0);
    CHECK_THROWS_AS(to_vrep(strip), UnboundedError);
    HRep half(2);
    half.add_ge(unit(2, 0), 0);
    CHECK_THROWS_AS(to_vrep(half), DomainError);
  }

  TEST_CASE("face lattices") {
    CHECK(f_vector(box({1, 1, 1})) == std::vector<long>{1, 8, 12, 6, 1});
    CHECK(f_vector(simplex(4)) == std::vector<long>{1, 5, 10, 10, 5, 1});
    HRep oct(3);
    for (int s0 : {-1, 1})
      for (int s1 : {-1, 1})
        for (int s2 : {-1, 1}) oct.add_le({s0, s1, s2}, 1);
    CHECK(f_vector(oct) == std::vector<long>{1, 6, 12, 8, 1});
  }

  TEST_CASE("vertex tests") {
    const HRep h = box({1, 1});
    CHECK(is_vertex(h, {1, 1}));
    CHECK(tight_rank(h, {1, Rat(1, 2)}) == 1);
    CHECK_FALSE(is_vertex(h, {1, Rat(1, 2)}));
    CHECK(affine_dimension({{0, 0}, {1, 1}, {2, 2}}) == 1);
  }

  TEST_CASE("integrality") {
    CHECK(integrality(box({2, 3})).integral);
    HRep h(2);
    h.add_ge(unit(2, 0), 0);
    h.add_ge(unit(2, 1), 0);
    h.add_le({2, 2}, 1);
    const Integrality r = integrality(h);
    CHECK_FALSE(r.integral);
    REQUIRE(r.witness.has_value());
    CHECK(is_vertex(h, *r.witness));
  }

  TEST_CASE("lattice points against a box scan") {
    HRep h = box({3, 3, 3});
    h.add_le({1, 1, 1}, 5);
    h.add_le({1, -1, 0}, 1);
    CHECK(lattice_points(h) == oracle::box_count(h, {0, 0, 0}, {3, 3, 3}));
    CHECK(lattice_points(dilate(simplex(3), 2)) == 10);
    CHECK(lattice_points(box({1, 1, 1})) == 8);
    CHECK_THROWS_AS(lattice_points(box({100, 100, 100}), 1000), ResourceError);
  }

  TEST_CASE("normalized volumes") {
    CHECK(normalized_volume(face_lattice(box({1, 1, 1}))) == 6);
    CHECK(normalized_volume(face_lattice(simplex(4))) == 1);
    CHECK(normalized_volume(face_lattice(box({2, 3}))) == 12);
  }

  TEST_CASE("unimodular maps") {
    CHECK(is_unimodular({{1, 1}, {0, 1}}));
    CHECK_FALSE(is_unimodular({{2, 0}, {0, 1}}));
    const HRep sq = box({1, 1});
    HRep sheared(2);  // image of the square under (x, y) -> (x + y, y)
    sheared.add_ge({0, 1}, 0);
    sheared.add_le({0, 1}, 1);
    sheared.add_ge({1, -1}, 0);
    sheared.add_le({1, -1}, 1);
    CHECK(verify_unimodular_map(sq, sheared, {{1, 1}, {0, 1}}, {0, 0}));
    CHECK_FALSE(verify_unimodular_map(sq, sheared, {{1, 0}, {0, 1}}, {0, 0}));
  }

  TEST_CASE("equivalence search") {
    const HRep sq = box({1, 1});
    HRep moved(2);  // sheared and translated square
    moved.add_ge({0, 1}, 2);
    moved.add_le({0, 1}, 3);
    moved.add_ge({1, -2}, -1);
    moved.add_le({1, -2}, 0);
    const auto r = search_unimodular_equivalence(sq, moved);
    CHECK(r.verdict == Verdict::Equivalent);
    CHECK(verify_unimodular_map(sq, moved, r.U, r.shift));
    const auto s = search_unimodular_equivalence(sq, box({2, 1}));
    CHECK(s.verdict == Verdict::Inequivalent);
    CHECK_FALSE(s.witness.empty());
    CHECK(to_string(Verdict::Unknown) == "unknown");
  }
}
