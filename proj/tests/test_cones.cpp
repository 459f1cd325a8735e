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

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "stringcone/cones.hpp"

using namespace stringcone;

namespace {

LinForm form(int dim, std::initializer_list<std::pair<int, int>> terms) {
  LinForm f{CoordSpace::A, IntVec(dim, 0)};
  for (auto [j, c] : terms) f.coeffs[j - 1] = c;
  return f;
}

std::set<LinForm> form_set(const std::vector<LinForm>& fs) { return {fs.begin(), fs.end()}; }

}  // namespace

TEST_SUITE("cones") {
  TEST_CASE("forms") {
    const LinForm f{CoordSpace::A, {2, -4, 0}};
    CHECK(f.reduced().coeffs == IntVec{1, -2, 0});
    CHECK(format_form(f) == "2a1 - 4a2");
    CHECK(LinForm{CoordSpace::A, {0, 0}}.is_zero());
  }

  TEST_CASE("type-A functionals agree with the wire-expression oracle") {
    for (const auto& w : enumerate_reduced_words(LieType::parse("A3"))) {
      const WiringDiagram d(w);
      for (int k = 1; k <= 3; ++k)
        for (const auto& p : enumerate_paths(d, k))
          CHECK(functional_A(d, p).coeffs == oracle::path_functional(w, oracle::as_walk(p), k));
    }
  }

  TEST_CASE("string cone of (1,2,1,3,2,1)") {
    const auto cone = string_cone(LieType::parse("A3"), {1, 2, 1, 3, 2, 1});
    CHECK(cone.constraints.size() == 6);
    const std::set<LinForm> want = {form(6, {{1, 1}}),          form(6, {{2, 1}, {3, -1}}),
                                    form(6, {{4, 1}, {5, -1}}), form(6, {{3, 1}}),
                                    form(6, {{5, 1}, {6, -1}}), form(6, {{6, 1}})};
    CHECK(form_set(cone.constraints) == want);
    CHECK_THROWS_AS(string_cone(LieType::parse("A3"), {1, 2, 1}), InputError);
  }

  TEST_CASE("facets of the type-A cones equal the path counts") {
    for (const auto& w : enumerate_reduced_words(LieType::parse("A3"))) {
      const auto fs = irredundant_facets(LieType::parse("A3"), w);
      CHECK(fs.facet_count() == static_cast<int>(fs.cone.constraints.size()));
      CHECK(fs.conflicts.empty());
    }
  }

  TEST_CASE("facets agree with the double-description oracle") {
    const LieType C3 = LieType::parse("C3");
    for (const Word& w : {word_iC(3), word_jC(3), Word{3, 2, 1, 3, 2, 3, 2, 1, 2}}) {
      const auto fs = irredundant_facets(C3, w);
      const auto rays = to_vrep(fs.cone.to_hrep()).rays;
      CHECK(static_cast<int>(oracle::cone_facets_from_rays(9, rays).size()) == fs.facet_count());
    }
  }

  TEST_CASE("functional table of (2,1,2,1)") {
    const SympWiringDiagram d(LieType::parse("C2"), Word{2, 1, 2, 1});
    std::multiset<IntVec> hat, halved;
    for (const auto& p : symp_paths(d, 2)) {
      hat.insert(functional_hat_C(d, p).coeffs);
      halved.insert(functional_C(d, p).coeffs);
    }
    CHECK(hat == std::multiset<IntVec>{{2, 0, 0, 0}, {0, 0, 2, -2}, {0, 2, -2, 0}, {0, 1, 0, -1}, {0, 1, 0, -1}});
    CHECK(halved == std::multiset<IntVec>{{1, 0, 0, 0}, {0, 0, 1, -1}, {0, 1, -1, 0}, {0, 1, 0, -1}, {0, 1, 0, -1}});
  }

  TEST_CASE("facets of the rank-two cones") {
    const LieType C2 = LieType::parse("C2");
    const auto f = irredundant_facets(C2, {2, 1, 2, 1});
    CHECK(form_set(f.forms) ==
          std::set<LinForm>{form(4, {{4, 1}}), form(4, {{1, 1}}), form(4, {{2, 1}, {3, -1}}), form(4, {{3, 1}, {4, -1}})});
    const auto g = irredundant_facets(C2, {1, 2, 1, 2});
    CHECK(form_set(g.forms) ==
          std::set<LinForm>{form(4, {{1, 1}}), form(4, {{2, 2}, {3, -1}}), form(4, {{3, 1}, {4, -2}}), form(4, {{4, 1}})});
    CHECK(f.conflicts.empty());
    CHECK(g.conflicts.empty());
    CHECK(is_simplicial(C2, {2, 1, 2, 1}));
    CHECK_THROWS_AS(is_simplicial(LieType::parse("A2"), {1, 2, 1}), InputError);
  }

  TEST_CASE("folding maps") {
    const LieType C3 = LieType::parse("C3");
    for (const Word& w : {word_iC(3), word_jC(3)}) {
      const SympWiringDiagram d(C3, w);
      const FoldMaps fm = fold_maps(d);
      CHECK(fm.m == std::vector<int>{2, 2, 1});
      CHECK(fm.m_prime == std::vector<int>{1, 1, 2});
      IntMatrix two(9, IntVec(9, 0));
      for (int i = 0; i < 9; ++i) two[i][i] = 2;
      CHECK(multiply(fm.gamma_BC, fm.gamma_CB) == two);
      CHECK(multiply(fm.omega, fm.upsilon) == fm.gamma_BC);
      CHECK(multiply(fm.upsilon, fm.gamma_CB) == fm.psi);
      // type-B facets are the type-C facets pulled back along Gamma^{B,C}
      std::set<LinForm> pulled;
      for (const auto& f : irredundant_facets(C3, w).forms) pulled.insert(pull_back(f, fm.gamma_BC, CoordSpace::A).reduced());
      CHECK(form_set(irredundant_facets(LieType::parse("B3"), w).forms) == pulled);
    }
  }

  TEST_CASE("simplicial classification in rank two") {
    const auto s = classify_simplicial(LieType::parse("C2"));
    std::vector<Word> got;
    for (const auto& r : s) got.push_back(r.letters);
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<Word>{{1, 2, 1, 2}, {2, 1, 2, 1}});
  }

  TEST_CASE("simplicial words in rank three are the commutation classes of i_C and j_C") {
    const LieType C3 = LieType::parse("C3");
    std::set<Word> got;
    for (const auto& r : classify_simplicial(C3)) got.insert(r.letters);
    std::set<Word> want;
    for (const Word& w : {word_iC(3), word_jC(3)})
      for (const auto& v : oracle::commutation_class(C3, w)) want.insert(v);
    CHECK(got == want);
    CHECK(got.size() == 3);
  }
}
