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
#include "stringcone/paths.hpp"

using namespace stringcone;

namespace {

std::vector<oracle::Walk> walks(const std::vector<RigorousPath>& ps) {
  std::vector<oracle::Walk> out;
  for (const auto& p : ps) out.push_back(oracle::as_walk(p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("paths") {
  TEST_CASE("path counts of the type-A examples") {
    const WiringDiagram i(Word{1, 2, 1, 3, 2, 1});
    CHECK(enumerate_paths(i, 1).size() == 3);
    CHECK(enumerate_paths(i, 2).size() == 2);
    CHECK(enumerate_paths(i, 3).size() == 1);
    const WiringDiagram j(Word{1, 3, 2, 1, 3, 2});
    CHECK(enumerate_paths(j, 1).size() == 3);
    CHECK(enumerate_paths(j, 2).size() == 1);
    CHECK(enumerate_paths(j, 3).size() == 3);
  }

  TEST_CASE("enumerator agrees with brute-force walks") {
    for (int rank = 1; rank <= 3; ++rank) {
      for (const auto& w : enumerate_reduced_words(LieType{Family::A, rank})) {
        const WiringDiagram d(w);
        for (int k = 1; k < d.wire_count(); ++k) {
          CAPTURE(format_word(w));
          CAPTURE(k);
          CHECK(walks(enumerate_paths(d, k)) == oracle::naive_paths(w, k));
        }
      }
    }
  }

  TEST_CASE("paths start on wire k and end on wire k+1") {
    const WiringDiagram d(Word{2, 1, 3, 2, 1, 3});
    for (int k = 1; k <= 3; ++k)
      for (const auto& p : enumerate_paths(d, k)) {
        const auto ws = p.wires();
        CHECK(ws.front() == k);
        CHECK(ws.back() == k + 1);
        CHECK(is_rigorous(d, p));
        const auto again = path_from_nodes(d, k, p.nodes());
        REQUIRE(again.has_value());
        CHECK(*again == p);
      }
  }

  TEST_CASE("regions of nested paths are nested") {
    const WiringDiagram d(Word{1, 2, 1, 3, 2, 1});
    const auto ps = enumerate_paths(d, 1);
    std::vector<std::vector<int>> regions;
    for (const auto& p : ps) {
      auto r = enclosed_region(d, p);
      std::sort(r.begin(), r.end());
      regions.push_back(r);
    }
    std::sort(regions.begin(), regions.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (std::size_t i = 1; i < regions.size(); ++i)
      CHECK(std::includes(regions[i].begin(), regions[i].end(), regions[i - 1].begin(), regions[i - 1].end()));
  }

  TEST_CASE("symplectic paths of (2,1,2,1)") {
    const SympWiringDiagram d(LieType::parse("C2"), Word{2, 1, 2, 1});
    CHECK(symp_paths(d, 1).size() == 1);
    CHECK(symp_paths(d, 2).size() == 5);
    CHECK(symp_paths(d).size() == 6);
    int symmetric = 0;
    for (const auto& p : symp_paths(d, 2)) {
      CHECK(mirror(d, mirror(d, p)) == p);
      if (is_symmetric(d, p)) ++symmetric;
    }
    CHECK(symmetric == 3);
    CHECK_THROWS_AS(symp_paths(d, 3), InputError);
  }

  TEST_CASE("extensions are maximal and cover the path") {
    const SympWiringDiagram d(LieType::parse("C3"), Word{3, 2, 1, 3, 2, 3, 2, 1, 2});
    for (const auto& p : symp_paths(d)) {
      const RigorousPath e = extension(d, p);
      CHECK(is_maximal(d, e));
      auto rp = enclosed_region(d.lift(), p);
      auto re = enclosed_region(d.lift(), e);
      std::sort(rp.begin(), rp.end());
      std::sort(re.begin(), re.end());
      CHECK(std::includes(re.begin(), re.end(), rp.begin(), rp.end()));
    }
  }

  TEST_CASE("canonical paths of (3,2,1,3,2,3,2,1,2)") {
    const SympWiringDiagram d(LieType::parse("C3"), Word{3, 2, 1, 3, 2, 3, 2, 1, 2});
    std::set<std::vector<int>> got;
    for (const auto& c : canonical_paths(d)) got.insert(c.path.wires());
    const std::set<std::vector<int>> want = {
        {3, 6, 1, 4}, {3, 2, 6, 1, 5, 4}, {3, 2, 1, 6, 5, 4}, {1, 2}, {1, 3, 2}};
    CHECK(got == want);
  }

  TEST_CASE("canonical lift paths need a node on an outer wire") {
    const SympWiringDiagram d(LieType::parse("C2"), Word{2, 1, 2, 1});
    for (int j = 0; j < d.lift().length(); ++j) {
      const Node& x = d.lift().node(j);
      if (x.lo != 1 && x.hi != 4) CHECK_THROWS_AS(canonical_lift_path(d, j), InputError);
    }
  }

  TEST_CASE("contraction image consists of paths of the diagram") {
    const LieType C3 = LieType::parse("C3");
    for (const Word& w : {word_iC(3), word_jC(3), Word{1, 3, 2, 1, 3, 2, 1, 3, 2}}) {
      const SympWiringDiagram d(C3, w);
      const auto all = symp_paths(d);
      const auto image = contraction_image(d);
      CHECK(image.size() == symp_paths(SympWiringDiagram(LieType::parse("C2"), contract(C3, w))).size());
      for (const auto& p : image) {
        CHECK(std::find(all.begin(), all.end(), p) != all.end());
        CHECK_FALSE(is_new(d, p));
      }
    }
  }
}
