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

#include "oracles.hpp"
#include "stringcone/weyl.hpp"

using namespace stringcone;

TEST_SUITE("weyl") {
  TEST_CASE("lie types parse and report lengths") {
    CHECK(LieType::parse("A3") == LieType{Family::A, 3});
    CHECK(LieType::parse("C3").str() == "C3");
    CHECK(longest_length(LieType::parse("A4")) == 10);
    CHECK(longest_length(LieType::parse("B3")) == 9);
    CHECK(LieType::parse("C3").wire_count() == 6);
    CHECK_THROWS_AS(LieType::parse("D4"), InputError);
    CHECK_THROWS_AS(LieType::parse("C1"), InputError);
  }

  TEST_CASE("reduced words agree with braid-move closure") {
    for (const char* name : {"A2", "A3", "A4", "B2", "C2", "C3", "B3"}) {
      const LieType t = LieType::parse(name);
      const auto words = enumerate_reduced_words(t);
      const auto closed = oracle::braid_closure(t, words.front());
      CAPTURE(name);
      CHECK(words == closed);  // both sorted
      CHECK(std::is_sorted(words.begin(), words.end()));
    }
    CHECK(enumerate_reduced_words(LieType::parse("C3")).size() == 42);
    CHECK(enumerate_reduced_words(LieType::parse("A4")).size() == 768);
  }

  TEST_CASE("enumeration cap raises a resource error") {
    CHECK_THROWS_AS(enumerate_reduced_words(LieType::parse("A4"), 10), ResourceError);
  }

  TEST_CASE("reducedness and products") {
    const LieType C2 = LieType::parse("C2");
    CHECK(is_reduced(C2, {2, 1, 2, 1}));
    CHECK_FALSE(is_reduced(C2, {2, 2}));
    CHECK(reflection_product(C2, {2}) == std::vector<int>{1, -2});
    const LieType A2 = LieType::parse("A2");
    CHECK(reflection_product(A2, {1, 2, 1}) == std::vector<int>{3, 2, 1});
    CHECK(coxeter_length(A2, {3, 2, 1}) == 3);
    CHECK_THROWS_AS(is_reduced(A2, {3}), InputError);
  }

  TEST_CASE("lift and contraction") {
    const LieType C3 = LieType::parse("C3");
    const Word w{1, 3, 2, 1, 3, 2, 1, 3, 2};
    CHECK(lift(C3, w) == Word{1, 5, 3, 2, 4, 1, 5, 3, 2, 4, 1, 5, 3, 2, 4});
    CHECK(contract(C3, w) == Word{2, 1, 2, 1});
    CHECK(delete_wires(lift(C3, w), 6, {1, 6}) == Word{2, 1, 3, 2, 1, 3});
    CHECK_THROWS_AS(contract(LieType::parse("C2"), {2, 1, 2, 1}), DomainError);
    for (const auto& v : enumerate_reduced_words(C3)) {
      const Word c = contract(C3, v);
      CHECK(is_reduced(LieType::parse("C2"), c));
      CHECK(c.size() == 4);
    }
  }

  TEST_CASE("special words") {
    CHECK(word_iC(3) == Word{3, 2, 3, 2, 1, 2, 3, 2, 1});
    CHECK(word_jC(3) == Word{2, 3, 2, 3, 1, 2, 3, 2, 1});
    CHECK(word_iC(2) == Word{2, 1, 2, 1});
    CHECK(word_jC(2) == Word{1, 2, 1, 2});
    for (int n = 2; n <= 4; ++n) {
      CHECK(is_reduced(LieType{Family::C, n}, word_iC(n)));
      CHECK(is_reduced(LieType{Family::C, n}, word_jC(n)));
      CHECK(static_cast<int>(word_jC(n).size()) == n * n);
    }
  }

  TEST_CASE("cartan pairing") {
    const LieType C3 = LieType::parse("C3"), B3 = LieType::parse("B3"), A3 = LieType::parse("A3");
    CHECK(cartan_pairing(C3, 3, 2) == -2);
    CHECK(cartan_pairing(C3, 2, 3) == -1);
    CHECK(cartan_pairing(B3, 2, 3) == -2);
    CHECK(cartan_pairing(B3, 3, 2) == -1);
    CHECK(cartan_pairing(A3, 1, 3) == 0);
    CHECK(cartan_pairing(A3, 2, 2) == 2);
  }

  TEST_CASE("weights") {
    const LieType C3 = LieType::parse("C3");
    CHECK(Weight::parse(C3, "rho").coeffs == std::vector<long>{1, 1, 1});
    CHECK(Weight::parse(C3, "0").coeffs == std::vector<long>{0, 0, 0});
    CHECK(Weight::parse(C3, "2,0,1").coeffs == std::vector<long>{2, 0, 1});
    CHECK_FALSE(Weight::parse(C3, "2,0,1").regular());
    CHECK_THROWS_AS(Weight::parse(C3, "1,-1,0"), InputError);
    CHECK_THROWS_AS(Weight::parse(C3, "1,1"), InputError);
  }
}
