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

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "stringcone/errors.hpp"

namespace stringcone {

enum class Family { A, B, C };

struct LieType {
  Family family = Family::A;
  int rank = 1;

  // "A3", "B2", "C3"
  static LieType parse(std::string_view text);
  std::string str() const;
  // number of wires of the (lifted) wiring diagram: rank+1 in type A, 2n in B/C
  int wire_count() const;
  bool operator==(const LieType&) const = default;
};

using Word = std::vector<int>;

struct ReducedWord {
  LieType type;
  Word letters;
};

Word parse_word(std::string_view text);
std::string format_word(const Word& w);

int longest_length(LieType t);

// Product of simple reflections. Type A: permutation of 1..m in window notation.
// Types B/C: signed permutation of 1..n, s_n negates the last entry.
std::vector<int> reflection_product(LieType t, const Word& letters);
int coxeter_length(LieType t, const std::vector<int>& element);

bool is_reduced(LieType t, const Word& letters);

inline constexpr std::size_t kDefaultWordCap = 10'000'000;

// Streams R(w0) in lexicographic order; the callback returns false to stop early.
void for_each_reduced_word(LieType t, const std::function<bool(const Word&)>& emit,
                           std::size_t cap = kDefaultWordCap);
std::vector<Word> enumerate_reduced_words(LieType t, std::size_t cap = kDefaultWordCap);

Word lift(LieType t, const Word& w);
// Deletes the given wires from the type-A wiring diagram of w on m wires.
Word delete_wires(const Word& w, int m, const std::vector<int>& wires);
Word contract(LieType t, const Word& w);

int cartan_pairing(LieType t, int i, int j);

struct Weight {
  LieType type;
  std::vector<long> coeffs;

  // "rho", "0" or comma-separated coefficients
  static Weight parse(LieType t, std::string_view text);
  static Weight rho(LieType t);
  bool dominant() const;
  bool regular() const;
};

// (n, n-1,n,n-1, n-2,...,n,...,n-2, ..., 1,2,...,n,...,2,1)
Word word_iC(int n);
// (n-1,n,n-1,n, n-2,...,n,...,n-2, ..., 1,...,n,...,1)
Word word_jC(int n);

}  // namespace stringcone
