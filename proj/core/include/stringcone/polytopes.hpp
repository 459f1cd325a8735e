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

#include <string>
#include <vector>

#include "stringcone/cones.hpp"

namespace stringcone {

// a . x <= lambda . weight
struct SymbolicRow {
  IntVec a;
  IntVec lambda;
};

struct LambdaCone {
  LieType type;
  Word word;
  std::vector<SymbolicRow> rows;  // k = l, ..., 1

  HRep specialize(const Weight& lambda) const;
};

LambdaCone lambda_cone_symbolic(LieType t, const Word& w);
HRep lambda_cone(LieType t, const Word& w, const Weight& lambda);
// string cone constraints followed by the lambda-cone constraints
HRep string_polytope(LieType t, const Word& w, const Weight& lambda);

struct GTShape {
  int n = 0;
  // coordinate index of a^{(i)}_k or b^{(i)}_k (1-based i, k); b needs i >= 2
  int a(int i, int k) const;
  int b(int i, int k) const;
  int size() const { return n * n; }
  std::vector<std::string> labels() const;
};

GTShape gt_shape(int n);
HRep gt_polytope_C(const Weight& lambda, int n);

struct GTWordReport {
  Word word;
  int cone_facets = 0;
  bool simplicial = false;
  EquivalenceResult result;
};

struct GTTheoremReport {
  int n = 0;
  Invariants gt;
  std::vector<GTWordReport> words;
  std::vector<Word> equivalent;
  bool holds = false;  // equivalent exactly for i_C and every other word refuted
};

GTTheoremReport verify_gt_theorem(int n, const EquivalenceOptions& opt = {});

}  // namespace stringcone
