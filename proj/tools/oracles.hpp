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

// Brute-force reference computations, written independently of the core algorithms.

#include <cstdint>
#include <vector>

#include "stringcone/polytopes.hpp"

namespace stringcone::oracle {

// a walk as the list of (node, outgoing wire); ends at the bottom of wire k+1
struct Walk {
  std::vector<std::pair<int, int>> moves;
  bool operator<(const Walk& o) const { return moves < o.moves; }
  bool operator==(const Walk& o) const { return moves == o.moves; }
};

// every oriented walk from L_k to L_{k+1} visiting each crossing at most once,
// then filtered by the forbidden straight passes
std::vector<Walk> naive_paths(const Word& w, int k);
Walk as_walk(const RigorousPath& p);

// string coordinates of the type-A functional computed from the wire expression
IntVec path_functional(const Word& w, const Walk& p, int k);

// reduced words of w0 by breadth-first closure under braid moves from one word
std::vector<Word> braid_closure(LieType t, const Word& start);

// lattice points of a bounded polytope by scanning an explicit box
std::uint64_t box_count(const HRep& h, const std::vector<long long>& lo,
                        const std::vector<long long>& hi);

// facets of the cone generated by rays, via the polar cone
std::vector<Vec> cone_facets_from_rays(int dim, const std::vector<Vec>& rays);

// words reachable from w by commutation moves only
std::vector<Word> commutation_class(LieType t, const Word& w);

}  // namespace stringcone::oracle
