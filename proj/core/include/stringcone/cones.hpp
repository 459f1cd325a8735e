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

#include "stringcone/paths.hpp"
#include "stringcone/polyhedra.hpp"

namespace stringcone {

// a: string coordinates of the word; t: coordinates of the lift (one per lift node)
enum class CoordSpace { A, T };

struct LinForm {
  CoordSpace space = CoordSpace::A;
  IntVec coeffs;

  bool operator==(const LinForm&) const = default;
  bool operator<(const LinForm& o) const { return coeffs < o.coeffs; }
  // divides by the content; the direction of the inequality form >= 0 is kept
  LinForm reduced() const;
  bool is_zero() const;
};

// "a2 - a3", "2a1"
std::string format_form(const LinForm& f);
// t-forms with the symplectic node names of d
std::string format_form(const SympWiringDiagram& d, const LinForm& f);

LinForm functional_A(const WiringDiagram& d, const RigorousPath& p);
// hat-F on the lift's t-coordinates
LinForm functional_T(const SympWiringDiagram& d, const RigorousPath& p);
// hat-F^(C) = hat-F o Psi
LinForm functional_hat_C(const SympWiringDiagram& d, const RigorousPath& p);
// F^(C): hat-F^(C), halved when p is symmetric
LinForm functional_C(const SympWiringDiagram& d, const RigorousPath& p);
// hat-F^(B) = hat-F o Upsilon, for any path of the lift
LinForm functional_B(const SympWiringDiagram& d, const RigorousPath& p);

struct FoldMaps {
  LieType type;
  Word word;
  std::vector<int> m;        // (2,...,2,1) indexed by simple root
  std::vector<int> m_prime;  // (1,...,1,2)
  IntMatrix upsilon;         // t <- a, duplication
  IntMatrix gamma_BC;
  IntMatrix gamma_CB;
  IntMatrix omega;           // a <- t, pairwise sums
  IntMatrix psi;             // upsilon * gamma_CB
};

FoldMaps fold_maps(const SympWiringDiagram& d);
IntMatrix multiply(const IntMatrix& x, const IntMatrix& y);
Vec apply_matrix(const IntMatrix& x, const Vec& v);
// f o M for a form f on the target of M
LinForm pull_back(const LinForm& f, const IntMatrix& M, CoordSpace source);

// each constraint means form >= 0
struct HRepCone {
  LieType type;
  Word word;
  int dim = 0;
  std::vector<LinForm> constraints;
  std::vector<RigorousPath> paths;  // generating path of each constraint

  HRep to_hrep() const;
};

HRepCone string_cone(LieType t, const Word& w);

struct FacetSystem {
  HRepCone cone;                // every path constraint, duplicates kept
  std::vector<int> facets;      // indices into cone.constraints, one per facet
  std::vector<LinForm> forms;   // reduced facet normals, same order
  int facet_count() const { return static_cast<int>(facets.size()); }
  // combinatorial criteria that disagree with the LP answer; empty when consistent
  std::vector<std::string> conflicts;
};

FacetSystem irredundant_facets(LieType t, const Word& w);

bool is_simplicial(LieType t, const Word& w);

struct WordFacets {
  Word word;
  int facets = 0;
};

// facet counts over all of R(w0)
std::vector<WordFacets> facet_census(LieType t, std::size_t cap = kDefaultWordCap);
std::vector<ReducedWord> classify_simplicial(LieType t, std::size_t cap = kDefaultWordCap);

}  // namespace stringcone
