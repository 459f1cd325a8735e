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

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "stringcone/errors.hpp"

namespace stringcone {

using Rat = mpq_class;
using Vec = std::vector<Rat>;
using IntVec = std::vector<long long>;
using IntMatrix = std::vector<IntVec>;
using Bits = boost::dynamic_bitset<>;

// a.x <= b
struct Halfspace {
  Vec a;
  Rat b;
  bool operator==(const Halfspace& o) const { return a == o.a && b == o.b; }
};

struct HRep {
  int dim = 0;
  std::vector<Halfspace> rows;

  HRep() = default;
  explicit HRep(int d) : dim(d) {}
  void add_le(const Vec& a, const Rat& b);
  void add_ge(const Vec& a, const Rat& b);
  bool contains(const Vec& x) const;
  bool is_cone() const;
};

// scales a row to coprime integer coefficients (the right-hand side follows)
Halfspace normalize(const Halfspace& h);
Vec to_vec(const IntVec& v);

struct VRep {
  std::vector<Vec> vertices;
  std::vector<Vec> rays;
};

struct UnboundedError : std::domain_error {
  Vec ray;
  explicit UnboundedError(Vec r)
      : std::domain_error("polyhedron is unbounded"), ray(std::move(r)) {}
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rat value;
  Vec x;
};

// min c.y subject to M y = r, y >= 0 (two-phase simplex, Bland's rule)
LPResult lp_standard(const std::vector<Vec>& M, const Vec& r, const Vec& c);
// max c.x subject to h
LPResult lp_maximize(const HRep& h, const Vec& c);
bool feasible(const HRep& h);
// row i is implied by the other rows
bool is_redundant(const HRep& h, std::size_t i);

VRep to_vrep(const HRep& h);
HRep remove_redundant(const HRep& h);
// smallest affine subspace containing the points; returns its dimension
int affine_dimension(const std::vector<Vec>& pts);
// rank of the rows tight at x; x is a vertex iff it lies in h and this equals dim
int tight_rank(const HRep& h, const Vec& x);
bool is_vertex(const HRep& h, const Vec& x);

struct FaceLattice {
  int dim = 0;
  std::vector<Vec> vertices;
  std::vector<Halfspace> facets;
  // faces[d] lists the faces of dimension d as vertex sets; faces[dim] = {all vertices}
  std::vector<std::vector<Bits>> faces;
  // children[d][i]: indices into faces[d-1] of the facets of faces[d][i]
  std::vector<std::vector<std::vector<int>>> children;
  std::vector<long> f_vector() const;
};

FaceLattice face_lattice(const HRep& h);
std::vector<long> f_vector(const HRep& h);

struct Integrality {
  bool integral = true;
  std::optional<Vec> witness;
};

Integrality integrality(const HRep& h);
Integrality integrality(const VRep& v);

inline constexpr std::uint64_t kDefaultBoxCap = 1'000'000'000'000ULL;
std::uint64_t lattice_points(const HRep& h, std::uint64_t cap = kDefaultBoxCap);
HRep dilate(const HRep& h, long t);
// d! * volume for a full-dimensional polytope; lattice-normalised within the ambient lattice
Rat normalized_volume(const FaceLattice& fl);

bool is_unimodular(const IntMatrix& U);
bool verify_unimodular_map(const HRep& p, const HRep& q, const IntMatrix& U, const IntVec& v);
bool verify_unimodular_map(const VRep& p, const VRep& q, const IntMatrix& U, const IntVec& v);

struct Invariants {
  std::vector<long> f_vector;
  bool integral = true;
  std::optional<Vec> non_integral_vertex;
  std::uint64_t lattice_t1 = 0;
  std::uint64_t lattice_t2 = 0;
  Rat volume;
};

Invariants compute_invariants(const HRep& h);

enum class Verdict { Equivalent, Inequivalent, Unknown };

struct EquivalenceResult {
  Verdict verdict = Verdict::Unknown;
  IntMatrix U;
  IntVec shift;
  std::string witness;  // name of the distinguishing invariant, or how the map was found
  Invariants p_inv, q_inv;
  long candidates_tested = 0;
};

struct EquivalenceOptions {
  long budget = 2'000'000;  // candidate matrices tried in the anchored search
  bool full_battery = false;  // compute every invariant even after a mismatch
};

EquivalenceResult search_unimodular_equivalence(const HRep& p, const HRep& q,
                                                const EquivalenceOptions& opt = {});

std::string to_string(const Rat& r);
std::string to_string(const Vec& v);
std::string to_string(Verdict v);

}  // namespace stringcone
