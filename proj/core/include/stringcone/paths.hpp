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

#include <optional>
#include <vector>

#include "stringcone/diagram.hpp"

namespace stringcone {

// One crossing passed by a path: it arrives along `in` and leaves along `out`.
struct Step {
  int node = 0;
  int in = 0;
  int out = 0;
  bool switches() const { return in != out; }
  bool operator==(const Step&) const = default;
};

struct RigorousPath {
  int k = 1;
  std::vector<Step> steps;

  // node expression: crossings where the path changes wires
  std::vector<int> nodes() const;
  // wire expression r_1 -> ... -> r_{s+1}
  std::vector<int> wires() const;
  // local height maxima: switches from an upward to a downward wire
  std::vector<int> peaks() const;

  bool operator==(const RigorousPath& o) const { return k == o.k && steps == o.steps; }
  bool operator<(const RigorousPath& o) const;
};

std::vector<RigorousPath> enumerate_paths(const OrientedDiagram& d);
std::vector<RigorousPath> enumerate_paths(const WiringDiagram& d, int k);

bool is_rigorous(const WiringDiagram& d, const RigorousPath& p);
// rebuilds a path from its node expression; nullopt if that is not a rigorous path
std::optional<RigorousPath> path_from_nodes(const WiringDiagram& d, int k,
                                            const std::vector<int>& switch_nodes);

// chambers are indexed by their top node
std::vector<int> enclosed_region(const WiringDiagram& d, const RigorousPath& p);
// true iff the open wire segment directly below `upper` on `wire` lies in the
// closed region enclosed by p
bool segment_in_region(const WiringDiagram& d, const RigorousPath& p, int wire, int upper);

// symplectic paths: union over k = 1..n of the lift's paths
std::vector<RigorousPath> symp_paths(const SympWiringDiagram& d);
std::vector<RigorousPath> symp_paths(const SympWiringDiagram& d, int k);

RigorousPath mirror(const SympWiringDiagram& d, const RigorousPath& p);
bool is_symmetric(const SympWiringDiagram& d, const RigorousPath& p);
std::vector<int> mirror_region(const SympWiringDiagram& d, const std::vector<int>& region);

// no Q in GP(i,k) with C(Q) inside C(P) u C(P^v) but not inside C(P)
bool is_maximal(const SympWiringDiagram& d, const RigorousPath& p);
RigorousPath extension(const SympWiringDiagram& d, const RigorousPath& p);

struct CanonicalPath {
  std::vector<int> peaks;  // lift nodes on l_1 / l_1bar whose type-A canonical paths give this path
  std::vector<RigorousPath> lift_paths;
  RigorousPath path;
};

// the type-A canonical path of the lift with unique peak at `node`, a crossing on wire 1 or 2n
std::optional<RigorousPath> canonical_lift_path(const SympWiringDiagram& d, int node);
std::vector<CanonicalPath> canonical_paths(const SympWiringDiagram& d);

// image of the contraction's symplectic paths in this diagram
std::vector<RigorousPath> contraction_image(const SympWiringDiagram& d);
bool is_new(const SympWiringDiagram& d, const RigorousPath& p);

}  // namespace stringcone
