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

#include <vector>

#include "stringcone/weyl.hpp"

namespace stringcone {

// Wires are labelled 1..m, positions are 1..m from the left, nodes 0..l-1 from the top.
struct Node {
  int index = 0;
  int column = 0;  // swaps positions column and column+1
  int lo = 0;      // smaller wire label (left above the crossing)
  int hi = 0;

  int other(int wire) const { return wire == lo ? hi : lo; }
};

class WiringDiagram {
 public:
  WiringDiagram() = default;
  explicit WiringDiagram(const Word& word);

  const Word& word() const { return word_; }
  int wire_count() const { return m_; }
  int length() const { return static_cast<int>(nodes_.size()); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(int j) const { return nodes_[j]; }
  // arrangement()[t][p-1] = wire at position p after t crossings
  const std::vector<std::vector<int>>& arrangement() const { return levels_; }
  int position(int wire, int level) const { return pos_[level][wire - 1]; }
  // nodes on a wire, top to bottom
  const std::vector<int>& wire_nodes(int wire) const { return wire_nodes_[wire - 1]; }
  // index of node j within wire_nodes(wire), or -1
  int rank_on_wire(int wire, int j) const;

 private:
  Word word_;
  int m_ = 0;
  std::vector<Node> nodes_;
  std::vector<std::vector<int>> levels_;
  std::vector<std::vector<int>> pos_;
  std::vector<std::vector<int>> wire_nodes_;
};

WiringDiagram build_diagram(const Word& w);

enum class Side { Left, Right, Wall };

struct SympLabel {
  int letter = 0;  // 0-based letter index j of the B/C word
  Side side = Side::Wall;
};

// Symplectic diagram: the lift's wiring diagram with wire r read as l_r for r <= n
// and l_{bar(2n+1-r)} otherwise.
class SympWiringDiagram {
 public:
  SympWiringDiagram() = default;
  SympWiringDiagram(LieType type, const Word& word);

  LieType type() const { return type_; }
  int rank() const { return type_.rank; }
  const Word& word() const { return word_; }
  const WiringDiagram& lift() const { return lift_; }
  const SympLabel& label(int node) const { return labels_[node]; }
  int mirror_node(int node) const { return mirror_[node]; }
  int bar(int wire) const { return 2 * type_.rank + 1 - wire; }
  // lift nodes of letter j: {left, right} or {wall}
  const std::vector<int>& letter_nodes(int j) const { return letter_nodes_[j]; }
  bool on_wall(int node) const { return labels_[node].side == Side::Wall; }

 private:
  LieType type_;
  Word word_;
  WiringDiagram lift_;
  std::vector<SympLabel> labels_;
  std::vector<int> mirror_;
  std::vector<std::vector<int>> letter_nodes_;
};

SympWiringDiagram build_symp_diagram(LieType t, const Word& w);

// "1".."n" then "n̄".."1̄", the bar written as a combining macron
std::string symp_wire_name(int n, int wire);
// "t3", "t̄3" (1-based letter numbers)
std::string symp_node_name(const SympWiringDiagram& d, int node);

struct OrientedDiagram {
  const WiringDiagram* base = nullptr;
  int k = 1;
  bool upward(int wire) const { return wire <= k; }
};

OrientedDiagram orient(const WiringDiagram& d, int k);
// symplectic orientation k in [n]
OrientedDiagram orient(const SympWiringDiagram& d, int k);

struct Chamber {
  int top = 0;
  int bottom = -1;  // next node in the same column, -1 if open to the bottom
  std::vector<int> plus;
  std::vector<int> minus;
};

struct ChamberStructure {
  std::vector<Chamber> chambers;
  // phi[j][k]: coefficient of a_k in Phi*(u_j)
  std::vector<std::vector<int>> phi;
};

ChamberStructure chamber_structure(const WiringDiagram& d);

long long integer_determinant(std::vector<std::vector<long long>> m);

}  // namespace stringcone
