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

#include "stringcone/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace stringcone {

namespace {

int wires_for_length(std::size_t len) {
  int m = 1;
  while (static_cast<std::size_t>(m * (m - 1) / 2) < len) ++m;
  if (static_cast<std::size_t>(m * (m - 1) / 2) != len)
    throw InputError("word length " + std::to_string(len) + " is not m(m-1)/2");
  return m;
}

}  // namespace

WiringDiagram::WiringDiagram(const Word& word) : word_(word) {
  m_ = word.empty() ? 1 : wires_for_length(word.size());
  LieType t{Family::A, m_ - 1};
  if (m_ < 2 || !is_reduced(t, word))
    throw InputError("not a reduced word of the longest element: " + format_word(word));
  std::vector<int> cur(m_);
  std::iota(cur.begin(), cur.end(), 1);
  auto record = [&] {
    levels_.push_back(cur);
    std::vector<int> p(m_);
    for (int i = 0; i < m_; ++i) p[cur[i] - 1] = i + 1;
    pos_.push_back(p);
  };
  record();
  wire_nodes_.assign(m_, {});
  for (std::size_t j = 0; j < word.size(); ++j) {
    int c = word[j];
    Node nd;
    nd.index = static_cast<int>(j);
    nd.column = c;
    nd.lo = std::min(cur[c - 1], cur[c]);
    nd.hi = std::max(cur[c - 1], cur[c]);
    nodes_.push_back(nd);
    wire_nodes_[nd.lo - 1].push_back(nd.index);
    wire_nodes_[nd.hi - 1].push_back(nd.index);
    std::swap(cur[c - 1], cur[c]);
    record();
  }
}

int WiringDiagram::rank_on_wire(int wire, int j) const {
  const auto& v = wire_nodes_[wire - 1];
  auto it = std::find(v.begin(), v.end(), j);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

WiringDiagram build_diagram(const Word& w) { return WiringDiagram(w); }

SympWiringDiagram::SympWiringDiagram(LieType type, const Word& word) : type_(type), word_(word) {
  if (type.family == Family::A) throw InputError("symplectic diagram needs type B or C");
  if (!is_reduced(type, word))
    throw InputError("not a reduced word of the longest element: " + format_word(word));
  lift_ = WiringDiagram(stringcone::lift(type, word));
  const int n = type.rank;
  int node = 0;
  for (std::size_t j = 0; j < word.size(); ++j) {
    std::vector<int> ids;
    if (word[j] == n) {
      labels_.push_back({static_cast<int>(j), Side::Wall});
      mirror_.push_back(node);
      ids.push_back(node++);
    } else {
      labels_.push_back({static_cast<int>(j), Side::Left});
      labels_.push_back({static_cast<int>(j), Side::Right});
      mirror_.push_back(node + 1);
      mirror_.push_back(node);
      ids.push_back(node++);
      ids.push_back(node++);
    }
    letter_nodes_.push_back(ids);
  }
}

SympWiringDiagram build_symp_diagram(LieType t, const Word& w) { return SympWiringDiagram(t, w); }

std::string symp_wire_name(int n, int wire) {
  if (wire <= n) return std::to_string(wire);
  return std::to_string(2 * n + 1 - wire) + "̄";
}

std::string symp_node_name(const SympWiringDiagram& d, int node) {
  const auto& l = d.label(node);
  std::string s = "t";
  if (l.side == Side::Left) s = "t̄";
  return s + std::to_string(l.letter + 1);
}

OrientedDiagram orient(const WiringDiagram& d, int k) {
  if (k < 1 || k >= d.wire_count())
    throw InputError("orientation k=" + std::to_string(k) + " outside [1, m-1]");
  return {&d, k};
}

OrientedDiagram orient(const SympWiringDiagram& d, int k) {
  if (k < 1 || k > d.rank())
    throw InputError("symplectic orientation k=" + std::to_string(k) + " outside [1, n]");
  return {&d.lift(), k};
}

ChamberStructure chamber_structure(const WiringDiagram& d) {
  ChamberStructure cs;
  const int len = d.length();
  cs.phi.assign(len, std::vector<int>(len, 0));
  for (int j = 0; j < len; ++j) {
    Chamber ch;
    ch.top = j;
    const int c = d.node(j).column;
    for (int l = j + 1; l < len; ++l)
      if (d.node(l).column == c) {
        ch.bottom = l;
        break;
      }
    const int end = ch.bottom < 0 ? len : ch.bottom;
    ch.plus.push_back(j);
    if (ch.bottom >= 0) ch.plus.push_back(ch.bottom);
    for (int l = j + 1; l < end; ++l)
      if (std::abs(d.node(l).column - c) == 1) ch.minus.push_back(l);
    for (int p : ch.plus) cs.phi[j][p] += 1;
    for (int q : ch.minus) cs.phi[j][q] -= 1;
    cs.chambers.push_back(std::move(ch));
  }
  return cs;
}

long long integer_determinant(std::vector<std::vector<long long>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return static_cast<long long>(sign * a[n - 1][n - 1]);
}

}  // namespace stringcone
