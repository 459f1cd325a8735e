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

#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace stringcone::oracle {

namespace {

struct Crossing {
  int a, b;  // the two wires
};

int wire_count_of(const Word& w) {
  int m = 2;
  while (m * (m - 1) / 2 < static_cast<int>(w.size())) ++m;
  return m;
}

// crossings in order from the top, and for each wire the crossings it meets
void simulate(const Word& w, std::vector<Crossing>& xs, std::vector<std::vector<int>>& along) {
  const int m = wire_count_of(w);
  std::vector<int> at(m);
  std::iota(at.begin(), at.end(), 1);
  along.assign(m + 1, {});
  xs.clear();
  for (std::size_t j = 0; j < w.size(); ++j) {
    const int c = w[j] - 1;
    xs.push_back({at[c], at[c + 1]});
    along[at[c]].push_back(static_cast<int>(j));
    along[at[c + 1]].push_back(static_cast<int>(j));
    std::swap(at[c], at[c + 1]);
  }
}

}  // namespace

std::vector<Walk> naive_paths(const Word& w, int k) {
  std::vector<Crossing> xs;
  std::vector<std::vector<int>> along;
  simulate(w, xs, along);
  std::vector<std::pair<Walk, std::vector<int>>> walks;  // walk with the wires travelled into each node
  Walk cur;
  std::vector<int> in_wires;
  std::set<int> used;
  std::function<void(int, int)> go = [&](int wire, int idx) {
    // idx: position in along[wire] of the next crossing in travel direction
    const bool up = wire <= k;
    if (idx < 0 || idx >= static_cast<int>(along[wire].size())) {
      if (wire == k + 1 && !up) walks.push_back({cur, in_wires});
      return;
    }
    const int x = along[wire][idx];
    if (used.count(x)) return;
    used.insert(x);
    const int other = xs[x].a == wire ? xs[x].b : xs[x].a;
    for (int out : {wire, other}) {
      cur.moves.push_back({x, out});
      in_wires.push_back(wire);
      const auto& v = along[out];
      const int pos = static_cast<int>(std::find(v.begin(), v.end(), x) - v.begin());
      go(out, out <= k ? pos - 1 : pos + 1);
      cur.moves.pop_back();
      in_wires.pop_back();
    }
    used.erase(x);
  };
  go(k, static_cast<int>(along[k].size()) - 1);
  std::vector<Walk> out;
  for (const auto& [walk, ins] : walks) {
    bool ok = true;
    for (std::size_t i = 0; i < walk.moves.size() && ok; ++i) {
      const auto [x, o] = walk.moves[i];
      const int r = ins[i];
      if (o != r) continue;
      const int s = xs[x].a == r ? xs[x].b : xs[x].a;
      if (r <= k && s <= k && r < s) ok = false;
      if (r > k && s > k && r > s) ok = false;
    }
    if (ok) out.push_back(walk);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Walk as_walk(const RigorousPath& p) {
  Walk w;
  for (const auto& s : p.steps) w.moves.push_back({s.node, s.out});
  return w;
}

IntVec path_functional(const Word& w, const Walk& p, int k) {
  IntVec f(w.size(), 0);
  int wire = k;
  for (const auto& [x, out] : p.moves) {
    if (out > wire) f[x] += 1;
    if (out < wire) f[x] -= 1;
    wire = out;
  }
  return f;
}

namespace {

std::vector<Word> neighbours(LieType t, const Word& w, bool braids) {
  std::vector<Word> out;
  const int n = t.rank;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (std::abs(w[i] - w[i + 1]) >= 2) {
      Word v = w;
      std::swap(v[i], v[i + 1]);
      out.push_back(v);
    }
    if (!braids) continue;
    if (i + 2 < w.size() && w[i] == w[i + 2] && std::abs(w[i] - w[i + 1]) == 1) {
      const bool long_move = t.family != Family::A && std::max(w[i], w[i + 1]) == n;
      if (!long_move) {
        Word v = w;
        v[i] = v[i + 2] = w[i + 1];
        v[i + 1] = w[i];
        out.push_back(v);
      }
    }
    if (t.family != Family::A && i + 3 < w.size() && w[i] == w[i + 2] && w[i + 1] == w[i + 3] &&
        std::max(w[i], w[i + 1]) == n && std::min(w[i], w[i + 1]) == n - 1) {
      Word v = w;
      std::swap(v[i], v[i + 1]);
      std::swap(v[i + 2], v[i + 3]);
      out.push_back(v);
    }
  }
  return out;
}

std::vector<Word> closure(LieType t, const Word& start, bool braids) {
  std::set<Word> seen{start};
  std::deque<Word> q{start};
  while (!q.empty()) {
    Word w = q.front();
    q.pop_front();
    for (auto& v : neighbours(t, w, braids))
      if (seen.insert(v).second) q.push_back(v);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<Word> braid_closure(LieType t, const Word& start) { return closure(t, start, true); }

std::vector<Word> commutation_class(LieType t, const Word& w) { return closure(t, w, false); }

std::uint64_t box_count(const HRep& h, const std::vector<long long>& lo,
                        const std::vector<long long>& hi) {
  const int d = h.dim;
  std::vector<long long> x(lo);
  std::uint64_t count = 0;
  for (;;) {
    Vec v;
    for (long long c : x) v.emplace_back(static_cast<long>(c));
    if (h.contains(v)) ++count;
    int i = 0;
    while (i < d && x[i] == hi[i]) {
      x[i] = lo[i];
      ++i;
    }
    if (i == d) break;
    ++x[i];
  }
  return count;
}

std::vector<Vec> cone_facets_from_rays(int dim, const std::vector<Vec>& rays) {
  HRep polar(dim);
  for (const auto& r : rays) {
    Vec a;
    for (const auto& x : r) a.push_back(-x);
    polar.rows.push_back({a, 0});
  }
  return to_vrep(polar).rays;
}

}  // namespace stringcone::oracle
