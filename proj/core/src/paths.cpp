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

#include "stringcone/paths.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace stringcone {

std::vector<int> RigorousPath::nodes() const {
  std::vector<int> out;
  for (const auto& s : steps)
    if (s.switches()) out.push_back(s.node);
  return out;
}

std::vector<int> RigorousPath::wires() const {
  std::vector<int> out{k};
  for (const auto& s : steps)
    if (s.switches()) out.push_back(s.out);
  return out;
}

std::vector<int> RigorousPath::peaks() const {
  std::vector<int> out;
  for (const auto& s : steps)
    if (s.in <= k && s.out > k) out.push_back(s.node);
  return out;
}

bool RigorousPath::operator<(const RigorousPath& o) const {
  if (k != o.k) return k < o.k;
  return nodes() < o.nodes();
}

namespace {

// next crossing along `wire` after `from` (-1: the starting end) in the wire's direction;
// -1 when the wire ends
int next_on_wire(const WiringDiagram& d, int wire, int from, bool up) {
  const auto& v = d.wire_nodes(wire);
  if (from < 0) return up ? v.back() : v.front();
  int r = d.rank_on_wire(wire, from);
  r += up ? -1 : 1;
  if (r < 0 || r >= static_cast<int>(v.size())) return -1;
  return v[r];
}

bool forbidden_straight(int wire, int other, int k) {
  const bool up = wire <= k, oup = other <= k;
  if (up != oup) return false;
  return up ? wire < other : wire > other;
}

}  // namespace

std::vector<RigorousPath> enumerate_paths(const OrientedDiagram& od) {
  const WiringDiagram& d = *od.base;
  const int k = od.k;
  std::vector<RigorousPath> out;
  std::vector<char> seen(d.length(), 0);
  RigorousPath cur;
  cur.k = k;
  std::function<void(int, int)> walk = [&](int wire, int from) {
    const bool up = wire <= k;
    const int x = next_on_wire(d, wire, from, up);
    if (x < 0) {
      if (!up && wire == k + 1) out.push_back(cur);
      return;
    }
    if (seen[x]) return;
    seen[x] = 1;
    const int other = d.node(x).other(wire);
    if (!forbidden_straight(wire, other, k)) {
      cur.steps.push_back({x, wire, wire});
      walk(wire, x);
      cur.steps.pop_back();
    }
    cur.steps.push_back({x, wire, other});
    walk(other, x);
    cur.steps.pop_back();
    seen[x] = 0;
  };
  walk(k, -1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RigorousPath> enumerate_paths(const WiringDiagram& d, int k) {
  return enumerate_paths(orient(d, k));
}

bool is_rigorous(const WiringDiagram& d, const RigorousPath& p) {
  const int k = p.k;
  if (k < 1 || k >= d.wire_count()) return false;
  std::vector<char> seen(d.length(), 0);
  int wire = k, from = -1;
  for (const auto& s : p.steps) {
    const int x = next_on_wire(d, wire, from, wire <= k);
    if (x < 0 || x != s.node || s.in != wire || seen[x]) return false;
    seen[x] = 1;
    const int other = d.node(x).other(wire);
    if (s.out == wire) {
      if (forbidden_straight(wire, other, k)) return false;
    } else if (s.out != other) {
      return false;
    }
    wire = s.out;
    from = x;
  }
  return wire == k + 1 && next_on_wire(d, wire, from, false) < 0;
}

std::optional<RigorousPath> path_from_nodes(const WiringDiagram& d, int k,
                                            const std::vector<int>& switch_nodes) {
  if (k < 1 || k >= d.wire_count()) return std::nullopt;
  RigorousPath p;
  p.k = k;
  int wire = k, from = -1;
  std::size_t next = 0;
  std::vector<char> seen(d.length(), 0);
  for (;;) {
    const bool up = wire <= k;
    const int x = next_on_wire(d, wire, from, up);
    if (x < 0) break;
    if (seen[x]) return std::nullopt;
    seen[x] = 1;
    int out = wire;
    if (next < switch_nodes.size() && switch_nodes[next] == x) {
      out = d.node(x).other(wire);
      ++next;
    }
    p.steps.push_back({x, wire, out});
    wire = out;
    from = x;
  }
  if (next != switch_nodes.size()) return std::nullopt;
  if (!is_rigorous(d, p)) return std::nullopt;
  return p;
}

namespace {

struct Pt {
  long long x, y;
};

// Planar layout: position p at x = 4p, crossing j at y = 8(j+1); wires run vertically
// between crossings and enter/leave a crossing diagonally over a vertical distance 4.
class Layout {
 public:
  explicit Layout(const WiringDiagram& d) : d_(d) {
    const int m = d.wire_count(), len = d.length();
    bottom_ = 8LL * (len + 1);
    lines_.resize(m);
    index_.assign(m, std::vector<int>(len, -1));
    for (int w = 1; w <= m; ++w) {
      auto& line = lines_[w - 1];
      line.push_back({4LL * w, 0});
      for (int j : d.wire_nodes(w)) {
        const long long y = 8LL * (j + 1);
        line.push_back({4LL * d.position(w, j), y - 4});
        index_[w - 1][j] = static_cast<int>(line.size());
        line.push_back({4LL * d.node(j).column + 2, y});
        line.push_back({4LL * d.position(w, j + 1), y + 4});
      }
      line.push_back({4LL * d.position(w, len), bottom_});
    }
  }

  std::vector<Pt> polygon(const RigorousPath& p) const {
    std::vector<Pt> poly;
    int wire = p.k;
    int at = static_cast<int>(lines_[wire - 1].size()) - 1;
    poly.push_back(lines_[wire - 1][at]);
    auto travel = [&](int to) {
      const auto& line = lines_[wire - 1];
      const int step = to > at ? 1 : -1;
      for (int i = at + step; i != to + step; i += step) poly.push_back(line[i]);
      at = to;
    };
    for (const auto& s : p.steps) {
      travel(index_[wire - 1][s.node]);
      wire = s.out;
      at = index_[wire - 1][s.node];
    }
    travel(static_cast<int>(lines_[wire - 1].size()) - 1);
    return poly;  // closed by the bottom edge back to the start
  }

  static bool inside(const std::vector<Pt>& poly, long long px, long long py) {
    bool in = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Pt a = poly[i], b = poly[(i + 1) % n];
      if ((a.y < py) == (b.y < py)) continue;
      const long long num = (a.x - px) * (b.y - a.y) + (py - a.y) * (b.x - a.x);
      if ((num > 0) == (b.y - a.y > 0)) in = !in;
    }
    return in;
  }

  Pt chamber_point(int j) const { return {4LL * d_.node(j).column + 2, 8LL * (j + 1) + 2}; }

  Pt below_point(int wire, int j) const {
    const long long dx = d_.position(wire, j + 1) > d_.node(j).column ? 1 : -1;
    return {4LL * d_.node(j).column + 2 + dx, 8LL * (j + 1) + 2};
  }

 private:
  const WiringDiagram& d_;
  long long bottom_ = 0;
  std::vector<std::vector<Pt>> lines_;
  std::vector<std::vector<int>> index_;
};

// legs of a path as (wire, node directly above the traversed segment)
std::vector<std::pair<int, int>> legs(const WiringDiagram& d, const RigorousPath& p) {
  std::vector<std::pair<int, int>> out;
  int wire = p.k, from = -1;
  for (const auto& s : p.steps) {
    const bool up = wire <= p.k;
    out.push_back({wire, up ? s.node : from});
    wire = s.out;
    from = s.node;
  }
  out.push_back({wire, from});
  (void)d;
  return out;
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> unite(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<int> enclosed_region(const WiringDiagram& d, const RigorousPath& p) {
  Layout lay(d);
  const auto poly = lay.polygon(p);
  std::vector<int> out;
  for (int j = 0; j < d.length(); ++j) {
    const Pt c = lay.chamber_point(j);
    if (Layout::inside(poly, c.x, c.y)) out.push_back(j);
  }
  return out;
}

bool segment_in_region(const WiringDiagram& d, const RigorousPath& p, int wire, int upper) {
  for (const auto& l : legs(d, p))
    if (l.first == wire && l.second == upper) return true;
  Layout lay(d);
  const Pt c = lay.below_point(wire, upper);
  return Layout::inside(lay.polygon(p), c.x, c.y);
}

std::vector<RigorousPath> symp_paths(const SympWiringDiagram& d, int k) {
  return enumerate_paths(orient(d, k));
}

std::vector<RigorousPath> symp_paths(const SympWiringDiagram& d) {
  std::vector<RigorousPath> out;
  for (int k = 1; k <= d.rank(); ++k) {
    auto part = symp_paths(d, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

RigorousPath mirror(const SympWiringDiagram& d, const RigorousPath& p) {
  RigorousPath q;
  q.k = 2 * d.rank() - p.k;
  for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it)
    q.steps.push_back({d.mirror_node(it->node), d.bar(it->out), d.bar(it->in)});
  return q;
}

bool is_symmetric(const SympWiringDiagram& d, const RigorousPath& p) {
  return p.k == d.rank() && mirror(d, p) == p;
}

std::vector<int> mirror_region(const SympWiringDiagram& d, const std::vector<int>& region) {
  std::vector<int> out;
  for (int j : region) out.push_back(d.mirror_node(j));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_maximal(const SympWiringDiagram& d, const RigorousPath& p) {
  const auto& g = d.lift();
  const auto cp = enclosed_region(g, p);
  const auto both = unite(cp, mirror_region(d, cp));
  for (const auto& q : enumerate_paths(g, p.k)) {
    const auto cq = enclosed_region(g, q);
    if (subset(cq, both) && !subset(cq, cp)) return false;
  }
  return true;
}

namespace {

// at a wall crossing x of p: Q1 follows p up to x then mirrors back, Q2 mirrors
// the part of p after x in front of it
std::vector<RigorousPath> wall_splices(const SympWiringDiagram& d, const RigorousPath& p) {
  std::vector<RigorousPath> out;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const Step& s = p.steps[i];
    if (!d.on_wall(s.node)) continue;
    RigorousPath q1{p.k, {}}, q2{p.k, {}};
    for (std::size_t a = 0; a < i; ++a) q1.steps.push_back(p.steps[a]);
    q1.steps.push_back({s.node, s.in, d.bar(s.in)});
    for (std::size_t a = i; a-- > 0;) {
      const Step& t = p.steps[a];
      q1.steps.push_back({d.mirror_node(t.node), d.bar(t.out), d.bar(t.in)});
    }
    for (std::size_t a = p.steps.size(); a-- > i + 1;) {
      const Step& t = p.steps[a];
      q2.steps.push_back({d.mirror_node(t.node), d.bar(t.out), d.bar(t.in)});
    }
    q2.steps.push_back({s.node, d.bar(s.out), s.out});
    for (std::size_t a = i + 1; a < p.steps.size(); ++a) q2.steps.push_back(p.steps[a]);
    out.push_back(q1);
    out.push_back(q2);
  }
  return out;
}

std::optional<RigorousPath> splice(const WiringDiagram& g, const RigorousPath& p,
                                   const RigorousPath& q) {
  const auto lq = legs(g, q);
  std::size_t i1 = 0;
  while (i1 < lq.size() && segment_in_region(g, p, lq[i1].first, lq[i1].second)) ++i1;
  if (i1 == 0 || i1 == lq.size()) return std::nullopt;
  std::size_t i2 = i1 + 1;
  while (i2 < lq.size() && !segment_in_region(g, p, lq[i2].first, lq[i2].second)) ++i2;
  if (i2 == lq.size()) return std::nullopt;
  // leg i starts at q.steps[i-1]
  const Step& sx = q.steps[i1 - 1];
  const Step& sy = q.steps[i2 - 1];
  auto find = [&](int node) {
    for (std::size_t a = 0; a < p.steps.size(); ++a)
      if (p.steps[a].node == node) return static_cast<long>(a);
    return -1L;
  };
  const long ix = find(sx.node), iy = find(sy.node);
  if (ix < 0 || iy < 0 || ix >= iy) return std::nullopt;
  RigorousPath r{p.k, {}};
  for (long a = 0; a < ix; ++a) r.steps.push_back(p.steps[a]);
  r.steps.push_back({sx.node, p.steps[ix].in, sx.out});
  for (std::size_t a = i1; a + 1 < i2; ++a) r.steps.push_back(q.steps[a]);
  r.steps.push_back({sy.node, sy.in, p.steps[iy].out});
  for (std::size_t a = iy + 1; a < p.steps.size(); ++a) r.steps.push_back(p.steps[a]);
  if (!is_rigorous(g, r)) return std::nullopt;
  return r;
}

}  // namespace

RigorousPath extension(const SympWiringDiagram& d, const RigorousPath& p) {
  const auto& g = d.lift();
  const int n = d.rank();
  if (p.k < 1 || p.k > n || !is_rigorous(g, p))
    throw InputError("extension expects a symplectic rigorous path with k <= n");
  const auto cp = enclosed_region(g, p);
  const auto both = unite(cp, mirror_region(d, cp));
  if (p.k == n) {
    if (is_symmetric(d, p)) return p;
    for (const auto& q : wall_splices(d, p))
      if (is_rigorous(g, q) && is_symmetric(d, q) && enclosed_region(g, q) == both) return q;
    throw std::logic_error("no symmetric wall splice found for a path with k = n");
  }
  const auto all = enumerate_paths(g, p.k);
  RigorousPath cur = p;
  for (;;) {
    const auto cc = enclosed_region(g, cur);
    bool grown = false;
    for (const auto& q : all) {
      const auto cq = enclosed_region(g, q);
      if (!subset(cq, both) || subset(cq, cc)) continue;
      if (auto r = splice(g, cur, q)) {
        cur = *r;
        grown = true;
        break;
      }
    }
    if (!grown) break;
  }
  if (!is_maximal(d, cur)) throw std::logic_error("splice iteration ended at a non-maximal path");
  return cur;
}

namespace {

// node on the left of (or on) wire 1 / on the right of (or on) wire 2n
bool below_wire(const WiringDiagram& g, int node, int wire) {
  const int c = g.node(node).column;
  const int p = g.position(wire, node);
  return wire == 1 ? p >= c : p <= c + 1;
}

bool strictly_decreasing(const std::vector<int>& v, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i + 1 < to; ++i)
    if (v[i] <= v[i + 1]) return false;
  return true;
}

}  // namespace

std::optional<RigorousPath> canonical_lift_path(const SympWiringDiagram& d, int node) {
  const auto& g = d.lift();
  const int m = g.wire_count();
  const Node& x = g.node(node);
  if (x.lo != 1 && x.hi != m) throw InputError("canonical paths are indexed by crossings on wire 1 or 2n");
  if (x.hi != m) {
    // P_{1,i} is the mirror of P_{2n+1-i,2n}
    auto q = canonical_lift_path(d, d.mirror_node(node));
    if (!q) return std::nullopt;
    return mirror(d, *q);
  }
  const int a = x.lo, b = m, guard = m;
  std::vector<RigorousPath> found;
  for (int k = 1; k < m; ++k)
    for (const auto& p : enumerate_paths(g, k)) {
      if (p.peaks() != std::vector<int>{node}) continue;
      bool ok = true;
      for (const auto& s : p.steps) ok = ok && below_wire(g, s.node, guard);
      if (!ok) continue;
      const auto w = p.wires();
      auto it = std::adjacent_find(w.begin(), w.end(),
                                   [&](int u, int v) { return u == a && v == b; });
      if (it == w.end()) continue;
      const std::size_t at = static_cast<std::size_t>(it - w.begin());
      if (!strictly_decreasing(w, 0, at + 1) || !strictly_decreasing(w, at + 1, w.size()))
        continue;
      // the rising part may not cross a wire above its starting wire before the peak
      for (const auto& s : p.steps) {
        if (s.node == node) break;
        if (!s.switches() && g.node(s.node).other(s.in) > w.front()) ok = false;
      }
      if (ok) found.push_back(p);
    }
  if (found.size() != 1) return std::nullopt;
  return found.front();
}

std::vector<CanonicalPath> canonical_paths(const SympWiringDiagram& d) {
  const auto& g = d.lift();
  const int m = g.wire_count(), n = d.rank();
  std::vector<int> peaks;
  for (int j : g.wire_nodes(1)) peaks.push_back(j);
  for (int j : g.wire_nodes(m))
    if (std::find(peaks.begin(), peaks.end(), j) == peaks.end()) peaks.push_back(j);
  std::sort(peaks.begin(), peaks.end());
  std::vector<CanonicalPath> out;
  for (int x : peaks) {
    auto lp = canonical_lift_path(d, x);
    if (!lp) throw std::logic_error("no unique canonical type-A path at node " + std::to_string(x));
    RigorousPath p = lp->k > n ? mirror(d, *lp) : *lp;
    RigorousPath q = extension(d, p);
    auto it = std::find_if(out.begin(), out.end(), [&](const CanonicalPath& c) { return c.path == q; });
    if (it == out.end()) {
      out.push_back({{x}, {*lp}, q});
    } else {
      it->peaks.push_back(x);
      it->lift_paths.push_back(*lp);
    }
  }
  return out;
}

std::vector<RigorousPath> contraction_image(const SympWiringDiagram& d) {
  const int n = d.rank();
  if (n < 3) throw DomainError("contraction needs rank n >= 3");
  const auto& g = d.lift();
  const int m = g.wire_count();
  SympWiringDiagram small(LieType{d.type().family, n - 1}, contract(d.type(), d.word()));
  std::vector<int> keep;
  for (const auto& nd : g.nodes())
    if (nd.lo != 1 && nd.hi != m) keep.push_back(nd.index);
  std::vector<RigorousPath> out;
  for (const auto& p : symp_paths(small)) {
    std::vector<int> nodes;
    for (int j : p.nodes()) nodes.push_back(keep.at(j));
    auto q = path_from_nodes(g, p.k + 1, nodes);
    if (!q) throw std::logic_error("contracted path does not lift to a rigorous path");
    out.push_back(*q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_new(const SympWiringDiagram& d, const RigorousPath& p) {
  const auto img = contraction_image(d);
  return !std::binary_search(img.begin(), img.end(), p);
}

}  // namespace stringcone
