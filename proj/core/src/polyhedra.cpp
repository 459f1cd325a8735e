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

#include "stringcone/polyhedra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "stringcone/diagram.hpp"

namespace stringcone {

using Int = mpz_class;
using IVec = std::vector<Int>;

void HRep::add_le(const Vec& a, const Rat& b) {
  if (static_cast<int>(a.size()) != dim) throw InputError("constraint has wrong dimension");
  rows.push_back({a, b});
}

void HRep::add_ge(const Vec& a, const Rat& b) {
  Vec n(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) n[i] = -a[i];
  add_le(n, -b);
}

bool HRep::contains(const Vec& x) const {
  for (const auto& r : rows) {
    Rat s = 0;
    for (int i = 0; i < dim; ++i) s += r.a[i] * x[i];
    if (s > r.b) return false;
  }
  return true;
}

bool HRep::is_cone() const {
  return std::all_of(rows.begin(), rows.end(), [](const Halfspace& h) { return h.b == 0; });
}

Halfspace normalize(const Halfspace& h) {
  Int l = h.b.get_den();
  for (const auto& x : h.a) l = lcm(l, Int(x.get_den()));
  Int g = 0;
  IVec num(h.a.size());
  for (std::size_t i = 0; i < h.a.size(); ++i) {
    Rat s = h.a[i] * l;
    num[i] = s.get_num();
    g = gcd(g, num[i]);
  }
  Halfspace out;
  out.a.resize(h.a.size());
  if (g == 0) {
    out.b = sgn(h.b);
    for (auto& x : out.a) x = 0;
    return out;
  }
  for (std::size_t i = 0; i < num.size(); ++i) out.a[i] = Rat(num[i] / g);
  out.b = Rat(h.b * l / g);
  out.b.canonicalize();
  return out;
}

Vec to_vec(const IntVec& v) {
  Vec out;
  for (long long x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

// ---------------------------------------------------------------- simplex

namespace {

class Tableau {
 public:
  Tableau(const std::vector<Vec>& M, const Vec& r) : m_(M.size()), n_(M.empty() ? 0 : M[0].size()) {
    t_.assign(m_, Vec(n_ + m_ + 1));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = r[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) t_[i][j] = flip ? Rat(-M[i][j]) : M[i][j];
      t_[i][n_ + i] = 1;
      t_[i][n_ + m_] = flip ? Rat(-r[i]) : r[i];
      basis_[i] = n_ + i;
    }
    allowed_.assign(n_ + m_, true);
  }

  // phase 1; false when infeasible
  bool phase1() {
    obj_.assign(n_ + m_ + 1, 0);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j) obj_[j] -= t_[i][j];
    for (std::size_t i = 0; i < m_; ++i) obj_[n_ + m_] -= t_[i][n_ + m_];
    if (!run()) return false;  // cannot be unbounded
    if (obj_[n_ + m_] != 0) return false;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      std::size_t s = n_;
      for (std::size_t j = 0; j < n_; ++j)
        if (t_[i][j] != 0) {
          s = j;
          break;
        }
      if (s < n_) pivot(i, s);
    }
    for (std::size_t j = n_; j < n_ + m_; ++j) allowed_[j] = false;
    return true;
  }

  // phase 2 minimising c; false when unbounded
  bool phase2(const Vec& c) {
    obj_.assign(n_ + m_ + 1, 0);
    for (std::size_t j = 0; j < n_; ++j) obj_[j] = c[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t b = basis_[i];
      if (b >= n_ || c[b] == 0) continue;
      for (std::size_t j = 0; j <= n_ + m_; ++j)
        if (t_[i][j] != 0) obj_[j] -= c[b] * t_[i][j];
    }
    return run();
  }

  Rat value() const { return -obj_[n_ + m_]; }

  Vec solution() const {
    Vec y(n_, 0);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) y[basis_[i]] = t_[i][n_ + m_];
    return y;
  }

 private:
  bool run() {
    for (;;) {
      std::size_t s = n_ + m_;
      for (std::size_t j = 0; j < n_ + m_; ++j)
        if (allowed_[j] && obj_[j] < 0) {
          s = j;
          break;
        }
      if (s == n_ + m_) return true;
      std::size_t r = m_;
      Rat best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][s] <= 0) continue;
        Rat ratio = t_[i][n_ + m_] / t_[i][s];
        if (r == m_ || ratio < best || (ratio == best && basis_[i] < basis_[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r == m_) return false;
      pivot(r, s);
    }
  }

  void pivot(std::size_t r, std::size_t s) {
    const Rat p = t_[r][s];
    for (auto& x : t_[r])
      if (x != 0) x /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || t_[i][s] == 0) continue;
      const Rat f = t_[i][s];
      for (std::size_t j = 0; j <= n_ + m_; ++j)
        if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
    }
    if (obj_[s] != 0) {
      const Rat f = obj_[s];
      for (std::size_t j = 0; j <= n_ + m_; ++j)
        if (t_[r][j] != 0) obj_[j] -= f * t_[r][j];
    }
    basis_[r] = s;
  }

  std::size_t m_, n_;
  std::vector<Vec> t_;
  Vec obj_;
  std::vector<std::size_t> basis_;
  std::vector<bool> allowed_;
};

}  // namespace

LPResult lp_standard(const std::vector<Vec>& M, const Vec& r, const Vec& c) {
  LPResult res;
  Tableau tab(M, r);
  if (!tab.phase1()) {
    res.status = LPStatus::Infeasible;
    return res;
  }
  if (!tab.phase2(c)) {
    res.status = LPStatus::Unbounded;
    return res;
  }
  res.status = LPStatus::Optimal;
  res.value = tab.value();
  res.x = tab.solution();
  return res;
}

LPResult lp_maximize(const HRep& h, const Vec& c) {
  const std::size_t d = h.dim, m = h.rows.size();
  std::vector<Vec> M(m, Vec(2 * d + m, 0));
  Vec r(m), cost(2 * d + m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      M[i][j] = h.rows[i].a[j];
      M[i][d + j] = -h.rows[i].a[j];
    }
    M[i][2 * d + i] = 1;
    r[i] = h.rows[i].b;
  }
  for (std::size_t j = 0; j < d; ++j) {
    cost[j] = -c[j];
    cost[d + j] = c[j];
  }
  if (m == 0) {
    LPResult res;
    const bool zero = std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
    res.status = zero ? LPStatus::Optimal : LPStatus::Unbounded;
    res.x.assign(d, 0);
    return res;
  }
  LPResult res = lp_standard(M, r, cost);
  if (res.status == LPStatus::Optimal) {
    Vec x(d);
    for (std::size_t j = 0; j < d; ++j) x[j] = res.x[j] - res.x[d + j];
    res.x = x;
    res.value = -res.value;
  }
  return res;
}

bool feasible(const HRep& h) {
  return lp_maximize(h, Vec(h.dim, 0)).status != LPStatus::Infeasible;
}

bool is_redundant(const HRep& h, std::size_t i) {
  // dual: min sum_j y_j b_j  s.t.  sum_j y_j a_j = a_i, y >= 0 (j != i)
  const std::size_t d = h.dim;
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < h.rows.size(); ++j)
    if (j != i) others.push_back(j);
  std::vector<Vec> M(d, Vec(others.size()));
  Vec c(others.size());
  for (std::size_t col = 0; col < others.size(); ++col) {
    for (std::size_t row = 0; row < d; ++row) M[row][col] = h.rows[others[col]].a[row];
    c[col] = h.rows[others[col]].b;
  }
  if (others.empty()) {
    const auto& a = h.rows[i].a;
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; }) && h.rows[i].b >= 0;
  }
  LPResult res = lp_standard(M, h.rows[i].a, c);
  if (res.status == LPStatus::Infeasible) return false;
  if (res.status == LPStatus::Unbounded) return true;  // others infeasible
  return res.value <= h.rows[i].b;
}

HRep remove_redundant(const HRep& h) {
  HRep out(h.dim);
  for (const auto& r : h.rows) {
    Halfspace n = normalize(r);
    if (std::find(out.rows.begin(), out.rows.end(), n) == out.rows.end()) out.rows.push_back(n);
  }
  if (!feasible(out)) {
    HRep empty(h.dim);
    empty.rows.push_back({Vec(h.dim, 0), Rat(-1)});
    return empty;
  }
  for (std::size_t i = 0; i < out.rows.size();) {
    if (is_redundant(out, i))
      out.rows.erase(out.rows.begin() + static_cast<long>(i));
    else
      ++i;
  }
  return out;
}

// ---------------------------------------------------------------- double description

namespace {

Int dot(const IVec& a, const IVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

void make_primitive(IVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

IVec combine(const Int& a, const IVec& u, const Int& b, const IVec& v) {
  IVec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = a * u[i] + b * v[i];
  make_primitive(out);
  return out;
}

struct DDRay {
  IVec v;
  Bits zero;
};

IVec integer_row(const Vec& a) {
  Halfspace h = normalize({a, 0});
  IVec out;
  for (const auto& x : h.a) out.push_back(x.get_num());
  return out;
}

// generators of {y : A y <= 0}; lineality returned separately
void double_description(const std::vector<IVec>& A, std::size_t D, std::vector<IVec>& lineality,
                        std::vector<DDRay>& rays) {
  const std::size_t nc = A.size();
  lineality.clear();
  rays.clear();
  for (std::size_t i = 0; i < D; ++i) {
    IVec e(D, 0);
    e[i] = 1;
    lineality.push_back(e);
  }
  for (std::size_t c = 0; c < nc; ++c) {
    const IVec& a = A[c];
    std::size_t pick = lineality.size();
    Int dl;
    for (std::size_t i = 0; i < lineality.size(); ++i) {
      dl = dot(a, lineality[i]);
      if (dl != 0) {
        pick = i;
        break;
      }
    }
    if (pick < lineality.size()) {
      IVec l = lineality[pick];
      if (dl > 0) {
        for (auto& x : l) x = -x;
        dl = -dl;
      }
      std::vector<IVec> rest;
      for (std::size_t i = 0; i < lineality.size(); ++i) {
        if (i == pick) continue;
        const Int di = dot(a, lineality[i]);
        rest.push_back(di == 0 ? lineality[i] : combine(Int(-dl), lineality[i], di, l));
      }
      lineality = rest;
      for (auto& r : rays) {
        const Int dr = dot(a, r.v);
        if (dr != 0) r.v = combine(Int(-dl), r.v, dr, l);
        r.zero.set(c);
      }
      DDRay nr{l, Bits(nc)};
      for (std::size_t i = 0; i < c; ++i) nr.zero.set(i);
      rays.push_back(nr);
      continue;
    }
    std::vector<Int> dots(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<DDRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      dots[i] = dot(a, rays[i].v);
      if (dots[i] > 0) {
        pos.push_back(i);
      } else {
        if (dots[i] < 0) neg.push_back(i);
        DDRay r = rays[i];
        if (dots[i] == 0) r.zero.set(c);
        next.push_back(r);
      }
    }
    const long need = static_cast<long>(D) - static_cast<long>(lineality.size()) - 2;
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        Bits common = rays[p].zero & rays[q].zero;
        if (static_cast<long>(common.count()) < need) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && common.is_subset_of(rays[r].zero)) adjacent = false;
        if (!adjacent) continue;
        DDRay nr{combine(dots[p], rays[q].v, Int(-dots[q]), rays[p].v), common};
        nr.zero.set(c);
        next.push_back(nr);
      }
    rays = std::move(next);
  }
}

}  // namespace

VRep to_vrep(const HRep& h) {
  const std::size_t d = h.dim;
  VRep out;
  std::vector<IVec> lin;
  std::vector<DDRay> rays;
  if (h.is_cone()) {
    std::vector<IVec> A;
    for (const auto& r : h.rows) A.push_back(integer_row(r.a));
    double_description(A, d, lin, rays);
    if (!lin.empty()) throw DomainError("cone is not pointed");
    out.vertices.push_back(Vec(d, 0));
    for (const auto& r : rays) {
      Vec v;
      for (const auto& x : r.v) v.emplace_back(x);
      out.rays.push_back(v);
    }
    std::sort(out.rays.begin(), out.rays.end());
    return out;
  }
  std::vector<IVec> A;
  for (const auto& r : h.rows) {
    Halfspace n = normalize(r);
    IVec row;
    for (const auto& x : n.a) row.push_back(x.get_num());
    Rat b = n.b;
    // rows are integral after normalisation except possibly b
    Int den = b.get_den();
    for (auto& x : row) x *= den;
    row.push_back(-b.get_num());
    A.push_back(row);
  }
  IVec tpos(d + 1, 0);
  tpos[d] = -1;
  A.push_back(tpos);
  double_description(A, d + 1, lin, rays);
  if (!lin.empty()) {
    Vec r;
    for (std::size_t i = 0; i < d; ++i) r.emplace_back(lin[0][i]);
    throw UnboundedError(r);
  }
  for (const auto& r : rays) {
    if (r.v[d] == 0) {
      Vec ray;
      for (std::size_t i = 0; i < d; ++i) ray.emplace_back(r.v[i]);
      throw UnboundedError(ray);
    }
  }
  for (const auto& r : rays) {
    Vec v;
    for (std::size_t i = 0; i < d; ++i) v.push_back(Rat(r.v[i], r.v[d]));
    for (auto& x : v) x.canonicalize();
    out.vertices.push_back(v);
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

namespace {

int rank_of(std::vector<Vec> m) {
  int rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Rat f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int affine_dimension(const std::vector<Vec>& pts) {
  if (pts.empty()) return -1;
  std::vector<Vec> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Vec v(pts[0].size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = pts[i][j] - pts[0][j];
    diffs.push_back(v);
  }
  return rank_of(diffs);
}

int tight_rank(const HRep& h, const Vec& x) {
  std::vector<Vec> tight;
  for (const auto& r : h.rows) {
    Rat s = 0;
    for (int i = 0; i < h.dim; ++i) s += r.a[i] * x[i];
    if (s == r.b) tight.push_back(r.a);
  }
  return tight.empty() ? 0 : rank_of(tight);
}

bool is_vertex(const HRep& h, const Vec& x) { return h.contains(x) && tight_rank(h, x) == h.dim; }

// ---------------------------------------------------------------- face lattice

std::vector<long> FaceLattice::f_vector() const {
  std::vector<long> f{1};
  for (const auto& level : faces) f.push_back(static_cast<long>(level.size()));
  return f;
}

FaceLattice face_lattice(const HRep& h) {
  FaceLattice fl;
  HRep irr = remove_redundant(h);
  VRep vr;
  try {
    vr = to_vrep(irr);
  } catch (const UnboundedError&) {
    throw DomainError("face lattice needs a bounded polytope");
  }
  if (!vr.rays.empty()) throw DomainError("face lattice needs a bounded polytope");
  fl.vertices = vr.vertices;
  const std::size_t nv = fl.vertices.size();
  if (nv == 0) {
    fl.dim = -1;
    return fl;
  }
  fl.dim = affine_dimension(fl.vertices);
  std::vector<Bits> facet_sets;
  Bits all(nv);
  all.set();
  for (const auto& r : irr.rows) {
    Bits s(nv);
    for (std::size_t v = 0; v < nv; ++v) {
      Rat sum = 0;
      for (int i = 0; i < irr.dim; ++i) sum += r.a[i] * fl.vertices[v][i];
      if (sum == r.b) s.set(v);
    }
    if (s == all) continue;
    if (std::find(facet_sets.begin(), facet_sets.end(), s) != facet_sets.end()) continue;
    facet_sets.push_back(s);
    fl.facets.push_back(r);
  }
  fl.faces.assign(fl.dim + 1, {});
  fl.children.assign(fl.dim + 1, {});
  fl.faces[fl.dim].push_back(all);
  for (int k = fl.dim; k >= 1; --k) {
    std::map<Bits, int> index;
    auto& below = fl.faces[k - 1];
    for (const auto& F : fl.faces[k]) {
      std::vector<Bits> cands;
      for (const auto& G : facet_sets) {
        Bits c = F & G;
        if (c.none() || c == F) continue;
        cands.push_back(c);
      }
      std::vector<int> kids;
      for (std::size_t i = 0; i < cands.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < cands.size() && maximal; ++j)
          if (cands[i] != cands[j] && cands[i].is_subset_of(cands[j])) maximal = false;
        if (!maximal) continue;
        auto [it, fresh] = index.emplace(cands[i], static_cast<int>(below.size()));
        if (fresh) below.push_back(cands[i]);
        if (std::find(kids.begin(), kids.end(), it->second) == kids.end()) kids.push_back(it->second);
      }
      fl.children[k].push_back(kids);
    }
  }
  fl.children[0].assign(fl.faces[0].size(), {});
  return fl;
}

std::vector<long> f_vector(const HRep& h) { return face_lattice(h).f_vector(); }

// ---------------------------------------------------------------- integrality, lattice points

Integrality integrality(const VRep& v) {
  Integrality res;
  for (const auto& x : v.vertices)
    for (const auto& c : x)
      if (c.get_den() != 1) {
        res.integral = false;
        res.witness = x;
        return res;
      }
  return res;
}

Integrality integrality(const HRep& h) { return integrality(to_vrep(remove_redundant(h))); }

HRep dilate(const HRep& h, long t) {
  HRep out = h;
  for (auto& r : out.rows) r.b *= t;
  return out;
}

std::uint64_t lattice_points(const HRep& h, std::uint64_t cap) {
  const int d = h.dim;
  if (!feasible(h)) return 0;
  std::vector<long long> lo(d), hi(d);
  long double volume = 1;
  for (int i = 0; i < d; ++i) {
    Vec c(d, 0);
    c[i] = 1;
    LPResult mx = lp_maximize(h, c);
    c[i] = -1;
    LPResult mn = lp_maximize(h, c);
    if (mx.status != LPStatus::Optimal || mn.status != LPStatus::Optimal)
      throw DomainError("lattice_points needs a bounded polytope");
    Int f, cl;
    mpz_fdiv_q(f.get_mpz_t(), mx.value.get_num_mpz_t(), mx.value.get_den_mpz_t());
    Rat lowv = -mn.value;
    mpz_cdiv_q(cl.get_mpz_t(), lowv.get_num_mpz_t(), lowv.get_den_mpz_t());
    hi[i] = f.get_si();
    lo[i] = cl.get_si();
    if (hi[i] < lo[i]) return 0;
    volume *= static_cast<long double>(hi[i] - lo[i] + 1);
  }
  if (volume > static_cast<long double>(cap))
    throw ResourceError("lattice-point box volume exceeds cap of " + std::to_string(cap));
  struct Row {
    std::vector<long long> a;
    long long b;
  };
  std::vector<Row> rows;
  for (const auto& r : h.rows) {
    Halfspace n = normalize(r);
    Row row;
    for (const auto& x : n.a) row.a.push_back(x.get_num().get_si());
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), n.b.get_num_mpz_t(), n.b.get_den_mpz_t());
    row.b = f.get_si();
    rows.push_back(row);
  }
  const std::size_t nr = rows.size();
  // rest[i][l] = min over the box of sum_{j >= l} a_j x_j
  std::vector<std::vector<long long>> rest(nr, std::vector<long long>(d + 1, 0));
  for (std::size_t i = 0; i < nr; ++i)
    for (int l = d - 1; l >= 0; --l)
      rest[i][l] = rest[i][l + 1] + std::min(rows[i].a[l] * lo[l], rows[i].a[l] * hi[l]);
  std::vector<long long> partial(nr, 0);
  std::uint64_t count = 0;
  std::function<void(int)> go = [&](int l) {
    if (l == d) {
      ++count;
      return;
    }
    for (long long x = lo[l]; x <= hi[l]; ++x) {
      bool ok = true;
      for (std::size_t i = 0; i < nr; ++i) {
        partial[i] += rows[i].a[l] * x;
        if (partial[i] + rest[i][l + 1] > rows[i].b) ok = false;
      }
      if (ok) go(l + 1);
      for (std::size_t i = 0; i < nr; ++i) partial[i] -= rows[i].a[l] * x;
    }
  };
  go(0);
  return count;
}

// ---------------------------------------------------------------- volume

namespace {

Int abs_det(std::vector<IVec> m) {
  const std::size_t n = m.size();
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  Int r = n ? Int(m[n - 1][n - 1]) : Int(1);
  return abs(r);
}

__int128 abs_det_small(std::vector<std::vector<__int128>> m) {
  const std::size_t n = m.size();
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  __int128 r = n ? m[n - 1][n - 1] : 1;
  return r < 0 ? -r : r;
}

}  // namespace

Rat normalized_volume(const FaceLattice& fl) {
  const int d = fl.dim;
  if (d < 0) return 0;
  const std::size_t amb = fl.vertices.empty() ? 0 : fl.vertices[0].size();
  if (static_cast<std::size_t>(d) != amb) throw DomainError("normalized_volume needs a full-dimensional polytope");
  Int den = 1;
  for (const auto& v : fl.vertices)
    for (const auto& x : v) den = lcm(den, Int(x.get_den()));
  std::vector<IVec> pts;
  long long maxabs = 0;
  for (const auto& v : fl.vertices) {
    IVec p;
    for (const auto& x : v) {
      Rat s = x * den;
      p.push_back(s.get_num());
      maxabs = std::max<long long>(maxabs, std::llabs(p.back().get_si()));
      if (!p.back().fits_slong_p()) maxabs = 1LL << 40;
    }
    pts.push_back(p);
  }
  // Hadamard bound on all minors to decide whether 128-bit Bareiss is safe
  const long double bound = std::pow(std::sqrt(static_cast<long double>(d)) * 2.0L * maxabs, d);
  const bool small = bound * bound < 1e36L;
  Int total = 0;
  __int128 total_small = 0;
  std::vector<int> chosen;
  std::function<void(int, int)> go = [&](int k, int f) {
    const Bits& F = fl.faces[k][f];
    const int v = static_cast<int>(F.find_first());
    chosen.push_back(v);
    if (k == 0) {
      const auto& o = pts[chosen[0]];
      if (small) {
        std::vector<std::vector<__int128>> m(d, std::vector<__int128>(d));
        for (int i = 1; i <= d; ++i)
          for (int j = 0; j < d; ++j) m[i - 1][j] = Int(pts[chosen[i]][j] - o[j]).get_si();
        total_small += abs_det_small(m);
      } else {
        std::vector<IVec> m(d, IVec(d));
        for (int i = 1; i <= d; ++i)
          for (int j = 0; j < d; ++j) m[i - 1][j] = pts[chosen[i]][j] - o[j];
        total += abs_det(m);
      }
    } else {
      for (int g : fl.children[k][f])
        if (!fl.faces[k - 1][g].test(v)) go(k - 1, g);
    }
    chosen.pop_back();
  };
  go(d, 0);
  if (small) {
    // split the 128-bit total into two 64-bit halves
    const unsigned long long lo = static_cast<unsigned long long>(total_small);
    const unsigned long long hi = static_cast<unsigned long long>(total_small >> 64);
    Int h(static_cast<unsigned long>(hi)), l(static_cast<unsigned long>(lo));
    total = (h << 64) + l;
  }
  Int scale;
  mpz_pow_ui(scale.get_mpz_t(), den.get_mpz_t(), d);
  Rat out(total, scale);
  out.canonicalize();
  return out;
}

// ---------------------------------------------------------------- unimodular maps

bool is_unimodular(const IntMatrix& U) {
  for (const auto& row : U)
    if (row.size() != U.size()) return false;
  std::vector<std::vector<long long>> m(U.begin(), U.end());
  const long long det = integer_determinant(m);
  return det == 1 || det == -1;
}

namespace {

Vec apply_map(const IntMatrix& U, const IntVec& v, const Vec& x) {
  Vec y(U.size());
  for (std::size_t i = 0; i < U.size(); ++i) {
    Rat s = static_cast<long>(v[i]);
    for (std::size_t j = 0; j < x.size(); ++j)
      if (U[i][j] != 0) s += Rat(static_cast<long>(U[i][j])) * x[j];
    y[i] = s;
  }
  return y;
}

}  // namespace

bool verify_unimodular_map(const VRep& p, const VRep& q, const IntMatrix& U, const IntVec& v) {
  if (!is_unimodular(U)) throw InputError("map is not unimodular");
  if (p.vertices.size() != q.vertices.size()) return false;
  std::set<Vec> target(q.vertices.begin(), q.vertices.end());
  std::set<Vec> image;
  for (const auto& x : p.vertices) {
    Vec y = apply_map(U, v, x);
    if (!target.count(y)) return false;
    image.insert(y);
  }
  return image.size() == target.size();
}

bool verify_unimodular_map(const HRep& p, const HRep& q, const IntMatrix& U, const IntVec& v) {
  if (!is_unimodular(U)) throw InputError("map is not unimodular");
  return verify_unimodular_map(to_vrep(remove_redundant(p)), to_vrep(remove_redundant(q)), U, v);
}

// ---------------------------------------------------------------- equivalence search

namespace {

struct Anchor {
  int vertex = -1;
  std::vector<IVec> dirs;        // primitive integer edge directions
  std::vector<Rat> lengths;      // lattice lengths
  std::vector<long> edge_sig;    // neighbour incidence counts
  std::vector<std::vector<long>> pair_sig;  // vertex counts of spanned 2-faces
};

struct Graph {
  std::vector<std::vector<int>> nbr;
  std::vector<int> facet_count;
};

Graph vertex_graph(const FaceLattice& fl) {
  Graph g;
  const std::size_t nv = fl.vertices.size();
  g.nbr.assign(nv, {});
  g.facet_count.assign(nv, 0);
  if (fl.dim >= 1)
    for (const auto& e : fl.faces[1]) {
      const int a = static_cast<int>(e.find_first());
      const int b = static_cast<int>(e.find_next(a));
      g.nbr[a].push_back(b);
      g.nbr[b].push_back(a);
    }
  for (const auto& f : fl.facets)
    for (std::size_t v = 0; v < nv; ++v) {
      Rat s = 0;
      for (std::size_t i = 0; i < f.a.size(); ++i) s += f.a[i] * fl.vertices[v][i];
      if (s == f.b) ++g.facet_count[v];
    }
  return g;
}

Anchor make_anchor(const FaceLattice& fl, const Graph& g, int v) {
  Anchor a;
  a.vertex = v;
  const auto& x = fl.vertices[v];
  for (int u : g.nbr[v]) {
    Vec diff(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) diff[i] = fl.vertices[u][i] - x[i];
    Halfspace h = normalize({diff, 0});
    IVec dir;
    for (const auto& c : h.a) dir.push_back(c.get_num());
    std::size_t nz = 0;
    while (dir[nz] == 0) ++nz;
    a.dirs.push_back(dir);
    a.lengths.push_back(diff[nz] / Rat(dir[nz]));
    a.edge_sig.push_back(g.facet_count[u] * 1000 + static_cast<long>(g.nbr[u].size()));
  }
  const std::size_t k = a.dirs.size();
  a.pair_sig.assign(k, std::vector<long>(k, 0));
  if (fl.dim >= 2)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        const int ui = g.nbr[v][i], uj = g.nbr[v][j];
        for (const auto& F : fl.faces[2])
          if (F.test(v) && F.test(ui) && F.test(uj)) {
            a.pair_sig[i][j] = a.pair_sig[j][i] = static_cast<long>(F.count());
            break;
          }
      }
  return a;
}

std::optional<std::vector<Vec>> inverse(const std::vector<IVec>& cols) {
  const std::size_t n = cols.size();
  std::vector<Vec> m(n, Vec(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(cols[j][i]);
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    const Rat piv = m[c][c];
    for (auto& x : m[c]) x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Vec> inv(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

}  // namespace

Invariants compute_invariants(const HRep& h) {
  Invariants inv;
  FaceLattice fl = face_lattice(h);
  inv.f_vector = fl.f_vector();
  auto integ = integrality(VRep{fl.vertices, {}});
  inv.integral = integ.integral;
  inv.non_integral_vertex = integ.witness;
  inv.lattice_t1 = lattice_points(h);
  inv.lattice_t2 = lattice_points(dilate(h, 2));
  inv.volume = normalized_volume(fl);
  return inv;
}

EquivalenceResult search_unimodular_equivalence(const HRep& p, const HRep& q,
                                                const EquivalenceOptions& opt) {
  EquivalenceResult res;
  if (p.dim != q.dim) throw InputError("polytopes live in different dimensions");
  const FaceLattice fp = face_lattice(p), fq = face_lattice(q);
  auto fail = [&](const std::string& what) {
    if (res.verdict == Verdict::Unknown) {
      res.verdict = Verdict::Inequivalent;
      res.witness = what;
    }
  };
  // stage 1: invariants in order of cost
  res.p_inv.f_vector = fp.f_vector();
  res.q_inv.f_vector = fq.f_vector();
  if (res.p_inv.f_vector != res.q_inv.f_vector) fail("f-vector");
  auto ip = integrality(VRep{fp.vertices, {}}), iq = integrality(VRep{fq.vertices, {}});
  res.p_inv.integral = ip.integral;
  res.p_inv.non_integral_vertex = ip.witness;
  res.q_inv.integral = iq.integral;
  res.q_inv.non_integral_vertex = iq.witness;
  if (ip.integral != iq.integral) fail("integrality");
  if (res.verdict == Verdict::Inequivalent && !opt.full_battery) return res;
  res.p_inv.lattice_t1 = lattice_points(p);
  res.q_inv.lattice_t1 = lattice_points(q);
  if (res.p_inv.lattice_t1 != res.q_inv.lattice_t1) fail("lattice points (t=1)");
  if (res.verdict == Verdict::Inequivalent && !opt.full_battery) return res;
  res.p_inv.lattice_t2 = lattice_points(dilate(p, 2));
  res.q_inv.lattice_t2 = lattice_points(dilate(q, 2));
  if (res.p_inv.lattice_t2 != res.q_inv.lattice_t2) fail("lattice points (t=2)");
  if (res.verdict == Verdict::Inequivalent && !opt.full_battery) return res;
  if (fp.dim == p.dim) {
    res.p_inv.volume = normalized_volume(fp);
    res.q_inv.volume = normalized_volume(fq);
    if (res.p_inv.volume != res.q_inv.volume) fail("normalized volume");
  }
  if (res.verdict == Verdict::Inequivalent) return res;

  // stage 2: anchored search over simple vertices
  const int d = fp.dim;
  if (d != p.dim || d < 1) {
    res.witness = "invariants agree; anchored search needs a full-dimensional polytope";
    return res;
  }
  const Graph gp = vertex_graph(fp), gq = vertex_graph(fq);
  int anchor = -1;
  for (std::size_t v = 0; v < fp.vertices.size(); ++v) {
    if (gp.facet_count[v] != d) continue;
    const bool zero = std::all_of(fp.vertices[v].begin(), fp.vertices[v].end(),
                                  [](const Rat& x) { return x == 0; });
    if (anchor < 0 || zero) anchor = static_cast<int>(v);
    if (zero) break;
  }
  if (anchor < 0) {
    res.witness = "invariants agree; no simple vertex to anchor the search";
    return res;
  }
  const Anchor ap = make_anchor(fp, gp, anchor);
  auto inv = inverse(ap.dirs);
  if (!inv) throw std::logic_error("edge directions at a simple vertex are dependent");
  const std::set<Vec> qset(fq.vertices.begin(), fq.vertices.end());
  bool exhausted = true;
  for (std::size_t w = 0; w < fq.vertices.size() && res.verdict == Verdict::Unknown; ++w) {
    if (gq.facet_count[w] != d) continue;
    const Anchor aq = make_anchor(fq, gq, static_cast<int>(w));
    std::vector<int> sigma(d, -1);
    std::vector<bool> used(d, false);
    std::function<bool(int)> assign = [&](int i) -> bool {
      if (res.candidates_tested >= opt.budget) {
        exhausted = false;
        return true;
      }
      if (i == d) {
        ++res.candidates_tested;
        // U = E_q(sigma) * E_p^{-1}
        IntMatrix U(d, IntVec(d));
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < d; ++c) {
            Rat s = 0;
            for (int t = 0; t < d; ++t) s += Rat(aq.dirs[sigma[t]][r]) * (*inv)[t][c];
            if (s.get_den() != 1 || !s.get_num().fits_slong_p()) return false;
            U[r][c] = s.get_num().get_si();
          }
        if (!is_unimodular(U)) return false;
        IntVec shift(d);
        Vec img = apply_map(U, IntVec(d, 0), fp.vertices[anchor]);
        for (int r = 0; r < d; ++r) {
          Rat s = fq.vertices[w][r] - img[r];
          if (s.get_den() != 1) return false;
          shift[r] = s.get_num().get_si();
        }
        for (const auto& x : fp.vertices)
          if (!qset.count(apply_map(U, shift, x))) return false;
        res.verdict = Verdict::Equivalent;
        res.U = U;
        res.shift = shift;
        res.witness = "anchored search";
        return true;
      }
      for (int j = 0; j < d; ++j) {
        if (used[j] || aq.lengths[j] != ap.lengths[i] || aq.edge_sig[j] != ap.edge_sig[i]) continue;
        bool ok = true;
        for (int t = 0; t < i && ok; ++t) ok = aq.pair_sig[j][sigma[t]] == ap.pair_sig[i][t];
        if (!ok) continue;
        used[j] = true;
        sigma[i] = j;
        if (assign(i + 1)) return true;
        used[j] = false;
      }
      return false;
    };
    assign(0);
  }
  if (res.verdict == Verdict::Unknown)
    res.witness = exhausted ? "invariants agree; anchored search found no map"
                            : "invariants agree; search budget exhausted";
  return res;
}

std::string to_string(const Rat& r) { return r.get_str(); }

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "equivalent";
    case Verdict::Inequivalent: return "inequivalent";
    default: return "unknown";
  }
}

}  // namespace stringcone
