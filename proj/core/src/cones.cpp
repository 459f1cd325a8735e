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

#include "stringcone/cones.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace stringcone {

LinForm LinForm::reduced() const {
  long long g = 0;
  for (long long c : coeffs) g = std::gcd(g, c);
  LinForm out = *this;
  if (g > 1)
    for (auto& c : out.coeffs) c /= g;
  return out;
}

bool LinForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c == 0; });
}

namespace {

std::string format_terms(const IntVec& coeffs, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const long long c = coeffs[j];
    if (c == 0) continue;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    const long long a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a);
    s += names[j];
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string format_form(const LinForm& f) {
  std::vector<std::string> names;
  const char* base = f.space == CoordSpace::A ? "a" : "t";
  for (std::size_t j = 0; j < f.coeffs.size(); ++j) names.push_back(base + std::to_string(j + 1));
  return format_terms(f.coeffs, names);
}

std::string format_form(const SympWiringDiagram& d, const LinForm& f) {
  if (f.space == CoordSpace::A) return format_form(f);
  std::vector<std::string> names;
  for (int j = 0; j < d.lift().length(); ++j) names.push_back(symp_node_name(d, j));
  return format_terms(f.coeffs, names);
}

LinForm functional_A(const WiringDiagram& d, const RigorousPath& p) {
  LinForm f{CoordSpace::A, IntVec(d.length(), 0)};
  for (const auto& s : p.steps) {
    if (!s.switches()) continue;
    f.coeffs[s.node] += s.in < s.out ? 1 : -1;
  }
  return f;
}

LinForm functional_T(const SympWiringDiagram& d, const RigorousPath& p) {
  LinForm f = functional_A(d.lift(), p);
  f.space = CoordSpace::T;
  return f;
}

namespace {

// t_j -> weight * a_letter, weight 2 on the wall for Psi and 1 for Upsilon
LinForm substitute(const SympWiringDiagram& d, const LinForm& t, long long wall_weight) {
  LinForm f{CoordSpace::A, IntVec(d.word().size(), 0)};
  for (int j = 0; j < d.lift().length(); ++j) {
    const auto& l = d.label(j);
    f.coeffs[l.letter] += t.coeffs[j] * (l.side == Side::Wall ? wall_weight : 1);
  }
  return f;
}

}  // namespace

LinForm functional_hat_C(const SympWiringDiagram& d, const RigorousPath& p) {
  return substitute(d, functional_T(d, p), 2);
}

LinForm functional_C(const SympWiringDiagram& d, const RigorousPath& p) {
  LinForm f = functional_hat_C(d, p);
  if (is_symmetric(d, p))
    for (auto& c : f.coeffs) {
      if (c % 2 != 0) throw std::logic_error("symmetric path with an odd coefficient");
      c /= 2;
    }
  return f;
}

LinForm functional_B(const SympWiringDiagram& d, const RigorousPath& p) {
  return substitute(d, functional_T(d, p), 1);
}

FoldMaps fold_maps(const SympWiringDiagram& d) {
  FoldMaps fm;
  fm.type = d.type();
  fm.word = d.word();
  const int n = d.rank();
  const std::size_t N = d.word().size();
  const std::size_t T = static_cast<std::size_t>(d.lift().length());
  fm.m.assign(n, 2);
  fm.m[n - 1] = 1;
  fm.m_prime.assign(n, 1);
  fm.m_prime[n - 1] = 2;
  fm.upsilon.assign(T, IntVec(N, 0));
  fm.omega.assign(N, IntVec(T, 0));
  for (std::size_t j = 0; j < T; ++j) {
    const int letter = d.label(static_cast<int>(j)).letter;
    fm.upsilon[j][letter] = 1;
    fm.omega[letter][j] = 1;
  }
  fm.gamma_BC.assign(N, IntVec(N, 0));
  fm.gamma_CB.assign(N, IntVec(N, 0));
  for (std::size_t j = 0; j < N; ++j) {
    fm.gamma_BC[j][j] = fm.m[d.word()[j] - 1];
    fm.gamma_CB[j][j] = fm.m_prime[d.word()[j] - 1];
  }
  fm.psi = multiply(fm.upsilon, fm.gamma_CB);
  return fm;
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  const std::size_t inner = y.size();
  const std::size_t cols = inner ? y[0].size() : 0;
  IntMatrix out(x.size(), IntVec(cols, 0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].size() != inner) throw InputError("matrix shapes do not match");
    for (std::size_t k = 0; k < inner; ++k)
      if (x[i][k] != 0)
        for (std::size_t j = 0; j < cols; ++j) out[i][j] += x[i][k] * y[k][j];
  }
  return out;
}

Vec apply_matrix(const IntMatrix& x, const Vec& v) {
  Vec out(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].size() != v.size()) throw InputError("matrix and vector shapes do not match");
    for (std::size_t j = 0; j < v.size(); ++j)
      if (x[i][j] != 0) out[i] += Rat(static_cast<long>(x[i][j])) * v[j];
  }
  return out;
}

LinForm pull_back(const LinForm& f, const IntMatrix& M, CoordSpace source) {
  if (M.size() != f.coeffs.size()) throw InputError("form and matrix shapes do not match");
  LinForm out{source, IntVec(M.empty() ? 0 : M[0].size(), 0)};
  for (std::size_t i = 0; i < M.size(); ++i)
    if (f.coeffs[i] != 0)
      for (std::size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j] += f.coeffs[i] * M[i][j];
  return out;
}

HRep HRepCone::to_hrep() const {
  HRep h(dim);
  for (const auto& c : constraints) {
    Vec a;
    for (long long x : c.coeffs) a.emplace_back(static_cast<long>(-x));
    h.rows.push_back({a, 0});
  }
  return h;
}

HRepCone string_cone(LieType t, const Word& w) {
  if (!is_reduced(t, w) || static_cast<int>(w.size()) != longest_length(t))
    throw InputError(format_word(w) + " is not a reduced word for the longest element of " + t.str());
  HRepCone cone;
  cone.type = t;
  cone.word = w;
  cone.dim = static_cast<int>(w.size());
  if (t.family == Family::A) {
    WiringDiagram d(w);
    for (int k = 1; k < d.wire_count(); ++k)
      for (auto& p : enumerate_paths(d, k)) {
        cone.constraints.push_back(functional_A(d, p));
        cone.paths.push_back(std::move(p));
      }
    return cone;
  }
  SympWiringDiagram d(t, w);
  if (t.family == Family::C) {
    for (auto& p : symp_paths(d)) {
      cone.constraints.push_back(functional_C(d, p));
      cone.paths.push_back(std::move(p));
    }
    return cone;
  }
  for (int k = 1; k < d.lift().wire_count(); ++k)
    for (auto& p : enumerate_paths(d.lift(), k)) {
      cone.constraints.push_back(functional_B(d, p));
      cone.paths.push_back(std::move(p));
    }
  return cone;
}

namespace {

// first index of every distinct reduced form, then LP pruning
std::vector<int> lp_facets(const HRepCone& cone) {
  std::vector<int> firsts;
  std::set<LinForm> seen;
  for (std::size_t i = 0; i < cone.constraints.size(); ++i) {
    LinForm r = cone.constraints[i].reduced();
    if (r.is_zero()) continue;
    if (seen.insert(r).second) firsts.push_back(static_cast<int>(i));
  }
  HRep h(cone.dim);
  for (int i : firsts) {
    Vec a;
    for (long long x : cone.constraints[i].reduced().coeffs) a.emplace_back(static_cast<long>(-x));
    h.rows.push_back({a, 0});
  }
  std::vector<int> kept = firsts;
  for (std::size_t i = 0; i < h.rows.size();) {
    if (is_redundant(h, i)) {
      h.rows.erase(h.rows.begin() + static_cast<long>(i));
      kept.erase(kept.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }
  return kept;
}

}  // namespace

FacetSystem irredundant_facets(LieType t, const Word& w) {
  FacetSystem fs;
  fs.cone = string_cone(t, w);
  fs.facets = lp_facets(fs.cone);
  for (int i : fs.facets) fs.forms.push_back(fs.cone.constraints[i].reduced());
  const std::set<LinForm> facet_set(fs.forms.begin(), fs.forms.end());
  const auto& cs = fs.cone.constraints;
  const auto& ps = fs.cone.paths;
  const std::string word = format_word(w);

  if (t.family == Family::A) {
    if (fs.facets.size() != cs.size())
      fs.conflicts.push_back(word + ": " + std::to_string(cs.size()) + " paths but " +
                             std::to_string(fs.facets.size()) + " facets");
    return fs;
  }
  SympWiringDiagram d(t, w);
  if (t.family == Family::C) {
    std::map<LinForm, std::vector<int>> sources;
    for (std::size_t i = 0; i < cs.size(); ++i) sources[cs[i].reduced()].push_back(static_cast<int>(i));
    for (const auto& [form, idx] : sources) {
      const bool facet = facet_set.count(form) > 0;
      bool any_symmetric = false, all_wall_asym = true, any_maximal = false;
      for (int i : idx) {
        const bool at_n = ps[i].k == d.rank();
        const bool sym = at_n && is_symmetric(d, ps[i]);
        any_symmetric = any_symmetric || sym;
        all_wall_asym = all_wall_asym && at_n && !sym;
        if (!at_n && is_maximal(d, ps[i])) any_maximal = true;
      }
      if (any_symmetric && !facet)
        fs.conflicts.push_back(word + ": symmetric path gives redundant " + format_form(form));
      if (all_wall_asym && facet)
        fs.conflicts.push_back(word + ": only non-symmetric paths give facet " + format_form(form));
      if (any_maximal && !facet)
        fs.conflicts.push_back(word + ": maximal path gives redundant " + format_form(form));
    }
    return fs;
  }
  // type B: pull the C facets back along Gamma^{B,C}
  const FacetSystem c = irredundant_facets(LieType{Family::C, t.rank}, w);
  const FoldMaps fm = fold_maps(d);
  std::set<LinForm> pulled;
  for (const auto& f : c.forms) pulled.insert(pull_back(f, fm.gamma_BC, CoordSpace::A).reduced());
  if (pulled != facet_set)
    fs.conflicts.push_back(word + ": type-B facets differ from the pulled-back type-C facets");
  return fs;
}

bool is_simplicial(LieType t, const Word& w) {
  if (t.family == Family::A) throw InputError("simpliciality is classified in types B and C");
  // the B cone is the Gamma image of the C cone, so both have the same facet count
  const LieType c{Family::C, t.rank};
  return irredundant_facets(c, w).facet_count() == longest_length(c);
}

std::vector<WordFacets> facet_census(LieType t, std::size_t cap) {
  std::vector<WordFacets> out;
  for_each_reduced_word(
      t,
      [&](const Word& w) {
        out.push_back({w, irredundant_facets(t, w).facet_count()});
        return true;
      },
      cap);
  return out;
}

std::vector<ReducedWord> classify_simplicial(LieType t, std::size_t cap) {
  if (t.family == Family::A) throw InputError("simpliciality is classified in types B and C");
  const LieType c{Family::C, t.rank};
  std::vector<ReducedWord> out;
  for (const auto& wf : facet_census(c, cap))
    if (wf.facets == longest_length(c)) out.push_back({t, wf.word});
  return out;
}

}  // namespace stringcone
