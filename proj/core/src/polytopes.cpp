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

#include "stringcone/polytopes.hpp"

#include <algorithm>

namespace stringcone {

LambdaCone lambda_cone_symbolic(LieType t, const Word& w) {
  if (!is_reduced(t, w)) throw InputError(format_word(w) + " is not reduced in " + t.str());
  LambdaCone lc{t, w, {}};
  const int l = static_cast<int>(w.size());
  for (int k = l - 1; k >= 0; --k) {
    SymbolicRow row{IntVec(l, 0), IntVec(t.rank, 0)};
    row.a[k] = 1;
    for (int j = k + 1; j < l; ++j) row.a[j] = cartan_pairing(t, w[j], w[k]);
    row.lambda[w[k] - 1] = 1;
    lc.rows.push_back(row);
  }
  return lc;
}

HRep LambdaCone::specialize(const Weight& lambda) const {
  if (lambda.type != type) throw InputError("weight and word have different types");
  if (!lambda.dominant()) throw InputError("weight is not dominant");
  HRep h(static_cast<int>(word.size()));
  for (const auto& r : rows) {
    long rhs = 0;
    for (std::size_t i = 0; i < r.lambda.size(); ++i) rhs += r.lambda[i] * lambda.coeffs[i];
    Vec a;
    for (long long x : r.a) a.emplace_back(static_cast<long>(x));
    h.rows.push_back({a, Rat(rhs)});
  }
  return h;
}

HRep lambda_cone(LieType t, const Word& w, const Weight& lambda) {
  return lambda_cone_symbolic(t, w).specialize(lambda);
}

HRep string_polytope(LieType t, const Word& w, const Weight& lambda) {
  HRep h = string_cone(t, w).to_hrep();
  const HRep lc = lambda_cone(t, w, lambda);
  h.rows.insert(h.rows.end(), lc.rows.begin(), lc.rows.end());
  return h;
}

// block k lists b^{(k)}_1, b^{(k-1)}_2, ..., b^{(2)}_{k-1}, a^{(1)}_k, a^{(2)}_{k-1}, ..., a^{(k)}_1
int GTShape::a(int i, int k) const {
  const int block = i + k - 1;
  if (i < 1 || k < 1 || block > n) throw InputError("GT coordinate out of range");
  return (block - 1) * (block - 1) + (block - 1) + (i - 1);
}

int GTShape::b(int i, int k) const {
  const int block = i + k - 1;
  if (i < 2 || k < 1 || block > n) throw InputError("GT coordinate out of range");
  return (block - 1) * (block - 1) + (block - i);
}

std::vector<std::string> GTShape::labels() const {
  std::vector<std::string> out(size());
  for (int i = 1; i <= n; ++i)
    for (int k = 1; i + k - 1 <= n; ++k) {
      out[a(i, k)] = "a" + std::to_string(i) + "_" + std::to_string(k);
      if (i >= 2) out[b(i, k)] = "b" + std::to_string(i) + "_" + std::to_string(k);
    }
  return out;
}

GTShape gt_shape(int n) {
  if (n < 1) throw InputError("GT pattern needs n >= 1");
  return GTShape{n};
}

HRep gt_polytope_C(const Weight& lambda, int n) {
  if (n < 2) throw InputError("GT_C needs n >= 2");
  if (lambda.type != LieType{Family::C, n}) throw InputError("weight must be of type C" + std::to_string(n));
  if (!lambda.dominant()) throw InputError("weight is not dominant");
  const GTShape s = gt_shape(n);
  HRep h(s.size());
  auto add = [&](std::vector<std::pair<int, int>> terms, long rhs) {
    Vec a(s.size(), 0);
    for (auto [idx, c] : terms) a[idx] += c;
    Halfspace row{a, Rat(rhs)};
    if (std::find(h.rows.begin(), h.rows.end(), row) == h.rows.end()) h.rows.push_back(row);
  };
  // x >= y  <=>  y - x <= 0
  auto ge = [&](int x, int y) { add({{y, 1}, {x, -1}}, 0); };
  auto nonneg = [&](int x) { add({{x, -1}}, 0); };
  std::vector<long> tail(n + 2, 0);
  for (int k = n; k >= 1; --k) tail[k] = tail[k + 1] + lambda.coeffs[k - 1];
  for (int k = 1; k <= n; ++k) {
    add({{s.a(1, k), 1}}, tail[k]);
    add({{s.a(1, k), -1}}, -tail[k + 1]);
  }
  for (int i = 1; i < n; ++i) {
    const int len = n - i + 1;
    for (int k = 1; k < len; ++k) {
      ge(s.a(i, k), s.b(i + 1, k));
      ge(s.b(i + 1, k), s.a(i, k + 1));
    }
    nonneg(s.a(i, len));
  }
  for (int i = 2; i <= n; ++i) {
    const int len = n - i + 1;
    for (int k = 1; k <= len; ++k) {
      ge(s.b(i, k), s.a(i, k));
      if (k < len) ge(s.a(i, k), s.b(i, k + 1));
    }
    nonneg(s.a(i, len));
  }
  return h;
}

GTTheoremReport verify_gt_theorem(int n, const EquivalenceOptions& opt) {
  if (n < 2) throw InputError("the GT comparison needs n >= 2");
  GTTheoremReport rep;
  rep.n = n;
  const LieType t{Family::C, n};
  const Weight rho = Weight::rho(t);
  const HRep gt = gt_polytope_C(rho, n);
  rep.gt = compute_invariants(gt);
  const int N = longest_length(t);
  const Word ic = word_iC(n);
  bool refuted_all_others = true;
  for (const auto& w : enumerate_reduced_words(t)) {
    GTWordReport wr;
    wr.word = w;
    wr.cone_facets = irredundant_facets(t, w).facet_count();
    wr.simplicial = wr.cone_facets == N;
    const HRep delta = string_polytope(t, w, rho);
    wr.result = search_unimodular_equivalence(delta, gt, opt);
    if (wr.result.verdict == Verdict::Equivalent) rep.equivalent.push_back(w);
    if (w != ic && wr.result.verdict != Verdict::Inequivalent) refuted_all_others = false;
    rep.words.push_back(std::move(wr));
  }
  rep.holds = refuted_all_others && rep.equivalent == std::vector<Word>{ic};
  return rep;
}

}  // namespace stringcone
