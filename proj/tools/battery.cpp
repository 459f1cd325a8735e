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

#include "battery.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "stringcone/polytopes.hpp"

namespace stringcone::cli {

using nlohmann::json;

namespace {

LinForm a_form(std::initializer_list<std::pair<int, int>> terms, int dim) {
  LinForm f{CoordSpace::A, IntVec(dim, 0)};
  for (auto [j, c] : terms) f.coeffs[j - 1] = c;
  return f;
}

std::string word_list(const std::vector<Word>& ws) {
  std::string s;
  for (const auto& w : ws) s += (s.empty() ? "" : " ") + std::string("(") + format_word(w) + ")";
  return s.empty() ? "none" : s;
}

json fvec_json(const std::vector<long>& f) { return json(f); }

// ---------------------------------------------------------------- 1

void check_example_cones(Check& c, const BatteryOptions&) {
  const LieType A3{Family::A, 3};
  const std::vector<LinForm> want_i = {a_form({{1, 1}}, 6),          a_form({{2, 1}, {3, -1}}, 6),
                                       a_form({{4, 1}, {5, -1}}, 6), a_form({{3, 1}}, 6),
                                       a_form({{5, 1}, {6, -1}}, 6), a_form({{6, 1}}, 6)};
  const std::vector<LinForm> want_j = {a_form({{1, 1}}, 6),          a_form({{3, 1}, {4, -1}}, 6),
                                       a_form({{5, 1}, {6, -1}}, 6), a_form({{6, 1}}, 6),
                                       a_form({{2, 1}}, 6),          a_form({{3, 1}, {5, -1}}, 6),
                                       a_form({{4, 1}, {6, -1}}, 6)};
  bool ok = true;
  for (const auto& [w, want] : {std::pair{Word{1, 2, 1, 3, 2, 1}, want_i}, std::pair{Word{1, 3, 2, 1, 3, 2}, want_j}}) {
    const auto cone = string_cone(A3, w);
    std::multiset<LinForm> got(cone.constraints.begin(), cone.constraints.end());
    std::multiset<LinForm> expect(want.begin(), want.end());
    const bool match = got == expect;
    ok = ok && match;
    json forms = json::array();
    for (const auto& f : cone.constraints) forms.push_back(format_form(f) + " >= 0");
    c.data[format_word(w)] = forms;
    c.detail += format_word(w) + ": " + std::to_string(cone.constraints.size()) + " constraints" +
                (match ? " match" : " DIFFER") + "; ";
  }
  c.pass = ok;
}

// ---------------------------------------------------------------- 2

void check_path_facet_equality(Check& c, const BatteryOptions&) {
  long words = 0, mismatches = 0;
  for (int rank = 1; rank <= 4; ++rank) {
    const LieType t{Family::A, rank};
    for_each_reduced_word(t, [&](const Word& w) {
      ++words;
      const auto fs = irredundant_facets(t, w);
      if (fs.facet_count() != static_cast<int>(fs.cone.constraints.size())) {
        ++mismatches;
        c.data["mismatches"].push_back(format_word(w));
      }
      return true;
    });
  }
  c.data["words"] = words;
  c.data["mismatch_count"] = mismatches;
  c.detail = std::to_string(words) + " words with m <= 5 wires, " + std::to_string(mismatches) + " mismatches";
  c.pass = mismatches == 0;
}

// ---------------------------------------------------------------- 3

void check_table(Check& c, const BatteryOptions&) {
  const LieType C2{Family::C, 2};
  const SympWiringDiagram d(C2, Word{2, 1, 2, 1});
  std::map<std::string, int> index;
  for (int j = 0; j < d.lift().length(); ++j) index[symp_node_name(d, j)] = j;
  struct Row {
    bool symmetric;
    std::vector<std::pair<std::string, int>> t;
    LinForm hat, halved;
  };
  const std::vector<Row> table = {
      {true, {{"t1", 1}}, a_form({{1, 2}}, 4), a_form({{1, 1}}, 4)},
      {true, {{"t3", 1}, {"t4", -1}, {"t̄4", -1}}, a_form({{3, 2}, {4, -2}}, 4), a_form({{3, 1}, {4, -1}}, 4)},
      {true, {{"t2", 1}, {"t̄2", 1}, {"t3", -1}}, a_form({{2, 2}, {3, -2}}, 4), a_form({{2, 1}, {3, -1}}, 4)},
      {false, {{"t̄2", 1}, {"t4", -1}}, a_form({{2, 1}, {4, -1}}, 4), a_form({{2, 1}, {4, -1}}, 4)},
      {false, {{"t2", 1}, {"t̄4", -1}}, a_form({{2, 1}, {4, -1}}, 4), a_form({{2, 1}, {4, -1}}, 4)},
  };
  using Key = std::tuple<bool, IntVec, IntVec, IntVec>;
  std::multiset<Key> expect, got;
  for (const auto& r : table) {
    IntVec t(d.lift().length(), 0);
    for (const auto& [name, v] : r.t) t[index.at(name)] = v;
    expect.insert({r.symmetric, t, r.hat.coeffs, r.halved.coeffs});
  }
  const auto paths = symp_paths(d, 2);
  for (const auto& p : paths) {
    got.insert({is_symmetric(d, p), functional_T(d, p).coeffs, functional_hat_C(d, p).coeffs,
                functional_C(d, p).coeffs});
    c.data["rows"].push_back({{"t", format_form(d, functional_T(d, p))},
                              {"hat_C", format_form(functional_hat_C(d, p))},
                              {"C", format_form(functional_C(d, p))},
                              {"symmetric", is_symmetric(d, p)}});
  }
  const int f1 = irredundant_facets(C2, Word{2, 1, 2, 1}).facet_count();
  const int f2 = irredundant_facets(C2, Word{1, 2, 1, 2}).facet_count();
  c.data["facets_2121"] = f1;
  c.data["facets_1212"] = f2;
  c.pass = paths.size() == 5 && got == expect && f1 == 4 && f2 == 4;
  c.detail = std::to_string(paths.size()) + " paths at k=2, table " + (got == expect ? "matches" : "DIFFERS") +
             "; ||(2,1,2,1)|| = " + std::to_string(f1) + ", ||(1,2,1,2)|| = " + std::to_string(f2);
}

// ---------------------------------------------------------------- 4

void check_classification(Check& c, const BatteryOptions& opt) {
  bool ok = true;
  for (int n = 2; n <= opt.max_n; ++n) {
    const LieType t{Family::C, n};
    const auto census = facet_census(t);
    std::vector<Word> simplicial;
    for (const auto& wf : census)
      if (wf.facets == longest_length(t)) simplicial.push_back(wf.word);
    std::vector<Word> want{word_iC(n), word_jC(n)};
    std::sort(want.begin(), want.end());
    const bool literal = simplicial == want;
    // the same statement read up to commutation moves
    std::set<Word> classes;
    for (const auto& w : want)
      for (const auto& v : oracle::commutation_class(t, w)) classes.insert(v);
    const bool up_to_commutation = std::set<Word>(simplicial.begin(), simplicial.end()) == classes;
    ok = ok && literal;
    json entry = {{"words", census.size()},
                  {"simplicial", json::array()},
                  {"literal_match", literal},
                  {"commutation_class_match", up_to_commutation}};
    for (const auto& w : simplicial) entry["simplicial"].push_back(format_word(w));
    c.detail += "n=" + std::to_string(n) + ": " + std::to_string(census.size()) + " words, simplicial " +
                word_list(simplicial) + (literal ? "" : " (expected exactly i_C, j_C)") +
                (up_to_commutation ? ", equal to the commutation classes of i_C, j_C" : "") + "; ";
    if (n == 3) {
      // ||w|| >= ||cont(w)|| + (2n-1)
      std::map<Word, int> small;
      for (const auto& wf : facet_census(LieType{Family::C, 2})) small[wf.word] = wf.facets;
      long violations = 0, equalities = 0;
      for (const auto& wf : census) {
        const int bound = small.at(contract(t, wf.word)) + 2 * n - 1;
        if (wf.facets < bound) ++violations;
        if (wf.facets == bound) ++equalities;
      }
      entry["contraction_bound_violations"] = violations;
      entry["contraction_bound_equalities"] = equalities;
      ok = ok && violations == 0;
      c.detail += "contraction bound violated by " + std::to_string(violations) + " words; ";
    }
    c.data["n" + std::to_string(n)] = entry;
  }
  c.pass = ok;
}

// ---------------------------------------------------------------- 5

void check_polytope_facets(Check& c, const BatteryOptions& opt) {
  bool ok = true;
  for (int n = 2; n <= opt.max_n; ++n) {
    const LieType t{Family::C, n};
    const int N = longest_length(t);
    long bad = 0, words = 0;
    for (const auto& w : enumerate_reduced_words(t)) {
      ++words;
      const int cone = irredundant_facets(t, w).facet_count();
      const HRep irr = remove_redundant(string_polytope(t, w, Weight::rho(t)));
      const int poly = static_cast<int>(irr.rows.size());
      const bool special = w == word_iC(n) || w == word_jC(n);
      if (poly != cone + N || (special && poly != 2 * N)) {
        ++bad;
        c.data["failures"].push_back(format_word(w));
      }
    }
    ok = ok && bad == 0;
    c.detail += "n=" + std::to_string(n) + ": " + std::to_string(words) + " words, " + std::to_string(bad) + " failures; ";
  }
  c.pass = ok;
}

// ---------------------------------------------------------------- 6

void check_fvectors(Check& c, const BatteryOptions&) {
  const LieType C3{Family::C, 3};
  const std::vector<long> want_gt{1, 176, 936, 2244, 3126, 2760, 1590, 594, 138, 18, 1};
  const std::vector<long> want_j{1, 175, 933, 2241, 3125, 2760, 1590, 594, 138, 18, 1};
  const auto gt = f_vector(gt_polytope_C(Weight::rho(C3), 3));
  const auto j = f_vector(string_polytope(C3, word_jC(3), Weight::rho(C3)));
  c.data["gt"] = fvec_json(gt);
  c.data["j_C"] = fvec_json(j);
  c.pass = gt == want_gt && j == want_j;
  c.detail = std::string("GT_C3(rho) ") + (gt == want_gt ? "matches" : "DIFFERS") + ", Delta_jC3(rho) " +
             (j == want_j ? "matches" : "DIFFERS");
}

// ---------------------------------------------------------------- 7

void check_nonintegral_vertex(Check& c, const BatteryOptions& opt) {
  bool ok = true;
  for (int n = 2; n <= opt.max_n; ++n) {
    const LieType t{Family::C, n};
    const int N = longest_length(t);
    const HRep h = string_polytope(t, word_jC(n), Weight::rho(t));
    Vec x(N, 0);
    x[1] = Rat(3, 2);
    x[2] = 3;
    x[3] = 1;
    const bool inside = h.contains(x);
    const int rank = tight_rank(h, x);
    const bool integral = integrality(h).integral;
    ok = ok && inside && rank == N && !integral;
    c.data["n" + std::to_string(n)] = {{"contains", inside}, {"tight_rank", rank}, {"integral", integral}};
    c.detail += "n=" + std::to_string(n) + ": tight rank " + std::to_string(rank) + "/" + std::to_string(N) +
                (integral ? ", integral" : ", not integral") + "; ";
  }
  c.pass = ok;
}

// ---------------------------------------------------------------- 8

void check_gt_theorem(Check& c, const BatteryOptions& opt) {
  bool ok = true;
  for (int n = 2; n <= opt.max_n; ++n) {
    const auto rep = verify_gt_theorem(n);
    bool certified = false;
    const LieType t{Family::C, n};
    const HRep gt = gt_polytope_C(Weight::rho(t), n);
    json words = json::array();
    for (const auto& w : rep.words) {
      if (w.result.verdict == Verdict::Equivalent)
        certified = verify_unimodular_map(string_polytope(t, w.word, Weight::rho(t)), gt, w.result.U, w.result.shift);
      words.push_back({{"word", format_word(w.word)},
                       {"verdict", to_string(w.result.verdict)},
                       {"witness", w.result.witness}});
    }
    const bool pass = rep.holds && certified;
    ok = ok && pass;
    c.data["n" + std::to_string(n)] = words;
    c.detail += "n=" + std::to_string(n) + ": equivalent " + word_list(rep.equivalent) +
                (certified ? " (map verified)" : " (no verified map)") + ", others refuted: " +
                (rep.holds ? "yes" : "no") + "; ";
  }
  c.pass = ok;
}

// ---------------------------------------------------------------- 9

bool in_cone(const HRepCone& cone, const Vec& x) {
  for (const auto& f : cone.constraints) {
    Rat s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += Rat(static_cast<long>(f.coeffs[j])) * x[j];
    if (s < 0) return false;
  }
  return true;
}

void check_folding(Check& c, const BatteryOptions& opt) {
  long failures = 0, words = 0, generators = 0, paths = 0;
  auto fail = [&](const std::string& what) {
    ++failures;
    if (c.data["failures"].size() < 20) c.data["failures"].push_back(what);
  };
  for (int n = 2; n <= opt.max_n; ++n) {
    const LieType C{Family::C, n}, B{Family::B, n}, A{Family::A, 2 * n - 1};
    const int N = longest_length(C);
    for (const auto& w : enumerate_reduced_words(C)) {
      ++words;
      const std::string tag = "C" + std::to_string(n) + " (" + format_word(w) + ")";
      const SympWiringDiagram d(C, w);
      const FoldMaps fm = fold_maps(d);
      IntMatrix two(N, IntVec(N, 0));
      for (int i = 0; i < N; ++i) two[i][i] = 2;
      if (multiply(fm.gamma_BC, fm.gamma_CB) != two) fail(tag + ": Gamma^{B,C} Gamma^{C,B} != 2 id");
      if (multiply(fm.omega, fm.upsilon) != fm.gamma_BC) fail(tag + ": Omega Upsilon != Gamma^{B,C}");

      const HRepCone ca = string_cone(A, lift(C, w));
      const HRepCone cb = string_cone(B, w);
      const HRepCone cc = string_cone(C, w);
      // slice: generators of C^B map into C^A, generators of the slice lie in C^B
      for (const auto& r : to_vrep(cb.to_hrep()).rays) {
        ++generators;
        if (!in_cone(ca, apply_matrix(fm.upsilon, r))) fail(tag + ": Upsilon(C^B generator) not in C^A");
      }
      HRep slice(N);
      for (const auto& f : ca.constraints) {
        const LinForm g = pull_back(f, fm.upsilon, CoordSpace::A);
        Vec a;
        for (long long x : g.coeffs) a.emplace_back(static_cast<long>(-x));
        slice.rows.push_back({a, 0});
      }
      for (const auto& r : to_vrep(slice).rays) {
        ++generators;
        if (!in_cone(cb, r)) fail(tag + ": slice generator not in C^B");
      }
      // quotient: Omega(C^A generators) in C^C, and C^C generators have preimages
      const auto a_rays = to_vrep(ca.to_hrep()).rays;
      for (const auto& r : a_rays) {
        ++generators;
        if (!in_cone(cc, apply_matrix(fm.omega, r))) fail(tag + ": Omega(C^A generator) not in C^C");
      }
      for (const auto& g : to_vrep(cc.to_hrep()).rays) {
        ++generators;
        HRep pre = ca.to_hrep();
        for (int i = 0; i < N; ++i) {
          Vec row(fm.omega[i].size());
          for (std::size_t j = 0; j < row.size(); ++j) row[j] = Rat(static_cast<long>(fm.omega[i][j]));
          pre.add_le(row, g[i]);
          pre.add_ge(row, g[i]);
        }
        if (!feasible(pre)) fail(tag + ": C^C generator without preimage in C^A");
      }
      // similarity: Gamma^{B,C} carries C^B onto C^C
      const auto fb = irredundant_facets(B, w);
      if (!fb.conflicts.empty()) fail(tag + ": " + fb.conflicts.front());
      // mirror functional equality and even coefficients
      for (const auto& p : symp_paths(d)) {
        ++paths;
        const LinForm h = functional_hat_C(d, p);
        if (h != functional_hat_C(d, mirror(d, p))) fail(tag + ": mirror functional differs");
        if (is_symmetric(d, p))
          for (long long x : h.coeffs)
            if (x % 2 != 0) fail(tag + ": odd coefficient on a symmetric path");
      }
    }
  }
  c.data["words"] = words;
  c.data["generators"] = generators;
  c.data["paths"] = paths;
  c.data["failure_count"] = failures;
  c.pass = failures == 0;
  c.detail = std::to_string(words) + " words, " + std::to_string(generators) + " generators, " +
             std::to_string(paths) + " symplectic paths, " + std::to_string(failures) + " failures";
}

// ---------------------------------------------------------------- 10

void check_path_oracle(Check& c, const BatteryOptions&) {
  long diagrams = 0, discrepancies = 0, total = 0;
  for (int rank = 1; rank <= 4; ++rank) {
    const LieType t{Family::A, rank};
    for_each_reduced_word(t, [&](const Word& w) {
      const WiringDiagram d(w);
      for (int k = 1; k < d.wire_count(); ++k) {
        ++diagrams;
        std::vector<oracle::Walk> fast;
        for (const auto& p : enumerate_paths(d, k)) fast.push_back(oracle::as_walk(p));
        std::sort(fast.begin(), fast.end());
        const auto slow = oracle::naive_paths(w, k);
        total += static_cast<long>(slow.size());
        if (fast != slow) {
          ++discrepancies;
          if (c.data["discrepancies"].size() < 20)
            c.data["discrepancies"].push_back(format_word(w) + " k=" + std::to_string(k));
        }
      }
      return true;
    });
  }
  c.data["diagrams"] = diagrams;
  c.data["paths"] = total;
  c.data["discrepancy_count"] = discrepancies;
  c.pass = discrepancies == 0;
  c.detail = std::to_string(diagrams) + " oriented diagrams, " + std::to_string(total) + " paths, " +
             std::to_string(discrepancies) + " discrepancies";
}

struct Spec {
  const char* title;
  double limit;
  void (*fn)(Check&, const BatteryOptions&);
};

const Spec kSpecs[kCriteria] = {
    {"type-A worked example cones", 1, check_example_cones},
    {"paths = LP facets, all words with m <= 5", 300, check_path_facet_equality},
    {"(2,1,2,1) functional table and facet counts", 0, check_table},
    {"simplicial words are exactly i_C, j_C", 1800, check_classification},
    {"facets(Delta_w(rho)) = ||w|| + N", 0, check_polytope_facets},
    {"f-vectors of GT_C3(rho) and Delta_jC3(rho)", 1200, check_fvectors},
    {"non-integral vertex of Delta_jC(rho)", 0, check_nonintegral_vertex},
    {"GT equivalence exactly for i_C", 0, check_gt_theorem},
    {"folding maps, slice, quotient, mirror", 0, check_folding},
    {"path enumerator vs naive oracle, m <= 5", 0, check_path_oracle},
};

}  // namespace

Check run_check(int id, const BatteryOptions& opt) {
  if (id < 1 || id > kCriteria) throw InputError("no criterion " + std::to_string(id));
  const Spec& s = kSpecs[id - 1];
  Check c;
  c.id = id;
  c.title = s.title;
  c.limit_seconds = s.limit;
  c.data = json::object();
  const auto start = std::chrono::steady_clock::now();
  try {
    s.fn(c, opt);
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail += std::string("error: ") + e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.limit_seconds > 0 && c.seconds >= c.limit_seconds) {
    c.pass = false;
    c.detail += " (over the runtime bound)";
  }
  return c;
}

std::vector<Check> run_battery(const BatteryOptions& opt, const std::function<void(const Check&)>& on_done) {
  std::vector<Check> out;
  for (int id = 1; id <= kCriteria; ++id) {
    out.push_back(run_check(id, opt));
    if (on_done) on_done(out.back());
  }
  return out;
}

std::string format_check(const Check& c) {
  std::ostringstream os;
  os << (c.pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title << ": " << c.detail;
  os.precision(3);
  os << " (" << std::fixed << c.seconds << " s";
  if (c.limit_seconds > 0) os << ", limit " << static_cast<long>(c.limit_seconds) << " s";
  os << ")";
  return os.str();
}

}  // namespace stringcone::cli
