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

#include "stringcone/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

namespace stringcone {

namespace {

int parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    throw InputError("not an integer: '" + std::string(s) + "'");
  return v;
}

void check_letters(LieType t, const Word& w) {
  for (int i : w)
    if (i < 1 || i > t.rank)
      throw InputError("letter " + std::to_string(i) + " out of range for " + t.str());
}

std::vector<int> identity(LieType t) {
  std::vector<int> e(t.family == Family::A ? t.rank + 1 : t.rank);
  std::iota(e.begin(), e.end(), 1);
  return e;
}

// right multiplication by s_i acts on positions
void apply(LieType t, std::vector<int>& u, int i) {
  if (t.family != Family::A && i == t.rank)
    u[i - 1] = -u[i - 1];
  else
    std::swap(u[i - 1], u[i]);
}

std::vector<int> longest_element(LieType t) {
  auto e = identity(t);
  if (t.family == Family::A)
    std::reverse(e.begin(), e.end());
  else
    for (int& x : e) x = -x;
  return e;
}

}  // namespace

LieType LieType::parse(std::string_view text) {
  if (text.size() < 2) throw InputError("bad Lie type '" + std::string(text) + "'");
  LieType t;
  switch (text[0]) {
    case 'A': case 'a': t.family = Family::A; break;
    case 'B': case 'b': t.family = Family::B; break;
    case 'C': case 'c': t.family = Family::C; break;
    default: throw InputError("bad Lie type '" + std::string(text) + "'");
  }
  t.rank = parse_int(text.substr(1));
  if (t.rank < 1 || (t.family != Family::A && t.rank < 2))
    throw InputError("bad rank in Lie type '" + std::string(text) + "'");
  return t;
}

std::string LieType::str() const {
  const char f = family == Family::A ? 'A' : family == Family::B ? 'B' : 'C';
  return std::string(1, f) + std::to_string(rank);
}

int LieType::wire_count() const { return family == Family::A ? rank + 1 : 2 * rank; }

Word parse_word(std::string_view text) {
  Word w;
  while (!text.empty()) {
    auto comma = text.find(',');
    w.push_back(parse_int(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (w.empty()) throw InputError("empty word");
  return w;
}

std::string format_word(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

int longest_length(LieType t) {
  if (t.family == Family::A) return (t.rank + 1) * t.rank / 2;
  return t.rank * t.rank;
}

std::vector<int> reflection_product(LieType t, const Word& letters) {
  check_letters(t, letters);
  auto u = identity(t);
  for (int i : letters) apply(t, u, i);
  return u;
}

int coxeter_length(LieType t, const std::vector<int>& u) {
  const int n = static_cast<int>(u.size());
  int inv = 0;
  if (t.family == Family::A) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += u[i] > u[j];
    return inv;
  }
  // (inv(image in S_2n) + #negatives) / 2, image on positions 1..n,n+1..2n
  std::vector<int> big(2 * n);
  for (int p = 0; p < n; ++p) {
    int v = u[p];
    int img = v > 0 ? v : 2 * n + 1 + v;
    big[p] = img;
    big[2 * n - 1 - p] = 2 * n + 1 - img;
  }
  for (int i = 0; i < 2 * n; ++i)
    for (int j = i + 1; j < 2 * n; ++j) inv += big[i] > big[j];
  int neg = 0;
  for (int v : u) neg += v < 0;
  return (inv + neg) / 2;
}

bool is_reduced(LieType t, const Word& letters) {
  check_letters(t, letters);
  if (static_cast<int>(letters.size()) != longest_length(t)) return false;
  return reflection_product(t, letters) == longest_element(t);
}

void for_each_reduced_word(LieType t, const std::function<bool(const Word&)>& emit,
                           std::size_t cap) {
  const int len = longest_length(t);
  Word w;
  auto u = identity(t);
  std::size_t count = 0;
  bool stop = false;
  std::function<void(int)> dfs = [&](int cur) {
    if (stop) return;
    if (cur == len) {
      if (++count > cap)
        throw ResourceError("reduced-word enumeration exceeded cap of " + std::to_string(cap) +
                            " words for " + t.str());
      if (!emit(w)) stop = true;
      return;
    }
    for (int i = 1; i <= t.rank && !stop; ++i) {
      apply(t, u, i);
      if (coxeter_length(t, u) == cur + 1) {
        w.push_back(i);
        dfs(cur + 1);
        w.pop_back();
      }
      apply(t, u, i);
    }
  };
  dfs(0);
}

std::vector<Word> enumerate_reduced_words(LieType t, std::size_t cap) {
  std::vector<Word> out;
  for_each_reduced_word(t, [&](const Word& w) { out.push_back(w); return true; }, cap);
  return out;
}

Word lift(LieType t, const Word& w) {
  if (t.family == Family::A) throw InputError("lift expects a word of type B or C");
  check_letters(t, w);
  const int n = t.rank;
  Word out;
  for (int i : w) {
    out.push_back(i);
    if (i != n) out.push_back(2 * n - i);
  }
  return out;
}

Word delete_wires(const Word& w, int m, const std::vector<int>& wires) {
  std::vector<int> pos(m);
  std::iota(pos.begin(), pos.end(), 1);
  auto gone = [&](int wire) { return std::find(wires.begin(), wires.end(), wire) != wires.end(); };
  Word out;
  for (int c : w) {
    if (c < 1 || c >= m) throw InputError("letter out of range in delete_wires");
    int l = pos[c - 1], r = pos[c];
    if (!gone(l) && !gone(r)) {
      int shift = 0;
      for (int p = 0; p < c - 1; ++p) shift += gone(pos[p]);
      out.push_back(c - shift);
    }
    std::swap(pos[c - 1], pos[c]);
  }
  return out;
}

Word contract(LieType t, const Word& w) {
  if (t.family == Family::A) throw InputError("contract expects a word of type B or C");
  if (t.rank < 3) throw DomainError("contraction needs rank n >= 3");
  if (!is_reduced(t, w)) throw InputError("contract: word is not reduced");
  const int n = t.rank;
  Word small = delete_wires(lift(t, w), 2 * n, {1, 2 * n});
  // fold back: letters are pairs (c, 2(n-1)-c) or single wall letters n-1
  Word out;
  for (std::size_t p = 0; p < small.size(); ++p) {
    int c = small[p];
    out.push_back(c);
    if (c != n - 1) ++p;
  }
  return out;
}

int cartan_pairing(LieType t, int i, int j) {
  if (i < 1 || i > t.rank || j < 1 || j > t.rank)
    throw InputError("Cartan index out of range for " + t.str());
  if (i == j) return 2;
  if (std::abs(i - j) != 1) return 0;
  const int n = t.rank;
  if (t.family == Family::C && i == n && j == n - 1) return -2;
  if (t.family == Family::B && i == n - 1 && j == n) return -2;
  return -1;
}

Weight Weight::parse(LieType t, std::string_view text) {
  Weight w{t, {}};
  if (text == "rho") return rho(t);
  if (text == "0") {
    w.coeffs.assign(t.rank, 0);
    return w;
  }
  for (int c : parse_word(text)) w.coeffs.push_back(c);
  if (static_cast<int>(w.coeffs.size()) != t.rank)
    throw InputError("weight needs " + std::to_string(t.rank) + " coefficients");
  if (!w.dominant()) throw InputError("weight is not dominant");
  return w;
}

Weight Weight::rho(LieType t) { return Weight{t, std::vector<long>(t.rank, 1)}; }

bool Weight::dominant() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](long c) { return c >= 0; });
}

bool Weight::regular() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](long c) { return c > 0; });
}

namespace {
void push_block(Word& w, int k, int n) {
  for (int i = k; i <= n; ++i) w.push_back(i);
  for (int i = n - 1; i >= k; --i) w.push_back(i);
}
}  // namespace

Word word_iC(int n) {
  Word w;
  for (int k = n; k >= 1; --k) push_block(w, k, n);
  return w;
}

Word word_jC(int n) {
  Word w{n - 1, n, n - 1, n};
  for (int k = n - 2; k >= 1; --k) push_block(w, k, n);
  return w;
}

}  // namespace stringcone
