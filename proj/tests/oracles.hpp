#pragma once

// Slow, definitional re-implementations used to cross-check the library.
// Nothing here calls into simsun except for the plain value types.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using Word = std::vector<int>;

inline std::vector<Word> permutations(int n) {
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Word> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline Word reduce(const Word& w) {
  Word sorted = w;
  std::sort(sorted.begin(), sorted.end());
  Word out;
  for (int v : w) out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  return out;
}

// Pattern text in dash notation, e.g. "32-1".
struct Pattern {
  Word values;
  std::vector<bool> glued;  // glued[i]: positions i, i+1 adjacent
};

inline Pattern pattern(const std::string& text) {
  Pattern p;
  bool dash = true;
  for (char c : text) {
    if (c == '-') {
      dash = true;
      continue;
    }
    if (!p.values.empty()) p.glued.push_back(!dash);
    p.values.push_back(c - '0');
    dash = false;
  }
  return p;
}

// Tries every increasing index tuple.
inline bool contains(const Word& host, const Pattern& pat) {
  const int n = static_cast<int>(host.size());
  const int k = static_cast<int>(pat.values.size());
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    int j = 0;
    for (int i = 0; i < n; ++i)
      if (pick[static_cast<std::size_t>(i)]) idx[static_cast<std::size_t>(j++)] = i;
    bool ok = true;
    for (int a = 0; a + 1 < k && ok; ++a)
      if (pat.glued[static_cast<std::size_t>(a)] && idx[a + 1] != idx[a] + 1) ok = false;
    if (!ok) continue;
    Word sub;
    for (int i : idx) sub.push_back(host[static_cast<std::size_t>(i)]);
    if (reduce(sub) == pat.values) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

inline bool avoids(const Word& host, const std::vector<std::string>& pats) {
  for (const auto& t : pats)
    if (contains(host, pattern(t))) return false;
  return true;
}

// For every k, reduce the subword of values <= k and look for a double descent.
inline bool is_simsun(const Word& p) {
  const int n = static_cast<int>(p.size());
  for (int k = 1; k <= n; ++k) {
    Word sub;
    for (int v : p)
      if (v <= k) sub.push_back(v);
    sub = reduce(sub);
    for (std::size_t i = 0; i + 2 < sub.size(); ++i)
      if (sub[i] > sub[i + 1] && sub[i + 1] > sub[i + 2]) return false;
  }
  return true;
}

inline std::vector<Word> rs(int n, const std::vector<std::string>& pats) {
  std::vector<Word> out;
  for (auto& w : permutations(n))
    if (is_simsun(w) && avoids(w, pats)) out.push_back(w);
  return out;
}

inline bool up_down(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if ((i % 2 == 0) != (w[i] < w[i + 1])) return false;
  return true;
}

// E_n by 2 E_{n+1} = sum_k binom(n,k) E_k E_{n-k}.
inline std::vector<Big> euler(int n_max) {
  std::vector<Big> e{1, 1};
  for (int n = 1; static_cast<int>(e.size()) <= n_max; ++n) {
    Big s = 0, b = 1;
    for (int k = 0; k <= n; ++k) {
      s += b * e[static_cast<std::size_t>(k)] * e[static_cast<std::size_t>(n - k)];
      b = b * (n - k) / (k + 1);
    }
    e.push_back(s / 2);
  }
  e.resize(static_cast<std::size_t>(n_max + 1));
  return e;
}

inline Big binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Big b = 1;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

inline Big catalan(int n) { return binom(2 * n, n) / (n + 1); }

inline Big motzkin(int n) {
  Big s = 0;
  for (int k = 0; 2 * k <= n; ++k) s += binom(n, 2 * k) * catalan(k);
  return s;
}

inline Big fibonacci(int n) {
  Big a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    Big t = a + b;
    a = b;
    b = t;
  }
  return a;
}

inline Big pow2(int e) { return e < 0 ? Big(0) : Big(1) << e; }

// All words over the given letters of the given length.
inline std::vector<std::string> words(const std::string& letters, int len) {
  std::vector<std::string> out{""};
  for (int i = 0; i < len; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out)
      for (char c : letters) next.push_back(w + c);
    out = std::move(next);
  }
  return out;
}

inline bool dyck(const std::string& w) {
  int h = 0;
  for (char c : w) {
    h += c == 'U' ? 1 : c == 'D' ? -1 : 0;
    if (h < 0) return false;
  }
  return h == 0;
}

inline bool has(const std::string& w, const std::string& f) { return w.find(f) != std::string::npos; }

// Dyck words of semilength n with no UUU and no DDD; their count is S_n.
inline std::set<std::string> d1(int n) {
  std::set<std::string> out;
  for (const auto& w : words("UD", 2 * n))
    if (dyck(w) && !has(w, "UUU") && !has(w, "DDD")) out.insert(w);
  return out;
}

// Every peak sits inside a UUDD factor.
inline bool every_peak_in_uudd(const std::string& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] != 'U' || w[i + 1] != 'D') continue;
    if (i == 0 || i + 2 >= w.size() || w[i - 1] != 'U' || w[i + 2] != 'D') return false;
  }
  return true;
}

inline std::set<std::string> d2(int n) {
  std::set<std::string> out;
  for (const auto& w : words("UD", 2 * n))
    if (dyck(w) && every_peak_in_uudd(w)) out.insert(w);
  return out;
}

inline std::set<std::string> motzkin_paths(int n) {
  std::set<std::string> out;
  for (const auto& w : words("UDH", n))
    if (dyck(w)) out.insert(w);
  return out;
}

// Krattenthaler's 132 map: at each left-to-right minimum v, climb until
// n + 1 - v up steps have been drawn, then step down; other entries step down.
inline std::string krar132(const Word& p) {
  const int n = static_cast<int>(p.size());
  std::string out;
  int ups = 0, lrmin = n + 1;
  for (int v : p) {
    if (v < lrmin) {
      lrmin = v;
      for (; ups < n + 1 - v; ++ups) out += 'U';
    }
    out += 'D';
  }
  return out;
}

inline std::string join(const Word& w) {
  std::string s;
  for (int v : w) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s.empty() ? "e" : s;
}

}  // namespace oracle
