#pragma once

// Small stand-alone enumerators used as independent references by the
// tests. Nothing here calls into the library.

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <vector>

namespace brute {

using Word = std::vector<int>;

template <class F>
void for_each_perm(int n, F&& f) {
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do f(w);
  while (std::next_permutation(w.begin(), w.end()));
}

inline int des(const Word& w) {
  int d = 0;
  for (std::size_t k = 1; k < w.size(); ++k) d += w[k - 1] > w[k];
  return d;
}

inline bool ballot(const Word& w) {
  int h = 0;
  for (std::size_t k = 1; k < w.size(); ++k) {
    h += w[k - 1] < w[k] ? 1 : -1;
    if (h < 0) return false;
  }
  return true;
}

// Cycles of the map k -> w[k-1], each listed from its smallest letter.
inline std::vector<Word> cycles(const Word& w) {
  std::vector<Word> out;
  std::vector<bool> seen(w.size() + 1, false);
  for (int s = 1; s <= static_cast<int>(w.size()); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    Word c;
    for (int k = s; !seen[static_cast<std::size_t>(k)]; k = w[static_cast<std::size_t>(k - 1)]) {
      seen[static_cast<std::size_t>(k)] = true;
      c.push_back(k);
    }
    out.push_back(c);
  }
  return out;
}

// Returns -1 unless every cycle has odd length; otherwise the M statistic.
inline int odd_order_m(const Word& w) {
  int m = 0;
  for (const Word& c : cycles(w)) {
    if (c.size() % 2 == 0) return -1;
    int cd = 0, ca = 0;
    for (std::size_t k = 0; k < c.size() && c.size() > 1; ++k) {
      const int a = c[k], b = c[(k + 1) % c.size()];
      (a > b ? cd : ca)++;
    }
    m += std::min(cd, ca);
  }
  return m;
}

// True iff i -> n -> j under the map, i.e. i n j is a cyclic factor.
inline bool cyclic_factor(const Word& w, int i, int j) {
  const int n = static_cast<int>(w.size());
  return w[static_cast<std::size_t>(i - 1)] == n && w[static_cast<std::size_t>(n - 1)] == j;
}

inline bool factor(const Word& w, int i, int j) {
  const int n = static_cast<int>(w.size());
  for (std::size_t k = 1; k + 1 < w.size(); ++k)
    if (w[k] == n) return w[k - 1] == i && w[k + 1] == j;
  return false;
}

using Key = std::tuple<int, int, int>;  // (d, i, j)

inline std::map<Key, long> first_letter(int n) {
  std::map<Key, long> t;
  for_each_perm(n, [&](const Word& w) { ++t[{des(w), 0, w[0]}]; });
  return t;
}

inline std::map<int, long> ballot_by_des(int n) {
  std::map<int, long> t;
  for_each_perm(n, [&](const Word& w) {
    if (ballot(w)) ++t[des(w)];
  });
  return t;
}

inline std::map<int, long> odd_order_by_m(int n) {
  std::map<int, long> t;
  for_each_perm(n, [&](const Word& w) {
    const int m = odd_order_m(w);
    if (m >= 0) ++t[m];
  });
  return t;
}

// b_{n,d}(i,j): ballot permutations with factor i n j.
inline std::map<Key, long> ballot_factor(int n) {
  std::map<Key, long> t;
  for_each_perm(n, [&](const Word& w) {
    if (!ballot(w)) return;
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j)
        if (i != j && factor(w, i, j)) ++t[{des(w), i, j}];
  });
  return t;
}

// p_{n,d}(i,j): odd-order permutations with cyclic factor i n j, by M.
inline std::map<Key, long> cyclic_factor_table(int n) {
  std::map<Key, long> t;
  for_each_perm(n, [&](const Word& w) {
    const int m = odd_order_m(w);
    if (m < 0) return;
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j)
        if (i != j && cyclic_factor(w, i, j)) ++t[{m, i, j}];
  });
  return t;
}

// E(n,d,j): permutations with d descents containing 1 n j or j n 1.
inline std::map<Key, long> factor_1nj_either(int n) {
  std::map<Key, long> t;
  for_each_perm(n, [&](const Word& w) {
    for (int j = 2; j < n; ++j)
      if (factor(w, 1, j) || factor(w, j, 1)) ++t[{des(w), 0, j}];
  });
  return t;
}

inline long double_factorial(int n) {
  long r = 1;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

inline long factorial(int n) {
  long r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

}  // namespace brute
