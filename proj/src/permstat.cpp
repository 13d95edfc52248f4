#include "ballot/permstat.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ballot {

Permutation::Permutation(std::vector<Letter> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (Letter v : word_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of {1.." + std::to_string(n) + "}");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Letter> w(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::reversed() const {
  Permutation r = *this;
  std::reverse(r.word_.begin(), r.word_.end());
  return r;
}

Cycle::Cycle(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("empty cycle");
  auto sorted = letters_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("cycle repeats a letter");
  std::rotate(letters_.begin(), std::max_element(letters_.begin(), letters_.end()), letters_.end());
}

int Cycle::cyclic_descents() const {
  const std::size_t k = letters_.size();
  int c = 0;
  for (std::size_t i = 0; i < k; ++i)
    if (letters_[i] > letters_[(i + 1) % k]) ++c;
  return c;
}

int Cycle::cyclic_ascents() const {
  const std::size_t k = letters_.size();
  int c = 0;
  for (std::size_t i = 0; i < k; ++i)
    if (letters_[i] < letters_[(i + 1) % k]) ++c;
  return c;
}

int descents(std::span<const Letter> w) {
  int c = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) ++c;
  return c;
}

int ascents(std::span<const Letter> w) {
  int c = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) ++c;
  return c;
}

std::vector<int> prefix_heights(std::span<const Letter> w) {
  std::vector<int> h;
  h.reserve(w.size());
  int cur = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) cur += (w[i - 1] < w[i]) ? 1 : -1;
    h.push_back(cur);
  }
  return h;
}

bool is_ballot(std::span<const Letter> w) {
  int cur = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    cur += (w[i - 1] < w[i]) ? 1 : -1;
    if (cur < 0) return false;
  }
  return true;
}

LowestPoints lowest_points(const Permutation& p) {
  if (p.size() < 1) throw std::domain_error("lowest_points needs n >= 1");
  const auto h = prefix_heights(p);
  const int lo = *std::min_element(h.begin(), h.end());
  LowestPoints lp;
  for (int k = 0; k < static_cast<int>(h.size()); ++k) {
    if (h[static_cast<std::size_t>(k)] != lo) continue;
    if (lp.min_index == 0) lp.min_index = k + 1;
    lp.max_index = k + 1;
  }
  return lp;
}

std::vector<Cycle> cycle_decompose(const Permutation& p) {
  const int n = p.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<Cycle> out;
  // Starting from the largest unvisited letter yields canonical rotations
  // and a result ordered by decreasing leader.
  for (Letter s = n; s >= 1; --s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Letter> c;
    for (Letter v = s; !seen[static_cast<std::size_t>(v)]; v = p(v)) {
      seen[static_cast<std::size_t>(v)] = true;
      c.push_back(v);
    }
    out.emplace_back(std::move(c));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool is_odd_order(const Permutation& p) {
  const auto cs = cycle_decompose(p);
  return std::all_of(cs.begin(), cs.end(), [](const Cycle& c) { return c.size() % 2 == 1; });
}

int m_statistic(const Permutation& p) {
  int m = 0;
  for (const auto& c : cycle_decompose(p)) m += std::min(c.cyclic_descents(), c.cyclic_ascents());
  return m;
}

StatProfile profile(const Permutation& p) {
  StatProfile s;
  s.des = descents(p);
  s.asc = ascents(p);
  s.height = s.asc - s.des;
  s.is_ballot = is_ballot(p);
  s.m_stat = m_statistic(p);
  s.is_odd_order = is_odd_order(p);
  return s;
}

namespace {

void check_factor_letters(const Permutation& p, Letter i, Letter j) {
  const int n = p.size();
  if (i < 1 || j < 1 || i >= n || j >= n || i == j)
    throw std::domain_error("factor letters must satisfy 1 <= i, j < n and i != j");
}

}  // namespace

bool has_factor_1nj(const Permutation& p, Letter i, Letter j) {
  check_factor_letters(p, i, j);
  const auto w = p.word();
  const Letter n = p.size();
  for (std::size_t k = 0; k + 2 < w.size(); ++k)
    if (w[k] == i && w[k + 1] == n && w[k + 2] == j) return true;
  return false;
}

bool has_cyclic_factor_1nj(const Permutation& p, Letter i, Letter j) {
  check_factor_letters(p, i, j);
  const Letter n = p.size();
  for (const auto& c : cycle_decompose(p)) {
    const auto l = c.letters();
    if (l.size() < 3) continue;
    std::vector<Letter> doubled(l.begin(), l.end());
    doubled.insert(doubled.end(), l.begin(), l.end());
    for (std::size_t k = 0; k < l.size(); ++k)
      if (doubled[k] == i && doubled[k + 1] == n && doubled[k + 2] == j) return true;
  }
  return false;
}

CycleSummary cycle_summary(std::span<const Letter> w) {
  const std::size_t n = w.size();
  std::vector<char> seen(n + 1, 0);
  CycleSummary s;
  for (std::size_t start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    int len = 0, cdes = 0, casc = 0;
    std::size_t v = start;
    do {
      seen[v] = 1;
      const auto next = static_cast<std::size_t>(w[v - 1]);
      if (next < v) ++cdes;
      if (next > v) ++casc;
      ++len;
      v = next;
    } while (v != start);
    ++s.cycles;
    s.m_stat += std::min(cdes, casc);
    if (len % 2 == 0) s.odd_order = false;
  }
  return s;
}

std::optional<std::pair<Letter, Letter>> max_letter_neighbors(std::span<const Letter> w) {
  const auto n = static_cast<Letter>(w.size());
  const auto it = std::find(w.begin(), w.end(), n);
  if (w.size() < 3 || it == w.begin() || it + 1 == w.end()) return std::nullopt;
  return std::pair{*(it - 1), *(it + 1)};
}

std::optional<std::pair<Letter, Letter>> max_letter_cyclic_neighbors(std::span<const Letter> w) {
  const auto n = static_cast<Letter>(w.size());
  if (n < 3) return std::nullopt;
  const Letter next = w[static_cast<std::size_t>(n - 1)];
  const auto pre = static_cast<Letter>(std::find(w.begin(), w.end(), n) - w.begin()) + 1;
  if (next == n || pre == next) return std::nullopt;
  return std::pair{pre, next};
}

}  // namespace ballot
