#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ballot {

using Letter = int;

/// A permutation of {1..n} in one-line notation. n = 0 is the empty
/// permutation.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `word` is a bijection onto {1..n}.
  explicit Permutation(std::vector<Letter> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  std::span<const Letter> word() const { return word_; }

  /// 1-based letter access, p(i) = word[i-1].
  Letter operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

  Permutation reversed() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Letter> word_;
};

/// One cycle, rotated so its largest letter comes first.
class Cycle {
 public:
  /// Throws std::invalid_argument on an empty or repeating letter list.
  explicit Cycle(std::vector<Letter> letters);

  std::span<const Letter> letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }

  /// Descents / ascents of the cyclic word, wrap pair included. A fixed
  /// point has neither.
  int cyclic_descents() const;
  int cyclic_ascents() const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle& a, const Cycle& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<Letter> letters_;
};

struct StatProfile {
  int des = 0;
  int asc = 0;
  int height = 0;
  bool is_ballot = true;
  int m_stat = 0;
  bool is_odd_order = true;
};

int descents(std::span<const Letter> word);
int ascents(std::span<const Letter> word);
inline int descents(const Permutation& p) { return descents(p.word()); }
inline int ascents(const Permutation& p) { return ascents(p.word()); }

/// Entry k-1 is asc - des of the length-k prefix; the first entry is 0.
std::vector<int> prefix_heights(std::span<const Letter> word);
inline std::vector<int> prefix_heights(const Permutation& p) { return prefix_heights(p.word()); }

bool is_ballot(std::span<const Letter> word);
inline bool is_ballot(const Permutation& p) { return is_ballot(p.word()); }

struct LowestPoints {
  int min_index = 0;
  int max_index = 0;
};

/// 1-based first and last prefix lengths attaining the minimum prefix
/// height. Requires n >= 1.
LowestPoints lowest_points(const Permutation& p);

/// Disjoint cycles ordered by their largest letter; fixed points included.
std::vector<Cycle> cycle_decompose(const Permutation& p);

bool is_odd_order(const Permutation& p);

/// Sum over cycles of min(cdes, casc).
int m_statistic(const Permutation& p);

StatProfile profile(const Permutation& p);

/// True iff i n j occurs consecutively in the one-line word. Throws
/// std::domain_error unless 1 <= i, j < n and i != j.
bool has_factor_1nj(const Permutation& p, Letter i, Letter j);

/// True iff i n j is a factor of some cycle word read cyclically.
bool has_cyclic_factor_1nj(const Permutation& p, Letter i, Letter j);

struct CycleSummary {
  int m_stat = 0;
  int cycles = 0;
  bool odd_order = true;
};

/// M statistic, cycle count and odd-order flag straight from a one-line
/// word, without building Cycle objects. Used by the enumeration kernels.
CycleSummary cycle_summary(std::span<const Letter> word);

/// Neighbours (left, right) of the letter n in the one-line word, if n is
/// not at either end.
std::optional<std::pair<Letter, Letter>> max_letter_neighbors(std::span<const Letter> word);

/// (p^{-1}(n), p(n)) when the cycle through n has length >= 3.
std::optional<std::pair<Letter, Letter>> max_letter_cyclic_neighbors(std::span<const Letter> word);

}  // namespace ballot
