#include "ballot/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <omp.h>

#include "ballot/permstat.hpp"

namespace ballot {

namespace {

// Dense per-thread tally indexed by (d, i, j), each in [0, n].
class Tally {
 public:
  explicit Tally(int n) : side_(static_cast<std::size_t>(n) + 1), cells_(side_ * side_ * side_, 0) {}

  void bump(int d, int i = 0, int j = 0) { ++cells_[index(d, i, j)]; }

  void merge(const Tally& o) {
    for (std::size_t k = 0; k < cells_.size(); ++k) cells_[k] += o.cells_[k];
  }

  CountTable to_table(std::string stat, int n, TableShape shape) const {
    CountTable t(std::move(stat), n, shape);
    for (std::size_t d = 0; d < side_; ++d)
      for (std::size_t i = 0; i < side_; ++i)
        for (std::size_t j = 0; j < side_; ++j) {
          const auto v = cells_[(d * side_ + i) * side_ + j];
          if (v != 0)
            t.set(CountKey{static_cast<int>(d), static_cast<int>(i), static_cast<int>(j)},
                  BigInt(static_cast<unsigned long>(v)));
        }
    return t;
  }

 private:
  std::size_t index(int d, int i, int j) const {
    return (static_cast<std::size_t>(d) * side_ + static_cast<std::size_t>(i)) * side_ +
           static_cast<std::size_t>(j);
  }

  std::size_t side_;
  std::vector<std::uint64_t> cells_;
};

void check_cap(int n, const OracleOptions& opt) {
  if (n > kOracleCap && !opt.force)
    throw ResourceCapError("oracle n = " + std::to_string(n) + " exceeds cap " + std::to_string(kOracleCap) +
                           " (use force)");
}

template <class Visit>
Tally walk_serial(int n, Visit visit) {
  Tally tally(n);
  std::vector<Letter> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(std::span<const Letter>(w), tally);
  } while (std::next_permutation(w.begin(), w.end()));
  return tally;
}

// Block b = (first, second) letter pair; each block is the lexicographic
// run of permutations with that prefix.
template <class Visit>
Tally walk_parallel(int n, Visit visit) {
  if (n < 3) return walk_serial(n, visit);
  const int blocks = n * (n - 1);
  const int threads = omp_get_max_threads();
  std::vector<Tally> partial(static_cast<std::size_t>(threads), Tally(n));

#pragma omp parallel for schedule(dynamic)
  for (int b = 0; b < blocks; ++b) {
    const int first = b / (n - 1) + 1;
    int second = b % (n - 1) + 1;
    if (second >= first) ++second;
    std::vector<Letter> w;
    w.reserve(static_cast<std::size_t>(n));
    w.push_back(first);
    w.push_back(second);
    for (int v = 1; v <= n; ++v)
      if (v != first && v != second) w.push_back(v);
    Tally& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
    do {
      visit(std::span<const Letter>(w), mine);
    } while (std::next_permutation(w.begin() + 2, w.end()));
  }

  Tally out(n);
  for (const auto& t : partial) out.merge(t);
  return out;
}

template <class Visit>
Tally walk(int n, const OracleOptions& opt, Visit visit) {
  check_cap(n, opt);
  return opt.exec == Exec::Parallel ? walk_parallel(n, visit) : walk_serial(n, visit);
}

}  // namespace

CountTable oracle_eulerian_first(int n, OracleOptions opt) {
  if (n < 1) throw std::domain_error("oracle_eulerian_first needs n >= 1");
  auto t = walk(n, opt, [](std::span<const Letter> w, Tally& acc) { acc.bump(descents(w), 0, w[0]); });
  return t.to_table("A_first", n, TableShape::DJ);
}

CountTable oracle_ballot_desc(int n, OracleOptions opt) {
  if (n < 0) throw std::domain_error("oracle_ballot_desc needs n >= 0");
  if (n == 0) {
    CountTable t("b", 0, TableShape::D);
    t.set(CountKey{0, 0, 0}, 1);
    return t;
  }
  auto t = walk(n, opt, [](std::span<const Letter> w, Tally& acc) {
    if (is_ballot(w)) acc.bump(descents(w));
  });
  return t.to_table("b", n, TableShape::D);
}

CountTable oracle_odd_order_M(int n, OracleOptions opt) {
  if (n < 1) throw std::domain_error("oracle_odd_order_M needs n >= 1");
  auto t = walk(n, opt, [](std::span<const Letter> w, Tally& acc) {
    const auto cs = cycle_summary(w);
    if (cs.odd_order) acc.bump(cs.m_stat);
  });
  return t.to_table("M", n, TableShape::D);
}

CountTable oracle_E(int n, OracleOptions opt) {
  if (n < 3) throw std::domain_error("oracle_E needs n >= 3");
  auto t = walk(n, opt, [](std::span<const Letter> w, Tally& acc) {
    const auto nb = max_letter_neighbors(w);
    if (!nb) return;
    if (nb->first == 1)
      acc.bump(descents(w), 0, nb->second);
    else if (nb->second == 1)
      acc.bump(descents(w), 0, nb->first);
  });
  return t.to_table("E", n, TableShape::DJ);
}

CountTable oracle_b_factor(int n, OracleOptions opt) {
  if (n < 3) throw std::domain_error("oracle_b_factor needs n >= 3");
  auto t = walk(n, opt, [](std::span<const Letter> w, Tally& acc) {
    const auto nb = max_letter_neighbors(w);
    if (nb && is_ballot(w)) acc.bump(descents(w), nb->first, nb->second);
  });
  return t.to_table("b_factor", n, TableShape::DIJ);
}

CountTable oracle_p_cyclic(int n, OracleOptions opt) {
  if (n < 3) throw std::domain_error("oracle_p_cyclic needs n >= 3");
  auto t = walk(n, opt, [](std::span<const Letter> w, Tally& acc) {
    const auto nb = max_letter_cyclic_neighbors(w);
    if (!nb) return;
    const auto cs = cycle_summary(w);
    if (cs.odd_order) acc.bump(cs.m_stat, nb->first, nb->second);
  });
  return t.to_table("p", n, TableShape::DIJ);
}

CountTable oracle_l(int n, OracleOptions opt) {
  if (n < 1 || n % 2 == 0) throw std::domain_error("oracle_l needs odd n >= 1");
  auto t = walk(n, opt, [](std::span<const Letter> w, Tally& acc) {
    const auto cs = cycle_summary(w);
    if (cs.cycles == 1) acc.bump(cs.m_stat);
  });
  return t.to_table("l", n, TableShape::D);
}

}  // namespace ballot
