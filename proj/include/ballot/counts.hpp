#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <string_view>
#include <vector>

#include "ballot/arith.hpp"
#include "ballot/count_table.hpp"
#include "ballot/series.hpp"

namespace ballot {

/// Recursion- and sum-based counts. The first-letter Eulerian table
/// A(n, d, j) is built bottom-up by the second-letter recursion for every
/// n <= max_n; every other count here is derived from it on demand.
///
/// Out-of-range indices follow the zero conventions: A(0, 0) = 1 and
/// A(n, d[, j]) = 0 whenever n < 0, d < 0, d >= n >= 1 or j outside [1, n].
class Recurrences {
 public:
  explicit Recurrences(int max_n);

  int max_n() const { return max_n_; }

  /// A(n, d, j). Throws std::out_of_range for n > max_n.
  BigInt eulerian_first(int n, int d, int j) const;

  /// A(n, d) = sum_j A(n, d, j), with A(0, 0) = 1.
  BigInt eulerian(int n, int d) const;

  /// U(n, d, j) = A(n, n-d-1, j) + A(n, d-1, j).
  BigInt u(int n, int d, int j) const;

  /// E(n, d, j) by the triple-sum recursion over the block left of the
  /// factor; zero outside n >= 3, 2 <= j <= n-1.
  BigInt e(int n, int d, int j) const;

  /// l(n, d), n-cycles on [n] with M = d: 2 A(n-1, d-1), and l(1, 0) = 1.
  /// Zero for d outside [0, (n-1)/2]; throws std::domain_error for even n.
  BigInt l(int n, int d) const;

  /// p_{n,d}(1, j) by summing over the cycle type of the cycles that avoid
  /// the letter n. Zero outside n >= 3, 2 <= j <= n-1.
  BigInt p_partition(int n, int d, int j) const;

  /// Adds delta to one memoized A(n, d, j) entry. Mutation-testing hook.
  void perturb_eulerian_first(int n, int d, int j, const BigInt& delta);

 private:
  std::size_t index(int n, int d, int j) const;
  bool in_table(int n, int d, int j) const;

  int max_n_;
  std::vector<BigInt> first_;
};

/// Process-wide recurrences sized for `n`, shared read-only.
const Recurrences& shared_recurrences(int n);

BigInt eulerian_first_rec(int n, int d, int j);
BigInt eulerian(int n, int d);
BigInt u_count(int n, int d, int j);
BigInt e_count_rec(int n, int d, int j);
BigInt l_count(int n, int d);
BigInt p_count_partition(int n, int d, int j);

/// sum over odd n, d of l(n, d) t^d x^n / n!, the logarithm of B(t, x).
MultiSeries ballot_log_series(int order, const Recurrences& rec);

/// x + 2 sum_k sum_{d <= k-1} A(2k, d) t^{d+1} x^{2k+1} / (2k+1)!.
MultiSeries ballot_log_series_eulerian(int order, const Recurrences& rec);

/// Table n -> (d -> b(n, d)) for n <= N, read off exp of the log series.
std::vector<CountTable> ballot_desc_gf(int N);
std::vector<CountTable> ballot_desc_gf(int N, const Recurrences& rec);

/// The generating functions, each built once on first use:
///
///   F      (t-1)/(t - e^{(t-1)x}) = geom(q(x))
///   A      A(t, x) = F - 1
///   Axy    A(t, x, y) = xy e^{(t-1)xy} F(t, x + xy)
///   Uhat   t A(t,x,y) + (1/t) A(1/t, tx, y)
///   U      project_half of the odd-x part of Uhat
///   E      t x^2 y (A(t, x+xy) + 1) Uhat + t(1-t) x^2 y A(t,x,y)
///   B      exp(sum l(n,d) t^d x^n / n!)
///   P      t x^2 y B(t, x+xy) U
///   Bxy    2 P
///   P4     2y/(1-yz) (P(t,x,z) - P(t, xyz, 1/y))
class SeriesCatalog {
 public:
  static constexpr std::array<std::string_view, 10> kNames = {"F", "A", "Axy", "Uhat", "U",
                                                              "E", "B", "P",   "Bxy",  "P4"};

  /// `rec` supplies l(n, d) for B; the shared recurrences when null. It must
  /// outlive the catalog.
  explicit SeriesCatalog(int order, const Recurrences* rec = nullptr);

  SeriesCatalog(const SeriesCatalog&) = delete;
  SeriesCatalog& operator=(const SeriesCatalog&) = delete;

  int order() const { return order_; }

  const MultiSeries& F() const;
  const MultiSeries& A() const;
  const MultiSeries& Axy() const;
  const MultiSeries& Uhat() const;
  const MultiSeries& U() const;
  const MultiSeries& E() const;
  const MultiSeries& B() const;
  const MultiSeries& P() const;
  const MultiSeries& Bxy() const;
  const MultiSeries& P4() const;

  /// Lookup by kNames entry; throws std::invalid_argument otherwise.
  const MultiSeries& get(std::string_view name) const;

 private:
  struct Slot {
    std::once_flag once;
    std::optional<MultiSeries> value;
  };

  template <class Build>
  const MultiSeries& lazy(Slot& slot, Build build) const;

  int order_;
  const Recurrences* rec_;
  mutable std::array<Slot, kNames.size()> slots_;
};

/// Series variables and small constants at a given order.
MultiSeries series_x(int order);
MultiSeries series_one_plus_y(int order);

}  // namespace ballot
