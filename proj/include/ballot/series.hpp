#pragma once

// Truncated formal power series in t, x, y, z over exact rationals.
//
// Truncation is by x-degree only: a series of order N stores (and is exact
// on) every monomial with x-exponent <= N. Terms are kept per x-slice and
// multiplication runs in parallel over output slices. Negative exponents
// never occur; substitutions such as t -> 1/t, x -> tx are realized as
// coefficient transforms that reject inputs which would leave the ring.

#include <compare>
#include <cstddef>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ballot/arith.hpp"
#include "ballot/exec.hpp"

namespace ballot {

struct Monomial {
  int t = 0;
  int x = 0;
  int y = 0;
  int z = 0;
  auto operator<=>(const Monomial&) const = default;
};

std::string to_string(const Monomial& m);

class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// exp / geometric series of an argument with a constant-in-x part.
class NonConvergentError : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

/// A coefficient transform would produce a negative exponent.
class NegativeExponentError : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

/// A count-valued extraction came out fractional or negative.
class IntegralityError : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

class MultiSeries {
 public:
  struct SliceKey {
    int t = 0;
    int y = 0;
    int z = 0;
    auto operator<=>(const SliceKey&) const = default;
  };
  using Slice = std::map<SliceKey, BigRational>;

  /// Zero series exact through x-degree `order` (order -1 means nothing is
  /// known, used for the derivative of an order-0 series).
  explicit MultiSeries(int order);

  static MultiSeries constant(int order, const BigRational& c);
  static MultiSeries term(int order, Monomial m, const BigRational& c = 1);

  int order() const { return static_cast<int>(slices_.size()) - 1; }

  BigRational coeff(const Monomial& m) const;
  /// Adds c (reduced first) to the coefficient of m; monomials beyond the
  /// order are dropped.
  void add_term(const Monomial& m, const BigRational& c);

  const Slice& slice(int x) const { return slices_[static_cast<std::size_t>(x)]; }
  void set_slice(int x, Slice s);

  std::size_t size() const;
  bool is_zero() const { return size() == 0; }

  /// All terms sorted lexicographically by (t, x, y, z).
  std::vector<std::pair<Monomial, BigRational>> terms() const;

  /// Visits terms slice by slice.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t x = 0; x < slices_.size(); ++x)
      for (const auto& [k, c] : slices_[x]) f(Monomial{k.t, static_cast<int>(x), k.y, k.z}, c);
  }

  MultiSeries truncated(int order) const;

  friend bool operator==(const MultiSeries&, const MultiSeries&) = default;

 private:
  std::vector<Slice> slices_;
};

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b);
MultiSeries operator-(const MultiSeries& a, const MultiSeries& b);
MultiSeries operator-(const MultiSeries& a);
MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
MultiSeries scale(const MultiSeries& a, const BigRational& c);

/// Truncated product, one OpenMP task per output x-slice.
MultiSeries mul(const MultiSeries& a, const MultiSeries& b, Exec exec = Exec::Parallel);

/// Single-threaded term-by-term reference product.
MultiSeries mul_reference(const MultiSeries& a, const MultiSeries& b);

/// Multiplies by a monomial. The result is exact one x-degree further per
/// power of x, so its order grows by m.x.
MultiSeries shift(const MultiSeries& s, Monomial m, const BigRational& c = 1);

/// sum_k (t-1)^k w^k / k!. Throws NonConvergentError if w has x^0 terms.
MultiSeries exp_tm1(const MultiSeries& w);

/// sum_{k>=1} (t-1)^{k-1} w^k / k!, so that t - e^{(t-1)w} = (t-1)(1 - q(w)).
MultiSeries q_of(const MultiSeries& w);

/// 1 / (1 - g). Throws NonConvergentError if g has x^0 terms.
MultiSeries geom(const MultiSeries& g);

/// sum_k s^k / k!. Throws NonConvergentError if s has x^0 terms.
MultiSeries exp_series(const MultiSeries& s);

/// x -> x*u for a polynomial u free of t and x (each x^n picks up u^n).
MultiSeries subst_x_times(const MultiSeries& s, const MultiSeries& u);

/// t^d x^n -> t^(n-d-lower) x^n, i.e. t^-lower * s(1/t, tx, y, z).
MultiSeries t_reverse(const MultiSeries& s, int lower = 0);

/// x -> -x.
MultiSeries negate_x(const MultiSeries& s);

/// (s(x) - s(-x)) / 2.
MultiSeries odd_x_part(const MultiSeries& s);

/// Keeps the terms with 2 e_t <= e_x - 1.
MultiSeries project_half(const MultiSeries& s);

/// t^d x^n y^j z^c -> t^d x^n y^(n-j) z^(c+n), the transform s(t, xyz, 1/y).
MultiSeries mirror_y_with_z(const MultiSeries& s);

/// Exchanges the y and z exponents.
MultiSeries swap_yz(const MultiSeries& s);

/// Exact quotient by (1 - yz); throws SeriesError if the division leaves a
/// remainder in any slice.
MultiSeries divide_one_minus_yz(const MultiSeries& s);

/// Formal partial derivatives. d/dx lowers the order by one.
MultiSeries d_dx(const MultiSeries& s);
MultiSeries d_dy(const MultiSeries& s);

/// Coefficient of y^k, as a series in the remaining variables.
MultiSeries y_coefficient(const MultiSeries& s, int k);

enum class WeightKind { Egf, First, Factor, Quad };

/// Factorial normalization a generating function applies to its counts.
struct WeightScheme {
  WeightKind kind = WeightKind::Egf;
  int i = 0;  // first index, Quad only

  static WeightScheme egf() { return {WeightKind::Egf, 0}; }
  static WeightScheme first() { return {WeightKind::First, 0}; }
  static WeightScheme factor() { return {WeightKind::Factor, 0}; }
  static WeightScheme quad(int i) { return {WeightKind::Quad, i}; }

  /// The monomial a count (n, d, j) sits on under this scheme.
  Monomial monomial(int n, int d, int j) const;
  /// n!, (j-1)!(n-j)!, (j-2)!(n-j-1)! or (j-i-1)!(n-j+i-2)!; 0 when any
  /// factorial argument is negative.
  BigInt weight(int n, int j) const;
};

/// Coefficient of the scheme's monomial times its weight.
BigRational extract(const MultiSeries& s, int n, int d, int j, WeightScheme scheme);

/// As extract, but the result must be a nonnegative integer.
BigInt extract_count(const MultiSeries& s, int n, int d, int j, WeightScheme scheme);

/// Lines "t^a x^b y^c z^d : num/den" in ascending lexicographic order.
void dump(std::ostream& os, const MultiSeries& s);

}  // namespace ballot
