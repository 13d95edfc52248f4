#include "ballot/counts.hpp"

#include <stdexcept>
#include <string>

namespace ballot {

Recurrences::Recurrences(int max_n) : max_n_(std::max(max_n, 1)) {
  const auto side = static_cast<std::size_t>(max_n_) + 1;
  first_.assign(side * side * side, BigInt(0));
  first_[index(1, 0, 1)] = 1;
  for (int n = 2; n <= max_n_; ++n)
    for (int d = 0; d <= n - 1; ++d)
      for (int j = 1; j <= n; ++j) {
        // Classify by the second letter i: i < j adds a descent.
        BigInt v = 0;
        for (int i = 1; i <= j - 1; ++i) v += eulerian_first(n - 1, d - 1, i);
        for (int i = j + 1; i <= n; ++i) v += eulerian_first(n - 1, d, i - 1);
        first_[index(n, d, j)] = v;
      }
}

std::size_t Recurrences::index(int n, int d, int j) const {
  const auto side = static_cast<std::size_t>(max_n_) + 1;
  return (static_cast<std::size_t>(n) * side + static_cast<std::size_t>(d)) * side + static_cast<std::size_t>(j);
}

bool Recurrences::in_table(int n, int d, int j) const {
  return n >= 1 && d >= 0 && d <= n - 1 && j >= 1 && j <= n;
}

BigInt Recurrences::eulerian_first(int n, int d, int j) const {
  if (n > max_n_) throw std::out_of_range("A(n,d,j) requested for n = " + std::to_string(n) +
                                          " beyond table size " + std::to_string(max_n_));
  if (!in_table(n, d, j)) return 0;
  return first_[index(n, d, j)];
}

BigInt Recurrences::eulerian(int n, int d) const {
  if (n == 0) return d == 0 ? 1 : 0;
  BigInt s = 0;
  for (int j = 1; j <= n; ++j) s += eulerian_first(n, d, j);
  return s;
}

BigInt Recurrences::u(int n, int d, int j) const {
  return eulerian_first(n, n - d - 1, j) + eulerian_first(n, d - 1, j);
}

BigInt Recurrences::e(int n, int d, int j) const {
  if (n < 3 || j < 2 || j > n - 1) return 0;
  BigInt s = 0;
  // k runs over 0..l inclusive.
  for (int l = 1; l <= n - 2; ++l)
    for (int k = 0; k <= l; ++k) {
      const BigInt right = eulerian(n - l - 2, d - k - 1);
      if (right == 0) continue;
      for (int u = 0; u <= j - 2; ++u) {
        const BigInt ways = binomial(j - 2, u) * binomial(n - j - 1, l - 1 - u);
        if (ways == 0) continue;
        s += ways * right * this->u(l, k, u + 1);
      }
    }
  s += eulerian_first(n - 2, d - 1, j - 1);
  s -= eulerian_first(n - 2, d - 2, j - 1);
  return s;
}

BigInt Recurrences::l(int n, int d) const {
  if (n < 1 || n % 2 == 0) throw std::domain_error("l(n, d) needs odd n >= 1");
  if (d < 0 || d > (n - 1) / 2) return 0;
  if (n == 1) return d == 0 ? 1 : 0;
  return 2 * eulerian(n - 1, d - 1);
}

namespace {

struct CycleType {
  int length;
  int m_stat;
  BigRational weight;  // l(length, m_stat) / length!
};

// Sum over multisets of cycle types with total length `size` and total M
// `m_total` of prod weight^lambda / lambda!. Types are visited in a fixed
// order with a multiplicity each, so every multiset is seen once.
void sum_type_multisets(const std::vector<CycleType>& types, std::size_t idx, int size, int m_total,
                        const BigRational& acc, BigRational& out) {
  if (size == 0 && m_total == 0) {
    out += acc;
    return;
  }
  if (idx == types.size()) return;
  const CycleType& ty = types[idx];
  BigRational w = acc;
  for (int lambda = 0; lambda * ty.length <= size && lambda * ty.m_stat <= m_total; ++lambda) {
    if (lambda > 0) w = w * ty.weight / lambda;
    sum_type_multisets(types, idx + 1, size - lambda * ty.length, m_total - lambda * ty.m_stat, w, out);
  }
}

}  // namespace

BigInt Recurrences::p_partition(int n, int d, int j) const {
  if (n < 3 || j < 2 || j > n - 1 || d < 0) return 0;

  std::vector<CycleType> types;
  for (int len = 1; len <= n - 3; len += 2)
    for (int m = 0; m <= (len - 1) / 2; ++m) {
      const BigInt c = l(len, m);
      if (c != 0) types.push_back({len, m, ratio(c, factorial(len))});
    }

  BigRational total = 0;
  // m1 letters of the distinguished cycle lie in {2..j-1}, m2 in {j+1..n-1};
  // the rest of [n] splits into the other odd cycles.
  for (int m1 = 0; m1 <= j - 2; ++m1)
    for (int m2 = 0; m2 <= n - j - 1; ++m2) {
      if ((m1 + m2) % 2 != 0) continue;
      const int rest = n - 3 - m1 - m2;
      if (rest < 0) continue;
      const BigInt choose = binomial(j - 2, m1) * binomial(n - j - 1, m2);
      for (int d0 = 0; 2 * d0 <= m1 + m2 + 2 && d0 <= d; ++d0) {
        const BigInt cyc = u(m1 + m2 + 1, d0 - 1, m1 + 1);
        if (cyc == 0) continue;
        BigRational others = 0;
        sum_type_multisets(types, 0, rest, d - d0, BigRational(1), others);
        if (others == 0) continue;
        total += BigRational(choose * factorial(rest) * cyc) * others;
      }
    }
  total.canonicalize();
  if (total.get_den() != 1) throw std::logic_error("partition sum is not an integer");
  return total.get_num();
}

void Recurrences::perturb_eulerian_first(int n, int d, int j, const BigInt& delta) {
  if (n > max_n_ || !in_table(n, d, j)) throw std::out_of_range("perturbation outside the A(n,d,j) table");
  first_[index(n, d, j)] += delta;
}

namespace {
constexpr int kSharedMax = 32;
}

const Recurrences& shared_recurrences(int n) {
  if (n > kSharedMax)
    throw std::out_of_range("shared recurrences cover n <= " + std::to_string(kSharedMax));
  static const Recurrences rec(kSharedMax);
  return rec;
}

BigInt eulerian_first_rec(int n, int d, int j) { return shared_recurrences(n).eulerian_first(n, d, j); }
BigInt eulerian(int n, int d) { return shared_recurrences(n).eulerian(n, d); }
BigInt u_count(int n, int d, int j) { return shared_recurrences(n).u(n, d, j); }
BigInt e_count_rec(int n, int d, int j) { return shared_recurrences(n).e(n, d, j); }
BigInt l_count(int n, int d) { return shared_recurrences(n).l(n, d); }
BigInt p_count_partition(int n, int d, int j) { return shared_recurrences(n).p_partition(n, d, j); }

MultiSeries series_x(int order) { return MultiSeries::term(order, Monomial{0, 1, 0, 0}); }

MultiSeries series_one_plus_y(int order) {
  MultiSeries s = MultiSeries::constant(order, 1);
  s.add_term(Monomial{0, 0, 1, 0}, 1);
  return s;
}

MultiSeries ballot_log_series(int order, const Recurrences& rec) {
  MultiSeries s(order);
  for (int n = 1; n <= order; n += 2)
    for (int d = 0; d <= (n - 1) / 2; ++d) s.add_term(Monomial{d, n, 0, 0}, ratio(rec.l(n, d), factorial(n)));
  return s;
}

MultiSeries ballot_log_series_eulerian(int order, const Recurrences& rec) {
  MultiSeries s = series_x(order);
  for (int k = 1; 2 * k + 1 <= order; ++k)
    for (int d = 0; d <= k - 1; ++d)
      s.add_term(Monomial{d + 1, 2 * k + 1, 0, 0}, ratio(2 * rec.eulerian(2 * k, d), factorial(2 * k + 1)));
  return s;
}

std::vector<CountTable> ballot_desc_gf(int N, const Recurrences& rec) {
  const MultiSeries b = exp_series(ballot_log_series(N, rec));
  std::vector<CountTable> out;
  for (int n = 0; n <= N; ++n) {
    CountTable t("b", n, TableShape::D);
    for (int d = 0; d <= n; ++d) t.set(CountKey{d, 0, 0}, extract_count(b, n, d, 0, WeightScheme::egf()));
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<CountTable> ballot_desc_gf(int N) { return ballot_desc_gf(N, shared_recurrences(N)); }

SeriesCatalog::SeriesCatalog(int order, const Recurrences* rec)
    : order_(order), rec_(rec ? rec : &shared_recurrences(order)) {
  if (order < 0) throw std::invalid_argument("catalog order must be >= 0");
}

template <class Build>
const MultiSeries& SeriesCatalog::lazy(Slot& slot, Build build) const {
  std::call_once(slot.once, [&] { slot.value.emplace(build().truncated(order_)); });
  return *slot.value;
}

const MultiSeries& SeriesCatalog::F() const {
  return lazy(slots_[0], [&] { return geom(q_of(series_x(order_))); });
}

const MultiSeries& SeriesCatalog::A() const {
  return lazy(slots_[1], [&] { return F() - MultiSeries::constant(order_, 1); });
}

const MultiSeries& SeriesCatalog::Axy() const {
  return lazy(slots_[2], [&] {
    const MultiSeries xy = MultiSeries::term(order_, Monomial{0, 1, 1, 0});
    const MultiSeries w = subst_x_times(series_x(order_), series_one_plus_y(order_));
    return shift(exp_tm1(xy), Monomial{0, 1, 1, 0}) * geom(q_of(w));
  });
}

const MultiSeries& SeriesCatalog::Uhat() const {
  return lazy(slots_[3], [&] { return shift(Axy(), Monomial{1, 0, 0, 0}) + t_reverse(Axy(), 1); });
}

const MultiSeries& SeriesCatalog::U() const {
  return lazy(slots_[4], [&] { return project_half(odd_x_part(Uhat())); });
}

const MultiSeries& SeriesCatalog::E() const {
  return lazy(slots_[5], [&] {
    const MultiSeries a_shift = subst_x_times(A(), series_one_plus_y(order_)) + MultiSeries::constant(order_, 1);
    return shift(a_shift * Uhat(), Monomial{1, 2, 1, 0}) + shift(Axy(), Monomial{1, 2, 1, 0}) -
           shift(Axy(), Monomial{2, 2, 1, 0});
  });
}

const MultiSeries& SeriesCatalog::B() const {
  return lazy(slots_[6], [&] { return exp_series(ballot_log_series(order_, *rec_)); });
}

const MultiSeries& SeriesCatalog::P() const {
  return lazy(slots_[7], [&] {
    return shift(subst_x_times(B(), series_one_plus_y(order_)) * U(), Monomial{1, 2, 1, 0});
  });
}

const MultiSeries& SeriesCatalog::Bxy() const {
  return lazy(slots_[8], [&] { return scale(P(), 2); });
}

const MultiSeries& SeriesCatalog::P4() const {
  return lazy(slots_[9], [&] {
    return shift(divide_one_minus_yz(swap_yz(P()) - mirror_y_with_z(P())), Monomial{0, 0, 1, 0}, 2);
  });
}

const MultiSeries& SeriesCatalog::get(std::string_view name) const {
  if (name == "F") return F();
  if (name == "A") return A();
  if (name == "Axy") return Axy();
  if (name == "Uhat") return Uhat();
  if (name == "U") return U();
  if (name == "E") return E();
  if (name == "B") return B();
  if (name == "P") return P();
  if (name == "Bxy") return Bxy();
  if (name == "P4") return P4();
  throw std::invalid_argument("unknown series '" + std::string(name) + "'");
}

}  // namespace ballot
