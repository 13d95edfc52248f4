#include "ballot/series.hpp"

#include <algorithm>
#include <sstream>

namespace ballot {

namespace {

using Slice = MultiSeries::Slice;
using SliceKey = MultiSeries::SliceKey;

void accumulate(Slice& s, const SliceKey& k, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = s.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) s.erase(it);
}

// Rebuilds a series term by term through `f(m, c, out)`; the result has
// `order` and `f` decides where (if anywhere) each term lands.
template <class F>
MultiSeries transform(const MultiSeries& s, int order, F f) {
  MultiSeries out(order);
  s.for_each([&](const Monomial& m, const BigRational& c) { f(m, c, out); });
  return out;
}

void require_no_x_constant(const MultiSeries& s, const char* what) {
  if (s.order() >= 0 && !s.slice(0).empty())
    throw NonConvergentError(std::string(what) + ": argument has a constant-in-x part");
}

MultiSeries t_minus_one(int order) {
  MultiSeries r = MultiSeries::term(order, Monomial{1, 0, 0, 0});
  r.add_term(Monomial{}, -1);
  return r;
}

}  // namespace

std::string to_string(const Monomial& m) {
  std::ostringstream os;
  os << "t^" << m.t << " x^" << m.x << " y^" << m.y << " z^" << m.z;
  return os.str();
}

MultiSeries::MultiSeries(int order) {
  if (order < -1) throw std::invalid_argument("series order must be >= -1");
  slices_.resize(static_cast<std::size_t>(order + 1));
}

MultiSeries MultiSeries::constant(int order, const BigRational& c) {
  return term(order, Monomial{}, c);
}

MultiSeries MultiSeries::term(int order, Monomial m, const BigRational& c) {
  MultiSeries s(order);
  s.add_term(m, c);
  return s;
}

BigRational MultiSeries::coeff(const Monomial& m) const {
  if (m.x < 0 || m.x > order()) return 0;
  const auto& sl = slice(m.x);
  const auto it = sl.find(SliceKey{m.t, m.y, m.z});
  return it == sl.end() ? BigRational(0) : it->second;
}

void MultiSeries::add_term(const Monomial& m, const BigRational& c) {
  if (m.t < 0 || m.x < 0 || m.y < 0 || m.z < 0) throw NegativeExponentError("negative exponent " + ballot::to_string(m));
  if (m.x > order()) return;
  BigRational v = c;
  v.canonicalize();
  accumulate(slices_[static_cast<std::size_t>(m.x)], SliceKey{m.t, m.y, m.z}, v);
}

void MultiSeries::set_slice(int x, Slice s) {
  std::erase_if(s, [](const auto& kv) { return kv.second == 0; });
  slices_[static_cast<std::size_t>(x)] = std::move(s);
}

std::size_t MultiSeries::size() const {
  std::size_t n = 0;
  for (const auto& s : slices_) n += s.size();
  return n;
}

std::vector<std::pair<Monomial, BigRational>> MultiSeries::terms() const {
  std::vector<std::pair<Monomial, BigRational>> out;
  out.reserve(size());
  for_each([&](const Monomial& m, const BigRational& c) { out.emplace_back(m, c); });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

MultiSeries MultiSeries::truncated(int order) const {
  MultiSeries r(order);
  for (int x = 0; x <= std::min(order, this->order()); ++x) r.slices_[static_cast<std::size_t>(x)] = slice(x);
  return r;
}

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
  MultiSeries r = a.truncated(std::min(a.order(), b.order()));
  b.for_each([&](const Monomial& m, const BigRational& c) { r.add_term(m, c); });
  return r;
}

MultiSeries operator-(const MultiSeries& a) { return scale(a, -1); }

MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) {
  MultiSeries r = a.truncated(std::min(a.order(), b.order()));
  b.for_each([&](const Monomial& m, const BigRational& c) { r.add_term(m, -c); });
  return r;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) { return mul(a, b); }

MultiSeries scale(const MultiSeries& a, const BigRational& c) {
  if (c == 0) return MultiSeries(a.order());
  return transform(a, a.order(), [&](const Monomial& m, const BigRational& v, MultiSeries& out) {
    out.add_term(m, v * c);
  });
}

MultiSeries mul_reference(const MultiSeries& a, const MultiSeries& b) {
  MultiSeries r(std::min(a.order(), b.order()));
  a.for_each([&](const Monomial& ma, const BigRational& ca) {
    b.for_each([&](const Monomial& mb, const BigRational& cb) {
      r.add_term(Monomial{ma.t + mb.t, ma.x + mb.x, ma.y + mb.y, ma.z + mb.z}, ca * cb);
    });
  });
  return r;
}

MultiSeries mul(const MultiSeries& a, const MultiSeries& b, Exec exec) {
  const int order = std::min(a.order(), b.order());
  std::vector<Slice> out(static_cast<std::size_t>(order + 1));

  auto build_slice = [&](int n) {
    Slice acc;
    for (int i = 0; i <= n; ++i) {
      const auto& sa = a.slice(i);
      const auto& sb = b.slice(n - i);
      if (sa.empty() || sb.empty()) continue;
      for (const auto& [ka, ca] : sa)
        for (const auto& [kb, cb] : sb) accumulate(acc, SliceKey{ka.t + kb.t, ka.y + kb.y, ka.z + kb.z}, ca * cb);
    }
    out[static_cast<std::size_t>(n)] = std::move(acc);
  };

  if (exec == Exec::Parallel) {
    // High slices dominate the cost, so hand them out first.
#pragma omp parallel for schedule(dynamic, 1)
    for (int k = 0; k <= order; ++k) build_slice(order - k);
  } else {
    for (int n = 0; n <= order; ++n) build_slice(n);
  }

  MultiSeries r(order);
  for (int n = 0; n <= order; ++n) r.set_slice(n, std::move(out[static_cast<std::size_t>(n)]));
  return r;
}

MultiSeries shift(const MultiSeries& s, Monomial m, const BigRational& c) {
  return transform(s, s.order() + m.x, [&](const Monomial& k, const BigRational& v, MultiSeries& out) {
    out.add_term(Monomial{k.t + m.t, k.x + m.x, k.y + m.y, k.z + m.z}, v * c);
  });
}

MultiSeries exp_series(const MultiSeries& s) {
  require_no_x_constant(s, "exp_series");
  MultiSeries sum = MultiSeries::constant(s.order(), 1);
  MultiSeries power = sum;
  // s^k has x-order >= k, so k <= order suffices.
  for (int k = 1; k <= s.order(); ++k) {
    power = scale(mul(power, s), BigRational(1, k));
    if (power.is_zero()) break;
    sum = sum + power;
  }
  return sum;
}

MultiSeries exp_tm1(const MultiSeries& w) {
  require_no_x_constant(w, "exp_tm1");
  return exp_series(mul(t_minus_one(w.order()), w));
}

MultiSeries q_of(const MultiSeries& w) {
  require_no_x_constant(w, "q_of");
  const MultiSeries step = mul(t_minus_one(w.order()), w);
  MultiSeries power = w;  // (t-1)^{k-1} w^k / k! at k = 1
  MultiSeries sum = w;
  for (int k = 2; k <= w.order(); ++k) {
    power = scale(mul(power, step), BigRational(1, k));
    if (power.is_zero()) break;
    sum = sum + power;
  }
  return sum;
}

MultiSeries geom(const MultiSeries& g) {
  require_no_x_constant(g, "geom");
  MultiSeries sum = MultiSeries::constant(g.order(), 1);
  MultiSeries power = sum;
  for (int k = 1; k <= g.order(); ++k) {
    power = mul(power, g);
    if (power.is_zero()) break;
    sum = sum + power;
  }
  return sum;
}

MultiSeries subst_x_times(const MultiSeries& s, const MultiSeries& u) {
  u.for_each([](const Monomial& m, const BigRational&) {
    if (m.t != 0 || m.x != 0) throw SeriesError("subst_x_times: multiplier must be free of t and x");
  });
  const int order = s.order();
  // powers[n] = u^n, computed with a y/z-only product at a fixed slice.
  std::vector<MultiSeries> powers;
  powers.push_back(MultiSeries::constant(0, 1));
  const MultiSeries u0 = u.truncated(0);
  for (int n = 1; n <= order; ++n) powers.push_back(mul(powers.back(), u0, Exec::Serial));

  MultiSeries out(order);
  s.for_each([&](const Monomial& m, const BigRational& c) {
    powers[static_cast<std::size_t>(m.x)].for_each([&](const Monomial& p, const BigRational& pc) {
      out.add_term(Monomial{m.t, m.x, m.y + p.y, m.z + p.z}, c * pc);
    });
  });
  return out;
}

MultiSeries t_reverse(const MultiSeries& s, int lower) {
  return transform(s, s.order(), [&](const Monomial& m, const BigRational& c, MultiSeries& out) {
    const int e = m.x - m.t - lower;
    if (e < 0) throw NegativeExponentError("t_reverse: t-degree exceeds x-degree at " + to_string(m));
    out.add_term(Monomial{e, m.x, m.y, m.z}, c);
  });
}

MultiSeries negate_x(const MultiSeries& s) {
  return transform(s, s.order(), [](const Monomial& m, const BigRational& c, MultiSeries& out) {
    out.add_term(m, m.x % 2 == 0 ? c : BigRational(-c));
  });
}

MultiSeries odd_x_part(const MultiSeries& s) {
  return transform(s, s.order(), [](const Monomial& m, const BigRational& c, MultiSeries& out) {
    if (m.x % 2 == 1) out.add_term(m, c);
  });
}

MultiSeries project_half(const MultiSeries& s) {
  return transform(s, s.order(), [](const Monomial& m, const BigRational& c, MultiSeries& out) {
    if (2 * m.t <= m.x - 1) out.add_term(m, c);
  });
}

MultiSeries mirror_y_with_z(const MultiSeries& s) {
  return transform(s, s.order(), [](const Monomial& m, const BigRational& c, MultiSeries& out) {
    if (m.y > m.x) throw NegativeExponentError("mirror_y_with_z: y-degree exceeds x-degree at " + to_string(m));
    out.add_term(Monomial{m.t, m.x, m.x - m.y, m.z + m.x}, c);
  });
}

MultiSeries swap_yz(const MultiSeries& s) {
  return transform(s, s.order(), [](const Monomial& m, const BigRational& c, MultiSeries& out) {
    out.add_term(Monomial{m.t, m.x, m.z, m.y}, c);
  });
}

MultiSeries divide_one_minus_yz(const MultiSeries& s) {
  // Multiplication by yz preserves (t, y - z), so each such diagonal is a
  // univariate polynomial D(w) in w = yz and the quotient has prefix sums of
  // D's coefficients; the total sum is the remainder D(1).
  MultiSeries out(s.order());
  for (int x = 0; x <= s.order(); ++x) {
    std::map<std::pair<int, int>, std::map<int, BigRational>> diagonals;
    for (const auto& [k, c] : s.slice(x)) diagonals[{k.t, k.y - k.z}][std::min(k.y, k.z)] = c;
    for (const auto& [key, poly] : diagonals) {
      const auto [t, delta] = key;
      const int y0 = std::max(delta, 0);
      const int z0 = std::max(-delta, 0);
      const int top = poly.rbegin()->first;
      BigRational running = 0;
      for (int w = 0; w <= top; ++w) {
        const auto it = poly.find(w);
        if (it != poly.end()) running += it->second;
        if (w < top) out.add_term(Monomial{t, x, y0 + w, z0 + w}, running);
      }
      if (running != 0)
        throw SeriesError("divide_one_minus_yz: nonzero remainder at x^" + std::to_string(x));
    }
  }
  return out;
}

MultiSeries d_dx(const MultiSeries& s) {
  return transform(s, s.order() - 1, [](const Monomial& m, const BigRational& c, MultiSeries& out) {
    if (m.x > 0) out.add_term(Monomial{m.t, m.x - 1, m.y, m.z}, c * m.x);
  });
}

MultiSeries d_dy(const MultiSeries& s) {
  return transform(s, s.order(), [](const Monomial& m, const BigRational& c, MultiSeries& out) {
    if (m.y > 0) out.add_term(Monomial{m.t, m.x, m.y - 1, m.z}, c * m.y);
  });
}

MultiSeries y_coefficient(const MultiSeries& s, int k) {
  return transform(s, s.order(), [k](const Monomial& m, const BigRational& c, MultiSeries& out) {
    if (m.y == k) out.add_term(Monomial{m.t, m.x, 0, m.z}, c);
  });
}

Monomial WeightScheme::monomial(int n, int d, int j) const {
  switch (kind) {
    case WeightKind::Egf:
      return Monomial{d, n, 0, 0};
    case WeightKind::Quad:
      return Monomial{d, n, i, j};
    case WeightKind::First:
    case WeightKind::Factor:
      break;
  }
  return Monomial{d, n, j, 0};
}

BigInt WeightScheme::weight(int n, int j) const {
  auto fac2 = [](int a, int b) -> BigInt { return (a < 0 || b < 0) ? BigInt(0) : BigInt(factorial(a) * factorial(b)); };
  switch (kind) {
    case WeightKind::Egf:
      return n < 0 ? BigInt(0) : factorial(n);
    case WeightKind::First:
      return fac2(j - 1, n - j);
    case WeightKind::Factor:
      return fac2(j - 2, n - j - 1);
    case WeightKind::Quad:
      return fac2(j - i - 1, n - j + i - 2);
  }
  return 0;
}

BigRational extract(const MultiSeries& s, int n, int d, int j, WeightScheme scheme) {
  const Monomial m = scheme.monomial(n, d, j);
  if (m.t < 0 || m.x < 0 || m.y < 0 || m.z < 0) return 0;
  if (n > s.order()) throw SeriesError("extract: x^" + std::to_string(n) + " beyond series order");
  return s.coeff(m) * scheme.weight(n, j);
}

BigInt extract_count(const MultiSeries& s, int n, int d, int j, WeightScheme scheme) {
  const BigRational v = extract(s, n, d, j, scheme);
  if (v.get_den() != 1 || v < 0)
    throw IntegralityError("extract: count at n=" + std::to_string(n) + " d=" + std::to_string(d) +
                           " j=" + std::to_string(j) + " is " + to_string(v));
  return v.get_num();
}

void dump(std::ostream& os, const MultiSeries& s) {
  for (const auto& [m, c] : s.terms())
    os << to_string(m) << " : " << c.get_num().get_str() << "/" << c.get_den().get_str() << "\n";
}

}  // namespace ballot
