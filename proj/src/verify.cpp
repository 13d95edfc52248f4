#include "ballot/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace ballot {

namespace {

using Clock = std::chrono::steady_clock;

// Collects the parts of one check and keeps the first failure.
class Recorder {
 public:
  Recorder(std::string name, int order) : start_(Clock::now()) {
    report_.name = std::move(name);
    report_.order = order;
  }

  void expect(const std::string& part, std::optional<Discrepancy> d) {
    if (!d || !report_.passed) return;
    report_.passed = false;
    d->location = part + ": " + d->location;
    report_.first_discrepancy = std::move(d);
  }

  template <class L, class R>
  void expect_equal(const std::string& part, const std::string& where, const L& lhs, const R& rhs) {
    if (lhs == rhs) return;
    expect(part, Discrepancy{where, to_string(lhs), to_string(rhs)});
  }

  bool failed() const { return !report_.passed; }

  CheckReport finish() {
    report_.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  CheckReport report_;
  Clock::time_point start_;
};

std::string where(int n, int d, int i = 0, int j = 0) {
  std::ostringstream os;
  os << "n=" << n << " d=" << d;
  if (i != 0) os << " i=" << i;
  if (j != 0) os << " j=" << j;
  return os.str();
}

std::string key_location(int n, TableShape shape, const CountKey& k) {
  switch (shape) {
    case TableShape::D:
      return where(n, k.d);
    case TableShape::DJ:
      return where(n, k.d, 0, k.j);
    case TableShape::DIJ:
      return where(n, k.d, k.i, k.j);
  }
  return where(n, k.d);
}

MultiSeries one_plus_t_times(const MultiSeries& s) { return s + shift(s, Monomial{1, 0, 0, 0}); }

std::vector<CountTable> oracle_rows(int from, int to, CountTable (*oracle)(int, OracleOptions),
                                    const VerifyContext& ctx) {
  std::vector<CountTable> rows(static_cast<std::size_t>(std::max(to + 1, 0)));
  for (int n = from; n <= to; ++n) rows[static_cast<std::size_t>(n)] = oracle(n, ctx.oracle_options());
  return rows;
}

}  // namespace

Mutation parse_mutation(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  auto num = [&](std::size_t k) {
    std::size_t used = 0;
    const int v = std::stoi(parts.at(k), &used);
    if (used != parts[k].size()) throw std::invalid_argument("bad mutation field '" + parts[k] + "'");
    return v;
  };
  Mutation m;
  if (!parts.empty() && parts[0] == "A_first" && (parts.size() == 4 || parts.size() == 5)) {
    m.target = Mutation::Target::EulerianFirst;
    m.n = num(1);
    m.d = num(2);
    m.j = num(3);
    if (parts.size() == 5) m.delta = num(4);
  } else if (!parts.empty() && parts[0] == "b" && (parts.size() == 3 || parts.size() == 4)) {
    m.target = Mutation::Target::Ballot;
    m.n = num(1);
    m.d = num(2);
    if (parts.size() == 4) m.delta = num(3);
  } else {
    throw std::invalid_argument("mutation must be A_first:n:d:j[:delta] or b:n:d[:delta]");
  }
  return m;
}

VerifyContext::VerifyContext(VerifyConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.order < 0) throw std::invalid_argument("order must be >= 0");
  if (cfg_.order > kSeriesCap && !cfg_.force)
    throw ResourceCapError("order " + std::to_string(cfg_.order) + " exceeds cap " + std::to_string(kSeriesCap) +
                           " (use force)");
  if (cfg_.n_max_oracle > kOracleCap && !cfg_.force)
    throw ResourceCapError("oracle n " + std::to_string(cfg_.n_max_oracle) + " exceeds cap " +
                           std::to_string(kOracleCap) + " (use force)");

  rec_ = std::make_unique<Recurrences>(std::max({cfg_.order, cfg_.n_max_oracle, 1}));
  if (cfg_.mutation && cfg_.mutation->target == Mutation::Target::EulerianFirst) {
    const auto& m = *cfg_.mutation;
    rec_->perturb_eulerian_first(m.n, m.d, m.j, m.delta);
  }
  catalog_ = std::make_unique<SeriesCatalog>(cfg_.order, rec_.get());
  ballot_ = ballot_desc_gf(cfg_.order, *rec_);
  if (cfg_.mutation && cfg_.mutation->target == Mutation::Target::Ballot) {
    const auto& m = *cfg_.mutation;
    if (m.n < 0 || m.n > cfg_.order || m.d < 0 || m.d > m.n)
      throw std::out_of_range("ballot mutation outside the b(n,d) table");
    ballot_[static_cast<std::size_t>(m.n)].add(CountKey{m.d, 0, 0}, m.delta);
  }
}

std::optional<Discrepancy> compare_series(const MultiSeries& lhs, const MultiSeries& rhs) {
  const int order = std::min(lhs.order(), rhs.order());
  const MultiSeries l = lhs.truncated(order);
  const MultiSeries r = rhs.truncated(order);
  const auto diff = (l - r).terms();
  if (diff.empty()) return std::nullopt;
  const Monomial& m = diff.front().first;
  return Discrepancy{to_string(m), to_string(l.coeff(m)), to_string(r.coeff(m))};
}

std::optional<Discrepancy> compare_tables(const CountTable& lhs, const CountTable& rhs) {
  std::vector<CountKey> keys;
  for (const auto& [k, v] : lhs.entries()) keys.push_back(k);
  for (const auto& [k, v] : rhs.entries()) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  for (const auto& k : keys)
    if (lhs.at(k) != rhs.at(k)) return Discrepancy{key_location(lhs.n(), lhs.shape(), k), to_string(lhs.at(k)), to_string(rhs.at(k))};
  return std::nullopt;
}

MultiSeries series_from_counts(int order, int n_min, WeightKind kind, const CountFn& count) {
  MultiSeries s(order);
  auto put = [&](int n, int d, int i, int j) {
    const BigInt c = count(n, d, i, j);
    if (c == 0) return;
    const WeightScheme ws{kind, i};
    s.add_term(ws.monomial(n, d, j), ratio(c, ws.weight(n, j)));
  };
  for (int n = std::max(n_min, 0); n <= order; ++n)
    for (int d = 0; d <= n; ++d) switch (kind) {
        case WeightKind::Egf:
          put(n, d, 0, 0);
          break;
        case WeightKind::First:
          for (int j = 1; j <= n; ++j) put(n, d, 0, j);
          break;
        case WeightKind::Factor:
          for (int j = 2; j <= n - 1; ++j) put(n, d, 0, j);
          break;
        case WeightKind::Quad:
          for (int j = 2; j <= n - 1; ++j)
            for (int i = 1; i < j; ++i) put(n, d, i, j);
          break;
      }
  return s;
}

CheckReport check_bdn(const VerifyContext& ctx) {
  Recorder rec("bdn", ctx.order());
  const auto& b = ctx.ballot_table();
  for (int n = 0; n <= ctx.order(); ++n) {
    const BigInt expected = n % 2 == 0 ? BigInt(double_factorial(n - 1) * double_factorial(n - 1))
                                       : BigInt(double_factorial(n) * double_factorial(n - 2));
    rec.expect_equal("total", "n=" + std::to_string(n), b[static_cast<std::size_t>(n)].total(), expected);
  }
  for (int n = 1; n <= ctx.order(); ++n)
    for (int d = 0; d <= n; ++d) {
      const bool positive = b[static_cast<std::size_t>(n)].at(d) > 0;
      if (positive != (d <= (n - 1) / 2))
        rec.expect("support", Discrepancy{where(n, d), to_string(b[static_cast<std::size_t>(n)].at(d)),
                                          d <= (n - 1) / 2 ? "> 0" : "0"});
    }
  rec.expect("log series", compare_series(ballot_log_series(ctx.order(), ctx.rec()),
                                          ballot_log_series_eulerian(ctx.order(), ctx.rec())));
  return rec.finish();
}

CheckReport check_spiro(const VerifyContext& ctx) {
  Recorder rec("spiro", ctx.order());
  const int top = ctx.n_max_oracle();
  for (int n = 1; n <= top; ++n) {
    const CountTable ballot = oracle_ballot_desc(n, ctx.oracle_options());
    rec.expect("ballot vs odd-order M", compare_tables(ballot, oracle_odd_order_M(n, ctx.oracle_options())));
    if (n <= ctx.order()) rec.expect("oracle vs exp series", compare_tables(ballot, ctx.ballot_table()[static_cast<std::size_t>(n)]));
  }
  return rec.finish();
}

CheckReport check_first_letter_gf(const VerifyContext& ctx) {
  Recorder rec("first_letter_gf", ctx.order());
  const int N = ctx.order();
  const auto& r = ctx.rec();
  const MultiSeries& a = ctx.catalog().Axy();

  const MultiSeries from_rec =
      series_from_counts(N, 1, WeightKind::First, [&](int n, int d, int, int j) { return r.eulerian_first(n, d, j); });
  rec.expect("closed form vs recursion", compare_series(a, from_rec));

  for (int n = 1; n <= std::min(N, ctx.n_max_oracle()); ++n) {
    CountTable t("A_first", n, TableShape::DJ);
    for (int d = 0; d < n; ++d)
      for (int j = 1; j <= n; ++j) t.set(CountKey{d, 0, j}, r.eulerian_first(n, d, j));
    rec.expect("recursion vs oracle", compare_tables(t, oracle_eulerian_first(n, ctx.oracle_options())));
  }

  // y A_y - A = xy A_x - y^2 A_y + txy A - xy A
  const MultiSeries a_y = d_dy(a);
  const MultiSeries lhs = shift(a_y, Monomial{0, 0, 1, 0}) - a;
  const MultiSeries rhs = shift(d_dx(a), Monomial{0, 1, 1, 0}) - shift(a_y, Monomial{0, 0, 2, 0}) +
                          shift(a, Monomial{1, 1, 1, 0}) - shift(a, Monomial{0, 1, 1, 0});
  rec.expect("pde", compare_series(lhs, rhs));

  rec.expect("boundary dA/dy(y=0) = x(A+1)",
             compare_series(y_coefficient(a, 1), shift(ctx.catalog().F(), Monomial{0, 1, 0, 0})));

  for (int n = 1; n <= N; ++n)
    for (int d = 0; d < n; ++d)
      rec.expect_equal("A(n,d,1) = A(n-1,d)", where(n, d), r.eulerian_first(n, d, 1), r.eulerian(n - 1, d));
  return rec.finish();
}

CheckReport check_u(const VerifyContext& ctx) {
  Recorder rec("u", ctx.order());
  const int N = ctx.order();
  const auto& r = ctx.rec();
  const MultiSeries& uhat = ctx.catalog().Uhat();
  const MultiSeries& u = ctx.catalog().U();

  rec.expect("Uhat vs U(n,d,j)",
             compare_series(uhat, series_from_counts(N, 1, WeightKind::First,
                                                     [&](int n, int d, int, int j) { return r.u(n, d, j); })));
  rec.expect("Uhat symmetry d <-> n-d", compare_series(uhat, t_reverse(uhat)));
  rec.expect("U + reversed U = odd part of Uhat", compare_series(u + t_reverse(u), odd_x_part(uhat)));
  rec.expect("U support", compare_series(u, series_from_counts(N, 1, WeightKind::First, [&](int n, int d, int, int j) {
                                           return (n % 2 == 1 && 2 * d <= n - 1) ? r.u(n, d, j) : BigInt(0);
                                         })));
  return rec.finish();
}

CheckReport check_e(const VerifyContext& ctx) {
  Recorder rec("e", ctx.order());
  const int N = ctx.order();
  const auto& r = ctx.rec();
  rec.expect("closed form vs recursion",
             compare_series(ctx.catalog().E(), series_from_counts(N, 3, WeightKind::Factor, [&](int n, int d, int, int j) {
                              return r.e(n, d, j);
                            })));
  for (int n = 3; n <= std::min(N, ctx.n_max_oracle()); ++n) {
    CountTable t("E", n, TableShape::DJ);
    for (int d = 0; d < n; ++d)
      for (int j = 2; j <= n - 1; ++j) t.set(CountKey{d, 0, j}, r.e(n, d, j));
    rec.expect("recursion vs oracle", compare_tables(t, oracle_E(n, ctx.oracle_options())));
  }
  return rec.finish();
}

CheckReport check_functional_equation(const VerifyContext& ctx) {
  Recorder rec("functional_equation", ctx.order());
  const int N = ctx.order();
  const auto& cat = ctx.catalog();
  const MultiSeries one_plus_y = series_one_plus_y(N);

  // B(t,x,y) B(1/t, tx(1+y)) + B(1/t, tx, y) B(t, x+xy) = (1+t) E(t,x,y)
  const MultiSeries lhs = cat.Bxy() * subst_x_times(t_reverse(cat.B()), one_plus_y) +
                          t_reverse(cat.Bxy()) * subst_x_times(cat.B(), one_plus_y);
  rec.expect("B(t,x,y) equation", compare_series(lhs, one_plus_t_times(cat.E())));

  // B(t,x) B(1/t, tx) = 1 + (1+t) A(t,x)
  rec.expect("B(t,x) B(1/t,tx)", compare_series(cat.B() * t_reverse(cat.B()),
                                                MultiSeries::constant(N, 1) + one_plus_t_times(cat.A())));
  return rec.finish();
}

CheckReport check_wz(const VerifyContext& ctx) {
  Recorder rec("wz", ctx.order());
  const int N = ctx.order();
  const auto& cat = ctx.catalog();
  const int top = ctx.n_max_oracle();
  const auto bf = oracle_rows(3, top, oracle_b_factor, ctx);
  const auto pc = oracle_rows(3, top, oracle_p_cyclic, ctx);

  for (int n = 3; n <= top; ++n) {
    const auto& b = bf[static_cast<std::size_t>(n)];
    const auto& p = pc[static_cast<std::size_t>(n)];
    CountTable lhs("b(n,d,j)", n, TableShape::DJ), rhs("2p", n, TableShape::DJ);
    for (int d = 0; d < n; ++d)
      for (int j = 2; j <= n - 1; ++j) {
        lhs.set(CountKey{d, 0, j}, b.at(d, 1, j) + b.at(d, j, 1));
        rhs.set(CountKey{d, 0, j}, 2 * p.at(d, 1, j));
      }
    rec.expect("oracle b(1,j)+b(j,1) = 2p(1,j)", compare_tables(lhs, rhs));
  }

  // (1+t) E = t x^2 y (1 + (1+t) A(t, x+xy)) (Uhat(x) - Uhat(-x))
  const MultiSeries a_shift = subst_x_times(cat.A(), series_one_plus_y(N));
  const MultiSeries rhs = shift((MultiSeries::constant(N, 1) + one_plus_t_times(a_shift)) * (cat.Uhat() - negate_x(cat.Uhat())),
                                Monomial{1, 2, 1, 0});
  rec.expect("series identity", compare_series(one_plus_t_times(cat.E()), rhs));

  const int m = std::min(N, top);
  const MultiSeries from_oracle = series_from_counts(m, 3, WeightKind::Factor, [&](int n, int d, int, int j) {
    const auto& b = bf[static_cast<std::size_t>(n)];
    return BigInt(b.at(d, 1, j) + b.at(d, j, 1));
  });
  rec.expect("2P vs oracle b(n,d,j)", compare_series(cat.Bxy().truncated(m), from_oracle));
  return rec.finish();
}

CheckReport check_p4(const VerifyContext& ctx) {
  Recorder rec("p4", ctx.order());
  const int N = ctx.order();
  const auto& cat = ctx.catalog();
  const auto& r = ctx.rec();
  const int top = ctx.n_max_oracle();
  const int m = std::min(N, top);
  const auto pc = oracle_rows(3, top, oracle_p_cyclic, ctx);

  const MultiSeries from_oracle = series_from_counts(m, 3, WeightKind::Quad, [&](int n, int d, int i, int j) {
    return BigInt(2 * pc[static_cast<std::size_t>(n)].at(d, i, j));
  });
  rec.expect("P(t,x,y,z) vs oracle", compare_series(cat.P4().truncated(m), from_oracle));

  for (int n = 3; n <= top; ++n) {
    const auto& p = pc[static_cast<std::size_t>(n)];
    for (int d = 0; d < n; ++d)
      for (int i = 1; i + 1 <= n - 1; ++i)
        for (int j = 1; j + 1 <= n - 1; ++j)
          rec.expect_equal("toeplitz", where(n, d, i, j), p.at(d, i, j), p.at(d, i + 1, j + 1));
  }

  rec.expect("P(t,x,y) vs partition sum",
             compare_series(cat.P(), series_from_counts(N, 3, WeightKind::Factor, [&](int n, int d, int, int j) {
                              return r.p_partition(n, d, j);
                            })));
  for (int n = 3; n <= m; ++n)
    for (int d = 0; d < n; ++d)
      for (int j = 2; j <= n - 1; ++j)
        rec.expect_equal("partition sum vs oracle", where(n, d, 1, j), r.p_partition(n, d, j),
                         pc[static_cast<std::size_t>(n)].at(d, 1, j));
  return rec.finish();
}

std::vector<CheckReport> run_all_checks(const VerifyContext& ctx) {
  return {check_bdn(ctx), check_spiro(ctx), check_first_letter_gf(ctx), check_u(ctx),
          check_e(ctx),   check_functional_equation(ctx), check_wz(ctx), check_p4(ctx)};
}

nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j = {{"name", r.name}, {"order", r.order}, {"passed", r.passed}};
  if (r.first_discrepancy)
    j["discrepancy"] = {{"location", r.first_discrepancy->location},
                        {"lhs", r.first_discrepancy->lhs},
                        {"rhs", r.first_discrepancy->rhs}};
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

nlohmann::ordered_json to_json(const std::vector<CheckReport>& rs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(to_json(r));
  return arr;
}

}  // namespace ballot
