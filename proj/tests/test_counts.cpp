#include <gtest/gtest.h>

#include "ballot/counts.hpp"
#include "ballot/oracle.hpp"
#include "helpers.hpp"

using namespace ballot;

TEST(Counts, EulerianFirst) {
  EXPECT_EQ(eulerian_first_rec(3, 1, 2), 2);
  EXPECT_EQ(eulerian_first_rec(3, 1, 2), eulerian_first_rec(2, 0, 1) + eulerian_first_rec(2, 1, 2));
  for (int n = 1; n <= 9; ++n)
    for (int j = 1; j <= n; ++j) EXPECT_EQ(eulerian_first_rec(n, 0, j), j == 1 ? 1 : 0);
  for (int n = 1; n <= 12; ++n)
    for (int d = 0; d < n; ++d) EXPECT_EQ(eulerian_first_rec(n, d, 1), eulerian(n - 1, d));
  EXPECT_EQ(eulerian_first_rec(3, -1, 1), 0);
  EXPECT_EQ(eulerian_first_rec(3, 3, 1), 0);
  EXPECT_EQ(eulerian_first_rec(3, 1, 4), 0);
  EXPECT_THROW(Recurrences(4).eulerian_first(5, 0, 1), std::out_of_range);
}

TEST(Counts, Eulerian) {
  EXPECT_EQ(eulerian(0, 0), 1);
  EXPECT_EQ(eulerian(4, 1), 11);
  for (int n = 1; n <= 14; ++n) {
    EXPECT_EQ(eulerian(n, 0), 1);
    BigInt sum = 0;
    for (int d = 0; d < n; ++d) sum += eulerian(n, d);
    EXPECT_EQ(sum, factorial(n));
  }
}

TEST(Counts, SymmetrizedFirstLetter) {
  EXPECT_EQ(u_count(3, 1, 1), 2);
  EXPECT_EQ(u_count(1, 0, 1), 1);
  for (int n = 1; n <= 9; ++n)
    for (int d = 0; d <= n; ++d)
      for (int j = 1; j <= n; ++j) EXPECT_EQ(u_count(n, d, j), u_count(n, n - d, j));
}

TEST(Counts, FactorCounts) {
  EXPECT_EQ(e_count_rec(3, 1, 2), 2);
  EXPECT_EQ(e_count_rec(4, 1, 2), 2);
  EXPECT_EQ(e_count_rec(5, 2, 1), 0);
  EXPECT_EQ(e_count_rec(5, 2, 5), 0);
  for (int n = 3; n <= 10; ++n)
    for (int j = 2; j <= n - 1; ++j) {
      BigInt sum = 0;
      for (int d = 0; d < n; ++d) sum += e_count_rec(n, d, j);
      EXPECT_EQ(sum, 2 * factorial(n - 2));
    }
}

TEST(Counts, CyclicCounts) {
  EXPECT_EQ(l_count(1, 0), 1);
  EXPECT_EQ(l_count(3, 1), 2);
  EXPECT_EQ(l_count(5, 1), 2);
  EXPECT_EQ(l_count(5, 2), 22);
  EXPECT_EQ(l_count(5, 3), 0);
  EXPECT_THROW(l_count(4, 1), std::domain_error);
  for (int n = 1; n <= 13; n += 2) {
    BigInt sum = 0;
    for (int d = 0; d <= (n - 1) / 2; ++d) sum += l_count(n, d);
    EXPECT_EQ(sum, factorial(n - 1));
  }
}

TEST(Counts, PartitionSum) {
  EXPECT_EQ(p_count_partition(3, 1, 2), 1);
  for (int n = 3; n <= 9; ++n)
    for (int j = 2; j <= n - 1; ++j) EXPECT_EQ(p_count_partition(n, 0, j), 0);
}

TEST(Counts, BallotTable) {
  const auto b = ballot_desc_gf(14);
  ASSERT_EQ(b.size(), 15u);
  EXPECT_EQ(testutil::by_d(b[3]), (std::map<int, long>{{0, 1}, {1, 2}}));
  EXPECT_EQ(b[5].total(), 45);
  for (int n = 1; n <= 14; ++n)
    for (int d = (n - 1) / 2 + 1; d <= n; ++d) EXPECT_EQ(b[static_cast<std::size_t>(n)].at(d), 0);
  EXPECT_EQ(b[0].total(), 1);
}

class CountsVsOracle : public ::testing::TestWithParam<int> {};

TEST_P(CountsVsOracle, EveryRoute) {
  const int n = GetParam();
  const auto first = brute::first_letter(n);
  for (int d = 0; d < n; ++d)
    for (int j = 1; j <= n; ++j) {
      const auto it = first.find({d, 0, j});
      EXPECT_EQ(eulerian_first_rec(n, d, j), it == first.end() ? 0 : it->second);
    }

  const auto ballot = ballot_desc_gf(n);
  EXPECT_EQ(testutil::by_d(ballot[static_cast<std::size_t>(n)]), brute::ballot_by_des(n));

  if (n % 2 == 1) {
    const auto l = oracle_l(n);
    for (int d = 0; d <= n; ++d) EXPECT_EQ(l_count(n, d), l.at(d));
  }
  if (n >= 3) {
    const auto e = brute::factor_1nj_either(n);
    const auto p = brute::cyclic_factor_table(n);
    for (int d = 0; d < n; ++d)
      for (int j = 2; j <= n - 1; ++j) {
        const auto ie = e.find({d, 0, j});
        EXPECT_EQ(e_count_rec(n, d, j), ie == e.end() ? 0 : ie->second) << "E " << d << ' ' << j;
        const auto ip = p.find({d, 1, j});
        EXPECT_EQ(p_count_partition(n, d, j), ip == p.end() ? 0 : ip->second) << "p " << d << ' ' << j;
      }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallN, CountsVsOracle, ::testing::Range(1, 8));

TEST(Catalog, LazyAndNamed) {
  const SeriesCatalog cat(6);
  for (auto name : SeriesCatalog::kNames) EXPECT_EQ(cat.get(name).order(), 6) << name;
  EXPECT_EQ(&cat.get("E"), &cat.E());
  EXPECT_THROW(cat.get("nope"), std::invalid_argument);
  EXPECT_EQ(extract_count(cat.Axy(), 3, 1, 2, WeightScheme::first()), 2);
  EXPECT_EQ(extract_count(cat.B(), 3, 1, 0, WeightScheme::egf()), 2);
  EXPECT_EQ(cat.B().slice(3).size(), 2u);
}

TEST(Catalog, ExtractionsMatchCounts) {
  const int N = 9;
  const SeriesCatalog cat(N);
  for (int n = 1; n <= N; ++n)
    for (int d = 0; d <= n; ++d) {
      for (int j = 1; j <= n; ++j) {
        EXPECT_EQ(extract_count(cat.Axy(), n, d, j, WeightScheme::first()), eulerian_first_rec(n, d, j));
        EXPECT_EQ(extract_count(cat.Uhat(), n, d, j, WeightScheme::first()), u_count(n, d, j));
      }
      for (int j = 2; j <= n - 1; ++j) {
        EXPECT_EQ(extract_count(cat.E(), n, d, j, WeightScheme::factor()), e_count_rec(n, d, j));
        EXPECT_EQ(extract_count(cat.P(), n, d, j, WeightScheme::factor()), p_count_partition(n, d, j));
      }
    }
}

TEST(Catalog, LogSeriesRoutesAgree) {
  const auto& rec = shared_recurrences(12);
  EXPECT_EQ(ballot_log_series(12, rec), ballot_log_series_eulerian(12, rec));
  const auto b = exp_series(ballot_log_series(3, rec));
  EXPECT_EQ(b.coeff(Monomial{0, 3, 0, 0}), BigRational(1, 6));
  EXPECT_EQ(b.coeff(Monomial{1, 3, 0, 0}), BigRational(1, 3));
}

TEST(Catalog, FourVariableDegreeBounds) {
  const SeriesCatalog cat(8);
  cat.P4().for_each([](const Monomial& m, const BigRational&) {
    // y^i z^j with 1 <= i < j <= n-1.
    EXPECT_GE(m.y, 1);
    EXPECT_LT(m.y, m.z);
    EXPECT_LE(m.z, m.x - 1);
    EXPECT_LE(m.t, m.x);
  });
}
