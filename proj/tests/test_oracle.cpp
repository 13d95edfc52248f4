#include <gtest/gtest.h>

#include "ballot/oracle.hpp"
#include "helpers.hpp"

using namespace ballot;
using testutil::by_d;
using testutil::keyed;

namespace {
const OracleOptions kSerial{false, Exec::Serial};
}

TEST(Oracle, EulerianFirstSmall) {
  EXPECT_EQ(keyed(oracle_eulerian_first(1)), (std::map<brute::Key, long>{{{0, 0, 1}, 1}}));
  EXPECT_EQ(keyed(oracle_eulerian_first(3)),
            (std::map<brute::Key, long>{{{0, 0, 1}, 1}, {{1, 0, 1}, 1}, {{1, 0, 2}, 2}, {{1, 0, 3}, 1}, {{2, 0, 3}, 1}}));
  std::map<int, long> rows;
  for (const auto& [k, v] : keyed(oracle_eulerian_first(3))) rows[std::get<0>(k)] += v;
  EXPECT_EQ(rows, (std::map<int, long>{{0, 1}, {1, 4}, {2, 1}}));
}

TEST(Oracle, BallotAndOddOrderSmall) {
  EXPECT_EQ(by_d(oracle_ballot_desc(0)), (std::map<int, long>{{0, 1}}));
  EXPECT_EQ(by_d(oracle_ballot_desc(3)), (std::map<int, long>{{0, 1}, {1, 2}}));
  EXPECT_EQ(oracle_ballot_desc(4).total(), 9);
  EXPECT_EQ(by_d(oracle_odd_order_M(1)), (std::map<int, long>{{0, 1}}));
  EXPECT_EQ(by_d(oracle_odd_order_M(3)), (std::map<int, long>{{0, 1}, {1, 2}}));
  EXPECT_EQ(oracle_odd_order_M(5), oracle_odd_order_M(5));
}

TEST(Oracle, FactorTablesSmall) {
  EXPECT_EQ(keyed(oracle_E(3)), (std::map<brute::Key, long>{{{1, 0, 2}, 2}}));
  EXPECT_EQ(oracle_E(4).at(1, 2), 2);
  const auto b3 = oracle_b_factor(3);
  EXPECT_EQ(b3.at(1, 1, 2), 1);
  EXPECT_EQ(b3.at(1, 2, 1), 1);
  EXPECT_EQ(oracle_p_cyclic(3).at(1, 1, 2), 1);
  for (int n = 3; n <= 6; ++n) {
    const auto p = oracle_p_cyclic(n);
    for (const auto& [k, v] : p.entries()) EXPECT_NE(k.i, k.j);
  }
}

TEST(Oracle, CyclicPermutations) {
  EXPECT_EQ(by_d(oracle_l(1)), (std::map<int, long>{{0, 1}}));
  EXPECT_EQ(by_d(oracle_l(3)), (std::map<int, long>{{1, 2}}));
  EXPECT_EQ(oracle_l(5).at(1), 2);
  EXPECT_EQ(oracle_l(5).at(2), 22);
  EXPECT_THROW(oracle_l(4), std::domain_error);
}

TEST(Oracle, CapAndForce) {
  EXPECT_THROW(oracle_ballot_desc(kOracleCap + 1), ResourceCapError);
  EXPECT_THROW(oracle_ballot_desc(-1), std::domain_error);
}

class OracleVsReference : public ::testing::TestWithParam<int> {};

TEST_P(OracleVsReference, TablesMatch) {
  const int n = GetParam();
  EXPECT_EQ(keyed(oracle_eulerian_first(n)), brute::first_letter(n));
  EXPECT_EQ(by_d(oracle_ballot_desc(n)), brute::ballot_by_des(n));
  EXPECT_EQ(by_d(oracle_odd_order_M(n)), brute::odd_order_by_m(n));
  if (n >= 3) {
    EXPECT_EQ(keyed(oracle_E(n)), brute::factor_1nj_either(n));
    EXPECT_EQ(keyed(oracle_b_factor(n)), brute::ballot_factor(n));
    EXPECT_EQ(keyed(oracle_p_cyclic(n)), brute::cyclic_factor_table(n));
  }
}

TEST_P(OracleVsReference, ParallelMatchesSerial) {
  const int n = GetParam();
  EXPECT_EQ(oracle_eulerian_first(n), oracle_eulerian_first(n, kSerial));
  EXPECT_EQ(oracle_ballot_desc(n), oracle_ballot_desc(n, kSerial));
  EXPECT_EQ(oracle_odd_order_M(n), oracle_odd_order_M(n, kSerial));
  if (n >= 3) {
    EXPECT_EQ(oracle_E(n), oracle_E(n, kSerial));
    EXPECT_EQ(oracle_b_factor(n), oracle_b_factor(n, kSerial));
    EXPECT_EQ(oracle_p_cyclic(n), oracle_p_cyclic(n, kSerial));
  }
  if (n % 2 == 1) EXPECT_EQ(oracle_l(n), oracle_l(n, kSerial));
}

INSTANTIATE_TEST_SUITE_P(SmallN, OracleVsReference, ::testing::Range(1, 8));

class OracleProperties : public ::testing::TestWithParam<int> {};

TEST_P(OracleProperties, TotalsAndSymmetries) {
  const int n = GetParam();
  EXPECT_EQ(oracle_eulerian_first(n).total(), brute::factorial(n));
  const long expected = n % 2 == 0 ? brute::double_factorial(n - 1) * brute::double_factorial(n - 1)
                                        : brute::double_factorial(n) * brute::double_factorial(n - 2);
  EXPECT_EQ(oracle_ballot_desc(n).total(), expected);
  EXPECT_TRUE(oracle_ballot_desc(n).same_counts(oracle_odd_order_M(n)));
  if (n >= 3) {
    const auto e = oracle_E(n);
    for (int j = 2; j <= n - 1; ++j) {
      BigInt sum = 0;
      for (int d = 0; d < n; ++d) sum += e.at(d, j);
      EXPECT_EQ(sum, 2 * brute::factorial(n - 2)) << "j=" << j;
    }
    const auto p = oracle_p_cyclic(n);
    for (int d = 0; d < n; ++d)
      for (int i = 1; i + 1 < n; ++i)
        for (int j = 1; j + 1 < n; ++j) EXPECT_EQ(p.at(d, i, j), p.at(d, i + 1, j + 1));
  }
}

INSTANTIATE_TEST_SUITE_P(SmallN, OracleProperties, ::testing::Range(1, 9));
