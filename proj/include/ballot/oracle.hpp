#pragma once

// Ground-truth counts by exhaustive enumeration of S_n.
//
// Every table is produced by walking all n! permutations and tallying a
// statistic. The parallel path splits S_n into blocks by the first two
// letters and merges per-thread tallies by addition; the serial path walks
// S_n in lexicographic order with std::next_permutation and is kept as the
// reference the parallel kernel is tested against.

#include <stdexcept>

#include "ballot/count_table.hpp"
#include "ballot/exec.hpp"

namespace ballot {

inline constexpr int kOracleCap = 10;

struct OracleOptions {
  bool force = false;  // lift the n <= kOracleCap guard
  Exec exec = Exec::Parallel;
};

class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (d, j) -> A(n, d, j). Requires n >= 1.
CountTable oracle_eulerian_first(int n, OracleOptions opt = {});

/// d -> b(n, d), ballot permutations by descents. n = 0 gives {0: 1}.
CountTable oracle_ballot_desc(int n, OracleOptions opt = {});

/// d -> odd-order permutations with M = d. Requires n >= 1.
CountTable oracle_odd_order_M(int n, OracleOptions opt = {});

/// (d, j) -> E(n, d, j): d descents and 1nj or jn1 as a factor. n >= 3.
CountTable oracle_E(int n, OracleOptions opt = {});

/// (d, i, j) -> b_{n,d}(i, j): ballot, d descents, factor i n j. n >= 3.
CountTable oracle_b_factor(int n, OracleOptions opt = {});

/// (d, i, j) -> p_{n,d}(i, j): odd order, M = d, cyclic factor i n j. n >= 3.
CountTable oracle_p_cyclic(int n, OracleOptions opt = {});

/// d -> number of n-cycles with M = d. Throws std::domain_error for even n.
CountTable oracle_l(int n, OracleOptions opt = {});

}  // namespace ballot
