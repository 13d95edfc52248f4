#pragma once

// Identity certification. Every check compares two independently computed
// objects with exact rational equality and, on failure, reports the
// lexicographically smallest place where they differ.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ballot/counts.hpp"
#include "ballot/oracle.hpp"
#include "ballot/series.hpp"

namespace ballot {

/// Largest truncation order accepted without `force`.
inline constexpr int kSeriesCap = 14;

struct Discrepancy {
  std::string location;
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string name;
  int order = 0;
  bool passed = true;
  std::optional<Discrepancy> first_discrepancy;
  double elapsed_ms = 0;
};

/// A deliberate single-entry corruption, for mutation testing.
struct Mutation {
  enum class Target { EulerianFirst, Ballot };
  Target target = Target::EulerianFirst;
  int n = 0;
  int d = 0;
  int j = 0;
  BigInt delta = 1;
};

/// Parses "A_first:n:d:j[:delta]" or "b:n:d[:delta]".
Mutation parse_mutation(const std::string& text);

struct VerifyConfig {
  int order = 10;
  int n_max_oracle = 7;
  std::optional<Mutation> mutation;
  bool force = false;
};

/// Shared inputs for one verification run: recurrences (with any mutation
/// applied) and a series catalog built from them.
class VerifyContext {
 public:
  /// Throws ResourceCapError if the order exceeds kSeriesCap without force,
  /// std::out_of_range if the mutation addresses no table entry.
  explicit VerifyContext(VerifyConfig cfg);

  const VerifyConfig& config() const { return cfg_; }
  int order() const { return cfg_.order; }
  int n_max_oracle() const { return cfg_.n_max_oracle; }
  const Recurrences& rec() const { return *rec_; }
  const SeriesCatalog& catalog() const { return *catalog_; }
  OracleOptions oracle_options() const { return OracleOptions{cfg_.force, Exec::Parallel}; }

  /// b(n, d) for n <= order from the exp-series route, mutation applied.
  const std::vector<CountTable>& ballot_table() const { return ballot_; }

 private:
  VerifyConfig cfg_;
  std::unique_ptr<Recurrences> rec_;
  std::unique_ptr<SeriesCatalog> catalog_;
  std::vector<CountTable> ballot_;
};

/// First monomial (lexicographic in t, x, y, z) where the two series differ,
/// compared through the smaller of their orders.
std::optional<Discrepancy> compare_series(const MultiSeries& lhs, const MultiSeries& rhs);

/// First key where the tables differ; the location names n.
std::optional<Discrepancy> compare_tables(const CountTable& lhs, const CountTable& rhs);

/// Index callback for series_from_counts: (n, d, i, j) -> count. The index
/// box is n_min <= n <= order, 0 <= d <= n and, per scheme, no j (Egf),
/// 1 <= j <= n (First), 2 <= j <= n-1 (Factor) or 1 <= i < j <= n-1 (Quad).
using CountFn = std::function<BigInt(int n, int d, int i, int j)>;

/// Sum of count * monomial / weight over the scheme's index box, turning a
/// table or a recursion into a series comparable to a closed form.
MultiSeries series_from_counts(int order, int n_min, WeightKind kind, const CountFn& count);

CheckReport check_bdn(const VerifyContext& ctx);
CheckReport check_spiro(const VerifyContext& ctx);
CheckReport check_first_letter_gf(const VerifyContext& ctx);
CheckReport check_u(const VerifyContext& ctx);
CheckReport check_e(const VerifyContext& ctx);
CheckReport check_functional_equation(const VerifyContext& ctx);
CheckReport check_wz(const VerifyContext& ctx);
CheckReport check_p4(const VerifyContext& ctx);

/// The eight checks above, in that order.
std::vector<CheckReport> run_all_checks(const VerifyContext& ctx);

nlohmann::ordered_json to_json(const CheckReport& r);
nlohmann::ordered_json to_json(const std::vector<CheckReport>& rs);

}  // namespace ballot
