#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ballot/count_table.hpp"

namespace ballot::cli {

enum class Command { Table, Oracle, Verify, Dump, Oeis };
enum class Format { Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::Table;
  std::string stat;
  int n = 0;
  int order = 10;
  int n_max_oracle = 7;
  Format format = Format::Json;
  std::optional<std::string> out_path;
  std::optional<std::string> bfile;
  std::optional<std::string> mutation;
  bool force = false;
};

/// Raised for bad flag values that the parser itself cannot catch.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Stats accepted by `table` (formula routes) and by `oracle` (enumeration).
const std::vector<std::string>& table_stats();
const std::vector<std::string>& oracle_stats();

CountTable build_table(const RunConfig& cfg);
CountTable build_oracle_table(const RunConfig& cfg);

void write_json(std::ostream& os, const CountTable& t);
void write_csv(std::ostream& os, const CountTable& t);

int run_table(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_dump(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_oeis_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; returns the process exit code.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ballot::cli
