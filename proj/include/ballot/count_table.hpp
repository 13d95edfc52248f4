#pragma once

#include <compare>
#include <map>
#include <string>

#include "ballot/arith.hpp"

namespace ballot {

/// Which index slots of a CountKey are meaningful.
enum class TableShape { D, DJ, DIJ };

struct CountKey {
  int d = 0;
  int i = 0;
  int j = 0;
  auto operator<=>(const CountKey&) const = default;
};

/// Sparse (d[, i][, j]) -> count table for one length n. Absent keys are 0
/// and zero counts are never stored.
class CountTable {
 public:
  CountTable() = default;
  CountTable(std::string stat, int n, TableShape shape) : stat_(std::move(stat)), n_(n), shape_(shape) {}

  const std::string& stat() const { return stat_; }
  int n() const { return n_; }
  TableShape shape() const { return shape_; }

  BigInt at(const CountKey& k) const;
  BigInt at(int d) const { return at(CountKey{d, 0, 0}); }
  BigInt at(int d, int j) const { return at(CountKey{d, 0, j}); }
  BigInt at(int d, int i, int j) const { return at(CountKey{d, i, j}); }

  void add(const CountKey& k, const BigInt& v);
  void set(const CountKey& k, const BigInt& v);

  /// Entry-wise sum; both tables must describe the same statistic.
  void merge(const CountTable& other);

  BigInt total() const;
  std::size_t size() const { return entries_.size(); }
  const std::map<CountKey, BigInt>& entries() const { return entries_; }

  /// Same entries, ignoring the stat label.
  bool same_counts(const CountTable& other) const { return entries_ == other.entries_; }

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  std::string stat_;
  int n_ = 0;
  TableShape shape_ = TableShape::D;
  std::map<CountKey, BigInt> entries_;
};

}  // namespace ballot
