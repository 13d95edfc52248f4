#include "ballot/count_table.hpp"

#include <stdexcept>

namespace ballot {

BigInt CountTable::at(const CountKey& k) const {
  const auto it = entries_.find(k);
  return it == entries_.end() ? BigInt(0) : it->second;
}

void CountTable::add(const CountKey& k, const BigInt& v) {
  if (v == 0) return;
  auto [it, inserted] = entries_.try_emplace(k, v);
  if (inserted) return;
  it->second += v;
  if (it->second == 0) entries_.erase(it);
}

void CountTable::set(const CountKey& k, const BigInt& v) {
  if (v == 0)
    entries_.erase(k);
  else
    entries_[k] = v;
}

void CountTable::merge(const CountTable& other) {
  if (other.n_ != n_ || other.shape_ != shape_) throw std::invalid_argument("merging unlike count tables");
  for (const auto& [k, v] : other.entries_) add(k, v);
}

BigInt CountTable::total() const {
  BigInt s = 0;
  for (const auto& [k, v] : entries_) s += v;
  return s;
}

}  // namespace ballot
