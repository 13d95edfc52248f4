#pragma once

#include <map>

#include "ballot/count_table.hpp"
#include "brute.hpp"

namespace testutil {

inline std::map<brute::Key, long> keyed(const ballot::CountTable& t) {
  std::map<brute::Key, long> out;
  for (const auto& [k, v] : t.entries()) out[{k.d, k.i, k.j}] = v.get_si();
  return out;
}

inline std::map<int, long> by_d(const ballot::CountTable& t) {
  std::map<int, long> out;
  for (const auto& [k, v] : t.entries()) out[k.d] = v.get_si();
  return out;
}

}  // namespace testutil
