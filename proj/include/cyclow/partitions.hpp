#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cyclow/bigint.hpp"

namespace cyclow {

/* Nondecreasing tuple of positive integers. Produced sorted by the
 * generators below; consumers may also build their own. */
using PartitionTuple = std::vector<std::int64_t>;

/* All nondecreasing tuples of integers in [1, cap] summing to w, in
 * lexicographic order: assembly(4, 4) = (1,1,1,1), (1,1,2), (1,3), (2,2),
 * (4). The single-argument form uses cap = w (the cap only matters when a
 * caller restricts entries below w). */
std::vector<PartitionTuple> assembly(std::int64_t w, std::int64_t cap);
std::vector<PartitionTuple> assembly(std::int64_t w);

/* Multiplicities of the distinct values in a tuple, sorted ascending:
 * (4,3,5,4,3,0,4) -> (1,1,2,3). The empty tuple gives the empty partition. */
template <typename T>
PartitionTuple partition_of(const std::vector<T>& values) {
  std::map<T, std::int64_t> mult;
  for (const T& v : values) ++mult[v];
  PartitionTuple out;
  out.reserve(mult.size());
  for (const auto& [value, count] : mult) out.push_back(count);
  std::sort(out.begin(), out.end());
  return out;
}

/* Split a tuple into its odd and even entries, order preserved. */
std::pair<PartitionTuple, PartitionTuple> odd_even_parts(const PartitionTuple& v);

/* w! / (a_1! ... a_k!); requires the entries to sum to w. */
BigInt multinomial(std::int64_t w, const PartitionTuple& v);

/* a_1! ... a_k!; empty tuple gives 1. */
BigInt partition_factorial(const PartitionTuple& v);

}  // namespace cyclow
