#include "cyclow/partitions.hpp"

#include <stdexcept>

namespace cyclow {

namespace {

void extend(std::int64_t remaining, std::int64_t min_entry, std::int64_t cap,
            PartitionTuple& prefix, std::vector<PartitionTuple>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::int64_t a = min_entry; a <= std::min(remaining, cap); ++a) {
    prefix.push_back(a);
    extend(remaining - a, a, cap, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<PartitionTuple> assembly(std::int64_t w, std::int64_t cap) {
  if (w < 1) throw std::invalid_argument("assembly: w must be >= 1");
  if (cap < 1) throw std::invalid_argument("assembly: cap must be >= 1");
  std::vector<PartitionTuple> out;
  PartitionTuple prefix;
  extend(w, 1, cap, prefix, out);
  return out;
}

std::vector<PartitionTuple> assembly(std::int64_t w) { return assembly(w, w); }

std::pair<PartitionTuple, PartitionTuple> odd_even_parts(const PartitionTuple& v) {
  PartitionTuple odd, even;
  for (std::int64_t a : v) (a % 2 != 0 ? odd : even).push_back(a);
  return {std::move(odd), std::move(even)};
}

BigInt multinomial(std::int64_t w, const PartitionTuple& v) {
  std::int64_t sum = 0;
  for (std::int64_t a : v) {
    if (a < 1) throw std::invalid_argument("multinomial: entries must be positive");
    sum += a;
  }
  if (sum != w)
    throw std::invalid_argument("multinomial: entries must sum to the first argument");
  BigInt r = factorial(w);
  for (std::int64_t a : v) r = exact_div(r, factorial(a));
  return r;
}

BigInt partition_factorial(const PartitionTuple& v) {
  BigInt r = 1;
  for (std::int64_t a : v) {
    if (a < 1)
      throw std::invalid_argument("partition_factorial: entries must be positive");
    r *= factorial(a);
  }
  return r;
}

}  // namespace cyclow
