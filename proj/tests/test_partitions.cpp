#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "cyclow/partitions.hpp"
#include "oracles.hpp"

using namespace cyclow;

TEST_SUITE("partitions") {

TEST_CASE("assembly enumerates nondecreasing tuples") {
  CHECK(assembly(1) == std::vector<PartitionTuple>{{1}});
  CHECK(assembly(4) == std::vector<PartitionTuple>{
                           {1, 1, 1, 1}, {1, 1, 2}, {1, 3}, {2, 2}, {4}});
  const std::vector<std::int64_t> counts{1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int w = 1; w <= 10; ++w) {
    CHECK(static_cast<std::int64_t>(assembly(w).size()) ==
          counts[static_cast<std::size_t>(w - 1)]);
  }
}

TEST_CASE("assembly cap bounds every part") {
  CHECK(assembly(6, 2) == std::vector<PartitionTuple>{
                              {1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 2}, {1, 1, 2, 2},
                              {2, 2, 2}});
  CHECK(assembly(6, 6) == assembly(6));
  CHECK(assembly(6, 100) == assembly(6));
  CHECK(assembly(3, 1) == std::vector<PartitionTuple>{{1, 1, 1}});
  for (const PartitionTuple& v : assembly(7, 3)) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      CHECK(v[i] >= 1);
      CHECK(v[i] <= 3);
      if (i) CHECK(v[i - 1] <= v[i]);
      sum += v[i];
    }
    CHECK(sum == 7);
  }
  CHECK_THROWS_AS(assembly(0), std::invalid_argument);
  CHECK_THROWS_AS(assembly(3, 0), std::invalid_argument);
}

TEST_CASE("partition_of collects sorted multiplicities") {
  CHECK(partition_of(PartitionTuple{5, 5, 7}) == PartitionTuple{1, 2});
  CHECK(partition_of(PartitionTuple{1, 1, 1}) == PartitionTuple{3});
  CHECK(partition_of(PartitionTuple{2, 1, 2, 3}) == PartitionTuple{1, 1, 2});
  CHECK(partition_of(PartitionTuple{4}) == PartitionTuple{1});
  CHECK(partition_of(PartitionTuple{}) == PartitionTuple{});
}

TEST_CASE("odd_even_parts splits by parity, order kept") {
  const auto [odd, even] = odd_even_parts(PartitionTuple{1, 2, 2, 3});
  CHECK(odd == PartitionTuple{1, 3});
  CHECK(even == PartitionTuple{2, 2});
  const auto [o2, e2] = odd_even_parts(PartitionTuple{4, 4});
  CHECK(o2.empty());
  CHECK(e2 == PartitionTuple{4, 4});
}

TEST_CASE("multinomial and partition_factorial") {
  CHECK(multinomial(4, {1, 1, 2}) == 12);
  CHECK(multinomial(3, {1, 1, 1}) == 6);
  CHECK(multinomial(3, {3}) == 1);
  CHECK(multinomial(10, {2, 3, 5}) == 2520);
  CHECK_THROWS_AS(multinomial(4, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(multinomial(3, {0, 3}), std::invalid_argument);
  CHECK(partition_factorial({1, 2}) == 2);
  CHECK(partition_factorial({3}) == 6);
  CHECK(partition_factorial({2, 2}) == 4);
  CHECK(partition_factorial({}) == 1);
}

TEST_CASE("set partitions assemble to Bell numbers") {
  // Sum over shapes v of (ways to split w items into groups of sizes v):
  // multinomial(w, v) / partition_factorial(partition_of(v)) counts set
  // partitions of shape v, so the total is the Bell number.
  for (int w = 1; w <= 9; ++w) {
    BigInt total = 0;
    for (const PartitionTuple& v : assembly(w)) {
      total += exact_div(multinomial(w, v), partition_factorial(partition_of(v)));
    }
    CHECK(total == oracles::bell_number(w));
  }
}

TEST_CASE("binomial and factorial helpers") {
  CHECK(binomial(BigInt(15), 3) == 455);
  CHECK(binomial(BigInt(5), 0) == 1);
  CHECK(binomial(BigInt(5), 6) == 0);
  CHECK(binomial(BigInt(5), -1) == 0);
  CHECK(binomial(BigInt(64), 32) == BigInt("1832624140942590534"));
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(exact_div(BigInt(84), 12) == 7);
  CHECK_THROWS_AS(exact_div(BigInt(85), 12), std::logic_error);
}

}  // TEST_SUITE
