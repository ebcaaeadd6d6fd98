#include <cstdint>
#include <stdexcept>

#include "doctest.h"

#include "cyclow/numeric.hpp"

using namespace cyclow;

TEST_SUITE("numeric") {

TEST_CASE("mul_mod handles products past 64 bits") {
  CHECK(mul_mod(3, 4, 5) == 2);
  CHECK(mul_mod(0, 12345, 7) == 0);
  const std::uint64_t big = 0x3FFFFFFFFFFFFFFFull;  // 2^62 - 1
  CHECK(mul_mod(big, big, big + 1) == 1);           // (-1)*(-1) mod 2^62
  CHECK(mul_mod(big - 1, big, 2147483647ull) ==
        ((big - 1) % 2147483647ull) * (big % 2147483647ull) % 2147483647ull);
}

TEST_CASE("pow_mod basics and Fermat") {
  CHECK(pow_mod(2, 10, 10000) == 1024);
  CHECK(pow_mod(5, 0, 7) == 1);
  CHECK(pow_mod(0, 5, 7) == 0);
  CHECK(pow_mod(3, 2147483646, 2147483647) == 1);  // 2^31-1 is prime
}

TEST_CASE("is_prime on knowns") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(4));
  CHECK(is_prime(31));
  CHECK_FALSE(is_prime(561));   // Carmichael
  CHECK_FALSE(is_prime(4033));  // base-2 Fermat pseudoprime
  CHECK(is_prime(2147483647ull));
  CHECK_FALSE(is_prime(2147483647ull * 2147483647ull));
  CHECK(is_prime(18446744073709551557ull));  // largest 64-bit prime
}

TEST_CASE("prime_factors returns distinct sorted primes") {
  CHECK(prime_factors(1).empty());
  CHECK(prime_factors(2) == std::vector<std::uint64_t>{2});
  CHECK(prime_factors(720) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(prime_factors(2147483647ull) == std::vector<std::uint64_t>{2147483647ull});
  // 2^31 - 2 = 2 * 3^2 * 7 * 11 * 31 * 151 * 331
  CHECK(prime_factors(2147483646ull) ==
        std::vector<std::uint64_t>{2, 3, 7, 11, 31, 151, 331});
  CHECK(prime_factors(1000003ull * 1000033ull) ==
        std::vector<std::uint64_t>{1000003, 1000033});
  CHECK(prime_factors(1ull << 40) == std::vector<std::uint64_t>{2});
}

TEST_CASE("inv_mod inverts exactly the units") {
  for (std::uint64_t a = 1; a < 15; ++a) {
    if (a % 3 == 0 || a % 5 == 0) {
      CHECK_THROWS_AS(inv_mod(a, 15), std::invalid_argument);
    } else {
      const std::uint64_t inv = inv_mod(a, 15);
      CHECK(inv < 15);
      CHECK(mul_mod(a, inv, 15) == 1);
    }
  }
  CHECK(inv_mod(1, 2) == 1);
  CHECK(mul_mod(inv_mod(123456789, 2147483647ull), 123456789, 2147483647ull) == 1);
  CHECK_THROWS_AS(inv_mod(0, 7), std::invalid_argument);
}

}  // TEST_SUITE
