#pragma once

#include <cstdint>
#include <vector>

namespace cyclow {

/* Modular helpers on unsigned 64-bit values; intermediate products go
 * through 128-bit arithmetic, so any modulus < 2^64 is safe. */
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/* Deterministic Miller-Rabin, exact for all n < 2^64. */
bool is_prime(std::uint64_t n);

/* Distinct prime factors, ascending. Pollard rho + Miller-Rabin, so large
 * factors are fine. prime_factors(1) is empty. */
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/* Inverse of a modulo n (n >= 1). Throws std::invalid_argument when
 * gcd(a, n) != 1. Result is in [0, n). */
std::int64_t inv_mod(std::int64_t a, std::int64_t n);

}  // namespace cyclow
