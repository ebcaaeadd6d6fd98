#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>

namespace cyclow {

/* All codeword and solution counts are exact; they outgrow 64 bits quickly
 * (binomials with n around the field order), so arbitrary precision is used
 * everywhere results are reported. */
using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

/* C(n, k) for possibly huge n and small k; 0 when k < 0 or k > n. */
inline BigInt binomial(const BigInt& n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  BigInt r = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact: product of j consecutive integers is divisible by j!
  }
  return r;
}

/* Exact division; a remainder signals a broken closed-form invariant. */
inline BigInt exact_div(const BigInt& num, const BigInt& den) {
  if (den == 0 || num % den != 0)
    throw std::logic_error("exact_div: non-integral quotient");
  return num / den;
}

}  // namespace cyclow
