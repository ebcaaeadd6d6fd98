#include "cyclow/numeric.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cyclow {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t r = 1;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set decides primality exactly for n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
  if ((n & 1) == 0) return 2;
  // Deterministic parameter sweep; each (c, x0) pair gives Brent's cycle walk.
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    auto step = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      std::uint64_t diff = x > y ? x - y : y - x;
      if (diff == 0) break;  // cycle without factor; try next c
      d = std::gcd(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  while (n > 1) {
    if (is_prime(n)) {
      out.push_back(n);
      return;
    }
    // Peel small primes first; rho handles the large cofactors.
    bool found = false;
    for (std::uint64_t p = 2; p * p <= n && p < 1000; p = p + 1 + (p & 1)) {
      if (n % p == 0) {
        out.push_back(p);
        while (n % p == 0) n /= p;
        found = true;
        break;
      }
    }
    if (found) continue;
    std::uint64_t d = pollard_rho(n);
    factor_into(d, out);
    while (n % d == 0) n /= d;
  }
}

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("inv_mod: modulus must be positive");
  std::int64_t r0 = n, r1 = ((a % n) + n) % n;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t qt = r0 / r1;
    r0 -= qt * r1;
    std::swap(r0, r1);
    s0 -= qt * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1)
    throw std::invalid_argument("inv_mod: argument not coprime to modulus");
  return ((s0 % n) + n) % n;
}

}  // namespace cyclow
