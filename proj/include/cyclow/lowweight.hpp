#pragma once

#include <cstdint>
#include <vector>

#include "cyclow/bigint.hpp"
#include "cyclow/cyclic.hpp"

namespace cyclow {

/* gcd(q-1, t_1(p-1), t_2-t_1, ..., t_s-t_1) over the code's canonical
 * exponents. The code has weight-2 words iff this exceeds 1. */
std::int64_t weight2_gcd(const CyclicCode& code);

/* Exact number of weight-2 codewords: (p-1)(q-1)(weight2_gcd - 1)/2. */
BigInt a2_count(const CyclicCode& code);

/* Lower bound on the number of weight-3 codewords for codes whose
 * exponents all lie in the coset of t modulo p^g - 1 but in pairwise
 * distinct cosets modulo p^m - 1. Requires p odd, g | m, at least two
 * exponents, t nonzero mod p^g - 1 and invertible there. The bound is
 * (p-1)(p^m-1)/6 * ((p-1)^2 (p^g - 2) - (p-2)(3p-5)). */
BigInt a3_lower_bound(std::int64_t p, int m, int g, std::int64_t t,
                      const std::vector<std::int64_t>& exponents);

/* One constructed weight-3 codeword: 1 + a x^{e1} + b x^{e2}, derived from
 * 1 + a beta^i + b beta^j = 0 with beta the order-(p^g - 1) subgroup
 * generator gamma^u, u = (p^m-1)/(p^g-1). */
struct Weight3Witness {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t i = 0;
  std::int64_t j = 0;
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;
  Codeword codeword;
};

/* Every witness tuple behind the a3_lower_bound count, deduplicated:
 * (a,b,i,j) and (b,a,j,i) describe one codeword and the lexicographically
 * smaller tuple is kept. Each returned codeword is membership-checked.
 * The field must carry log/exp tables. */
std::vector<Weight3Witness> weight3_witnesses(const Field& field, int g,
                                              std::int64_t t,
                                              const std::vector<std::int64_t>& exponents);
std::vector<Weight3Witness> weight3_witnesses(std::int64_t p, int m, int g,
                                              std::int64_t t,
                                              const std::vector<std::int64_t>& exponents);

/* gcd(1 + x^t + (1+x)^t, x^q + x) over GF(2), computed by reducing x^q
 * with pow_x_mod so q around 2^31 never materializes x^q + x. */
FpPoly weight3_poly_gcd(const Field& field, std::int64_t t);

/* Binary codes with zeros gamma and gamma^t: weight-3 words exist iff the
 * gcd above has degree > 2 (the factor x(x+1) is always present). */
bool has_weight3_c1t(const Field& field, std::int64_t t);

/* Exact weight-3 count for the same codes: (q-1)(deg gcd - 2)/6. */
BigInt a3_count_c1t(const Field& field, std::int64_t t);

/* Sufficient test needing no field arithmetic: with q = 2^m, m >= 2 and
 * t >= 3, the code with zeros gamma and gamma^t has no weight-3 words
 * whenever t < r + 3 for every prime factor r of m. */
bool easy_no_weight3(int m, std::int64_t t);

}  // namespace cyclow
