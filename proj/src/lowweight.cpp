#include "cyclow/lowweight.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "cyclow/numeric.hpp"

namespace cyclow {

std::int64_t weight2_gcd(const CyclicCode& code) {
  const auto& exps = code.exponents();
  std::int64_t n = code.length();
  std::int64_t p = code.field().characteristic();
  // gcd(n, t1 (p-1)) = gcd(n, t1 (p-1) mod n), dodging the 64-bit overflow
  std::int64_t d = std::gcd(
      n, static_cast<std::int64_t>(mul_mod(static_cast<std::uint64_t>(exps[0]),
                                           static_cast<std::uint64_t>(p - 1),
                                           static_cast<std::uint64_t>(n))));
  for (std::size_t k = 1; k < exps.size(); ++k)
    d = std::gcd(d, exps[k] - exps[0]);
  return d;
}

BigInt a2_count(const CyclicCode& code) {
  std::int64_t p = code.field().characteristic();
  BigInt num = BigInt(p - 1) * code.length() * (weight2_gcd(code) - 1);
  return exact_div(num, 2);
}

namespace {

std::int64_t power_check(std::int64_t p, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (std::int64_t{1} << 62) / p)
      throw std::invalid_argument("a3 bound: p^m exceeds the supported range");
    r *= p;
  }
  return r;
}

/* Shared validation for the weight-3 bound and its witness construction.
 * Returns p^g - 1. */
std::int64_t validate_weight3_params(std::int64_t p, int m, int g, std::int64_t t,
                                     const std::vector<std::int64_t>& exponents) {
  if (p == 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("a3 bound: p must be an odd prime");
  if (m < 1 || g < 1 || m % g != 0)
    throw std::invalid_argument("a3 bound: g must divide m");
  if (exponents.size() < 2)
    throw std::invalid_argument("a3 bound: at least two exponents required");
  if (g == m)
    throw std::invalid_argument(
        "a3 bound: g = m cannot put two exponents in one coset mod p^g-1 "
        "and distinct cosets mod p^m-1");
  std::int64_t pg1 = power_check(p, g) - 1;
  std::int64_t tr = ((t % pg1) + pg1) % pg1;
  if (tr == 0)
    throw std::invalid_argument("a3 bound: t must be nonzero mod p^g-1");
  if (std::gcd(tr, pg1) != 1)
    throw std::invalid_argument("a3 bound: t must be invertible mod p^g-1");
  CyclotomicCoset sub = cyclotomic_coset(p, g, tr);
  for (std::int64_t e : exponents) {
    if (!coset_membership(e, sub))
      throw std::invalid_argument("a3 bound: exponent " + std::to_string(e) +
                                  " is outside the coset of t mod p^g-1");
  }
  std::vector<std::int64_t> reps;
  for (std::int64_t e : exponents) {
    std::int64_t rep = cyclotomic_coset(p, m, e).representative;
    for (std::int64_t seen : reps) {
      if (seen == rep)
        throw std::invalid_argument(
            "a3 bound: two exponents share a coset mod p^m-1");
    }
    reps.push_back(rep);
  }
  return pg1;
}

/* (p-1)^2 (p^g - 2) - (p-2)(3p - 5): twice the number of distinct witness
 * tuples after the three exception classes are removed. */
BigInt witness_pair_count(std::int64_t p, std::int64_t pg1) {
  return BigInt(p - 1) * (p - 1) * (pg1 - 1) - BigInt(p - 2) * (3 * p - 5);
}

}  // namespace

BigInt a3_lower_bound(std::int64_t p, int m, int g, std::int64_t t,
                      const std::vector<std::int64_t>& exponents) {
  std::int64_t pg1 = validate_weight3_params(p, m, g, t, exponents);
  std::int64_t qm1 = power_check(p, m) - 1;
  BigInt bound = BigInt(p - 1) * qm1 * witness_pair_count(p, pg1);
  if (bound < 0) throw std::logic_error("a3_lower_bound: negative bound");
  return exact_div(bound, 6);
}

std::vector<Weight3Witness> weight3_witnesses(
    const Field& field, int g, std::int64_t t,
    const std::vector<std::int64_t>& exponents) {
  std::int64_t p = field.characteristic();
  int m = field.extension_degree();
  std::int64_t pg1 = validate_weight3_params(p, m, g, t, exponents);
  if (!field.has_tables())
    throw std::invalid_argument(
        "weight3_witnesses: discrete logs need log/exp tables");
  std::int64_t n = field.order() - 1;
  std::uint64_t un = static_cast<std::uint64_t>(n);
  std::int64_t u = n / pg1;
  std::int64_t t_inv = inv_mod(((t % pg1) + pg1) % pg1, pg1);
  CyclicCode code(field, exponents);

  std::vector<Weight3Witness> out;
  for (std::int64_t a = 1; a < p; ++a) {
    for (std::int64_t b = 1; b < p; ++b) {
      Field::Repr b_inv = field.inv(field.scalar_repr(b));
      for (std::int64_t i = 1; i < pg1; ++i) {
        Field::Repr beta_i = field.exp(static_cast<std::int64_t>(
            mul_mod(static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(i), un)));
        Field::Repr lhs = field.add(1, field.mul(field.scalar_repr(a), beta_i));
        Field::Repr rhs = field.neg(lhs);
        if (rhs == 0) continue;  // no j solves the equation
        std::int64_t full_log = field.log(field.mul(b_inv, rhs));
        if (full_log % u != 0)
          throw std::logic_error("weight3_witnesses: solution left the subgroup");
        std::int64_t j = full_log / u;
        if (j == 0 || j == i) continue;  // degenerate: fewer than three terms
        if (std::tuple(a, b, i, j) > std::tuple(b, a, j, i)) continue;  // mirror
        Weight3Witness w;
        w.a = a;
        w.b = b;
        w.i = i;
        w.j = j;
        w.e1 = u * static_cast<std::int64_t>(
                       mul_mod(static_cast<std::uint64_t>(i),
                               static_cast<std::uint64_t>(t_inv),
                               static_cast<std::uint64_t>(pg1)));
        w.e2 = u * static_cast<std::int64_t>(
                       mul_mod(static_cast<std::uint64_t>(j),
                               static_cast<std::uint64_t>(t_inv),
                               static_cast<std::uint64_t>(pg1)));
        w.codeword.assign(static_cast<std::size_t>(n), 0);
        w.codeword[0] = 1;
        w.codeword[static_cast<std::size_t>(w.e1)] = a;
        w.codeword[static_cast<std::size_t>(w.e2)] = b;
        if (!code.contains(w.codeword))
          throw std::logic_error("weight3_witnesses: constructed word not in the code");
        out.push_back(std::move(w));
      }
    }
  }
  if (BigInt(2) * out.size() != witness_pair_count(p, pg1))
    throw std::logic_error("weight3_witnesses: enumeration disagrees with the count");
  return out;
}

std::vector<Weight3Witness> weight3_witnesses(
    std::int64_t p, int m, int g, std::int64_t t,
    const std::vector<std::int64_t>& exponents) {
  return weight3_witnesses(Field(p, m), g, t, exponents);
}

FpPoly weight3_poly_gcd(const Field& field, std::int64_t t) {
  if (field.characteristic() != 2)
    throw std::invalid_argument("weight3 gcd: the field must have characteristic 2");
  if (t < 1) throw std::invalid_argument("weight3 gcd: t must be >= 1");
  CyclicCode code(field, {1, t});  // validates that 1 and t sit in distinct cosets
  (void)code;
  FpPoly u = weight3_poly(t);
  if (u.degree() < 2)
    throw std::logic_error("weight3 gcd: criterion polynomial degenerated");
  FpPoly xq = FpPoly::pow_x_mod(static_cast<std::uint64_t>(field.order()), u);
  return FpPoly::gcd(u, xq + FpPoly::x(2));
}

bool has_weight3_c1t(const Field& field, std::int64_t t) {
  return weight3_poly_gcd(field, t).degree() > 2;
}

BigInt a3_count_c1t(const Field& field, std::int64_t t) {
  int d = weight3_poly_gcd(field, t).degree();
  if (d < 2) throw std::logic_error("a3_count_c1t: gcd lost the x(x+1) factor");
  return exact_div(BigInt(field.order() - 1) * (d - 2), 6);
}

bool easy_no_weight3(int m, std::int64_t t) {
  if (m < 2) throw std::invalid_argument("easy_no_weight3: m must be >= 2");
  if (t < 3) throw std::invalid_argument("easy_no_weight3: t must be >= 3");
  for (std::uint64_t r : prime_factors(static_cast<std::uint64_t>(m))) {
    if (t >= static_cast<std::int64_t>(r) + 3) return false;
  }
  return true;
}

}  // namespace cyclow
