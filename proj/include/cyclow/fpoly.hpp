#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace cyclow {

class Field;

/* Dense polynomial over GF(p), p prime. Coefficients are stored ascending
 * (index i = coefficient of x^i) and kept normalized: no trailing zeros,
 * every value in [0, p). The zero polynomial has an empty coefficient list
 * and degree() returns the explicit minus-infinity sentinel. */
class FpPoly {
 public:
  static constexpr int kNegInfDegree = std::numeric_limits<int>::min();

  explicit FpPoly(std::int64_t p);  // zero polynomial
  FpPoly(std::int64_t p, std::vector<std::int64_t> coeffs);

  static FpPoly zero(std::int64_t p);
  static FpPoly one(std::int64_t p);
  static FpPoly x(std::int64_t p);
  static FpPoly monomial(std::int64_t p, int deg, std::int64_t c = 1);

  std::int64_t characteristic() const { return p_; }
  int degree() const;
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;
  std::int64_t coeff(int i) const;  // 0 outside the stored range
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  std::int64_t leading_coeff() const;  // throws on the zero polynomial
  FpPoly monic() const;                // unit-normalized; zero stays zero

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator%(const FpPoly& a, const FpPoly& b);
  static std::pair<FpPoly, FpPoly> divmod(const FpPoly& num, const FpPoly& den);

  bool operator==(const FpPoly& other) const = default;

  /* Monic gcd via Euclid; gcd(f, 0) = monic(f). Throws when both are zero. */
  static FpPoly gcd(FpPoly a, FpPoly b);

  /* x^e mod f by square-and-multiply on the exponent bits; never
   * materializes x^e. Requires deg f >= 1. */
  static FpPoly pow_x_mod(std::uint64_t e, const FpPoly& f);

  /* Rabin's criterion: x^(p^m) = x mod f and, for every prime r | m,
   * gcd(x^(p^(m/r)) - x, f) = 1. */
  bool is_irreducible() const;

  std::string to_string() const;  // e.g. "x^4 + x + 1", "2*x + 1", "0"

 private:
  void normalize();
  std::int64_t p_;
  std::vector<std::int64_t> c_;
};

/* Orbit of t under multiplication by p modulo p^g - 1. */
struct CyclotomicCoset {
  std::int64_t p = 0;
  int g = 0;
  std::int64_t modulus = 0;        // p^g - 1
  std::int64_t representative = 0;  // smallest member
  std::vector<std::int64_t> members;  // ascending
};

CyclotomicCoset cyclotomic_coset(std::int64_t p, int g, std::int64_t t);

/* True iff i * p^j = t (mod p^g - 1) for some j, i.e. i lands in the coset
 * after reduction. */
bool coset_membership(std::int64_t i, const CyclotomicCoset& coset);

/* Minimal polynomial over GF(p) of gamma^j, gamma the field's primitive
 * element: the product of (x - gamma^k) over the coset of j mod q-1. */
FpPoly minimal_polynomial(const Field& field, std::int64_t j);

/* 1 + x^t + (1+x)^t over GF(2); its roots outside {0, 1} certify weight-3
 * codewords in the binary codes with zeros gamma and gamma^t. The (1+x)^t
 * factor expands via the binary decomposition of t (char-2 squaring), so
 * t around 10^6 stays cheap. */
FpPoly weight3_poly(std::int64_t t);

}  // namespace cyclow
