#include "cyclow/fpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclow/field.hpp"
#include "cyclow/numeric.hpp"

namespace cyclow {

namespace {

void check_prime(std::int64_t p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("FpPoly: characteristic must be prime");
}

std::int64_t mod_p(std::int64_t v, std::int64_t p) { return ((v % p) + p) % p; }

}  // namespace

FpPoly::FpPoly(std::int64_t p) : p_(p) { check_prime(p); }

FpPoly::FpPoly(std::int64_t p, std::vector<std::int64_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
  check_prime(p);
  for (auto& v : c_) v = mod_p(v, p_);
  normalize();
}

FpPoly FpPoly::zero(std::int64_t p) { return FpPoly(p); }

FpPoly FpPoly::one(std::int64_t p) { return FpPoly(p, {1}); }

FpPoly FpPoly::x(std::int64_t p) { return FpPoly(p, {0, 1}); }

FpPoly FpPoly::monomial(std::int64_t p, int deg, std::int64_t c) {
  if (deg < 0) throw std::invalid_argument("FpPoly: negative monomial degree");
  std::vector<std::int64_t> v(static_cast<std::size_t>(deg) + 1, 0);
  v.back() = c;
  return FpPoly(p, std::move(v));
}

void FpPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int FpPoly::degree() const {
  return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1;
}

bool FpPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

std::int64_t FpPoly::coeff(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

std::int64_t FpPoly::leading_coeff() const {
  if (c_.empty())
    throw std::invalid_argument("FpPoly: zero polynomial has no leading coefficient");
  return c_.back();
}

FpPoly FpPoly::monic() const {
  if (is_zero() || is_monic()) return *this;
  std::int64_t inv = inv_mod(c_.back(), p_);
  FpPoly r(p_);
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    r.c_[i] = static_cast<std::int64_t>(
        mul_mod(static_cast<std::uint64_t>(c_[i]), static_cast<std::uint64_t>(inv),
                static_cast<std::uint64_t>(p_)));
  r.normalize();
  return r;
}

namespace {

void check_same_p(const FpPoly& a, const FpPoly& b) {
  if (a.characteristic() != b.characteristic())
    throw std::invalid_argument("FpPoly: mixed characteristics");
}

}  // namespace

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  check_same_p(a, b);
  std::int64_t p = a.characteristic();
  std::vector<std::int64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = (a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i))) % p;
  return FpPoly(p, std::move(c));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  check_same_p(a, b);
  std::int64_t p = a.characteristic();
  std::vector<std::int64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = mod_p(a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i)), p);
  return FpPoly(p, std::move(c));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  check_same_p(a, b);
  std::int64_t p = a.characteristic();
  if (a.is_zero() || b.is_zero()) return FpPoly(p);
  std::vector<std::int64_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    std::int64_t ai = a.coeffs()[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      std::int64_t bj = b.coeffs()[j];
      if (bj == 0) continue;
      c[i + j] = static_cast<std::int64_t>(
          (static_cast<unsigned __int128>(c[i + j]) +
           static_cast<unsigned __int128>(ai) * static_cast<unsigned __int128>(bj)) %
          static_cast<unsigned __int128>(p));
    }
  }
  return FpPoly(p, std::move(c));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& num, const FpPoly& den) {
  check_same_p(num, den);
  std::int64_t p = num.characteristic();
  if (den.is_zero()) throw std::invalid_argument("FpPoly: division by zero polynomial");
  if (num.degree() < den.degree()) return {FpPoly(p), num};
  std::int64_t lead_inv = inv_mod(den.leading_coeff(), p);
  std::vector<std::int64_t> rem = num.coeffs();
  std::vector<std::int64_t> quo(rem.size() - den.coeffs().size() + 1, 0);
  for (std::size_t k = quo.size(); k-- > 0;) {
    std::int64_t top = rem[k + den.coeffs().size() - 1];
    if (top == 0) continue;
    std::int64_t q = static_cast<std::int64_t>(
        mul_mod(static_cast<std::uint64_t>(top), static_cast<std::uint64_t>(lead_inv),
                static_cast<std::uint64_t>(p)));
    quo[k] = q;
    for (std::size_t i = 0; i < den.coeffs().size(); ++i) {
      std::int64_t sub = static_cast<std::int64_t>(
          mul_mod(static_cast<std::uint64_t>(q),
                  static_cast<std::uint64_t>(den.coeffs()[i]),
                  static_cast<std::uint64_t>(p)));
      rem[k + i] = mod_p(rem[k + i] - sub, p);
    }
  }
  return {FpPoly(p, std::move(quo)), FpPoly(p, std::move(rem))};
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return FpPoly::divmod(a, b).second; }

FpPoly FpPoly::gcd(FpPoly a, FpPoly b) {
  check_same_p(a, b);
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("FpPoly: gcd of two zero polynomials");
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly FpPoly::pow_x_mod(std::uint64_t e, const FpPoly& f) {
  if (f.degree() < 1)
    throw std::invalid_argument("FpPoly: pow_x_mod needs a modulus of degree >= 1");
  FpPoly r = FpPoly::one(f.characteristic()) % f;
  FpPoly base = FpPoly::x(f.characteristic()) % f;
  while (e > 0) {
    if (e & 1) r = (r * base) % f;
    base = (base * base) % f;
    e >>= 1;
  }
  return r;
}

bool FpPoly::is_irreducible() const {
  int m = degree();
  if (m < 1) return false;
  FpPoly f = monic();
  std::uint64_t p = static_cast<std::uint64_t>(p_);
  auto p_power = [p](int k) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r *= p;
    return r;
  };
  FpPoly xp = FpPoly::x(p_) % f;
  if (pow_x_mod(p_power(m), f) != xp) return false;
  for (std::uint64_t r : prime_factors(static_cast<std::uint64_t>(m))) {
    FpPoly h = pow_x_mod(p_power(m / static_cast<int>(r)), f) - xp;
    if (h.is_zero() || gcd(h, f).degree() != 0) return false;
  }
  return true;
}

std::string FpPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    std::int64_t c = coeff(i);
    if (c == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + "*";
      s += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  return s;
}

CyclotomicCoset cyclotomic_coset(std::int64_t p, int g, std::int64_t t) {
  check_prime(p);
  if (g < 1) throw std::invalid_argument("cyclotomic_coset: exponent g must be >= 1");
  std::int64_t modulus = 1;
  for (int i = 0; i < g; ++i) {
    if (modulus > (std::int64_t{1} << 62) / p)
      throw std::invalid_argument("cyclotomic_coset: p^g too large");
    modulus *= p;
  }
  modulus -= 1;
  CyclotomicCoset coset;
  coset.p = p;
  coset.g = g;
  coset.modulus = modulus;
  std::int64_t start = mod_p(t, modulus);
  std::int64_t cur = start;
  do {
    coset.members.push_back(cur);
    cur = static_cast<std::int64_t>(
        mul_mod(static_cast<std::uint64_t>(cur), static_cast<std::uint64_t>(p),
                static_cast<std::uint64_t>(modulus)));
  } while (cur != start);
  std::sort(coset.members.begin(), coset.members.end());
  coset.representative = coset.members.front();
  return coset;
}

bool coset_membership(std::int64_t i, const CyclotomicCoset& coset) {
  std::int64_t r = mod_p(i, coset.modulus);
  return std::binary_search(coset.members.begin(), coset.members.end(), r);
}

FpPoly minimal_polynomial(const Field& field, std::int64_t j) {
  std::int64_t p = field.characteristic();
  CyclotomicCoset coset = cyclotomic_coset(p, field.extension_degree(), j);
  // Product of (x - gamma^k) over the coset, computed with coefficients in
  // the extension field; the result must land in the base field.
  std::vector<std::uint64_t> c = {1};  // starts as the constant polynomial 1
  for (std::int64_t k : coset.members) {
    std::uint64_t root = field.exp(k);
    std::vector<std::uint64_t> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] = field.add(next[i + 1], c[i]);                      // x * c
      next[i] = field.add(next[i], field.mul(field.neg(root), c[i]));  // -root * c
    }
    c = std::move(next);
  }
  std::vector<std::int64_t> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= static_cast<std::uint64_t>(p))
      throw std::logic_error("minimal_polynomial: coefficient outside the base field");
    out[i] = static_cast<std::int64_t>(c[i]);
  }
  return FpPoly(p, std::move(out));
}

FpPoly weight3_poly(std::int64_t t) {
  if (t < 1) throw std::invalid_argument("weight3_poly: t must be >= 1");
  // (1+x)^t over GF(2) as a product of (1 + x^(2^i)) over the set bits of t;
  // each factor is a shifted xor, so the whole expansion is O(t log t) bits.
  std::size_t size = static_cast<std::size_t>(t) + 1;
  std::vector<std::int64_t> acc(size, 0);
  acc[0] = 1;
  std::size_t deg = 0;  // current degree of the partial product
  for (int bit = 0; bit < 63; ++bit) {
    if (!(t & (std::int64_t{1} << bit))) continue;
    std::size_t shift = std::size_t{1} << bit;
    for (std::size_t i = deg + 1; i-- > 0;) acc[i + shift] ^= acc[i];
    deg += shift;
  }
  acc[0] ^= 1;                            // + 1
  acc[static_cast<std::size_t>(t)] ^= 1;  // + x^t
  return FpPoly(2, std::move(acc));
}

}  // namespace cyclow
