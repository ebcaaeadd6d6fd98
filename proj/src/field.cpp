#include "cyclow/field.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "cyclow/numeric.hpp"

namespace cyclow {

namespace {

constexpr std::int64_t kMaxOrder = std::int64_t{1} << 62;

using Digits = std::array<std::int64_t, 64>;

}  // namespace

struct Field::Data {
  std::int64_t p = 0;
  int m = 0;
  std::int64_t q = 0;  // p^m
  std::int64_t n = 0;  // q - 1, the multiplicative order
  FpPoly modulus{2};
  std::vector<std::int64_t> mod_digits;  // non-leading coefficients, length m
  std::vector<std::int64_t> p_pows;      // p^0 .. p^m
  Repr generator = 0;
  std::vector<std::uint32_t> exp;  // gamma^i, size n; empty when q > kTableLimit
  std::vector<std::uint32_t> log;  // inverse of exp, log[0] = sentinel

  void unpack(Repr v, Digits& d) const {
    for (int i = 0; i < m; ++i) {
      d[static_cast<std::size_t>(i)] =
          static_cast<std::int64_t>(v % static_cast<std::uint64_t>(p));
      v /= static_cast<std::uint64_t>(p);
    }
  }

  Repr pack(const Digits& d) const {
    Repr v = 0;
    for (int i = m; i-- > 0;)
      v = v * static_cast<std::uint64_t>(p) +
          static_cast<std::uint64_t>(d[static_cast<std::size_t>(i)]);
    return v;
  }

  Repr add_raw(Repr a, Repr b) const {
    if (p == 2) return a ^ b;
    Repr r = 0;
    for (int i = 0; i < m; ++i) {
      std::uint64_t da = a % static_cast<std::uint64_t>(p);
      std::uint64_t db = b % static_cast<std::uint64_t>(p);
      r += (da + db) % static_cast<std::uint64_t>(p) *
           static_cast<std::uint64_t>(p_pows[static_cast<std::size_t>(i)]);
      a /= static_cast<std::uint64_t>(p);
      b /= static_cast<std::uint64_t>(p);
    }
    return r;
  }

  Repr neg_raw(Repr a) const {
    if (p == 2) return a;
    Repr r = 0;
    for (int i = 0; i < m; ++i) {
      std::uint64_t da = a % static_cast<std::uint64_t>(p);
      r += (static_cast<std::uint64_t>(p) - da) % static_cast<std::uint64_t>(p) *
           static_cast<std::uint64_t>(p_pows[static_cast<std::size_t>(i)]);
      a /= static_cast<std::uint64_t>(p);
    }
    return r;
  }

  /* Schoolbook product of the digit vectors reduced by the monic modulus.
   * Used when tables are absent and while the tables are being built. */
  Repr mul_raw(Repr a, Repr b) const {
    if (a == 0 || b == 0) return 0;
    Digits da{}, db{};
    unpack(a, da);
    unpack(b, db);
    std::array<std::int64_t, 127> prod{};
    std::uint64_t up = static_cast<std::uint64_t>(p);
    for (int i = 0; i < m; ++i) {
      if (da[static_cast<std::size_t>(i)] == 0) continue;
      std::uint64_t ai = static_cast<std::uint64_t>(da[static_cast<std::size_t>(i)]);
      for (int j = 0; j < m; ++j) {
        if (db[static_cast<std::size_t>(j)] == 0) continue;
        std::size_t k = static_cast<std::size_t>(i + j);
        prod[k] = static_cast<std::int64_t>(
            (static_cast<std::uint64_t>(prod[k]) +
             mul_mod(ai, static_cast<std::uint64_t>(db[static_cast<std::size_t>(j)]),
                     up)) %
            up);
      }
    }
    for (int k = 2 * m - 2; k >= m; --k) {
      std::int64_t d = prod[static_cast<std::size_t>(k)];
      if (d == 0) continue;
      prod[static_cast<std::size_t>(k)] = 0;
      for (int i = 0; i < m; ++i) {
        std::uint64_t sub = mul_mod(static_cast<std::uint64_t>(d),
                                    static_cast<std::uint64_t>(
                                        mod_digits[static_cast<std::size_t>(i)]),
                                    up);
        std::size_t idx = static_cast<std::size_t>(k - m + i);
        prod[idx] = static_cast<std::int64_t>(
            (static_cast<std::uint64_t>(prod[idx]) + up - sub) % up);
      }
    }
    Digits out{};
    for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] = prod[static_cast<std::size_t>(i)];
    return pack(out);
  }

  Repr pow_raw(Repr a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    e %= static_cast<std::uint64_t>(n);
    if (!exp.empty()) {
      std::uint64_t la = static_cast<std::uint64_t>(log_raw(a));
      return exp[static_cast<std::size_t>(mul_mod(la, e, static_cast<std::uint64_t>(n)))];
    }
    Repr r = 1, base = a;
    while (e > 0) {
      if (e & 1) r = mul_raw(r, base);
      base = mul_raw(base, base);
      e >>= 1;
    }
    return r;
  }

  std::int64_t log_raw(Repr a) const {
    if (a == 0) throw std::invalid_argument("Field: discrete log of zero");
    if (exp.empty())
      throw std::invalid_argument(
          "Field: discrete logs need log/exp tables (order exceeds table limit)");
    return static_cast<std::int64_t>(log[static_cast<std::size_t>(a)]);
  }
};

namespace {

void validate_pm(std::int64_t p, int m) {
  if (!is_prime(static_cast<std::uint64_t>(p < 0 ? 0 : p)))
    throw std::invalid_argument("Field: characteristic must be prime");
  if (m < 1) throw std::invalid_argument("Field: extension degree must be >= 1");
}

std::int64_t checked_order(std::int64_t p, int m) {
  std::int64_t q = 1;
  for (int i = 0; i < m; ++i) {
    if (q > kMaxOrder / p)
      throw std::invalid_argument("Field: order p^m exceeds the supported range");
    q *= p;
  }
  return q;
}

/* Order of x modulo f is exactly q - 1. Assumes f irreducible. */
bool x_is_primitive(const FpPoly& f, std::int64_t q,
                    const std::vector<std::uint64_t>& n_factors) {
  FpPoly one = FpPoly::one(f.characteristic());
  if (q == 2) return true;  // trivial group
  if (FpPoly::pow_x_mod(static_cast<std::uint64_t>(q - 1), f) != one) return false;
  for (std::uint64_t r : n_factors) {
    std::uint64_t e = static_cast<std::uint64_t>(q - 1) / r;
    if (FpPoly::pow_x_mod(e, f) == one) return false;
  }
  return true;
}

FpPoly default_modulus(std::int64_t p, int m, std::int64_t q,
                       const std::vector<std::uint64_t>& n_factors) {
  // Scan non-leading coefficient vectors in ascending packed order; the
  // first primitive hit is the canonical modulus for (p, m).
  for (std::int64_t v = 1; v < q; ++v) {
    if (v % p == 0) continue;  // zero constant term cannot be primitive
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(m) + 1, 0);
    std::int64_t rest = v;
    for (int i = 0; i < m; ++i) {
      coeffs[static_cast<std::size_t>(i)] = rest % p;
      rest /= p;
    }
    coeffs[static_cast<std::size_t>(m)] = 1;
    FpPoly f(p, std::move(coeffs));
    if (!f.is_irreducible()) continue;
    if (x_is_primitive(f, q, n_factors)) return f;
  }
  throw std::logic_error("Field: no primitive polynomial found");  // unreachable
}

}  // namespace

Field::Field(std::int64_t p, int m) : Field(p, m, std::vector<std::int64_t>{}) {}

Field::Field(std::int64_t p, int m, const FpPoly& modulus)
    : Field(p, m, modulus.coeffs()) {}

Field::Field(std::int64_t p, int m, const std::vector<std::int64_t>& modulus_coeffs) {
  validate_pm(p, m);
  std::int64_t q = checked_order(p, m);
  auto n_factors = prime_factors(static_cast<std::uint64_t>(q - 1));

  auto data = std::make_shared<Data>();
  data->p = p;
  data->m = m;
  data->q = q;
  data->n = q - 1;

  if (modulus_coeffs.empty()) {
    data->modulus = default_modulus(p, m, q, n_factors);
  } else {
    FpPoly f(p, modulus_coeffs);
    if (f.degree() != m)
      throw std::invalid_argument("Field: modulus degree must equal m");
    if (!f.is_monic()) throw std::invalid_argument("Field: modulus must be monic");
    if (!f.is_irreducible())
      throw std::invalid_argument("Field: modulus is reducible");
    if (!x_is_primitive(f, q, n_factors))
      throw std::invalid_argument(
          "Field: modulus is irreducible but x is not a primitive element");
    data->modulus = f;
  }

  data->mod_digits.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    data->mod_digits[static_cast<std::size_t>(i)] = data->modulus.coeff(i);

  data->p_pows.resize(static_cast<std::size_t>(m) + 1);
  data->p_pows[0] = 1;
  for (int i = 1; i <= m; ++i)
    data->p_pows[static_cast<std::size_t>(i)] =
        data->p_pows[static_cast<std::size_t>(i - 1)] * p;

  if (m >= 2) {
    data->generator = static_cast<Repr>(p);
  } else {
    // x reduces to -c_0 in the degree-1 case.
    data->generator = static_cast<Repr>(((p - data->modulus.coeff(0)) % p + p) % p);
  }

  if (q <= kTableLimit) {
    data->exp.resize(static_cast<std::size_t>(data->n));
    data->log.assign(static_cast<std::size_t>(q), 0xFFFFFFFFu);
    Repr e = 1;
    for (std::int64_t i = 0; i < data->n; ++i) {
      data->exp[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(e);
      data->log[static_cast<std::size_t>(e)] = static_cast<std::uint32_t>(i);
      e = data->mul_raw(e, data->generator);
    }
    if (e != 1)
      throw std::logic_error("Field: generator order check failed after table build");
  }

  d_ = std::move(data);
}

std::int64_t Field::characteristic() const { return d_->p; }
int Field::extension_degree() const { return d_->m; }
std::int64_t Field::order() const { return d_->q; }
const FpPoly& Field::modulus() const { return d_->modulus; }
bool Field::has_tables() const { return !d_->exp.empty(); }

bool Field::same(const Field& other) const {
  return d_ == other.d_ ||
         (d_->p == other.d_->p && d_->m == other.d_->m &&
          d_->modulus == other.d_->modulus);
}

Field::Repr Field::add(Repr a, Repr b) const { return d_->add_raw(a, b); }
Field::Repr Field::sub(Repr a, Repr b) const { return d_->add_raw(a, d_->neg_raw(b)); }
Field::Repr Field::neg(Repr a) const { return d_->neg_raw(a); }

Field::Repr Field::mul(Repr a, Repr b) const {
  if (a == 0 || b == 0) return 0;
  if (!d_->exp.empty()) {
    std::int64_t s = d_->log_raw(a) + d_->log_raw(b);
    if (s >= d_->n) s -= d_->n;
    return d_->exp[static_cast<std::size_t>(s)];
  }
  return d_->mul_raw(a, b);
}

Field::Repr Field::inv(Repr a) const {
  if (a == 0) throw std::invalid_argument("Field: inversion of zero");
  if (!d_->exp.empty()) {
    std::int64_t l = d_->log_raw(a);
    return d_->exp[static_cast<std::size_t>(l == 0 ? 0 : d_->n - l)];
  }
  return d_->pow_raw(a, static_cast<std::uint64_t>(d_->q - 2));
}

Field::Repr Field::pow(Repr a, std::uint64_t e) const { return d_->pow_raw(a, e); }

Field::Repr Field::exp(std::int64_t i) const {
  std::int64_t n = d_->n;
  std::int64_t r = ((i % n) + n) % n;
  if (!d_->exp.empty()) return d_->exp[static_cast<std::size_t>(r)];
  return d_->pow_raw(d_->generator, static_cast<std::uint64_t>(r));
}

std::int64_t Field::log(Repr a) const { return d_->log_raw(a); }

Field::Repr Field::generator_repr() const { return d_->generator; }

Field::Repr Field::scalar_repr(std::int64_t c) const {
  return static_cast<Repr>(((c % d_->p) + d_->p) % d_->p);
}

const std::vector<std::uint32_t>& Field::exp_table() const { return d_->exp; }

namespace {

void check_same_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field().same(b.field()))
    throw std::invalid_argument("FieldElement: operands from different fields");
}

}  // namespace

FieldElement::FieldElement(Field field, Field::Repr repr)
    : field_(std::move(field)), v_(repr) {
  if (repr >= static_cast<Field::Repr>(field_.order()))
    throw std::invalid_argument("FieldElement: representation out of range");
}

std::vector<std::int64_t> FieldElement::coeffs() const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(field_.extension_degree()));
  Field::Repr v = v_;
  std::uint64_t p = static_cast<std::uint64_t>(field_.characteristic());
  for (auto& c : out) {
    c = static_cast<std::int64_t>(v % p);
    v /= p;
  }
  return out;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  return FieldElement(a.field(), a.field().add(a.repr(), b.repr()));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  return FieldElement(a.field(), a.field().sub(a.repr(), b.repr()));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  return FieldElement(a.field(), a.field().mul(a.repr(), b.repr()));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  return FieldElement(a.field(), a.field().mul(a.repr(), a.field().inv(b.repr())));
}

FieldElement FieldElement::operator-() const {
  return FieldElement(field_, field_.neg(v_));
}

FieldElement FieldElement::inv() const { return FieldElement(field_, field_.inv(v_)); }

FieldElement FieldElement::pow(std::uint64_t e) const {
  return FieldElement(field_, field_.pow(v_, e));
}

std::int64_t FieldElement::log() const { return field_.log(v_); }

bool FieldElement::operator==(const FieldElement& other) const {
  return field_.same(other.field_) && v_ == other.v_;
}

FieldElement field_zero(const Field& f) { return FieldElement(f, 0); }
FieldElement field_one(const Field& f) { return FieldElement(f, 1); }
FieldElement field_generator(const Field& f) {
  return FieldElement(f, f.generator_repr());
}

FieldElement field_element(const Field& f, Field::Repr repr) {
  return FieldElement(f, repr);
}

FieldElement field_from_coeffs(const Field& f, const std::vector<std::int64_t>& coeffs) {
  if (coeffs.size() > static_cast<std::size_t>(f.extension_degree()))
    throw std::invalid_argument("field_from_coeffs: too many coefficients");
  Field::Repr v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    std::int64_t c = coeffs[i];
    if (c < 0 || c >= f.characteristic())
      throw std::invalid_argument("field_from_coeffs: coefficient out of range");
    v = v * static_cast<std::uint64_t>(f.characteristic()) + static_cast<std::uint64_t>(c);
  }
  return FieldElement(f, v);
}

FieldElement field_exp(const Field& f, std::int64_t i) {
  return FieldElement(f, f.exp(i));
}

}  // namespace cyclow
