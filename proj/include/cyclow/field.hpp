#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cyclow/fpoly.hpp"

namespace cyclow {

/* GF(p^m) with exact arithmetic. Elements are packed base-p encodings of
 * their polynomial-basis coefficient vectors: value sum c_i * p^i with
 * c_i in [0, p). The multiplicative generator gamma is the residue class
 * of x modulo the (primitive) modulus polynomial.
 *
 * Log/exp tables are built when q <= kTableLimit; beyond that, arithmetic
 * falls back to polynomial computation and discrete logarithms are
 * unavailable. A Field is immutable after construction and cheap to copy
 * (copies share the table storage), so sharing across threads is safe. */
class Field {
 public:
  using Repr = std::uint64_t;
  static constexpr std::int64_t kTableLimit = std::int64_t{1} << 20;

  /* Default modulus: the primitive degree-m polynomial whose non-leading
   * coefficient vector (c_0, ..., c_{m-1}) has the smallest base-p packed
   * encoding. Deterministic across runs. */
  Field(std::int64_t p, int m);
  Field(std::int64_t p, int m, const FpPoly& modulus);
  Field(std::int64_t p, int m, const std::vector<std::int64_t>& modulus_coeffs);

  std::int64_t characteristic() const;
  int extension_degree() const;
  std::int64_t order() const;  // q = p^m
  const FpPoly& modulus() const;
  bool has_tables() const;
  bool same(const Field& other) const;

  /* Raw operations on packed representations. These skip the cross-field
   * checks and are the hot path for the enumeration kernels; the checked
   * FieldElement wrappers below layer validation on top. */
  Repr add(Repr a, Repr b) const;
  Repr sub(Repr a, Repr b) const;
  Repr neg(Repr a) const;
  Repr mul(Repr a, Repr b) const;
  Repr inv(Repr a) const;                 // throws on zero
  Repr pow(Repr a, std::uint64_t e) const;  // exponent reduced mod q-1; 0^0 = 1
  Repr exp(std::int64_t i) const;           // gamma^i, any sign of i
  std::int64_t log(Repr a) const;  // in [0, q-2]; throws on zero or no tables

  Repr generator_repr() const;
  Repr scalar_repr(std::int64_t c) const;  // embed GF(p): c mod p

  /* exp_table()[i] = gamma^i for i in [0, q-2]; empty when !has_tables(). */
  const std::vector<std::uint32_t>& exp_table() const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

/* A field element bound to its field; mixed-field arithmetic throws. */
class FieldElement {
 public:
  FieldElement(Field field, Field::Repr repr);

  const Field& field() const { return field_; }
  Field::Repr repr() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  std::vector<std::int64_t> coeffs() const;  // polynomial basis, length m

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;
  std::int64_t log() const;  // discrete log base gamma

  bool operator==(const FieldElement& other) const;

 private:
  Field field_;
  Field::Repr v_;
};

/* Element factories. */
FieldElement field_zero(const Field& f);
FieldElement field_one(const Field& f);
FieldElement field_generator(const Field& f);
FieldElement field_element(const Field& f, Field::Repr repr);        // repr < q
FieldElement field_from_coeffs(const Field& f,
                               const std::vector<std::int64_t>& coeffs);
FieldElement field_exp(const Field& f, std::int64_t i);  // gamma^i

}  // namespace cyclow
