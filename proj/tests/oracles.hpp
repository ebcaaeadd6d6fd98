#pragma once

/* Independent reference implementations used only by the tests. Each one is
 * deliberately naive: correctness over speed, and no shared code paths with
 * the routines they are checking beyond basic arithmetic. */

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "cyclow/bigint.hpp"
#include "cyclow/cyclic.hpp"
#include "cyclow/field.hpp"
#include "cyclow/fpoly.hpp"
#include "cyclow/partitions.hpp"
#include "cyclow/relation.hpp"

namespace oracles {

/* Bell numbers by the Bell triangle. */
inline cyclow::BigInt bell_number(int w) {
  if (w < 0) throw std::invalid_argument("bell_number: negative index");
  std::vector<cyclow::BigInt> row{1};
  for (int i = 0; i < w; ++i) {
    std::vector<cyclow::BigInt> next{row.back()};
    for (const cyclow::BigInt& v : row) {
      next.push_back(next.back() + v);
    }
    row = std::move(next);
  }
  return row.front();
}

/* All polynomials over GF(p) of degree <= max_deg, zero excluded. */
inline std::vector<cyclow::FpPoly> all_polys_upto(std::int64_t p, int max_deg) {
  std::vector<cyclow::FpPoly> out;
  std::vector<std::int64_t> c(static_cast<std::size_t>(max_deg) + 1, 0);
  while (true) {
    std::size_t i = 0;
    while (i < c.size() && c[i] == p - 1) {
      c[i] = 0;
      ++i;
    }
    if (i == c.size()) break;
    ++c[i];
    out.emplace_back(p, c);
  }
  return out;
}

/* Monic common divisors of a and b found by scanning every candidate. */
inline std::vector<cyclow::FpPoly> common_divisors(const cyclow::FpPoly& a,
                                                   const cyclow::FpPoly& b) {
  const int bound = std::min(a.is_zero() ? b.degree() : a.degree(),
                             b.is_zero() ? a.degree() : b.degree());
  std::vector<cyclow::FpPoly> out;
  for (const cyclow::FpPoly& d : all_polys_upto(a.characteristic(), bound)) {
    if (!d.is_monic()) continue;
    if ((a % d).is_zero() && (b % d).is_zero()) {
      out.push_back(d);
    }
  }
  return out;
}

/* Number of roots of poly (over GF(p)) in the extension field, found by
 * evaluating at every element with Horner's rule. */
inline std::int64_t root_count(const cyclow::Field& f, const cyclow::FpPoly& poly) {
  if (poly.characteristic() != f.characteristic()) {
    throw std::invalid_argument("root_count: characteristic mismatch");
  }
  if (poly.is_zero()) throw std::invalid_argument("root_count: zero polynomial");
  std::int64_t count = 0;
  const auto q = static_cast<std::uint64_t>(f.order());
  for (std::uint64_t x = 0; x < q; ++x) {
    cyclow::Field::Repr acc = 0;
    for (int i = poly.degree(); i >= 0; --i) {
      acc = f.add(f.mul(acc, x), f.scalar_repr(poly.coeff(i)));
    }
    if (acc == 0) ++count;
  }
  return count;
}

/* Weight counts A_0..A_wmax obtained by expanding every message m(x) against
 * the generator: the codewords of a cyclic code are exactly the products
 * m(x) g(x) with deg m < dimension. Costs p^dimension products. */
inline std::vector<cyclow::BigInt> full_space_weights(const cyclow::CyclicCode& code,
                                                      int wmax) {
  const std::int64_t p = code.field().characteristic();
  const std::int64_t k = code.dimension();
  double size = 1;
  for (std::int64_t i = 0; i < k; ++i) size *= static_cast<double>(p);
  if (size > 2e6) throw std::invalid_argument("full_space_weights: space too large");

  std::vector<cyclow::BigInt> counts(static_cast<std::size_t>(wmax) + 1, 0);
  std::vector<std::int64_t> msg(static_cast<std::size_t>(k), 0);
  while (true) {
    cyclow::FpPoly word = cyclow::FpPoly(p, msg) * code.generator();
    std::int64_t w = 0;
    for (std::int64_t c : word.coeffs()) {
      if (c != 0) ++w;
    }
    if (w <= wmax) ++counts[static_cast<std::size_t>(w)];

    std::size_t i = 0;
    while (i < msg.size() && msg[i] == p - 1) {
      msg[i] = 0;
      ++i;
    }
    if (i == msg.size()) break;
    ++msg[i];
  }
  return counts;
}

/* Diagonal-system solutions grouped by the multiplicity pattern of the
 * values in the tuple (zero treated as an ordinary value): the key is the
 * ascending multiset of multiplicities. Full q^arity scan. */
inline std::map<cyclow::PartitionTuple, cyclow::BigInt> diagonal_pattern_counts(
    const cyclow::DiagonalSystem& sys) {
  const std::uint64_t q = sys.field.order();
  double size = 1;
  for (int i = 0; i < sys.arity; ++i) size *= static_cast<double>(q);
  if (size > 2e7) throw std::invalid_argument("diagonal_pattern_counts: too large");

  std::map<cyclow::PartitionTuple, cyclow::BigInt> buckets;
  std::vector<std::uint64_t> x(static_cast<std::size_t>(sys.arity), 0);
  while (true) {
    bool solves = true;
    for (std::int64_t t : sys.exponents) {
      cyclow::Field::Repr sum = 0;
      for (std::uint64_t xi : x) {
        sum = sys.field.add(sum, sys.field.pow(xi, t));
      }
      if (sum != 0) {
        solves = false;
        break;
      }
    }
    if (solves) {
      std::map<std::uint64_t, std::int64_t> mult;
      for (std::uint64_t xi : x) ++mult[xi];
      cyclow::PartitionTuple pattern;
      for (const auto& [value, count] : mult) pattern.push_back(count);
      std::sort(pattern.begin(), pattern.end());
      buckets[pattern] += 1;
    }

    std::size_t i = 0;
    while (i < x.size() && x[i] == q - 1) {
      x[i] = 0;
      ++i;
    }
    if (i == x.size()) break;
    ++x[i];
  }
  return buckets;
}

}  // namespace oracles
