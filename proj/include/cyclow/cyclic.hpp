#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclow/bigint.hpp"
#include "cyclow/field.hpp"

namespace cyclow {

/* Coefficient vector of length n = q - 1, entries in [0, p). */
using Codeword = std::vector<std::int64_t>;

int weight(const Codeword& word);

/* A_0 .. A_W: exact counts of codewords by Hamming weight. a(-1) is defined
 * as 0, which the weight/solution-count conversion relies on. */
class WeightPrefix {
 public:
  WeightPrefix() = default;
  explicit WeightPrefix(std::vector<BigInt> counts);

  int max_weight() const { return static_cast<int>(a_.size()) - 1; }
  const BigInt& at(int w) const;  // w in [0, max_weight()]
  BigInt a(int w) const;          // like at(), but a(-1) = 0
  void append(BigInt count);
  const std::vector<BigInt>& counts() const { return a_; }

  bool operator==(const WeightPrefix& other) const = default;

 private:
  std::vector<BigInt> a_;
};

/* Default cap on brute-force work, counted in membership tests (weight
 * enumeration) or candidate tuples (diagonal systems). */
inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ull;

/* The cyclic code of length n = q - 1 over GF(p) whose generator is the
 * product of the minimal polynomials of gamma^{t_i}. Exponents are
 * canonicalized to their smallest p-cyclotomic coset representatives
 * (input order kept); two exponents in one coset are rejected. A word is a
 * codeword iff it vanishes at gamma^{t_i} for every i, so membership never
 * materializes a parity-check matrix. */
class CyclicCode {
 public:
  CyclicCode(Field field, const std::vector<std::int64_t>& exponents);

  const Field& field() const { return field_; }
  std::int64_t length() const { return n_; }
  const std::vector<std::int64_t>& exponents() const { return exponents_; }
  const FpPoly& generator() const { return generator_; }
  std::int64_t dimension() const;  // n - deg(generator)
  bool full_space() const { return generator_.degree() == 0; }

  bool contains(const Codeword& word) const;

 private:
  Field field_;
  std::vector<std::int64_t> exponents_;
  FpPoly generator_;
  std::int64_t n_;
};

/* Membership tests needed to enumerate weight-w words of a length-n code
 * over GF(p): C(n, w) * (p-1)^(w-1). Callers can sum this over w to size a
 * budget before calling the enumerators below. */
BigInt weight_cost(std::int64_t n, std::int64_t p, int w);

/* Exact A_0 .. A_{w_max} by support enumeration: the first nonzero
 * coordinate is pinned to 1 and the count scaled by p - 1 afterwards.
 * Supports are walked depth-first with incremental evaluation updates, so
 * each membership test costs O(s) field operations. Throws budget_error
 * when the projected number of membership tests exceeds the budget. */
WeightPrefix brute_weight_distribution(const CyclicCode& code, int w_max,
                                       std::uint64_t budget = kDefaultBudget);

/* Smallest nonzero codeword weight, or nullopt when it exceeds w_max. */
std::optional<int> min_distance_upto(const CyclicCode& code, int w_max,
                                     std::uint64_t budget = kDefaultBudget);

}  // namespace cyclow
