#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cyclow/bigint.hpp"
#include "cyclow/cyclic.hpp"
#include "cyclow/partitions.hpp"

namespace cyclow {

/* The system sum_i x_i^{t_j} = 0 (j = 1..s) in w unknowns over GF(q),
 * q = 2^m. Exponents are kept as given (each must be >= 1); arity w >= 1. */
struct DiagonalSystem {
  DiagonalSystem(Field field, std::vector<std::int64_t> exponents, int arity);

  Field field;
  std::vector<std::int64_t> exponents;
  int arity;
};

/* Solution counts N_2 .. N_W, indexed by arity. N_1 is always 1 and is not
 * stored. */
class NwSequence {
 public:
  NwSequence() = default;
  explicit NwSequence(std::vector<BigInt> values_from_arity_2);

  int max_arity() const { return static_cast<int>(values_.size()) + 1; }
  const BigInt& at(int w) const;  // w in [2, max_arity()]
  void append(BigInt value);
  const std::vector<BigInt>& values() const { return values_; }

  bool operator==(const NwSequence& other) const = default;

 private:
  std::vector<BigInt> values_;
};

/* Number of solutions of the arity-w system from the weight prefix of the
 * matching binary cyclic code:
 *
 *   N_w = sum over v in assembly(w, q-1) of
 *         (A_{#odd} + A_{#odd-1}) * #odd!/P(odd)! * C(q-#odd, #even)
 *         * #even!/P(even)! * multinomial(w, v)
 *
 * where odd/even split v by parity and P takes value multiplicities. The
 * prefix must reach index w. q must be a power of 2. */
BigInt nw_from_weights(std::int64_t q, const WeightPrefix& weights, int w);

/* The same sum split per tuple v, in assembly order; the terms add up to
 * nw_from_weights. */
std::vector<std::pair<PartitionTuple, BigInt>> nw_terms(std::int64_t q,
                                                        const WeightPrefix& weights,
                                                        int w);

/* Invert the relation: recover A_0 .. A_W from N_2 .. N_W. Only the
 * all-ones tuple involves A_w at step w (with coefficient w!), so the
 * recursion is triangular. A non-integral or negative A_w means the input
 * is not a valid solution-count sequence. */
WeightPrefix weights_from_nw(std::int64_t q, const NwSequence& nw);

/* Oracle: enumerate assignments directly. When some exponent is 1 the last
 * variable is forced (q^(w-1) candidates), otherwise all q^w tuples are
 * scanned. Throws budget_error when the candidate count exceeds budget. */
BigInt diagonal_count_bruteforce(const DiagonalSystem& sys,
                                 std::uint64_t budget = kDefaultBudget);

/* Closed-form N_w for the binary codes with zeros gamma, gamma^(2^k+1)
 * over GF(2^(2f+1)), gcd(k, 2f+1) = 1:
 *   N_w = q^(w-2) + (q-1) 2^((w-2)(f+1))      for even w
 *   N_w = q^(w-2) + (q-1) 2^((w-3)(f+1)+1)    for odd w
 * with q = 2^(2f+1), w >= 2. */
BigInt family_nw(int f, int k, int w);

/* A_0 .. A_6 for the same family: (1, 0, 0, 0, 0, A_5, A_6) with
 * A_5 = (q-1)(q-2)(q-8)/120 and A_6 = (q-1)(q-2)(q-6)(q-8)/720. */
WeightPrefix family_low_weights(int f, int k);

}  // namespace cyclow
