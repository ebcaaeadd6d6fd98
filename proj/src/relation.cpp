#include "cyclow/relation.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclow/errors.hpp"
#include "cyclow/field.hpp"
#include "cyclow/numeric.hpp"

namespace cyclow {

DiagonalSystem::DiagonalSystem(Field field_in, std::vector<std::int64_t> exponents_in,
                               int arity_in)
    : field(std::move(field_in)), exponents(std::move(exponents_in)), arity(arity_in) {
  if (field.characteristic() != 2) {
    throw std::invalid_argument("DiagonalSystem: the field characteristic must be 2");
  }
  if (exponents.empty()) {
    throw std::invalid_argument("DiagonalSystem: at least one exponent is required");
  }
  const auto n = static_cast<std::int64_t>(field.order() - 1);
  for (std::int64_t& t : exponents) {
    if (t < 1) {
      throw std::invalid_argument("DiagonalSystem: exponents must be >= 1, got " +
                                  std::to_string(t));
    }
    /* Reduce into [1, q-1]: x^t is unchanged for nonzero x, and 0^t = 0
     * stays 0 because the reduced exponent is never 0. */
    t = (t - 1) % n + 1;
  }
  if (arity < 1) {
    throw std::invalid_argument("DiagonalSystem: arity must be >= 1, got " +
                                std::to_string(arity));
  }
}

NwSequence::NwSequence(std::vector<BigInt> values_from_arity_2)
    : values_(std::move(values_from_arity_2)) {
  for (const BigInt& v : values_) {
    if (v < 0) {
      throw std::invalid_argument("NwSequence: solution counts cannot be negative");
    }
  }
}

const BigInt& NwSequence::at(int w) const {
  if (w < 2 || w > max_arity()) {
    throw std::invalid_argument("NwSequence: arity " + std::to_string(w) +
                                " outside stored range [2, " +
                                std::to_string(max_arity()) + "]");
  }
  return values_[static_cast<std::size_t>(w - 2)];
}

void NwSequence::append(BigInt value) {
  if (value < 0) {
    throw std::invalid_argument("NwSequence: solution counts cannot be negative");
  }
  values_.push_back(std::move(value));
}

namespace {

void check_power_of_two(std::int64_t q) {
  if (q < 2 || (q & (q - 1)) != 0) {
    throw std::invalid_argument("conversion: q must be a power of 2, got " +
                                std::to_string(q));
  }
}

/* Coefficient of the tuple v in the N_w sum, without the weight factor:
 * #odd!/P(odd)! * C(q-#odd, #even) * #even!/P(even)! * multinomial(w, v). */
BigInt tuple_coefficient(std::int64_t q, int w, const PartitionTuple& v,
                         std::int64_t* out_num_odd) {
  auto [odd, even] = odd_even_parts(v);
  const auto num_odd = static_cast<std::int64_t>(odd.size());
  const auto num_even = static_cast<std::int64_t>(even.size());
  BigInt coeff = exact_div(factorial(num_odd), partition_factorial(partition_of(odd)));
  coeff *= binomial(BigInt(q) - num_odd, num_even);
  coeff *= exact_div(factorial(num_even), partition_factorial(partition_of(even)));
  coeff *= multinomial(w, v);
  *out_num_odd = num_odd;
  return coeff;
}

std::int64_t assembly_cap(std::int64_t q, int w) { return std::min<std::int64_t>(w, q - 1); }

}  // namespace

std::vector<std::pair<PartitionTuple, BigInt>> nw_terms(std::int64_t q,
                                                        const WeightPrefix& weights,
                                                        int w) {
  check_power_of_two(q);
  if (w < 1) {
    throw std::invalid_argument("nw_terms: arity must be >= 1, got " + std::to_string(w));
  }
  if (weights.max_weight() < w) {
    throw std::invalid_argument("nw_terms: weight prefix reaches " +
                                std::to_string(weights.max_weight()) +
                                " but arity " + std::to_string(w) + " is requested");
  }
  std::vector<std::pair<PartitionTuple, BigInt>> terms;
  for (const PartitionTuple& v : assembly(w, assembly_cap(q, w))) {
    std::int64_t num_odd = 0;
    BigInt coeff = tuple_coefficient(q, w, v, &num_odd);
    BigInt term = (weights.a(num_odd) + weights.a(num_odd - 1)) * coeff;
    terms.emplace_back(v, std::move(term));
  }
  return terms;
}

BigInt nw_from_weights(std::int64_t q, const WeightPrefix& weights, int w) {
  BigInt total = 0;
  for (auto& [v, term] : nw_terms(q, weights, w)) {
    total += term;
  }
  return total;
}

WeightPrefix weights_from_nw(std::int64_t q, const NwSequence& nw) {
  check_power_of_two(q);
  WeightPrefix weights({1, 0});  // A_0 = 1, A_1 = 0: nonzero constants are not codewords
  BigInt qw = q;                 // q^w, tracked alongside w
  for (int w = 2; w <= nw.max_arity(); ++w) {
    qw *= q;
    if (nw.at(w) > qw) {
      throw std::invalid_argument("weights_from_nw: N_" + std::to_string(w) +
                                  " exceeds q^" + std::to_string(w) +
                                  ", the number of assignments");
    }
    /* Every tuple except the all-ones one only involves A_j for j < w; the
     * all-ones tuple contributes (A_w + A_{w-1}) * w!. */
    BigInt rest = 0;
    for (const PartitionTuple& v : assembly(w, assembly_cap(q, w))) {
      if (static_cast<int>(v.size()) == w) {
        continue;  // the all-ones tuple; its parts are forced to 1
      }
      std::int64_t num_odd = 0;
      BigInt coeff = tuple_coefficient(q, w, v, &num_odd);
      rest += (weights.a(num_odd) + weights.a(num_odd - 1)) * coeff;
    }
    const BigInt num = nw.at(w) - rest;
    const BigInt den = factorial(w);
    if (num % den != 0) {
      throw std::invalid_argument(
          "weights_from_nw: (N_" + std::to_string(w) +
          " - lower-order terms) = " + num.str() + " is not divisible by " +
          std::to_string(w) + "!; the solution counts do not come from a code");
    }
    BigInt aw = num / den - weights.a(w - 1);
    if (aw < 0) {
      throw std::invalid_argument(
          "weights_from_nw: recovered a negative codeword count at weight " +
          std::to_string(w) + "; the solution counts do not come from a code");
    }
    weights.append(std::move(aw));
  }
  return weights;
}

namespace {

/* Enumeration state for one diagonal system. Solutions are counted by
 * depth-first search over assignments x_0 .. x_{w-1}, carrying the partial
 * power sums for all equations. pow_rows[j][x] = x^{t_j} as a table. */
struct DiagonalEnum {
  const Field& f;
  std::vector<std::vector<Field::Repr>> pow_rows;
  int arity;
  std::uint64_t hits = 0;

  DiagonalEnum(const DiagonalSystem& sys) : f(sys.field), arity(sys.arity) {
    const std::uint64_t q = f.order();
    pow_rows.reserve(sys.exponents.size());
    for (std::int64_t t : sys.exponents) {
      std::vector<Field::Repr> row(q);
      for (std::uint64_t x = 0; x < q; ++x) {
        row[x] = f.pow(x, t);
      }
      pow_rows.push_back(std::move(row));
    }
  }

  /* Scan every assignment of the remaining variables. sums holds one
   * partial power sum per equation. */
  void scan_full(int level, std::vector<Field::Repr>& sums) {
    if (level == arity) {
      hits += std::all_of(sums.begin(), sums.end(),
                          [](Field::Repr s) { return s == 0; })
                  ? 1
                  : 0;
      return;
    }
    const std::uint64_t q = f.order();
    const auto s = pow_rows.size();
    std::vector<Field::Repr> next(s);
    for (std::uint64_t x = 0; x < q; ++x) {
      for (std::size_t j = 0; j < s; ++j) {
        next[j] = sums[j] ^ pow_rows[j][x];  // characteristic 2: add = XOR
      }
      scan_full(level + 1, next);
    }
  }

  /* One equation has exponent reducing to 1, so its power map is the
   * identity and the last variable is the sum of the others. Enumerate the
   * first w-1 variables and check the remaining equations at the forced
   * value. pivot indexes that equation. */
  void scan_pivot(int level, std::size_t pivot, std::vector<Field::Repr>& sums) {
    const auto s = pow_rows.size();
    if (level == arity - 1) {
      const Field::Repr forced = sums[pivot];
      for (std::size_t j = 0; j < s; ++j) {
        if (j == pivot) continue;
        if ((sums[j] ^ pow_rows[j][forced]) != 0) return;
      }
      ++hits;
      return;
    }
    const std::uint64_t q = f.order();
    std::vector<Field::Repr> next(s);
    for (std::uint64_t x = 0; x < q; ++x) {
      for (std::size_t j = 0; j < s; ++j) {
        next[j] = sums[j] ^ pow_rows[j][x];
      }
      scan_pivot(level + 1, pivot, next);
    }
  }
};

}  // namespace

BigInt diagonal_count_bruteforce(const DiagonalSystem& sys, std::uint64_t budget) {
  const std::uint64_t q = sys.field.order();

  /* Exponents are reduced into [1, q-1], so x^t is the identity map on all
   * of GF(q) exactly when t == 1. */
  std::size_t pivot = sys.exponents.size();
  for (std::size_t j = 0; j < sys.exponents.size(); ++j) {
    if (sys.exponents[j] == 1) {
      pivot = j;
      break;
    }
  }

  const int free_vars = pivot < sys.exponents.size() ? sys.arity - 1 : sys.arity;
  BigInt cost = 1;
  for (int i = 0; i < free_vars; ++i) {
    cost *= q;
  }
  if (cost > budget) {
    throw budget_error("diagonal brute force needs " + cost.str() +
                       " assignments; budget is " + std::to_string(budget));
  }

  DiagonalEnum e(sys);
  std::vector<Field::Repr> sums(sys.exponents.size(), 0);
  if (pivot < sys.exponents.size()) {
    e.scan_pivot(0, pivot, sums);
  } else {
    e.scan_full(0, sums);
  }
  return BigInt(e.hits);
}

namespace {

void check_family_params(int f, int k) {
  if (f < 1) {
    throw std::invalid_argument("family: f must be >= 1, got " + std::to_string(f));
  }
  if (k < 1) {
    throw std::invalid_argument("family: k must be >= 1, got " + std::to_string(k));
  }
  if (f > 30) {
    throw std::invalid_argument("family: 2f+1 exceeds the supported field range");
  }
  if (std::gcd(static_cast<std::int64_t>(k), static_cast<std::int64_t>(2 * f + 1)) != 1) {
    throw std::invalid_argument("family: k and 2f+1 must be coprime, got k = " +
                                std::to_string(k) + ", f = " + std::to_string(f));
  }
}

BigInt pow_bigint(BigInt base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) {
    r *= base;
  }
  return r;
}

}  // namespace

BigInt family_nw(int f, int k, int w) {
  check_family_params(f, k);
  if (w < 2) {
    throw std::invalid_argument("family_nw: arity must be >= 2, got " + std::to_string(w));
  }
  const BigInt q = pow_bigint(2, 2 * f + 1);
  if (w % 2 == 0) {
    return pow_bigint(q, w - 2) + (q - 1) * pow_bigint(2, (w - 2) * (f + 1));
  }
  return pow_bigint(q, w - 2) + (q - 1) * pow_bigint(2, (w - 3) * (f + 1) + 1);
}

WeightPrefix family_low_weights(int f, int k) {
  check_family_params(f, k);
  const BigInt q = pow_bigint(2, 2 * f + 1);
  const BigInt a5 = exact_div((q - 1) * (q - 2) * (q - 8), 120);
  const BigInt a6 = exact_div((q - 1) * (q - 2) * (q - 6) * (q - 8), 720);
  return WeightPrefix({1, 0, 0, 0, 0, a5, a6});
}

}  // namespace cyclow
