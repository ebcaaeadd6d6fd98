#include "cyclow/cyclic.hpp"

#include <stdexcept>
#include <string>

#include "cyclow/errors.hpp"
#include "cyclow/numeric.hpp"

namespace cyclow {

int weight(const Codeword& word) {
  int w = 0;
  for (std::int64_t c : word) w += (c != 0);
  return w;
}

WeightPrefix::WeightPrefix(std::vector<BigInt> counts) : a_(std::move(counts)) {
  for (const BigInt& c : a_)
    if (c < 0) throw std::invalid_argument("WeightPrefix: counts cannot be negative");
}

const BigInt& WeightPrefix::at(int w) const {
  if (w < 0 || w > max_weight())
    throw std::invalid_argument("WeightPrefix: weight index out of range");
  return a_[static_cast<std::size_t>(w)];
}

BigInt WeightPrefix::a(int w) const {
  if (w == -1) return 0;
  return at(w);
}

void WeightPrefix::append(BigInt count) {
  if (count < 0) throw std::invalid_argument("WeightPrefix: counts cannot be negative");
  a_.push_back(std::move(count));
}

CyclicCode::CyclicCode(Field field, const std::vector<std::int64_t>& exponents)
    : field_(std::move(field)), generator_(field_.characteristic()) {
  n_ = field_.order() - 1;
  if (exponents.empty())
    throw std::invalid_argument("CyclicCode: exponent list must be nonempty");
  generator_ = FpPoly::one(field_.characteristic());
  for (std::int64_t t : exponents) {
    CyclotomicCoset coset =
        cyclotomic_coset(field_.characteristic(), field_.extension_degree(), t);
    std::int64_t rep = coset.representative;
    for (std::int64_t seen : exponents_) {
      if (seen == rep)
        throw std::invalid_argument(
            "CyclicCode: exponents " + std::to_string(t) + " and earlier " +
            std::to_string(seen) + " share a cyclotomic coset");
    }
    exponents_.push_back(rep);
    generator_ = generator_ * minimal_polynomial(field_, rep);
  }
}

std::int64_t CyclicCode::dimension() const { return n_ - generator_.degree(); }

bool CyclicCode::contains(const Codeword& word) const {
  if (static_cast<std::int64_t>(word.size()) != n_)
    throw std::invalid_argument("CyclicCode: word length must equal q - 1");
  std::int64_t p = field_.characteristic();
  for (std::int64_t c : word) {
    if (c < 0 || c >= p)
      throw std::invalid_argument("CyclicCode: coefficient outside GF(p)");
  }
  std::uint64_t un = static_cast<std::uint64_t>(n_);
  for (std::int64_t t : exponents_) {
    std::uint64_t ut = static_cast<std::uint64_t>(t);
    Field::Repr acc = 0;
    for (std::int64_t i = 0; i < n_; ++i) {
      if (word[static_cast<std::size_t>(i)] == 0) continue;
      std::uint64_t e = mul_mod(static_cast<std::uint64_t>(i), ut, un);
      Field::Repr term = field_.mul(field_.scalar_repr(word[static_cast<std::size_t>(i)]),
                                    field_.exp(static_cast<std::int64_t>(e)));
      acc = field_.add(acc, term);
    }
    if (acc != 0) return false;
  }
  return true;
}

namespace {

/* Shared state for the support-enumeration kernels. Sums are kept per
 * recursion level so backtracking never has to undo an update. */
struct EnumContext {
  const Field* field = nullptr;
  std::int64_t n = 0;
  std::int64_t p = 0;
  int s = 0;
  // binary path: term_rows[j][i] = gamma^(i * t_j)
  std::vector<std::vector<std::uint32_t>> term_rows;
  // odd-p path: stride_logs[j][i] = (i * t_j) mod n, value_logs[v] = log(v)
  std::vector<std::vector<std::uint32_t>> stride_logs;
  std::vector<std::uint32_t> value_logs;
  std::vector<std::uint32_t> sums;  // (w_max + 1) x s, flattened
  std::uint64_t hits = 0;
};

EnumContext make_context(const CyclicCode& code, int w_max) {
  const Field& f = code.field();
  if (!f.has_tables())
    throw budget_error(
        "brute force needs log/exp tables; the field order exceeds the table limit");
  EnumContext ctx;
  ctx.field = &f;
  ctx.n = code.length();
  ctx.p = f.characteristic();
  ctx.s = static_cast<int>(code.exponents().size());
  const auto& exp = f.exp_table();
  std::uint64_t un = static_cast<std::uint64_t>(ctx.n);
  if (ctx.p == 2) {
    ctx.term_rows.resize(static_cast<std::size_t>(ctx.s));
    for (int j = 0; j < ctx.s; ++j) {
      auto& row = ctx.term_rows[static_cast<std::size_t>(j)];
      row.resize(static_cast<std::size_t>(ctx.n));
      std::uint64_t t = static_cast<std::uint64_t>(code.exponents()[static_cast<std::size_t>(j)]);
      std::uint64_t e = 0;
      for (std::int64_t i = 0; i < ctx.n; ++i) {
        row[static_cast<std::size_t>(i)] = exp[static_cast<std::size_t>(e)];
        e += t;
        if (e >= un) e -= un;
      }
    }
  } else {
    ctx.stride_logs.resize(static_cast<std::size_t>(ctx.s));
    for (int j = 0; j < ctx.s; ++j) {
      auto& row = ctx.stride_logs[static_cast<std::size_t>(j)];
      row.resize(static_cast<std::size_t>(ctx.n));
      std::uint64_t t = static_cast<std::uint64_t>(code.exponents()[static_cast<std::size_t>(j)]);
      std::uint64_t e = 0;
      for (std::int64_t i = 0; i < ctx.n; ++i) {
        row[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(e);
        e += t;
        if (e >= un) e -= un;
      }
    }
    ctx.value_logs.resize(static_cast<std::size_t>(ctx.p));
    for (std::int64_t v = 1; v < ctx.p; ++v)
      ctx.value_logs[static_cast<std::size_t>(v)] =
          static_cast<std::uint32_t>(f.log(f.scalar_repr(v)));
  }
  ctx.sums.assign(static_cast<std::size_t>(w_max + 1) * static_cast<std::size_t>(ctx.s), 0);
  return ctx;
}

void dfs_binary(EnumContext& ctx, int level, int w, std::int64_t start) {
  const std::uint32_t* cur = ctx.sums.data() + static_cast<std::size_t>(level) * ctx.s;
  std::uint32_t* nxt = ctx.sums.data() + (static_cast<std::size_t>(level) + 1) * ctx.s;
  std::int64_t last = ctx.n - (w - level);
  for (std::int64_t pos = start; pos <= last; ++pos) {
    bool zero = true;
    for (int j = 0; j < ctx.s; ++j) {
      nxt[j] = cur[j] ^ ctx.term_rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(pos)];
      zero = zero && nxt[j] == 0;
    }
    if (level + 1 == w) {
      ctx.hits += zero;
    } else {
      dfs_binary(ctx, level + 1, w, pos + 1);
    }
  }
}

void dfs_general(EnumContext& ctx, int level, int w, std::int64_t start) {
  const Field& f = *ctx.field;
  std::uint64_t un = static_cast<std::uint64_t>(ctx.n);
  const std::uint32_t* cur = ctx.sums.data() + static_cast<std::size_t>(level) * ctx.s;
  std::uint32_t* nxt = ctx.sums.data() + (static_cast<std::size_t>(level) + 1) * ctx.s;
  const auto& exp = f.exp_table();
  std::int64_t last = ctx.n - (w - level);
  std::int64_t vmax = level == 0 ? 1 : ctx.p - 1;  // leftmost coordinate pinned to 1
  for (std::int64_t pos = start; pos <= last; ++pos) {
    for (std::int64_t v = 1; v <= vmax; ++v) {
      bool zero = true;
      for (int j = 0; j < ctx.s; ++j) {
        std::uint64_t e =
            ctx.stride_logs[static_cast<std::size_t>(j)][static_cast<std::size_t>(pos)] +
            static_cast<std::uint64_t>(ctx.value_logs[static_cast<std::size_t>(v)]);
        if (e >= un) e -= un;
        std::uint32_t term = exp[static_cast<std::size_t>(e)];
        nxt[j] = static_cast<std::uint32_t>(f.add(cur[j], term));
        zero = zero && nxt[j] == 0;
      }
      if (level + 1 == w) {
        ctx.hits += zero;
      } else {
        dfs_general(ctx, level + 1, w, pos + 1);
      }
    }
  }
}

std::uint64_t count_fixed_weight(EnumContext& ctx, int w) {
  ctx.hits = 0;
  if (w == 0) return 1;
  if (w > ctx.n) return 0;
  if (ctx.p == 2) {
    dfs_binary(ctx, 0, w, 0);
  } else {
    dfs_general(ctx, 0, w, 0);
  }
  return ctx.hits;
}

}  // namespace

BigInt weight_cost(std::int64_t n, std::int64_t p, int w) {
  if (w <= 0 || w > n) return 0;
  BigInt c = binomial(BigInt(n), w);
  for (int i = 1; i < w; ++i) c *= p - 1;
  return c;
}

WeightPrefix brute_weight_distribution(const CyclicCode& code, int w_max,
                                       std::uint64_t budget) {
  if (w_max < 0) throw std::invalid_argument("brute_weight_distribution: w_max < 0");
  BigInt total = 0;
  for (int w = 1; w <= w_max; ++w)
    total += weight_cost(code.length(), code.field().characteristic(), w);
  if (total > budget)
    throw budget_error("brute_weight_distribution: " + total.str() +
                       " membership tests exceed the budget of " +
                       std::to_string(budget));
  WeightPrefix prefix;
  prefix.append(1);  // the zero word
  if (w_max == 0) return prefix;
  EnumContext ctx = make_context(code, w_max);
  for (int w = 1; w <= w_max; ++w) {
    BigInt a = count_fixed_weight(ctx, w);
    prefix.append(a * (code.field().characteristic() - 1));
  }
  return prefix;
}

std::optional<int> min_distance_upto(const CyclicCode& code, int w_max,
                                     std::uint64_t budget) {
  if (w_max < 1) throw std::invalid_argument("min_distance_upto: w_max < 1");
  EnumContext ctx = make_context(code, w_max);
  BigInt spent = 0;
  for (int w = 1; w <= w_max; ++w) {
    spent += weight_cost(code.length(), code.field().characteristic(), w);
    if (spent > budget)
      throw budget_error("min_distance_upto: enumeration exceeds the budget of " +
                         std::to_string(budget));
    if (count_fixed_weight(ctx, w) > 0) return w;
  }
  return std::nullopt;
}

}  // namespace cyclow
