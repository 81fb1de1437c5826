#include "bsym/codes.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "bsym/arith.hpp"
#include "bsym/error.hpp"

namespace bsym {

std::uint64_t WeightDistribution::total() const {
  std::uint64_t t = 0;
  for (const auto& [w, c] : entries) t += c;
  return t;
}

std::optional<std::uint64_t> WeightDistribution::min_nonzero() const {
  for (const auto& [w, c] : entries)
    if (w != 0 && c != 0) return w;
  return std::nullopt;
}

std::string WeightDistribution::enumerator() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : entries) {
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (w == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << "T";
    if (w != 1) os << "^" << w;
  }
  if (first) os << "0";
  return os.str();
}

WeightDistribution WeightDistribution::scaled(std::uint64_t factor) const {
  WeightDistribution out = *this;
  for (auto& [w, c] : out.entries) c *= factor;
  return out;
}

void fail_enumeration_limit(std::uint64_t count, std::uint64_t limit) {
  fail(ErrorKind::EnumerationLimitExceeded,
       std::to_string(count) + " items exceed the enumeration limit " + std::to_string(limit));
}

namespace {

unsigned sub_degree_for(const FieldPtr& big, std::uint64_t q) {
  if (!big) fail(ErrorKind::InvalidArgument, "null field");
  auto pp = as_prime_power(q);
  if (!pp || pp->p != big->characteristic() || big->degree() % pp->k != 0)
    fail(ErrorKind::NotSubfield, "F_" + std::to_string(q) + " is not a subfield of " + big->name());
  return pp->k;
}

}  // namespace

Code::Code(FieldPtr big, std::uint64_t q, std::uint64_t N)
    : emb_(big, sub_degree_for(big, q)), q_(q), N_(N) {
  const std::uint64_t g = big->group_order();
  if (N == 0 || g % N != 0) fail(ErrorKind::NNotDivisor, std::to_string(N) + " does not divide " + std::to_string(g));
  n_ = g / N;
  if (std::gcd(n_, q_) != 1) fail(ErrorKind::GcdViolation, "gcd(n, q) != 1");
  N1_ = std::gcd(g / (q_ - 1), N_);
  k0_ = static_cast<unsigned>(multiplicative_order(q_ % n_, n_));
  semi_primitive_ = false;
  if (N_ > 2 && std::gcd(q_, N_) == 1) {
    const std::uint64_t ord = multiplicative_order(q_ % N_, N_);
    std::uint64_t x = 1;
    for (std::uint64_t j = 1; j <= ord && !semi_primitive_; ++j) {
      x = mul_mod(x, q_, N_);
      semi_primitive_ = x == N_ - 1;
    }
  }
  auto tr = big->trace_by_exponent(s());
  for (auto& v : tr) v = emb_.to_small(v);
  trace_ = std::make_shared<const std::vector<Elem>>(std::move(tr));
  gen_exp_ = 0;
  while (gen_exp_ < g && codeword_from_exponent(gen_exp_).is_zero()) ++gen_exp_;
  if (gen_exp_ == g) fail(ErrorKind::InvalidArgument, "code is zero");
}

std::string Code::label() const {
  std::ostringstream os;
  os << "C(" << Q() << "," << N_ << ")_" << q_;
  return os.str();
}

Word Code::codeword_from_exponent(std::uint64_t t) const {
  const std::uint64_t g = big()->group_order();
  Word w{small(), std::vector<Elem>(n_)};
  std::uint64_t e = t % g;
  for (std::uint64_t i = 0; i < n_; ++i) {
    w.symbols[i] = (*trace_)[e];
    e += N_;
    if (e >= g) e -= g;
  }
  return w;
}

Word Code::codeword(Elem beta) const {
  if (!big()->contains(beta)) fail(ErrorKind::FieldMismatch, "beta outside " + big()->name());
  if (beta == 0) return zero_word();
  return codeword_from_exponent(big()->log(beta));
}

Word Code::zero_word() const { return Word{small(), std::vector<Elem>(n_, 0)}; }

Matrix Code::generator_rows() const {
  Matrix rows;
  for (unsigned j = 0; j < k0_; ++j) rows.push_back(codeword_from_exponent(gen_exp_ + j * N_).symbols);
  return rows;
}

std::uint64_t Code::codeword_count() const {
  auto c = checked_pow(q_, k0_);
  return c ? *c : UINT64_MAX;
}

Code build_code(FieldPtr big, std::uint64_t q, std::uint64_t N) { return Code(std::move(big), q, N); }

Code build_code(std::uint32_t p, unsigned s, unsigned m, std::uint64_t N) {
  return Code(make_field(p, s * m), ipow(p, s), N);
}

std::vector<std::uint64_t> class_weights(const Code& code, std::size_t b, std::uint64_t seed) {
  const std::uint64_t g = code.big()->group_order();
  const std::uint64_t N1 = code.N1();
  const std::uint64_t members = g / N1;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, members - 1);
  std::vector<std::uint64_t> out(N1);
  for (std::uint64_t i = 0; i < N1; ++i) {
    out[i] = w_b(code.codeword_from_exponent(i), b);
    for (int r = 0; r < 3; ++r) {
      const std::uint64_t t = i + N1 * pick(rng);
      const std::uint64_t w = w_b(code.codeword_from_exponent(t), b);
      if (w != out[i])
        fail(ErrorKind::ClassConstancyViolated, code.label() + ": class " + std::to_string(i) + " has weights " +
                                                    std::to_string(out[i]) + " and " + std::to_string(w));
    }
  }
  return out;
}

WeightDistribution brute_distribution(const Code& code, std::size_t b, DistributionMode mode,
                                      const EnumerationOptions& opt) {
  WeightDistribution d;
  d.b = b;
  d.n = code.n();
  if (mode == DistributionMode::per_class) {
    auto ws = class_weights(code, b, opt.seed);
    const std::uint64_t mult = code.big()->group_order() / code.N1();
    d.entries[0] += 1;
    for (auto w : ws) d.entries[w] += mult;
    return d;
  }
  code.for_each_codeword(opt.limit, [&](const std::vector<Elem>& c) { ++d.entries[w_b(std::span<const Elem>(c), b)]; });
  if (opt.beta_view) return d.scaled(code.Q() / code.codeword_count());
  return d;
}

WeightDistribution beta_distribution(const Code& code, std::size_t b, std::uint64_t limit) {
  if (code.Q() > limit) fail_enumeration_limit(code.Q(), limit);
  WeightDistribution d;
  d.b = b;
  d.n = code.n();
  d.entries[0] = 1;
  for (std::uint64_t t = 0; t < code.big()->group_order(); ++t) ++d.entries[w_b(code.codeword_from_exponent(t), b)];
  return d;
}

std::uint64_t min_db(const Code& code, std::size_t b, std::uint64_t limit) {
  if (code.codeword_count() <= limit) {
    auto d = brute_distribution(code, b, DistributionMode::full, {limit, false, 1});
    return *d.min_nonzero();
  }
  auto ws = class_weights(code, b);
  std::uint64_t best = UINT64_MAX;
  for (auto w : ws)
    if (w != 0) best = std::min(best, w);
  return best;
}

std::uint64_t averaged_weight(const Word& c, std::size_t b) {
  if (b < 1 || b > c.size()) fail(ErrorKind::BOutOfRange, "b out of range");
  Matrix rows;
  for (std::size_t t = 0; t < b; ++t) rows.push_back(cyclic_shift(c, static_cast<std::int64_t>(t)).symbols);
  std::uint64_t sum = 0;
  for_each_combination(*c.field, rows, [&](const std::vector<Elem>& v) { sum += hamming_weight(v); });
  const std::uint64_t q = c.field->order();
  const std::uint64_t den = ipow(q, static_cast<unsigned>(b - 1)) * (q - 1);
  if (sum % den != 0) fail(ErrorKind::NonRationalCombination, "averaged weight is not an integer");
  return sum / den;
}

}  // namespace bsym
