#include "bsym/gf.hpp"

#include <algorithm>
#include <sstream>

#include "bsym/arith.hpp"
#include "bsym/error.hpp"

namespace bsym {

namespace poly {
namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

// Remainder of a modulo the monic-or-not polynomial m (m nonzero).
Poly rem(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod_p(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - factor) * m[i]) % p;
    trim(a);
  }
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return rem(std::move(r), m, p);
}

Poly powmod(Poly base, std::uint64_t k, const Poly& m, std::uint64_t p) {
  Poly r = rem(Poly{1}, m, p);
  base = rem(std::move(base), m, p);
  while (k) {
    if (k & 1) r = mulmod(r, base, m, p);
    base = mulmod(base, base, m, p);
    k >>= 1;
  }
  return r;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly widen(const Polynomial& f, std::uint32_t p) {
  Poly out(f.begin(), f.end());
  for (auto& c : out) c %= p;
  return out;
}

// x^(p^k) mod f by k successive Frobenius powers.
Poly x_pow_p_pow(std::uint64_t k, const Poly& f, std::uint64_t p) {
  Poly r{0, 1};
  for (std::uint64_t i = 0; i < k; ++i) r = powmod(r, p, f, p);
  return rem(std::move(r), f, p);
}

}  // namespace

bool is_irreducible(const Polynomial& f_in, std::uint32_t p) {
  Poly f = widen(f_in, p);
  trim(f);
  if (f.size() < 2) return false;
  const std::uint64_t e = f.size() - 1;
  if (e == 1) return true;
  if (f[0] == 0) return false;
  // x^(p^e) = x mod f, and gcd(x^(p^(e/r)) - x, f) = 1 for each prime r | e.
  Poly xe = x_pow_p_pow(e, f, p);
  Poly x = rem(Poly{0, 1}, f, p);
  if (xe != x) return false;
  for (auto r : prime_factors(e)) {
    Poly g = x_pow_p_pow(e / r, f, p);
    g.resize(std::max<std::size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    Poly d = gcd(f, g, p);
    if (d.size() != 1) return false;
  }
  return true;
}

bool is_primitive(const Polynomial& f_in, std::uint32_t p) {
  if (!is_irreducible(f_in, p)) return false;
  Poly f = widen(f_in, p);
  trim(f);
  const unsigned e = static_cast<unsigned>(f.size() - 1);
  const std::uint64_t order = ipow(p, e) - 1;
  Poly one = rem(Poly{1}, f, p);
  Poly x{0, 1};
  if (powmod(x, order, f, p) != one) return false;
  for (auto r : prime_factors(order))
    if (powmod(x, order / r, f, p) == one) return false;
  return true;
}

Polynomial default_primitive(std::uint32_t p, unsigned e) {
  if (e == 1) {
    for (std::uint32_t g = 1; g < p; ++g) {
      Polynomial f{(p - g) % p, 1};
      if (is_primitive(f, p)) return f;
    }
    fail(ErrorKind::InvalidArgument, "no generator found");
  }
  const std::uint64_t count = ipow(p, e);
  for (std::uint64_t v = 0; v < count; ++v) {
    Polynomial f(e + 1, 0);
    std::uint64_t w = v;
    for (unsigned i = 0; i < e; ++i) {
      f[i] = static_cast<std::uint32_t>(w % p);
      w /= p;
    }
    f[e] = 1;
    if (is_primitive(f, p)) return f;
  }
  fail(ErrorKind::InvalidArgument, "no primitive polynomial found");
}

std::string to_string(const Polynomial& f) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || f[i] != 1) os << f[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace poly

FieldPtr Field::make(std::uint32_t p, unsigned e, std::optional<Polynomial> modulus,
                     std::uint64_t table_limit) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (e == 0) fail(ErrorKind::InvalidArgument, "extension degree must be positive");
  auto order = checked_pow(p, e);
  if (!order || *order > table_limit || *order > (std::uint64_t{1} << 31))
    fail(ErrorKind::TableLimitExceeded,
         "F_" + std::to_string(p) + "^" + std::to_string(e) + " exceeds the table limit of " +
             std::to_string(table_limit) + " elements");
  Polynomial f;
  if (modulus) {
    f = *modulus;
    if (f.size() != e + 1 || f.back() != 1)
      fail(ErrorKind::InvalidArgument, "modulus must be monic of degree " + std::to_string(e));
    for (auto c : f)
      if (c >= p) fail(ErrorKind::InvalidArgument, "modulus coefficient out of range");
    if (!poly::is_irreducible(f, p))
      fail(ErrorKind::ModulusNotIrreducible, poly::to_string(f) + " is reducible over F_" + std::to_string(p));
    if (!poly::is_primitive(f, p))
      fail(ErrorKind::ModulusNotPrimitive, poly::to_string(f) + " is not primitive over F_" + std::to_string(p));
  } else {
    f = poly::default_primitive(p, e);
  }
  return std::shared_ptr<const Field>(new Field(p, e, std::move(f)));
}

FieldPtr make_field(std::uint32_t p, unsigned e, std::optional<Polynomial> modulus,
                    std::uint64_t table_limit) {
  return Field::make(p, e, std::move(modulus), table_limit);
}

Field::Field(std::uint32_t p, unsigned e, Polynomial modulus)
    : p_(p), e_(e), order_(static_cast<std::uint32_t>(ipow(p, e))), modulus_(std::move(modulus)) {
  const std::uint32_t g = group_order();
  exp_.assign(2 * static_cast<std::size_t>(g), 0);
  log_.assign(order_, kNoLog);
  Elem cur = 1;
  for (std::uint32_t i = 0; i < g; ++i) {
    if (log_[cur] != kNoLog) fail(ErrorKind::ModulusNotPrimitive, "root order smaller than expected");
    exp_[i] = cur;
    exp_[i + g] = cur;
    log_[cur] = i;
    cur = times_x(cur);
  }
  if (cur != 1) fail(ErrorKind::ModulusNotPrimitive, "root does not have full order");
  if (p_ != 2) {
    zech_.assign(g, kNoLog);
    for (std::uint32_t d = 0; d < g; ++d) {
      const Elem v = exp_[d];
      const std::uint32_t c0 = v % p_;
      const Elem w = v - c0 + (c0 + 1) % p_;
      zech_[d] = w == 0 ? kNoLog : log_[w];
    }
  }
}

Elem Field::times_x(Elem v) const {
  // Shift coefficients up one degree and reduce by the monic modulus.
  std::uint32_t digits[32];
  for (unsigned i = 0; i < e_; ++i) {
    digits[i] = v % p_;
    v /= p_;
  }
  const std::uint32_t top = digits[e_ - 1];
  Elem out = 0;
  for (unsigned i = e_; i-- > 0;) {
    const std::uint64_t prev = i == 0 ? 0 : digits[i - 1];
    const std::uint64_t sub = static_cast<std::uint64_t>(top) * modulus_[i] % p_;
    out = out * p_ + static_cast<Elem>((prev + p_ - sub) % p_);
  }
  return out;
}

Elem Field::div(Elem a, Elem b) const {
  if (b == 0) fail(ErrorKind::DivisionByZero, "division by zero in " + name());
  if (a == 0) return 0;
  return exp_[log_[a] + group_order() - log_[b]];
}

Elem Field::inv(Elem a) const {
  if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in " + name());
  return exp_[group_order() - log_[a]];
}

Elem Field::pow(Elem a, std::int64_t k) const {
  if (a == 0) {
    if (k < 0) fail(ErrorKind::DivisionByZero, "negative power of zero");
    return k == 0 ? 1 : 0;
  }
  const std::int64_t g = group_order();
  std::int64_t r = static_cast<std::int64_t>(static_cast<i128>(log_[a]) * (k % g) % g);
  if (r < 0) r += g;
  return exp_[static_cast<std::size_t>(r)];
}

std::uint32_t Field::log(Elem x) const {
  if (x == 0) fail(ErrorKind::LogOfZero, "discrete log of zero");
  if (x >= order_) fail(ErrorKind::FieldMismatch, "element outside " + name());
  return log_[x];
}

std::vector<std::uint32_t> Field::coefficients(Elem x) const {
  std::vector<std::uint32_t> out(e_);
  for (unsigned i = 0; i < e_; ++i) {
    out[i] = x % p_;
    x /= p_;
  }
  return out;
}

Elem Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > e_) fail(ErrorKind::InvalidArgument, "too many coefficients for " + name());
  Elem out = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) fail(ErrorKind::InvalidArgument, "coefficient out of range");
    out = out * p_ + coeffs[i];
  }
  return out;
}

bool Field::in_subfield(unsigned sub_degree, Elem x) const {
  if (sub_degree == 0 || e_ % sub_degree != 0)
    fail(ErrorKind::DegreeNotDivisor, std::to_string(sub_degree) + " does not divide " + std::to_string(e_));
  if (x == 0) return true;
  const std::uint64_t q = ipow(p_, sub_degree);
  return log(x) % (group_order() / (q - 1)) == 0;
}

Elem Field::relative_trace(unsigned sub_degree, Elem x) const {
  if (sub_degree == 0 || e_ % sub_degree != 0)
    fail(ErrorKind::DegreeNotDivisor, std::to_string(sub_degree) + " does not divide " + std::to_string(e_));
  if (x == 0) return 0;
  const std::uint64_t g = group_order();
  const std::uint64_t q = ipow(p_, sub_degree);
  const unsigned m = e_ / sub_degree;
  const std::uint64_t l = log(x);
  std::uint64_t qi = 1;
  Elem acc = 0;
  for (unsigned i = 0; i < m; ++i) {
    acc = add(acc, exp_[mul_mod(l, qi, g)]);
    qi = mul_mod(qi, q, g);
  }
  if (pow(acc, static_cast<std::int64_t>(q)) != acc)
    fail(ErrorKind::NotSubfield, "trace value escaped the subfield");
  return acc;
}

std::vector<Elem> Field::trace_by_exponent(unsigned sub_degree) const {
  if (sub_degree == 0 || e_ % sub_degree != 0)
    fail(ErrorKind::DegreeNotDivisor, std::to_string(sub_degree) + " does not divide " + std::to_string(e_));
  const std::uint64_t g = group_order();
  const std::uint64_t q = ipow(p_, sub_degree);
  const unsigned m = e_ / sub_degree;
  std::vector<std::uint64_t> qpow(m);
  qpow[0] = 1;
  for (unsigned i = 1; i < m; ++i) qpow[i] = mul_mod(qpow[i - 1], q, g);
  std::vector<Elem> out(g);
  for (std::uint64_t t = 0; t < g; ++t) {
    Elem acc = 0;
    for (unsigned i = 0; i < m; ++i) acc = add(acc, exp_[mul_mod(t, qpow[i], g)]);
    out[t] = acc;
  }
  return out;
}

std::string Field::to_string(Elem x) const {
  auto c = coefficients(x);
  return poly::to_string(Polynomial(c.begin(), c.end()));
}

std::string Field::name() const {
  return "F_" + std::to_string(p_) + (e_ > 1 ? "^" + std::to_string(e_) : std::string{});
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) fail(ErrorKind::InvalidArgument, "null field");
  if (!field_->contains(value_)) fail(ErrorKind::FieldMismatch, "value outside " + field_->name());
}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field() && !a.field()->same_as(*b.field()))
    fail(ErrorKind::FieldMismatch, a.field()->name() + " vs " + b.field()->name());
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_->add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_->sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_->mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.field_, a.field_->div(a.value_, b.value_)};
}
bool operator==(const FieldElement& a, const FieldElement& b) {
  return (a.field_ == b.field_ || a.field_->same_as(*b.field_)) && a.value_ == b.value_;
}

FieldElement FieldElement::pow(std::int64_t k) const { return {field_, field_->pow(value_, k)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op, std::int64_t exponent) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    case ArithOp::pow: return a.pow(exponent);
    case ArithOp::inv: return a.inv();
  }
  fail(ErrorKind::InvalidArgument, "unknown op");
}

std::uint32_t discrete_log(const FieldElement& x) { return x.field()->log(x.value()); }

FieldElement relative_trace(const FieldElement& x, unsigned sub_degree) {
  return {x.field(), x.field()->relative_trace(sub_degree, x.value())};
}

// ---------------------------------------------------------------------------

SubfieldEmbedding::SubfieldEmbedding(FieldPtr big, unsigned sub_degree)
    : big_(std::move(big)), sub_degree_(sub_degree) {
  const unsigned e = big_->degree();
  if (sub_degree == 0 || e % sub_degree != 0)
    fail(ErrorKind::DegreeNotDivisor, std::to_string(sub_degree) + " does not divide " + std::to_string(e));
  const std::uint32_t p = big_->characteristic();
  const std::uint64_t q = ipow(p, sub_degree);
  step_ = big_->group_order() / (q - 1);
  const Elem gamma = big_->exp(step_);
  // Minimal polynomial of gamma: prod_{i < d} (X - gamma^(p^i)), computed in F_Q[X].
  std::vector<Elem> mp{1};
  Elem conj = gamma;
  for (unsigned i = 0; i < sub_degree; ++i) {
    std::vector<Elem> next(mp.size() + 1, 0);
    const Elem neg_root = big_->neg(conj);
    for (std::size_t j = 0; j < mp.size(); ++j) {
      next[j + 1] = big_->add(next[j + 1], mp[j]);
      next[j] = big_->add(next[j], big_->mul(mp[j], neg_root));
    }
    mp = std::move(next);
    conj = big_->pow(conj, p);
  }
  Polynomial f(mp.size());
  for (std::size_t j = 0; j < mp.size(); ++j) {
    if (mp[j] >= p) fail(ErrorKind::NotSubfield, "minimal polynomial not over the prime field");
    f[j] = mp[j];
  }
  small_ = Field::make(p, sub_degree, f, big_->order());
}

Elem SubfieldEmbedding::to_small(Elem x) const {
  if (x == 0) return 0;
  const std::uint32_t l = big_->log(x);
  if (l % step_ != 0) fail(ErrorKind::NotSubfield, big_->to_string(x) + " is not in the subfield");
  return small_->exp(l / step_);
}

}  // namespace bsym
