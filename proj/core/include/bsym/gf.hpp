#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bsym {

/// Packed element of F_{p^e}: the coefficient vector (c_0, ..., c_{e-1}) over F_p
/// stored as the base-p integer sum c_i p^i. Zero is 0, one is 1, and the
/// constants of the prime subfield are their own integer values.
using Elem = std::uint32_t;

/// Polynomial over F_p, coefficients low-degree first.
using Polynomial = std::vector<std::uint32_t>;

inline constexpr std::uint64_t kDefaultTableLimit = std::uint64_t{1} << 24;

namespace poly {

/// Rabin's test over F_p. The polynomial must be monic.
bool is_irreducible(const Polynomial& f, std::uint32_t p);

/// Irreducible and x generates the multiplicative group of F_p[x]/(f).
bool is_primitive(const Polynomial& f, std::uint32_t p);

/// Lexicographically smallest monic primitive polynomial of degree e, ranking the
/// candidates by the integer sum c_i p^i (i < e). For e = 1 this returns x - g where g is
/// the smallest generator of F_p^*.
Polynomial default_primitive(std::uint32_t p, unsigned e);

std::string to_string(const Polynomial& f);

}  // namespace poly

/// A finite field F_{p^e} with verified primitive modulus and log / antilog / Zech
/// tables keyed by the root alpha of the modulus. Immutable after construction.
class Field {
 public:
  static std::shared_ptr<const Field> make(std::uint32_t p, unsigned e,
                                           std::optional<Polynomial> modulus = std::nullopt,
                                           std::uint64_t table_limit = kDefaultTableLimit);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return e_; }
  std::uint32_t order() const noexcept { return order_; }
  std::uint32_t group_order() const noexcept { return order_ - 1; }
  const Polynomial& modulus() const noexcept { return modulus_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  /// The table-defining primitive element alpha.
  Elem primitive() const noexcept { return exp_[1 % group_order()]; }
  bool contains(Elem x) const noexcept { return x < order_; }

  Elem add(Elem a, Elem b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint32_t la = log_[a];
    std::uint32_t d = log_[b] + group_order() - la;
    if (d >= group_order()) d -= group_order();
    const std::uint32_t z = zech_[d];
    if (z == kNoLog) return 0;
    return exp_[la + z];
  }
  Elem neg(Elem a) const noexcept {
    if (p_ == 2 || a == 0) return a;
    return exp_[log_[a] + group_order() / 2];
  }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem div(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::int64_t k) const;

  /// Discrete log to base alpha, in [0, p^e - 2].
  std::uint32_t log(Elem x) const;
  Elem exp(std::uint64_t k) const noexcept { return exp_[k % group_order()]; }

  std::vector<std::uint32_t> coefficients(Elem x) const;
  Elem from_coefficients(std::span<const std::uint32_t> coeffs) const;

  bool in_subfield(unsigned sub_degree, Elem x) const;
  /// T_{F_{p^e} / F_{p^d}}(x) = sum_{i < e/d} x^{(p^d)^i}.
  Elem relative_trace(unsigned sub_degree, Elem x) const;
  /// T(alpha^t) for t = 0 .. p^e - 2.
  std::vector<Elem> trace_by_exponent(unsigned sub_degree) const;

  bool same_as(const Field& other) const noexcept {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }
  std::string to_string(Elem x) const;
  std::string name() const;

 private:
  static constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;

  Field(std::uint32_t p, unsigned e, Polynomial modulus);
  Elem times_x(Elem v) const;

  std::uint32_t p_;
  unsigned e_;
  std::uint32_t order_;
  Polynomial modulus_;
  std::vector<Elem> exp_;           // doubled so exp_[a + b] needs no reduction
  std::vector<std::uint32_t> log_;  // log_[0] = kNoLog
  std::vector<std::uint32_t> zech_; // log(1 + alpha^d); empty for p = 2
};

using FieldPtr = std::shared_ptr<const Field>;

/// Same as Field::make.
FieldPtr make_field(std::uint32_t p, unsigned e, std::optional<Polynomial> modulus = std::nullopt,
                    std::uint64_t table_limit = kDefaultTableLimit);

/// An element bound to its field. Mixing fields raises FieldMismatch.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);

  const FieldPtr& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  FieldElement pow(std::int64_t k) const;
  FieldElement inv() const;

 private:
  FieldPtr field_;
  Elem value_;
};

enum class ArithOp { add, sub, mul, div, pow, inv };

/// Binary ops use b; pow raises a to `exponent`; inv ignores b.
FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op,
                         std::int64_t exponent = 0);

std::uint32_t discrete_log(const FieldElement& x);

FieldElement relative_trace(const FieldElement& x, unsigned sub_degree);

/// F_q inside F_Q realised as F_q^* = <alpha^((Q-1)/(q-1))>. The small field is built
/// from the minimal polynomial of that generator, so the map gamma^j <-> x^j is a field
/// isomorphism and subfield symbols can be reported as discrete logs.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(FieldPtr big, unsigned sub_degree);

  const FieldPtr& big() const noexcept { return big_; }
  const FieldPtr& small() const noexcept { return small_; }
  unsigned sub_degree() const noexcept { return sub_degree_; }
  /// (Q - 1) / (q - 1): log of the subfield generator inside F_Q.
  std::uint64_t step() const noexcept { return step_; }

  Elem to_small(Elem x) const;
  Elem to_big(Elem y) const noexcept {
    if (y == 0) return 0;
    return big_->exp(static_cast<std::uint64_t>(small_->log(y)) * step_);
  }

 private:
  FieldPtr big_;
  FieldPtr small_;
  unsigned sub_degree_;
  std::uint64_t step_;
};

}  // namespace bsym
