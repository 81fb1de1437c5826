#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bsym/bsymbol.hpp"
#include "bsym/gf.hpp"
#include "bsym/linalg.hpp"

namespace bsym {

inline constexpr std::uint64_t kDefaultEnumerationLimit = std::uint64_t{1} << 20;

/// Multiset {w_b -> count}.
struct WeightDistribution {
  std::size_t b = 1;
  std::size_t n = 0;
  std::map<std::uint64_t, std::uint64_t> entries;

  std::uint64_t total() const;
  std::optional<std::uint64_t> min_nonzero() const;
  /// "1 + 15T^8"
  std::string enumerator() const;
  WeightDistribution scaled(std::uint64_t factor) const;
  friend bool operator==(const WeightDistribution& a, const WeightDistribution& b) = default;
};

/// The irreducible cyclic code C(Q, N) = {(T_{Q/q}(beta theta^i))_{i<n}} with theta = alpha^N.
class Code {
 public:
  Code(FieldPtr big, std::uint64_t q, std::uint64_t N);

  const FieldPtr& big() const noexcept { return emb_.big(); }
  const FieldPtr& small() const noexcept { return emb_.small(); }
  const SubfieldEmbedding& embedding() const noexcept { return emb_; }

  std::uint32_t p() const noexcept { return big()->characteristic(); }
  unsigned s() const noexcept { return emb_.sub_degree(); }
  unsigned m() const noexcept { return big()->degree() / s(); }
  std::uint64_t q() const noexcept { return q_; }
  std::uint64_t Q() const noexcept { return big()->order(); }
  std::uint64_t N() const noexcept { return N_; }
  std::uint64_t n() const noexcept { return n_; }
  std::uint64_t N1() const noexcept { return N1_; }
  unsigned k0() const noexcept { return k0_; }
  /// N > 2 and N | q^j + 1 for some j.
  bool semi_primitive() const noexcept { return semi_primitive_; }
  Elem theta() const noexcept { return big()->exp(N_); }
  std::string label() const;

  /// c(alpha^t); the class of alpha^t is t mod N1.
  Word codeword_from_exponent(std::uint64_t t) const;
  Word codeword(Elem beta) const;
  Word zero_word() const;

  /// Exponent t0 of the first nonzero codeword c(alpha^t0); rows are its first k0 left shifts.
  std::uint64_t generator_exponent() const noexcept { return gen_exp_; }
  Matrix generator_rows() const;

  /// Calls fn(symbols) once per distinct codeword, zero first.
  template <class Fn>
  void for_each_codeword(std::uint64_t limit, Fn&& fn) const;
  std::uint64_t codeword_count() const;

 private:
  SubfieldEmbedding emb_;
  std::uint64_t q_, N_, n_, N1_;
  unsigned k0_;
  bool semi_primitive_;
  std::uint64_t gen_exp_ = 0;
  std::shared_ptr<const std::vector<Elem>> trace_;  // T(alpha^t) in the small field
};

Code build_code(FieldPtr big, std::uint64_t q, std::uint64_t N);
/// Builds F_{p^{sm}} with its default modulus.
Code build_code(std::uint32_t p, unsigned s, unsigned m, std::uint64_t N);

enum class DistributionMode { full, per_class };

struct EnumerationOptions {
  std::uint64_t limit = kDefaultEnumerationLimit;
  /// Report the multiset over all Q values of beta instead of distinct codewords.
  bool beta_view = false;
  std::uint64_t seed = 1;
};

/// per_class always reports the beta view.
WeightDistribution brute_distribution(const Code& code, std::size_t b, DistributionMode mode,
                                      const EnumerationOptions& opt = {});

/// Direct walk over every beta in F_Q.
WeightDistribution beta_distribution(const Code& code, std::size_t b, std::uint64_t limit = kDefaultEnumerationLimit);

/// Weight of c(alpha^i) for each class i < N1, with a spot check on 3 members per class.
std::vector<std::uint64_t> class_weights(const Code& code, std::size_t b, std::uint64_t seed = 1);

/// Minimum nonzero w_b. Uses full enumeration when within limit, per-class otherwise.
std::uint64_t min_db(const Code& code, std::size_t b, std::uint64_t limit = kDefaultEnumerationLimit);

/// Right-hand side of the averaging identity: sum of w_1 over span(c, tau c, ..) / (q^{b-1}(q-1)).
std::uint64_t averaged_weight(const Word& c, std::size_t b);

[[noreturn]] void fail_enumeration_limit(std::uint64_t count, std::uint64_t limit);

template <class Fn>
void Code::for_each_codeword(std::uint64_t limit, Fn&& fn) const {
  const std::uint64_t count = codeword_count();
  if (count > limit)
    fail_enumeration_limit(count, limit);
  for_each_combination(*small(), generator_rows(), std::forward<Fn>(fn));
}

}  // namespace bsym
