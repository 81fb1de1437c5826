#pragma once

#include <cstdint>
#include <string>

#include "bsym/bsymbol.hpp"
#include "bsym/codes.hpp"

namespace bsym {

struct ShortenedCode {
  std::string parent;
  FieldPtr field;
  /// Coordinates removed, and the kept ones in ascending order.
  SupportSet T;
  SupportSet kept;
  Matrix generator;
  std::size_t length = 0;
  std::size_t dimension = 0;
  std::uint64_t min_distance = 0;
  bool is_griesmer = false;
};

/// Sum of ceil(d / q^i) for i < K.
std::uint64_t griesmer_sum(std::uint64_t K, std::uint64_t d, std::uint64_t q);

/// Minimum Hamming weight over the row space, by enumeration.
std::uint64_t min_hamming_distance(const Field& f, const Matrix& rows, std::uint64_t limit = kDefaultEnumerationLimit);

/// Shortening at the complement of I_b(c); generator rows are c, tau c, ..., tau^{b-1} c on I_b(c).
ShortenedCode bsymbol_shorten(const Code& code, const Word& c, std::size_t b,
                              std::uint64_t limit = kDefaultEnumerationLimit);

/// The projective Simplex code S(m, q): c(beta)_i = T_{Q/q}(beta alpha^i) for i < (Q-1)/(q-1).
/// It is invariant under x -> (g x_{n-1}, x_0, ..., x_{n-2}) with g = alpha^n in F_q.
class SimplexCode {
 public:
  SimplexCode(FieldPtr big, std::uint64_t q);

  const FieldPtr& small() const noexcept { return emb_.small(); }
  std::uint64_t q() const noexcept { return q_; }
  std::uint64_t n() const noexcept { return n_; }
  unsigned k() const noexcept { return emb_.big()->degree() / emb_.sub_degree(); }
  std::string label() const;
  Word codeword_from_exponent(std::uint64_t t) const;
  Matrix generator_rows() const;

 private:
  SubfieldEmbedding emb_;
  std::uint64_t q_, n_;
};

SimplexCode build_simplex(std::uint32_t p, unsigned s, unsigned m);

/// Same construction with the constacyclic shifts c(alpha^{-t}) as rows.
ShortenedCode bsymbol_shorten(const SimplexCode& code, const Word& c, std::size_t b,
                              std::uint64_t limit = kDefaultEnumerationLimit);

/// A codeword of minimal b-symbol weight, the one with the smallest discrete log of beta.
Word minimal_bsymbol_codeword(const Code& code, std::size_t b);

struct GriesmerFamily {
  ShortenedCode shortened;
  std::uint64_t expected_length;
  std::uint64_t expected_dimension;
  std::uint64_t expected_distance;
  bool matches;
};

/// Requires N1 = 1 and 1 <= b <= m.
GriesmerFamily griesmer_family(const Code& code, std::size_t b, std::uint64_t limit = kDefaultEnumerationLimit);

/// Codewords vanishing on T, punctured at T.
ShortenedCode shorten_at(const Code& code, const SupportSet& T, std::uint64_t limit = kDefaultEnumerationLimit);

}  // namespace bsym
