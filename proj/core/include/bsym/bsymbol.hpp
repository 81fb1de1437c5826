#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bsym/gf.hpp"

namespace bsym {

/// Vector over a (small) field. Indices are cyclic for every windowed operation.
struct Word {
  FieldPtr field;
  std::vector<Elem> symbols;

  std::size_t size() const noexcept { return symbols.size(); }
  bool is_zero() const noexcept;
  friend bool operator==(const Word& a, const Word& b) { return a.symbols == b.symbols; }
};

/// Sorted coordinate subset of {0, ..., n-1}.
struct SupportSet {
  std::size_t n = 0;
  std::vector<std::uint32_t> indices;

  std::size_t size() const noexcept { return indices.size(); }
  SupportSet complement() const;
  friend bool operator==(const SupportSet& a, const SupportSet& b) = default;
};

/// tau^t(x): tau moves x_i to position i + 1.
Word cyclic_shift(const Word& x, std::int64_t t);

/// Entry i is (x_i, ..., x_{i+b-1}).
std::vector<std::vector<Elem>> pi_b(const Word& x, std::size_t b);

std::size_t hamming_weight(std::span<const Elem> x) noexcept;

/// n minus the number of all-zero cyclic windows of length b, via zero runs.
std::size_t w_b(std::span<const Elem> x, std::size_t b);
std::size_t w_b(const Word& x, std::size_t b);

std::size_t d_b(const Word& x, const Word& y, std::size_t b);

/// Union of supp(tau^t x) for t < b.
SupportSet bsymbol_support(const Word& x, std::size_t b);

/// Start indices of the nonzero windows of pi_b(x).
SupportSet window_support(const Word& x, std::size_t b);

Word sub(const Word& x, const Word& y);

}  // namespace bsym
