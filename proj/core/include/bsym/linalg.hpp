#pragma once

#include <cstdint>
#include <vector>

#include "bsym/gf.hpp"

namespace bsym {

using Matrix = std::vector<std::vector<Elem>>;

/// Visits every vector of F_p^digits in a modular Gray order: step(r) is called
/// p^digits - 1 times and each call means "digit r increased by one".
template <class Step>
void gray_walk(std::uint32_t p, std::size_t digits, Step&& step) {
  std::vector<std::uint32_t> t(digits, 0);
  for (;;) {
    std::size_t r = 0;
    while (r < digits && t[r] == p - 1) ++r;
    if (r == digits) return;
    for (std::size_t i = 0; i < r; ++i) t[i] = 0;
    ++t[r];
    step(r);
  }
}

/// Calls fn(v) for all q^k combinations v of the rows over F_q, starting with zero.
template <class Fn>
void for_each_combination(const Field& f, const Matrix& rows, Fn&& fn) {
  const std::size_t len = rows.empty() ? 0 : rows[0].size();
  Matrix steps;
  Elem basis = 1;
  std::vector<Elem> basis_elems;
  for (unsigned l = 0; l < f.degree(); ++l) {
    basis_elems.push_back(basis);
    basis *= f.characteristic();
  }
  for (const auto& row : rows)
    for (Elem be : basis_elems) {
      std::vector<Elem> s(len);
      for (std::size_t i = 0; i < len; ++i) s[i] = f.mul(be, row[i]);
      steps.push_back(std::move(s));
    }
  std::vector<Elem> cur(len, 0);
  fn(static_cast<const std::vector<Elem>&>(cur));
  gray_walk(f.characteristic(), steps.size(), [&](std::size_t r) {
    const auto& s = steps[r];
    for (std::size_t i = 0; i < len; ++i) cur[i] = f.add(cur[i], s[i]);
    fn(static_cast<const std::vector<Elem>&>(cur));
  });
}

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(const Field& f, Matrix& m);

std::size_t rank(const Field& f, Matrix m);

/// Basis of {u : u * m = 0} for an r x c matrix m (left kernel, vectors of length r).
Matrix left_kernel(const Field& f, const Matrix& m);

/// u * m for a row vector u.
std::vector<Elem> vec_mat(const Field& f, const std::vector<Elem>& u, const Matrix& m);

}  // namespace bsym
