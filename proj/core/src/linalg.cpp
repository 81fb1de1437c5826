#include "bsym/linalg.hpp"

namespace bsym {

std::vector<std::size_t> rref(const Field& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const Elem inv = f.inv(m[r][c]);
    for (auto& x : m[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Elem factor = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Field& f, Matrix m) { return rref(f, m).size(); }

Matrix left_kernel(const Field& f, const Matrix& m) {
  const std::size_t rows = m.size();
  if (rows == 0) return {};
  const std::size_t cols = m[0].size();
  // Kernel of the transpose.
  Matrix t(cols, std::vector<Elem>(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  auto pivots = rref(f, t);
  std::vector<char> is_pivot(rows, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  Matrix basis;
  for (std::size_t free = 0; free < rows; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(rows, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(t[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Elem> vec_mat(const Field& f, const std::vector<Elem>& u, const Matrix& m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<Elem> out(cols, 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) out[j] = f.add(out[j], f.mul(u[i], m[i][j]));
  }
  return out;
}

}  // namespace bsym
