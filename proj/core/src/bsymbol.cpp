#include "bsym/bsymbol.hpp"

#include <algorithm>

#include "bsym/error.hpp"

namespace bsym {

namespace {

void check_b(std::size_t n, std::size_t b) {
  if (b < 1 || b > n)
    fail(ErrorKind::BOutOfRange, "b = " + std::to_string(b) + " outside [1, " + std::to_string(n) + "]");
}

}  // namespace

bool Word::is_zero() const noexcept {
  return std::all_of(symbols.begin(), symbols.end(), [](Elem e) { return e == 0; });
}

SupportSet SupportSet::complement() const {
  SupportSet out;
  out.n = n;
  std::size_t j = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (j < indices.size() && indices[j] == i) {
      ++j;
      continue;
    }
    out.indices.push_back(i);
  }
  return out;
}

Word cyclic_shift(const Word& x, std::int64_t t) {
  const auto n = static_cast<std::int64_t>(x.size());
  Word out{x.field, std::vector<Elem>(x.size())};
  if (n == 0) return out;
  const std::int64_t r = ((t % n) + n) % n;
  for (std::int64_t i = 0; i < n; ++i) out.symbols[(i + r) % n] = x.symbols[i];
  return out;
}

std::vector<std::vector<Elem>> pi_b(const Word& x, std::size_t b) {
  const std::size_t n = x.size();
  check_b(n, b);
  std::vector<std::vector<Elem>> out(n, std::vector<Elem>(b));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < b; ++t) out[i][t] = x.symbols[(i + t) % n];
  return out;
}

std::size_t hamming_weight(std::span<const Elem> x) noexcept {
  return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](Elem e) { return e != 0; }));
}

std::size_t w_b(std::span<const Elem> x, std::size_t b) {
  const std::size_t n = x.size();
  check_b(n, b);
  // Rotate so the scan starts right after a nonzero symbol; then no zero run wraps.
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] != 0) {
      start = i;
      break;
    }
  if (start == n) return 0;
  std::size_t zero_windows = 0;
  std::size_t run = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    if (x[(start + k) % n] == 0) {
      ++run;
    } else {
      if (run >= b) zero_windows += run - b + 1;
      run = 0;
    }
  }
  return n - zero_windows;
}

std::size_t w_b(const Word& x, std::size_t b) { return w_b(std::span<const Elem>(x.symbols), b); }

Word sub(const Word& x, const Word& y) {
  if (x.size() != y.size()) fail(ErrorKind::LengthMismatch, "words of different length");
  if (x.field != y.field && !(x.field && y.field && x.field->same_as(*y.field)))
    fail(ErrorKind::FieldMismatch, "words over different fields");
  Word out{x.field, std::vector<Elem>(x.size())};
  for (std::size_t i = 0; i < x.size(); ++i) out.symbols[i] = x.field->sub(x.symbols[i], y.symbols[i]);
  return out;
}

std::size_t d_b(const Word& x, const Word& y, std::size_t b) { return w_b(sub(x, y), b); }

SupportSet bsymbol_support(const Word& x, std::size_t b) {
  const std::size_t n = x.size();
  check_b(n, b);
  std::vector<char> mark(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x.symbols[i] == 0) continue;
    for (std::size_t t = 0; t < b; ++t) mark[(i + t) % n] = 1;
  }
  SupportSet out;
  out.n = n;
  for (std::uint32_t i = 0; i < n; ++i)
    if (mark[i]) out.indices.push_back(i);
  return out;
}

SupportSet window_support(const Word& x, std::size_t b) {
  auto windows = pi_b(x, b);
  SupportSet out;
  out.n = x.size();
  for (std::uint32_t i = 0; i < windows.size(); ++i)
    if (std::any_of(windows[i].begin(), windows[i].end(), [](Elem e) { return e != 0; })) out.indices.push_back(i);
  return out;
}

}  // namespace bsym
