#include "bsym/arith.hpp"

#include <limits>
#include <numeric>

#include "bsym/error.hpp"

namespace bsym {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
    r *= base;
  }
  return r;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  auto r = checked_pow(base, exp);
  if (!r) fail(ErrorKind::InvalidArgument, "integer power overflows 64 bits");
  return *r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::uint64_t r = 1;
  base %= mod;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return r;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 1;
  if (std::gcd(a % n, n) != 1) fail(ErrorKind::InvalidArgument, "order undefined: gcd(a, n) != 1");
  // ord divides phi(n); computing phi by factoring keeps this exact for any n.
  std::uint64_t phi = n;
  for (auto p : prime_factors(n)) phi = phi / p * (p - 1);
  std::uint64_t ord = phi;
  for (auto p : prime_factors(phi)) {
    while (ord % p == 0 && pow_mod(a, ord / p, n) == 1) ord /= p;
  }
  return ord;
}

std::optional<std::uint64_t> exact_sqrt(std::uint64_t n) {
  std::uint64_t r = 0;
  std::uint64_t lo = 0, hi = std::min<std::uint64_t>(n, 0xFFFFFFFFull);
  while (lo <= hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (mid * mid <= n) {
      r = mid;
      lo = mid + 1;
    } else {
      if (mid == 0) break;
      hi = mid - 1;
    }
  }
  if (r * r == n) return r;
  return std::nullopt;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  auto f = prime_factors(n);
  if (f.size() != 1) return std::nullopt;
  unsigned k = 0;
  while (n > 1) {
    n /= f[0];
    ++k;
  }
  return PrimePower{f[0], k};
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

std::optional<std::int64_t> exact_div(i128 num, i128 den) {
  if (den == 0 || num % den != 0) return std::nullopt;
  i128 r = num / den;
  if (r > std::numeric_limits<std::int64_t>::max() || r < std::numeric_limits<std::int64_t>::min())
    return std::nullopt;
  return static_cast<std::int64_t>(r);
}

}  // namespace bsym
