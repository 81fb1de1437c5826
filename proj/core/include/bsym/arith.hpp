#pragma once

#include <cstdint>
#include <optional>
#include <vector>

// Small integer helpers shared by the field, code and formula layers.
namespace bsym {

using i128 = __int128;

bool is_prime(std::uint64_t n);

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// All positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Saturating power; returns nullopt on overflow of 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

/// Power that throws InvalidArgument on overflow.
std::uint64_t ipow(std::uint64_t base, unsigned exp);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Multiplicative order of a modulo n; requires gcd(a, n) = 1. ord(a mod 1) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

/// Exact integer square root if n is a perfect square.
std::optional<std::uint64_t> exact_sqrt(std::uint64_t n);

/// Writes n = p^k if n is a prime power.
struct PrimePower {
  std::uint64_t p;
  unsigned k;
};
std::optional<PrimePower> as_prime_power(std::uint64_t n);

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b);

/// Exact division of a 128-bit numerator; nullopt if not divisible.
std::optional<std::int64_t> exact_div(i128 num, i128 den);

}  // namespace bsym
