#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bsym/codes.hpp"
#include "bsym/enumerators.hpp"

namespace bsym {

inline constexpr std::uint64_t kDefaultSubspaceLimit = 10'000'000;

/// Number of b-dimensional subspaces of F_q^k, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(unsigned k, unsigned b, std::uint64_t q);

/// Wei's generalized Hamming weight by exhaustive RREF enumeration of b-subspaces of the message space.
std::uint64_t ghw_brute(const Code& code, std::size_t b, std::uint64_t subspace_limit = kDefaultSubspaceLimit);

struct ClosedValue {
  std::uint64_t value;
  std::string source;
};

/// N1 = 1: (q^b-1)Q/(q^b N). N1 = 2: small-b and large-b branches.
ClosedValue ghw_closed(const Code& code, std::size_t b);

/// Minimum b-symbol distance from the U profile (N1 = 1, N1 = 2, semi-primitive), or n for b >= k0.
ClosedValue min_db_closed(const Code& code, std::size_t b, const UProfile& uprof);

enum class HierarchyMethod { brute, closed, automatic };

struct HierarchyOptions {
  HierarchyMethod method = HierarchyMethod::automatic;
  bool ghw = false;
  std::uint64_t enumeration_limit = kDefaultEnumerationLimit;
  std::uint64_t subspace_limit = kDefaultSubspaceLimit;
};

struct HierarchyReport {
  std::string code;
  std::size_t n = 0;
  unsigned k0 = 0;
  /// Entry b-1 holds d_b.
  std::vector<std::uint64_t> db;
  std::vector<std::string> db_method;
  /// Entry b-1 holds the generalized weight for b <= k0 when computed.
  std::vector<std::optional<std::uint64_t>> ghw;
  std::vector<std::string> ghw_method;
  std::vector<std::optional<bool>> equal;

  /// Strict increase on [1, k0] and constant n afterwards.
  bool strict_shape() const;
  /// d_b >= generalized weight wherever both are known.
  bool dominance() const;
};

HierarchyReport bsymbol_hierarchy(const Code& code, const HierarchyOptions& opt = {});

struct EqualityReport {
  std::size_t b;
  std::uint64_t db;
  std::uint64_t ghw;
  bool equal;
  bool condition1;
  bool condition2;
  /// "endpoint", "condition1", "condition2:i=<i>,<value>" or "none".
  std::string condition_fired;
  bool predicted;
};

/// N1 = 2 only.
EqualityReport equality_report(const Code& code, std::size_t b, const HierarchyOptions& opt = {});

}  // namespace bsym
