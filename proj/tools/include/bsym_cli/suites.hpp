#pragma once

#include <cstdint>
#include <optional>

#include "bsym/codes.hpp"
#include "bsym_cli/report.hpp"

namespace bsym::cli {

inline constexpr int kGridManifestVersion = 1;

struct SuiteOptions {
  std::uint64_t max_Q = 4096;
  std::uint64_t dft_max_Q = 1024;
  std::uint64_t probe_max_Q = 256;
  std::uint64_t hierarchy_codeword_limit = std::uint64_t{1} << 16;
  std::uint64_t subspace_limit = 10'000'000;
  std::uint64_t enumeration_limit = kDefaultEnumerationLimit;
  std::uint64_t seed = 1;
  bool extended = false;
  /// Circulant scan tolerance; the library default when unset.
  std::optional<double> tol;
};

Json to_json(const SuiteOptions& o);

/// Modulus x^10 + 2x^6 + 2x^5 + 2x^4 + x + 2 of F_{3^10} (Conway).
Polynomial conway_3_10();

VerificationReport field_suite(const SuiteOptions& o);
VerificationReport sparse_word_suite(const SuiteOptions& o);
/// Optionally fills the CSV table Q,q,b,N,N1,U.
VerificationReport u_table_suite(const SuiteOptions& o, Table* table = nullptr);
VerificationReport closed_form_suite(const SuiteOptions& o);
VerificationReport case_formula_suite(const SuiteOptions& o);
VerificationReport ternary_pair_suite(const SuiteOptions& o);
VerificationReport shortened_simplex_suite(const SuiteOptions& o, Table* table = nullptr);
VerificationReport hierarchy_suite(const SuiteOptions& o);
VerificationReport period_suite(const SuiteOptions& o);
VerificationReport circulant_scan_suite(const SuiteOptions& o, Table* table = nullptr);
VerificationReport u_property_suite(const SuiteOptions& o);

/// Every suite above; the ternary pair suite only when `extended`.
VerificationReport verify_all(const SuiteOptions& o);

}  // namespace bsym::cli
