#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bsym/codes.hpp"
#include "bsym/cyclotomy.hpp"

namespace bsym {

/// Class statistics of the sums u_1 + u_2 theta + ... + u_b theta^{b-1} over nonzero tuples.
struct UProfile {
  std::size_t b = 1;
  std::uint64_t N1 = 1;
  /// Tuples per class.
  std::vector<std::uint64_t> counts;
  /// Distinct nonzero field elements per class.
  std::vector<std::uint64_t> image_counts;
  /// Nonzero tuples whose sum vanishes (only when b > k0).
  std::uint64_t degenerate = 0;

  std::uint64_t total() const;
  bool uniform() const;
};

UProfile u_profile(const Code& code, std::size_t b, std::uint64_t limit = kDefaultEnumerationLimit);

/// Class of sum u_i theta^{i-1} for a tuple over the small field; nullopt if the sum is zero.
std::optional<std::uint64_t> tuple_class(const Code& code, std::span<const Elem> u);

/// Number of squares among the normalized tuples (leading nonzero entry 1). Requires odd Q.
std::uint64_t square_count_normalized(const Code& code, std::size_t b);

/// Weight of c(beta) for beta in class `class_index`, from the U profile and exact periods of order N1.
std::int64_t closed_form_weight(const Code& code, std::size_t b, std::uint64_t class_index,
                                const PeriodSystem& periods, const UProfile& uprof);

/// Beta-indexed distribution 1 + sum_i ((Q-1)/N1) T^{u_i}.
WeightDistribution closed_form_distribution(const Code& code, std::size_t b, const PeriodSystem& periods,
                                            const UProfile& uprof);

enum class CaseTag { general, n1_one, n1_two, n1_three, n1_four, semi_primitive_odd, semi_primitive_other };
std::string to_string(CaseTag t);

struct ClosedFormWeights {
  CaseTag tag = CaseTag::general;
  /// weights[i] is the weight of c(beta) for beta in C_i^{(N1,Q)}.
  std::vector<std::int64_t> weights;

  WeightDistribution distribution(const Code& code, std::size_t b) const;
};

/// Explicit per-class weights from sqrt(Q) sign rules and the U profile alone.
ClosedFormWeights special_case_distribution(const Code& code, std::size_t b, const UProfile& uprof);

/// Which explicit case would fire, or nullopt.
std::optional<CaseTag> special_case_tag(const Code& code);

struct ConstantWeightCheck {
  bool u_uniform;
  bool is_constant;
  std::optional<std::int64_t> weight;
  Verdict matrix_invertible;
  /// "iff" when the circulant matrix is known invertible, "if" otherwise.
  std::string claim;
  bool consistent;
};

ConstantWeightCheck constant_weight_check(const Code& code, std::size_t b, const PeriodSystem& periods,
                                          std::uint64_t limit = kDefaultEnumerationLimit);

}  // namespace bsym
