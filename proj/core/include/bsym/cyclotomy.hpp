#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bsym/gf.hpp"

namespace bsym {

/// Element sum_t c_t zeta_p^t of Z[zeta_p], kept canonical with c_{p-1} = 0.
class CyclotomicValue {
 public:
  CyclotomicValue() = default;
  /// `counts` has length p and need not be canonical.
  CyclotomicValue(std::uint32_t p, std::vector<std::int64_t> counts);
  static CyclotomicValue integer(std::uint32_t p, std::int64_t v);

  std::uint32_t characteristic() const noexcept { return p_; }
  const std::vector<std::int64_t>& counts() const noexcept { return c_; }

  bool is_integer() const noexcept;
  std::optional<std::int64_t> integer_value() const noexcept;
  std::complex<double> approx() const;
  /// Absolute error of approx() from the floating evaluation.
  double approx_error() const;

  CyclotomicValue& operator+=(const CyclotomicValue& o);
  CyclotomicValue& operator-=(const CyclotomicValue& o);
  CyclotomicValue& operator*=(std::int64_t k);
  friend CyclotomicValue operator+(CyclotomicValue a, const CyclotomicValue& b) { return a += b; }
  friend CyclotomicValue operator-(CyclotomicValue a, const CyclotomicValue& b) { return a -= b; }
  friend CyclotomicValue operator*(CyclotomicValue a, std::int64_t k) { return a *= k; }
  friend CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b);
  friend bool operator==(const CyclotomicValue& a, const CyclotomicValue& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }

  std::string to_string() const;

 private:
  void canonicalize();

  std::uint32_t p_ = 2;
  std::vector<std::int64_t> c_{0, 0};
};

/// Exponents i + k*j (0 <= j < (Q-1)/k) of the class C_i^{(k,Q)}.
std::vector<std::uint64_t> cyclotomic_class_exponents(std::uint64_t group_order, std::uint64_t k,
                                                      std::uint64_t i);
std::vector<Elem> cyclotomic_class(const Field& f, std::uint64_t k, std::uint64_t i);

/// Gaussian periods of order k over F_Q.
struct PeriodSystem {
  std::uint32_t p = 2;
  std::uint64_t Q = 0;
  std::uint64_t k = 1;
  std::vector<CyclotomicValue> periods;
  std::vector<std::complex<double>> approx;
  double error_bound = 0.0;
};

/// Absolute trace T_{Q/p}(alpha^t) for t = 0 .. Q-2, as integers in [0, p).
std::vector<std::uint32_t> absolute_trace_table(const Field& f);

PeriodSystem period_system(const Field& f, std::uint64_t k);
PeriodSystem period_system_from_traces(std::uint32_t p, std::uint64_t Q, std::uint64_t k,
                                       const std::vector<std::uint32_t>& abs_trace);
CyclotomicValue gaussian_period_exact(const Field& f, std::uint64_t k, std::uint64_t i);

enum class ClosedCase { quadratic, cubic, quartic, semi_primitive_odd, semi_primitive_other };
std::string to_string(ClosedCase c);

/// Parameters of the semi-primitive case: least j with p^j = -1 mod k, and Q = p^(2 j gamma).
struct SemiPrimitive {
  unsigned j;
  unsigned gamma;
  /// gamma, p and (p^j + 1)/k all odd.
  bool odd_branch;
};
std::optional<SemiPrimitive> semi_primitive_data(std::uint32_t p, unsigned sm, std::uint64_t k);

/// eta_i = (a_i + c_i * r) / den with r = sqrt(Q), or r = sqrt(-Q) when `imaginary`.
struct ClosedPeriods {
  ClosedCase tag;
  std::uint64_t Q;
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> c;
  std::int64_t den = 1;
  bool imaginary = false;
  /// Exact values when sqrt(Q) is an integer.
  std::optional<std::vector<std::int64_t>> integers;

  std::complex<double> approx(std::size_t i) const;
};

ClosedPeriods gaussian_period_closed_form(std::uint32_t p, unsigned s, unsigned m, std::uint64_t k);

/// G(psi_j) = sum_{c != 0} psi_j(c) chi_1(c) with psi_j(alpha^t) = exp(2 pi i j t / (Q-1)).
struct GaussSum {
  std::complex<double> value;
  double error_bound;
};
GaussSum gaussian_sum_numeric(const Field& f, std::uint64_t j);
/// G(psi^j) for j = 0 .. k-1 where psi(alpha^t) = exp(2 pi i t / k).
std::vector<std::complex<double>> gaussian_sums_of_order(const Field& f, std::uint64_t k);

enum class Verdict { yes, no, inconclusive };
std::string to_string(Verdict v);

struct CirculantCheck {
  Verdict invertible;
  double min_abs_eval;
  double error_bound;
  double tol;
};

double default_circulant_tolerance(std::uint64_t Q, std::uint64_t k);
CirculantCheck circulant_invertibility(const PeriodSystem& ps, std::optional<double> tol = std::nullopt);

/// Compares sum_i eta_i^2 and the shifted sums sum_i eta_i eta_{i+j} against
/// Q theta_j - (Q-1)/k, where theta_j = 1 iff -1 lies in C_j.
struct AutocorrelationProbe {
  std::vector<std::int64_t> target;
  std::optional<std::int64_t> square_sum;
  std::vector<std::optional<std::int64_t>> shifted;
  bool unshifted_holds;
  bool shifted_holds;
};
AutocorrelationProbe autocorrelation_probe(const PeriodSystem& ps);

}  // namespace bsym
