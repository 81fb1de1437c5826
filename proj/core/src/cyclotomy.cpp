#include "bsym/cyclotomy.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bsym/arith.hpp"
#include "bsym/error.hpp"

namespace bsym {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_order(std::uint64_t group_order, std::uint64_t k) {
  if (k == 0 || group_order % k != 0)
    fail(ErrorKind::OrderNotDivisor, std::to_string(k) + " does not divide " + std::to_string(group_order));
}

std::complex<double> unit(double turns) { return std::polar(1.0, kTwoPi * turns); }

std::vector<std::complex<double>> roots_of_unity(std::uint64_t n) {
  std::vector<std::complex<double>> r(n);
  for (std::uint64_t i = 0; i < n; ++i) r[i] = unit(static_cast<double>(i) / static_cast<double>(n));
  return r;
}

const std::vector<std::complex<double>>& cached_roots(std::uint32_t p) {
  thread_local std::uint32_t last = 0;
  thread_local std::vector<std::complex<double>> table;
  if (last != p) {
    table = roots_of_unity(p);
    last = p;
  }
  return table;
}

}  // namespace

CyclotomicValue::CyclotomicValue(std::uint32_t p, std::vector<std::int64_t> counts) : p_(p), c_(std::move(counts)) {
  if (p_ < 2 || c_.size() != p_) fail(ErrorKind::InvalidArgument, "count vector must have length p");
  canonicalize();
}

CyclotomicValue CyclotomicValue::integer(std::uint32_t p, std::int64_t v) {
  std::vector<std::int64_t> c(p, 0);
  c[0] = v;
  return {p, std::move(c)};
}

void CyclotomicValue::canonicalize() {
  const std::int64_t top = c_.back();
  if (top != 0)
    for (auto& x : c_) x -= top;
}

bool CyclotomicValue::is_integer() const noexcept {
  for (std::size_t t = 1; t < c_.size(); ++t)
    if (c_[t] != 0) return false;
  return true;
}

std::optional<std::int64_t> CyclotomicValue::integer_value() const noexcept {
  if (!is_integer()) return std::nullopt;
  return c_[0];
}

std::complex<double> CyclotomicValue::approx() const {
  std::complex<double> z = 0.0;
  for (std::uint32_t t = 0; t < p_; ++t)
    if (c_[t] != 0) z += static_cast<double>(c_[t]) * cached_roots(p_)[t];
  return z;
}

double CyclotomicValue::approx_error() const {
  double mass = 0.0;
  for (auto x : c_) mass += std::abs(static_cast<double>(x));
  return 8.0 * DBL_EPSILON * (mass + p_);
}

CyclotomicValue& CyclotomicValue::operator+=(const CyclotomicValue& o) {
  if (o.p_ != p_) fail(ErrorKind::FieldMismatch, "cyclotomic values over different p");
  for (std::size_t t = 0; t < c_.size(); ++t) c_[t] += o.c_[t];
  canonicalize();
  return *this;
}

CyclotomicValue& CyclotomicValue::operator-=(const CyclotomicValue& o) {
  if (o.p_ != p_) fail(ErrorKind::FieldMismatch, "cyclotomic values over different p");
  for (std::size_t t = 0; t < c_.size(); ++t) c_[t] -= o.c_[t];
  canonicalize();
  return *this;
}

CyclotomicValue& CyclotomicValue::operator*=(std::int64_t k) {
  for (auto& x : c_) x *= k;
  return *this;
}

CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b) {
  if (a.p_ != b.p_) fail(ErrorKind::FieldMismatch, "cyclotomic values over different p");
  const std::uint32_t p = a.p_;
  std::vector<std::int64_t> r(p, 0);
  for (std::uint32_t t = 0; t < p; ++t) {
    if (a.c_[t] == 0) continue;
    for (std::uint32_t u = 0; u < p; ++u) r[(t + u) % p] += a.c_[t] * b.c_[u];
  }
  return {p, std::move(r)};
}

std::string CyclotomicValue::to_string() const {
  if (auto v = integer_value()) return std::to_string(*v);
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t t = 0; t < p_; ++t) {
    if (c_[t] == 0) continue;
    if (!first) os << (c_[t] < 0 ? " - " : " + ");
    else if (c_[t] < 0) os << "-";
    first = false;
    const auto mag = c_[t] < 0 ? -c_[t] : c_[t];
    if (t == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "z" << p_ << "^" << t;
    }
  }
  return os.str();
}

std::vector<std::uint64_t> cyclotomic_class_exponents(std::uint64_t group_order, std::uint64_t k, std::uint64_t i) {
  check_order(group_order, k);
  if (i >= k) fail(ErrorKind::IndexOutOfRange, "class index " + std::to_string(i) + " >= " + std::to_string(k));
  std::vector<std::uint64_t> out;
  out.reserve(group_order / k);
  for (std::uint64_t e = i; e < group_order; e += k) out.push_back(e);
  return out;
}

std::vector<Elem> cyclotomic_class(const Field& f, std::uint64_t k, std::uint64_t i) {
  auto ex = cyclotomic_class_exponents(f.group_order(), k, i);
  std::vector<Elem> out(ex.size());
  std::transform(ex.begin(), ex.end(), out.begin(), [&](std::uint64_t e) { return f.exp(e); });
  return out;
}

std::vector<std::uint32_t> absolute_trace_table(const Field& f) {
  auto t = f.trace_by_exponent(1);
  return {t.begin(), t.end()};
}

PeriodSystem period_system_from_traces(std::uint32_t p, std::uint64_t Q, std::uint64_t k,
                                       const std::vector<std::uint32_t>& abs_trace) {
  check_order(Q - 1, k);
  std::vector<std::vector<std::int64_t>> counts(k, std::vector<std::int64_t>(p, 0));
  for (std::uint64_t e = 0; e + 1 < Q; ++e) ++counts[e % k][abs_trace[e]];
  PeriodSystem ps;
  ps.p = p;
  ps.Q = Q;
  ps.k = k;
  ps.periods.reserve(k);
  CyclotomicValue total = CyclotomicValue::integer(p, 0);
  for (std::uint64_t i = 0; i < k; ++i) {
    ps.periods.emplace_back(p, std::move(counts[i]));
    total += ps.periods.back();
    ps.approx.push_back(ps.periods.back().approx());
    ps.error_bound = std::max(ps.error_bound, ps.periods.back().approx_error());
  }
  if (total.integer_value() != -1) fail(ErrorKind::NonRationalCombination, "Gaussian periods do not sum to -1");
  return ps;
}

PeriodSystem period_system(const Field& f, std::uint64_t k) {
  return period_system_from_traces(f.characteristic(), f.order(), k, absolute_trace_table(f));
}

CyclotomicValue gaussian_period_exact(const Field& f, std::uint64_t k, std::uint64_t i) {
  const std::uint32_t p = f.characteristic();
  std::vector<std::int64_t> counts(p, 0);
  for (auto x : cyclotomic_class(f, k, i)) ++counts[f.relative_trace(1, x)];
  return {p, std::move(counts)};
}

std::string to_string(ClosedCase c) {
  switch (c) {
    case ClosedCase::quadratic: return "quadratic";
    case ClosedCase::cubic: return "cubic";
    case ClosedCase::quartic: return "quartic";
    case ClosedCase::semi_primitive_odd: return "semi-primitive-odd";
    case ClosedCase::semi_primitive_other: return "semi-primitive-other";
  }
  return "unknown";
}

std::optional<SemiPrimitive> semi_primitive_data(std::uint32_t p, unsigned sm, std::uint64_t k) {
  if (k <= 2 || k % p == 0) return std::nullopt;
  const std::uint64_t ord = multiplicative_order(p, k);
  unsigned j = 0;
  std::uint64_t pj = 1;
  for (unsigned t = 1; t <= ord; ++t) {
    pj = mul_mod(pj, p, k);
    if (pj == k - 1) {
      j = t;
      break;
    }
  }
  if (j == 0 || sm % (2 * j) != 0) return std::nullopt;
  const unsigned gamma = sm / (2 * j);
  const bool quotient_odd = (pow_mod(p, j, 2 * k) + 1) % (2 * k) == k;
  return SemiPrimitive{j, gamma, gamma % 2 == 1 && p % 2 == 1 && quotient_odd};
}

std::complex<double> ClosedPeriods::approx(std::size_t i) const {
  const double r = std::sqrt(static_cast<double>(Q));
  std::complex<double> rad = imaginary ? std::complex<double>(0.0, r) : std::complex<double>(r, 0.0);
  return (static_cast<double>(a[i]) + static_cast<double>(c[i]) * rad) / static_cast<double>(den);
}

ClosedPeriods gaussian_period_closed_form(std::uint32_t p, unsigned s, unsigned m, std::uint64_t k) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  const unsigned sm = s * m;
  auto Qo = checked_pow(p, sm);
  if (!Qo || *Qo > (std::uint64_t{1} << 62)) fail(ErrorKind::InvalidArgument, "field too large");
  const std::uint64_t Q = *Qo;
  check_order(Q - 1, k);

  ClosedPeriods out;
  out.Q = Q;
  out.den = static_cast<std::int64_t>(k);
  out.a.assign(k, -1);
  out.c.assign(k, 0);
  const std::int64_t eps = (sm / 2) % 2 == 0 ? 1 : -1;
  auto semi = semi_primitive_data(p, sm, k);

  if (k == 2) {
    out.tag = ClosedCase::quadratic;
    std::int64_t c0;
    if (p % 4 == 1) {
      c0 = sm % 2 == 1 ? 1 : -1;
    } else if (sm % 2 == 0) {
      c0 = -eps;
    } else {
      out.imaginary = true;
      c0 = sm % 4 == 1 ? 1 : -1;
    }
    out.c = {c0, -c0};
  } else if (k == 3 && p % 3 == 2) {
    out.tag = ClosedCase::cubic;
    out.c.assign(3, eps);
    out.c[0] = -2 * eps;
  } else if (k == 4 && p % 4 == 3 && !(semi && semi->odd_branch)) {
    out.tag = ClosedCase::quartic;
    out.c.assign(4, eps);
    out.c[0] = -3 * eps;
  } else if (semi) {
    const std::int64_t kk = static_cast<std::int64_t>(k);
    if (semi->odd_branch) {
      out.tag = ClosedCase::semi_primitive_odd;
      out.c.assign(k, -1);
      out.c[k / 2] = kk - 1;
    } else {
      out.tag = ClosedCase::semi_primitive_other;
      const std::int64_t sg = semi->gamma % 2 == 0 ? 1 : -1;
      out.c.assign(k, sg);
      out.c[0] = -sg * (kk - 1);
    }
  } else {
    fail(ErrorKind::NoClosedFormCase, "no closed form for k=" + std::to_string(k) + " over " + std::to_string(p) +
                                          "^" + std::to_string(sm));
  }

  if (sm % 2 == 0 && !out.imaginary) {
    const std::int64_t r = static_cast<std::int64_t>(ipow(p, sm / 2));
    std::vector<std::int64_t> ints(k);
    bool ok = true;
    for (std::uint64_t i = 0; i < k; ++i) {
      auto v = exact_div(static_cast<i128>(out.a[i]) + static_cast<i128>(out.c[i]) * r, out.den);
      if (!v) {
        ok = false;
        break;
      }
      ints[i] = *v;
    }
    if (ok) out.integers = std::move(ints);
  }
  return out;
}

GaussSum gaussian_sum_numeric(const Field& f, std::uint64_t j) {
  const std::uint64_t g = f.group_order();
  const std::uint32_t p = f.characteristic();
  auto tr = absolute_trace_table(f);
  std::complex<double> z = 0.0;
  for (std::uint64_t t = 0; t < g; ++t) {
    const double turns = static_cast<double>(mul_mod(j % g, t, g)) / g + static_cast<double>(tr[t]) / p;
    z += unit(turns);
  }
  return {z, 16.0 * DBL_EPSILON * g};
}

std::vector<std::complex<double>> gaussian_sums_of_order(const Field& f, std::uint64_t k) {
  const std::uint64_t g = f.group_order();
  check_order(g, k);
  const std::uint32_t p = f.characteristic();
  auto tr = absolute_trace_table(f);
  const auto rk = roots_of_unity(k);
  const auto rp = roots_of_unity(p);
  std::vector<std::complex<double>> out(k, 0.0);
  for (std::uint64_t j = 0; j < k; ++j) {
    std::complex<double> z = 0.0;
    for (std::uint64_t t = 0; t < g; ++t) z += rk[(j * t) % k] * rp[tr[t]];
    out[j] = z;
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

double default_circulant_tolerance(std::uint64_t Q, std::uint64_t k) {
  return 1e-6 * static_cast<double>(Q - 1) / static_cast<double>(k);
}

CirculantCheck circulant_invertibility(const PeriodSystem& ps, std::optional<double> tol) {
  const std::size_t k = ps.k;
  const double t = tol.value_or(default_circulant_tolerance(ps.Q, ps.k));
  auto* in = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * k));
  auto* out = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * k));
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(k), in, out, FFTW_FORWARD, FFTW_ESTIMATE);
  double mass = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    in[i][0] = ps.approx[i].real();
    in[i][1] = ps.approx[i].imag();
    mass += std::abs(ps.approx[i]);
  }
  fftw_execute(plan);
  double min_abs = INFINITY;
  for (std::size_t i = 0; i < k; ++i) min_abs = std::min(min_abs, std::hypot(out[i][0], out[i][1]));
  fftw_destroy_plan(plan);
  fftw_free(in);
  fftw_free(out);

  const double logk = std::max(1.0, std::log2(static_cast<double>(k)));
  const double err = static_cast<double>(k) * ps.error_bound + 8.0 * DBL_EPSILON * logk * mass;
  Verdict v = Verdict::inconclusive;
  if (min_abs - err > t) v = Verdict::yes;
  else if (min_abs + err < t) v = Verdict::no;
  return {v, min_abs, err, t};
}

AutocorrelationProbe autocorrelation_probe(const PeriodSystem& ps) {
  const std::uint64_t k = ps.k;
  const std::uint64_t g = ps.Q - 1;
  const std::uint64_t minus_one_class = ps.Q % 2 == 0 ? 0 : (g / 2) % k;
  AutocorrelationProbe out;
  out.target.resize(k);
  for (std::uint64_t j = 0; j < k; ++j)
    out.target[j] = (j == minus_one_class ? static_cast<std::int64_t>(ps.Q) : 0) - static_cast<std::int64_t>(g / k);

  CyclotomicValue sq = CyclotomicValue::integer(ps.p, 0);
  for (const auto& e : ps.periods) sq += e * e;
  out.square_sum = sq.integer_value();
  out.unshifted_holds = true;
  for (std::uint64_t j = 0; j < k; ++j)
    if (out.square_sum != out.target[j]) out.unshifted_holds = false;

  out.shifted_holds = true;
  out.shifted.resize(k);
  for (std::uint64_t j = 0; j < k; ++j) {
    CyclotomicValue r = CyclotomicValue::integer(ps.p, 0);
    for (std::uint64_t i = 0; i < k; ++i) r += ps.periods[i] * ps.periods[(i + j) % k];
    out.shifted[j] = r.integer_value();
    if (out.shifted[j] != out.target[j]) out.shifted_holds = false;
  }
  return out;
}

}  // namespace bsym
