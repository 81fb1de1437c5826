#include <algorithm>
#include <cmath>
#include <set>

#include "bsym/arith.hpp"
#include "bsym/cyclotomy.hpp"
#include "bsym/error.hpp"
#include "doctest.h"

using namespace bsym;

namespace {

std::int64_t exact_int(const CyclotomicValue& v) {
  auto i = v.integer_value();
  REQUIRE(i.has_value());
  return *i;
}

}  // namespace

TEST_CASE("CyclotomicValue canonical form and arithmetic") {
  CyclotomicValue v(3, {2, 2, 2});
  CHECK(v.is_integer());
  CHECK(v.integer_value() == 0);
  CyclotomicValue w(5, {4, 1, 1, 1, 1});
  CHECK(w.integer_value() == 3);
  CHECK(w.counts().back() == 0);
  CyclotomicValue z(5, {0, 1, 0, 0, 0});
  CHECK_FALSE(z.is_integer());
  CHECK(std::abs(z.approx() - std::polar(1.0, 2 * M_PI / 5)) < 1e-12);
  CHECK((z * 5 - z * 4) == z);
  CyclotomicValue sum = CyclotomicValue::integer(5, 0);
  for (int t = 0; t < 5; ++t) {
    std::vector<std::int64_t> c(5, 0);
    c[t] = 1;
    sum += CyclotomicValue(5, c);
  }
  CHECK(sum.integer_value() == 0);
  // zeta * zeta^4 = 1
  CyclotomicValue z4(5, {0, 0, 0, 0, 1});
  CHECK((z * z4).integer_value() == 1);
  CHECK(CyclotomicValue::integer(2, -7).integer_value() == -7);
}

TEST_CASE("cyclotomic classes") {
  auto f16 = make_field(2, 4);
  CHECK(cyclotomic_class_exponents(15, 5, 0) == std::vector<std::uint64_t>{0, 5, 10});
  CHECK(cyclotomic_class(*f16, 1, 0).size() == 15);
  for (auto k : divisors(15)) {
    std::set<Elem> all;
    for (std::uint64_t i = 0; i < k; ++i) {
      auto c = cyclotomic_class(*f16, k, i);
      CHECK(c.size() == 15 / k);
      all.insert(c.begin(), c.end());
    }
    CHECK(all.size() == 15);
  }
  auto f9 = make_field(3, 2);
  std::set<Elem> squares;
  for (Elem x = 1; x < 9; ++x) squares.insert(f9->mul(x, x));
  auto c0 = cyclotomic_class(*f9, 2, 0);
  CHECK(std::set<Elem>(c0.begin(), c0.end()) == squares);
  auto kind = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind([&] { cyclotomic_class(*f16, 4, 0); }) == ErrorKind::OrderNotDivisor);
  CHECK(kind([&] { cyclotomic_class(*f16, 5, 5); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("exact Gaussian periods") {
  auto f9 = make_field(3, 2);
  CHECK(exact_int(gaussian_period_exact(*f9, 1, 0)) == -1);
  CHECK(exact_int(gaussian_period_exact(*f9, 2, 0)) == 1);
  CHECK(exact_int(gaussian_period_exact(*f9, 2, 1)) == -2);
  for (auto [p, e, k] : {std::tuple{2u, 4u, 5u}, {2u, 6u, 21u}, {3u, 4u, 16u}}) {
    auto ps = period_system(*make_field(p, e), k);
    CyclotomicValue s = CyclotomicValue::integer(p, 0);
    for (const auto& v : ps.periods) s += v;
    CHECK(s.integer_value() == -1);
  }
  // C(16, 5): eta_0 over {1, alpha^5, alpha^10} = F_4^*.
  auto f16 = make_field(2, 4);
  CHECK(exact_int(gaussian_period_exact(*f16, 5, 0)) == 3);
}

TEST_CASE("period systems: sum rule and non-constancy on a grid") {
  for (std::uint64_t Q = 3; Q <= 1024; ++Q) {
    auto pp = as_prime_power(Q);
    if (!pp) continue;
    auto f = make_field(static_cast<std::uint32_t>(pp->p), pp->k);
    for (auto k : divisors(Q - 1)) {
      auto ps = period_system(*f, k);
      CyclotomicValue s = CyclotomicValue::integer(ps.p, 0);
      for (const auto& v : ps.periods) s += v;
      CHECK(s.integer_value() == -1);
      if (k >= 2) {
        bool all_same = std::all_of(ps.periods.begin(), ps.periods.end(),
                                    [&](const CyclotomicValue& v) { return v == ps.periods[0]; });
        CHECK_FALSE(all_same);
      }
    }
  }
}

TEST_CASE("closed forms equal exact periods wherever a case fires") {
  std::size_t fired = 0;
  for (std::uint64_t Q = 3; Q <= 4096; ++Q) {
    auto pp = as_prime_power(Q);
    if (!pp) continue;
    const auto p = static_cast<std::uint32_t>(pp->p);
    auto f = make_field(p, pp->k);
    for (auto k : divisors(Q - 1)) {
      if (k < 2) continue;
      ClosedPeriods cp;
      try {
        cp = gaussian_period_closed_form(p, 1, pp->k, k);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoClosedFormCase);
        continue;
      }
      ++fired;
      auto ps = period_system(*f, k);
      for (std::uint64_t i = 0; i < k; ++i) {
        if (cp.integers) {
          INFO("Q=" << Q << " k=" << k << " i=" << i);
          CHECK(ps.periods[i].integer_value() == (*cp.integers)[i]);
        } else {
          CHECK(std::abs(ps.periods[i].approx() - cp.approx(i)) < 1e-6);
        }
      }
      auto semi = semi_primitive_data(p, pp->k, k);
      if (semi && pp->k % 2 == 0)
        for (const auto& v : ps.periods) CHECK(v.is_integer());
    }
  }
  CHECK(fired > 50);
}

TEST_CASE("quartic closed form disagrees with the semi-primitive odd branch") {
  // Q = 9, k = 4: p = 3, j = 1, gamma = 1, (p + 1)/4 = 1 are all odd.
  auto f9 = make_field(3, 2);
  auto ps = period_system(*f9, 4);
  const std::int64_t r = 3, sm = 2;
  const std::int64_t sign = (sm / 2) % 2 == 0 ? 1 : -1;  // (sqrt(-1))^sm
  const std::int64_t quartic_eta0 = (-1 - sign * 3 * r) / 4;
  CHECK(quartic_eta0 == 2);
  CHECK(exact_int(ps.periods[0]) == -1);
  auto cp = gaussian_period_closed_form(3, 1, 2, 4);
  CHECK(cp.tag == ClosedCase::semi_primitive_odd);
  CHECK(cp.integers->at(0) == -1);
  CHECK(cp.integers->at(2) == 2);
}

TEST_CASE("semi-primitive data") {
  auto sp = semi_primitive_data(2, 4, 5);
  REQUIRE(sp.has_value());
  CHECK(sp->j == 2);
  CHECK(sp->gamma == 1);
  CHECK_FALSE(sp->odd_branch);
  CHECK_FALSE(semi_primitive_data(2, 4, 15).has_value());
  auto cp = gaussian_period_closed_form(2, 1, 4, 5);
  CHECK(cp.tag == ClosedCase::semi_primitive_other);
  auto ps = period_system(*make_field(2, 4), 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(ps.periods[i].integer_value() == cp.integers->at(i));
  // gamma even: eta_0 = (-(k-1) r - 1)/k, others (r - 1)/k.  Q = 2^8, k = 5, r = 16.
  auto cp8 = gaussian_period_closed_form(2, 1, 8, 5);
  CHECK(cp8.integers->at(0) == (-(4 * 16) - 1) / 5);
  CHECK(cp8.integers->at(1) == (16 - 1) / 5);
}

TEST_CASE("Gauss sums") {
  auto f9 = make_field(3, 2);
  auto g0 = gaussian_sum_numeric(*f9, 0);
  CHECK(std::abs(g0.value - std::complex<double>(-1, 0)) < 1e-9);
  for (std::uint64_t j = 1; j < 8; ++j) CHECK(std::abs(std::abs(gaussian_sum_numeric(*f9, j).value) - 3.0) < 1e-9);
}

TEST_CASE("DFT relation between periods and Gauss sums") {
  for (std::uint64_t Q = 3; Q <= 256; ++Q) {
    auto pp = as_prime_power(Q);
    if (!pp) continue;
    auto f = make_field(static_cast<std::uint32_t>(pp->p), pp->k);
    for (auto k : divisors(Q - 1)) {
      auto ps = period_system(*f, k);
      auto G = gaussian_sums_of_order(*f, k);
      for (std::uint64_t i = 0; i < k; ++i) {
        std::complex<double> s = -1.0;
        for (std::uint64_t j = 1; j < k; ++j)
          s += std::polar(1.0, -2 * M_PI * static_cast<double>(i * j % k) / static_cast<double>(k)) * G[j];
        s /= static_cast<double>(k);
        CHECK(std::abs(s - ps.periods[i].approx()) < 1e-6);
      }
    }
  }
}

TEST_CASE("circulant invertibility") {
  auto f9 = make_field(3, 2);
  auto c1 = circulant_invertibility(period_system(*f9, 1));
  CHECK(c1.invertible == Verdict::yes);
  CHECK(std::abs(c1.min_abs_eval - 1.0) < 1e-9);
  auto c2 = circulant_invertibility(period_system(*f9, 2));
  CHECK(c2.invertible == Verdict::yes);
  CHECK(std::abs(c2.min_abs_eval - 1.0) < 1e-9);
  CHECK(default_circulant_tolerance(9, 2) == doctest::Approx(4e-6));
  auto forced = circulant_invertibility(period_system(*f9, 2), 5.0);
  CHECK(forced.invertible == Verdict::no);
}

TEST_CASE("autocorrelation probe") {
  auto f9 = make_field(3, 2);
  auto pr = autocorrelation_probe(period_system(*f9, 2));
  // -1 is a square in F_9, so theta_0 = 1.
  CHECK(pr.target == std::vector<std::int64_t>{9 - 4, -4});
  CHECK(pr.square_sum == 5);
  CHECK(pr.shifted_holds);
  CHECK_FALSE(pr.unshifted_holds);
}
