#include <numeric>

#include "bsym/arith.hpp"
#include "bsym/enumerators.hpp"
#include "bsym/error.hpp"
#include "bsym/grid.hpp"
#include "doctest.h"

using namespace bsym;

namespace {

struct Table1Row {
  std::uint32_t p;
  unsigned s, m;
  std::uint64_t b, N, N1, U;
};

const Table1Row kTable1[] = {
    {2, 1, 4, 3, 5, 5, 3},       {2, 1, 6, 3, 21, 21, 3},     {2, 1, 8, 5, 51, 51, 5},
    {2, 1, 10, 3, 341, 341, 3},  {2, 2, 6, 3, 455, 455, 9},   {2, 2, 6, 5, 273, 273, 15},
    {2, 2, 8, 5, 4369, 4369, 15}, {3, 1, 4, 2, 20, 20, 4},    {3, 1, 6, 2, 182, 182, 4},
    {3, 1, 8, 2, 1640, 1640, 4}, {3, 1, 8, 4, 820, 820, 8},   {3, 1, 8, 5, 656, 656, 10},
};

// Every tuple of F_q^b, lexicographic.
std::vector<std::vector<Elem>> all_tuples(std::uint64_t q, std::size_t b) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> t(b, 0);
  for (;;) {
    out.push_back(t);
    std::size_t i = 0;
    while (i < b && t[i] == q - 1) t[i++] = 0;
    if (i == b) break;
    ++t[i];
  }
  return out;
}

}  // namespace

TEST_CASE("u-count table values") {
  for (const auto& r : kTable1) {
    auto code = build_code(r.p, r.s, r.m, r.N);
    CHECK(code.N1() == r.N1);
    auto up = u_profile(code, r.b);
    INFO(code.label() << " b=" << r.b << " k0=" << code.k0());
    CHECK(up.image_counts[0] == r.U);
    CHECK(r.U == r.b * (code.q() - 1));
    if (r.b <= code.k0()) CHECK(up.counts[0] == r.U);
  }
}

TEST_CASE("u_profile matches per-tuple classification") {
  for (auto [p, s, m, N] : {std::tuple{2u, 1u, 4u, 5u}, {3u, 1u, 4u, 5u}, {2u, 2u, 3u, 9u}, {2u, 1u, 6u, 9u}}) {
    auto code = build_code(p, s, m, N);
    for (std::size_t b = 1; b <= code.k0() + 1; ++b) {
      auto up = u_profile(code, b);
      std::vector<std::uint64_t> counts(code.N1(), 0);
      std::uint64_t degenerate = 0;
      for (const auto& t : all_tuples(code.q(), b)) {
        if (std::all_of(t.begin(), t.end(), [](Elem x) { return x == 0; })) continue;
        auto c = tuple_class(code, t);
        if (c) ++counts[*c];
        else ++degenerate;
        std::vector<Elem> ext = t;
        ext.push_back(0);
        CHECK(tuple_class(code, ext) == c);
      }
      CHECK(up.counts == counts);
      CHECK(up.degenerate == degenerate);
      if (b <= code.k0()) CHECK(degenerate == 0);
    }
  }
}

TEST_CASE("u-count properties on a small grid") {
  GridCache cache;
  for (const auto& cfg : grid_configs(729)) {
    auto code = cache.code(cfg);
    const std::uint64_t q = code.q(), N1 = code.N1();
    INFO(code.label());
    std::vector<std::uint64_t> prev;
    for (std::size_t b = 1; b <= code.k0(); ++b) {
      auto up = u_profile(code, b);
      CHECK(up.total() == ipow(q, static_cast<unsigned>(b)) - 1);
      CHECK(up.degenerate == 0);
      CHECK(up.counts[0] >= b * (q - 1));
      for (auto c : up.counts) CHECK(c <= (code.Q() - 1) / N1);
      if (b == 1) {
        CHECK(up.counts[0] == q - 1);
        CHECK(up.total() == up.counts[0]);
      }
      for (std::size_t j = 0; j < prev.size(); ++j) CHECK(up.counts[j] >= prev[j]);
      prev = up.counts;
      if (b == code.k0()) {
        // The sums run over F_{q^k0}^*; count its elements in each class of F_Q^*.
        const std::uint64_t sub_order = ipow(q, code.k0());
        const std::uint64_t step = (code.Q() - 1) / (sub_order - 1);
        std::vector<std::uint64_t> inter(N1, 0);
        for (std::uint64_t t = 0; t < sub_order - 1; ++t) ++inter[(t * step) % N1];
        CHECK(up.counts == inter);
        CHECK(up.image_counts == inter);
        if (std::gcd(step, N1) == 1)
          for (auto c : up.counts) CHECK(c == (sub_order - 1) / N1);
      }
      if ((q - 1) * b <= code.Q() - 1 && (code.Q() - 1) % ((q - 1) * b) == 0 &&
          N1 == (code.Q() - 1) / ((q - 1) * b))
        CHECK(up.counts[0] == b * (q - 1));
    }
  }
}

TEST_CASE("uniform value at b = k0 fails without the gcd condition") {
  auto code = build_code(2, 1, 4, 5);
  auto up = u_profile(code, code.k0());
  CHECK(up.counts == std::vector<std::uint64_t>{3, 0, 0, 0, 0});
}

TEST_CASE("closed-form weight equals brute force on a small grid") {
  GridCache cache;
  std::size_t checked = 0;
  for (const auto& cfg : grid_configs(512)) {
    auto code = cache.code(cfg);
    const auto& ps = cache.periods(cfg.p, cfg.s * cfg.m, code.N1());
    for (std::size_t b = 1; b <= code.k0(); ++b) {
      auto up = u_profile(code, b);
      auto brute = class_weights(code, b);
      for (std::uint64_t i = 0; i < code.N1(); ++i) {
        INFO(code.label() << " b=" << b << " class=" << i);
        CHECK(closed_form_weight(code, b, i, ps, up) == static_cast<std::int64_t>(brute[i]));
        ++checked;
      }
      CHECK(closed_form_distribution(code, b, ps, up) == beta_distribution(code, b));
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("closed_form_weight examples") {
  auto s42 = build_code(2, 1, 4, 1);
  auto f = s42.big();
  auto ps1 = period_system(*f, 1);
  CHECK(closed_form_weight(s42, 2, 0, ps1, u_profile(s42, 2)) == 12);
  auto c165 = build_code(2, 1, 4, 5);
  auto ps5 = period_system(*f, 5);
  for (std::uint64_t i = 0; i < 5; ++i)
    CHECK(closed_form_weight(c165, 2, i, ps5, u_profile(c165, 2)) ==
          static_cast<std::int64_t>(w_b(c165.codeword_from_exponent(i), 2)));
  CHECK_THROWS_AS(closed_form_weight(c165, 3, 0, ps5, u_profile(c165, 3)), Error);
}

TEST_CASE("special cases agree with the general formula") {
  GridCache cache;
  std::map<CaseTag, std::size_t> fired;
  for (const auto& cfg : grid_configs(4096)) {
    if (cfg.m < 2) continue;
    auto code = cache.code(cfg);
    auto tag = special_case_tag(code);
    if (!tag || code.k0() != code.m()) continue;
    const auto& ps = cache.periods(cfg.p, cfg.s * cfg.m, code.N1());
    for (std::size_t b = 1; b < code.m(); ++b) {
      auto up = u_profile(code, b);
      ClosedFormWeights cw;
      try {
        cw = special_case_distribution(code, b, up);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HypothesisViolated);
        continue;
      }
      INFO(code.label() << " b=" << b << " " << to_string(cw.tag));
      ++fired[cw.tag];
      for (std::uint64_t i = 0; i < code.N1(); ++i) CHECK(cw.weights[i] == closed_form_weight(code, b, i, ps, up));
      auto dist = cw.distribution(code, b);
      CHECK(dist == closed_form_distribution(code, b, ps, up));
      CHECK(dist.entries.at(0) == 1);
      for (auto [w, c] : dist.entries)
        if (w != 0) CHECK(c % ((code.Q() - 1) / code.N1()) == 0);
    }
  }
  CHECK(fired[CaseTag::n1_one] > 0);
  CHECK(fired[CaseTag::n1_two] > 0);
  CHECK(fired[CaseTag::n1_three] > 0);
  CHECK(fired[CaseTag::n1_four] > 0);
  CHECK(fired[CaseTag::semi_primitive_odd] > 0);
  CHECK(fired[CaseTag::semi_primitive_other] > 0);
}

TEST_CASE("explicit case errors") {
  auto c = build_code(2, 1, 4, 5);
  CHECK_THROWS_AS(special_case_distribution(c, 2, u_profile(c, 2)), Error);
  auto none = build_code(2, 1, 6, 7);
  CHECK_FALSE(special_case_tag(none).has_value());
  try {
    special_case_distribution(none, 2, u_profile(none, 2));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoTheoremApplies);
  }
}

TEST_CASE("square counts match #U(b,0,2)") {
  for (auto [p, s, m] : {std::tuple{3u, 1u, 4u}, {3u, 1u, 6u}, {5u, 1u, 4u}, {3u, 2u, 2u}, {7u, 1u, 2u}}) {
    auto code = build_code(p, s, m, 2);
    REQUIRE(code.N1() == 2);
    for (std::size_t b = 1; b <= code.k0(); ++b)
      CHECK((code.q() - 1) * square_count_normalized(code, b) == u_profile(code, b).counts[0]);
  }
}

TEST_CASE("constant weight check") {
  auto s42 = build_code(2, 1, 4, 1);
  auto ps = period_system(*s42.big(), 1);
  auto cw = constant_weight_check(s42, 2, ps);
  CHECK(cw.u_uniform);
  CHECK(cw.is_constant);
  CHECK(cw.weight == 12);
  CHECK(cw.consistent);
  auto full = constant_weight_check(s42, 4, ps);
  CHECK(full.weight == 15);
  GridCache cache;
  for (const auto& cfg : grid_configs(256)) {
    auto code = cache.code(cfg);
    if (code.k0() != code.m()) continue;
    const auto& ps2 = cache.periods(cfg.p, cfg.s * cfg.m, code.N1());
    for (std::size_t b = 1; b < code.m(); ++b) {
      auto r = constant_weight_check(code, b, ps2);
      INFO(code.label() << " b=" << b);
      CHECK(r.consistent);
      if (code.N1() == 1) CHECK(r.weight == static_cast<std::int64_t>((ipow(code.q(), b) - 1) * code.Q() /
                                                                      (ipow(code.q(), b) * code.N())));
    }
  }
}
