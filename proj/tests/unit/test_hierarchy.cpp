#include "bsym/arith.hpp"
#include "bsym/error.hpp"
#include "bsym/grid.hpp"
#include "bsym/hierarchy.hpp"
#include "doctest.h"

using namespace bsym;

TEST_CASE("Gaussian binomials") {
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(4, 1, 2) == 15);
  CHECK(gaussian_binomial(4, 0, 3) == 1);
  CHECK(gaussian_binomial(5, 2, 3) == 1210);
  CHECK(gaussian_binomial(3, 4, 2) == 0);
  CHECK(gaussian_binomial(60, 30, 1000) == UINT64_MAX);
}

TEST_CASE("Simplex S(4,2) hierarchies") {
  auto code = build_code(2, 1, 4, 1);
  HierarchyOptions opt;
  opt.method = HierarchyMethod::brute;
  opt.ghw = true;
  auto rep = bsymbol_hierarchy(code, opt);
  std::vector<std::uint64_t> expect{8, 12, 14};
  expect.resize(15, 15);
  CHECK(rep.db == expect);
  CHECK(rep.ghw.size() == 4);
  CHECK(*rep.ghw[0] == 8);
  CHECK(*rep.ghw[1] == 12);
  CHECK(*rep.ghw[2] == 14);
  CHECK(*rep.ghw[3] == 15);
  CHECK(rep.strict_shape());
  CHECK(rep.dominance());
  CHECK(ghw_brute(code, 2) == 12);
  CHECK(ghw_closed(code, 2).value == 12);
  CHECK_THROWS_AS(ghw_brute(code, 5), Error);
  CHECK_THROWS_AS(ghw_brute(code, 2, 10), Error);
}

TEST_CASE("hierarchy shape, dominance and endpoints on a grid") {
  GridCache cache;
  std::size_t with_ghw = 0;
  for (const auto& cfg : grid_configs(1024)) {
    auto code = cache.code(cfg);
    if (code.codeword_count() > (1u << 12)) continue;
    HierarchyOptions opt;
    opt.method = HierarchyMethod::brute;
    opt.subspace_limit = 200'000;
    auto rep = bsymbol_hierarchy(code, opt);
    INFO(code.label());
    CHECK(rep.strict_shape());
    CHECK(rep.db[0] == min_db(code, 1));
    for (std::size_t b = 1; b <= code.k0(); ++b) {
      if (gaussian_binomial(code.k0(), static_cast<unsigned>(b), code.q()) > opt.subspace_limit) continue;
      const auto g = ghw_brute(code, b, opt.subspace_limit);
      ++with_ghw;
      CHECK(rep.db[b - 1] >= g);
      if (b == 1 || b == code.k0()) CHECK(rep.db[b - 1] == g);
    }
  }
  CHECK(with_ghw > 100);
}

TEST_CASE("closed forms match brute force") {
  GridCache cache;
  std::size_t ghw_checked = 0, db_checked = 0;
  for (const auto& cfg : grid_configs(2048)) {
    if (cfg.m < 2) continue;
    auto code = cache.code(cfg);
    if (code.k0() != code.m()) continue;
    for (std::size_t b = 1; b < code.m(); ++b) {
      INFO(code.label() << " b=" << b);
      if ((code.N1() == 1 || code.N1() == 2) && b >= 2 &&
          gaussian_binomial(code.k0(), static_cast<unsigned>(b), code.q()) <= 200'000) {
        CHECK(ghw_closed(code, b).value == ghw_brute(code, b));
        ++ghw_checked;
      }
      try {
        auto v = min_db_closed(code, b, u_profile(code, b));
        CHECK(v.value == min_db(code, b));
        ++db_checked;
      } catch (const Error& e) {
        CHECK((e.kind() == ErrorKind::CaseNotCovered || e.kind() == ErrorKind::HypothesisViolated));
      }
    }
  }
  CHECK(ghw_checked > 20);
  CHECK(db_checked > 100);
}

TEST_CASE("equality conditions for N1 = 2") {
  GridCache cache;
  std::size_t checked = 0;
  for (const auto& cfg : grid_configs(4096)) {
    if (cfg.m < 2 || cfg.p == 2) continue;
    auto code = cache.code(cfg);
    if (code.N1() != 2 || code.k0() != code.m()) continue;
    for (std::size_t b = 1; b <= code.k0(); ++b) {
      if (b > 1 && b < code.k0() && gaussian_binomial(code.k0(), static_cast<unsigned>(b), code.q()) > 200'000)
        continue;
      HierarchyOptions opt;
      opt.method = HierarchyMethod::brute;
      opt.subspace_limit = 200'000;
      auto rep = equality_report(code, b, opt);
      INFO(code.label() << " b=" << b << " fired=" << rep.condition_fired);
      CHECK(rep.equal == rep.predicted);
      CHECK(rep.db >= rep.ghw);
      ++checked;
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("C(3^10, 2) at b = 2 with the Conway modulus") {
  Code code(make_field(3, 10, Polynomial{2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1}), 3, 2);
  CHECK(code.n() == 29524);
  auto up = u_profile(code, 2);
  CHECK(up.counts[0] == 8);
  CHECK(min_db_closed(code, 2, up).value == 26136);
  CHECK(ghw_closed(code, 2).value == 26136);
  auto ws = class_weights(code, 2);
  CHECK(std::min(ws[0], ws[1]) == 26136);
  CHECK(std::max(ws[0], ws[1]) == 26352);
  HierarchyOptions opt;
  opt.method = HierarchyMethod::closed;
  auto rep = equality_report(code, 2, opt);
  CHECK(rep.equal);
  CHECK(rep.condition1);
  CHECK(rep.condition_fired == "condition1");
}

TEST_CASE("C(3^10, 2) at b = 2 with the default modulus") {
  auto code = build_code(3, 1, 10, 2);
  auto up = u_profile(code, 2);
  CHECK(up.counts[0] == 6);
  CHECK(min_db_closed(code, 2, up).value == 26190);
  CHECK(ghw_closed(code, 2).value == 26136);
  HierarchyOptions opt;
  opt.method = HierarchyMethod::closed;
  auto rep = equality_report(code, 2, opt);
  CHECK_FALSE(rep.equal);
  CHECK_FALSE(rep.predicted);
}

TEST_CASE("closed hierarchy") {
  auto code = build_code(3, 1, 6, 2);
  HierarchyOptions closed;
  closed.method = HierarchyMethod::closed;
  closed.ghw = true;
  auto a = bsymbol_hierarchy(code, closed);
  HierarchyOptions brute;
  brute.method = HierarchyMethod::brute;
  brute.ghw = true;
  auto b = bsymbol_hierarchy(code, brute);
  CHECK(a.db == b.db);
  for (std::size_t i = 0; i < a.ghw.size(); ++i) CHECK(a.ghw[i] == b.ghw[i]);
  CHECK(a.db_method[1].rfind("closed", 0) == 0);
  CHECK_THROWS_AS(bsymbol_hierarchy(build_code(2, 1, 6, 7), closed), Error);
}
