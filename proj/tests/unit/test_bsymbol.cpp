#include <random>

#include "bsym/bsymbol.hpp"
#include "bsym/error.hpp"
#include "doctest.h"

using namespace bsym;

namespace {

Word example3(const FieldPtr& f, Elem a, Elem b, Elem c) {
  return Word{f, {0, 0, a, 0, 0, 0, b, 0, 0, 0, 0, c, 0, a}};
}

// Direct count of nonzero windows.
std::size_t naive_wb(const Word& x, std::size_t b) {
  std::size_t w = 0;
  for (const auto& t : pi_b(x, b)) {
    bool nz = false;
    for (auto v : t) nz = nz || v != 0;
    w += nz;
  }
  return w;
}

Word random_word(const FieldPtr& f, std::size_t n, std::mt19937& rng, double density) {
  std::bernoulli_distribution nz(density);
  std::uniform_int_distribution<Elem> val(1, f->order() - 1);
  Word w{f, std::vector<Elem>(n, 0)};
  for (auto& s : w.symbols)
    if (nz(rng)) s = val(rng);
  return w;
}

}  // namespace

TEST_CASE("sparse word weights") {
  auto f2 = make_field(2, 1);
  auto x = example3(f2, 1, 1, 1);
  const std::size_t expect[] = {4, 8, 11, 13, 14, 14, 14};
  for (std::size_t b = 1; b <= 7; ++b) CHECK(w_b(x, b) == expect[b - 1]);
  auto f5 = make_field(5, 1);
  auto y = example3(f5, 3, 2, 4);
  for (std::size_t b = 1; b <= 7; ++b) CHECK(w_b(y, b) == expect[b - 1]);
  CHECK(bsymbol_support(x, 2).size() == 8);
  CHECK(window_support(x, 2).size() == 8);
  auto pairs = pi_b(x, 2);
  CHECK(pairs.size() == 14);
  CHECK(pairs[13] == std::vector<Elem>{1, 0});
}

TEST_CASE("cyclic shift") {
  auto f = make_field(3, 1);
  Word x{f, {1, 2, 0, 1}};
  CHECK(cyclic_shift(x, 0) == x);
  CHECK(cyclic_shift(x, 1).symbols == std::vector<Elem>{1, 1, 2, 0});
  CHECK(cyclic_shift(x, 4) == x);
  CHECK(cyclic_shift(x, -1) == cyclic_shift(x, 3));
  CHECK(pi_b(x, 1)[2] == std::vector<Elem>{0});
}

TEST_CASE("degenerate words") {
  auto f = make_field(2, 1);
  Word z{f, std::vector<Elem>(9, 0)};
  for (std::size_t b = 1; b <= 9; ++b) {
    CHECK(w_b(z, b) == 0);
    CHECK(bsymbol_support(z, b).size() == 0);
  }
  Word full{f, std::vector<Elem>(9, 1)};
  for (std::size_t b = 1; b <= 9; ++b) CHECK(w_b(full, b) == 9);
  CHECK_THROWS_AS(w_b(full, 0), Error);
  CHECK_THROWS_AS(w_b(full, 10), Error);
  CHECK_THROWS_AS(pi_b(full, 10), Error);
}

TEST_CASE("weight properties on random words") {
  std::mt19937 rng(17);
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    auto f = make_field(p, e);
    for (int r = 0; r < 150; ++r) {
      const std::size_t n = 1 + rng() % 30;
      auto x = random_word(f, n, rng, 0.1 + 0.8 * (r % 5) / 5.0);
      auto y = random_word(f, n, rng, 0.5);
      const std::size_t w1 = hamming_weight(x.symbols);
      std::size_t prev = 0;
      for (std::size_t b = 1; b <= n; ++b) {
        const std::size_t w = w_b(x, b);
        CHECK(w == naive_wb(x, b));
        CHECK(w == w_b(cyclic_shift(x, 1 + static_cast<std::int64_t>(rng() % n)), b));
        CHECK(w >= prev);
        prev = w;
        if (!x.is_zero()) {
          CHECK(w >= b);
          CHECK(w <= std::min(n, b * w1));
        }
        auto I = bsymbol_support(x, b);
        CHECK(I.size() == w);
        // Window start i is nonzero iff coordinate i + b - 1 lies in the union.
        auto W = window_support(x, b);
        CHECK(W.size() == w);
        for (auto i : W.indices)
          CHECK(std::binary_search(I.indices.begin(), I.indices.end(), static_cast<std::uint32_t>((i + b - 1) % n)));
        CHECK(I.complement().size() == n - w);
        CHECK(d_b(x, x, b) == 0);
        CHECK(d_b(x, Word{f, std::vector<Elem>(n, 0)}, b) == w);
        CHECK(d_b(x, y, b) == d_b(y, x, b));
        auto z = random_word(f, n, rng, 0.3);
        CHECK(d_b(x, z, b) <= d_b(x, y, b) + d_b(y, z, b));
      }
      CHECK(d_b(x, y, 1) == hamming_weight(sub(x, y).symbols));
    }
  }
}

TEST_CASE("length and field mismatches") {
  auto f = make_field(2, 1);
  auto g = make_field(3, 1);
  CHECK_THROWS_AS(d_b(Word{f, {1, 0}}, Word{f, {1}}, 1), Error);
  CHECK_THROWS_AS(d_b(Word{f, {1, 0}}, Word{g, {1, 0}}, 1), Error);
}
