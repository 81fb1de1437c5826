#include <map>
#include <random>

#include "bsym/arith.hpp"
#include "bsym/error.hpp"
#include "bsym/gf.hpp"
#include "doctest.h"

using namespace bsym;

namespace {

// Naive polynomial product mod (f, p), coefficients low degree first.
std::vector<std::uint32_t> naive_mulmod(std::vector<std::uint32_t> a, std::vector<std::uint32_t> b,
                                        const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t e = f.size() - 1;
  std::vector<std::uint32_t> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = prod.size(); d-- > e;) {
    const std::uint32_t c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= e; ++i) prod[d - e + i] = (prod[d - e + i] + p * p - c * f[i]) % p;
  }
  prod.resize(e);
  return prod;
}

std::uint64_t naive_order(const FieldPtr& f, Elem x) {
  Elem y = x;
  std::uint64_t k = 1;
  while (y != 1) {
    y = f->mul(y, x);
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("F_16 with x^4 + x + 1") {
  auto f = make_field(2, 4, Polynomial{1, 1, 0, 0, 1});
  CHECK(f->order() == 16);
  const Elem a = f->primitive();
  CHECK(f->coefficients(a) == std::vector<std::uint32_t>{0, 1, 0, 0});
  CHECK(f->pow(a, 4) == f->add(a, 1));
  CHECK(f->log(f->add(a, 1)) == 4);
  CHECK(f->log(1) == 0);
  CHECK(f->log(a) == 1);
  CHECK(f->mul(a, f->pow(a, 3)) == f->add(a, 1));
  CHECK(f->relative_trace(1, a) == 0);
  Elem t = 0;
  for (int i = 0; i < 4; ++i) t = f->add(t, f->pow(a, 1 << i));
  CHECK(t == 0);
}

TEST_CASE("multiplication agrees with naive polynomial reduction") {
  for (auto [p, e] : {std::pair{2u, 5u}, {3u, 3u}, {5u, 2u}, {7u, 2u}}) {
    auto f = make_field(p, e);
    Polynomial mod = f->modulus();
    std::mt19937 rng(p * 31 + e);
    std::uniform_int_distribution<Elem> pick(0, f->order() - 1);
    for (int r = 0; r < 200; ++r) {
      const Elem x = pick(rng), y = pick(rng);
      CHECK(f->coefficients(f->mul(x, y)) == naive_mulmod(f->coefficients(x), f->coefficients(y), mod, p));
    }
  }
}

TEST_CASE("default moduli and generators") {
  auto f7 = make_field(7, 1);
  CHECK(f7->coefficients(f7->primitive())[0] == 3);
  CHECK(poly::default_primitive(2, 4) == Polynomial{1, 1, 0, 0, 1});
  CHECK(poly::is_primitive(Polynomial{1, 1, 0, 0, 1}, 2));
  CHECK_FALSE(poly::is_primitive(Polynomial{1, 1, 1, 1, 1}, 2));
  CHECK(poly::is_irreducible(Polynomial{1, 1, 1, 1, 1}, 2));
}

TEST_CASE("construction errors") {
  auto kind = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind([] { make_field(4, 2); }) == ErrorKind::NotPrime);
  CHECK(kind([] { make_field(2, 4, Polynomial{1, 1, 1, 1, 1}); }) == ErrorKind::ModulusNotPrimitive);
  CHECK(kind([] { make_field(2, 4, Polynomial{1, 0, 1, 0, 1}); }) == ErrorKind::ModulusNotIrreducible);
  CHECK(kind([] { make_field(2, 30); }) == ErrorKind::TableLimitExceeded);
  auto f = make_field(2, 4);
  CHECK(kind([&] { f->log(0); }) == ErrorKind::LogOfZero);
  CHECK(kind([&] { f->inv(0); }) == ErrorKind::DivisionByZero);
  CHECK(kind([&] { f->relative_trace(3, 2); }) == ErrorKind::DegreeNotDivisor);
  auto g = make_field(3, 2);
  CHECK(kind([&] { FieldElement(f, 1) + FieldElement(g, 1); }) == ErrorKind::FieldMismatch);
}

TEST_CASE("field laws on small fields") {
  for (auto [p, e] : {std::pair{2u, 6u}, {3u, 4u}, {5u, 3u}, {13u, 2u}, {2u, 1u}, {11u, 1u}}) {
    auto f = make_field(p, e);
    const std::uint64_t g = f->group_order();
    CHECK(f->pow(f->primitive(), static_cast<std::int64_t>(g)) == 1);
    for (auto d : divisors(g))
      if (d < g) CHECK(f->pow(f->primitive(), static_cast<std::int64_t>(d)) != 1);
    for (Elem x = 0; x < f->order(); ++x) {
      CHECK(f->add(x, 0) == x);
      CHECK(f->add(x, f->neg(x)) == 0);
      if (x != 0) {
        CHECK(f->mul(x, f->inv(x)) == 1);
        CHECK(f->exp(f->log(x)) == x);
      }
    }
    std::mt19937 rng(p + e);
    std::uniform_int_distribution<Elem> pick(0, f->order() - 1);
    for (int r = 0; r < 300; ++r) {
      const Elem x = pick(rng), y = pick(rng), z = pick(rng);
      CHECK(f->pow(f->add(x, y), p) == f->add(f->pow(x, p), f->pow(y, p)));
      CHECK(f->mul(x, f->add(y, z)) == f->add(f->mul(x, y), f->mul(x, z)));
      CHECK(f->add(f->add(x, y), z) == f->add(x, f->add(y, z)));
    }
  }
}

TEST_CASE("FieldElement wrapper") {
  auto f = make_field(3, 2);
  FieldElement a(f, f->primitive());
  CHECK((a * a.inv()).value() == 1);
  CHECK(field_arith(a, a, ArithOp::sub).is_zero());
  CHECK(field_arith(a, a, ArithOp::pow, 8).value() == 1);
  CHECK(discrete_log(a) == 1);
  CHECK((a / a).value() == 1);
}

TEST_CASE("relative trace") {
  for (auto [p, e, s] : {std::tuple{2u, 6u, 2u}, {2u, 6u, 3u}, {3u, 4u, 2u}, {2u, 8u, 4u}, {5u, 2u, 1u}}) {
    auto f = make_field(p, e);
    const std::uint64_t Q = f->order();
    const std::uint64_t q = ipow(p, s);
    std::map<Elem, std::uint64_t> hits;
    for (Elem x = 0; x < Q; ++x) {
      const Elem t = f->relative_trace(s, x);
      CHECK(f->in_subfield(s, t));
      ++hits[t];
    }
    CHECK(hits.size() == q);
    for (auto [v, c] : hits) CHECK(c == Q / q);
    // Linearity over the subfield, exhaustively on x with random a, y.
    std::vector<Elem> sub;
    for (Elem x = 0; x < Q; ++x)
      if (f->in_subfield(s, x)) sub.push_back(x);
    CHECK(sub.size() == q);
    std::mt19937 rng(e * 7 + s);
    for (Elem x = 0; x < Q; ++x) {
      const Elem a = sub[rng() % q];
      const Elem y = static_cast<Elem>(rng() % Q);
      CHECK(f->relative_trace(s, f->add(f->mul(a, x), y)) ==
            f->add(f->mul(a, f->relative_trace(s, x)), f->relative_trace(s, y)));
    }
  }
}

TEST_CASE("trace tower law") {
  auto f = make_field(2, 6);
  for (Elem x = 0; x < f->order(); ++x) {
    // T_{Q/p}(x) = T_{q/p}(T_{Q/q}(x)) with q = 4: T_{q/p}(y) = y + y^2.
    const Elem inner = f->relative_trace(2, x);
    CHECK(f->relative_trace(1, x) == f->add(inner, f->pow(inner, 2)));
  }
}

TEST_CASE("subfield embedding is a field isomorphism") {
  for (auto [p, e, s] : {std::tuple{2u, 6u, 2u}, {3u, 4u, 2u}, {2u, 8u, 4u}, {5u, 2u, 1u}, {7u, 2u, 1u}}) {
    auto f = make_field(p, e);
    SubfieldEmbedding emb(f, s);
    const auto& sm = emb.small();
    CHECK(sm->order() == ipow(p, s));
    CHECK(emb.step() == (f->order() - 1) / (sm->order() - 1));
    for (Elem x = 0; x < sm->order(); ++x) {
      CHECK(emb.to_small(emb.to_big(x)) == x);
      CHECK(f->in_subfield(s, emb.to_big(x)));
      for (Elem y = 0; y < sm->order(); ++y) {
        CHECK(emb.to_big(sm->add(x, y)) == f->add(emb.to_big(x), emb.to_big(y)));
        CHECK(emb.to_big(sm->mul(x, y)) == f->mul(emb.to_big(x), emb.to_big(y)));
      }
    }
  }
}

TEST_CASE("element orders") {
  auto f = make_field(2, 4);
  CHECK(naive_order(f, f->primitive()) == 15);
  CHECK(naive_order(f, f->pow(f->primitive(), 5)) == 3);
}
