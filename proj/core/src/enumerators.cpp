#include "bsym/enumerators.hpp"

#include <algorithm>

#include "bsym/arith.hpp"
#include "bsym/error.hpp"
#include "bsym/linalg.hpp"

namespace bsym {

std::uint64_t UProfile::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

bool UProfile::uniform() const {
  return std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) == counts.end();
}

namespace {

void check_b(const Code& code, std::size_t b) {
  if (b < 1 || b > code.n())
    fail(ErrorKind::BOutOfRange, "b = " + std::to_string(b) + " outside [1, " + std::to_string(code.n()) + "]");
}

// Steps of the Gray walk over F_q^b inside F_Q: x^l * theta^i for l < s, i < b.
std::vector<Elem> tuple_steps(const Code& code, std::size_t b) {
  const Field& big = *code.big();
  std::vector<Elem> steps;
  Elem basis = 1;
  std::vector<Elem> sub_basis;
  for (unsigned l = 0; l < code.s(); ++l) {
    sub_basis.push_back(code.embedding().to_big(basis));
    basis *= code.p();
  }
  for (std::size_t i = 0; i < b; ++i) {
    const Elem th = big.exp(static_cast<std::uint64_t>(code.N()) * i);
    for (Elem e : sub_basis) steps.push_back(big.mul(e, th));
  }
  return steps;
}

std::int64_t exact_or_throw(i128 num, i128 den, const std::string& what) {
  auto v = exact_div(num, den);
  if (!v) fail(ErrorKind::NonRationalCombination, what + " is not an integer");
  return *v;
}

std::int64_t isqrt_exact(std::uint64_t Q) {
  auto r = exact_sqrt(Q);
  if (!r) fail(ErrorKind::HypothesisViolated, std::to_string(Q) + " is not a square");
  return static_cast<std::int64_t>(*r);
}

}  // namespace

UProfile u_profile(const Code& code, std::size_t b, std::uint64_t limit) {
  check_b(code, b);
  auto tuples = checked_pow(code.q(), static_cast<unsigned>(b));
  if (!tuples || *tuples > limit) fail_enumeration_limit(tuples.value_or(UINT64_MAX), limit);
  const Field& big = *code.big();
  UProfile u;
  u.b = b;
  u.N1 = code.N1();
  u.counts.assign(u.N1, 0);
  u.image_counts.assign(u.N1, 0);
  std::vector<std::uint8_t> seen(big.order(), 0);
  auto steps = tuple_steps(code, b);
  Elem cur = 0;
  gray_walk(code.p(), steps.size(), [&](std::size_t r) {
    cur = big.add(cur, steps[r]);
    if (cur == 0) {
      ++u.degenerate;
      return;
    }
    const std::uint64_t cls = big.log(cur) % u.N1;
    ++u.counts[cls];
    if (!seen[cur]) {
      seen[cur] = 1;
      ++u.image_counts[cls];
    }
  });
  return u;
}

std::optional<std::uint64_t> tuple_class(const Code& code, std::span<const Elem> u) {
  const Field& big = *code.big();
  Elem sum = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Elem ui = code.embedding().to_big(u[i]);
    sum = big.add(sum, big.mul(ui, big.exp(static_cast<std::uint64_t>(code.N()) * i)));
  }
  if (sum == 0) return std::nullopt;
  return big.log(sum) % code.N1();
}

std::uint64_t square_count_normalized(const Code& code, std::size_t b) {
  check_b(code, b);
  if (code.Q() % 2 == 0) fail(ErrorKind::InvalidArgument, "squares need odd Q");
  const Field& big = *code.big();
  std::uint64_t count = 0;
  // Leading coordinate j fixed to 1, coordinates above j free.
  for (std::size_t j = 0; j < b; ++j) {
    const Elem lead = big.exp(static_cast<std::uint64_t>(code.N()) * j);
    std::vector<Elem> steps;
    auto all = tuple_steps(code, b);
    steps.assign(all.begin() + static_cast<std::ptrdiff_t>((j + 1) * code.s()), all.end());
    Elem cur = lead;
    auto visit = [&] {
      if (cur != 0 && big.log(cur) % 2 == 0) ++count;
    };
    visit();
    gray_walk(code.p(), steps.size(), [&](std::size_t r) {
      cur = big.add(cur, steps[r]);
      visit();
    });
  }
  return count;
}

std::int64_t closed_form_weight(const Code& code, std::size_t b, std::uint64_t class_index,
                                const PeriodSystem& periods, const UProfile& uprof) {
  if (b < 1 || b > code.k0())
    fail(ErrorKind::BOutOfRange, "closed form needs 1 <= b <= k0 = " + std::to_string(code.k0()));
  const std::uint64_t N1 = code.N1();
  if (periods.k != N1 || periods.Q != code.Q()) fail(ErrorKind::InvalidArgument, "period system of the wrong order");
  if (uprof.N1 != N1 || uprof.b != b) fail(ErrorKind::InvalidArgument, "U profile does not match");
  if (class_index >= N1) fail(ErrorKind::IndexOutOfRange, "class index out of range");

  CyclotomicValue comb = CyclotomicValue::integer(periods.p, 0);
  for (std::uint64_t t = 0; t < N1; ++t) {
    if (uprof.counts[t] == 0) continue;
    comb += periods.periods[(t + class_index) % N1] * static_cast<std::int64_t>(uprof.counts[t]);
  }
  auto iv = comb.integer_value();
  if (!iv) fail(ErrorKind::NonRationalCombination, "sum of #U * eta is " + comb.to_string());
  const i128 qb = static_cast<i128>(ipow(code.q(), static_cast<unsigned>(b)));
  const i128 num = (qb - 1) * static_cast<i128>(code.Q() - 1) - static_cast<i128>(N1) * *iv;
  const std::int64_t w = exact_or_throw(num, qb * static_cast<i128>(code.N()), "b-symbol weight");
  const auto n = static_cast<std::int64_t>(code.n());
  const bool in_range = (w >= static_cast<std::int64_t>(b) && w <= n) || (w == 0 && code.k0() < code.m());
  if (!in_range) fail(ErrorKind::WeightOutOfRange, "weight " + std::to_string(w) + " outside [b, n]");
  return w;
}

WeightDistribution closed_form_distribution(const Code& code, std::size_t b, const PeriodSystem& periods,
                                            const UProfile& uprof) {
  ClosedFormWeights cw;
  for (std::uint64_t i = 0; i < code.N1(); ++i) cw.weights.push_back(closed_form_weight(code, b, i, periods, uprof));
  return cw.distribution(code, b);
}

WeightDistribution ClosedFormWeights::distribution(const Code& code, std::size_t b) const {
  WeightDistribution d;
  d.b = b;
  d.n = code.n();
  d.entries[0] = 1;
  const std::uint64_t mult = code.big()->group_order() / code.N1();
  for (auto w : weights) d.entries[static_cast<std::uint64_t>(w)] += mult;
  return d;
}

std::string to_string(CaseTag t) {
  switch (t) {
    case CaseTag::general: return "general";
    case CaseTag::n1_one: return "N1=1";
    case CaseTag::n1_two: return "N1=2";
    case CaseTag::n1_three: return "N1=3";
    case CaseTag::n1_four: return "N1=4";
    case CaseTag::semi_primitive_odd: return "semi-primitive-odd";
    case CaseTag::semi_primitive_other: return "semi-primitive-other";
  }
  return "unknown";
}

std::optional<CaseTag> special_case_tag(const Code& code) {
  const std::uint64_t N1 = code.N1();
  const std::uint32_t p = code.p();
  const unsigned sm = code.s() * code.m();
  auto semi = semi_primitive_data(p, sm, N1);
  if (N1 == 1) return CaseTag::n1_one;
  if (N1 == 2) return CaseTag::n1_two;
  if (N1 == 3 && p % 3 == 2) return CaseTag::n1_three;
  if (N1 == 4 && p % 4 == 3 && !(semi && semi->odd_branch)) return CaseTag::n1_four;
  if (semi) return semi->odd_branch ? CaseTag::semi_primitive_odd : CaseTag::semi_primitive_other;
  return std::nullopt;
}

ClosedFormWeights special_case_distribution(const Code& code, std::size_t b, const UProfile& uprof) {
  auto tag = special_case_tag(code);
  if (!tag) fail(ErrorKind::NoTheoremApplies, code.label() + ": no explicit case applies");
  const unsigned m = code.m();
  if (b < 1 || b + 1 > m) fail(ErrorKind::HypothesisViolated, "explicit cases need 1 <= b <= m - 1");
  if (code.k0() != m)
    fail(ErrorKind::HypothesisViolated, code.label() + ": dimension k0 = " + std::to_string(code.k0()) + " < m");
  const std::uint64_t N1 = code.N1();
  if (uprof.N1 != N1 || uprof.b != b) fail(ErrorKind::InvalidArgument, "U profile does not match");

  const i128 Q = static_cast<i128>(code.Q());
  const i128 T = static_cast<i128>(ipow(code.q(), static_cast<unsigned>(b))) - 1;
  const i128 D = (T + 1) * static_cast<i128>(code.N());
  const unsigned sm = code.s() * m;
  const auto U = [&](std::uint64_t j) { return static_cast<i128>(uprof.counts[j % N1]); };

  ClosedFormWeights out;
  out.tag = *tag;
  out.weights.resize(N1);
  if (*tag == CaseTag::n1_one) {
    out.weights[0] = exact_or_throw(T * Q, D, "constant weight");
    return out;
  }
  const i128 r = isqrt_exact(code.Q());
  const i128 k = static_cast<i128>(N1);
  const i128 eps = (sm / 2) % 2 == 0 ? 1 : -1;
  switch (*tag) {
    case CaseTag::n1_two: {
      const i128 e = code.p() % 4 == 1 ? 1 : eps;
      out.weights[0] = exact_or_throw(T * (Q - e * r) + 2 * e * r * U(0), D, "u1");
      out.weights[1] = exact_or_throw(T * (Q + e * r) - 2 * e * r * U(0), D, "u2");
      break;
    }
    case CaseTag::n1_three:
    case CaseTag::n1_four:
      for (std::uint64_t i = 0; i < N1; ++i)
        out.weights[i] = exact_or_throw(T * (Q - eps * r) + k * eps * r * U(N1 - i), D, "u_i");
      break;
    case CaseTag::semi_primitive_odd:
      if (k > r) fail(ErrorKind::HypothesisViolated, "N1 > sqrt(Q)");
      for (std::uint64_t i = 0; i < N1; ++i)
        out.weights[i] = exact_or_throw(T * (Q + r) - k * r * U(N1 / 2 + N1 - i), D, "u_i");
      break;
    case CaseTag::semi_primitive_other: {
      auto semi = semi_primitive_data(code.p(), sm, N1);
      const i128 sg = semi->gamma % 2 == 0 ? 1 : -1;
      if (sg < 0 && k > r) fail(ErrorKind::HypothesisViolated, "N1 > sqrt(Q) with odd gamma");
      for (std::uint64_t i = 0; i < N1; ++i)
        out.weights[i] = exact_or_throw(T * (Q - sg * r) + sg * k * r * U(N1 - i), D, "u_i");
      break;
    }
    default:
      fail(ErrorKind::NoTheoremApplies, "unreachable case");
  }
  return out;
}

ConstantWeightCheck constant_weight_check(const Code& code, std::size_t b, const PeriodSystem& periods,
                                          std::uint64_t limit) {
  ConstantWeightCheck out{};
  out.matrix_invertible = circulant_invertibility(periods).invertible;
  out.claim = out.matrix_invertible == Verdict::yes ? "iff" : "if";
  std::vector<std::int64_t> ws;
  if (b >= code.k0()) {
    out.u_uniform = true;
    ws.assign(code.N1(), static_cast<std::int64_t>(code.n()));
    if (b <= code.k0()) out.u_uniform = u_profile(code, b, limit).uniform();
  } else {
    auto up = u_profile(code, b, limit);
    out.u_uniform = up.uniform();
    for (std::uint64_t i = 0; i < code.N1(); ++i) ws.push_back(closed_form_weight(code, b, i, periods, up));
  }
  std::vector<std::int64_t> nonzero;
  for (auto w : ws)
    if (w != 0) nonzero.push_back(w);
  out.is_constant = !nonzero.empty() && std::all_of(nonzero.begin(), nonzero.end(), [&](auto w) { return w == nonzero[0]; });
  if (out.is_constant) out.weight = nonzero[0];
  if (out.matrix_invertible == Verdict::yes)
    out.consistent = out.u_uniform == out.is_constant || b >= code.k0();
  else
    out.consistent = !out.u_uniform || out.is_constant;
  return out;
}

}  // namespace bsym
