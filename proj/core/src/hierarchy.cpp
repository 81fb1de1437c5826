#include "bsym/hierarchy.hpp"

#include <algorithm>
#include <bit>

#include "bsym/arith.hpp"
#include "bsym/error.hpp"

namespace bsym {

std::uint64_t gaussian_binomial(unsigned k, unsigned b, std::uint64_t q) {
  if (b > k) return 0;
  i128 r = 1;
  const i128 cap = static_cast<i128>(UINT64_MAX);
  for (unsigned i = 0; i < b; ++i) {
    auto top = checked_pow(q, k - i);
    auto bot = checked_pow(q, i + 1);
    if (!top || !bot) return UINT64_MAX;
    r = r * static_cast<i128>(*top - 1) / static_cast<i128>(*bot - 1);
    if (r > cap) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

using Bits = std::vector<std::uint64_t>;

class SupportOracle {
 public:
  explicit SupportOracle(const Code& code) : code_(code), words_((code.n() + 63) / 64) {
    const Field& big = *code.big();
    const Elem beta0 = big.exp(code.generator_exponent());
    for (unsigned j = 0; j < code.k0(); ++j)
      rows_.push_back(big.mul(beta0, big.exp(static_cast<std::uint64_t>(code.N()) * j)));
    const std::uint64_t g = big.group_order();
    if (g * words_ <= (std::uint64_t{1} << 23)) {
      table_.resize(g * words_, 0);
      for (std::uint64_t t = 0; t < g; ++t) fill(t, table_.data() + t * words_);
    }
  }

  std::size_t words() const noexcept { return words_; }

  Elem beta_of(const std::vector<Elem>& u) const {
    const Field& big = *code_.big();
    Elem acc = 0;
    for (std::size_t j = 0; j < u.size(); ++j)
      if (u[j] != 0) acc = big.add(acc, big.mul(code_.embedding().to_big(u[j]), rows_[j]));
    return acc;
  }

  void or_into(Elem beta, std::uint64_t* acc) {
    if (beta == 0) return;
    const std::uint64_t t = code_.big()->log(beta);
    const std::uint64_t* src;
    if (!table_.empty()) {
      src = table_.data() + t * words_;
    } else {
      scratch_.assign(words_, 0);
      fill(t, scratch_.data());
      src = scratch_.data();
    }
    for (std::size_t i = 0; i < words_; ++i) acc[i] |= src[i];
  }

 private:
  void fill(std::uint64_t t, std::uint64_t* dst) const {
    auto w = code_.codeword_from_exponent(t);
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w.symbols[i] != 0) dst[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  const Code& code_;
  std::size_t words_;
  std::vector<Elem> rows_;
  Bits table_;
  Bits scratch_;
};

std::int64_t exact_or_throw(i128 num, i128 den, const std::string& what) {
  auto v = exact_div(num, den);
  if (!v) fail(ErrorKind::NonRationalCombination, what + " is not an integer");
  return *v;
}

std::int64_t root_of(const Code& code) {
  auto r = exact_sqrt(code.Q());
  if (!r) fail(ErrorKind::HypothesisViolated, "Q is not a square");
  return static_cast<std::int64_t>(*r);
}

}  // namespace

std::uint64_t ghw_brute(const Code& code, std::size_t b, std::uint64_t subspace_limit) {
  const unsigned k = code.k0();
  if (b < 1 || b > k) fail(ErrorKind::BOutOfRange, "generalized weight needs 1 <= b <= k0");
  const std::uint64_t count = gaussian_binomial(k, static_cast<unsigned>(b), code.q());
  if (count > subspace_limit)
    fail(ErrorKind::SubspaceLimitExceeded,
         std::to_string(count) + " subspaces exceed the limit " + std::to_string(subspace_limit));

  SupportOracle oracle(code);
  const std::uint64_t q = code.q();
  std::uint64_t best = UINT64_MAX;
  Bits acc(oracle.words());

  std::vector<unsigned> piv(b);
  for (unsigned i = 0; i < b; ++i) piv[i] = i;
  for (;;) {
    // Free entries: row r, column c > piv[r], c not a pivot.
    std::vector<std::pair<unsigned, unsigned>> free;
    for (unsigned r = 0; r < b; ++r)
      for (unsigned c = piv[r] + 1; c < k; ++c)
        if (!std::binary_search(piv.begin(), piv.end(), c)) free.emplace_back(r, c);
    std::vector<Elem> vals(free.size(), 0);
    std::vector<std::vector<Elem>> rows(b, std::vector<Elem>(k, 0));
    for (;;) {
      for (unsigned r = 0; r < b; ++r) {
        std::fill(rows[r].begin(), rows[r].end(), 0);
        rows[r][piv[r]] = 1;
      }
      for (std::size_t f = 0; f < free.size(); ++f) rows[free[f].first][free[f].second] = vals[f];
      std::fill(acc.begin(), acc.end(), 0);
      for (unsigned r = 0; r < b; ++r) oracle.or_into(oracle.beta_of(rows[r]), acc.data());
      std::uint64_t pop = 0;
      for (auto w : acc) pop += static_cast<std::uint64_t>(std::popcount(w));
      best = std::min(best, pop);

      std::size_t f = 0;
      while (f < vals.size() && vals[f] == q - 1) vals[f++] = 0;
      if (f == vals.size()) break;
      ++vals[f];
    }
    int i = static_cast<int>(b) - 1;
    while (i >= 0 && piv[i] == k - b + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++piv[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < b; ++j) piv[j] = piv[j - 1] + 1;
  }
  return best;
}

ClosedValue ghw_closed(const Code& code, std::size_t b) {
  const unsigned m = code.m();
  if (b < 2 || b + 1 > m) fail(ErrorKind::CaseNotCovered, "closed generalized weight needs 2 <= b <= m - 1");
  if (code.k0() != m) fail(ErrorKind::HypothesisViolated, "dimension below m");
  const i128 Q = static_cast<i128>(code.Q());
  const i128 qb = static_cast<i128>(ipow(code.q(), static_cast<unsigned>(b)));
  const i128 D = qb * static_cast<i128>(code.N());
  if (code.N1() == 1)
    return {static_cast<std::uint64_t>(exact_or_throw((qb - 1) * Q, D, "generalized weight")), "N1=1"};
  if (code.N1() == 2) {
    const i128 r = root_of(code);
    if (2 * b <= m)
      return {static_cast<std::uint64_t>(exact_or_throw((qb - 1) * (Q - r), D, "generalized weight")), "N1=2,b<=m/2"};
    return {static_cast<std::uint64_t>(exact_or_throw(Q * qb - 2 * Q + qb, D, "generalized weight")), "N1=2,b>m/2"};
  }
  fail(ErrorKind::CaseNotCovered, "closed generalized weight only for N1 in {1, 2}");
}

ClosedValue min_db_closed(const Code& code, std::size_t b, const UProfile& uprof) {
  if (b < 1) fail(ErrorKind::BOutOfRange, "b must be positive");
  if (b >= code.k0()) return {code.n(), "b>=k0"};
  const unsigned m = code.m();
  if (code.k0() != m) fail(ErrorKind::HypothesisViolated, "dimension below m");
  if (uprof.b != b || uprof.N1 != code.N1()) fail(ErrorKind::InvalidArgument, "U profile does not match");
  const i128 Q = static_cast<i128>(code.Q());
  const i128 T = static_cast<i128>(ipow(code.q(), static_cast<unsigned>(b))) - 1;
  const i128 D = (T + 1) * static_cast<i128>(code.N());
  const std::uint64_t N1 = code.N1();
  if (N1 == 1) return {static_cast<std::uint64_t>(exact_or_throw(T * Q, D, "distance")), "N1=1"};
  if (N1 == 2) {
    const i128 r = root_of(code);
    const i128 U0 = static_cast<i128>(uprof.counts[0]);
    if (2 * U0 >= T) return {static_cast<std::uint64_t>(exact_or_throw(T * (Q + r) - 2 * r * U0, D, "distance")), "N1=2"};
    return {static_cast<std::uint64_t>(exact_or_throw(T * (Q - r) + 2 * r * U0, D, "distance")), "N1=2"};
  }
  auto semi = semi_primitive_data(code.p(), code.s() * m, N1);
  if (!semi) fail(ErrorKind::CaseNotCovered, "no closed minimum distance for this N1");
  const i128 r = root_of(code);
  const i128 k = static_cast<i128>(N1);
  const auto [lo, hi] = std::minmax_element(uprof.counts.begin(), uprof.counts.end());
  if (semi->gamma % 2 == 1) {
    if (k > r) fail(ErrorKind::HypothesisViolated, "N1 > sqrt(Q) with odd gamma");
    return {static_cast<std::uint64_t>(exact_or_throw(T * (Q + r) - k * r * static_cast<i128>(*hi), D, "distance")),
            "semi-primitive,gamma odd"};
  }
  return {static_cast<std::uint64_t>(exact_or_throw(T * (Q - r) + k * r * static_cast<i128>(*lo), D, "distance")),
          "semi-primitive,gamma even"};
}

bool HierarchyReport::strict_shape() const {
  for (std::size_t b = 1; b <= db.size(); ++b) {
    if (b < k0 && !(db[b - 1] < db[b])) return false;
    if (b >= k0 && db[b - 1] != n) return false;
  }
  return true;
}

bool HierarchyReport::dominance() const {
  for (std::size_t i = 0; i < ghw.size() && i < db.size(); ++i)
    if (ghw[i] && db[i] < *ghw[i]) return false;
  return true;
}

namespace {

bool soft_failure(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::CaseNotCovered:
    case ErrorKind::NoTheoremApplies:
    case ErrorKind::HypothesisViolated:
    case ErrorKind::EnumerationLimitExceeded:
    case ErrorKind::SubspaceLimitExceeded:
      return true;
    default:
      return false;
  }
}

std::pair<std::uint64_t, std::string> db_entry(const Code& code, std::size_t b, const HierarchyOptions& opt) {
  if (opt.method != HierarchyMethod::brute) {
    try {
      auto up = u_profile(code, b, opt.enumeration_limit);
      auto v = min_db_closed(code, b, up);
      return {v.value, "closed:" + v.source};
    } catch (const Error& e) {
      if (opt.method == HierarchyMethod::closed || !soft_failure(e)) throw;
    }
  }
  const bool full = code.codeword_count() <= opt.enumeration_limit;
  return {min_db(code, b, opt.enumeration_limit), full ? "brute" : "brute:per-class"};
}

std::pair<std::optional<std::uint64_t>, std::string> ghw_entry(const Code& code, std::size_t b, std::uint64_t d1,
                                                               const HierarchyOptions& opt) {
  if (b == code.k0()) return {code.n(), "full-support"};
  if (opt.method != HierarchyMethod::closed) {
    try {
      return {ghw_brute(code, b, opt.subspace_limit), "brute"};
    } catch (const Error& e) {
      if (opt.method == HierarchyMethod::brute || !soft_failure(e)) throw;
    }
  }
  if (b == 1) return {d1, "b=1"};
  try {
    auto v = ghw_closed(code, b);
    return {v.value, "closed:" + v.source};
  } catch (const Error& e) {
    if (opt.method == HierarchyMethod::closed || !soft_failure(e)) throw;
  }
  return {std::nullopt, "unavailable"};
}

}  // namespace

HierarchyReport bsymbol_hierarchy(const Code& code, const HierarchyOptions& opt) {
  HierarchyReport rep;
  rep.code = code.label();
  rep.n = code.n();
  rep.k0 = code.k0();
  rep.db.assign(rep.n, rep.n);
  rep.db_method.assign(rep.n, "b>k0");
  for (std::size_t b = 1; b <= std::min<std::size_t>(rep.k0, rep.n); ++b) {
    auto [v, how] = db_entry(code, b, opt);
    rep.db[b - 1] = v;
    rep.db_method[b - 1] = how;
  }
  if (opt.ghw) {
    for (std::size_t b = 1; b <= rep.k0; ++b) {
      auto [v, how] = ghw_entry(code, b, rep.db[0], opt);
      rep.ghw.push_back(v);
      rep.ghw_method.push_back(how);
      rep.equal.push_back(v ? std::optional<bool>(*v == rep.db[b - 1]) : std::nullopt);
    }
  }
  return rep;
}

EqualityReport equality_report(const Code& code, std::size_t b, const HierarchyOptions& opt) {
  if (code.N1() != 2) fail(ErrorKind::CaseNotCovered, "equality conditions are stated for N1 = 2");
  if (b < 1 || b > code.k0()) fail(ErrorKind::BOutOfRange, "b outside [1, k0]");
  EqualityReport rep{};
  rep.b = b;
  rep.db = db_entry(code, b, opt).first;
  const std::uint64_t d1 = b == 1 ? rep.db : db_entry(code, 1, opt).first;
  auto g = ghw_entry(code, b, d1, opt).first;
  if (!g) fail(ErrorKind::CaseNotCovered, "generalized weight unavailable");
  rep.ghw = *g;
  rep.equal = rep.db == rep.ghw;

  const unsigned m = code.m();
  auto up = u_profile(code, b, opt.enumeration_limit);
  const i128 qb = static_cast<i128>(ipow(code.q(), static_cast<unsigned>(b)));
  const i128 r = root_of(code);
  rep.condition1 = 2 * b <= m && static_cast<i128>(up.counts[0]) == qb - 1;
  std::string which;
  if (2 * b > m && b <= m) {
    const i128 v_plus = (qb + r) * (r - 1);
    const i128 v_minus = (qb - r) * (r + 1);
    for (std::uint64_t i = 0; i < 2 && which.empty(); ++i) {
      const i128 lhs = 2 * r * static_cast<i128>(up.counts[i]);
      if (lhs == v_minus) which = "condition2:i=" + std::to_string(i) + ",(q^b-r)(r+1)/2r";
      else if (lhs == v_plus) which = "condition2:i=" + std::to_string(i) + ",(q^b+r)(r-1)/2r";
    }
  }
  rep.condition2 = !which.empty();
  if (rep.condition1) rep.condition_fired = "condition1";
  else if (rep.condition2) rep.condition_fired = which;
  else if (b == 1 || b == code.k0()) rep.condition_fired = "endpoint";
  else rep.condition_fired = "none";
  rep.predicted = rep.condition1 || rep.condition2 || b == 1 || b == code.k0();
  return rep;
}

}  // namespace bsym
