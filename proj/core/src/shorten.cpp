#include "bsym/shorten.hpp"

#include <algorithm>

#include "bsym/arith.hpp"
#include "bsym/error.hpp"

namespace bsym {

std::uint64_t griesmer_sum(std::uint64_t K, std::uint64_t d, std::uint64_t q) {
  if (K < 1 || d < 1 || q < 2) fail(ErrorKind::InvalidArgument, "griesmer_sum needs K >= 1, d >= 1, q >= 2");
  std::uint64_t sum = 0;
  std::uint64_t qi = 1;
  for (std::uint64_t i = 0; i < K; ++i) {
    sum += ceil_div(d, qi);
    if (qi > d) qi = d + 1;
    else qi *= q;
  }
  return sum;
}

std::uint64_t min_hamming_distance(const Field& f, const Matrix& rows, std::uint64_t limit) {
  if (rows.empty()) return 0;
  auto count = checked_pow(f.order(), static_cast<unsigned>(rows.size()));
  if (!count || *count > limit) fail_enumeration_limit(count ? *count : UINT64_MAX, limit);
  std::uint64_t best = UINT64_MAX;
  bool first = true;
  for_each_combination(f, rows, [&](const std::vector<Elem>& v) {
    if (first) {
      first = false;
      return;
    }
    best = std::min<std::uint64_t>(best, hamming_weight(v));
  });
  return best;
}

namespace {

void check_codeword(const Code& code, const Word& c) {
  if (c.size() != code.n()) fail(ErrorKind::LengthMismatch, "word length differs from n");
  if (c.is_zero()) fail(ErrorKind::NotCodeword, "zero word");
  Matrix g = code.generator_rows();
  g.push_back(c.symbols);
  if (rank(*code.small(), g) != code.k0()) fail(ErrorKind::NotCodeword, "word is not in " + code.label());
}

ShortenedCode finish(const std::string& parent, const FieldPtr& field, std::uint64_t q, SupportSet T, Matrix gen, std::uint64_t limit) {
  ShortenedCode s;
  s.parent = parent;
  s.field = field;
  s.kept = T.complement();
  s.T = std::move(T);
  s.generator = std::move(gen);
  s.length = s.kept.size();
  s.dimension = s.generator.size();
  s.min_distance = min_hamming_distance(*s.field, s.generator, limit);
  s.is_griesmer = s.dimension > 0 && s.min_distance > 0 &&
                  s.length == griesmer_sum(s.dimension, s.min_distance, q);
  return s;
}

Matrix restrict_columns(const Matrix& rows, const SupportSet& cols) {
  Matrix out;
  for (const auto& r : rows) {
    std::vector<Elem> v;
    v.reserve(cols.size());
    for (auto i : cols.indices) v.push_back(r[i]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

ShortenedCode bsymbol_shorten(const Code& code, const Word& c, std::size_t b, std::uint64_t limit) {
  if (b < 1 || b > code.k0()) fail(ErrorKind::BOutOfRange, "b outside [1, k0]");
  check_codeword(code, c);
  Matrix shifts;
  for (std::size_t t = 0; t < b; ++t) shifts.push_back(cyclic_shift(c, static_cast<std::int64_t>(t)).symbols);
  if (rank(*code.small(), shifts) != b) fail(ErrorKind::RankDeficient, "shifts of c are dependent");
  SupportSet I = bsymbol_support(c, b);
  Matrix gen = restrict_columns(shifts, I);
  return finish(code.label(), code.small(), code.q(), I.complement(), std::move(gen), limit);
}

Word minimal_bsymbol_codeword(const Code& code, std::size_t b) {
  auto ws = class_weights(code, b);
  std::uint64_t best = 0;
  for (std::uint64_t i = 0; i < ws.size(); ++i)
    if (ws[i] != 0 && (ws[best] == 0 || ws[i] < ws[best])) best = i;
  return code.codeword_from_exponent(best);
}

GriesmerFamily griesmer_family(const Code& code, std::size_t b, std::uint64_t limit) {
  if (code.N1() != 1) fail(ErrorKind::HypothesisViolated, "N1 != 1");
  if (b < 1 || b > code.m()) fail(ErrorKind::BOutOfRange, "b outside [1, m]");
  GriesmerFamily g{bsymbol_shorten(code, minimal_bsymbol_codeword(code, b), b, limit), 0, b, 0, false};
  const std::uint64_t Q = code.Q(), q = code.q(), N = code.N();
  const std::uint64_t qb = ipow(q, static_cast<unsigned>(b));
  g.expected_length = static_cast<std::uint64_t>((static_cast<i128>(qb - 1) * Q) / (static_cast<i128>(qb) * N));
  g.expected_distance = (q - 1) * Q / (q * N);
  g.matches = g.shortened.length == g.expected_length && g.shortened.dimension == g.expected_dimension &&
              g.shortened.min_distance == g.expected_distance;
  return g;
}

namespace {

unsigned simplex_sub_degree(const FieldPtr& big, std::uint64_t q) {
  auto pp = as_prime_power(q);
  if (!big || !pp || pp->p != big->characteristic() || big->degree() % pp->k != 0)
    fail(ErrorKind::NotSubfield, "F_" + std::to_string(q) + " is not a subfield");
  return pp->k;
}

}  // namespace

SimplexCode::SimplexCode(FieldPtr big, std::uint64_t q)
    : emb_(big, simplex_sub_degree(big, q)), q_(q), n_(big->group_order() / (q - 1)) {}

std::string SimplexCode::label() const { return "S(" + std::to_string(k()) + "," + std::to_string(q_) + ")"; }

Word SimplexCode::codeword_from_exponent(std::uint64_t t) const {
  const Field& big = *emb_.big();
  Word w{small(), std::vector<Elem>(n_)};
  for (std::uint64_t i = 0; i < n_; ++i) w.symbols[i] = emb_.to_small(big.relative_trace(emb_.sub_degree(), big.exp(t + i)));
  return w;
}

Matrix SimplexCode::generator_rows() const {
  Matrix rows;
  for (unsigned j = 0; j < k(); ++j) rows.push_back(codeword_from_exponent(j).symbols);
  return rows;
}

SimplexCode build_simplex(std::uint32_t p, unsigned s, unsigned m) { return SimplexCode(make_field(p, s * m), ipow(p, s)); }

ShortenedCode bsymbol_shorten(const SimplexCode& code, const Word& c, std::size_t b, std::uint64_t limit) {
  if (b < 1 || b > code.k()) fail(ErrorKind::BOutOfRange, "b outside [1, m]");
  if (c.size() != code.n()) fail(ErrorKind::LengthMismatch, "word length differs from n");
  if (c.is_zero()) fail(ErrorKind::NotCodeword, "zero word");
  Matrix g = code.generator_rows();
  const Field& f = *code.small();
  Matrix aug = g;
  aug.push_back(c.symbols);
  if (rank(f, aug) != code.k()) fail(ErrorKind::NotCodeword, "word is not in " + code.label());
  // c(alpha^n) = g c(1) with g = alpha^n in F_q; the shift rescales the wrapped symbol by 1/g.
  const Elem g_mult = [&] {
    const Word a = code.codeword_from_exponent(0), b2 = code.codeword_from_exponent(code.n());
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a.symbols[i] != 0) return f.div(b2.symbols[i], a.symbols[i]);
    fail(ErrorKind::InvalidArgument, "zero generator");
  }();
  const Elem ginv = f.inv(g_mult);
  Matrix shifts;
  Word cur = c;
  for (std::size_t t = 0; t < b; ++t) {
    shifts.push_back(cur.symbols);
    Word next = cyclic_shift(cur, 1);
    next.symbols[0] = f.mul(ginv, next.symbols[0]);
    cur = std::move(next);
  }
  aug = g;
  for (const auto& r : shifts) aug.push_back(r);
  if (rank(f, aug) != code.k()) fail(ErrorKind::InvalidArgument, "shift left the code");
  if (rank(f, shifts) != b) fail(ErrorKind::RankDeficient, "shifts of c are dependent");
  SupportSet I = bsymbol_support(c, b);
  return finish(code.label(), code.small(), code.q(), I.complement(), restrict_columns(shifts, I), limit);
}

ShortenedCode shorten_at(const Code& code, const SupportSet& T, std::uint64_t limit) {
  const Matrix g = code.generator_rows();
  for (auto i : T.indices)
    if (i >= code.n()) fail(ErrorKind::IndexOutOfRange, "coordinate outside the code");
  SupportSet t{static_cast<std::size_t>(code.n()), T.indices};
  std::sort(t.indices.begin(), t.indices.end());
  t.indices.erase(std::unique(t.indices.begin(), t.indices.end()), t.indices.end());
  Matrix on_t = restrict_columns(g, t);
  Matrix kernel = left_kernel(*code.small(), on_t);
  if (t.indices.empty()) {
    kernel.clear();
    for (unsigned i = 0; i < code.k0(); ++i) {
      std::vector<Elem> e(code.k0(), 0);
      e[i] = 1;
      kernel.push_back(std::move(e));
    }
  }
  const SupportSet kept = t.complement();
  Matrix rows;
  for (const auto& u : kernel) rows.push_back(vec_mat(*code.small(), u, g));
  return finish(code.label(), code.small(), code.q(), std::move(t), restrict_columns(rows, kept), limit);
}

}  // namespace bsym
