#include "bsym_cli/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <random>

#include "bsym/arith.hpp"
#include "bsym/enumerators.hpp"
#include "bsym/error.hpp"
#include "bsym/grid.hpp"
#include "bsym/hierarchy.hpp"
#include "bsym/shorten.hpp"

namespace bsym::cli {

namespace {

constexpr std::size_t kExamples = 10;

struct Tally {
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> examples;

  template <class What>
  void record(bool ok, What&& what) {
    ++instances;
    if (ok) return;
    ++failures;
    if (examples.size() < kExamples) examples.push_back(what());
  }

  Check check(std::string name, std::string reference, Json extra = Json::object()) const {
    Check c;
    c.name = std::move(name);
    c.reference = std::move(reference);
    c.status = failures ? Status::fail : instances ? Status::pass : Status::skipped;
    c.measured = {{"instances", instances}, {"failures", failures}, {"examples", examples}};
    for (auto& [k, v] : extra.items()) c.measured[k] = v;
    return c;
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string label(const Code& c, std::size_t b) { return c.label() + " b=" + std::to_string(b); }

// Grid configurations grouped by Q so that caches stay small.
template <class Fn>
void for_each_grid_code(std::uint64_t max_Q, Fn&& fn) {
  GridCache cache;
  std::uint64_t current = 0;
  for (const auto& cfg : grid_configs(max_Q)) {
    if (cfg.Q() != current) {
      cache = GridCache{};
      current = cfg.Q();
    }
    fn(cfg, cache);
  }
}

VerificationReport make_report(std::string suite, const SuiteOptions& o) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.config = to_json(o);
  return r;
}

struct UTableRow {
  std::uint32_t p;
  unsigned s, m;
  std::uint64_t b, N, N1, U;
};

constexpr UTableRow kUTable[] = {
    {2, 1, 4, 3, 5, 5, 3},        {2, 1, 6, 3, 21, 21, 3},    {2, 1, 8, 5, 51, 51, 5},
    {2, 1, 10, 3, 341, 341, 3},   {2, 2, 6, 3, 455, 455, 9},  {2, 2, 6, 5, 273, 273, 15},
    {2, 2, 8, 5, 4369, 4369, 15}, {3, 1, 4, 2, 20, 20, 4},    {3, 1, 6, 2, 182, 182, 4},
    {3, 1, 8, 2, 1640, 1640, 4},  {3, 1, 8, 4, 820, 820, 8},  {3, 1, 8, 5, 656, 656, 10},
};

struct SimplexRow {
  std::uint32_t p;
  unsigned s, m, b;
  std::uint64_t n, k, d;
};

constexpr SimplexRow kSimplexTable[] = {
    {2, 1, 4, 3, 14, 3, 8},    {2, 1, 4, 2, 12, 2, 8},    {2, 1, 5, 4, 30, 4, 16},  {2, 1, 5, 3, 28, 3, 16},
    {2, 1, 5, 2, 24, 2, 16},   {3, 1, 4, 3, 39, 3, 27},   {3, 1, 4, 2, 36, 2, 27},  {3, 1, 5, 4, 120, 4, 81},
    {3, 1, 5, 3, 117, 3, 81},  {3, 1, 5, 2, 108, 2, 81},  {2, 2, 4, 3, 84, 3, 64},  {2, 2, 4, 2, 80, 2, 64},
    {2, 2, 5, 4, 340, 4, 256}, {2, 2, 5, 3, 336, 3, 256}, {2, 2, 5, 2, 320, 2, 256},
};

}  // namespace

Json to_json(const SuiteOptions& o) {
  return {{"manifest_version", kGridManifestVersion},
          {"max_Q", o.max_Q},
          {"dft_max_Q", o.dft_max_Q},
          {"probe_max_Q", o.probe_max_Q},
          {"hierarchy_codeword_limit", o.hierarchy_codeword_limit},
          {"subspace_limit", o.subspace_limit},
          {"enumeration_limit", o.enumeration_limit},
          {"seed", o.seed},
          {"extended", o.extended},
          {"tol", o.tol ? Json(*o.tol) : Json("default")}};
}

Polynomial conway_3_10() { return {2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1}; }

VerificationReport field_suite(const SuiteOptions& o) {
  auto rep = make_report("field", o);
  Tally order, frob, trace_balance, trace_linear, logs;
  std::mt19937_64 rng(o.seed);
  for (std::uint64_t Q = 2; Q <= o.max_Q; ++Q) {
    auto pp = as_prime_power(Q);
    if (!pp) continue;
    const auto p = static_cast<std::uint32_t>(pp->p);
    auto f = make_field(p, pp->k);
    const std::string name = f->name();
    const std::uint64_t g = f->group_order();
    bool ok = f->pow(f->primitive(), static_cast<std::int64_t>(g)) == 1;
    for (auto d : divisors(g))
      if (d < g) ok = ok && f->pow(f->primitive(), static_cast<std::int64_t>(d)) != 1;
    order.record(ok, [&] { return name; });
    bool lg = true;
    for (Elem x = 1; x < f->order(); ++x) lg = lg && f->exp(f->log(x)) == x;
    logs.record(lg, [&] { return name; });
    for (int r = 0; r < 64; ++r) {
      const Elem x = static_cast<Elem>(rng() % Q), y = static_cast<Elem>(rng() % Q);
      frob.record(f->pow(f->add(x, y), p) == f->add(f->pow(x, p), f->pow(y, p)), [&] { return name; });
    }
    for (unsigned s = 1; s <= pp->k; ++s) {
      if (pp->k % s != 0) continue;
      const std::uint64_t q = ipow(p, s);
      std::map<Elem, std::uint64_t> hits;
      std::vector<Elem> sub;
      for (Elem x = 0; x < Q; ++x) {
        ++hits[f->relative_trace(s, x)];
        if (f->in_subfield(s, x)) sub.push_back(x);
      }
      bool balanced = hits.size() == q;
      for (auto [v, c] : hits) balanced = balanced && c == Q / q;
      trace_balance.record(balanced, [&] { return name + " over F_" + std::to_string(q); });
      bool linear = true;
      for (Elem x = 0; x < Q; ++x) {
        const Elem a = sub[rng() % sub.size()], y = static_cast<Elem>(rng() % Q);
        linear = linear && f->relative_trace(s, f->add(f->mul(a, x), y)) ==
                               f->add(f->mul(a, f->relative_trace(s, x)), f->relative_trace(s, y));
      }
      trace_linear.record(linear, [&] { return name + " over F_" + std::to_string(q); });
    }
  }
  rep.checks.push_back(order.check("primitive-order", "alpha has order exactly p^e - 1"));
  rep.checks.push_back(logs.check("log-antilog", "exp(log(x)) = x for all nonzero x"));
  rep.checks.push_back(frob.check("frobenius-additive", "(x + y)^p = x^p + y^p, sampled"));
  rep.checks.push_back(trace_balance.check("trace-balanced", "each subfield value hit Q/q times"));
  rep.checks.push_back(trace_linear.check("trace-linear", "T(ax + y) = aT(x) + T(y) for a in F_q"));
  return rep;
}

VerificationReport sparse_word_suite(const SuiteOptions& o) {
  auto rep = make_report("sparse-word-weights", o);
  const std::size_t expect[] = {4, 8, 11, 13, 14};
  auto run = [&](const FieldPtr& f, Elem a, Elem b, Elem c) {
    Word x{f, {0, 0, a, 0, 0, 0, b, 0, 0, 0, 0, c, 0, a}};
    Tally t;
    Json got = Json::array();
    for (std::size_t k = 1; k <= 5; ++k) {
      const auto w = w_b(x, k);
      got.push_back(w);
      t.record(w == expect[k - 1], [&] { return "w_" + std::to_string(k) + " = " + std::to_string(w); });
    }
    return std::pair{t, got};
  };
  auto [t2, g2] = run(make_field(2, 1), 1, 1, 1);
  rep.checks.push_back(t2.check("binary", "w_1..w_5 = 4, 8, 11, 13, 14", {{"weights", g2}}));
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<Elem> nz(1, 4);
  const Elem a = nz(rng), b = nz(rng), c = nz(rng);
  auto [t5, g5] = run(make_field(5, 1), a, b, c);
  rep.checks.push_back(
      t5.check("quinary", "w_1..w_5 = 4, 8, 11, 13, 14", {{"weights", g5}, {"a", a}, {"b", b}, {"c", c}}));
  return rep;
}

VerificationReport u_table_suite(const SuiteOptions& o, Table* table) {
  auto rep = make_report("u-table", o);
  if (table) *table = Table{{"Q", "q", "b", "N", "N1", "U"}, {}};
  for (const auto& r : kUTable) {
    auto code = build_code(r.p, r.s, r.m, r.N);
    auto up = u_profile(code, r.b, o.enumeration_limit);
    const std::uint64_t U = up.image_counts[0];
    Check c;
    c.name = code.label() + " b=" + std::to_string(r.b);
    c.reference = "#U(b,0,N1) = " + std::to_string(r.U);
    c.status = (U == r.U && code.N1() == r.N1) ? Status::pass : Status::fail;
    c.measured = {{"U", U},
                  {"N1", code.N1()},
                  {"k0", code.k0()},
                  {"tuple_count", up.counts[0]},
                  {"degenerate_tuples", up.degenerate}};
    rep.checks.push_back(std::move(c));
    if (table)
      table->rows.push_back({std::to_string(code.Q()), std::to_string(code.q()), std::to_string(r.b),
                             std::to_string(r.N), std::to_string(code.N1()), std::to_string(U)});
  }
  return rep;
}

VerificationReport closed_form_suite(const SuiteOptions& o) {
  auto rep = make_report("closed-form-vs-brute", o);
  Tally t, dist;
  for_each_grid_code(o.max_Q, [&](const GridConfig& cfg, GridCache& cache) {
    auto code = cache.code(cfg);
    const auto& ps = cache.periods(cfg.p, cfg.s * cfg.m, code.N1());
    for (std::size_t b = 1; b <= code.k0(); ++b) {
      auto up = u_profile(code, b, o.enumeration_limit);
      auto brute = class_weights(code, b, o.seed);
      std::vector<std::int64_t> closed;
      for (std::uint64_t i = 0; i < code.N1(); ++i) {
        std::int64_t w = -1;
        std::string err;
        try {
          w = closed_form_weight(code, b, i, ps, up);
        } catch (const Error& e) {
          err = e.what();
        }
        closed.push_back(w);
        t.record(w == static_cast<std::int64_t>(brute[i]), [&] {
          return label(code, b) + " class " + std::to_string(i) + ": closed " + std::to_string(w) + " brute " +
                 std::to_string(brute[i]) + (err.empty() ? "" : " (" + err + ")");
        });
      }
      if (code.Q() <= 1024) {
        WeightDistribution cd;
        bool ok = true;
        try {
          cd = closed_form_distribution(code, b, ps, up);
        } catch (const Error&) {
          ok = false;
        }
        dist.record(ok && cd == beta_distribution(code, b, o.enumeration_limit), [&] { return label(code, b); });
      }
    }
  });
  rep.checks.push_back(t.check("per-class-weights", "general weight formula equals brute force per class, exactly"));
  rep.checks.push_back(dist.check("beta-distribution", "closed distribution equals the full beta walk (Q <= 1024)"));
  return rep;
}

VerificationReport case_formula_suite(const SuiteOptions& o) {
  auto rep = make_report("case-formulas", o);
  Tally agree, shape;
  std::map<std::string, std::uint64_t> fired;
  std::uint64_t excluded = 0;
  for_each_grid_code(o.max_Q, [&](const GridConfig& cfg, GridCache& cache) {
    if (cfg.m < 2) return;
    auto code = cache.code(cfg);
    auto tag = special_case_tag(code);
    if (!tag || code.k0() != code.m()) return;
    const auto& ps = cache.periods(cfg.p, cfg.s * cfg.m, code.N1());
    for (std::size_t b = 1; b < code.m(); ++b) {
      auto up = u_profile(code, b, o.enumeration_limit);
      ClosedFormWeights cw;
      try {
        cw = special_case_distribution(code, b, up);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::HypothesisViolated) throw;
        ++excluded;
        continue;
      }
      ++fired[to_string(cw.tag)];
      auto d = cw.distribution(code, b);
      agree.record(d == closed_form_distribution(code, b, ps, up),
                   [&] { return label(code, b) + " " + to_string(cw.tag); });
      const std::uint64_t mult = (code.Q() - 1) / code.N1();
      bool ok = d.entries.at(0) == 1 && d.total() == code.Q() && cw.weights.size() == code.N1();
      for (auto [w, c] : d.entries)
        if (w != 0) ok = ok && c % mult == 0 && w >= b && w <= code.n();
      shape.record(ok, [&] { return label(code, b) + " " + d.enumerator(); });
    }
  });
  Json f = Json::object();
  for (auto& [k, v] : fired) f[k] = v;
  rep.checks.push_back(agree.check("explicit-vs-general", "explicit case weights equal the general formula",
                                   {{"fired", f}, {"hypothesis_excluded", excluded}}));
  rep.checks.push_back(shape.check("enumerator-shape", "1 + ((Q-1)/N1) sum T^{u_i}"));
  return rep;
}

VerificationReport ternary_pair_suite(const SuiteOptions& o) {
  auto rep = make_report("ternary-pair-distance", o);
  Code code(make_field(3, 10, conway_3_10()), 3, 2);
  auto up = u_profile(code, 2, o.enumeration_limit);
  const std::uint64_t target = 26136;
  auto single = [&](std::string name, std::string ref, bool ok, Json measured) {
    Check c{std::move(name), ok ? Status::pass : Status::fail, std::move(ref), std::move(measured)};
    rep.checks.push_back(std::move(c));
  };
  single("u-count", "#U(2,0,2) = 8", up.counts[0] == 8, {{"U", up.counts}, {"n", code.n()}});
  auto cw = special_case_distribution(code, 2, up);
  const auto lo = *std::min_element(cw.weights.begin(), cw.weights.end());
  single("explicit-weights", "minimum of the two explicit weights", lo == static_cast<std::int64_t>(target),
         {{"weights", cw.weights}});
  auto closed = min_db_closed(code, 2, up);
  single("closed-distance", "closed minimum pair distance", closed.value == target,
         {{"d2", closed.value}, {"source", closed.source}});
  auto brute = class_weights(code, 2, o.seed);
  single("per-class-brute", "pair weights of two class representatives",
         *std::min_element(brute.begin(), brute.end()) == target, {{"weights", brute}});
  auto g = ghw_closed(code, 2);
  single("generalized-weight", "second generalized weight", g.value == target, {{"ghw2", g.value}});
  HierarchyOptions ho;
  ho.method = HierarchyMethod::closed;
  auto eq = equality_report(code, 2, ho);
  single("equality", "d_2 equals the generalized weight via the first condition", eq.equal && eq.condition1,
         {{"fired", eq.condition_fired}});
  return rep;
}

VerificationReport shortened_simplex_suite(const SuiteOptions& o, Table* table) {
  auto rep = make_report("shortened-simplex", o);
  if (table) *table = Table{{"code", "b", "n", "k", "d", "griesmer", "expected", "status"}, {}};
  for (const auto& r : kSimplexTable) {
    auto sx = build_simplex(r.p, r.s, r.m);
    auto sh = bsymbol_shorten(sx, sx.codeword_from_exponent(0), r.b, o.enumeration_limit);
    const bool ok = sh.length == r.n && sh.dimension == r.k && sh.min_distance == r.d && sh.is_griesmer &&
                    griesmer_sum(r.k, r.d, sx.q()) == r.n;
    const std::string expected =
        "[" + std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.d) + "]_" + std::to_string(sx.q());
    Check c{sx.label() + " b=" + std::to_string(r.b), ok ? Status::pass : Status::fail, expected,
            {{"params", {sh.length, sh.dimension, sh.min_distance}}, {"griesmer", sh.is_griesmer}, {"T", sh.T.indices}}};
    rep.checks.push_back(std::move(c));
    if (table)
      table->rows.push_back({sx.label(), std::to_string(r.b), std::to_string(sh.length),
                             std::to_string(sh.dimension), std::to_string(sh.min_distance),
                             sh.is_griesmer ? "true" : "false", expected, ok ? "pass" : "fail"});
  }
  return rep;
}

VerificationReport hierarchy_suite(const SuiteOptions& o) {
  auto rep = make_report("hierarchy", o);
  Tally shape, dominance, endpoints, ghw_closed_t, db_closed_t, equality;
  std::uint64_t ghw_skipped = 0;
  for_each_grid_code(o.max_Q, [&](const GridConfig& cfg, GridCache& cache) {
    auto code = cache.code(cfg);
    if (code.codeword_count() > o.hierarchy_codeword_limit) return;
    HierarchyOptions ho;
    ho.method = HierarchyMethod::brute;
    ho.enumeration_limit = std::max(o.enumeration_limit, o.hierarchy_codeword_limit);
    auto h = bsymbol_hierarchy(code, ho);
    shape.record(h.strict_shape(), [&] { return code.label(); });
    std::vector<std::optional<std::uint64_t>> ghw(code.k0() + 1);
    for (std::size_t b = 1; b <= code.k0(); ++b) {
      if (gaussian_binomial(code.k0(), static_cast<unsigned>(b), code.q()) > o.subspace_limit) {
        ++ghw_skipped;
        continue;
      }
      const auto g = ghw_brute(code, b, o.subspace_limit);
      ghw[b] = g;
      dominance.record(h.db[b - 1] >= g, [&] { return label(code, b); });
      if (b == 1 || b == code.k0())
        endpoints.record(h.db[b - 1] == g, [&] {
          return label(code, b) + ": d_b " + std::to_string(h.db[b - 1]) + " vs " + std::to_string(g);
        });
    }
    if (code.m() < 2 || code.k0() != code.m()) return;
    for (std::size_t b = 1; b < code.m(); ++b) {
      if (ghw[b] && b >= 2 && code.N1() <= 2) {
        const auto v = ghw_closed(code, b).value;
        ghw_closed_t.record(v == *ghw[b], [&] { return label(code, b); });
      }
      try {
        auto v = min_db_closed(code, b, u_profile(code, b, o.enumeration_limit));
        db_closed_t.record(v.value == h.db[b - 1], [&] { return label(code, b) + " " + v.source; });
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::CaseNotCovered && e.kind() != ErrorKind::HypothesisViolated &&
            e.kind() != ErrorKind::NoTheoremApplies)
          throw;
      }
    }
    if (code.N1() == 2) {
      for (std::size_t b = 1; b <= code.k0(); ++b) {
        if (!ghw[b]) continue;
        HierarchyOptions eo;
        eo.method = HierarchyMethod::brute;
        eo.subspace_limit = o.subspace_limit;
        auto er = equality_report(code, b, eo);
        equality.record(er.equal == er.predicted, [&] {
          return label(code, b) + " equal=" + std::to_string(er.equal) + " fired=" + er.condition_fired;
        });
      }
    }
  });
  rep.checks.push_back(shape.check("strict-shape", "d_1 < ... < d_k0 = ... = d_n = n"));
  rep.checks.push_back(
      dominance.check("dominance", "d_b >= generalized weight", {{"subspace_limited_entries", ghw_skipped}}));
  rep.checks.push_back(endpoints.check("endpoints", "equality at b = 1 and b = k0"));
  rep.checks.push_back(ghw_closed_t.check("generalized-closed", "closed generalized weights equal the subspace oracle"));
  rep.checks.push_back(db_closed_t.check("distance-closed", "closed minimum distances equal brute force"));
  rep.checks.push_back(equality.check("equality-iff", "d_b = generalized weight iff one of the two conditions"));
  return rep;
}

VerificationReport period_suite(const SuiteOptions& o) {
  auto rep = make_report("periods", o);
  Tally sum_rule, distinct, closed, dft, integers;
  std::uint64_t unshifted_holds = 0, shifted_holds = 0, probes = 0;
  for (std::uint64_t Q = 3; Q <= o.max_Q; ++Q) {
    auto pp = as_prime_power(Q);
    if (!pp) continue;
    const auto p = static_cast<std::uint32_t>(pp->p);
    auto f = make_field(p, pp->k);
    for (auto k : divisors(Q - 1)) {
      auto ps = period_system(*f, k);
      const std::string tag = "Q=" + std::to_string(Q) + " k=" + std::to_string(k);
      CyclotomicValue s = CyclotomicValue::integer(p, 0);
      for (const auto& v : ps.periods) s += v;
      sum_rule.record(s.integer_value() == -1, [&] { return tag; });
      if (k >= 2)
        distinct.record(std::any_of(ps.periods.begin(), ps.periods.end(),
                                    [&](const CyclotomicValue& v) { return !(v == ps.periods[0]); }),
                        [&] { return tag; });
      if (k >= 2) {
        std::optional<ClosedPeriods> cp;
        try {
          cp = gaussian_period_closed_form(p, 1, pp->k, k);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NoClosedFormCase) throw;
        }
        if (cp) {
          bool ok = true;
          for (std::uint64_t i = 0; i < k; ++i)
            ok = ok && (cp->integers ? ps.periods[i].integer_value() == (*cp->integers)[i]
                                     : std::abs(ps.periods[i].approx() - cp->approx(i)) < 1e-6);
          closed.record(ok, [&] { return tag + " " + to_string(cp->tag); });
          if (pp->k % 2 == 0 && (cp->tag == ClosedCase::semi_primitive_odd || cp->tag == ClosedCase::semi_primitive_other))
            integers.record(std::all_of(ps.periods.begin(), ps.periods.end(),
                                        [](const CyclotomicValue& v) { return v.is_integer(); }),
                            [&] { return tag; });
        }
      }
      if (Q <= o.dft_max_Q) {
        auto G = gaussian_sums_of_order(*f, k);
        std::vector<std::complex<double>> xi(k);
        for (std::uint64_t t = 0; t < k; ++t)
          xi[t] = std::polar(1.0, -2 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(k));
        double worst = 0;
        for (std::uint64_t i = 0; i < k; ++i) {
          std::complex<double> acc = -1.0;
          for (std::uint64_t j = 1; j < k; ++j) acc += xi[i * j % k] * G[j];
          acc /= static_cast<double>(k);
          worst = std::max(worst, std::abs(acc - ps.periods[i].approx()));
        }
        dft.record(worst < 1e-6, [&] { return tag + " err " + fmt(worst); });
      }
      if (k >= 2 && Q <= o.probe_max_Q) {
        auto pr = autocorrelation_probe(ps);
        ++probes;
        unshifted_holds += pr.unshifted_holds;
        shifted_holds += pr.shifted_holds;
      }
    }
  }
  rep.checks.push_back(sum_rule.check("sum-rule", "sum of the k periods is -1, exactly"));
  rep.checks.push_back(distinct.check("not-all-equal", "periods are not all equal for k >= 2"));
  rep.checks.push_back(closed.check("closed-forms", "closed forms equal exact periods where a case fires"));
  rep.checks.push_back(integers.check("rational-integers", "semi-primitive periods are integers when sm is even"));
  rep.checks.push_back(dft.check("dft-relation", "periods from Gauss sums within 1e-6"));
  Check probe{"autocorrelation-probe", Status::pass, "informational: which autocorrelation identity holds",
              {{"instances", probes}, {"unshifted_holds", unshifted_holds}, {"shifted_holds", shifted_holds}}};
  rep.checks.push_back(std::move(probe));
  return rep;
}

VerificationReport circulant_scan_suite(const SuiteOptions& o, Table* table) {
  auto rep = make_report("circulant-scan", o);
  if (table) *table = Table{{"Q", "k", "min_abs_eval", "verdict"}, {}};
  std::uint64_t yes = 0, no = 0, inconclusive = 0;
  double global_min = INFINITY;
  Json flagged = Json::array();
  for (std::uint64_t Q = 2; Q <= o.max_Q; ++Q) {
    auto pp = as_prime_power(Q);
    if (!pp) continue;
    auto f = make_field(static_cast<std::uint32_t>(pp->p), pp->k);
    for (auto k : divisors(Q - 1)) {
      auto cc = circulant_invertibility(period_system(*f, k), o.tol);
      global_min = std::min(global_min, cc.min_abs_eval);
      switch (cc.invertible) {
        case Verdict::yes: ++yes; break;
        case Verdict::no: ++no; break;
        case Verdict::inconclusive: ++inconclusive; break;
      }
      if (cc.invertible != Verdict::yes && flagged.size() < kExamples)
        flagged.push_back({{"Q", Q}, {"k", k}, {"min_abs_eval", cc.min_abs_eval}, {"verdict", to_string(cc.invertible)}});
      if (table) table->rows.push_back({std::to_string(Q), std::to_string(k), fmt(cc.min_abs_eval), to_string(cc.invertible)});
    }
  }
  Check c{"invertibility", (no || inconclusive) ? Status::inconclusive : Status::pass,
          "informational: circulant matrix of periods invertible for every k",
          {{"yes", yes}, {"no", no}, {"inconclusive", inconclusive}, {"min_abs_eval", global_min}, {"flagged", flagged}}};
  rep.checks.push_back(std::move(c));
  return rep;
}

VerificationReport u_property_suite(const SuiteOptions& o) {
  auto rep = make_report("u-properties", o);
  Tally partition, sum, first, last, uniform, bounds, sharp, chain;
  for_each_grid_code(o.max_Q, [&](const GridConfig& cfg, GridCache& cache) {
    auto code = cache.code(cfg);
    const std::uint64_t q = code.q(), N1 = code.N1(), Q = code.Q();
    std::vector<std::uint64_t> prev;
    for (std::size_t b = 1; b <= code.k0(); ++b) {
      auto up = u_profile(code, b, o.enumeration_limit);
      const std::uint64_t qb = ipow(q, static_cast<unsigned>(b));
      auto tag = [&] { return label(code, b); };
      partition.record(up.degenerate == 0, tag);
      sum.record(up.total() == qb - 1, tag);
      if (b == 1) first.record(up.counts[0] == q - 1 && up.total() == q - 1, tag);
      bool bnd = up.counts[0] >= b * (q - 1);
      for (auto c : up.counts) bnd = bnd && c <= (Q - 1) / N1;
      bounds.record(bnd, tag);
      if ((Q - 1) % ((q - 1) * b) == 0 && N1 == (Q - 1) / ((q - 1) * b)) sharp.record(up.counts[0] == b * (q - 1), tag);
      bool ch = prev.empty() || std::equal(prev.begin(), prev.end(), up.counts.begin(),
                                           [](std::uint64_t a, std::uint64_t c) { return a <= c; });
      chain.record(ch, tag);
      prev = up.counts;
      if (b == code.k0()) {
        const std::uint64_t sub = ipow(q, code.k0());
        const std::uint64_t step = (Q - 1) / (sub - 1);
        std::vector<std::uint64_t> inter(N1, 0);
        for (std::uint64_t t = 0; t < sub - 1; ++t) ++inter[(t * step) % N1];
        last.record(up.counts == inter, tag);
        if (std::gcd(step, N1) == 1)
          uniform.record(std::all_of(up.counts.begin(), up.counts.end(), [&](auto c) { return c == (sub - 1) / N1; }),
                         tag);
      }
    }
  });
  rep.checks.push_back(partition.check("partition", "no nonzero tuple sums to zero for b <= k0"));
  rep.checks.push_back(sum.check("sum-rule", "class counts sum to q^b - 1"));
  rep.checks.push_back(first.check("b-equals-1", "b = 1 puts all q - 1 tuples in class 0"));
  rep.checks.push_back(last.check("b-equals-k0", "counts at b = k0 equal the class sizes inside F_{q^k0}"));
  rep.checks.push_back(uniform.check("b-equals-k0-uniform", "(q^k0 - 1)/N1 per class when the subgroup meets every class"));
  rep.checks.push_back(bounds.check("bounds", "b(q - 1) <= #U(b,0) and #U(b,i) <= (Q - 1)/N1"));
  rep.checks.push_back(sharp.check("sharp", "#U(b,0) = b(q - 1) when N1 = (Q - 1)/((q - 1)b)"));
  rep.checks.push_back(chain.check("chain", "class counts nondecreasing in b"));
  return rep;
}

VerificationReport verify_all(const SuiteOptions& o) {
  VerificationReport all = make_report("verify", o);
  auto add = [&](VerificationReport r) {
    for (auto& c : r.checks) {
      c.name = r.suite + "/" + c.name;
      all.checks.push_back(std::move(c));
    }
  };
  add(field_suite(o));
  add(sparse_word_suite(o));
  add(u_table_suite(o));
  add(period_suite(o));
  add(circulant_scan_suite(o));
  add(u_property_suite(o));
  add(closed_form_suite(o));
  add(case_formula_suite(o));
  add(hierarchy_suite(o));
  add(shortened_simplex_suite(o));
  if (o.extended) add(ternary_pair_suite(o));
  return all;
}

}  // namespace bsym::cli
