#include "bsym_cli/app.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bsym/arith.hpp"
#include "bsym/enumerators.hpp"
#include "bsym/error.hpp"
#include "bsym/hierarchy.hpp"
#include "bsym/shorten.hpp"
#include "bsym_cli/report.hpp"
#include "bsym_cli/suites.hpp"

namespace bsym::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Params {
  std::uint32_t p = 0;
  unsigned s = 1;
  unsigned m = 0;
  unsigned e = 0;
  std::uint64_t N = 1;
  std::uint64_t k = 0;
  std::uint64_t q = 0;
  std::size_t b = 1;
  std::string modulus;
  std::string config_path;
  std::string format;
  std::string output;
  std::string method = "auto";
  std::string mode = "full";
  std::string word;
  std::string suite = "all";
  bool ghw = false;
  bool beta_view = false;
  bool alpha_log = false;
  bool extended = false;
  bool simplex = false;
  bool exact = false;
  bool closed = false;
  std::uint64_t max_Q = 4096;
  std::uint64_t seed = 1;
  std::optional<double> tol;
  std::uint64_t enum_limit = kDefaultEnumerationLimit;
  std::uint64_t subspace_limit = kDefaultSubspaceLimit;
  std::uint64_t table_limit = kDefaultTableLimit;
};

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || text.empty()) throw UsageError("invalid " + what + ": '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) {
    const auto a = cur.find_first_not_of(" \t");
    const auto z = cur.find_last_not_of(" \t");
    out.push_back(a == std::string::npos ? "" : cur.substr(a, z - a + 1));
  }
  return out;
}

void env_override(const char* name, std::uint64_t& target) {
  if (const char* v = std::getenv(name)) target = parse_u64(v, name);
}

std::optional<Polynomial> parse_modulus(const std::string& text) {
  if (text.empty()) return std::nullopt;
  Polynomial f;
  for (const auto& t : split(text, ',')) f.push_back(static_cast<std::uint32_t>(parse_u64(t, "modulus coefficient")));
  return f;
}

void load_config(CLI::App* sub, Params& P) {
  if (P.config_path.empty()) return;
  std::ifstream in(P.config_path);
  if (!in) throw UsageError("cannot read config file " + P.config_path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("config file: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  auto take = [&](const char* key, auto& target) {
    if (!j.contains(key) || sub->count(std::string("--") + key) > 0) return;
    try {
      j.at(key).get_to(target);
    } catch (const Json::exception&) {
      throw UsageError(std::string("config field '") + key + "' has the wrong type");
    }
  };
  take("p", P.p);
  take("s", P.s);
  take("m", P.m);
  take("e", P.e);
  take("N", P.N);
  take("b", P.b);
  take("k", P.k);
  take("q", P.q);
  if (j.contains("modulus") && sub->count("--modulus") == 0) {
    std::string joined;
    try {
      for (const auto& c : j.at("modulus")) joined += (joined.empty() ? "" : ",") + std::to_string(c.get<std::uint64_t>());
    } catch (const Json::exception&) {
      throw UsageError("config field 'modulus' must be an array of coefficients");
    }
    P.modulus = joined;
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

FieldPtr big_field(const Params& P) {
  require(P.p >= 2, "--p is required");
  unsigned e = P.e;
  if (e == 0) {
    require(P.m >= 1 && P.s >= 1, "--m is required");
    e = P.s * P.m;
  }
  return make_field(P.p, e, parse_modulus(P.modulus), P.table_limit);
}

Code code_of(const Params& P) {
  require(P.m >= 1, "--m is required");
  require(P.N >= 1, "--N must be positive");
  return Code(big_field(P), ipow(P.p, P.s), P.N);
}

Json field_json(const Field& f) {
  return {{"p", f.characteristic()},
          {"e", f.degree()},
          {"modulus", f.modulus()},
          {"polynomial", poly::to_string(f.modulus())}};
}

Json code_config(const Code& c, const Params& P) {
  return {{"p", c.p()},       {"s", c.s()},         {"m", c.m()},
          {"N", c.N()},       {"q", c.q()},         {"Q", c.Q()},
          {"n", c.n()},       {"N1", c.N1()},       {"k0", c.k0()},
          {"field", field_json(*c.big())},
          {"enumeration_limit", P.enum_limit},
          {"subspace_limit", P.subspace_limit}};
}

Format format_of(const Params& P, Format fallback) {
  if (P.format.empty()) return fallback;
  try {
    return format_from_string(P.format);
  } catch (const std::exception&) {
    throw UsageError("--format must be json, csv or text");
  }
}

struct Output {
  std::string text;
  int code = kExitPass;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  std::size_t counts[4] = {};
  for (const auto& c : r.checks) {
    ++counts[static_cast<int>(c.status)];
    os << to_string(c.status) << ' ' << c.name << ": " << c.reference << '\n';
  }
  os << r.suite << ": " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " inconclusive, "
     << counts[3] << " skipped\n";
  return os.str();
}

std::string table_text(const Table& t) {
  std::ostringstream os;
  write_csv(os, t);
  return os.str();
}

Output emit_report(const std::string& command, const Params& P, const VerificationReport& r, const Table* table,
                   Format fallback) {
  Output o;
  o.code = r.failed() ? kExitCheckFailed : kExitPass;
  switch (format_of(P, fallback)) {
    case Format::json: o.text = dump(envelope(command, r.config, to_json(r))); break;
    case Format::text: o.text = report_text(r); break;
    case Format::csv:
      if (table) {
        o.text = table_text(*table);
      } else {
        Table t{{"check", "status", "reference"}, {}};
        for (const auto& c : r.checks) t.rows.push_back({c.name, to_string(c.status), c.reference});
        o.text = table_text(t);
      }
      break;
  }
  return o;
}

Output emit_result(const std::string& command, const Params& P, Json config, Json result, Format fallback,
                   const std::function<std::string()>& text = {}, const std::function<Table()>& csv = {}) {
  Output o;
  switch (format_of(P, fallback)) {
    case Format::json: o.text = dump(envelope(command, std::move(config), std::move(result))); break;
    case Format::text: o.text = text ? text() : dump(result); break;
    case Format::csv:
      if (!csv) throw UsageError(command + " has no CSV form");
      o.text = table_text(csv());
      break;
  }
  return o;
}

SuiteOptions suite_options(const Params& P) {
  SuiteOptions o;
  o.max_Q = P.max_Q;
  o.enumeration_limit = P.enum_limit;
  o.subspace_limit = P.subspace_limit;
  o.seed = P.seed;
  o.extended = P.extended;
  o.tol = P.tol;
  return o;
}

// Subcommands.

Output cmd_field(const Params& P) {
  auto f = big_field(P);
  Json r = field_json(*f);
  r["order"] = f->order();
  r["alpha"] = f->primitive();
  std::vector<unsigned> sub;
  for (unsigned d = 1; d <= f->degree(); ++d)
    if (f->degree() % d == 0) sub.push_back(d);
  r["subfield_degrees"] = sub;
  Json cfg = field_json(*f);
  cfg["table_limit"] = P.table_limit;
  return emit_result("field", P, cfg, r, Format::json,
                     [&] { return f->name() + " modulus " + poly::to_string(f->modulus()) + "\n"; });
}

Json period_value(const CyclotomicValue& v) {
  if (auto i = v.integer_value()) return *i;
  return v.to_string();
}

Output cmd_periods(const Params& P) {
  require(P.k >= 1, "--k is required");
  require(!(P.exact && P.closed), "--exact and --closed are exclusive");
  auto f = big_field(P);
  require((f->order() - 1) % P.k == 0, "--k must divide Q - 1");
  Json cfg = field_json(*f);
  cfg["s"] = P.s;
  cfg["m"] = P.m;
  cfg["k"] = P.k;
  cfg["view"] = P.closed ? "closed" : "exact";
  Json r;
  if (P.closed) {
    auto cp = gaussian_period_closed_form(P.p, P.s, P.m, P.k);
    Json eta = Json::array(), approx = Json::array();
    for (std::size_t i = 0; i < P.k; ++i) {
      if (cp.integers) eta.push_back((*cp.integers)[i]);
      else
        eta.push_back("(" + std::to_string(cp.a[i]) + " + " + std::to_string(cp.c[i]) + (cp.imaginary ? "*sqrt(-Q)" : "*sqrt(Q)") +
                      ")/" + std::to_string(cp.den));
      approx.push_back({cp.approx(i).real(), cp.approx(i).imag()});
    }
    r = {{"eta", eta}, {"integer", cp.integers.has_value()}, {"case", to_string(cp.tag)}, {"approx", approx}};
  } else {
    auto ps = period_system(*f, P.k);
    Json eta = Json::array(), approx = Json::array();
    bool integer = true;
    for (std::size_t i = 0; i < P.k; ++i) {
      eta.push_back(period_value(ps.periods[i]));
      integer = integer && ps.periods[i].is_integer();
      approx.push_back({ps.approx[i].real(), ps.approx[i].imag()});
    }
    std::string which = "none";
    try {
      which = to_string(gaussian_period_closed_form(P.p, P.s, P.m, P.k).tag);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoClosedFormCase) throw;
    }
    r = {{"eta", eta}, {"integer", integer}, {"case", which}, {"approx", approx}};
  }
  return emit_result("periods", P, cfg, r, Format::json);
}

Output cmd_scan(const Params& P) {
  Table t;
  auto rep = circulant_scan_suite(suite_options(P), &t);
  return emit_report("conjecture15-scan", P, rep, &t, Format::csv);
}

Output cmd_weight(const Params& P) {
  require(P.q >= 2, "--q is required");
  auto pp = as_prime_power(P.q);
  require(pp.has_value(), "--q must be a prime power");
  require(!P.word.empty(), "--word is required");
  require(P.b >= 1, "--b must be positive");
  auto f = make_field(static_cast<std::uint32_t>(pp->p), pp->k, std::nullopt, P.table_limit);
  Word x{f, {}};
  for (const auto& t : split(P.word, ',')) {
    if (P.alpha_log) {
      x.symbols.push_back(t == "-" ? 0 : f->exp(parse_u64(t, "discrete log")));
    } else if (t.find(':') != std::string::npos) {
      std::vector<std::uint32_t> cs;
      for (const auto& c : split(t, ':')) {
        const auto v = parse_u64(c, "coefficient");
        require(v < f->characteristic(), "coefficient " + c + " is not below p");
        cs.push_back(static_cast<std::uint32_t>(v));
      }
      require(cs.size() <= f->degree(), "coefficient vector '" + t + "' is too long");
      x.symbols.push_back(f->from_coefficients(cs));
    } else {
      const auto v = parse_u64(t, "symbol");
      require(v < P.q, "symbol " + t + " is not an element of F_q");
      x.symbols.push_back(static_cast<Elem>(v));
    }
  }
  require(!x.symbols.empty(), "--word is empty");
  const auto w = w_b(x, P.b);
  Json cfg = {{"q", P.q}, {"b", P.b}, {"n", x.size()}, {"field", field_json(*f)}, {"alpha_log", P.alpha_log}};
  return emit_result("weight", P, cfg, {{"weight", w}}, Format::text, [&] { return std::to_string(w) + "\n"; });
}

Json distribution_json(const WeightDistribution& d) {
  Json w = Json::object();
  for (auto [k, v] : d.entries) w[std::to_string(k)] = v;
  return {{"weights", w}, {"enumerator", d.enumerator()}, {"total", d.total()}};
}

Output cmd_enumerate(const Params& P) {
  auto code = code_of(P);
  require(P.b >= 1, "--b must be positive");
  WeightDistribution d;
  if (P.mode == "closed") {
    auto ps = period_system(*code.big(), code.N1());
    d = closed_form_distribution(code, P.b, ps, u_profile(code, P.b, P.enum_limit));
  } else if (P.mode == "full" || P.mode == "per_class") {
    EnumerationOptions eo{P.enum_limit, P.beta_view, P.seed};
    d = brute_distribution(code, P.b, P.mode == "full" ? DistributionMode::full : DistributionMode::per_class, eo);
  } else {
    throw UsageError("--mode must be full, per_class or closed");
  }
  auto cfg = code_config(code, P);
  cfg["b"] = P.b;
  cfg["mode"] = P.mode;
  cfg["beta_view"] = P.beta_view || P.mode != "full";
  return emit_result("enumerate", P, cfg, distribution_json(d), Format::json, [&] { return d.enumerator() + "\n"; });
}

Output cmd_uset(const Params& P) {
  auto code = code_of(P);
  require(P.b >= 1, "--b must be positive");
  auto up = u_profile(code, P.b, P.enum_limit);
  Json r = {{"b", up.b},           {"N1", up.N1},
            {"counts", up.counts}, {"image_counts", up.image_counts},
            {"degenerate", up.degenerate}, {"total", up.total()},
            {"uniform", up.uniform()}};
  auto cfg = code_config(code, P);
  cfg["b"] = P.b;
  return emit_result("uset", P, cfg, r, Format::json, {}, [&] {
    Table t{{"class", "tuples", "elements"}, {}};
    for (std::size_t i = 0; i < up.counts.size(); ++i)
      t.rows.push_back({std::to_string(i), std::to_string(up.counts[i]), std::to_string(up.image_counts[i])});
    return t;
  });
}

Output cmd_hierarchy(const Params& P) {
  auto code = code_of(P);
  HierarchyOptions ho;
  if (P.method == "brute") ho.method = HierarchyMethod::brute;
  else if (P.method == "closed") ho.method = HierarchyMethod::closed;
  else if (P.method == "auto") ho.method = HierarchyMethod::automatic;
  else throw UsageError("--method must be brute, closed or auto");
  ho.ghw = P.ghw;
  ho.enumeration_limit = P.enum_limit;
  ho.subspace_limit = P.subspace_limit;
  auto h = bsymbol_hierarchy(code, ho);
  auto opt = [](const auto& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x ? Json(*x) : Json(nullptr));
    return a;
  };
  Json r = {{"code", h.code},       {"n", h.n},
            {"k0", h.k0},           {"db", h.db},
            {"db_method", h.db_method}, {"ghw", opt(h.ghw)},
            {"ghw_method", h.ghw_method}, {"equal", opt(h.equal)},
            {"strict_shape", h.strict_shape()}, {"dominance", h.dominance()}};
  auto cfg = code_config(code, P);
  cfg["method"] = P.method;
  cfg["ghw"] = P.ghw;
  Output o = emit_result("hierarchy", P, cfg, r, Format::json, {}, [&] {
    Table t{{"b", "d_b", "d_b_method", "ghw", "ghw_method", "equal"}, {}};
    for (std::size_t i = 0; i < h.db.size(); ++i) {
      const bool has = i < h.ghw.size() && h.ghw[i];
      const bool eq = i < h.equal.size() && h.equal[i];
      t.rows.push_back({std::to_string(i + 1), std::to_string(h.db[i]), h.db_method[i],
                        has ? std::to_string(*h.ghw[i]) : "", i < h.ghw_method.size() ? h.ghw_method[i] : "",
                        eq ? (*h.equal[i] ? "true" : "false") : ""});
    }
    return t;
  });
  if (!h.strict_shape() || !h.dominance()) o.code = kExitCheckFailed;
  return o;
}

Output cmd_shorten(const Params& P) {
  require(P.b >= 1, "--b must be positive");
  ShortenedCode sh;
  Json cfg;
  if (P.simplex) {
    require(P.p >= 2 && P.m >= 1, "--p and --m are required");
    auto sx = build_simplex(P.p, P.s, P.m);
    sh = bsymbol_shorten(sx, sx.codeword_from_exponent(0), P.b, P.enum_limit);
    cfg = {{"code", sx.label()}, {"p", P.p}, {"s", P.s}, {"m", P.m}, {"q", sx.q()}, {"n", sx.n()}};
  } else {
    auto code = code_of(P);
    sh = bsymbol_shorten(code, minimal_bsymbol_codeword(code, P.b), P.b, P.enum_limit);
    cfg = code_config(code, P);
  }
  cfg["b"] = P.b;
  cfg["simplex"] = P.simplex;
  Json r = {{"parent", sh.parent},
            {"params", {sh.length, sh.dimension, sh.min_distance}},
            {"griesmer", sh.is_griesmer},
            {"T", sh.T.indices}};
  return emit_result("shorten", P, cfg, r, Format::json, [&] {
    return "[" + std::to_string(sh.length) + "," + std::to_string(sh.dimension) + "," +
           std::to_string(sh.min_distance) + "] griesmer=" + (sh.is_griesmer ? "true" : "false") + "\n";
  });
}

Output cmd_table1(const Params& P) {
  Table t;
  auto rep = u_table_suite(suite_options(P), &t);
  return emit_report("table1", P, rep, &t, Format::csv);
}

Output cmd_table2(const Params& P) {
  Table t;
  auto rep = shortened_simplex_suite(suite_options(P), &t);
  return emit_report("table2", P, rep, &t, Format::csv);
}

Output cmd_verify(const Params& P) {
  const auto o = suite_options(P);
  static const std::vector<std::pair<std::string, std::function<VerificationReport(const SuiteOptions&)>>> suites = {
      {"field", field_suite},
      {"sparse-word", sparse_word_suite},
      {"u-table", [](const SuiteOptions& s) { return u_table_suite(s); }},
      {"closed-form", closed_form_suite},
      {"case-formulas", case_formula_suite},
      {"ternary-pair", ternary_pair_suite},
      {"shortened-simplex", [](const SuiteOptions& s) { return shortened_simplex_suite(s); }},
      {"hierarchy", hierarchy_suite},
      {"periods", period_suite},
      {"circulant-scan", [](const SuiteOptions& s) { return circulant_scan_suite(s); }},
      {"u-properties", u_property_suite},
      {"all", verify_all},
  };
  for (const auto& [name, fn] : suites)
    if (name == P.suite) return emit_report("verify", P, fn(o), nullptr, Format::json);
  std::string names;
  for (const auto& [name, fn] : suites) names += (names.empty() ? "" : ", ") + name;
  throw UsageError("--suite must be one of " + names);
}

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::ClassConstancyViolated:
    case ErrorKind::NonRationalCombination:
    case ErrorKind::WeightOutOfRange:
      return kExitCheckFailed;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Params P;
  try {
    env_override("BSYM_ENUM_LIMIT", P.enum_limit);
    env_override("BSYM_SUBSPACE_LIMIT", P.subspace_limit);
    env_override("BSYM_TABLE_LIMIT", P.table_limit);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"b-symbol weights of irreducible cyclic codes", "bsym"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", P.format, "json, csv or text");
    sub->add_option("--output", P.output, "write to this file instead of stdout");
    sub->add_option("--enum-limit", P.enum_limit, "codeword enumeration limit");
    sub->add_option("--subspace-limit", P.subspace_limit, "subspace enumeration limit");
    sub->add_option("--seed", P.seed, "seed for sampled checks");
  };
  auto field_opts = [&](CLI::App* sub) {
    sub->add_option("--p", P.p, "characteristic");
    sub->add_option("--modulus", P.modulus, "coefficients c0,...,ce of the modulus of F_Q");
    sub->add_option("--config", P.config_path, "JSON file with {p, e, s, m, N, b, modulus}");
  };
  auto code_opts = [&](CLI::App* sub) {
    field_opts(sub);
    sub->add_option("--s", P.s, "F_q = F_{p^s}");
    sub->add_option("--m", P.m, "Q = q^m");
    sub->add_option("--N", P.N, "N | Q - 1");
  };
  auto suite_opts = [&](CLI::App* sub) {
    sub->add_option("--max-Q", P.max_Q, "largest field order of the grid");
    sub->add_flag("--extended", P.extended, "include the large ternary case");
  };

  std::vector<std::pair<CLI::App*, std::function<Output(const Params&)>>> commands;
  auto add = [&](const char* name, const char* help, std::function<Output(const Params&)> fn) {
    auto* sub = app.add_subcommand(name, help);
    common(sub);
    commands.emplace_back(sub, std::move(fn));
    return sub;
  };

  auto* field = add("field", "describe F_{p^e} and its modulus", cmd_field);
  field_opts(field);
  field->add_option("--e", P.e, "extension degree");

  auto* periods = add("periods", "Gaussian periods of order k", cmd_periods);
  code_opts(periods);
  periods->add_option("--k", P.k, "order k | Q - 1");
  periods->add_flag("--exact", P.exact, "exact periods (default)");
  periods->add_flag("--closed", P.closed, "closed forms only");

  auto* scan = add("conjecture15-scan", "circulant invertibility scan", cmd_scan);
  suite_opts(scan);
  scan->add_option("--tol", P.tol, "eigenvalue tolerance");

  auto* weight = add("weight", "b-symbol weight of a word", cmd_weight);
  weight->add_option("--word", P.word, "comma-separated symbols");
  weight->add_option("--q", P.q, "alphabet size");
  weight->add_option("--b", P.b, "symbol read length");
  weight->add_flag("--alpha-log", P.alpha_log, "symbols are discrete logs, '-' for zero");

  auto* enumerate = add("enumerate", "b-symbol weight distribution", cmd_enumerate);
  code_opts(enumerate);
  enumerate->add_option("--b", P.b, "symbol read length");
  enumerate->add_option("--mode", P.mode, "full, per_class or closed");
  enumerate->add_flag("--beta-view", P.beta_view, "count every beta in F_Q");

  auto* uset = add("uset", "class counts of the u-sums", cmd_uset);
  code_opts(uset);
  uset->add_option("--b", P.b, "symbol read length");

  auto* hierarchy = add("hierarchy", "b-symbol weight hierarchy", cmd_hierarchy);
  code_opts(hierarchy);
  hierarchy->add_flag("--ghw", P.ghw, "also compute generalized Hamming weights");
  hierarchy->add_option("--method", P.method, "brute, closed or auto");

  auto* shorten = add("shorten", "shorten at a minimal b-symbol support", cmd_shorten);
  code_opts(shorten);
  shorten->add_option("--b", P.b, "symbol read length");
  shorten->add_flag("--simplex", P.simplex, "use the projective Simplex code S(m, q)");

  auto* t1 = add("table1", "u-count table", cmd_table1);
  (void)t1;
  auto* t2 = add("table2", "shortened Simplex table", cmd_table2);
  (void)t2;

  auto* verify = add("verify", "invariant suites over the built-in grid", cmd_verify);
  suite_opts(verify);
  verify->add_option("--suite", P.suite, "one suite or all");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  for (auto& [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    try {
      load_config(sub, P);
      Output o = fn(P);
      if (P.output.empty()) {
        out << o.text;
      } else {
        std::ofstream f(P.output, std::ios::binary);
        f << o.text;
        if (!f) {
          err << "error: cannot write " << P.output << '\n';
          return kExitCheckFailed;
        }
      }
      return o.code;
    } catch (const UsageError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return exit_for(e.kind());
    }
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace bsym::cli
