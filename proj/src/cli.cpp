#include "ribbon/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "ribbon/enumerate.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/families.hpp"
#include "ribbon/gem_map.hpp"
#include "ribbon/stats.hpp"
#include "ribbon/theorems.hpp"

namespace ribbon::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tabular result rendered as CSV or as JSON with the same fields.
struct Table {
  std::vector<std::string> columns;
  std::vector<bool> numeric;  // emitted unquoted in JSON
  std::vector<std::vector<std::string>> rows;
};

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      default:
        out += c;
    }
  }
  return out + "\"";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void write_csv(const Table& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << "\n";
  }
}

void write_json(const Table& t, std::ostream& out) {
  out << "[";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out << (r ? ",\n " : "\n ") << "{";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      const std::string& v = t.rows[r][i];
      out << (i ? ", " : "") << json_string(t.columns[i]) << ": ";
      if (t.numeric[i] && !v.empty())
        out << v;
      else if (t.numeric[i])
        out << "null";
      else
        out << json_string(v);
    }
    out << "}";
  }
  out << (t.rows.empty() ? "]\n" : "\n]\n");
}

enum class Format { text, csv, json };

void emit(Format f, const std::string& text, const Table& t, std::ostream& out) {
  switch (f) {
    case Format::text:
      out << text;
      break;
    case Format::csv:
      write_csv(t, out);
      break;
    case Format::json:
      write_json(t, out);
      break;
  }
}

Table distribution_table(const IntPolynomial& p) {
  Table t{{"i", "count"}, {true, true}, {}};
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) t.rows.push_back({std::to_string(i), p.coeffs()[i].str()});
  return t;
}

// Graph source shared by several verbs: a ribbon file or a named family.
struct Source {
  std::string file;
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<CLI::Option*> n_opts;  // one per subcommand sharing this source

  void add_to(CLI::App& sub) {
    auto* f = sub.add_option("--file", file, "ribbon-graph file");
    auto* k = sub.add_option("--family", family, "named family");
    n_opts.push_back(sub.add_option("--n", n, "family parameter"));
    sub.add_option("--m", m, "second family parameter (join_with_bm)");
    f->excludes(k);
  }

  std::optional<FamilySpec> spec() const {
    if (family.empty()) return std::nullopt;
    const auto kind = family_from_string(family);
    if (!kind) throw UsageError("unknown family '" + family + "'");
    if (std::none_of(n_opts.begin(), n_opts.end(), [](const CLI::Option* o) { return o->count() > 0; }))
      throw UsageError("--family needs --n");
    return FamilySpec{*kind, n, m};
  }

  RibbonGraph load() const {
    if (!file.empty()) return read_ribbon_file(file);
    if (const auto s = spec()) return generate(*s);
    throw UsageError("give either --file or --family");
  }
};

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw UsageError("unknown format '" + s + "'");
}

EdgeSubset parse_subset(const std::string& text, std::size_t width) {
  std::vector<EdgeIndex> edges;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long k = 0;
    try {
      k = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw UsageError("bad edge index '" + item + "' in --subset");
    if (k >= width) throw PreconditionError("edge index " + item + " out of range (graph has " +
                                            std::to_string(width) + " edges)");
    edges.push_back(static_cast<EdgeIndex>(k));
  }
  return EdgeSubset::of(width, edges);
}

// ------------------------------------------------------------- verify suites

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

std::vector<Check> audit_checks(const std::vector<TheoremId>& ids, const AuditOptions& opts) {
  std::vector<Check> out;
  for (TheoremId id : ids) {
    const auto reports = audit(id, opts);
    std::size_t agree = 0;
    std::string first_failure;
    for (const auto& r : reports) {
      if (r.agree) {
        ++agree;
      } else if (first_failure.empty()) {
        first_failure = "; first failure trial " + std::to_string(r.trial) +
                        (r.witness ? " witness " + r.witness->to_string() : "") +
                        (r.note.empty() ? "" : " (" + r.note + ")");
      }
    }
    out.push_back({to_string(id), agree == reports.size(),
                   std::to_string(agree) + "/" + std::to_string(reports.size()) + " agree" + first_failure});
  }
  return out;
}

std::vector<Check> family_checks(const EnumerateOptions& eopts) {
  struct Range {
    Family kind;
    std::size_t lo, hi, m;
  };
  const std::vector<Range> ranges = {
      {Family::cycle, 1, 14, 0},       {Family::path, 1, 12, 0},         {Family::dipole, 1, 14, 0},
      {Family::necklace, 1, 7, 0},     {Family::fan_q, 1, 7, 0},         {Family::fan_f2m2, 0, 2, 0},
      {Family::wheel, 2, 5, 0},        {Family::wheel_bar, 2, 5, 0},     {Family::bouquet_twisted, 0, 8, 0},
      {Family::join_with_bm, 1, 5, 1}, {Family::join_with_bm, 2, 2, 3},
  };
  std::vector<Check> out;
  for (const auto& r : ranges) {
    for (std::size_t n = r.lo; n <= r.hi; ++n) {
      const FamilySpec spec{r.kind, n, r.m};
      const RibbonGraph g = generate(spec);
      const SurfaceStats s = surface_stats(g);
      Check c{to_string(r.kind) + " n=" + std::to_string(n) + (r.m ? " m=" + std::to_string(r.m) : ""), true, ""};
      if (r.kind != Family::bouquet_twisted && r.kind != Family::join_with_bm) {
        const IntPolynomial brute = pdg_polynomial(g, GenusMethod::formula, eopts);
        const IntPolynomial closed = closed_form_pdg(spec);
        c.pass = brute == closed && s.orientable && s.genus == 0;
        c.detail = "brute " + brute.to_string() + (c.pass ? "" : " vs closed " + closed.to_string());
        try {
          const IntPolynomial rec = recurrence_pdg(spec);
          if (rec != brute) {
            c.pass = false;
            c.detail += " vs recurrence " + rec.to_string();
          }
        } catch (const PreconditionError&) {
          // no recurrence evaluator for this family
        }
      } else {
        const IntPolynomial brute = euler_polynomial(g, eopts);
        const IntPolynomial closed = closed_form_euler(spec);
        c.pass = brute == closed;
        c.detail = "euler " + brute.to_string() + (c.pass ? "" : " vs closed " + closed.to_string());
      }
      out.push_back(std::move(c));
    }
  }
  bool fans = true;
  for (std::size_t n = 1; n <= 30; ++n) fans = fans && fan_recurrence(n).back() == fan_closed_form(n);
  out.push_back({"fan recurrence = explicit sum, n<=30", fans, ""});
  return out;
}

// Frozen from the first run of the suite at n = 60 (fan 0.0741, necklace 0.0513).
constexpr double ks_threshold = 0.075;

std::vector<Check> stats_checks() {
  std::vector<Check> out;
  const auto neck = asymptotic_suite(SuiteFamily::necklace, 60);
  bool exact = true;
  for (const auto& r : neck)
    exact = exact && r.mean == necklace_mean_formula(r.n) && r.variance == necklace_variance_formula(r.n);
  out.push_back({"necklace mean/variance exact, n<=60", exact, ""});

  const auto fan = asymptotic_suite(SuiteFamily::fan, 60);
  const SuiteRow& last = fan.back();
  const double mean_ratio = static_cast<double>(last.mean) / (2.0 * 60 / 3);
  const double var_ratio = static_cast<double>(last.variance) / (4.0 * 60);
  out.push_back({"fan mean/(2m/3) within 5% at m=60", std::abs(mean_ratio - 1) <= 0.05,
                 "ratio " + format_decimal(mean_ratio)});
  out.push_back({"fan variance/(4m) within 5% at m=60", std::abs(var_ratio - 1) <= 0.05,
                 "ratio " + format_decimal(var_ratio)});
  for (const auto* rows : {&fan, &neck}) {
    const std::string name = rows == &fan ? "fan" : "necklace";
    bool monotone = true;
    double prev = 2;
    for (std::size_t n = 10; n <= 60; n += 10) {
      const double ks = *(*rows)[n - 1].ks;
      monotone = monotone && ks <= prev;
      prev = ks;
    }
    out.push_back({name + " KS non-increasing over n=10..60", monotone, ""});
    out.push_back({name + " KS below " + format_decimal(ks_threshold) + " at n=60", prev < ks_threshold,
                   "ks " + format_decimal(prev)});
  }
  return out;
}

int report_checks(const std::vector<Check>& checks, Format fmt, std::ostream& out) {
  std::string text;
  Table t{{"check", "pass", "detail"}, {false, true, false}, {}};
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.pass;
    text += std::string(c.pass ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : ": " + c.detail) + "\n";
    t.rows.push_back({c.name, c.pass ? "true" : "false", c.detail});
  }
  emit(fmt, text, t, out);
  return all ? ExitCode::ok : ExitCode::verification_error;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partial-dual genus polynomials of ribbon graphs", "ribbon"};
  app.require_subcommand(1);
  unsigned threads = 1;
  std::string format = "text";
  app.add_option("--threads", threads, "worker threads for subset enumeration")->capture_default_str();

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, csv or json")->capture_default_str();
  };

  // pdg / euler
  Source poly_src;
  std::string method = "brute";
  bool override_cap = false;
  auto* pdg = app.add_subcommand("pdg", "partial-dual genus polynomial");
  auto* euler = app.add_subcommand("euler", "partial-dual Euler-genus polynomial");
  for (auto* sub : {pdg, euler}) {
    poly_src.add_to(*sub);
    sub->add_option("--method", method, "brute, closed or recurrence")->capture_default_str();
    sub->add_flag("--override-cap", override_cap, "allow brute force above 30 edges");
    sub->add_option("--threads", threads, "worker threads");
    add_format(sub);
  }

  // dual
  std::string dual_file, dual_subset, dual_out;
  auto* dual = app.add_subcommand("dual", "write the partial dual G^A");
  dual->add_option("--file", dual_file, "ribbon-graph file")->required();
  dual->add_option("--subset", dual_subset, "comma-separated edge indices")->required();
  dual->add_option("--out", dual_out, "output file (default: stdout)");

  // maxgenus
  Source max_src;
  std::string max_method = "brute";
  auto* maxgenus = app.add_subcommand("maxgenus", "maximum genus over all partial duals");
  max_src.add_to(*maxgenus);
  maxgenus->add_option("--method", max_method, "brute or xi")->capture_default_str();
  maxgenus->add_option("--threads", threads, "worker threads");
  add_format(maxgenus);

  // spectrum
  Source spec_src;
  bool use_euler = false;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "exponents with nonzero coefficients");
  spec_src.add_to(*spectrum_cmd);
  spectrum_cmd->add_flag("--euler", use_euler, "use the Euler-genus polynomial");
  spectrum_cmd->add_option("--threads", threads, "worker threads");
  add_format(spectrum_cmd);

  // family
  Source fam_src;
  std::string fam_out;
  auto* family = app.add_subcommand("family", "emit a named family as a ribbon-graph file");
  fam_src.add_to(*family);
  family->add_option("--out", fam_out, "output file (default: stdout)");

  // verify
  std::string suite;
  AuditOptions audit_opts;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "props, theorems, families or stats")->required();
  verify->add_option("--seed", audit_opts.seed, "random seed")->capture_default_str();
  verify->add_option("--trials", audit_opts.trials, "trials per audit")->capture_default_str();
  verify->add_option("--max-edges", audit_opts.max_edges, "largest random graph")->capture_default_str();
  verify->add_option("--threads", threads, "worker threads");
  add_format(verify);

  // stats
  std::string stats_family;
  std::size_t n_max = 0;
  std::string stats_out = "csv";
  auto* stats = app.add_subcommand("stats", "exact moments and KS distance for fans or necklaces");
  stats->add_option("--family", stats_family, "fan or necklace")->required();
  stats->add_option("--n-max", n_max, "largest n")->required();
  stats->add_option("--out", stats_out, "csv, json or text")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return ExitCode::usage_error;
  }

  try {
    const Format fmt = parse_format(format);
    EnumerateOptions eopts;
    eopts.threads = threads;
    eopts.override_cap = override_cap;
    audit_opts.threads = threads;

    if (pdg->parsed() || euler->parsed()) {
      const bool is_euler = euler->parsed();
      IntPolynomial p;
      if (method == "brute") {
        const RibbonGraph g = poly_src.load();
        if (is_euler)
          p = euler_polynomial(g, eopts);
        else
          p = pdg_polynomial(g, g.connected() ? GenusMethod::formula : GenusMethod::construct, eopts);
      } else if (method == "closed" || method == "recurrence") {
        const auto spec = poly_src.spec();
        if (!spec) throw UsageError("--method " + method + " needs --family");
        if (method == "closed")
          p = is_euler ? closed_form_euler(*spec) : closed_form_pdg(*spec);
        else
          p = is_euler ? recurrence_pdg(*spec).squared_variable() : recurrence_pdg(*spec);
      } else {
        throw UsageError("unknown method '" + method + "'");
      }
      emit(fmt, p.to_string() + "\n", distribution_table(p), out);
      return ExitCode::ok;
    }

    if (dual->parsed()) {
      const RibbonGraph g = read_ribbon_file(dual_file);
      const RibbonGraph d = partial_dual(g, parse_subset(dual_subset, g.edge_count()));
      if (dual_out.empty())
        out << encode(d);
      else
        write_ribbon_file(dual_out, d);
      return ExitCode::ok;
    }

    if (maxgenus->parsed()) {
      MaxGenusMethod m;
      if (max_method == "brute")
        m = MaxGenusMethod::brute;
      else if (max_method == "xi")
        m = MaxGenusMethod::xi;
      else
        throw UsageError("unknown method '" + max_method + "'");
      const long value = max_pd_genus(max_src.load(), m, eopts);
      emit(fmt, std::to_string(value) + "\n", Table{{"max_genus"}, {true}, {{std::to_string(value)}}}, out);
      return ExitCode::ok;
    }

    if (spectrum_cmd->parsed()) {
      const RibbonGraph g = spec_src.load();
      const IntPolynomial p = use_euler ? euler_polynomial(g, eopts) : pdg_polynomial(g, GenusMethod::construct, eopts);
      const Spectrum s = spectrum(p);
      std::string exps;
      for (std::size_t i = 0; i < s.exponents.size(); ++i) exps += (i ? "," : "") + std::to_string(s.exponents[i]);
      emit(fmt, s.to_string() + "\n",
           Table{{"exponents", "interpolating"}, {false, true}, {{exps, s.interpolating ? "true" : "false"}}}, out);
      return ExitCode::ok;
    }

    if (family->parsed()) {
      if (!fam_src.file.empty()) throw UsageError("family takes --family, not --file");
      const RibbonGraph g = fam_src.load();
      if (fam_out.empty())
        out << encode(g);
      else
        write_ribbon_file(fam_out, g);
      return ExitCode::ok;
    }

    if (verify->parsed()) {
      std::vector<Check> checks;
      if (suite == "props") {
        checks = audit_checks({TheoremId::prop12, TheoremId::eq11, TheoremId::lemma, TheoremId::maxgenus,
                               TheoremId::prop23, TheoremId::half_sum},
                              audit_opts);
      } else if (suite == "theorems") {
        checks = audit_checks(
            {TheoremId::deletion, TheoremId::parallel, TheoremId::subdivision, TheoremId::ringlike}, audit_opts);
      } else if (suite == "families") {
        checks = family_checks(eopts);
      } else if (suite == "stats") {
        checks = stats_checks();
      } else {
        throw UsageError("unknown suite '" + suite + "'");
      }
      return report_checks(checks, fmt, out);
    }

    if (stats->parsed()) {
      SuiteFamily fam;
      if (stats_family == "fan")
        fam = SuiteFamily::fan;
      else if (stats_family == "necklace")
        fam = SuiteFamily::necklace;
      else
        throw UsageError("stats needs --family fan or necklace");
      if (n_max == 0) throw UsageError("--n-max must be positive");
      const Format sfmt = parse_format(stats_out);
      const auto rows = asymptotic_suite(fam, n_max);
      Table t{{"n", "mean_num", "mean_den", "var_num", "var_den", "ks"}, {true, true, true, true, true, true}, {}};
      for (const auto& r : rows)
        t.rows.push_back({std::to_string(r.n), numerator(r.mean).str(), denominator(r.mean).str(),
                          numerator(r.variance).str(), denominator(r.variance).str(),
                          r.ks ? format_decimal(*r.ks) : ""});
      if (sfmt == Format::json)
        write_json(t, out);
      else
        out << suite_csv(rows);
      return ExitCode::ok;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return ExitCode::usage_error;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return ExitCode::parse_error;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return ExitCode::precondition_error;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return ExitCode::verification_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::parse_error;
  }
  return ExitCode::usage_error;
}

}  // namespace ribbon::cli
