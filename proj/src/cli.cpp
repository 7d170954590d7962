#include "hlpoly/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <locale>
#include <ostream>
#include <sstream>

#include "hlpoly/render.hpp"
#include "hlpoly/sequences.hpp"
#include "hlpoly/series.hpp"
#include "hlpoly/stirling.hpp"

namespace hlpoly::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kIdentityChoices{
    "thm1", "thm2", "thm3",    "thm4",    "thm5",   "thm6",  "eq9",   "eq10",  "eq11",           "eq12",
    "thm8", "thm8-c1", "thm8-c2", "thm8-b", "thm9", "thm10", "thm11", "stirling-ortho", "all"};

std::string header_line() { return std::string("# hlpoly ") + kVersion + "\n"; }

Params params_from(const RunConfig& cfg) {
  return Params(cfg.k, Rational::parse(cfg.alpha), Rational::parse(cfg.a));
}

std::pair<Rational, Rational> parse_point(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("grid point '" + text + "' must be written alpha,a");
  return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
}

void require_nonnegative(int value, const char* flag) {
  if (value < 0) throw UsageError(std::string(flag) + " must be given and nonnegative");
}

// Flat JSON config: each key names a long flag of the active subcommand.
void apply_config(CLI::App& sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("config file is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw UsageError("config file must hold a flat JSON object");

  auto scalar = [](const nlohmann::json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw UsageError("config values must be strings, integers or booleans");
  };

  for (const auto& [key, value] : doc.items()) {
    if (key == "config") throw UsageError("config files cannot name another config file");
    CLI::Option* opt = sub.get_option_no_throw("--" + key);
    if (opt == nullptr) throw UsageError("unknown config key '" + key + "' for command " + sub.get_name());
    if (opt->count() > 0) continue;  // command line wins
    std::vector<std::string> results;
    if (value.is_array()) {
      for (const auto& v : value) results.push_back(scalar(v));
    } else {
      results.push_back(scalar(value));
    }
    opt->add_result(results);
    opt->run_callback();
  }
}

void emit_family_table(const RunConfig& cfg, std::ostream& out) {
  const Family family = parse_family(cfg.family);
  require_nonnegative(cfg.n_max, "--n-max");
  const Params p = params_from(cfg);
  p.require_regular(cfg.n_max);

  const bool want_formula = cfg.method != "oracle";
  const bool want_oracle = cfg.method != "formula";
  std::vector<Rational> formula;
  std::vector<Rational> oracle;
  if (want_formula) formula = explicit_sequence(family, cfg.n_max, p);
  if (want_oracle) oracle = oracle_sequence(family, cfg.n_max, p);

  if (cfg.format == "json") {
    nlohmann::json values = nlohmann::json::array();
    for (int n = 0; n <= cfg.n_max; ++n) {
      auto i = static_cast<std::size_t>(n);
      nlohmann::json row{{"n", n}};
      if (cfg.method == "both") {
        row["formula"] = to_json(formula[i]);
        row["oracle"] = to_json(oracle[i]);
        row["disagreement"] = formula[i] != oracle[i];
      } else {
        row["value"] = to_json(want_formula ? formula[i] : oracle[i]);
      }
      values.push_back(std::move(row));
    }
    out << dump({{"family", cfg.family},
                 {"k", cfg.k},
                 {"alpha", to_json(p.alpha())},
                 {"a", to_json(p.a())},
                 {"n_max", cfg.n_max},
                 {"method", cfg.method},
                 {"values", std::move(values)}});
    return;
  }

  if (cfg.method == "both") {
    out << "n,formula,oracle,disagreement\n";
  } else {
    out << "n,value\n";
  }
  for (int n = 0; n <= cfg.n_max; ++n) {
    auto i = static_cast<std::size_t>(n);
    if (cfg.method == "both") {
      out << n << "," << formula[i] << "," << oracle[i] << "," << (formula[i] == oracle[i] ? "" : "x") << "\n";
    } else {
      out << n << "," << (want_formula ? formula[i] : oracle[i]) << "\n";
    }
  }
}

void emit_stirling_table(const RunConfig& cfg, std::ostream& out) {
  int max_n = cfg.max_n >= 0 ? cfg.max_n : cfg.n_max;
  require_nonnegative(max_n, "--max-n");
  const StirlingTable table(cfg.stirling == 1 ? StirlingKind::first_unsigned : StirlingKind::second, max_n);
  if (cfg.format == "json") {
    out << dump(to_json(table));
    return;
  }
  out << "n";
  for (int m = 0; m <= max_n; ++m) out << "," << m;
  out << "\n";
  for (int n = 0; n <= max_n; ++n) {
    out << n;
    for (int m = 0; m <= max_n; ++m) out << "," << table.entry(n, m).get_str();
    out << "\n";
  }
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  if (cfg.family.empty() == (cfg.stirling == 0)) {
    throw UsageError("table needs exactly one of --family or --stirling");
  }
  if (cfg.stirling != 0) {
    emit_stirling_table(cfg, out);
  } else {
    emit_family_table(cfg, out);
  }
  return kExitHolds;
}

int cmd_series(const RunConfig& cfg, std::ostream& out) {
  require_nonnegative(cfg.order, "--order");
  PowerSeries f = kernel(parse_kernel(cfg.kernel), cfg.order);
  if (cfg.apply != "none") {
    const Params p = params_from(cfg);
    f = cfg.apply == "phi" ? phi_apply(f, p.k(), p.alpha(), p.a()) : phif_apply(f, p.k(), p.alpha(), p.a());
  }
  std::vector<Rational> values = cfg.egf ? egf_coeffs(f) : f.coeffs();

  if (cfg.format == "json") {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& v : values) coeffs.push_back(to_json(v));
    nlohmann::json j{{"kernel", cfg.kernel}, {"order", cfg.order}, {"egf", cfg.egf}, {"apply", cfg.apply},
                     {"coefficients", std::move(coeffs)}};
    if (cfg.apply != "none") {
      j["k"] = cfg.k;
      j["alpha"] = to_json(Rational::parse(cfg.alpha));
      j["a"] = to_json(Rational::parse(cfg.a));
    }
    out << dump(j);
    return kExitHolds;
  }
  if (cfg.format == "csv") {
    out << "n," << (cfg.egf ? "egf" : "coefficient") << "\n";
    for (std::size_t n = 0; n < values.size(); ++n) out << n << "," << values[n] << "\n";
    return kExitHolds;
  }
  out << header_line();
  out << "# " << cfg.kernel;
  if (cfg.apply != "none") out << " under " << cfg.apply << " k=" << cfg.k << " alpha=" << cfg.alpha << " a=" << cfg.a;
  out << ", order " << cfg.order << (cfg.egf ? ", n! c_n" : ", c_n") << "\n";
  for (std::size_t n = 0; n < values.size(); ++n) out << n << "  " << values[n] << "\n";
  return kExitHolds;
}

void emit_reports(const std::vector<AuditReport>& reports, const std::string& format, std::ostream& out) {
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out << dump({{"reports", std::move(arr)}});
    return;
  }
  out << header_line();
  for (const auto& r : reports) out << render_text(r);
}

void emit_congruence_csv(const AuditReport& report, std::ostream& out) {
  out << "p,n,status,lhs,rhs,hypothesis,first_violation_m,reason\n";
  for (const auto& row : report.rows) {
    const auto& v = row.verdict;
    out << row.point.prime.value_or(0) << "," << row.point.n << "," << to_string(v.status) << ",";
    if (v.witness) {
      out << std::get<ResidueModP>(v.witness->lhs).value() << "," << std::get<ResidueModP>(v.witness->rhs).value();
    } else {
      out << ",";
    }
    out << "," << (v.hypothesis && v.hypothesis->satisfied ? "ok" : "violated") << ",";
    if (v.hypothesis && v.hypothesis->first_violation) out << *v.hypothesis->first_violation;
    out << "," << (v.reason ? std::string(to_string(*v.reason)) : "") << "\n";
  }
}

Grid grid_from(const RunConfig& cfg) {
  Grid grid = default_grid();
  if (cfg.n_max >= 0) grid.n_max = cfg.n_max;
  if (!cfg.ks.empty()) grid.ks = cfg.ks;
  if (!cfg.points.empty()) {
    grid.params.clear();
    for (const auto& pt : cfg.points) {
      auto [alpha, a] = parse_point(pt);
      if (alpha.is_zero()) throw UsageError("alpha must be nonzero in grid point '" + pt + "'");
      grid.params.emplace_back(alpha, a);
    }
  }
  if (!cfg.primes.empty()) grid.primes = cfg.primes;
  for (auto p : grid.primes) require_prime(p);
  grid.congruence_n_max = cfg.cong_n_max;
  grid.stirling_n_max = cfg.stirling_n_max;
  if (grid.congruence_n_max < 1) throw UsageError("--cong-n-max must be at least 1");
  if (grid.stirling_n_max < 0) throw UsageError("--stirling-n-max must be nonnegative");
  return grid;
}

int cmd_audit(const RunConfig& cfg, std::ostream& out) {
  const auto ids = parse_identity_selector(cfg.identity);
  const Grid grid = grid_from(cfg);
  std::optional<Prefactor> variant;
  if (!cfg.variant.empty()) {
    if (ids.size() != 1 || (ids[0] != IdentityId::eq9 && ids[0] != IdentityId::eq10 &&
                            ids[0] != IdentityId::eq11 && ids[0] != IdentityId::eq12)) {
      throw UsageError("--variant applies to a single identity among eq9, eq10, eq11, eq12");
    }
    variant = Prefactor::parse(cfg.variant);
  }
  std::vector<AuditReport> reports;
  for (auto id : ids) reports.push_back(run_audit(id, grid, variant));
  emit_reports(reports, cfg.format, out);
  return exit_code_for(reports);
}

int cmd_congruence_scan(const RunConfig& cfg, std::ostream& out) {
  const Family family = parse_family(cfg.family);
  const Rational alpha = Rational::parse(cfg.alpha);
  const Rational a = Rational::parse(cfg.a);
  std::vector<std::uint32_t> primes = cfg.primes.empty() ? default_grid().primes : cfg.primes;
  const int n_top = cfg.n_max >= 0 ? cfg.n_max : 3;
  for (auto p : primes) require_congruence_preconditions(std::max(n_top, 1), cfg.k, alpha, p);
  if (n_top < 1) throw UsageError("--n-max must be at least 1");

  IdentityId id = family == Family::poly_bernoulli      ? IdentityId::thm8_b
                  : family == Family::poly_cauchy_first ? IdentityId::thm8_c1
                                                        : IdentityId::thm8_c2;
  AuditReport report{id, std::nullopt, {}};
  for (auto p : primes) {
    for (int n = 1; n <= n_top; ++n) {
      GridPoint pt;
      pt.k = cfg.k;
      pt.alpha = alpha;
      pt.a = a;
      pt.prime = p;
      pt.n = n;
      report.rows.push_back({pt, audit_congruence(family, n, cfg.k, alpha, a, p)});
    }
  }
  report.canonicalize();
  if (cfg.format == "csv") {
    emit_congruence_csv(report, out);
  } else {
    emit_reports({report}, cfg.format, out);
  }
  return exit_code_for({report});
}

void add_param_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--k", cfg.k, "Zeta exponent k (any integer)");
  sub->add_option("--alpha", cfg.alpha, "Scale alpha as p/q or integer (nonzero)");
  sub->add_option("--a", cfg.a, "Shift a as p/q or integer");
}

}  // namespace

int exit_code_for(const std::vector<AuditReport>& reports) {
  bool any_undefined = false;
  for (const auto& r : reports) {
    auto s = r.summary();
    if (s.fails > 0) return kExitFails;
    if (s.undefined > 0) any_undefined = true;
  }
  return any_undefined ? kExitUndefined : kExitHolds;
}

std::vector<IdentityId> parse_identity_selector(const std::string& name) {
  using I = IdentityId;
  if (name == "all") {
    return {I::thm1, I::thm2,    I::thm3,    I::thm4,   I::thm5, I::thm6,  I::eq9,   I::eq10,          I::eq11,
            I::eq12, I::thm8_c1, I::thm8_c2, I::thm8_b, I::thm9, I::thm10, I::thm11, I::stirling_ortho};
  }
  if (name == "thm8") return {I::thm8_c1, I::thm8_c2, I::thm8_b};
  static const std::vector<std::pair<std::string, IdentityId>> single{
      {"thm1", I::thm1},       {"thm2", I::thm2},       {"thm3", I::thm3},      {"thm4", I::thm4},
      {"thm5", I::thm5},       {"thm6", I::thm6},       {"eq9", I::eq9},        {"eq10", I::eq10},
      {"eq11", I::eq11},       {"eq12", I::eq12},       {"thm8-c1", I::thm8_c1}, {"thm8-c2", I::thm8_c2},
      {"thm8-b", I::thm8_b},   {"thm9", I::thm9},       {"thm10", I::thm10},    {"thm11", I::thm11},
      {"stirling-ortho", I::stirling_ortho},
  };
  for (const auto& [s, id] : single) {
    if (s == name) return {id};
  }
  throw ParseError("unknown identity '" + name + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  out.imbue(std::locale::classic());
  err.imbue(std::locale::classic());

  RunConfig cfg;
  CLI::App app{"Exact Hurwitz-Lerch poly-Bernoulli and poly-Cauchy numbers with identity audits", "hlpoly"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  const std::vector<std::string> families{"bernoulli", "cauchy1", "cauchy2"};

  auto* table = app.add_subcommand("table", "Sequence values or a Stirling triangle");
  table->add_option("--family", cfg.family, "Sequence family")->check(CLI::IsMember(families));
  table->add_option("--stirling", cfg.stirling, "Stirling kind (1 = unsigned first kind, 2 = second kind)")
      ->check(CLI::IsMember({1, 2}));
  add_param_flags(table, cfg);
  table->add_option("--n-max", cfg.n_max, "Largest index");
  table->add_option("--max-n", cfg.max_n, "Largest Stirling row");
  table->add_option("--method", cfg.method, "formula, oracle or both")
      ->check(CLI::IsMember({"formula", "oracle", "both"}));
  table->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* series = app.add_subcommand("series", "Taylor coefficients of a composition kernel");
  series->add_option("--kernel", cfg.kernel, "Kernel name")
      ->required()
      ->check(CLI::IsMember({"one_minus_exp_neg", "log1p", "neg_log1p", "exp_pos", "exp_neg",
                             "geom_1_over_1_plus_t"}));
  series->add_option("--order", cfg.order, "Truncation order N")->required();
  series->add_flag("--egf", cfg.egf, "Print n! c_n instead of c_n");
  series->add_option("--apply", cfg.apply, "Feed the kernel to phi or phif")
      ->check(CLI::IsMember({"none", "phi", "phif"}));
  add_param_flags(series, cfg);
  series->add_option("--format", cfg.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));

  auto* audit = app.add_subcommand("audit", "Check identities over a parameter grid");
  audit->add_option("--identity", cfg.identity, "Identity to check")->check(CLI::IsMember(kIdentityChoices));
  audit->add_option("--n-max", cfg.n_max, "Largest index n (default 12)");
  audit->add_option("--k", cfg.ks, "Comma-separated k values (default -2..3)")->delimiter(',');
  audit->add_option("--point", cfg.points, "Grid point alpha,a (repeatable)");
  audit->add_option("--primes", cfg.primes, "Comma-separated primes for congruences (default 3,5,7,11)")
      ->delimiter(',');
  audit->add_option("--cong-n-max", cfg.cong_n_max, "Congruence multiples n = 1..N (default 3)");
  audit->add_option("--stirling-n-max", cfg.stirling_n_max, "Stirling orthogonality range (default 20)");
  audit->add_option("--variant", cfg.variant, "Alternative prefactor for eq9..eq12, e.g. \"(-1)^(m+n)*1/m!\"");
  audit->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* scan = app.add_subcommand("congruence-scan", "Residues of s_{np} and s_0 for one parameter point");
  scan->add_option("--family", cfg.family, "Sequence family")->required()->check(CLI::IsMember(families));
  add_param_flags(scan, cfg);
  scan->add_option("--primes", cfg.primes, "Comma-separated primes (default 3,5,7,11)")->delimiter(',');
  scan->add_option("--n-max", cfg.n_max, "Multiples n = 1..N (default 3)");
  scan->add_option("--format", cfg.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));

  for (auto* sub : {table, series, audit, scan}) {
    sub->add_option("--config", cfg.config_path, "Flat JSON file of flag values; flags take precedence");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, out, err);
    return kExitUsage;
  }

  CLI::App* active = app.get_subcommands().front();
  cfg.command = active->get_name();

  try {
    if (!cfg.config_path.empty()) apply_config(*active, cfg.config_path);
    if (cfg.format.empty()) cfg.format = cfg.command == "table" ? "csv" : "text";

    std::ostringstream buffer;
    buffer.imbue(std::locale::classic());
    int code = kExitHolds;
    if (cfg.command == "table") {
      code = cmd_table(cfg, buffer);
    } else if (cfg.command == "series") {
      code = cmd_series(cfg, buffer);
    } else if (cfg.command == "audit") {
      code = cmd_audit(cfg, buffer);
    } else {
      code = cmd_congruence_scan(cfg, buffer);
    }
    out << buffer.str();
    return code;
  } catch (const SingularParameter& e) {
    err << "hlpoly: singular parameter: " << e.what() << "\n";
  } catch (const CLI::ParseError& e) {
    err << "hlpoly: invalid config value: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "hlpoly: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace hlpoly::cli
