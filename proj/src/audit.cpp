#include "hlpoly/audit.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "hlpoly/stirling.hpp"

namespace hlpoly {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

constexpr std::array<std::pair<IdentityId, std::string_view>, 17> kIdentityNames{{
    {IdentityId::thm1, "THM1"},
    {IdentityId::thm2, "THM2"},
    {IdentityId::thm3, "THM3"},
    {IdentityId::thm4, "THM4"},
    {IdentityId::thm5, "THM5"},
    {IdentityId::thm6, "THM6"},
    {IdentityId::eq9, "EQ9"},
    {IdentityId::eq10, "EQ10"},
    {IdentityId::eq11, "EQ11"},
    {IdentityId::eq12, "EQ12"},
    {IdentityId::thm8_c1, "THM8_C1"},
    {IdentityId::thm8_c2, "THM8_C2"},
    {IdentityId::thm8_b, "THM8_B"},
    {IdentityId::thm9, "THM9"},
    {IdentityId::thm10, "THM10"},
    {IdentityId::thm11, "THM11"},
    {IdentityId::stirling_ortho, "STIRLING_ORTHO"},
}};

bool is_duality(IdentityId id) {
  return id == IdentityId::eq9 || id == IdentityId::eq10 || id == IdentityId::eq11 || id == IdentityId::eq12;
}

GridPoint point_of(const Params& p, int n) {
  GridPoint g;
  g.k = p.k();
  g.alpha = p.alpha();
  g.a = p.a();
  g.n = n;
  return g;
}

// Number of leading indices 0..n_max whose evaluation stays clear of a
// vanishing shift, given that index n touches shifts up to n + reach.
int regular_prefix(const Params& p, int n_max, int reach) {
  auto s = p.first_singular_index();
  if (!s) return n_max;
  return std::min(n_max, *s - 1 - reach);
}

Verdict singular_verdict(const Params& p) {
  int m = p.first_singular_index().value_or(-1);
  return Verdict::undefined(Reason::singular_parameter, "alpha*m + a vanishes at m = " + std::to_string(m));
}

Verdict orthogonality_at(Family f, int n, const Params& p, const std::vector<Rational>& seq) {
  Rational lhs;
  Rational rhs;
  switch (f) {
    case Family::poly_bernoulli:
      for (int m = 0; m <= n; ++m) lhs += Rational(stirling1_unsigned(n, m)) * seq[idx(m)];
      rhs = Rational(factorial(static_cast<unsigned long>(n))) * p.weight(n);
      break;
    case Family::poly_cauchy_first:
      for (int m = 0; m <= n; ++m) lhs += Rational(stirling2(n, m)) * seq[idx(m)];
      rhs = p.weight(n);
      break;
    case Family::poly_cauchy_second:
      for (int m = 0; m <= n; ++m) lhs += Rational(stirling2(n, m)) * seq[idx(m)];
      rhs = Rational(sign_power(n)) * p.weight(n);
      break;
  }
  return Verdict::compare(lhs, rhs);
}

// target: the value the identity claims to recover; source: the sequence the
// double sum runs over.
Verdict duality_at(IdentityId id, int n, const Prefactor& pre, const std::vector<Rational>& target,
                   const std::vector<Rational>& source) {
  const bool second_kind = id == IdentityId::eq9 || id == IdentityId::eq10;
  auto s = [second_kind](int i, int j) { return second_kind ? stirling2(i, j) : stirling1_unsigned(i, j); };
  Rational rhs;
  for (int m = 0; m <= n; ++m) {
    BigInt outer = s(n, m);
    if (outer == 0) continue;
    Rational inner;
    for (int l = 0; l <= n; ++l) {
      BigInt st = s(m, l);
      if (st == 0) continue;
      inner += Rational(st) * source[idx(l)];
    }
    rhs += pre.eval(n, m) * Rational(outer) * inner;
  }
  return Verdict::compare(target[idx(n)], rhs);
}

// (target family, source family) of a duality identity.
std::pair<Family, Family> duality_families(IdentityId id) {
  switch (id) {
    case IdentityId::eq9:
      return {Family::poly_bernoulli, Family::poly_cauchy_first};
    case IdentityId::eq10:
      return {Family::poly_bernoulli, Family::poly_cauchy_second};
    case IdentityId::eq11:
      return {Family::poly_cauchy_first, Family::poly_bernoulli};
    case IdentityId::eq12:
      return {Family::poly_cauchy_second, Family::poly_bernoulli};
    default:
      throw std::invalid_argument("not a duality identity");
  }
}

Family orthogonality_family(IdentityId id) {
  switch (id) {
    case IdentityId::thm4:
      return Family::poly_bernoulli;
    case IdentityId::thm5:
      return Family::poly_cauchy_first;
    case IdentityId::thm6:
      return Family::poly_cauchy_second;
    default:
      throw std::invalid_argument("not an orthogonality identity");
  }
}

Family explicit_family(IdentityId id) {
  switch (id) {
    case IdentityId::thm1:
      return Family::poly_bernoulli;
    case IdentityId::thm2:
      return Family::poly_cauchy_first;
    case IdentityId::thm3:
      return Family::poly_cauchy_second;
    default:
      throw std::invalid_argument("not an explicit-formula identity");
  }
}

IdentityId explicit_identity(Family f) {
  switch (f) {
    case Family::poly_bernoulli:
      return IdentityId::thm1;
    case Family::poly_cauchy_first:
      return IdentityId::thm2;
    case Family::poly_cauchy_second:
      return IdentityId::thm3;
  }
  throw std::logic_error("unhandled family");
}

Family congruence_family(IdentityId id) {
  switch (id) {
    case IdentityId::thm8_c1:
      return Family::poly_cauchy_first;
    case IdentityId::thm8_c2:
      return Family::poly_cauchy_second;
    case IdentityId::thm8_b:
      return Family::poly_bernoulli;
    default:
      throw std::invalid_argument("not a congruence identity");
  }
}

Family derivative_family(IdentityId id) {
  switch (id) {
    case IdentityId::thm9:
      return Family::poly_cauchy_first;
    case IdentityId::thm10:
      return Family::poly_cauchy_second;
    case IdentityId::thm11:
      return Family::poly_bernoulli;
    default:
      throw std::invalid_argument("not a derivative identity");
  }
}

void append_per_index(std::vector<AuditRow>& rows, const Params& p, int n_max, int n_ok,
                      const auto& verdict_at) {
  for (int n = 0; n <= n_max; ++n) {
    rows.push_back({point_of(p, n), n <= n_ok ? verdict_at(n) : singular_verdict(p)});
  }
}

std::vector<Params> grid_params(const Grid& grid) {
  std::vector<Params> out;
  for (long k : grid.ks) {
    for (const auto& [alpha, a] : grid.params) out.emplace_back(k, alpha, a);
  }
  return out;
}

}  // namespace

std::string_view to_string(IdentityId id) {
  for (const auto& [i, s] : kIdentityNames) {
    if (i == id) return s;
  }
  return "?";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::holds:
      return "HOLDS";
    case Status::fails:
      return "FAILS";
    case Status::undefined:
      return "UNDEFINED";
  }
  return "?";
}

std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::singular_parameter:
      return "SINGULAR_PARAMETER";
    case Reason::nonreducible_denominator:
      return "NONREDUCIBLE_DENOMINATOR";
  }
  return "?";
}

Verdict Verdict::compare(AuditValue lhs, AuditValue rhs) {
  Verdict v;
  v.status = lhs == rhs ? Status::holds : Status::fails;
  v.witness = Witness{std::move(lhs), std::move(rhs)};
  return v;
}

Verdict Verdict::undefined(Reason why, std::string detail) {
  Verdict v;
  v.status = Status::undefined;
  v.reason = why;
  v.detail = std::move(detail);
  return v;
}

AuditSummary AuditReport::summary() const {
  AuditSummary s;
  for (const auto& row : rows) {
    switch (row.verdict.status) {
      case Status::holds:
        ++s.holds;
        break;
      case Status::fails:
        ++s.fails;
        break;
      case Status::undefined:
        ++s.undefined;
        break;
    }
  }
  return s;
}

void AuditReport::canonicalize() {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const AuditRow& x, const AuditRow& y) { return x.point < y.point; });
}

Prefactor Prefactor::parse(std::string_view text) {
  Prefactor pre;
  bool seen_sign = false;
  bool seen_factorial = false;
  std::string compact;
  for (char c : text) {
    if (c != ' ') compact.push_back(c);
  }
  if (compact.empty()) throw ParseError("empty prefactor expression");
  std::string_view rest = compact;
  while (!rest.empty()) {
    auto star = rest.find('*');
    std::string_view factor = rest.substr(0, star);
    rest = star == std::string_view::npos ? std::string_view{} : rest.substr(star + 1);
    if (star != std::string_view::npos && rest.empty()) throw ParseError("trailing '*' in prefactor");

    if (factor == "1") continue;
    if (factor == "m!" || factor == "1/m!") {
      if (seen_factorial) throw ParseError("factorial factor given twice in prefactor");
      seen_factorial = true;
      pre.factorial_power = factor == "m!" ? 1 : -1;
      continue;
    }
    bool m = factor == "(-1)^m" || factor == "(-1)^(m)";
    bool n = factor == "(-1)^n" || factor == "(-1)^(n)";
    bool mn = factor == "(-1)^(m+n)" || factor == "(-1)^(n+m)";
    if (!(m || n || mn)) throw ParseError("unrecognized prefactor factor '" + std::string(factor) + "'");
    if (seen_sign) throw ParseError("sign factor given twice in prefactor");
    seen_sign = true;
    pre.sign_m = m || mn;
    pre.sign_n = n || mn;
  }
  return pre;
}

std::string Prefactor::to_string() const {
  std::string sign;
  if (sign_m && sign_n) {
    sign = "(-1)^(m+n)";
  } else if (sign_m) {
    sign = "(-1)^m";
  } else if (sign_n) {
    sign = "(-1)^n";
  }
  std::string fact = factorial_power > 0 ? "m!" : factorial_power < 0 ? "1/m!" : "";
  if (sign.empty() && fact.empty()) return "1";
  if (sign.empty()) return fact;
  if (fact.empty()) return sign;
  return sign + "*" + fact;
}

Rational Prefactor::eval(int n, int m) const {
  int e = (sign_m ? m : 0) + (sign_n ? n : 0);
  Rational r(sign_power(e));
  if (factorial_power != 0) {
    Rational f(factorial(static_cast<unsigned long>(m)));
    r *= factorial_power > 0 ? f : Rational(1) / f;
  }
  return r;
}

Prefactor printed_prefactor(IdentityId id) {
  switch (id) {
    case IdentityId::eq9:
    case IdentityId::eq11:
      return Prefactor{true, true, 1};
    case IdentityId::eq10:
      return Prefactor{true, false, 1};
    case IdentityId::eq12:
      return Prefactor{false, true, 1};
    default:
      throw std::invalid_argument("identity has no duality prefactor");
  }
}

Family family_of(IdentityId id) {
  switch (id) {
    case IdentityId::thm1:
    case IdentityId::thm2:
    case IdentityId::thm3:
      return explicit_family(id);
    case IdentityId::thm4:
    case IdentityId::thm5:
    case IdentityId::thm6:
      return orthogonality_family(id);
    case IdentityId::eq9:
    case IdentityId::eq10:
    case IdentityId::eq11:
    case IdentityId::eq12:
      return duality_families(id).first;
    case IdentityId::thm8_c1:
    case IdentityId::thm8_c2:
    case IdentityId::thm8_b:
      return congruence_family(id);
    case IdentityId::thm9:
    case IdentityId::thm10:
    case IdentityId::thm11:
      return derivative_family(id);
    case IdentityId::stirling_ortho:
      break;
  }
  throw std::invalid_argument("identity is not tied to a single family");
}

Verdict audit_orthogonality(Family f, int n, const Params& p) {
  if (n < 0) throw std::invalid_argument("negative index");
  if (regular_prefix(p, n, 0) < n) return singular_verdict(p);
  return orthogonality_at(f, n, p, oracle_sequence(f, n, p));
}

Verdict audit_duality(IdentityId id, int n, const Params& p, const std::optional<Prefactor>& variant) {
  if (n < 0) throw std::invalid_argument("negative index");
  auto [target, source] = duality_families(id);
  if (regular_prefix(p, n, 0) < n) return singular_verdict(p);
  return duality_at(id, n, variant.value_or(printed_prefactor(id)), oracle_sequence(target, n, p),
                    oracle_sequence(source, n, p));
}

void require_congruence_preconditions(int n, long k, const Rational& alpha, std::uint32_t p) {
  if (n < 1) throw std::invalid_argument("congruence audit needs n >= 1");
  if (k < 1) throw std::invalid_argument("congruence audit needs k >= 1");
  require_prime(p);
  if (alpha.is_zero() || alpha.numerator() % p == 0) {
    throw std::invalid_argument("congruence audit needs p not dividing alpha (p = " + std::to_string(p) +
                                ", alpha = " + alpha.to_string() + ")");
  }
}

Verdict audit_congruence(Family f, int n, long k, const Rational& alpha, const Rational& a, std::uint32_t p) {
  require_congruence_preconditions(n, k, alpha, p);
  const Params params(k, alpha, a);
  const int top = n * static_cast<int>(p);

  HypothesisCheck hyp;
  for (int m = 0; m <= top && hyp.satisfied; ++m) {
    bool unit = false;
    try {
      unit = mod_reduce(params.shift(m), p).value() != 0;
    } catch (const NonReducibleDenominator&) {
      unit = false;
    }
    if (!unit) {
      hyp.satisfied = false;
      hyp.first_violation = m;
    }
  }

  Verdict v;
  try {
    Rational high = explicit_value(f, top, params);
    Rational low = explicit_value(f, 0, params);
    try {
      v = Verdict::compare(mod_reduce(high, p), mod_reduce(low, p));
    } catch (const NonReducibleDenominator&) {
      bool high_bad = high.denominator() % p == 0;
      const Rational& bad = high_bad ? high : low;
      v = Verdict::undefined(Reason::nonreducible_denominator,
                             "s_" + std::to_string(high_bad ? top : 0) + " = " + bad.to_string());
    }
  } catch (const SingularParameter&) {
    v = singular_verdict(params);
  }
  v.hypothesis = hyp;
  return v;
}

IdentityId derivative_identity(Family f) {
  switch (f) {
    case Family::poly_cauchy_first:
      return IdentityId::thm9;
    case Family::poly_cauchy_second:
      return IdentityId::thm10;
    case Family::poly_bernoulli:
      return IdentityId::thm11;
  }
  throw std::logic_error("unhandled family");
}

AuditReport audit_derivative(Family f, int n_max, const Params& p, DerivativeSource source) {
  if (n_max < 0) throw std::invalid_argument("negative index");
  AuditReport report{derivative_identity(f), std::nullopt, {}};
  // Index n needs G to order n+1, i.e. shifts up to n+1 on both sides.
  const int n_ok = regular_prefix(p, n_max, 1);
  std::vector<Rational> lhs;
  std::vector<Rational> rhs;
  if (n_ok >= 0) {
    lhs = source == DerivativeSource::printed ? deriv_coeffs_printed(f, n_ok, p) : deriv_coeffs_oracle(f, n_ok, p);
    rhs = deriv_coeffs_oracle(f, n_ok, p);
  }
  append_per_index(report.rows, p, n_max, n_ok, [&](int n) { return Verdict::compare(lhs[idx(n)], rhs[idx(n)]); });
  return report;
}

AuditReport audit_explicit(Family f, int n_max, const Params& p) {
  if (n_max < 0) throw std::invalid_argument("negative index");
  AuditReport report{explicit_identity(f), std::nullopt, {}};
  const int n_ok = regular_prefix(p, n_max, 0);
  std::vector<Rational> formula;
  std::vector<Rational> oracle;
  if (n_ok >= 0) {
    formula = explicit_sequence(f, n_ok, p);
    oracle = oracle_sequence(f, n_ok, p);
  }
  append_per_index(report.rows, p, n_max, n_ok,
                   [&](int n) { return Verdict::compare(formula[idx(n)], oracle[idx(n)]); });
  return report;
}

AuditReport audit_stirling_orthogonality(int n_max) {
  if (n_max < 0) throw std::invalid_argument("negative index");
  AuditReport report{IdentityId::stirling_ortho, std::nullopt, {}};
  for (int n = 0; n <= n_max; ++n) {
    for (int l = 0; l <= n; ++l) {
      Rational expected(n == l ? sign_power(n) : 0);
      BigInt first_second = 0;
      BigInt second_first = 0;
      for (int m = l; m <= n; ++m) {
        first_second += sign_power(m) * stirling1_unsigned(n, m) * stirling2(m, l);
        second_first += sign_power(m) * stirling2(n, m) * stirling1_unsigned(m, l);
      }
      GridPoint pt;
      pt.n = n;
      pt.l = l;
      pt.form = "first-second";
      report.rows.push_back({pt, Verdict::compare(Rational(first_second), expected)});
      pt.form = "second-first";
      report.rows.push_back({pt, Verdict::compare(Rational(second_first), expected)});
    }
  }
  report.canonicalize();
  return report;
}

Grid default_grid() {
  Grid g;
  g.params = {
      {Rational(1), Rational(1)},
      {Rational(1), Rational(2)},
      {Rational(2), Rational(1)},
      {Rational(1, 2), Rational(1)},
      {Rational(3), Rational(1, 3)},
      {Rational(1), Rational(5, 2)},
  };
  return g;
}

AuditReport run_audit(IdentityId id, const Grid& grid, const std::optional<Prefactor>& variant) {
  AuditReport report{id, std::nullopt, {}};
  if (variant) {
    if (!is_duality(id)) throw std::invalid_argument("prefactor variants apply to eq9..eq12 only");
    report.variant = variant->to_string();
  }

  switch (id) {
    case IdentityId::thm1:
    case IdentityId::thm2:
    case IdentityId::thm3:
      for (const auto& p : grid_params(grid)) {
        auto r = audit_explicit(explicit_family(id), grid.n_max, p);
        std::move(r.rows.begin(), r.rows.end(), std::back_inserter(report.rows));
      }
      break;

    case IdentityId::thm4:
    case IdentityId::thm5:
    case IdentityId::thm6: {
      const Family f = orthogonality_family(id);
      for (const auto& p : grid_params(grid)) {
        const int n_ok = regular_prefix(p, grid.n_max, 0);
        auto seq = n_ok >= 0 ? oracle_sequence(f, n_ok, p) : std::vector<Rational>{};
        append_per_index(report.rows, p, grid.n_max, n_ok, [&](int n) { return orthogonality_at(f, n, p, seq); });
      }
      break;
    }

    case IdentityId::eq9:
    case IdentityId::eq10:
    case IdentityId::eq11:
    case IdentityId::eq12: {
      const auto [target_family, source_family] = duality_families(id);
      const Prefactor pre = variant.value_or(printed_prefactor(id));
      for (const auto& p : grid_params(grid)) {
        const int n_ok = regular_prefix(p, grid.n_max, 0);
        std::vector<Rational> target;
        std::vector<Rational> source;
        if (n_ok >= 0) {
          target = oracle_sequence(target_family, n_ok, p);
          source = oracle_sequence(source_family, n_ok, p);
        }
        append_per_index(report.rows, p, grid.n_max, n_ok,
                         [&](int n) { return duality_at(id, n, pre, target, source); });
      }
      break;
    }

    case IdentityId::thm8_c1:
    case IdentityId::thm8_c2:
    case IdentityId::thm8_b: {
      const Family f = congruence_family(id);
      for (std::uint32_t prime : grid.primes) require_prime(prime);
      for (long k : grid.ks) {
        if (k < 1) continue;
        for (const auto& [alpha, a] : grid.params) {
          for (std::uint32_t prime : grid.primes) {
            if (alpha.numerator() % prime == 0) continue;
            for (int n = 1; n <= grid.congruence_n_max; ++n) {
              GridPoint pt;
              pt.k = k;
              pt.alpha = alpha;
              pt.a = a;
              pt.prime = prime;
              pt.n = n;
              report.rows.push_back({pt, audit_congruence(f, n, k, alpha, a, prime)});
            }
          }
        }
      }
      break;
    }

    case IdentityId::thm9:
    case IdentityId::thm10:
    case IdentityId::thm11:
      for (const auto& p : grid_params(grid)) {
        auto r = audit_derivative(derivative_family(id), grid.n_max, p);
        std::move(r.rows.begin(), r.rows.end(), std::back_inserter(report.rows));
      }
      break;

    case IdentityId::stirling_ortho:
      report.rows = audit_stirling_orthogonality(grid.stirling_n_max).rows;
      break;
  }
  report.canonicalize();
  return report;
}

}  // namespace hlpoly
