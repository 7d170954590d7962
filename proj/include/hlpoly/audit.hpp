#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hlpoly/exact.hpp"
#include "hlpoly/sequences.hpp"

namespace hlpoly {

enum class IdentityId {
  thm1,  // explicit formula vs generating function, bernoulli
  thm2,  // ... cauchy1
  thm3,  // ... cauchy2
  thm4,  // sum_m [n m] B_m = n!/(alpha n + a)^k
  thm5,  // sum_m {n m} c_m = 1/(alpha n + a)^k
  thm6,  // sum_m {n m} ĉ_m = (-1)^n/(alpha n + a)^k
  eq9,   // B_n from c_l
  eq10,  // B_n from ĉ_l
  eq11,  // c_n from B_l
  eq12,  // ĉ_n from B_l
  thm8_c1,
  thm8_c2,
  thm8_b,
  thm9,   // derivative coefficients, cauchy1
  thm10,  // derivative coefficients, cauchy2
  thm11,  // derivative coefficients, bernoulli
  stirling_ortho,
};

/// Upper-case report label, e.g. "THM8_C1".
std::string_view to_string(IdentityId id);

enum class Status { holds, fails, undefined };
std::string_view to_string(Status s);

enum class Reason { singular_parameter, nonreducible_denominator };
std::string_view to_string(Reason r);

using AuditValue = std::variant<Rational, ResidueModP>;

struct Witness {
  AuditValue lhs;
  AuditValue rhs;
};

/// Whether (alpha m + a)^k is a unit mod p for every 0 <= m <= np.
struct HypothesisCheck {
  bool satisfied = true;
  std::optional<int> first_violation;  // smallest offending m
};

/// Outcome at one grid point. Whenever both sides were evaluated the pair is
/// kept in `witness`, so FAILS always carries lhs != rhs.
struct Verdict {
  Status status = Status::undefined;
  std::optional<Witness> witness;
  std::optional<Reason> reason;
  std::optional<HypothesisCheck> hypothesis;
  std::string detail;

  static Verdict compare(AuditValue lhs, AuditValue rhs);
  static Verdict undefined(Reason why, std::string detail);
};

/// Evaluation coordinates. Field order is the canonical sort order.
struct GridPoint {
  std::optional<long> k;
  std::optional<Rational> alpha;
  std::optional<Rational> a;
  std::optional<std::uint32_t> prime;
  int n = 0;
  std::optional<int> l;
  std::optional<std::string> form;

  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

struct AuditRow {
  GridPoint point;
  Verdict verdict;
};

struct AuditSummary {
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t undefined = 0;
  std::size_t total() const { return holds + fails + undefined; }
};

struct AuditReport {
  IdentityId identity;
  std::optional<std::string> variant;  // user-supplied prefactor, if any
  std::vector<AuditRow> rows;

  AuditSummary summary() const;
  /// Sorts rows by grid point.
  void canonicalize();
};

/// Sign/factorial weight (-1)^{s_m m + s_n n} (m!)^e used inside the
/// duality double sums. Text form: '*'-separated factors drawn from
/// (-1)^m, (-1)^n, (-1)^(m+n), m!, 1/m!, 1.
struct Prefactor {
  bool sign_m = false;
  bool sign_n = false;
  int factorial_power = 0;  // -1, 0 or 1

  /// Throws ParseError.
  static Prefactor parse(std::string_view text);
  std::string to_string() const;
  Rational eval(int n, int m) const;

  friend bool operator==(const Prefactor&, const Prefactor&) = default;
};

/// The prefactor each of eq9..eq12 is typeset with.
Prefactor printed_prefactor(IdentityId id);

Family family_of(IdentityId id);

/// THM4/5/6 at one point; UNDEFINED(singular_parameter) when the shifts vanish.
Verdict audit_orthogonality(Family f, int n, const Params& p);

/// One of eq9..eq12 at one point, with the printed prefactor unless
/// `variant` is given.
Verdict audit_duality(IdentityId id, int n, const Params& p, const std::optional<Prefactor>& variant = {});

/// Throws std::invalid_argument when the congruence preconditions fail:
/// n, k >= 1, p prime, p not dividing the numerator of alpha.
void require_congruence_preconditions(int n, long k, const Rational& alpha, std::uint32_t p);

/// s_{np} == s_0 (mod p) for the family, plus the invertibility hypothesis
/// over 0 <= m <= np, which is recorded on every verdict.
Verdict audit_congruence(Family f, int n, long k, const Rational& alpha, const Rational& a, std::uint32_t p);

/// Which coefficient list is compared against the oracle.
enum class DerivativeSource {
  printed,
  oracle_recompute,  // x = x control
};

IdentityId derivative_identity(Family f);

AuditReport audit_derivative(Family f, int n_max, const Params& p,
                             DerivativeSource source = DerivativeSource::printed);

AuditReport audit_explicit(Family f, int n_max, const Params& p);

/// Both sum_{m} [n m]{m l}(-1)^m = (-1)^n delta_{nl} and the transposed
/// sum_{m} {n m}[m l](-1)^m = (-1)^n delta_{nl}, for 0 <= l <= n <= n_max.
AuditReport audit_stirling_orthogonality(int n_max);

struct Grid {
  int n_max = 12;
  std::vector<long> ks{-2, -1, 0, 1, 2, 3};
  std::vector<std::pair<Rational, Rational>> params;  // (alpha, a)
  std::vector<std::uint32_t> primes{3, 5, 7, 11};
  int congruence_n_max = 3;
  int stirling_n_max = 20;
};

/// n <= 12, k in -2..3, six (alpha, a) pairs, primes 3, 5, 7, 11.
Grid default_grid();

/// Whole-grid audit, canonically ordered. Congruence audits only visit
/// k >= 1 and skip primes dividing the numerator of alpha.
AuditReport run_audit(IdentityId id, const Grid& grid, const std::optional<Prefactor>& variant = {});

}  // namespace hlpoly
