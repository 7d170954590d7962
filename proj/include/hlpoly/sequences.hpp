#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hlpoly/exact.hpp"
#include "hlpoly/series.hpp"

namespace hlpoly {

enum class Family { poly_bernoulli, poly_cauchy_first, poly_cauchy_second };

/// CLI spelling: bernoulli, cauchy1, cauchy2.
std::string_view to_string(Family f);
Family parse_family(std::string_view name);

/// (k, alpha, a). alpha must be nonzero; shifts alpha*m + a are checked per
/// call against the indices that call actually touches.
class Params {
 public:
  /// Throws std::invalid_argument when alpha == 0.
  Params(long k, Rational alpha, Rational a);

  long k() const { return k_; }
  const Rational& alpha() const { return alpha_; }
  const Rational& a() const { return a_; }

  Rational shift(int m) const { return alpha_ * Rational(m) + a_; }

  /// Smallest m >= 0 with alpha*m + a = 0, if any.
  std::optional<int> first_singular_index() const;

  /// Throws SingularParameter if alpha*m + a = 0 for some 0 <= m <= m_max.
  void require_regular(int m_max) const;

  /// 1 / (alpha m + a)^k.
  Rational weight(int m) const;

 private:
  long k_;
  Rational alpha_;
  Rational a_;
};

// Closed forms as Stirling sums.
//   B_n = (-1)^n sum_m (-1)^m m! {n m} / (alpha m + a)^k
//   c_n = (-1)^n sum_m (-1)^m [n m] / (alpha m + a)^k
//   ĉ_n = (-1)^n sum_m [n m] / (alpha m + a)^k
Rational poly_bernoulli(int n, const Params& p);
Rational poly_cauchy1(int n, const Params& p);
Rational poly_cauchy2(int n, const Params& p);

Rational explicit_value(Family f, int n, const Params& p);
std::vector<Rational> explicit_sequence(Family f, int n_max, const Params& p);

/// Defining generating function to the given order:
///   bernoulli  Phi(1 - e^{-t}, k, alpha, a)
///   cauchy1    Phi_f(ln(1+t), k, alpha, a)
///   cauchy2    Phi_f(-ln(1+t), k, alpha, a)
PowerSeries generating_function(Family f, int order, const Params& p);

/// EGF coefficients 0..n_max of generating_function(f, n_max, p).
std::vector<Rational> oracle_sequence(Family f, int n_max, const Params& p);

/// Derivative coefficients exactly as the closed forms are typeset:
///   cauchy1, cauchy2:  D_n = sum_{m=1}^{n} [n m] m (-1)^{n+m} / (alpha m + a)^k
///   bernoulli:         D_n = sum_{m=1}^{n+1} {n, m-1} m! / (alpha m + a)^k
std::vector<Rational> deriv_coeffs_printed(Family f, int n_max, const Params& p);

/// The coefficients that make  G'(t) = P(t) * sum D_n t^n/n!  true, with
/// P = 1/(1+t) for the Cauchy families and P = e^{-t} for Bernoulli.
/// Computed as EGF coefficients of (1+t) G'(t) or e^t G'(t), G to order n_max+1.
std::vector<Rational> deriv_coeffs_oracle(Family f, int n_max, const Params& p);

// Largest index alpha*m + a must be regular on for each computation above.
int explicit_index_bound(int n_max);
int deriv_printed_index_bound(Family f, int n_max);
int deriv_oracle_index_bound(int n_max);

}  // namespace hlpoly
