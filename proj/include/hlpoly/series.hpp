#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "hlpoly/exact.hpp"

namespace hlpoly {

/// Truncated formal power series c_0 + c_1 t + ... + c_N t^N + O(t^{N+1}).
///
/// Binary operations truncate to the smaller operand order; nothing is ever
/// zero-extended past the order a series is known to.
class PowerSeries {
 public:
  /// The zero series to order N.
  explicit PowerSeries(int order);

  /// Coefficients c_0..c_{coeffs.size()-1}; order is coeffs.size() - 1.
  explicit PowerSeries(std::vector<Rational> coeffs);

  /// Order N with the given leading coefficients; missing ones are zero,
  /// extra ones are dropped.
  PowerSeries(std::vector<Rational> coeffs, int order);

  static PowerSeries constant(const Rational& c, int order);

  /// Series whose EGF coefficients (n! c_n) are the given values.
  static PowerSeries from_egf(std::span<const Rational> egf);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Throws TruncationExceeded for i > order().
  const Rational& operator[](int i) const;

  /// Lowest index with a nonzero coefficient, or order()+1 for the zero series.
  int valuation() const;

  /// Drops terms above `order`. Throws TruncationExceeded if order > order().
  PowerSeries truncated(int order) const;

  PowerSeries operator-() const;
  friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g);
  friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g);
  friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g);
  friend PowerSeries operator*(const Rational& c, const PowerSeries& f);

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// [g^0, g^1, ..., g^{m_max}], each to order N_g.
/// Throws std::domain_error unless g has zero constant term.
std::vector<PowerSeries> compose_powers(const PowerSeries& g, int m_max);

/// Sum_{m=0}^{N} outer[m] * g^m to order N = g.order(). `outer` may be longer
/// than needed; it must have at least N+1 entries.
PowerSeries compose(std::span<const Rational> outer, const PowerSeries& g);

/// Order N-1. Throws std::domain_error for an order-0 series.
PowerSeries derivative(const PowerSeries& f);

enum class Kernel {
  one_minus_exp_neg,     // 1 - e^{-t}
  log1p,                 // ln(1+t)
  neg_log1p,             // -ln(1+t)
  exp_pos,               // e^t
  exp_neg,               // e^{-t}
  geom_1_over_1_plus_t,  // 1/(1+t)
};

PowerSeries kernel(Kernel name, int order);

std::string_view to_string(Kernel name);
/// Throws ParseError for unknown names.
Kernel parse_kernel(std::string_view name);

/// Hurwitz-Lerch kernel applied to g:  Sum_m g^m / (alpha m + a)^k.
/// The m <= N_g terms are exact; higher terms vanish at this order.
/// Throws std::domain_error if g(0) != 0 and SingularParameter if
/// alpha m + a = 0 for some m <= N_g.
PowerSeries phi_apply(const PowerSeries& g, long k, const Rational& alpha, const Rational& a);

/// Factorial variant:  Sum_m g^m / (m! (alpha m + a)^k).
PowerSeries phif_apply(const PowerSeries& g, long k, const Rational& alpha, const Rational& a);

/// n! * c_n. Throws TruncationExceeded for n > f.order().
Rational egf_coeff(const PowerSeries& f, int n);

std::vector<Rational> egf_coeffs(const PowerSeries& f);

}  // namespace hlpoly
