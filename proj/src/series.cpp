#include "hlpoly/series.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace hlpoly {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void check_order(int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
}

// 1 / (alpha m + a)^k for m = 0..n, checking every shift is nonzero.
std::vector<Rational> kernel_weights(int n, long k, const Rational& alpha, const Rational& a) {
  std::vector<Rational> w;
  w.reserve(idx(n) + 1);
  for (int m = 0; m <= n; ++m) {
    Rational shift = alpha * Rational(m) + a;
    if (shift.is_zero()) {
      throw SingularParameter(m, "alpha*m + a vanishes at m = " + std::to_string(m) + " (alpha = " +
                                     alpha.to_string() + ", a = " + a.to_string() + ")");
    }
    w.push_back(pow(shift, -k));
  }
  return w;
}

constexpr std::array<std::pair<Kernel, std::string_view>, 6> kKernelNames{{
    {Kernel::one_minus_exp_neg, "one_minus_exp_neg"},
    {Kernel::log1p, "log1p"},
    {Kernel::neg_log1p, "neg_log1p"},
    {Kernel::exp_pos, "exp_pos"},
    {Kernel::exp_neg, "exp_neg"},
    {Kernel::geom_1_over_1_plus_t, "geom_1_over_1_plus_t"},
}};

}  // namespace

PowerSeries::PowerSeries(int order) {
  check_order(order);
  coeffs_.resize(idx(order) + 1);
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("power series needs at least one coefficient");
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs, int order) : coeffs_(std::move(coeffs)) {
  check_order(order);
  coeffs_.resize(idx(order) + 1);
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
  PowerSeries f(order);
  f.coeffs_[0] = c;
  return f;
}

PowerSeries PowerSeries::from_egf(std::span<const Rational> egf) {
  std::vector<Rational> c;
  c.reserve(egf.size());
  for (std::size_t n = 0; n < egf.size(); ++n) c.push_back(egf[n] / Rational(factorial(n)));
  return PowerSeries(std::move(c));
}

const Rational& PowerSeries::operator[](int i) const {
  if (i < 0 || i > order()) {
    throw TruncationExceeded("coefficient " + std::to_string(i) + " requested from a series of order " +
                             std::to_string(order()));
  }
  return coeffs_[idx(i)];
}

int PowerSeries::valuation() const {
  for (int i = 0; i <= order(); ++i) {
    if (!coeffs_[idx(i)].is_zero()) return i;
  }
  return order() + 1;
}

PowerSeries PowerSeries::truncated(int order) const {
  check_order(order);
  if (order > this->order()) {
    throw TruncationExceeded("cannot extend a series of order " + std::to_string(this->order()) + " to order " +
                             std::to_string(order));
  }
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
  PowerSeries r(std::min(f.order(), g.order()));
  for (int i = 0; i <= r.order(); ++i) r.coeffs_[idx(i)] = f.coeffs_[idx(i)] + g.coeffs_[idx(i)];
  return r;
}

PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) { return f + (-g); }

PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
  PowerSeries r(std::min(f.order(), g.order()));
  for (int i = 0; i <= r.order(); ++i) {
    if (f.coeffs_[idx(i)].is_zero()) continue;
    for (int j = 0; i + j <= r.order(); ++j) {
      r.coeffs_[idx(i + j)] += f.coeffs_[idx(i)] * g.coeffs_[idx(j)];
    }
  }
  return r;
}

PowerSeries operator*(const Rational& c, const PowerSeries& f) {
  PowerSeries r = f;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

std::vector<PowerSeries> compose_powers(const PowerSeries& g, int m_max) {
  if (!g[0].is_zero()) {
    throw std::domain_error("composition requires a series with zero constant term");
  }
  std::vector<PowerSeries> powers;
  powers.reserve(idx(std::max(m_max, 0)) + 1);
  powers.push_back(PowerSeries::constant(Rational(1), g.order()));
  for (int m = 1; m <= m_max; ++m) powers.push_back(powers.back() * g);
  return powers;
}

PowerSeries compose(std::span<const Rational> outer, const PowerSeries& g) {
  const int n = g.order();
  if (outer.size() < idx(n) + 1) {
    throw std::invalid_argument("outer series has fewer than order+1 coefficients");
  }
  auto powers = compose_powers(g, n);
  PowerSeries r(n);
  for (int m = 0; m <= n; ++m) r = r + outer[idx(m)] * powers[idx(m)];
  return r;
}

PowerSeries derivative(const PowerSeries& f) {
  if (f.order() < 1) throw std::domain_error("derivative of an order-0 series is not determined");
  std::vector<Rational> d;
  d.reserve(idx(f.order()));
  for (int i = 0; i < f.order(); ++i) d.push_back(Rational(i + 1) * f[i + 1]);
  return PowerSeries(std::move(d));
}

PowerSeries kernel(Kernel name, int order) {
  check_order(order);
  std::vector<Rational> c(idx(order) + 1);
  for (int n = 0; n <= order; ++n) {
    const Rational inv_fact(BigInt(1), factorial(static_cast<unsigned long>(n)));
    const int alt = sign_power(n);  // (-1)^n
    switch (name) {
      case Kernel::one_minus_exp_neg:
        c[idx(n)] = n == 0 ? Rational(0) : Rational(-alt) * inv_fact;
        break;
      case Kernel::log1p:
        c[idx(n)] = n == 0 ? Rational(0) : Rational(BigInt(-alt), BigInt(n));
        break;
      case Kernel::neg_log1p:
        c[idx(n)] = n == 0 ? Rational(0) : Rational(BigInt(alt), BigInt(n));
        break;
      case Kernel::exp_pos:
        c[idx(n)] = inv_fact;
        break;
      case Kernel::exp_neg:
        c[idx(n)] = Rational(alt) * inv_fact;
        break;
      case Kernel::geom_1_over_1_plus_t:
        c[idx(n)] = Rational(alt);
        break;
    }
  }
  return PowerSeries(std::move(c));
}

std::string_view to_string(Kernel name) {
  for (const auto& [k, s] : kKernelNames) {
    if (k == name) return s;
  }
  return "?";
}

Kernel parse_kernel(std::string_view name) {
  for (const auto& [k, s] : kKernelNames) {
    if (s == name) return k;
  }
  throw ParseError("unknown kernel '" + std::string(name) + "'");
}

PowerSeries phi_apply(const PowerSeries& g, long k, const Rational& alpha, const Rational& a) {
  if (!g[0].is_zero()) {
    throw std::domain_error("composition requires a series with zero constant term");
  }
  auto w = kernel_weights(g.order(), k, alpha, a);
  return compose(w, g);
}

PowerSeries phif_apply(const PowerSeries& g, long k, const Rational& alpha, const Rational& a) {
  if (!g[0].is_zero()) {
    throw std::domain_error("composition requires a series with zero constant term");
  }
  auto w = kernel_weights(g.order(), k, alpha, a);
  for (std::size_t m = 0; m < w.size(); ++m) w[m] /= Rational(factorial(m));
  return compose(w, g);
}

Rational egf_coeff(const PowerSeries& f, int n) {
  if (n < 0) throw std::invalid_argument("negative coefficient index");
  return Rational(factorial(static_cast<unsigned long>(n))) * f[n];
}

std::vector<Rational> egf_coeffs(const PowerSeries& f) {
  std::vector<Rational> r;
  r.reserve(idx(f.order()) + 1);
  for (int n = 0; n <= f.order(); ++n) r.push_back(egf_coeff(f, n));
  return r;
}

}  // namespace hlpoly
