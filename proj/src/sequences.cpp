#include "hlpoly/sequences.hpp"

#include <stdexcept>
#include <string>

#include "hlpoly/stirling.hpp"

namespace hlpoly {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void check_index(int n) {
  if (n < 0) throw std::invalid_argument("negative sequence index");
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::poly_bernoulli:
      return "bernoulli";
    case Family::poly_cauchy_first:
      return "cauchy1";
    case Family::poly_cauchy_second:
      return "cauchy2";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "bernoulli") return Family::poly_bernoulli;
  if (name == "cauchy1") return Family::poly_cauchy_first;
  if (name == "cauchy2") return Family::poly_cauchy_second;
  throw ParseError("unknown family '" + std::string(name) + "'");
}

Params::Params(long k, Rational alpha, Rational a) : k_(k), alpha_(std::move(alpha)), a_(std::move(a)) {
  if (alpha_.is_zero()) throw std::invalid_argument("alpha must be nonzero");
}

std::optional<int> Params::first_singular_index() const {
  // alpha*m + a = 0  <=>  m = -a/alpha
  Rational m = -a_ / alpha_;
  if (!m.is_integer() || m.sign() < 0) return std::nullopt;
  if (!m.numerator().fits_sint_p()) return std::nullopt;
  return static_cast<int>(m.numerator().get_si());
}

void Params::require_regular(int m_max) const {
  auto m = first_singular_index();
  if (m && *m <= m_max) {
    throw SingularParameter(*m, "alpha*m + a vanishes at m = " + std::to_string(*m) + " (alpha = " +
                                    alpha_.to_string() + ", a = " + a_.to_string() + ")");
  }
}

Rational Params::weight(int m) const {
  Rational s = shift(m);
  if (s.is_zero()) {
    throw SingularParameter(m, "alpha*m + a vanishes at m = " + std::to_string(m));
  }
  return pow(s, -k_);
}

int explicit_index_bound(int n_max) { return n_max; }

int deriv_printed_index_bound(Family f, int n_max) {
  return f == Family::poly_bernoulli ? n_max + 1 : n_max;
}

int deriv_oracle_index_bound(int n_max) { return n_max + 1; }

Rational poly_bernoulli(int n, const Params& p) {
  check_index(n);
  p.require_regular(n);
  Rational sum;
  for (int m = 0; m <= n; ++m) {
    BigInt term = sign_power(m) * factorial(static_cast<unsigned long>(m)) * stirling2(n, m);
    if (term == 0) continue;
    sum += Rational(term) * p.weight(m);
  }
  return Rational(sign_power(n)) * sum;
}

Rational poly_cauchy1(int n, const Params& p) {
  check_index(n);
  p.require_regular(n);
  Rational sum;
  for (int m = 0; m <= n; ++m) {
    BigInt s = stirling1_unsigned(n, m);
    if (s == 0) continue;
    sum += Rational(BigInt(sign_power(m) * s)) * p.weight(m);
  }
  return Rational(sign_power(n)) * sum;
}

Rational poly_cauchy2(int n, const Params& p) {
  check_index(n);
  p.require_regular(n);
  Rational sum;
  for (int m = 0; m <= n; ++m) {
    BigInt s = stirling1_unsigned(n, m);
    if (s == 0) continue;
    sum += Rational(s) * p.weight(m);
  }
  return Rational(sign_power(n)) * sum;
}

Rational explicit_value(Family f, int n, const Params& p) {
  switch (f) {
    case Family::poly_bernoulli:
      return poly_bernoulli(n, p);
    case Family::poly_cauchy_first:
      return poly_cauchy1(n, p);
    case Family::poly_cauchy_second:
      return poly_cauchy2(n, p);
  }
  throw std::logic_error("unhandled family");
}

std::vector<Rational> explicit_sequence(Family f, int n_max, const Params& p) {
  check_index(n_max);
  p.require_regular(explicit_index_bound(n_max));
  std::vector<Rational> r;
  r.reserve(idx(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) r.push_back(explicit_value(f, n, p));
  return r;
}

PowerSeries generating_function(Family f, int order, const Params& p) {
  switch (f) {
    case Family::poly_bernoulli:
      return phi_apply(kernel(Kernel::one_minus_exp_neg, order), p.k(), p.alpha(), p.a());
    case Family::poly_cauchy_first:
      return phif_apply(kernel(Kernel::log1p, order), p.k(), p.alpha(), p.a());
    case Family::poly_cauchy_second:
      return phif_apply(kernel(Kernel::neg_log1p, order), p.k(), p.alpha(), p.a());
  }
  throw std::logic_error("unhandled family");
}

std::vector<Rational> oracle_sequence(Family f, int n_max, const Params& p) {
  check_index(n_max);
  return egf_coeffs(generating_function(f, n_max, p));
}

std::vector<Rational> deriv_coeffs_printed(Family f, int n_max, const Params& p) {
  check_index(n_max);
  p.require_regular(deriv_printed_index_bound(f, n_max));
  std::vector<Rational> d;
  d.reserve(idx(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    Rational sum;
    if (f == Family::poly_bernoulli) {
      for (int m = 1; m <= n + 1; ++m) {
        BigInt s = stirling2(n, m - 1);
        if (s == 0) continue;
        sum += Rational(BigInt(s * factorial(static_cast<unsigned long>(m)))) * p.weight(m);
      }
    } else {
      // The second-kind display repeats the first-kind formula verbatim.
      for (int m = 1; m <= n; ++m) {
        BigInt s = stirling1_unsigned(n, m);
        sum += Rational(BigInt(sign_power(n + m) * m * s)) * p.weight(m);
      }
    }
    d.push_back(std::move(sum));
  }
  return d;
}

std::vector<Rational> deriv_coeffs_oracle(Family f, int n_max, const Params& p) {
  check_index(n_max);
  PowerSeries g_prime = derivative(generating_function(f, n_max + 1, p));
  PowerSeries inverse_prefactor = f == Family::poly_bernoulli
                                      ? kernel(Kernel::exp_pos, n_max)
                                      : PowerSeries({Rational(1), Rational(1)}, n_max);
  return egf_coeffs(inverse_prefactor * g_prime);
}

}  // namespace hlpoly
