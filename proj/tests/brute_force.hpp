#pragma once

// Test-only reference computations. Nothing here calls into the library's
// Stirling tables or PowerSeries; values are built from first principles.

#include <gmpxx.h>

#include <vector>

namespace brute {

using Q = mpq_class;
using Z = mpz_class;
using Poly = std::vector<Q>;  // dense, index = degree

inline Z binomial(unsigned long n, unsigned long k) {
  Z r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Z fact(unsigned long n) {
  Z r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// {n m} = (1/m!) sum_j (-1)^j C(m,j) (m-j)^n
inline Z stirling2(int n, int m) {
  if (m < 0 || m > n) return 0;
  Z sum = 0;
  for (int j = 0; j <= m; ++j) {
    Z p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(m - j), static_cast<unsigned long>(n));
    Z term = binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(j)) * p;
    sum += (j % 2 == 0) ? term : Z(-term);
  }
  return sum / fact(static_cast<unsigned long>(m));
}

// Coefficients of x(x+1)...(x+n-1) are the unsigned [n m].
inline std::vector<Z> rising_factorial_coeffs(int n) {
  std::vector<Z> c{1};
  for (int i = 0; i < n; ++i) {
    std::vector<Z> next(c.size() + 1, 0);
    for (std::size_t d = 0; d < c.size(); ++d) {
      next[d + 1] += c[d];
      next[d] += c[d] * i;
    }
    c = std::move(next);
  }
  return c;
}

inline Z stirling1(int n, int m) {
  if (m < 0 || m > n) return 0;
  return rising_factorial_coeffs(n)[static_cast<std::size_t>(m)];
}

// Bell numbers by B_{n+1} = sum_i C(n,i) B_i.
inline std::vector<Z> bell(int n_max) {
  std::vector<Z> b{1};
  for (int n = 0; n < n_max; ++n) {
    Z s = 0;
    for (int i = 0; i <= n; ++i) s += binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i)) * b[static_cast<std::size_t>(i)];
    b.push_back(s);
  }
  return b;
}

inline Poly mul(const Poly& f, const Poly& g, int order) {
  Poly r(static_cast<std::size_t>(order) + 1, 0);
  for (int i = 0; i <= order && i < static_cast<int>(f.size()); ++i) {
    for (int j = 0; i + j <= order && j < static_cast<int>(g.size()); ++j) {
      r[static_cast<std::size_t>(i + j)] += f[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)];
    }
  }
  return r;
}

// Taylor coefficients written out directly.
inline Poly exp_series(int order, int sign) {
  Poly r;
  Q term = 1;
  for (int n = 0; n <= order; ++n) {
    r.push_back(term);
    term = term * sign / (n + 1);
  }
  return r;
}

inline Poly log1p_series(int order) {
  Poly r(static_cast<std::size_t>(order) + 1, 0);
  for (int n = 1; n <= order; ++n) r[static_cast<std::size_t>(n)] = Q(n % 2 == 1 ? 1 : -1, n);
  return r;
}

// Integral over [0,1] of the falling factorial x(x-1)...(x-n+1), i.e. the
// classical Cauchy number of the first kind. With sign = -1 the integrand is
// (-x)(-x-1)...(-x-n+1) (second kind).
inline Q cauchy_integral(int n, int sign) {
  Poly p{1};
  for (int i = 0; i < n; ++i) {
    Poly next(p.size() + 1, 0);
    for (std::size_t d = 0; d < p.size(); ++d) {
      next[d + 1] += p[d] * sign;
      next[d] -= p[d] * i;
    }
    p = std::move(next);
  }
  Q integral = 0;
  for (std::size_t d = 0; d < p.size(); ++d) integral += p[d] / Q(static_cast<long>(d + 1));
  return integral;
}

}  // namespace brute
