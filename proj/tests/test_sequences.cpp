#include <doctest.h>

#include <string>

#include "brute_force.hpp"
#include "hlpoly/sequences.hpp"
#include "hlpoly/stirling.hpp"

using hlpoly::Family;
using hlpoly::Params;
using hlpoly::Rational;

namespace {

Rational q(long n, long d) { return Rational(hlpoly::BigInt(n), hlpoly::BigInt(d)); }

std::vector<Rational> qs(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<Rational> out;
  for (auto [n, d] : xs) out.push_back(q(n, d));
  return out;
}

const Params classical(long k) { return Params(k, Rational(1), Rational(1)); }

const std::vector<std::pair<Rational, Rational>> kGridPoints{
    {Rational(1), Rational(1)},    {Rational(1), Rational(2)}, {Rational(2), Rational(1)},
    {q(1, 2), Rational(1)},        {Rational(3), q(1, 3)},     {Rational(1), q(5, 2)},
};

constexpr Family kFamilies[] = {Family::poly_bernoulli, Family::poly_cauchy_first, Family::poly_cauchy_second};

}  // namespace

TEST_CASE("params validation") {
  CHECK_THROWS_AS(Params(1, Rational(0), Rational(1)), std::invalid_argument);
  Params p(1, Rational(1), Rational(-2));
  CHECK(p.first_singular_index() == 2);
  CHECK_NOTHROW(p.require_regular(1));
  CHECK_THROWS_AS(p.require_regular(2), hlpoly::SingularParameter);
  CHECK_FALSE(Params(1, Rational(2), Rational(-3)).first_singular_index().has_value());
  CHECK_FALSE(Params(1, Rational(1), Rational(2)).first_singular_index().has_value());
  CHECK(Params(1, q(-1, 2), Rational(2)).first_singular_index() == 4);
  CHECK(Params(1, Rational(1), Rational(0)).first_singular_index() == 0);
}

TEST_CASE("family names") {
  for (auto f : kFamilies) CHECK(hlpoly::parse_family(hlpoly::to_string(f)) == f);
  CHECK_THROWS_AS(hlpoly::parse_family("euler"), hlpoly::ParseError);
}

TEST_CASE("index zero is 1/a^k for every family") {
  for (long k : {-2L, 0L, 1L, 3L}) {
    Params p(k, q(3, 2), q(2, 5));
    Rational expected = hlpoly::pow(q(2, 5), -k);
    for (auto f : kFamilies) {
      CHECK(hlpoly::explicit_value(f, 0, p) == expected);
      CHECK(hlpoly::oracle_sequence(f, 0, p) == std::vector<Rational>{expected});
    }
  }
}

TEST_CASE("explicit formula fixtures") {
  CHECK(hlpoly::poly_bernoulli(2, classical(1)) == q(1, 6));
  CHECK(hlpoly::poly_bernoulli(3, classical(1)) == 0);
  CHECK(hlpoly::poly_cauchy1(2, classical(1)) == q(-1, 6));
  CHECK(hlpoly::poly_cauchy1(3, Params(1, Rational(2), Rational(1))) == q(22, 105));
  CHECK(hlpoly::poly_cauchy2(1, classical(1)) == q(-1, 2));
  CHECK(hlpoly::poly_cauchy2(2, classical(1)) == q(5, 6));
  CHECK_THROWS_AS(hlpoly::poly_bernoulli(3, Params(1, Rational(1), Rational(-2))), hlpoly::SingularParameter);
  CHECK_THROWS_AS(hlpoly::poly_cauchy1(-1, classical(1)), std::invalid_argument);
}

TEST_CASE("oracle fixtures") {
  CHECK(hlpoly::oracle_sequence(Family::poly_bernoulli, 3, classical(1)) == qs({{1, 1}, {1, 2}, {1, 6}, {0, 1}}));
  CHECK(hlpoly::oracle_sequence(Family::poly_cauchy_first, 3, classical(1)) ==
        qs({{1, 1}, {1, 2}, {-1, 6}, {1, 4}}));
  CHECK_THROWS_AS(hlpoly::oracle_sequence(Family::poly_cauchy_second, 4, Params(1, Rational(1), Rational(-2))),
                  hlpoly::SingularParameter);
}

// Values from a symbolic series expansion of the defining generating
// functions, frozen here.
TEST_CASE("classical specialization alpha = a = 1") {
  const std::vector<Rational> bernoulli[] = {
      qs({{1, 1}, {1, 2}, {1, 6}, {0, 1}, {-1, 30}, {0, 1}, {1, 42}, {0, 1}, {-1, 30}}),
      qs({{1, 1}, {1, 4}, {-1, 36}, {-1, 24}, {7, 450}, {1, 40}, {-38, 2205}, {-5, 168}, {11, 350}}),
      qs({{1, 1}, {1, 8}, {-11, 216}, {-1, 288}, {1243, 54000}, {-49, 7200}, {-75613, 3704400}, {599, 35280},
          {234671, 7938000}}),
  };
  const std::vector<Rational> cauchy1[] = {
      qs({{1, 1}, {1, 2}, {-1, 6}, {1, 4}, {-19, 30}, {9, 4}, {-863, 84}, {1375, 24}, {-33953, 90}}),
      qs({{1, 1}, {1, 4}, {-5, 36}, {11, 48}, {-1103, 1800}, {1627, 720}, {-374473, 35280}, {1220651, 20160},
          {-92146157, 226800}}),
      qs({{1, 1}, {1, 8}, {-19, 216}, {89, 576}, {-46261, 108000}, {23323, 14400}, {-114895757, 14817600},
          {760567603, 16934400}, {-174446569403, 571536000}}),
  };
  const std::vector<Rational> cauchy2[] = {
      qs({{1, 1}, {-1, 2}, {5, 6}, {-9, 4}, {251, 30}, {-475, 12}, {19087, 84}, {-36799, 24}, {1070017, 90}}),
      qs({{1, 1}, {-1, 4}, {13, 36}, {-43, 48}, {5647, 1800}, {-3401, 240}, {2763977, 35280}, {-10326059, 20160},
          {876576493, 226800}}),
      qs({{1, 1}, {-1, 8}, {35, 216}, {-217, 576}, {135989, 108000}, {-236881, 43200}, {435876493, 14817600},
          {-3174551347, 16934400}, {790667708347, 571536000}}),
  };
  for (long k = 1; k <= 3; ++k) {
    auto i = static_cast<std::size_t>(k - 1);
    CHECK(hlpoly::oracle_sequence(Family::poly_bernoulli, 8, classical(k)) == bernoulli[i]);
    CHECK(hlpoly::oracle_sequence(Family::poly_cauchy_first, 8, classical(k)) == cauchy1[i]);
    CHECK(hlpoly::oracle_sequence(Family::poly_cauchy_second, 8, classical(k)) == cauchy2[i]);
  }
}

TEST_CASE("k = 1 Cauchy numbers are integrals of falling factorials") {
  for (int n = 0; n <= 14; ++n) {
    auto c1 = brute::cauchy_integral(n, 1);
    auto c2 = brute::cauchy_integral(n, -1);
    CHECK(hlpoly::poly_cauchy1(n, classical(1)) == Rational(c1.get_num(), c1.get_den()));
    CHECK(hlpoly::poly_cauchy2(n, classical(1)) == Rational(c2.get_num(), c2.get_den()));
  }
}

TEST_CASE("negative k at alpha = a = 1: B_n^(-1) = 2^n and the duality B_n^(-k) = B_k^(-n)") {
  for (int n = 0; n <= 10; ++n) {
    CHECK(hlpoly::poly_bernoulli(n, classical(-1)) == Rational(hlpoly::BigInt(1) << static_cast<unsigned>(n)));
    for (int k = 0; k <= 6; ++k) CHECK(hlpoly::poly_bernoulli(n, classical(-k)) == hlpoly::poly_bernoulli(k, classical(-n)));
  }
}

TEST_CASE("other parameter points match frozen symbolic expansions") {
  CHECK(hlpoly::oracle_sequence(Family::poly_cauchy_first, 4, Params(1, Rational(2), Rational(1))) ==
        qs({{1, 1}, {1, 3}, {-2, 15}, {22, 105}, {-172, 315}}));
  CHECK(hlpoly::oracle_sequence(Family::poly_cauchy_first, 5, Params(2, q(1, 2), Rational(1))) ==
        qs({{1, 1}, {4, 9}, {-7, 36}, {269, 900}, {-689, 900}, {12071, 4410}}));
  CHECK(hlpoly::oracle_sequence(Family::poly_bernoulli, 5, Params(-2, Rational(3), q(1, 3))) ==
        qs({{1, 9}, {100, 9}, {622, 9}, {2638, 9}, {9586, 9}, {32230, 9}}));
  CHECK(hlpoly::oracle_sequence(Family::poly_cauchy_second, 5, Params(3, Rational(1), q(5, 2))) ==
        qs({{8, 125},
            {-8, 343},
            {8576, 250047},
            {-9493984, 110937519},
            {219619572320, 731189187729},
            {-124084214005216, 91398648466125}}));
}

TEST_CASE("explicit formulas equal the generating-function oracle on the standard grid") {
  for (auto f : kFamilies) {
    for (long k = -2; k <= 3; ++k) {
      for (const auto& [alpha, a] : kGridPoints) {
        Params p(k, alpha, a);
        CHECK(hlpoly::explicit_sequence(f, 12, p) == hlpoly::oracle_sequence(f, 12, p));
      }
    }
  }
}

TEST_CASE("k = 0 loses the parameter dependence") {
  // (-1)^n sum_m (-1)^m [n m] is the falling factorial (1)_n
  for (const auto& [alpha, a] : kGridPoints) {
    Params p(0, alpha, a);
    for (int n = 0; n <= 10; ++n) {
      hlpoly::BigInt direct = 0;
      for (int m = 0; m <= n; ++m) direct += hlpoly::sign_power(n + m) * brute::stirling1(n, m);
      CHECK(hlpoly::poly_cauchy1(n, p) == Rational(direct));
      CHECK(hlpoly::poly_cauchy1(n, p) == Rational(n <= 1 ? 1 : 0));
      CHECK(hlpoly::poly_bernoulli(n, p) == hlpoly::poly_bernoulli(n, classical(0)));
      CHECK(hlpoly::poly_cauchy2(n, p) == hlpoly::poly_cauchy2(n, classical(0)));
    }
  }
}

TEST_CASE("printed derivative coefficients") {
  auto d = hlpoly::deriv_coeffs_printed(Family::poly_cauchy_first, 1, classical(1));
  CHECK(d[0] == 0);
  CHECK(d[1] == q(1, 2));
  CHECK(hlpoly::deriv_coeffs_printed(Family::poly_bernoulli, 0, classical(1))[0] == q(1, 2));
  CHECK(hlpoly::deriv_coeffs_printed(Family::poly_cauchy_second, 6, classical(2)) ==
        hlpoly::deriv_coeffs_printed(Family::poly_cauchy_first, 6, classical(2)));
  // Bernoulli variant reaches one index further
  CHECK_NOTHROW(hlpoly::deriv_coeffs_printed(Family::poly_cauchy_first, 2, Params(1, Rational(1), Rational(-3))));
  CHECK_THROWS_AS(hlpoly::deriv_coeffs_printed(Family::poly_bernoulli, 2, Params(1, Rational(1), Rational(-3))),
                  hlpoly::SingularParameter);
}

TEST_CASE("oracle derivative coefficients") {
  CHECK(hlpoly::deriv_coeffs_oracle(Family::poly_cauchy_first, 5, classical(1)) ==
        qs({{1, 2}, {1, 3}, {-1, 12}, {7, 60}, {-17, 60}, {41, 42}}));
  CHECK(hlpoly::deriv_coeffs_oracle(Family::poly_cauchy_second, 5, classical(1)) ==
        qs({{-1, 2}, {1, 3}, {-7, 12}, {97, 60}, {-367, 60}, {1231, 42}}));
  CHECK(hlpoly::deriv_coeffs_oracle(Family::poly_bernoulli, 5, classical(1)) ==
        qs({{1, 2}, {2, 3}, {5, 6}, {29, 30}, {31, 30}, {43, 42}}));
}

TEST_CASE("oracle derivative coefficients reproduce G' through the stated prefactor") {
  for (auto f : kFamilies) {
    for (long k : {-1L, 1L, 2L}) {
      for (const auto& [alpha, a] : kGridPoints) {
        Params p(k, alpha, a);
        const int n_max = 9;
        auto d = hlpoly::deriv_coeffs_oracle(f, n_max, p);
        auto prefactor = f == Family::poly_bernoulli ? hlpoly::kernel(hlpoly::Kernel::exp_neg, n_max)
                                                     : hlpoly::kernel(hlpoly::Kernel::geom_1_over_1_plus_t, n_max);
        auto rebuilt = prefactor * hlpoly::PowerSeries::from_egf(d);
        CHECK(rebuilt == hlpoly::derivative(hlpoly::generating_function(f, n_max + 1, p)));
      }
    }
  }
}
