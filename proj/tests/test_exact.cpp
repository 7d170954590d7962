#include <doctest.h>

#include <random>

#include "hlpoly/exact.hpp"

using hlpoly::Rational;
using hlpoly::ResidueModP;

namespace {

Rational q(long n, long d) { return Rational(hlpoly::BigInt(n), hlpoly::BigInt(d)); }

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 30);
  return q(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational arithmetic fixtures") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK(q(2, 3) * q(3, 2) == Rational(1));
  CHECK(q(1, 2) - q(1, 2) == Rational(0));
  CHECK(q(3, 4) / q(3, 8) == Rational(2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), hlpoly::DivisionByZero);
  CHECK_THROWS_AS(Rational(hlpoly::BigInt(1), hlpoly::BigInt(0)), hlpoly::DivisionByZero);
}

TEST_CASE("rationals are stored normalized") {
  Rational r = q(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  Rational zero = q(0, 17);
  CHECK(zero.denominator() == 1);
  CHECK(zero.to_string() == "0");
  CHECK(q(-22, 105).to_string() == "-22/105");
  CHECK(Rational(7).to_string() == "7");
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("5/2") == q(5, 2));
  CHECK(Rational::parse("-1/3") == q(-1, 3));
  CHECK(Rational::parse("4/6") == q(2, 3));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational::parse("-0") == Rational(0));
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "1/-2", "a", "1.5", " 1", "1/2/3", "--1", "+1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), hlpoly::ParseError);
  }
}

TEST_CASE("rational ordering") {
  CHECK(q(1, 3) < q(1, 2));
  CHECK(q(-1, 2) < Rational(0));
  CHECK((q(2, 4) <=> q(1, 2)) == std::strong_ordering::equal);
}

TEST_CASE("pow with integer exponents") {
  CHECK(hlpoly::pow(q(2, 3), -2) == q(9, 4));
  CHECK(hlpoly::pow(q(5, 7), 0) == Rational(1));
  CHECK(hlpoly::pow(q(1, 2), 3) == q(1, 8));
  CHECK(hlpoly::pow(q(-1, 2), 3) == q(-1, 8));
  CHECK(hlpoly::pow(q(-3, 2), -1) == q(-2, 3));
  CHECK(hlpoly::pow(Rational(0), 0) == Rational(1));
  CHECK(hlpoly::pow(Rational(0), 2) == Rational(0));
  CHECK_THROWS_AS(hlpoly::pow(Rational(0), -1), hlpoly::DivisionByZero);
}

TEST_CASE("factorial") {
  CHECK(hlpoly::factorial(0) == 1);
  CHECK(hlpoly::factorial(5) == 120);
  CHECK(hlpoly::factorial(10) == 3628800);
  CHECK(hlpoly::factorial(25).get_str() == "15511210043330985984000000");
}

TEST_CASE("primality at desk scale") {
  CHECK_FALSE(hlpoly::is_prime(0));
  CHECK_FALSE(hlpoly::is_prime(1));
  CHECK(hlpoly::is_prime(2));
  CHECK(hlpoly::is_prime(3));
  CHECK_FALSE(hlpoly::is_prime(9));
  CHECK(hlpoly::is_prime(65521));
  CHECK_FALSE(hlpoly::is_prime(65535));
  CHECK_THROWS_AS(hlpoly::require_prime(4), std::invalid_argument);
  CHECK_THROWS_AS(hlpoly::require_prime(65537), std::invalid_argument);
  CHECK_THROWS_AS(ResidueModP(1, 6), std::invalid_argument);
}

TEST_CASE("mod_reduce fixtures") {
  CHECK(hlpoly::mod_reduce(q(1, 4), 3).value() == 1);
  CHECK_THROWS_AS(hlpoly::mod_reduce(q(22, 105), 3), hlpoly::NonReducibleDenominator);
  CHECK(hlpoly::mod_reduce(Rational(0), 5).value() == 0);
  CHECK(hlpoly::mod_reduce(q(-1, 2), 5).value() == 2);  // 2*2 = 4 = -1
  CHECK(hlpoly::mod_reduce(Rational(-7), 5).value() == 3);
  CHECK_THROWS_AS(hlpoly::mod_reduce(q(1, 2), 4), std::invalid_argument);
}

TEST_CASE("residue inverse by brute force") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 101u}) {
    for (std::uint32_t v = 1; v < p; ++v) {
      ResidueModP x(v, p);
      std::uint32_t expected = 0;
      for (std::uint32_t c = 1; c < p; ++c) {
        if (v * c % p == 1) expected = c;
      }
      CHECK(x.inverse().value() == expected);
    }
    CHECK_THROWS_AS(ResidueModP(0, p).inverse(), hlpoly::DivisionByZero);
  }
}

TEST_CASE("property: field axioms on random rationals") {
  std::mt19937 rng(20261014);
  for (int trial = 0; trial < 500; ++trial) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a.denominator() > 0);
  }
}

TEST_CASE("property: pow(x, k) * pow(x, -k) == 1") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Rational x = random_rational(rng);
    if (x.is_zero()) continue;
    long k = std::uniform_int_distribution<long>(-6, 6)(rng);
    CHECK(hlpoly::pow(x, k) * hlpoly::pow(x, -k) == Rational(1));
  }
}

TEST_CASE("property: mod_reduce is additive and multiplicative where defined") {
  std::mt19937 rng(11);
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    for (int trial = 0; trial < 300; ++trial) {
      Rational a = random_rational(rng), b = random_rational(rng);
      try {
        auto ra = hlpoly::mod_reduce(a, p);
        auto rb = hlpoly::mod_reduce(b, p);
        CHECK(hlpoly::mod_reduce(a + b, p) == ra + rb);
        CHECK(hlpoly::mod_reduce(a * b, p) == ra * rb);
        CHECK(hlpoly::mod_reduce(a - b, p) == ra - rb);
      } catch (const hlpoly::NonReducibleDenominator&) {
        // a or b has p in its denominator; nothing to compare
      }
    }
  }
}
