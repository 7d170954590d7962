#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "hlpoly/errors.hpp"

namespace hlpoly {

using BigInt = mpz_class;

/// Exact fraction, always stored in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  template <std::unsigned_integral U>
  Rational(U v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  /// Throws DivisionByZero when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "p/q" or a bare integer, optional leading '-', q > 0.
  static Rational parse(std::string_view text);

  const BigInt& numerator() const { return value_.get_num(); }
  const BigInt& denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  /// "num/den", with "/den" omitted for integers.
  std::string to_string() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// base^k for any integer k. Throws DivisionByZero for 0 raised to a negative power.
Rational pow(const Rational& base, long k);

BigInt factorial(unsigned long n);

/// (-1)^e as +1 or -1.
constexpr int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

inline constexpr std::uint32_t kMaxModulus = 1u << 16;

/// Deterministic trial division; meant for the small moduli used here.
bool is_prime(std::uint32_t p);

/// Throws std::invalid_argument unless p is a prime below kMaxModulus.
void require_prime(std::uint32_t p);

/// Element of Z/pZ for a prime p < 2^16.
class ResidueModP {
 public:
  /// Reduces value into [0, p). Throws std::invalid_argument for non-prime p.
  ResidueModP(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  /// Throws DivisionByZero for the zero residue.
  ResidueModP inverse() const;

  friend ResidueModP operator+(const ResidueModP& lhs, const ResidueModP& rhs);
  friend ResidueModP operator-(const ResidueModP& lhs, const ResidueModP& rhs);
  friend ResidueModP operator*(const ResidueModP& lhs, const ResidueModP& rhs);
  friend bool operator==(const ResidueModP&, const ResidueModP&) = default;

 private:
  struct Unchecked {};
  ResidueModP(std::uint32_t value, std::uint32_t modulus, Unchecked) : value_(value), modulus_(modulus) {}

  std::uint32_t value_;
  std::uint32_t modulus_;
};

/// numerator * denominator^{-1} mod p.
/// Throws NonReducibleDenominator if p divides the denominator.
ResidueModP mod_reduce(const Rational& r, std::uint32_t p);

}  // namespace hlpoly
