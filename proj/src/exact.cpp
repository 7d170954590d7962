#include "hlpoly/exact.hpp"

#include <ostream>
#include <stdexcept>

namespace hlpoly {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

void check_operands(std::uint32_t a, std::uint32_t b) {
  if (a != b) throw std::invalid_argument("residues with different moduli");
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in rational: '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  int c = cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().get_str();
  return numerator().get_str() + "/" + denominator().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow(const Rational& base, long k) {
  if (k == 0) return Rational(1);
  if (base.is_zero()) {
    if (k < 0) throw DivisionByZero();
    return Rational(0);
  }
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
  return k < 0 ? Rational(den, num) : Rational(num, den);
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint32_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_prime(std::uint32_t p) {
  if (p >= kMaxModulus) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " exceeds supported range");
  }
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

ResidueModP::ResidueModP(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  require_prime(modulus);
  std::int64_t r = value % static_cast<std::int64_t>(modulus);
  if (r < 0) r += modulus;
  value_ = static_cast<std::uint32_t>(r);
}

ResidueModP ResidueModP::inverse() const {
  if (value_ == 0) throw DivisionByZero();
  // Extended Euclid on (value, p).
  std::int64_t r0 = modulus_, r1 = value_;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  std::int64_t inv = s0 % static_cast<std::int64_t>(modulus_);
  if (inv < 0) inv += modulus_;
  return ResidueModP(static_cast<std::uint32_t>(inv), modulus_, Unchecked{});
}

ResidueModP operator+(const ResidueModP& lhs, const ResidueModP& rhs) {
  check_operands(lhs.modulus_, rhs.modulus_);
  return ResidueModP((lhs.value_ + rhs.value_) % lhs.modulus_, lhs.modulus_, ResidueModP::Unchecked{});
}

ResidueModP operator-(const ResidueModP& lhs, const ResidueModP& rhs) {
  check_operands(lhs.modulus_, rhs.modulus_);
  return ResidueModP((lhs.value_ + lhs.modulus_ - rhs.value_) % lhs.modulus_, lhs.modulus_,
                     ResidueModP::Unchecked{});
}

ResidueModP operator*(const ResidueModP& lhs, const ResidueModP& rhs) {
  check_operands(lhs.modulus_, rhs.modulus_);
  auto v = static_cast<std::uint64_t>(lhs.value_) * rhs.value_ % lhs.modulus_;
  return ResidueModP(static_cast<std::uint32_t>(v), lhs.modulus_, ResidueModP::Unchecked{});
}

ResidueModP mod_reduce(const Rational& r, std::uint32_t p) {
  require_prime(p);
  BigInt reduced_den = r.denominator() % p;
  if (reduced_den == 0) {
    throw NonReducibleDenominator(r.to_string() + " has a denominator divisible by " + std::to_string(p));
  }
  BigInt reduced_num = r.numerator() % p;  // sign follows the numerator
  ResidueModP num(reduced_num.get_si(), p);
  ResidueModP den(reduced_den.get_si(), p);
  return num * den.inverse();
}

}  // namespace hlpoly
