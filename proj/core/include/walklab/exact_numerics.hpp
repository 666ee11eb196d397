#pragma once

// Arbitrary-precision integers and rationals, plus the exact binomial
// coefficients every other module builds on.
//
// BigInteger and ExactRational are value types over GMP. ExactRational is
// canonical at all times: lowest terms, positive denominator, zero is 0/1.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace walklab {

class BigInteger {
 public:
  BigInteger() = default;
  BigInteger(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  explicit BigInteger(const mpz_class& value) : value_(value) {}
  explicit BigInteger(mpz_class&& value) : value_(std::move(value)) {}

  /// Parses an optionally signed base-10 integer. Throws DomainError on malformed input.
  static BigInteger parse(std::string_view text);

  /// -1, 0 or +1.
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool fits_int64() const { return value_.fits_slong_p(); }
  std::int64_t to_int64() const;
  double to_double() const { return value_.get_d(); }
  std::size_t bit_length() const;
  std::string to_string() const { return value_.get_str(10); }

  BigInteger abs() const { return BigInteger(mpz_class(::abs(value_))); }
  BigInteger pow(unsigned long exponent) const;

  const mpz_class& mpz() const { return value_; }

  BigInteger& operator+=(const BigInteger& rhs) { value_ += rhs.value_; return *this; }
  BigInteger& operator-=(const BigInteger& rhs) { value_ -= rhs.value_; return *this; }
  BigInteger& operator*=(const BigInteger& rhs) { value_ *= rhs.value_; return *this; }
  /// Truncating division. Throws DomainError on division by zero.
  BigInteger& operator/=(const BigInteger& rhs);
  BigInteger& operator%=(const BigInteger& rhs);

  friend BigInteger operator+(BigInteger lhs, const BigInteger& rhs) { return lhs += rhs; }
  friend BigInteger operator-(BigInteger lhs, const BigInteger& rhs) { return lhs -= rhs; }
  friend BigInteger operator*(BigInteger lhs, const BigInteger& rhs) { return lhs *= rhs; }
  friend BigInteger operator/(BigInteger lhs, const BigInteger& rhs) { return lhs /= rhs; }
  friend BigInteger operator%(BigInteger lhs, const BigInteger& rhs) { return lhs %= rhs; }
  BigInteger operator-() const { return BigInteger(mpz_class(-value_)); }

  friend bool operator==(const BigInteger& a, const BigInteger& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const BigInteger& a, const BigInteger& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpz_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigInteger& value);

BigInteger gcd(const BigInteger& a, const BigInteger& b);

class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  ExactRational(const BigInteger& value) : value_(value.mpz()) {}  // NOLINT(google-explicit-constructor)
  /// Throws DomainError when `denominator` is zero.
  ExactRational(const BigInteger& numerator, const BigInteger& denominator);
  ExactRational(std::int64_t numerator, std::int64_t denominator)
      : ExactRational(BigInteger(numerator), BigInteger(denominator)) {}
  explicit ExactRational(const mpq_class& value);

  /// Accepts "a", "-a", "a/b" (b != 0). Throws DomainError otherwise.
  static ExactRational parse(std::string_view text);

  BigInteger numerator() const { return BigInteger(value_.get_num()); }
  BigInteger denominator() const { return BigInteger(value_.get_den()); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Nearest double (ties to even) for values in the normal range.
  double to_double() const;
  /// "n" for integers, otherwise "n/d".
  std::string to_string() const;

  ExactRational abs() const { return ExactRational(mpq_class(::abs(value_))); }
  ExactRational reciprocal() const;
  /// Integer power; negative exponents invert (zero base then throws DomainError).
  ExactRational pow(std::int64_t exponent) const;

  const mpq_class& mpq() const { return value_; }

  ExactRational& operator+=(const ExactRational& rhs) { value_ += rhs.value_; return *this; }
  ExactRational& operator-=(const ExactRational& rhs) { value_ -= rhs.value_; return *this; }
  ExactRational& operator*=(const ExactRational& rhs) { value_ *= rhs.value_; return *this; }
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
  ExactRational operator-() const { return ExactRational(mpq_class(-value_)); }

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& value);

/// C(n, l). Zero for l < 0 or l > n. Throws DomainError for n < 0.
BigInteger binomial(std::int64_t n, std::int64_t l);

/// alpha (alpha-1) ... (alpha-l+1) / l!, with the empty product 1 at l = 0.
/// Throws DomainError for l < 0.
ExactRational generalized_binomial(const ExactRational& alpha, std::int64_t l);

/// n!. Throws DomainError for n < 0.
BigInteger factorial(std::int64_t n);

}  // namespace walklab
