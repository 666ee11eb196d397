#include "walklab/exact_numerics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>

#include "walklab/errors.hpp"

namespace walklab {

namespace {

bool is_signed_decimal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  return !text.empty() &&
         std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

BigInteger BigInteger::parse(std::string_view text) {
  if (!is_signed_decimal(text)) {
    throw DomainError("not an integer: '" + std::string(text) + "'");
  }
  if (text.front() == '+') {
    text.remove_prefix(1);
  }
  return BigInteger(mpz_class(std::string(text), 10));
}

std::int64_t BigInteger::to_int64() const {
  if (!fits_int64()) {
    throw DomainError("integer does not fit in 64 bits: " + to_string());
  }
  return value_.get_si();
}

std::size_t BigInteger::bit_length() const {
  return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

BigInteger BigInteger::pow(unsigned long exponent) const {
  mpz_class result;
  mpz_pow_ui(result.get_mpz_t(), value_.get_mpz_t(), exponent);
  return BigInteger(std::move(result));
}

BigInteger& BigInteger::operator/=(const BigInteger& rhs) {
  if (rhs.is_zero()) {
    throw DomainError("integer division by zero");
  }
  mpz_tdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

BigInteger& BigInteger::operator%=(const BigInteger& rhs) {
  if (rhs.is_zero()) {
    throw DomainError("integer division by zero");
  }
  mpz_tdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigInteger& value) { return os << value.to_string(); }

BigInteger gcd(const BigInteger& a, const BigInteger& b) {
  mpz_class result;
  mpz_gcd(result.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInteger(std::move(result));
}

ExactRational::ExactRational(const BigInteger& numerator, const BigInteger& denominator) {
  if (denominator.is_zero()) {
    throw DomainError("rational with zero denominator");
  }
  value_ = mpq_class(numerator.mpz(), denominator.mpz());
  value_.canonicalize();
}

ExactRational::ExactRational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

ExactRational ExactRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return ExactRational(BigInteger::parse(text));
  }
  return ExactRational(BigInteger::parse(text.substr(0, slash)), BigInteger::parse(text.substr(slash + 1)));
}

double ExactRational::to_double() const {
  if (is_zero()) {
    return 0.0;
  }
  // Scale |num/den| into [2^53, 2^55), divide, then round the quotient to 53
  // bits with the remainder as sticky bit.
  const mpz_class num = ::abs(value_.get_num());
  const mpz_class& den = value_.get_den();
  const long shift = 54 - (static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)));
  mpz_class scaled_num = num;
  mpz_class scaled_den = den;
  if (shift >= 0) {
    mpz_mul_2exp(scaled_num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(shift));
  } else {
    mpz_mul_2exp(scaled_den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(-shift));
  }
  mpz_class quotient;
  mpz_class remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());

  const auto drop = static_cast<unsigned long>(mpz_sizeinbase(quotient.get_mpz_t(), 2) - 53);
  mpz_class kept;
  mpz_tdiv_q_2exp(kept.get_mpz_t(), quotient.get_mpz_t(), drop);
  mpz_class dropped;
  mpz_tdiv_r_2exp(dropped.get_mpz_t(), quotient.get_mpz_t(), drop);
  mpz_class half;
  mpz_setbit(half.get_mpz_t(), drop - 1);
  const int against_half = cmp(dropped, half);
  if (against_half > 0 || (against_half == 0 && (remainder != 0 || mpz_odd_p(kept.get_mpz_t())))) {
    kept += 1;
  }

  const long exponent = static_cast<long>(drop) - shift;
  double magnitude;
  if (exponent > std::numeric_limits<double>::max_exponent) {
    magnitude = std::numeric_limits<double>::infinity();
  } else if (exponent < -2 * std::numeric_limits<double>::max_exponent) {
    magnitude = 0.0;
  } else {
    magnitude = std::ldexp(kept.get_d(), static_cast<int>(exponent));
  }
  return sign() < 0 ? -magnitude : magnitude;
}

std::string ExactRational::to_string() const {
  if (is_integer()) {
    return value_.get_num().get_str(10);
  }
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

ExactRational ExactRational::reciprocal() const {
  if (is_zero()) {
    throw DomainError("reciprocal of zero");
  }
  return ExactRational(mpq_class(1 / value_));
}

ExactRational ExactRational::pow(std::int64_t exponent) const {
  if (exponent < 0) {
    return reciprocal().pow(-exponent);
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  // Powers of coprime parts stay coprime.
  mpq_class result;
  mpz_swap(result.get_num_mpz_t(), num.get_mpz_t());
  mpz_swap(result.get_den_mpz_t(), den.get_mpz_t());
  return ExactRational(result);
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.is_zero()) {
    throw DomainError("rational division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& value) { return os << value.to_string(); }

BigInteger binomial(std::int64_t n, std::int64_t l) {
  if (n < 0) {
    throw DomainError("binomial: n must be nonnegative");
  }
  if (l < 0 || l > n) {
    return BigInteger(0);
  }
  const std::int64_t m = std::min(l, n - l);
  // C(n-m+i, i) after step i; each division is exact.
  mpz_class result = 1;
  for (std::int64_t i = 1; i <= m; ++i) {
    result *= static_cast<unsigned long>(n - m + i);
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return BigInteger(std::move(result));
}

ExactRational generalized_binomial(const ExactRational& alpha, std::int64_t l) {
  if (l < 0) {
    throw DomainError("generalized_binomial: l must be nonnegative");
  }
  ExactRational result(1);
  for (std::int64_t i = 0; i < l; ++i) {
    result *= alpha - ExactRational(i);
    result /= ExactRational(i + 1);
  }
  return result;
}

BigInteger factorial(std::int64_t n) {
  if (n < 0) {
    throw DomainError("factorial: n must be nonnegative");
  }
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return BigInteger(std::move(result));
}

}  // namespace walklab
