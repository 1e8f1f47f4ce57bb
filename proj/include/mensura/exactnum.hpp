#pragma once

// Exact scalars for mensuration: GMP rationals, rational multiples of a
// single square root, and a fixed-point decimal used when surds cannot be
// combined exactly.

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include "mensura/error.hpp"

namespace mensura {

using BigInt = mpz_class;
using Rational = mpq_class;

/// floor(sqrt(n)). Throws NegativeRadicand for n < 0.
BigInt isqrt(const BigInt& n);

/// Splits n > 0 into {s, f} with n = s*s*f and f squarefree.
std::pair<BigInt, BigInt> square_part(const BigInt& n);

bool is_squarefree(const BigInt& n);

/// Parses an integer or a finite decimal ("14", "-2.75", "0.125") exactly.
/// Throws std::invalid_argument on anything else.
Rational parse_decimal(std::string_view text);

/// coefficient * sqrt(radicand), radicand squarefree. radicand == 1 exactly
/// when the value is rational; zero is stored as 0 * sqrt(1).
class Surd {
 public:
  Surd() = default;
  Surd(long value) : coefficient_(value) {}  // NOLINT(google-explicit-constructor)
  Surd(const Rational& value) : coefficient_(value) {  // NOLINT(google-explicit-constructor)
    coefficient_.canonicalize();
  }

  /// sqrt(value) for value >= 0, normalized.
  static Surd sqrt(const Rational& value);

  const Rational& coefficient() const { return coefficient_; }
  const BigInt& radicand() const { return radicand_; }

  bool is_rational() const { return radicand_ == 1; }
  bool is_zero() const { return sgn(coefficient_) == 0; }
  int sign() const { return sgn(coefficient_); }

  /// The exact square, which is always rational.
  Rational square() const { return coefficient_ * coefficient_ * radicand_; }

  /// Throws IncompatibleRadicands when the value is irrational.
  Rational to_rational() const;

  /// "30√22", "(1/2)√3", "-√2", "143/4", "7".
  std::string to_string() const;

  Surd operator-() const;

  friend bool operator==(const Surd& a, const Surd& b) {
    return a.radicand_ == b.radicand_ && a.coefficient_ == b.coefficient_;
  }
  friend std::strong_ordering operator<=>(const Surd& a, const Surd& b);

 private:
  friend Surd normalize_surd(const Rational& coefficient, const BigInt& radicand);
  friend Surd surd_mul(const Surd& a, const Surd& b);
  friend Surd surd_add(const Surd& a, const Surd& b);

  Rational coefficient_{0};
  BigInt radicand_{1};
};

using ExactScalar = Surd;

/// Moves every square factor of radicand into the coefficient. A zero
/// radicand or coefficient yields 0 * sqrt(1); a negative radicand throws
/// NegativeRadicand.
Surd normalize_surd(const Rational& coefficient, const BigInt& radicand);

Surd surd_mul(const Surd& a, const Surd& b);

/// Requires equal radicands unless one operand is zero; otherwise throws
/// IncompatibleRadicands.
Surd surd_add(const Surd& a, const Surd& b);

/// Exact comparison by sign and then by comparing squares.
std::strong_ordering surd_cmp(const Surd& a, const Surd& b);

inline Surd operator*(const Surd& a, const Surd& b) { return surd_mul(a, b); }
inline Surd operator+(const Surd& a, const Surd& b) { return surd_add(a, b); }
inline Surd operator-(const Surd& a, const Surd& b) { return surd_add(a, -b); }
/// Throws std::domain_error when b is zero.
Surd operator/(const Surd& a, const Surd& b);

/// Fixed-point decimal: value = scaled / 10^scale() where scale() carries a
/// few guard digits past the requested significant-digit count. Every
/// operation truncates toward zero.
class ApproxScalar {
 public:
  static constexpr int kDefaultDigits = 50;
  static constexpr int kGuardDigits = 10;

  ApproxScalar() = default;
  ApproxScalar(BigInt scaled, int digits);

  /// 10^exponent at the given precision; used to build tolerances.
  static ApproxScalar power_of_ten(int exponent, int digits = kDefaultDigits);
  /// Parses a decimal literal; truncates past scale().
  static ApproxScalar parse(std::string_view text, int digits = kDefaultDigits);

  int digits() const { return digits_; }
  int scale() const { return digits_ + kGuardDigits; }
  const BigInt& scaled() const { return scaled_; }
  int sign() const { return sgn(scaled_); }

  ApproxScalar abs() const;
  /// Throws NegativeRadicand for negative values.
  ApproxScalar sqrt() const;
  ApproxScalar with_digits(int digits) const;

  /// Sign, integer part, '.', fraction; `digits()` significant digits
  /// (at least one fraction digit), truncated, no exponent.
  std::string to_string() const;
  /// Exactly `fraction_digits` digits after the point, truncated.
  std::string to_fixed(int fraction_digits) const;

  ApproxScalar operator-() const;
  friend ApproxScalar operator+(const ApproxScalar& a, const ApproxScalar& b);
  friend ApproxScalar operator-(const ApproxScalar& a, const ApproxScalar& b);
  friend ApproxScalar operator*(const ApproxScalar& a, const ApproxScalar& b);
  /// Throws std::domain_error when b is zero.
  friend ApproxScalar operator/(const ApproxScalar& a, const ApproxScalar& b);

  friend bool operator==(const ApproxScalar& a, const ApproxScalar& b);
  friend std::strong_ordering operator<=>(const ApproxScalar& a, const ApproxScalar& b);

 private:
  BigInt scaled_{0};
  int digits_{kDefaultDigits};
};

ApproxScalar approx(const Surd& value, int digits = ApproxScalar::kDefaultDigits);
ApproxScalar approx(const Rational& value, int digits = ApproxScalar::kDefaultDigits);
/// sqrt(value) without normalizing the radicand first.
ApproxScalar approx_sqrt(const Rational& value, int digits = ApproxScalar::kDefaultDigits);

/// |a - b| <= tolerance.
bool within(const ApproxScalar& a, const ApproxScalar& b, const ApproxScalar& tolerance);

}  // namespace mensura
