#include "mensura/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace mensura {
namespace {

BigInt pow10(unsigned long exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

Surd scaled(const Surd& value, const Rational& factor) {
  return surd_mul(value, Surd(factor));
}

BigInt rescale(const BigInt& value, int from_digits, int to_digits) {
  if (to_digits >= from_digits) return value * pow10(to_digits - from_digits);
  return value / pow10(from_digits - to_digits);
}

}  // namespace

BigInt isqrt(const BigInt& n) {
  if (sgn(n) < 0) throw NegativeRadicand("isqrt of a negative integer");
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

Rational parse_decimal(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  const auto dot = rest.find('.');
  const std::string_view whole = rest.substr(0, dot);
  const std::string_view fraction =
      dot == std::string_view::npos ? std::string_view{} : rest.substr(dot + 1);
  auto all_digits = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
  };
  if ((whole.empty() && fraction.empty()) || !all_digits(whole) || !all_digits(fraction) ||
      (dot != std::string_view::npos && fraction.empty())) {
    throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
  }
  BigInt numerator(std::string(whole.empty() ? "0" : whole) + std::string(fraction), 10);
  Rational value(numerator, pow10(fraction.size()));
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

// ---------------------------------------------------------------------------
// Surd

Surd normalize_surd(const Rational& coefficient, const BigInt& radicand) {
  if (sgn(radicand) < 0) throw NegativeRadicand("negative radicand " + radicand.get_str());
  Surd result;
  if (sgn(radicand) == 0 || sgn(coefficient) == 0) return result;
  auto [square_root, squarefree] = square_part(radicand);
  result.coefficient_ = coefficient * square_root;
  result.coefficient_.canonicalize();
  result.radicand_ = std::move(squarefree);
  return result;
}

Surd Surd::sqrt(const Rational& value) {
  if (sgn(value) < 0) throw NegativeRadicand("sqrt of negative value " + value.get_str());
  // sqrt(p/q) = sqrt(p*q) / q
  return normalize_surd(Rational(1, value.get_den()), value.get_num() * value.get_den());
}

Rational Surd::to_rational() const {
  if (!is_rational()) throw IncompatibleRadicands(to_string() + " is irrational");
  return coefficient_;
}

std::string Surd::to_string() const {
  if (is_rational()) return coefficient_.get_str();
  std::string out;
  if (coefficient_ == 1) {
  } else if (coefficient_ == -1) {
    out = "-";
  } else if (coefficient_.get_den() == 1) {
    out = coefficient_.get_str();
  } else {
    out = "(" + coefficient_.get_str() + ")";
  }
  return out + "√" + radicand_.get_str();
}

Surd Surd::operator-() const {
  Surd result = *this;
  result.coefficient_ = -coefficient_;
  return result;
}

Surd surd_mul(const Surd& a, const Surd& b) {
  Surd result;
  if (a.is_zero() || b.is_zero()) return result;
  if (a.is_rational() && b.is_rational()) {
    result.coefficient_ = a.coefficient_ * b.coefficient_;
    return result;
  }
  // Both radicands are squarefree, so their product only has the shared
  // factor squared: ra*rb = g^2 * (ra/g)*(rb/g) with the rest squarefree.
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.radicand_.get_mpz_t(), b.radicand_.get_mpz_t());
  result.coefficient_ = a.coefficient_ * b.coefficient_ * g;
  result.radicand_ = (a.radicand_ / g) * (b.radicand_ / g);
  return result;
}

Surd surd_add(const Surd& a, const Surd& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.radicand_ != b.radicand_) {
    throw IncompatibleRadicands("cannot add " + a.to_string() + " and " + b.to_string());
  }
  Surd result;
  result.coefficient_ = a.coefficient_ + b.coefficient_;
  if (sgn(result.coefficient_) != 0) result.radicand_ = a.radicand_;
  return result;
}

std::strong_ordering surd_cmp(const Surd& a, const Surd& b) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  if (a.radicand() == b.radicand()) return cmp(a.coefficient(), b.coefficient()) <=> 0;
  const int by_square = cmp(a.square(), b.square());
  const int order = sa > 0 ? by_square : -by_square;
  return order <=> 0;
}

std::strong_ordering operator<=>(const Surd& a, const Surd& b) { return surd_cmp(a, b); }

Surd operator/(const Surd& a, const Surd& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return scaled(a * b, 1 / b.square());
}

// ---------------------------------------------------------------------------
// ApproxScalar

ApproxScalar::ApproxScalar(BigInt scaled, int digits) : scaled_(std::move(scaled)), digits_(digits) {
  if (digits < 1) throw std::invalid_argument("digits must be positive");
}

ApproxScalar ApproxScalar::power_of_ten(int exponent, int digits) {
  const int shift = digits + kGuardDigits + exponent;
  return ApproxScalar(shift < 0 ? BigInt(0) : pow10(shift), digits);
}

ApproxScalar ApproxScalar::parse(std::string_view text, int digits) {
  return approx(parse_decimal(text), digits);
}

ApproxScalar ApproxScalar::abs() const { return ApproxScalar(::abs(scaled_), digits_); }

ApproxScalar ApproxScalar::sqrt() const {
  return ApproxScalar(isqrt(scaled_ * pow10(scale())), digits_);
}

ApproxScalar ApproxScalar::with_digits(int digits) const {
  return ApproxScalar(rescale(scaled_, scale(), digits + kGuardDigits), digits);
}

std::string ApproxScalar::to_fixed(int fraction_digits) const {
  const BigInt truncated = rescale(scaled_, scale(), fraction_digits);
  std::string body = BigInt(::abs(truncated)).get_str();
  if (body.size() <= static_cast<std::size_t>(fraction_digits)) {
    body.insert(0, fraction_digits + 1 - body.size(), '0');
  }
  const std::size_t split = body.size() - fraction_digits;
  std::string out = sgn(truncated) < 0 ? "-" : "";
  out += body.substr(0, split);
  if (fraction_digits > 0) out += "." + body.substr(split);
  return out;
}

std::string ApproxScalar::to_string() const {
  const int frac = scale();
  std::string body = BigInt(::abs(scaled_)).get_str();
  if (body.size() <= static_cast<std::size_t>(frac)) body.insert(0, frac + 1 - body.size(), '0');
  const std::string whole = body.substr(0, body.size() - frac);
  const std::string fraction = body.substr(body.size() - frac);

  int keep = 0;
  if (whole != "0") {
    keep = std::max(digits_ - static_cast<int>(whole.size()), 1);
  } else {
    const auto first = fraction.find_first_not_of('0');
    const int zeros = first == std::string::npos ? 0 : static_cast<int>(first);
    keep = zeros + digits_;
  }
  keep = std::min(keep, frac);
  const std::string shown = fraction.substr(0, keep);
  const bool all_zero = whole == "0" && shown.find_first_not_of('0') == std::string::npos;
  return (sgn(scaled_) < 0 && !all_zero ? "-" : "") + whole + "." + shown;
}

ApproxScalar ApproxScalar::operator-() const { return ApproxScalar(-scaled_, digits_); }

namespace {

struct Aligned {
  BigInt a;
  BigInt b;
  int digits;
};

Aligned align(const ApproxScalar& a, const ApproxScalar& b) {
  const int digits = std::max(a.digits(), b.digits());
  const int scale = digits + ApproxScalar::kGuardDigits;
  return {rescale(a.scaled(), a.scale(), scale), rescale(b.scaled(), b.scale(), scale), digits};
}

}  // namespace

ApproxScalar operator+(const ApproxScalar& a, const ApproxScalar& b) {
  auto [x, y, digits] = align(a, b);
  return ApproxScalar(x + y, digits);
}

ApproxScalar operator-(const ApproxScalar& a, const ApproxScalar& b) {
  auto [x, y, digits] = align(a, b);
  return ApproxScalar(x - y, digits);
}

ApproxScalar operator*(const ApproxScalar& a, const ApproxScalar& b) {
  auto [x, y, digits] = align(a, b);
  return ApproxScalar((x * y) / pow10(digits + ApproxScalar::kGuardDigits), digits);
}

ApproxScalar operator/(const ApproxScalar& a, const ApproxScalar& b) {
  auto [x, y, digits] = align(a, b);
  if (sgn(y) == 0) throw std::domain_error("division by zero");
  return ApproxScalar((x * pow10(digits + ApproxScalar::kGuardDigits)) / y, digits);
}

bool operator==(const ApproxScalar& a, const ApproxScalar& b) {
  auto [x, y, digits] = align(a, b);
  return x == y;
}

std::strong_ordering operator<=>(const ApproxScalar& a, const ApproxScalar& b) {
  auto [x, y, digits] = align(a, b);
  return cmp(x, y) <=> 0;
}

ApproxScalar approx(const Rational& value, int digits) {
  const int scale = digits + ApproxScalar::kGuardDigits;
  return ApproxScalar((value.get_num() * pow10(scale)) / value.get_den(), digits);
}

ApproxScalar approx(const Surd& value, int digits) {
  if (value.is_rational()) return approx(value.coefficient(), digits);
  const int scale = digits + ApproxScalar::kGuardDigits;
  const Rational& c = value.coefficient();
  const BigInt num = ::abs(c.get_num());
  // |c| * sqrt(r) * 10^scale = sqrt(num^2 * r * 10^(2 scale)) / den
  BigInt magnitude = isqrt(num * num * value.radicand() * pow10(2 * scale)) / c.get_den();
  return ApproxScalar(value.sign() < 0 ? BigInt(-magnitude) : magnitude, digits);
}

ApproxScalar approx_sqrt(const Rational& value, int digits) {
  if (sgn(value) < 0) throw NegativeRadicand("sqrt of negative value " + value.get_str());
  const int scale = digits + ApproxScalar::kGuardDigits;
  const BigInt& den = value.get_den();
  return ApproxScalar(isqrt(value.get_num() * den * pow10(2 * scale)) / den, digits);
}

bool within(const ApproxScalar& a, const ApproxScalar& b, const ApproxScalar& tolerance) {
  return (a - b).abs() <= tolerance;
}

}  // namespace mensura
