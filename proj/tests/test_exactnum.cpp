#include <gtest/gtest.h>

#include <random>

#include "mensura/exactnum.hpp"

using namespace mensura;

namespace {

// Independent square-part oracle: strip squares by trial division only.
std::pair<BigInt, BigInt> naive_square_part(BigInt n) {
  BigInt outside = 1;
  for (BigInt p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      outside *= p;
    }
  }
  return {outside, n};
}

// mpf is a separate GMP code path from the fixed-point ApproxScalar.
std::string mpf_digits(const mpf_class& v, int fraction_digits) {
  mpf_class scaled = v;
  for (int i = 0; i < fraction_digits; ++i) scaled *= 10;
  const mpz_class truncated(scaled);
  std::string s = mpz_class(abs(truncated)).get_str();
  if (s.size() <= static_cast<std::size_t>(fraction_digits)) s.insert(0, fraction_digits + 1 - s.size(), '0');
  s.insert(s.size() - fraction_digits, ".");
  return (sgn(truncated) < 0 ? "-" : "") + s;
}

}  // namespace

TEST(Isqrt, BracketsTheRoot) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    BigInt n;
    mpz_ui_pow_ui(n.get_mpz_t(), 10, i % 60);
    n *= BigInt(std::to_string(rng()));
    n += rng() % 1000;
    const BigInt r = isqrt(n);
    EXPECT_LE(r * r, n);
    EXPECT_GT((r + 1) * (r + 1), n);
  }
  EXPECT_EQ(isqrt(0), 0);
  EXPECT_THROW(isqrt(-1), NegativeRadicand);
}

TEST(SquarePart, AgreesWithTrialDivision) {
  for (long n = 1; n < 5000; ++n) {
    EXPECT_EQ(square_part(n), naive_square_part(n)) << n;
    EXPECT_EQ(is_squarefree(n), naive_square_part(n).first == 1);
  }
}

TEST(SquarePart, LargeSemiprimeSquares) {
  const BigInt p("1000000007"), q("998244353"), r("1000000009");
  const auto [s, f] = square_part(p * p * q * r * r * 6);
  EXPECT_EQ(s, p * r);
  EXPECT_EQ(f, q * 6);
}

TEST(ParseDecimal, AcceptsIntegersAndFiniteDecimals) {
  EXPECT_EQ(parse_decimal("14"), Rational(14));
  EXPECT_EQ(parse_decimal("-2.75"), Rational(-11, 4));
  EXPECT_EQ(parse_decimal("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_decimal("143.75"), Rational(575, 4));
  for (const char* bad : {"", "1.", ".5x", "abc", "1e3", "--1", "1/2"}) {
    EXPECT_THROW(parse_decimal(bad), std::invalid_argument) << bad;
  }
}

TEST(NormalizeSurd, Examples) {
  const Surd a = normalize_surd(1, 19800);
  EXPECT_EQ(a.coefficient(), 30);
  EXPECT_EQ(a.radicand(), 22);
  EXPECT_EQ(a.to_string(), "30√22");

  const Surd b = normalize_surd(1, 9);
  EXPECT_EQ(b, Surd(3));
  EXPECT_TRUE(b.is_rational());

  const Surd c = normalize_surd(0, 7);
  EXPECT_TRUE(c.is_zero());
  EXPECT_EQ(c.radicand(), 1);

  EXPECT_THROW(normalize_surd(1, -3), NegativeRadicand);
}

TEST(SurdMul, Examples) {
  const Surd s = normalize_surd(30, 22);
  EXPECT_EQ(s * s, Surd(19800));
  EXPECT_EQ(Surd::sqrt(2) * Surd::sqrt(2), Surd(2));
  EXPECT_EQ(normalize_surd(Rational(1, 2), 3) * normalize_surd(4, 12), Surd(12));
}

TEST(SurdAdd, Examples) {
  EXPECT_EQ(normalize_surd(2, 5) + normalize_surd(3, 5), normalize_surd(5, 5));
  EXPECT_EQ(normalize_surd(2, 5) + Surd(0), normalize_surd(2, 5));
  EXPECT_THROW(normalize_surd(2, 5) + Surd::sqrt(3), IncompatibleRadicands);
}

TEST(SurdCmp, Examples) {
  const Surd s = normalize_surd(30, 22);
  EXPECT_EQ(surd_cmp(s, Surd(141)), std::strong_ordering::less);
  EXPECT_EQ(surd_cmp(s, Surd(138)), std::strong_ordering::greater);
  EXPECT_EQ(surd_cmp(normalize_surd(2, 2), Surd::sqrt(8)), std::strong_ordering::equal);
  EXPECT_EQ(surd_cmp(-s, Surd(-141)), std::strong_ordering::greater);
}

TEST(Approx, Examples) {
  EXPECT_EQ(approx(normalize_surd(30, 22), 7).to_string(), "140.7124");
  EXPECT_EQ(approx(Surd(5), 3).to_string(), "5.00");
  EXPECT_EQ(approx(Surd::sqrt(2), 5).to_string(), "1.4142");
  EXPECT_EQ(approx(Rational(-1, 3), 4).to_string(), "-0.3333");
}

TEST(Approx, SqrtAgreesWithMpf) {
  mpf_set_default_prec(512);
  for (long r : {2L, 3L, 22L, 1645L, 25897L, 987654321L}) {
    const mpf_class oracle = sqrt(mpf_class(r));
    EXPECT_EQ(approx(Surd::sqrt(r), 60).to_fixed(40), mpf_digits(oracle, 40)) << r;
    EXPECT_EQ(approx_sqrt(r, 60).to_fixed(40), mpf_digits(oracle, 40)) << r;
  }
}

TEST(Approx, ArithmeticAgreesWithMpf) {
  mpf_set_default_prec(512);
  const ApproxScalar a = approx(Surd::sqrt(7), 50);
  const ApproxScalar b = approx(Rational(22, 7), 50);
  const mpf_class oa = sqrt(mpf_class(7));
  const mpf_class ob = mpf_class(22) / 7;
  const ApproxScalar tol = ApproxScalar::power_of_ten(-45);
  EXPECT_TRUE(within(a * b, ApproxScalar::parse(mpf_digits(oa * ob, 55)), tol));
  EXPECT_TRUE(within(a / b, ApproxScalar::parse(mpf_digits(oa / ob, 55)), tol));
  EXPECT_TRUE(within(a - b, ApproxScalar::parse(mpf_digits(oa - ob, 55)), tol));
  EXPECT_THROW(a / ApproxScalar(0, 50), std::domain_error);
}

TEST(ApproxScalar, FixedRenderingTruncates) {
  EXPECT_EQ(ApproxScalar::parse("35.355339").to_fixed(2), "35.35");
  EXPECT_EQ(ApproxScalar::parse("-0.009").to_fixed(2), "0.00");
  EXPECT_EQ(ApproxScalar::parse("7").to_fixed(0), "7");
}

// Properties over random surds with small radicands so that sums are common.
class SurdProperties : public ::testing::Test {
 protected:
  Surd random_surd(std::int64_t radicand_max = 12) {
    const long num = static_cast<long>(rng_() % 2001) - 1000;
    const long den = static_cast<long>(rng_() % 50) + 1;
    const long rad = static_cast<long>(rng_() % radicand_max) + 1;
    Rational c(num, den);
    c.canonicalize();
    return normalize_surd(c, rad);
  }
  std::mt19937_64 rng_{2024};
};

TEST_F(SurdProperties, NormalizationIsIdempotent) {
  for (int i = 0; i < 500; ++i) {
    const Surd s = random_surd(100000);
    EXPECT_EQ(normalize_surd(s.coefficient(), s.radicand()), s);
    if (!s.is_zero()) EXPECT_TRUE(is_squarefree(s.radicand()));
  }
}

TEST_F(SurdProperties, MultiplicationCommutesAndSquaresAreRational) {
  for (int i = 0; i < 500; ++i) {
    const Surd a = random_surd(1000), b = random_surd(1000);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b).square(), a.square() * b.square());
    EXPECT_TRUE((a * a).is_rational());
  }
}

TEST_F(SurdProperties, BinomialSquare) {
  for (int i = 0; i < 500; ++i) {
    const Surd a = random_surd(), b = random_surd();
    if (a.radicand() != b.radicand()) {
      if (!a.is_zero() && !b.is_zero()) EXPECT_THROW(a + b, IncompatibleRadicands);
      continue;
    }
    const Surd s = a + b;
    EXPECT_EQ(s * s, a * a + Surd(2) * a * b + b * b);
    EXPECT_EQ(s - b, a);
  }
}

TEST_F(SurdProperties, ComparisonMatchesApproximation) {
  for (int i = 0; i < 500; ++i) {
    const Surd a = random_surd(1000), b = random_surd(1000);
    const auto exact = surd_cmp(a, b);
    const auto approximate = approx(a, 40) <=> approx(b, 40);
    if (a != b) EXPECT_EQ(exact, approximate) << a.to_string() << " vs " << b.to_string();
  }
}
