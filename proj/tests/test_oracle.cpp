#include <gtest/gtest.h>

#include "mensura/construct.hpp"
#include "mensura/oracle.hpp"
#include "mensura/sampling.hpp"

using namespace mensura;

namespace {

const ApproxScalar kTol = ApproxScalar::power_of_ten(-30);

ApproxScalar A(long v) { return approx(Rational(v)); }
ApproxScalar A(const Surd& v) { return approx(v); }

void expect_point(const Point& p, const ApproxScalar& x, const ApproxScalar& y) {
  EXPECT_TRUE(within(p.x, x, kTol)) << p.x.to_string() << " vs " << x.to_string();
  EXPECT_TRUE(within(p.y, y, kTol)) << p.y.to_string() << " vs " << y.to_string();
}

// Heron in mpf from integer sides: a separate code path from both the exact
// rule and the embedding.
mpf_class mpf_heron(long a, long b, long c) {
  const mpf_class s = mpf_class(a + b + c) / 2;
  return sqrt(s * (s - a) * (s - b) * (s - c));
}

ApproxScalar from_mpf(const mpf_class& v) {
  mp_exp_t exp;
  std::string digits = v.get_str(exp, 10, 70);
  const bool negative = !digits.empty() && digits[0] == '-';
  if (negative) digits.erase(0, 1);
  if (digits.empty()) return A(0);
  if (exp <= 0) {
    digits.insert(0, static_cast<std::size_t>(-exp), '0');
    exp = 0;
  }
  if (static_cast<std::size_t>(exp) >= digits.size()) digits.append(exp - digits.size() + 1, '0');
  digits.insert(static_cast<std::size_t>(exp), ".");
  if (digits[0] == '.') digits.insert(0, "0");
  return ApproxScalar::parse((negative ? "-" : "") + digits);
}

}  // namespace

TEST(Embed, WorkedExample) {
  const EmbeddedQuad e = embed(DiagQuad(QuadSides(75, 68, 51, 40), 77));
  expect_point(e.points[0], A(0), A(0));
  expect_point(e.points[1], A(45), A(60));
  expect_point(e.points[2], A(77), A(0));
  expect_point(e.points[3], A(32), A(-24));
}

TEST(Embed, UnitSquareAndKite) {
  const EmbeddedQuad square = embed(DiagQuad(QuadSides(1, 1, 1, 1), Surd::sqrt(2)));
  const ApproxScalar half_root = approx(normalize_surd(Rational(1, 2), 2));
  expect_point(square.points[1], half_root, half_root);
  expect_point(square.points[3], half_root, -half_root);
  EXPECT_TRUE(within(shoelace_area(square), A(1), kTol));

  const EmbeddedQuad kite = embed(DiagQuad(QuadSides(3, 4, 4, 3), 5));
  expect_point(kite.points[1], approx(Rational(9, 5)), approx(Rational(12, 5)));
  expect_point(kite.points[3], approx(Rational(9, 5)), approx(Rational(-12, 5)));
}

TEST(Embed, SidesAreReproduced) {
  CaseGenerator gen(6);
  for (int i = 0; i < 200; ++i) {
    const DiagQuad dq = gen.diag_quad(200);
    const EmbeddedQuad e = embed(dq, 50);
    const ApproxScalar tol = ApproxScalar::power_of_ten(-49);
    for (std::size_t k = 0; k < 4; ++k) {
      EXPECT_TRUE(within(distance(e.points[k], e.points[(k + 1) % 4]), A(dq.sides().sides()[k]), tol));
    }
    EXPECT_GT(e.points[1].y.sign(), 0);
    EXPECT_LT(e.points[3].y.sign(), 0);
  }
}

TEST(Shoelace, Examples) {
  EXPECT_TRUE(within(shoelace_area(embed(DiagQuad(QuadSides(75, 68, 51, 40), 77))), A(3234), kTol));
  EXPECT_TRUE(within(shoelace_area(embed(DiagQuad(QuadSides(14, 13, 9, 12), 15))), A(138), kTol));
}

TEST(Shoelace, HeronAgreesWithMpfAndEmbedding) {
  mpf_set_default_prec(600);
  CaseGenerator gen(7);
  for (int i = 0; i < 500; ++i) {
    const Triangle t = gen.triangle(200);
    const long a = t.a().coefficient().get_num().get_si();
    const long b = t.b().coefficient().get_num().get_si();
    const long c = t.c().coefficient().get_num().get_si();
    const ApproxScalar exact = approx(heron_area(t));
    EXPECT_TRUE(within(exact, shoelace_area(embed_triangle(t)), kTol));
    EXPECT_TRUE(within(exact, from_mpf(mpf_heron(a, b, c)), kTol));
  }
}

TEST(Shoelace, SplitAreaAgreement) {
  CaseGenerator gen(8);
  for (int i = 0; i < 500; ++i) {
    const DiagQuad dq = gen.diag_quad(200);
    const ApproxScalar oracle = shoelace_area(embed(dq));
    const auto [t1, t2] = split_triangle_areas(dq);
    EXPECT_TRUE(within(oracle, approx(t1) + approx(t2), kTol));
  }
}

TEST(Concyclic, Examples) {
  const QuadSides worked(75, 68, 51, 40);
  const ConcyclicVerdict at77 = concyclic_verdict(embed(DiagQuad(worked, 77)), kTol);
  EXPECT_TRUE(at77.concyclic);
  EXPECT_TRUE(within(at77.radius, approx(Rational(85, 2)), kTol));
  EXPECT_FALSE(concyclic(embed(DiagQuad(worked, 70)), kTol));
  EXPECT_TRUE(concyclic(embed(DiagQuad(QuadSides(3, 4, 3, 4), 5)), kTol));
  EXPECT_TRUE(concyclic(embed(DiagQuad(QuadSides(7, 2, 7, 2), Surd::sqrt(53))), kTol));
}

TEST(Concyclic, AgreesWithPtolemy) {
  CaseGenerator gen(9);
  for (int i = 0; i < 100; ++i) {
    const QuadSides q = gen.quad(80);
    const DiagonalPair d = cyclic_diagonal_pair(q);
    EXPECT_TRUE(concyclic(embed(DiagQuad(q, d.p)), kTol));
    const auto [lo, hi] = diagonal_range(q);
    const Surd off = (lo + hi) * Surd(Rational(1, 2));
    if (off != d.p) {
      EXPECT_FALSE(concyclic(embed(DiagQuad(q, off)), kTol));
    }
  }
}

TEST(Circumcircle, Collinear) {
  const Point p{A(0), A(0)}, q{A(1), A(1)}, r{A(2), A(2)};
  EXPECT_THROW(circumcircle(p, q, r, kTol), DegenerateCollinear);
}

TEST(DiagonalRange, Examples) {
  EXPECT_EQ(diagonal_range(QuadSides(75, 68, 51, 40)), std::make_pair(Surd(11), Surd(91)));
  EXPECT_EQ(diagonal_range(QuadSides(25, 25, 25, 25)), std::make_pair(Surd(0), Surd(50)));
  EXPECT_EQ(diagonal_range(QuadSides(14, 13, 9, 12)), std::make_pair(Surd(3), Surd(21)));
}

TEST(AreaScan, Square) {
  const ScanResult s = area_scan(QuadSides(25, 25, 25, 25), 999);
  EXPECT_EQ(s.samples.size(), 999u);
  EXPECT_TRUE(within(s.max_area, A(625), ApproxScalar::power_of_ten(-3)));
  EXPECT_TRUE(within(s.argmax_diagonal, approx(normalize_surd(25, 2)), approx(s.step)));
  EXPECT_EQ(s.samples[s.argmax_index].area, s.max_area);
}

TEST(AreaScan, WorkedFamily) {
  const QuadSides q(75, 40, 51, 68);
  const ScanResult s = area_scan(q, 999);
  EXPECT_TRUE(within(s.max_area, A(3234), ApproxScalar::power_of_ten(-6)));
  EXPECT_TRUE(within(s.argmax_diagonal, A(85), approx(s.step)));
}

TEST(AreaScan, RhombusFamilyHitsTripleDiagonals) {
  const QuadSides q(25, 25, 25, 25);
  EXPECT_EQ(scan_diagonal(q, 600, 999), Surd(30));
  EXPECT_EQ(scan_diagonal(q, 280, 999), Surd(14));
  const ScanResult s = area_scan(q, 999);
  EXPECT_TRUE(within(s.samples[599].area, A(600), kTol));
  EXPECT_TRUE(within(s.samples[279].area, A(336), kTol));
}

TEST(AreaScan, SamplesIncreaseAndAreasVary) {
  CaseGenerator gen(10);
  for (int i = 0; i < 20; ++i) {
    const QuadSides q = gen.quad(100);
    const ScanResult s = area_scan(q, 99, 30);
    ApproxScalar lowest = s.max_area;
    for (std::size_t k = 0; k < s.samples.size(); ++k) {
      if (k) EXPECT_LT(s.samples[k - 1].diagonal, s.samples[k].diagonal);
      EXPECT_LE(s.samples[k].area, s.max_area);
      lowest = std::min(lowest, s.samples[k].area);
    }
    EXPECT_LT(lowest, s.max_area);
  }
}

TEST(AreaScan, ParallelMatchesReference) {
  CaseGenerator gen(11);
  for (int i = 0; i < 10; ++i) {
    const QuadSides q = gen.quad(300);
    const ScanResult par = area_scan(q, 257, 40);
    const ScanResult ser = reference::area_scan(q, 257, 40);
    ASSERT_EQ(par.samples.size(), ser.samples.size());
    for (std::size_t k = 0; k < par.samples.size(); ++k) {
      EXPECT_EQ(par.samples[k].diagonal, ser.samples[k].diagonal);
      EXPECT_EQ(par.samples[k].area, ser.samples[k].area);
    }
    EXPECT_EQ(par.argmax_index, ser.argmax_index);
    EXPECT_EQ(par.max_area, ser.max_area);
  }
}

TEST(AreaScan, RejectsTooFewSteps) {
  EXPECT_THROW(area_scan(QuadSides(1, 1, 1, 1), 2), std::invalid_argument);
  EXPECT_THROW(reference::area_scan(QuadSides(1, 1, 1, 1), 0), std::invalid_argument);
}
