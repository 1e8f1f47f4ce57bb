// The reproduction manifest: every worked figure from the historical
// sources, plus the seeded property sweeps, each with its citation.

#include <algorithm>
#include <set>
#include <string>

#include "mensura/cli.hpp"
#include "mensura/construct.hpp"
#include "mensura/sampling.hpp"
#include "mensura/triples.hpp"

namespace mensura::cli {
namespace {

const char* kTrapezium = "Lilavati 168:[170] with Vasanabhasya: base 14, face 9, sides 13 and 12";
const char* kWorked = "Lilavati 178:[176] with Vasanabhasya: face 51, base 75, sides 68 and 40, diagonal 77";
const char* kGross = "Brahmasphutasiddhanta XII-21: gross area as product of half-sums of opposite sides";
const char* kRhombus = "Lilavati 174-176: equilateral quadrilaterals from the triples (15,20,25) and (7,24,25)";
const char* kGanesa = "Brahmasphutasiddhanta XII-38 as recalled in Lilavati 191-192:[186-187]; Ganesa's "
                      "reading from the triples (3,4,5) and (8,15,17)";
const char* kIndeterminate = "Lilavati 169-170:[171]: the diagonals, and with them the area, are indeterminate";

Measurement exact(ExactScalar v) { return {std::move(v), std::nullopt}; }
Measurement token(std::string v) { return {std::move(v), std::nullopt}; }
Measurement close(ApproxScalar v, ApproxScalar tolerance) { return {std::move(v), std::move(tolerance)}; }

std::string ordering_token(std::strong_ordering o) {
  if (o < 0) return "less";
  if (o > 0) return "greater";
  return "equal";
}

std::string bool_token(bool b) { return b ? "true" : "false"; }

std::string set_token(const std::set<ExactScalar>& values) {
  std::string out = "{";
  for (const auto& v : values) out += (out.size() > 1 ? ", " : "") + v.to_string();
  return out + "}";
}

std::string tally(int passed, int total) { return std::to_string(passed) + "/" + std::to_string(total); }

QuadSides trapezium_sides() { return QuadSides(14, 12, 9, 13); }
DiagQuad trapezium_split() { return DiagQuad(QuadSides(14, 13, 9, 12), 15); }
DiagQuad worked_split() { return DiagQuad(QuadSides(75, 68, 51, 40), 77); }
CyclicQuadConstruction ganesa() { return brahmagupta_quad(validate_triple(3, 4, 5), validate_triple(8, 15, 17)); }

// Property sweeps. Each returns the number of cases that held.

int sweep_gross_vs_sutra(const RunConfig& config, int cases) {
  CaseGenerator gen(config.seed);
  int held = 0;
  for (int i = 0; i < cases; ++i) {
    QuadSides q = gen.quad(500);
    if (i % 10 == 0) q = QuadSides(q.a(), q.b(), q.a(), q.b());
    const auto order = surd_cmp(gross_area(q), sutra_area(q));
    const bool balanced = q.a() == q.c() && q.b() == q.d();
    held += (order >= 0 && (order == 0) == balanced) ? 1 : 0;
  }
  return held;
}

int sweep_heron_vs_oracle(const RunConfig& config, int cases) {
  CaseGenerator gen(config.seed + 1);
  const ApproxScalar tolerance = oracle_tolerance(config.precision_digits);
  int held = 0;
  for (int i = 0; i < cases; ++i) {
    const Triangle t = gen.triangle(200);
    const auto points = embed_triangle(t, config.precision_digits);
    held += within(approx(heron_area(t), config.precision_digits), shoelace_area(points), tolerance) ? 1 : 0;
  }
  return held;
}

int sweep_scan_maximality(const RunConfig& config, int cases) {
  CaseGenerator gen(config.seed + 2);
  const int digits = config.precision_digits;
  const ApproxScalar slack = ApproxScalar::power_of_ten(-6, digits);
  int held = 0;
  for (int i = 0; i < cases; ++i) {
    const QuadSides q = gen.quad(100);
    const ScanResult scan = area_scan(q, config.scan_steps, digits);
    const ApproxScalar cyclic = approx(cyclic_diagonal_pair(q).p, digits);
    const ApproxScalar step = approx(scan.step, digits);
    const auto [lowest, highest] = std::minmax_element(
        scan.samples.begin(), scan.samples.end(),
        [](const ScanSample& a, const ScanSample& b) { return a.area < b.area; });
    const bool near_cyclic = within(scan.argmax_diagonal, cyclic, step);
    const bool bounded = scan.max_area <= approx(sutra_area(q), digits) + slack;
    const bool varies = lowest->area < highest->area;
    held += (near_cyclic && bounded && varies) ? 1 : 0;
  }
  return held;
}

int sweep_sutra_permutations(const RunConfig& config, int cases) {
  CaseGenerator gen(config.seed + 3);
  int held = 0;
  for (int i = 0; i < cases; ++i) {
    const QuadSides q = gen.quad(500);
    const ExactScalar area = sutra_area(q);
    std::array<int, 4> order{0, 1, 2, 3};
    bool same = true;
    do {
      const auto& s = q.sides();
      same = same && sutra_area(QuadSides(s[order[0]], s[order[1]], s[order[2]], s[order[3]])) == area;
    } while (std::next_permutation(order.begin(), order.end()));
    held += same ? 1 : 0;
  }
  return held;
}

int sweep_reflect_swap(const RunConfig& config, int cases) {
  CaseGenerator gen(config.seed + 4);
  int held = 0;
  for (int i = 0; i < cases; ++i) {
    const DiagQuad dq = gen.diag_quad(200);
    bool ok = true;
    for (TriangleSide side : {TriangleSide::first, TriangleSide::second}) {
      const DiagQuad once = reflect_swap(dq, side);
      auto multiset = [](const DiagQuad& x) {
        auto s = x.sides().sides();
        std::sort(s.begin(), s.end());
        return s;
      };
      ok = ok && reflect_swap(once, side) == dq && multiset(once) == multiset(dq) &&
           once.diagonal() == dq.diagonal() && split_triangle_areas(once) == split_triangle_areas(dq);
    }
    held += ok ? 1 : 0;
  }
  return held;
}

int sweep_brahmagupta_pairs(const RunConfig& config, int& total) {
  const auto triples = generate_triples(25);
  const ApproxScalar tolerance = oracle_tolerance(config.precision_digits);
  int held = 0;
  total = 0;
  for (const auto& t1 : triples) {
    for (const auto& t2 : triples) {
      ++total;
      const auto built = brahmagupta_quad(t1, t2);
      const auto& sides = built.sides.sides();
      const bool integral = std::all_of(sides.begin(), sides.end(), [](const ExactScalar& s) {
        return s.is_rational() && s.coefficient().get_den() == 1;
      });
      const ExactScalar sutra = sutra_area(built.sides);
      const DiagQuad glued = built.glue_split();
      const auto split = area_by_diagonal(glued).split_area;
      const bool integer_area = sutra.is_rational() && sutra.coefficient().get_den() == 1;
      const bool on_circle = concyclic(embed(glued, config.precision_digits), tolerance);
      held += (integral && integer_area && split && *split == sutra && on_circle) ? 1 : 0;
    }
  }
  return held;
}

}  // namespace

ApproxScalar oracle_tolerance(int digits) { return ApproxScalar::power_of_ten(-std::min(30, digits - 6), digits); }

std::vector<ManifestCase> manifest_cases() {
  std::vector<ManifestCase> cases;
  auto add = [&](std::string id, std::string description, std::string provenance, ManifestValue expected,
                 std::function<Measurement(const RunConfig&)> compute) {
    cases.push_back({std::move(id), std::move(description), std::move(provenance), std::move(expected),
                     std::move(compute)});
  };

  // Trapezium counterexample.
  add("trapezium.area", "true area of the trapezium, half the sum of base and face times height", kTrapezium,
      ExactScalar(138), [](const RunConfig&) { return exact(trapezium_area(Trapezium(14, 9, 13, 12, 12))); });
  add("trapezium.sutra", "four-fold half-perimeter rule on sides 14, 12, 9, 13", kTrapezium,
      normalize_surd(30, 22), [](const RunConfig&) { return exact(sutra_area(trapezium_sides())); });
  add("trapezium.sutra_below_141", "the rule's value compared with 141 (a little less)", kTrapezium,
      std::string("less"),
      [](const RunConfig&) { return token(ordering_token(surd_cmp(sutra_area(trapezium_sides()), 141))); });
  add("trapezium.sutra_above_138", "the rule's value compared with the true area 138", kTrapezium,
      std::string("greater"),
      [](const RunConfig&) { return token(ordering_token(surd_cmp(sutra_area(trapezium_sides()), 138))); });
  add("trapezium.gross", "gross rule on the same trapezium", kGross, ExactScalar(Rational(575, 4)),
      [](const RunConfig&) { return exact(gross_area(trapezium_sides())); });
  add("trapezium.gross_vs_sutra", "gross value compared with the four-fold rule", kGross, std::string("greater"),
      [](const RunConfig&) {
        return token(ordering_token(surd_cmp(gross_area(trapezium_sides()), sutra_area(trapezium_sides()))));
      });
  add("trapezium.split_area", "sum of the two triangles on the diagonal of length 15", kTrapezium,
      ExactScalar(138), [](const RunConfig&) { return exact(*area_by_diagonal(trapezium_split()).split_area); });
  add("trapezium.oracle_area", "shoelace area of the embedded trapezium", kTrapezium, ExactScalar(138),
      [](const RunConfig& c) {
        return close(shoelace_area(embed(trapezium_split(), c.precision_digits)),
                     oracle_tolerance(c.precision_digits));
      });

  // Worked example with the assumed diagonal 77.
  add("worked.split_area", "area through the perpendiculars on the assumed diagonal 77", kWorked,
      ExactScalar(3234), [](const RunConfig&) { return exact(*area_by_diagonal(worked_split()).split_area); });
  add("worked.perpendicular_first", "perpendicular from the 75/68 apex onto the diagonal", kWorked,
      ExactScalar(60),
      [](const RunConfig&) { return exact(area_by_diagonal(worked_split()).perpendiculars->first); });
  add("worked.perpendicular_second", "perpendicular from the 51/40 apex onto the diagonal", kWorked,
      ExactScalar(24),
      [](const RunConfig&) { return exact(area_by_diagonal(worked_split()).perpendiculars->second); });
  add("worked.sutra", "four-fold half-perimeter rule on 51, 68, 75, 40", kWorked, ExactScalar(3234),
      [](const RunConfig&) { return exact(sutra_area(QuadSides(51, 68, 75, 40))); });
  add("worked.ptolemy", "product of diagonals 85 and 77 equals sum of products of opposite sides", kWorked,
      std::string("true"), [](const RunConfig&) {
        return token(bool_token(ptolemy_check(QuadSides(75, 40, 51, 68), DiagonalPair{85, 77})));
      });
  add("worked.cyclic_diagonals", "cyclic diagonal pair for the order 75, 40, 51, 68", kWorked,
      std::string("(85, 77)"), [](const RunConfig&) {
        const auto d = cyclic_diagonal_pair(QuadSides(75, 40, 51, 68));
        return token("(" + d.p.to_string() + ", " + d.q.to_string() + ")");
      });
  add("worked.diagonal_trio", "cyclic diagonals over the three cyclic orders of {51, 68, 75, 40}", kWorked,
      std::string("{77, 84, 85}"), [](const RunConfig&) {
        std::set<ExactScalar> values;
        for (const QuadSides& q : {QuadSides(51, 68, 75, 40), QuadSides(51, 68, 40, 75), QuadSides(51, 75, 68, 40)}) {
          const auto d = cyclic_diagonal_pair(q);
          values.insert(d.p);
          values.insert(d.q);
        }
        return token(set_token(values));
      });
  add("worked.circumradius_first", "circumradius of the triangle (75, 68, 77)", kWorked,
      ExactScalar(Rational(85, 2)), [](const RunConfig&) { return exact(triangle_circumradius(Triangle(75, 68, 77))); });
  add("worked.circumradius_second", "circumradius of the triangle (51, 40, 77)", kWorked,
      ExactScalar(Rational(85, 2)), [](const RunConfig&) { return exact(triangle_circumradius(Triangle(51, 40, 77))); });
  add("worked.oracle_area", "shoelace area of the embedded quadrilateral", kWorked, ExactScalar(3234),
      [](const RunConfig& c) {
        return close(shoelace_area(embed(worked_split(), c.precision_digits)), oracle_tolerance(c.precision_digits));
      });
  add("worked.oracle_concyclic", "embedded vertices lie on one circle", kWorked, std::string("true"),
      [](const RunConfig& c) {
        return token(bool_token(
            concyclic(embed(worked_split(), c.precision_digits), oracle_tolerance(c.precision_digits))));
      });

  // Equilateral quadrilaterals of side 25.
  add("rhombus.15_20_25.second_diagonal", "second diagonal of side 25, first diagonal 30", kRhombus,
      ExactScalar(40), [](const RunConfig&) {
        return exact(rhombus_second_diagonal(rhombus_from_triple(validate_triple(15, 20, 25))));
      });
  add("rhombus.15_20_25.area", "area 2(15 x 20)", kRhombus, ExactScalar(600), [](const RunConfig&) {
    return exact(rhombus_area(rhombus_from_triple(validate_triple(15, 20, 25))));
  });
  add("rhombus.7_24_25.second_diagonal", "second diagonal of side 25, first diagonal 14", kRhombus,
      ExactScalar(48), [](const RunConfig&) {
        return exact(rhombus_second_diagonal(rhombus_from_triple(validate_triple(7, 24, 25))));
      });
  add("rhombus.7_24_25.area", "area 2(7 x 24)", kRhombus, ExactScalar(336), [](const RunConfig&) {
    return exact(rhombus_area(rhombus_from_triple(validate_triple(7, 24, 25))));
  });
  add("rhombus.square_25.area", "the square of side 25 as the rhombus with diagonal 25√2", kRhombus,
      ExactScalar(625), [](const RunConfig&) { return exact(rhombus_area(Rhombus(25, normalize_surd(25, 2)))); });

  // Construction from two triples.
  add("construct.sides", "side multiset of the quadrilateral glued from (3,4,5) and (8,15,17)", kGanesa,
      std::string("{40, 51, 68, 75}"), [](const RunConfig&) {
        const auto built = ganesa();
        const auto& s = built.sides.sides();
        return token(set_token(std::set<ExactScalar>(s.begin(), s.end())));
      });
  add("construct.glue_diagonal", "common hypotenuse 5 x 17", kGanesa, ExactScalar(85),
      [](const RunConfig&) { return exact(ganesa().glue_diagonal); });
  add("construct.split_area", "two right triangles 1734 + 1500", kGanesa, ExactScalar(3234),
      [](const RunConfig&) { return exact(*area_by_diagonal(ganesa().glue_split()).split_area); });
  add("construct.concyclic", "embedded construction lies on one circle", kGanesa, std::string("true"),
      [](const RunConfig& c) {
        return token(bool_token(
            concyclic(embed(ganesa().glue_split(), c.precision_digits), oracle_tolerance(c.precision_digits))));
      });

  // Indeterminacy: hinging the figure changes the area.
  add("scan.square_25.max_area", "largest sampled area over the side-25 rhombus family", kIndeterminate,
      ExactScalar(625), [](const RunConfig& c) {
        const auto scan = area_scan(QuadSides(25, 25, 25, 25), c.scan_steps, c.precision_digits);
        return close(scan.max_area, ApproxScalar::power_of_ten(-3, c.precision_digits));
      });
  add("scan.square_25.argmax", "diagonal of the largest sample, within one grid step of 25√2", kIndeterminate,
      normalize_surd(25, 2), [](const RunConfig& c) {
        const auto scan = area_scan(QuadSides(25, 25, 25, 25), c.scan_steps, c.precision_digits);
        return close(scan.argmax_diagonal, approx(scan.step, c.precision_digits));
      });
  add("scan.square_25.varies", "sampled areas are not constant", kIndeterminate, std::string("true"),
      [](const RunConfig& c) {
        const auto scan = area_scan(QuadSides(25, 25, 25, 25), c.scan_steps, c.precision_digits);
        const auto [lo, hi] = std::minmax_element(scan.samples.begin(), scan.samples.end(),
                                                  [](const auto& a, const auto& b) { return a.area < b.area; });
        return token(bool_token(lo->area < hi->area));
      });
  add("scan.rhombus_25.d30", "hinged side-25 rhombus with diagonal 30", kRhombus, ExactScalar(600),
      [](const RunConfig& c) {
        return close(shoelace_area(embed(DiagQuad(QuadSides(25, 25, 25, 25), 30), c.precision_digits)),
                     oracle_tolerance(c.precision_digits));
      });
  add("scan.rhombus_25.d14", "hinged side-25 rhombus with diagonal 14", kRhombus, ExactScalar(336),
      [](const RunConfig& c) {
        return close(shoelace_area(embed(DiagQuad(QuadSides(25, 25, 25, 25), 14), c.precision_digits)),
                     oracle_tolerance(c.precision_digits));
      });
  add("scan.worked.argmax", "best diagonal on the (75,40)/(51,68) split, within one grid step of 85",
      kIndeterminate, ExactScalar(85), [](const RunConfig& c) {
        const auto scan = area_scan(QuadSides(75, 40, 51, 68), c.scan_steps, c.precision_digits);
        return close(scan.argmax_diagonal, approx(scan.step, c.precision_digits));
      });
  add("scan.worked.bounded", "largest sampled area does not exceed 3234 + 1e-6", kIndeterminate,
      std::string("true"), [](const RunConfig& c) {
        const auto scan = area_scan(QuadSides(75, 40, 51, 68), c.scan_steps, c.precision_digits);
        return token(bool_token(scan.max_area <= approx(Rational(3234), c.precision_digits) +
                                                     ApproxScalar::power_of_ten(-6, c.precision_digits)));
      });

  // Seeded property sweeps.
  add("property.gross_vs_sutra", "gross >= four-fold rule, equal iff a=c and b=d (1000 quads, sides <= 500)",
      "derived: AM-GM on the half-sums of opposite sides", std::string("1000/1000"),
      [](const RunConfig& c) { return token(tally(sweep_gross_vs_sutra(c, 1000), 1000)); });
  add("property.heron_vs_oracle", "Heron area matches the embedded shoelace area (500 triangles, sides <= 200)",
      "derived: coordinate embedding", std::string("500/500"),
      [](const RunConfig& c) { return token(tally(sweep_heron_vs_oracle(c, 500), 500)); });
  add("property.scan_maximality",
      "scan peak within one step of the cyclic diagonal, bounded by the four-fold rule, areas vary (50 quads)",
      kIndeterminate, std::string("50/50"),
      [](const RunConfig& c) { return token(tally(sweep_scan_maximality(c, 50), 50)); });
  add("property.sutra_permutations", "four-fold rule invariant under all 24 side orders (200 quads)",
      "derived: symmetric product", std::string("200/200"),
      [](const RunConfig& c) { return token(tally(sweep_sutra_permutations(c, 200), 200)); });
  add("property.reflect_swap", "reflection is an involution preserving sides, diagonal and triangle areas",
      "Lilavati 178 discussion: reflection in the perpendicular bisector of the diagonal", std::string("200/200"),
      [](const RunConfig& c) { return token(tally(sweep_reflect_swap(c, 200), 200)); });
  add("property.brahmagupta_pairs",
      "every construction from triples with hypotenuse <= 25 is integral, concyclic, and obeys the four-fold rule",
      kGanesa, std::string("64/64"), [](const RunConfig& c) {
        int total = 0;
        const int held = sweep_brahmagupta_pairs(c, total);
        return token(tally(held, total));
      });

  return cases;
}

ManifestEntry evaluate(const ManifestCase& c, const RunConfig& config) {
  ManifestEntry entry{c.id, c.description, c.expected, std::string{}, std::nullopt, false, c.provenance};
  Measurement m = c.compute(config);
  entry.computed = std::move(m.value);
  entry.tolerance = std::move(m.tolerance);

  if (const auto* value = std::get_if<ApproxScalar>(&entry.computed)) {
    ApproxScalar target;
    if (const auto* e = std::get_if<ExactScalar>(&entry.expected)) {
      target = approx(*e, config.precision_digits);
    } else if (const auto* s = std::get_if<std::string>(&entry.expected)) {
      target = ApproxScalar::parse(*s, config.precision_digits);
    } else {
      target = std::get<ApproxScalar>(entry.expected);
    }
    entry.pass = entry.tolerance && within(*value, target, *entry.tolerance);
  } else {
    entry.pass = entry.expected == entry.computed;
  }
  return entry;
}

}  // namespace mensura::cli
