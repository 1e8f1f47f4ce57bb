// Static SVG for a diagonal scan. All coordinates go through ApproxScalar and
// are printed with to_fixed(2), so the bytes do not depend on the platform's
// floating point formatting.

#include <algorithm>
#include <sstream>

#include "mensura/cli.hpp"

namespace mensura::cli {
namespace {

constexpr long kWidth = 1000;
constexpr long kHeight = 700;
constexpr long kPlotLeft = 80;
constexpr long kPlotRight = 960;
constexpr long kPlotTop = 50;
constexpr long kPlotBottom = 330;
constexpr long kBoxTop = 390;
constexpr long kBoxSize = 270;
constexpr long kBoxLefts[3] = {25, 365, 705};

class Canvas {
 public:
  explicit Canvas(int digits) : digits_(digits) {}

  ApproxScalar num(long v) const { return approx(Rational(v), digits_); }
  static std::string fx(const ApproxScalar& v) { return v.to_fixed(2); }

  std::ostringstream& out() { return out_; }

  void line(const std::string& x1, const std::string& y1, const std::string& x2, const std::string& y2,
            const char* extra = "") {
    out_ << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
         << "\" stroke=\"black\" stroke-width=\"2\"" << extra << "/>\n";
  }

  void text(const std::string& x, const std::string& y, const std::string& body, const char* anchor = "middle") {
    out_ << "  <text x=\"" << x << "\" y=\"" << y << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\""
         << anchor << "\">" << body << "</text>\n";
  }

 private:
  int digits_;
  std::ostringstream out_;
};

void draw_plot(Canvas& canvas, const QuadSides& q, const ScanResult& scan) {
  const int digits = scan.max_area.digits();
  const ApproxScalar lower = approx(scan.lower, digits);
  const ApproxScalar width = approx(scan.upper - scan.lower, digits);
  const ApproxScalar left = canvas.num(kPlotLeft);
  const ApproxScalar bottom = canvas.num(kPlotBottom);
  const ApproxScalar x_span = canvas.num(kPlotRight - kPlotLeft);
  const ApproxScalar y_span = canvas.num(kPlotBottom - kPlotTop);
  auto map_x = [&](const ApproxScalar& d) { return left + (d - lower) * x_span / width; };
  auto map_y = [&](const ApproxScalar& a) { return bottom - a * y_span / scan.max_area; };

  std::string title = "Area against diagonal for sides ";
  for (std::size_t i = 0; i < 4; ++i) title += (i ? ", " : "") + q.sides()[i].to_string();
  canvas.text("500", "30", title);

  const std::string l = std::to_string(kPlotLeft), r = std::to_string(kPlotRight);
  const std::string t = std::to_string(kPlotTop), b = std::to_string(kPlotBottom);
  canvas.line(l, b, r, b);
  canvas.line(l, b, l, t);
  canvas.text(l, std::to_string(kPlotBottom + 20), scan.lower.to_string());
  canvas.text(r, std::to_string(kPlotBottom + 20), scan.upper.to_string());
  canvas.text("520", std::to_string(kPlotBottom + 40), "diagonal");
  canvas.text(std::to_string(kPlotLeft - 10), t, Canvas::fx(scan.max_area), "end");
  canvas.text(std::to_string(kPlotLeft - 10), b, "0", "end");
  canvas.text("40", "190", "area");

  auto& out = canvas.out();
  out << "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < scan.samples.size(); ++i) {
    out << (i ? " " : "") << Canvas::fx(map_x(scan.samples[i].diagonal)) << ","
        << Canvas::fx(map_y(scan.samples[i].area));
  }
  out << "\"/>\n";
  out << "  <circle cx=\"" << Canvas::fx(map_x(scan.argmax_diagonal)) << "\" cy=\""
      << Canvas::fx(map_y(scan.max_area)) << "\" r=\"5\" fill=\"crimson\" stroke=\"black\" stroke-width=\"2\"/>\n";
}

void draw_snapshot(Canvas& canvas, const QuadSides& q, const ScanResult& scan, std::size_t index, long box_left,
                   const char* label) {
  const int digits = scan.max_area.digits();
  const std::size_t steps = scan.samples.size();
  const ExactScalar diagonal = scan_diagonal(q, index + 1, steps);
  const EmbeddedQuad e = embed(DiagQuad(q, diagonal), digits);

  auto [min_x, max_x] = std::minmax_element(e.points.begin(), e.points.end(),
                                            [](const Point& a, const Point& b) { return a.x < b.x; });
  auto [min_y, max_y] = std::minmax_element(e.points.begin(), e.points.end(),
                                            [](const Point& a, const Point& b) { return a.y < b.y; });
  const ApproxScalar extent = std::max(max_x->x - min_x->x, max_y->y - min_y->y);
  const ApproxScalar two = canvas.num(2);
  const ApproxScalar scale = canvas.num(kBoxSize - 40) / extent;
  const ApproxScalar mid_x = (min_x->x + max_x->x) / two;
  const ApproxScalar mid_y = (min_y->y + max_y->y) / two;
  const ApproxScalar center_x = canvas.num(box_left + kBoxSize / 2);
  const ApproxScalar center_y = canvas.num(kBoxTop + kBoxSize / 2);

  std::array<std::pair<std::string, std::string>, 4> svg_points;
  std::array<Point, 4> mapped;
  for (std::size_t i = 0; i < 4; ++i) {
    mapped[i] = {center_x + (e.points[i].x - mid_x) * scale, center_y - (e.points[i].y - mid_y) * scale};
    svg_points[i] = {Canvas::fx(mapped[i].x), Canvas::fx(mapped[i].y)};
  }

  auto& out = canvas.out();
  out << "  <rect x=\"" << box_left << "\" y=\"" << kBoxTop << "\" width=\"" << kBoxSize << "\" height=\""
      << kBoxSize << "\" fill=\"none\" stroke=\"gray\" stroke-width=\"2\"/>\n";
  out << "  <polygon fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < 4; ++i) out << (i ? " " : "") << svg_points[i].first << "," << svg_points[i].second;
  out << "\"/>\n";
  canvas.line(svg_points[0].first, svg_points[0].second, svg_points[2].first, svg_points[2].second,
              " stroke-dasharray=\"6,4\"");
  for (std::size_t i = 0; i < 4; ++i) {
    out << "  <circle cx=\"" << svg_points[i].first << "\" cy=\"" << svg_points[i].second
        << "\" r=\"3\" fill=\"black\" stroke=\"black\" stroke-width=\"2\"/>\n";
    const Point& p = mapped[i];
    const Point& n = mapped[(i + 1) % 4];
    canvas.text(Canvas::fx((p.x + n.x) / two), Canvas::fx((p.y + n.y) / two), q.sides()[i].to_string());
  }
  canvas.text(std::to_string(box_left + kBoxSize / 2), std::to_string(kBoxTop + kBoxSize + 22),
              std::string(label) + ": d = " + Canvas::fx(scan.samples[index].diagonal) +
                  ", area = " + Canvas::fx(scan.samples[index].area));
}

}  // namespace

std::string render_scan_svg(const QuadSides& q, const ScanResult& scan, int digits) {
  Canvas canvas(digits);
  auto& out = canvas.out();
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  draw_plot(canvas, q, scan);
  draw_snapshot(canvas, q, scan, 0, kBoxLefts[0], "shortest");
  draw_snapshot(canvas, q, scan, scan.argmax_index, kBoxLefts[1], "largest area");
  draw_snapshot(canvas, q, scan, scan.samples.size() - 1, kBoxLefts[2], "longest");
  out << "</svg>\n";
  return out.str();
}

}  // namespace mensura::cli
