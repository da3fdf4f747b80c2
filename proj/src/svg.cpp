#include "flipforge/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "flipforge/errors.h"
#include "flipforge/phi.h"

namespace flipforge {

namespace {

constexpr double kRadius = 100.0;
constexpr double kPanelWidth = 260.0;
constexpr double kPanelHeight = 270.0;

const char* const kPalette[] = {"#f4d35e", "#8ecae6", "#f28482", "#90be6d",
                                "#cdb4db", "#f7a072", "#a8dadc", "#d4a373"};

std::string num(double x) {
  if (std::fabs(x) < 5e-7) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Point {
  double x;
  double y;
};

void draw_panel(std::ostringstream& svg, const Panel& p, double ox) {
  const Triangulation& t = p.triangulation;
  const int m = t.vertex_count();
  const double cx = ox + kPanelWidth / 2;
  const double cy = 140.0;
  std::vector<Point> at(m);
  for (int k = 0; k < m; ++k) {
    const double theta = 2 * std::numbers::pi * k / m;
    at[k] = {cx + kRadius * std::sin(theta), cy - kRadius * std::cos(theta)};
  }
  svg << "<g>\n";
  if (!p.title.empty()) {
    svg << "<text x=\"" << num(cx) << "\" y=\"20.000000\" text-anchor=\"middle\" font-size=\"13\">"
        << escape(p.title) << "</text>\n";
  }
  for (const Face& f : faces(t)) {
    const char* fill = "#ffffff";
    if (p.colors) fill = kPalette[(p.colors->color_of(f.label()) - 1 + 8000) % 8];
    else if (p.signs) fill = p.signs->color_of(f.label()) > 0 ? "#dbeafe" : "#fde2e4";
    svg << "<polygon points=\"";
    for (Vertex v : {f.low, f.mid, f.high}) svg << num(at[v].x) << "," << num(at[v].y) << " ";
    svg << "\" fill=\"" << fill << "\" stroke=\"none\"/>\n";
    const double gx = (at[f.low].x + at[f.mid].x + at[f.high].x) / 3;
    const double gy = (at[f.low].y + at[f.mid].y + at[f.high].y) / 3;
    std::string mark = std::to_string(f.label());
    if (p.signs) mark += p.signs->color_of(f.label()) > 0 ? "+" : "-";
    svg << "<text x=\"" << num(gx) << "\" y=\"" << num(gy + 4)
        << "\" text-anchor=\"middle\" font-size=\"11\" fill=\"#555555\">" << mark << "</text>\n";
  }
  for (int k = 0; k < m; ++k) {
    const int next = (k + 1) % m;
    if (m == 2 && k == 1) break;
    svg << "<line x1=\"" << num(at[k].x) << "\" y1=\"" << num(at[k].y) << "\" x2=\"" << num(at[next].x)
        << "\" y2=\"" << num(at[next].y) << "\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
  }
  for (const Diagonal& d : t.diagonals()) {
    svg << "<line x1=\"" << num(at[d.lo].x) << "\" y1=\"" << num(at[d.lo].y) << "\" x2=\""
        << num(at[d.hi].x) << "\" y2=\"" << num(at[d.hi].y)
        << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  }
  for (int k = 0; k < m; ++k) {
    const std::string name = k == m - 1 ? "inf" : std::to_string(k);
    const double lx = cx + (kRadius + 14) * (at[k].x - cx) / kRadius;
    const double ly = cy + (kRadius + 14) * (at[k].y - cy) / kRadius;
    svg << "<circle cx=\"" << num(at[k].x) << "\" cy=\"" << num(at[k].y)
        << "\" r=\"3.000000\" fill=\"#000000\"/>\n";
    svg << "<text x=\"" << num(lx) << "\" y=\"" << num(ly + 4)
        << "\" text-anchor=\"middle\" font-size=\"12\">" << name << "</text>\n";
  }
  svg << "</g>\n";
}

}  // namespace

std::string render_svg(const std::vector<Panel>& panels) {
  std::ostringstream svg;
  const double width = kPanelWidth * static_cast<double>(std::max<std::size_t>(panels.size(), 1));
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
      << num(kPanelHeight) << "\" viewBox=\"0 0 " << num(width) << " " << num(kPanelHeight)
      << "\">\n";
  for (std::size_t i = 0; i < panels.size(); ++i) {
    draw_panel(svg, panels[i], kPanelWidth * static_cast<double>(i));
  }
  svg << "</svg>\n";
  return svg.str();
}

std::vector<Panel> sphere_panels(const SphereTriangulation& s) {
  Panel north{s.north, std::nullopt, std::nullopt, "north"};
  Panel south{s.south, std::nullopt, std::nullopt, "south"};
  if (s.signs) {
    north.signs = s.signs->north;
    south.signs = s.signs->south;
  }
  return {north, south};
}

std::vector<Panel> certificate_panels(const Certificate& cert) {
  std::vector<Panel> out;
  for (std::size_t i = 0; i < cert.chain.size(); ++i) {
    const SignedWord& w = cert.chain[i];
    if (!is_signed_permutation(w)) throw DomainError("certificate entry is not a signed permutation");
    std::vector<int> signs(w.size());
    for (int x : w) signs[std::abs(x) - 1] = x > 0 ? 1 : -1;
    std::string title;
    for (std::size_t k = 0; k < w.size(); ++k) title += (k ? " " : "") + std::to_string(w[k]);
    if (i > 0) title = std::string(to_string(cert.kinds.at(i - 1))) + ": " + title;
    out.push_back({phi(abs_word(w)), std::nullopt, Coloring(std::move(signs)), title});
  }
  return out;
}

}  // namespace flipforge
