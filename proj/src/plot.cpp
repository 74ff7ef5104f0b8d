#include "fanowalls/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace fanowalls {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 400;
constexpr double kMargin = 48;
constexpr int kArcSegments = 96;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string params_label(const WallParams& p) {
  return "(" + to_string(p.a) + "," + to_string(p.b) + "," + to_string(p.c) + ")";
}

struct Frame {
  double beta_lo, beta_hi, alpha_lo, alpha_hi;

  double x(double beta) const {
    return kMargin + (beta - beta_lo) / (beta_hi - beta_lo) * (kWidth - 2 * kMargin);
  }
  double y(double alpha) const {
    return kHeight - kMargin - (alpha - alpha_lo) / (alpha_hi - alpha_lo) * (kHeight - 2 * kMargin);
  }
};

}  // namespace

std::string render_walls_svg(const ChernCharacter& total, const PlotWindow& window,
                             const std::vector<WallCandidate>& walls) {
  if (window.beta_lo >= window.beta_hi) throw DomainError("empty beta window");
  if (window.t_lo < 0 || window.t_lo >= window.t_hi) throw DomainError("empty t window");
  const Frame f{to_double(window.beta_lo), to_double(window.beta_hi),
                std::sqrt(to_double(window.t_lo)), std::sqrt(to_double(window.t_hi))};

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  svg << "<defs><clipPath id=\"plot\"><rect x=\"" << fmt(kMargin) << "\" y=\"" << fmt(kMargin)
      << "\" width=\"" << fmt(kWidth - 2 * kMargin) << "\" height=\""
      << fmt(kHeight - 2 * kMargin) << "\"/></clipPath></defs>\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  svg << "<text x=\"" << fmt(kMargin) << "\" y=\"" << fmt(kMargin / 2)
      << "\" font-family=\"monospace\" font-size=\"12\">"
      << escape(total.ctx.name() + "  ch = " + total.str()) << "</text>\n";

  // Axes: beta along the bottom, alpha along the left edge.
  svg << "<g id=\"axes\" stroke=\"black\" fill=\"none\">\n";
  svg << "<line x1=\"" << fmt(kMargin) << "\" y1=\"" << fmt(kHeight - kMargin) << "\" x2=\""
      << fmt(kWidth - kMargin) << "\" y2=\"" << fmt(kHeight - kMargin) << "\"/>\n";
  svg << "<line x1=\"" << fmt(kMargin) << "\" y1=\"" << fmt(kMargin) << "\" x2=\""
      << fmt(kMargin) << "\" y2=\"" << fmt(kHeight - kMargin) << "\"/>\n";
  svg << "</g>\n";
  svg << "<g font-family=\"monospace\" font-size=\"11\">\n";
  svg << "<text x=\"" << fmt(kMargin) << "\" y=\"" << fmt(kHeight - kMargin + 16) << "\">"
      << escape(to_string(window.beta_lo)) << "</text>\n";
  svg << "<text x=\"" << fmt(kWidth - kMargin) << "\" y=\"" << fmt(kHeight - kMargin + 16)
      << "\" text-anchor=\"end\">" << escape(to_string(window.beta_hi)) << "</text>\n";
  svg << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"" << fmt(kHeight - kMargin + 32)
      << "\" text-anchor=\"middle\">beta</text>\n";
  svg << "<text x=\"" << fmt(kMargin - 6) << "\" y=\"" << fmt(kMargin)
      << "\" text-anchor=\"end\">" << fmt(f.alpha_hi) << "</text>\n";
  svg << "<text x=\"" << fmt(kMargin - 6) << "\" y=\"" << fmt(kHeight - kMargin)
      << "\" text-anchor=\"end\">" << fmt(f.alpha_lo) << "</text>\n";
  svg << "<text x=\"" << fmt(kMargin / 3) << "\" y=\"" << fmt(kHeight / 2)
      << "\">alpha</text>\n";
  svg << "</g>\n";

  svg << "<g id=\"walls\" clip-path=\"url(#plot)\" fill=\"none\" font-family=\"monospace\" "
         "font-size=\"11\">\n";
  std::vector<WallLocus> drawn;
  std::vector<std::pair<Rational, std::optional<Rational>>> marked;
  int index = 0;
  for (const auto& wall : walls) {
    const std::string label = params_label(wall.params);
    if (const auto* s = std::get_if<Semicircle>(&wall.locus);
        s != nullptr && std::find(drawn.begin(), drawn.end(), wall.locus) == drawn.end()) {
      drawn.push_back(wall.locus);
      const double c = to_double(s->center);
      const double r = std::sqrt(to_double(s->radius_sq));
      svg << "<path id=\"wall-" << index++ << "\" stroke=\"steelblue\" d=\"";
      for (int k = 0; k <= kArcSegments; ++k) {
        const double beta = c - r + 2 * r * k / kArcSegments;
        const double alpha = std::sqrt(std::max(0.0, r * r - (beta - c) * (beta - c)));
        svg << (k == 0 ? "M" : " L") << fmt(f.x(beta)) << ' ' << fmt(f.y(alpha));
      }
      svg << "\"><title>" << escape(label + " " + describe(wall.locus)) << "</title></path>\n";
      svg << "<text x=\"" << fmt(f.x(c)) << "\" y=\"" << fmt(f.y(r) - 4)
          << "\" text-anchor=\"middle\" fill=\"steelblue\">" << escape(label) << "</text>\n";
    }
    if (const auto* v = std::get_if<VerticalLine>(&wall.locus);
        v != nullptr && std::find(drawn.begin(), drawn.end(), wall.locus) == drawn.end()) {
      drawn.push_back(wall.locus);
      const double x = f.x(to_double(v->beta));
      svg << "<path id=\"wall-" << index++ << "\" stroke=\"darkred\" d=\"M" << fmt(x) << ' '
          << fmt(f.y(f.alpha_lo)) << " L" << fmt(x) << ' ' << fmt(f.y(f.alpha_hi))
          << "\"><title>" << escape(label + " " + describe(wall.locus)) << "</title></path>\n";
    }
    const std::pair<Rational, std::optional<Rational>> key{wall.beta, wall.t};
    if (std::find(marked.begin(), marked.end(), key) != marked.end()) continue;
    marked.push_back(key);
    const double x = f.x(to_double(wall.beta));
    if (wall.t) {
      const auto* arc = std::get_if<Semicircle>(&wall.locus);
      if (arc != nullptr && wall.beta == arc->center) {
        continue;  // top of an arc already drawn
      }
      const double y = f.y(std::sqrt(to_double(*wall.t)));
      svg << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
          << "\" r=\"3\" fill=\"crimson\"><title>" << escape(label + " t=" + to_string(*wall.t))
          << "</title></circle>\n";
      svg << "<text x=\"" << fmt(x + 5) << "\" y=\"" << fmt(y - 5) << "\" fill=\"crimson\">"
          << escape(label) << "</text>\n";
    } else {
      svg << "<path id=\"ray-" << index++ << "\" stroke=\"gray\" stroke-dasharray=\"4 3\" d=\"M"
          << fmt(x) << ' ' << fmt(f.y(f.alpha_lo)) << " L" << fmt(x) << ' ' << fmt(f.y(f.alpha_hi))
          << "\"><title>" << escape(label + " ray") << "</title></path>\n";
    }
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace fanowalls
