#include "chroma/svg.hpp"

#include <sstream>
#include <stdexcept>

namespace chroma {

namespace {

constexpr long kCanvas = 640;
constexpr long kPad = 24;

// Exact rational -> canvas coordinate with three decimal places.
std::string scaled(const Rat& value, const Rat& lo, const Rat& span, bool flip) {
  Rat unit = span == 0 ? Rat(1, 2) : Rat(Rat(value - lo) / span);
  if (flip) unit = 1 - unit;
  Rat pos = kPad + unit * (kCanvas - 2 * kPad);
  Rat milli_q = pos * 1000;
  mpz_class milli = milli_q.get_num() / milli_q.get_den(); // truncate, exact
  std::string digits = milli.get_str();
  bool neg = false;
  if (!digits.empty() && digits[0] == '-') {
    neg = true;
    digits.erase(digits.begin());
  }
  if (digits.size() <= 3) digits.insert(0, 4 - digits.size(), '0');
  digits.insert(digits.size() - 3, ".");
  return (neg ? "-" : "") + digits;
}

} // namespace

std::string svg_color(int color_index) {
  switch (color_index) {
    case 1: return "#d62728"; // red
    case 2: return "#1f77b4"; // blue
    case 3: return "#2ca02c"; // green
    case 4: return "#ff7f0e"; // orange
    default: {
      int hue = (47 * color_index) % 360;
      return "hsl(" + std::to_string(hue) + ",70%,45%)";
    }
  }
}

std::string render_svg(const PointSet& s,
                       const std::vector<std::pair<std::pair<int, int>, int>>& colored_edges) {
  if (s.dim() != 2) throw std::invalid_argument("render_svg: requires d=2");
  Rat xlo, xhi, ylo, yhi;
  if (s.size() > 0) {
    xlo = xhi = s[0][0];
    ylo = yhi = s[0][1];
    for (int i = 1; i < s.size(); ++i) {
      xlo = std::min(xlo, s[i][0]);
      xhi = std::max(xhi, s[i][0]);
      ylo = std::min(ylo, s[i][1]);
      yhi = std::max(yhi, s[i][1]);
    }
  }
  Rat xspan = xhi - xlo, yspan = yhi - ylo;
  auto px = [&](int i) { return scaled(s[i][0], xlo, xspan, false); };
  auto py = [&](int i) { return scaled(s[i][1], ylo, yspan, true); }; // y grows upward

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\""
      << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& [e, color] : colored_edges)
    out << "  <line x1=\"" << px(e.first) << "\" y1=\"" << py(e.first) << "\" x2=\""
        << px(e.second) << "\" y2=\"" << py(e.second) << "\" stroke=\"" << svg_color(color)
        << "\" stroke-width=\"2\"/>\n";
  for (int i = 0; i < s.size(); ++i)
    out << "  <circle cx=\"" << px(i) << "\" cy=\"" << py(i) << "\" r=\"4\" fill=\"#222\"/>\n";
  out << "</svg>\n";
  return out.str();
}

} // namespace chroma
