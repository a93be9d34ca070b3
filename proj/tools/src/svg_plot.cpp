#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>

namespace niggli::cli {

namespace {

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

}  // namespace

void write_log_bar_chart(std::ostream& os, const std::vector<Bar>& bars,
                         const std::string& title) {
  constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 90, kHeight = 360;
  const double bar_w = 22;
  const double width = kLeft + kRight + bar_w * static_cast<double>(std::max<std::size_t>(bars.size(), 1));
  double vmax = 1;
  for (const auto& b : bars) vmax = std::max(vmax, b.value);
  const int decades = std::max(1, static_cast<int>(std::ceil(std::log10(vmax))));
  auto y_of = [&](double v) {
    const double t = v >= 1 ? std::log10(v) / decades : 0.0;
    return kTop + kHeight * (1.0 - t);
  };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << kTop + kHeight + kBottom << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  os << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
     << escape(title) << "</text>\n";
  for (int d = 0; d <= decades; ++d) {
    const double y = y_of(std::pow(10.0, d));
    os << "<line x1=\"" << kLeft << "\" x2=\"" << width - kRight << "\" y1=\"" << y
       << "\" y2=\"" << y << "\" stroke=\"#ddd\"/>\n";
    os << "<text x=\"" << kLeft - 6 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">1e" << d
       << "</text>\n";
  }
  for (std::size_t i = 0; i < bars.size(); ++i) {
    const double x = kLeft + bar_w * static_cast<double>(i);
    const double y = y_of(bars[i].value);
    os << "<rect x=\"" << x + 2 << "\" y=\"" << y << "\" width=\"" << bar_w - 4
       << "\" height=\"" << kTop + kHeight - y << "\" fill=\"#4a7ab5\"/>\n";
    os << "<text transform=\"translate(" << x + bar_w / 2 + 4 << "," << kTop + kHeight + 8
       << ") rotate(90)\">" << escape(bars[i].label) << "</text>\n";
  }
  os << "<line x1=\"" << kLeft << "\" x2=\"" << kLeft << "\" y1=\"" << kTop << "\" y2=\""
     << kTop + kHeight << "\" stroke=\"black\"/>\n";
  os << "</svg>\n";
}

}  // namespace niggli::cli
