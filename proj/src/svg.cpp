#include "apexrep/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <sstream>

namespace apexrep {

namespace {

// Maps exact coordinates to drawing units, widening tiny gaps.
class AxisMap {
 public:
  AxisMap(std::vector<Rational> values, double min_gap) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    double at = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) at += std::max(Rational(values[i] - values[i - 1]).get_d(), min_gap);
      pos_.emplace(values[i], at);
    }
    extent_ = at;
  }
  double operator()(const Rational& v) const { return pos_.at(v); }
  double extent() const { return extent_; }

 private:
  std::map<Rational, double> pos_;
  double extent_ = 0.0;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

// "x#y#t" -> "x#y"; originals and the apex map to themselves.
std::string edge_group(const Vertex& owner) {
  auto last = owner.rfind('#');
  if (last == Vertex::npos || last == 0) return owner;
  return owner.substr(0, last);
}

constexpr std::array<const char*, 10> kPalette = {"#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
                                                  "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#1f9e89"};

}  // namespace

std::string render_svg(const Arrangement& arr, const SvgStyle& style) {
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (const auto& s : arr.segments) {
    auto& along = s.orientation == Orientation::Horizontal ? xs : ys;
    auto& across = s.orientation == Orientation::Horizontal ? ys : xs;
    along.push_back(s.lo);
    along.push_back(s.hi);
    across.push_back(s.fixed);
  }
  const AxisMap mx(xs, style.min_gap);
  const AxisMap my(ys, style.min_gap);
  const double ppu = style.pixels_per_unit;
  const double width = mx.extent() * ppu + 2 * style.margin;
  const double height = my.extent() * ppu + 2 * style.margin;
  auto px = [&](const Rational& x) { return style.margin + mx(x) * ppu; };
  auto py = [&](const Rational& y) { return height - style.margin - my(y) * ppu; };

  std::map<std::string, std::string> colour;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<!-- generator: " << kGeneratorVersion << " -->\n";
  out << "<!-- exaggeration: per-axis monotone remap, coordinate gaps below " << style.min_gap
      << " units drawn as " << style.min_gap << " units; " << ppu << " px per unit -->\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
  for (const auto& s : arr.segments) {
    std::string stroke;
    double stroke_width = 2.0;
    if (s.owner == arr.apex) {
      stroke = "#000000";
      stroke_width = 4.0;
    } else if (s.owner.find('#') == Vertex::npos) {
      stroke = "#1f77b4";
      stroke_width = 3.0;
    } else {
      auto [it, fresh] = colour.try_emplace(edge_group(s.owner), "");
      if (fresh) it->second = kPalette[(colour.size() - 1) % kPalette.size()];
      stroke = it->second;
    }
    const bool h = s.orientation == Orientation::Horizontal;
    const double x1 = h ? px(s.lo) : px(s.fixed);
    const double x2 = h ? px(s.hi) : px(s.fixed);
    const double y1 = h ? py(s.fixed) : py(s.lo);
    const double y2 = h ? py(s.fixed) : py(s.hi);
    out << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2) << "\" y2=\""
        << fmt(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << stroke_width
        << "\" stroke-linecap=\"round\"><title>" << escape(s.owner) << "</title></line>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace apexrep
