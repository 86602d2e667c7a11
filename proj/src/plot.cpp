#include "dubovsky/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <span>
#include <sstream>

#include "dubovsky/errors.hpp"

namespace dubovsky {

namespace {

constexpr double kLeft = 72.0;
constexpr double kRight = 24.0;
constexpr double kTop = 28.0;
constexpr double kBottom = 52.0;

PlotSpec::Range auto_range(std::span<const double> a, std::span<const double> b = {}) {
  double lo = *std::min_element(a.begin(), a.end());
  double hi = *std::max_element(a.begin(), a.end());
  if (!b.empty()) {
    lo = std::min(lo, *std::min_element(b.begin(), b.end()));
    hi = std::max(hi, *std::max_element(b.begin(), b.end()));
  }
  const double span = hi - lo;
  const double pad = span > 0.0 ? 0.05 * span : std::max(0.05 * std::abs(hi), 1e-3);
  return {lo - pad, hi + pad};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

struct Frame {
  double x0, x1, y0, y1;  // pixel box
  PlotSpec::Range h, v;   // data ranges

  double px(double d) const { return x0 + (d - h.first) / (h.second - h.first) * (x1 - x0); }
  double py(double d) const { return y1 - (d - v.first) / (v.second - v.first) * (y1 - y0); }
};

void polyline(std::ostringstream& os, const Frame& f, std::span<const double> hs,
              std::span<const double> vs, const char* cls, const char* colour) {
  os << "<polyline class=\"" << cls << "\" fill=\"none\" stroke=\"" << colour
     << "\" stroke-width=\"1.2\" points=\"";
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (i) os << ' ';
    os << num(f.px(hs[i])) << ',' << num(f.py(vs[i]));
  }
  os << "\"/>\n";
}

void axes(std::ostringstream& os, const Frame& f, const char* hlabel, const char* vlabel) {
  os << "<rect x=\"" << num(f.x0) << "\" y=\"" << num(f.y0) << "\" width=\""
     << num(f.x1 - f.x0) << "\" height=\"" << num(f.y1 - f.y0)
     << "\" fill=\"none\" stroke=\"#333\"/>\n";
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double dh = f.h.first + (f.h.second - f.h.first) * i / kTicks;
    const double dv = f.v.first + (f.v.second - f.v.first) * i / kTicks;
    const double x = f.px(dh);
    const double y = f.py(dv);
    os << "<line x1=\"" << num(x) << "\" y1=\"" << num(f.y1) << "\" x2=\"" << num(x)
       << "\" y2=\"" << num(f.y1 + 5) << "\" stroke=\"#333\"/>\n"
       << "<text x=\"" << num(x) << "\" y=\"" << num(f.y1 + 18)
       << "\" font-size=\"11\" text-anchor=\"middle\">" << tick_label(dh) << "</text>\n"
       << "<line x1=\"" << num(f.x0 - 5) << "\" y1=\"" << num(y) << "\" x2=\"" << num(f.x0)
       << "\" y2=\"" << num(y) << "\" stroke=\"#333\"/>\n"
       << "<text x=\"" << num(f.x0 - 8) << "\" y=\"" << num(y + 4)
       << "\" font-size=\"11\" text-anchor=\"end\">" << tick_label(dv) << "</text>\n";
  }
  os << "<text class=\"axis-label\" x=\"" << num((f.x0 + f.x1) / 2) << "\" y=\""
     << num(f.y1 + 40) << "\" font-size=\"13\" text-anchor=\"middle\">" << hlabel
     << "</text>\n"
     << "<text class=\"axis-label\" x=\"16\" y=\"" << num((f.y0 + f.y1) / 2)
     << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
     << num((f.y0 + f.y1) / 2) << ")\">" << vlabel << "</text>\n";
}

}  // namespace

std::string render_svg(const Trajectory& traj, const PlotSpec& spec) {
  if (traj.size() < 2 || traj.ys.size() != traj.size() || traj.times.size() != traj.size()) {
    throw DomainError("cannot plot a trajectory with fewer than two nodes");
  }
  if (spec.width <= 0 || spec.height <= 0) throw DomainError("plot dimensions must be positive");
  const double w = spec.width;
  const double h = spec.height;
  if (w <= kLeft + kRight || h <= kTop + kBottom) throw DomainError("plot too small");

  const bool phase = spec.kind == PlotSpec::Kind::phase;
  Frame f{kLeft, w - kRight, kTop, h - kBottom, {}, {}};
  if (phase) {
    f.h = spec.horizontal.value_or(auto_range(traj.xs));
    f.v = spec.vertical.value_or(auto_range(traj.ys));
  } else {
    f.h = spec.horizontal.value_or(PlotSpec::Range{traj.times.front(), traj.times.back()});
    f.v = spec.vertical.value_or(auto_range(traj.xs, traj.ys));
  }
  if (!(f.h.second > f.h.first) || !(f.v.second > f.v.first)) {
    throw DomainError("plot ranges must have positive extent");
  }

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
     << spec.height << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height
     << "\" font-family=\"sans-serif\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (phase) {
    axes(os, f, "x", "y");
    polyline(os, f, traj.xs, traj.ys, "series-phase", "#1f4e9c");
  } else {
    axes(os, f, "t", "x, y");
    polyline(os, f, traj.times, traj.xs, "series-x", "#1f4e9c");
    polyline(os, f, traj.times, traj.ys, "series-y", "#c0392b");
    const double lx = f.x1 - 70;
    const double ly = f.y0 + 10;
    os << "<g class=\"legend\">\n"
       << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 18)
       << "\" y2=\"" << num(ly) << "\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n"
       << "<text x=\"" << num(lx + 24) << "\" y=\"" << num(ly + 4)
       << "\" font-size=\"12\">x(t)</text>\n"
       << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly + 16) << "\" x2=\"" << num(lx + 18)
       << "\" y2=\"" << num(ly + 16) << "\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n"
       << "<text x=\"" << num(lx + 24) << "\" y=\"" << num(ly + 20)
       << "\" font-size=\"12\">y(t)</text>\n"
       << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void render_plot(const Trajectory& traj, const PlotSpec& spec, const std::string& path) {
  const auto svg = render_svg(traj, spec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << svg;
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace dubovsky
