#include "geovqe/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "geovqe/errors.hpp"

namespace geovqe {

namespace {

// Layout: fixed canvas with the plot rectangle inset for axes and labels.
constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 72, kRight = 620, kTop = 30, kBottom = 368;
constexpr double kErrorFloor = 1e-12;  // log-scale floor for ~zero errors

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct Pt {
  double x, y;
};

/// Maps data to pixel coordinates; y is log10(|error|).
struct Frame {
  double xmin, xmax, ylo, yhi;  // ylo/yhi are log10 decades

  double px(double x) const {
    return kLeft + (x - xmin) / (xmax - xmin) * (kRight - kLeft);
  }
  double py(double ylog) const {
    return kBottom - (ylog - ylo) / (yhi - ylo) * (kBottom - kTop);
  }
};

double tick_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0})
    if (raw <= m * mag) return m * mag;
  return 10.0 * mag;
}

std::string svg_plot(const std::vector<TraceSeries>& series, bool x_is_params,
                     const std::string& x_label) {
  if (series.empty()) throw ValidationError("plot: no trace series given");

  std::vector<std::vector<Pt>> pts(series.size());
  double xmin = 0.0, xmax = -1.0, ymin = 1.0, ymax = kErrorFloor;
  for (std::size_t s = 0; s < series.size(); ++s) {
    for (const auto& r : series[s].records) {
      const double x = x_is_params ? r.n_params : r.total_iter;
      const double y = std::max(std::abs(r.energy_error), kErrorFloor);
      pts[s].push_back({x, std::log10(y)});
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (xmax < 0.0) throw ValidationError("plot: every series is empty");

  Frame f;
  f.xmin = xmin;
  f.xmax = xmax > xmin ? xmax : xmin + 1.0;
  if (x_is_params) {
    for (const auto& s : series) f.xmax = std::max(f.xmax, double(s.pool_size));
    f.xmax += 0.5;  // keep the dashed marker off the frame edge
  }
  f.ylo = std::floor(std::log10(ymin));
  f.yhi = std::ceil(std::log10(ymax));
  if (f.yhi <= f.ylo) f.yhi = f.ylo + 1.0;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight
      << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";

  // Gridlines and y ticks: one per decade (thinned if there are many).
  const int decades = static_cast<int>(f.yhi - f.ylo);
  const int ystep = std::max(1, (decades + 7) / 8);
  for (int d = 0; d <= decades; d += ystep) {
    const double ylog = f.ylo + d;
    const double y = f.py(ylog);
    out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(y) << "\" x2=\""
        << num(kRight) << "\" y2=\"" << num(y)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(y + 4)
        << "\" text-anchor=\"end\">1e" << static_cast<int>(ylog) << "</text>\n";
  }
  const double xstep = tick_step(f.xmax - f.xmin, 8);
  for (double x = std::ceil(f.xmin / xstep) * xstep; x <= f.xmax + 1e-9; x += xstep) {
    const double px = f.px(x);
    out << "<line x1=\"" << num(px) << "\" y1=\"" << num(kBottom) << "\" x2=\""
        << num(px) << "\" y2=\"" << num(kBottom + 4)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << num(px) << "\" y=\"" << num(kBottom + 18)
        << "\" text-anchor=\"middle\">" << static_cast<long long>(std::llround(x))
        << "</text>\n";
  }

  // Axes.
  out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\""
      << num(kLeft) << "\" y2=\"" << num(kBottom)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kBottom) << "\" x2=\""
      << num(kRight) << "\" y2=\"" << num(kBottom)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "<text x=\"" << num((kLeft + kRight) / 2) << "\" y=\"" << num(kHeight - 8)
      << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
  out << "<text x=\"16\" y=\"" << num((kTop + kBottom) / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << num((kTop + kBottom) / 2) << ")\">energy error (Ha)</text>\n";

  if (x_is_params) {
    int uccsd = 0;
    for (const auto& s : series) uccsd = std::max(uccsd, s.pool_size);
    if (uccsd > 0) {
      const double px = f.px(uccsd);
      out << "<line x1=\"" << num(px) << "\" y1=\"" << num(kTop) << "\" x2=\""
          << num(px) << "\" y2=\"" << num(kBottom)
          << "\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
      out << "<text x=\"" << num(px + 4) << "\" y=\"" << num(kTop + 12)
          << "\" fill=\"#555555\">UCCSD (" << uccsd << ")</text>\n";
    }
  }

  for (std::size_t s = 0; s < pts.size(); ++s) {
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
    if (pts[s].size() > 1) {
      out << "<polyline fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.5\" points=\"";
      for (const auto& p : pts[s]) out << num(f.px(p.x)) << "," << num(f.py(p.y)) << " ";
      out << "\"/>\n";
    }
    for (const auto& p : pts[s])
      out << "<circle cx=\"" << num(f.px(p.x)) << "\" cy=\"" << num(f.py(p.y))
          << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
  }

  // Legend, top-right inside the plot rectangle.
  const double lx = kRight - 190, ly0 = kTop + 8;
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
    const double ly = ly0 + 16.0 * static_cast<double>(s);
    out << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\""
        << num(lx + 22) << "\" y2=\"" << num(ly) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << num(lx + 28) << "\" y=\"" << num(ly + 4) << "\">"
        << series[s].label << "</text>\n";
  }

  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace

std::string error_vs_iterations_svg(const std::vector<TraceSeries>& series) {
  return svg_plot(series, /*x_is_params=*/false, "iterations");
}

std::string error_vs_params_svg(const std::vector<TraceSeries>& series) {
  return svg_plot(series, /*x_is_params=*/true, "ansatz parameters");
}

void write_svg(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write SVG: " + path.string());
  out << content;
  if (!out) throw IoError("write error on SVG: " + path.string());
}

}  // namespace geovqe
