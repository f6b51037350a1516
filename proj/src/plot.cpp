#include "tscx/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "tscx/error.hpp"
#include "tscx/series.hpp"

namespace tscx {

PlotKind parse_plot_kind(std::string_view text) {
  if (text == "line_by_scale") return PlotKind::line_by_scale;
  if (text == "grouped_bars") return PlotKind::grouped_bars;
  if (text == "box_by_group") return PlotKind::box_by_group;
  throw Error(ErrorKind::usage, "unknown plot kind '" + std::string(text) + "'");
}

namespace {

double quantile7(const std::vector<double>& sorted, double p) {
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

const char* color(std::size_t i) { return kPalette[i % std::size(kPalette)]; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string datum(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string escape(std::string_view s) {
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

struct Frame {
  double x0, y0, width, height;  // plotting area inside the panel
};

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

Range padded(double lo, double hi) {
  if (!(hi > lo)) {
    const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.1;
    return {lo - pad, hi + pad};
  }
  const double pad = (hi - lo) * 0.05;
  return {lo - pad, hi + pad};
}

double map_y(const Frame& f, const Range& r, double v) { return f.y0 + f.height - (v - r.lo) / (r.hi - r.lo) * f.height; }

void y_axis(std::ostringstream& svg, const Frame& f, const Range& r) {
  svg << "<line class=\"axis\" x1=\"" << num(f.x0) << "\" y1=\"" << num(f.y0) << "\" x2=\"" << num(f.x0)
      << "\" y2=\"" << num(f.y0 + f.height) << "\" stroke=\"#000\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double v = r.lo + (r.hi - r.lo) * k / 4.0;
    const double y = map_y(f, r, v);
    char label[32];
    std::snprintf(label, sizeof label, "%.4g", v);
    svg << "<text class=\"ytick\" x=\"" << num(f.x0 - 6) << "\" y=\"" << num(y + 4)
        << "\" font-size=\"10\" text-anchor=\"end\">" << label << "</text>\n";
  }
}

std::string open_svg(double width, double height) {
  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
    << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\" font-family=\"sans-serif\">\n"
    << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height) << "\" fill=\"#fff\"/>\n";
  return s.str();
}

void legend(std::ostringstream& svg, const std::vector<std::string>& names, double x, double y) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    const double yy = y + 16.0 * static_cast<double>(i);
    svg << "<rect class=\"legend\" x=\"" << num(x) << "\" y=\"" << num(yy - 9) << "\" width=\"10\" height=\"10\" fill=\""
        << color(i) << "\"/>\n"
        << "<text x=\"" << num(x + 14) << "\" y=\"" << num(yy) << "\" font-size=\"11\">" << escape(names[i])
        << "</text>\n";
  }
}

template <typename T>
std::vector<T> first_seen(const std::vector<T>& items) {
  std::vector<T> out;
  for (const auto& x : items) {
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

constexpr double kPanelW = 520.0;
constexpr double kPanelH = 220.0;
constexpr double kMarginL = 70.0;
constexpr double kMarginTop = 40.0;
constexpr double kLegendW = 200.0;

std::string render_lines(const ExperimentReport& report) {
  std::vector<std::string> metrics_seen, labels_seen;
  std::vector<std::size_t> scales_seen;
  for (const auto& r : report.rows()) {
    if (!r.value || !std::isfinite(*r.value)) continue;
    metrics_seen.push_back(r.metric);
    labels_seen.push_back(r.label);
    scales_seen.push_back(r.scale);
  }
  if (metrics_seen.empty()) throw Error(ErrorKind::usage, "incompatible report shape: no numeric values to plot");
  const auto metrics = first_seen(metrics_seen);
  const auto labels = first_seen(labels_seen);
  std::set<std::size_t> scale_set(scales_seen.begin(), scales_seen.end());
  const double smin = static_cast<double>(*scale_set.begin());
  const double smax = static_cast<double>(*scale_set.rbegin());

  const double width = kMarginL + kPanelW + kLegendW;
  const double height = kMarginTop + static_cast<double>(metrics.size()) * (kPanelH + 60.0);
  std::ostringstream svg;
  svg << open_svg(width, height);
  for (std::size_t mi = 0; mi < metrics.size(); ++mi) {
    const Frame f{kMarginL, kMarginTop + static_cast<double>(mi) * (kPanelH + 60.0), kPanelW - 20.0, kPanelH};
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& r : report.rows()) {
      if (r.metric == metrics[mi] && r.value && std::isfinite(*r.value)) {
        lo = std::min(lo, *r.value);
        hi = std::max(hi, *r.value);
      }
    }
    const Range yr = padded(lo, hi);
    auto map_x = [&](double s) { return smax > smin ? f.x0 + (s - smin) / (smax - smin) * f.width : f.x0 + f.width / 2; };

    svg << "<g class=\"panel\" data-metric=\"" << escape(metrics[mi]) << "\">\n";
    svg << "<text x=\"" << num(f.x0) << "\" y=\"" << num(f.y0 - 10) << "\" font-size=\"13\">" << escape(metrics[mi])
        << "</text>\n";
    y_axis(svg, f, yr);
    svg << "<line class=\"axis\" x1=\"" << num(f.x0) << "\" y1=\"" << num(f.y0 + f.height) << "\" x2=\""
        << num(f.x0 + f.width) << "\" y2=\"" << num(f.y0 + f.height) << "\" stroke=\"#000\"/>\n";
    for (std::size_t s : scale_set) {
      const double x = map_x(static_cast<double>(s));
      svg << "<text class=\"xtick\" data-scale=\"" << s << "\" x=\"" << num(x) << "\" y=\"" << num(f.y0 + f.height + 14)
          << "\" font-size=\"10\" text-anchor=\"middle\">" << s << "</text>\n";
    }
    svg << "<text x=\"" << num(f.x0 + f.width / 2) << "\" y=\"" << num(f.y0 + f.height + 30)
        << "\" font-size=\"11\" text-anchor=\"middle\">scale factor</text>\n";

    for (std::size_t li = 0; li < labels.size(); ++li) {
      std::vector<std::pair<std::size_t, double>> pts;
      for (const auto& r : report.rows()) {
        if (r.metric == metrics[mi] && r.label == labels[li] && r.value && std::isfinite(*r.value)) {
          pts.emplace_back(r.scale, *r.value);
        }
      }
      if (pts.empty()) continue;
      std::sort(pts.begin(), pts.end());
      svg << "<polyline class=\"series\" data-label=\"" << escape(labels[li]) << "\" fill=\"none\" stroke=\""
          << color(li) << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k) svg << ' ';
        svg << num(map_x(static_cast<double>(pts[k].first))) << ',' << num(map_y(f, yr, pts[k].second));
      }
      svg << "\"/>\n";
      for (const auto& [s, v] : pts) {
        svg << "<circle class=\"point\" data-scale=\"" << s << "\" data-value=\"" << datum(v) << "\" cx=\""
            << num(map_x(static_cast<double>(s))) << "\" cy=\"" << num(map_y(f, yr, v)) << "\" r=\"2.5\" fill=\""
            << color(li) << "\"/>\n";
      }
    }
    svg << "</g>\n";
  }
  legend(svg, labels, kMarginL + kPanelW, kMarginTop + 10);
  svg << "</svg>\n";
  return svg.str();
}

std::string render_bars(const ExperimentReport& report) {
  // One score per (label, metric): the row at the smallest scale present.
  std::map<std::pair<std::string, std::string>, const ReportRow*> pick;
  std::vector<std::string> metrics_seen, labels_seen;
  for (const auto& r : report.rows()) {
    if (!r.value || !std::isfinite(*r.value)) continue;
    auto& slot = pick[{r.label, r.metric}];
    if (slot == nullptr || r.scale < slot->scale) slot = &r;
    metrics_seen.push_back(r.metric);
    labels_seen.push_back(r.label);
  }
  if (pick.empty()) throw Error(ErrorKind::usage, "incompatible report shape: no numeric values to plot");
  const auto metrics = first_seen(metrics_seen);
  const auto labels = first_seen(labels_seen);

  const double group_w = 40.0 + 22.0 * static_cast<double>(labels.size());
  const double plot_w = group_w * static_cast<double>(metrics.size());
  const double width = kMarginL + plot_w + 20.0 + kLegendW;
  const double height = kMarginTop + kPanelH + 60.0;
  const Frame f{kMarginL, kMarginTop, plot_w, kPanelH};
  const Range yr{0.0, 1.0};

  std::ostringstream svg;
  svg << open_svg(width, height);
  svg << "<text x=\"" << num(f.x0) << "\" y=\"" << num(f.y0 - 14) << "\" font-size=\"13\">rescaled score</text>\n";
  y_axis(svg, f, yr);
  svg << "<line class=\"axis\" x1=\"" << num(f.x0) << "\" y1=\"" << num(f.y0 + f.height) << "\" x2=\""
      << num(f.x0 + f.width) << "\" y2=\"" << num(f.y0 + f.height) << "\" stroke=\"#000\"/>\n";

  for (std::size_t mi = 0; mi < metrics.size(); ++mi) {
    std::vector<std::size_t> present;
    std::vector<double> raw;
    std::vector<std::optional<double>> given;
    for (std::size_t li = 0; li < labels.size(); ++li) {
      auto it = pick.find({labels[li], metrics[mi]});
      if (it == pick.end()) continue;
      present.push_back(li);
      raw.push_back(*it->second->value);
      const auto ex = it->second->extra.find("rescaled");
      if (ex != it->second->extra.end() && std::holds_alternative<double>(ex->second)) {
        given.emplace_back(std::get<double>(ex->second));
      } else {
        given.emplace_back();
      }
    }
    const bool all_given = std::all_of(given.begin(), given.end(), [](const auto& g) { return g.has_value(); });
    std::vector<double> heights;
    if (all_given) {
      for (const auto& g : given) heights.push_back(std::clamp(*g, 0.0, 1.0));
    } else {
      heights = plot_scores(metrics[mi], raw);
    }

    const double gx = f.x0 + group_w * static_cast<double>(mi) + 20.0;
    for (std::size_t k = 0; k < present.size(); ++k) {
      const std::size_t li = present[k];
      const double x = gx + 22.0 * static_cast<double>(li);
      const double y = map_y(f, yr, heights[k]);
      svg << "<rect class=\"bar\" data-label=\"" << escape(labels[li]) << "\" data-metric=\"" << escape(metrics[mi])
          << "\" data-value=\"" << datum(raw[k]) << "\" data-height=\"" << datum(heights[k]) << "\" x=\"" << num(x)
          << "\" y=\"" << num(y) << "\" width=\"18\" height=\"" << num(f.y0 + f.height - y) << "\" fill=\""
          << color(li) << "\"/>\n";
    }
    svg << "<text class=\"xtick\" x=\"" << num(gx + 11.0 * static_cast<double>(labels.size())) << "\" y=\""
        << num(f.y0 + f.height + 16) << "\" font-size=\"11\" text-anchor=\"middle\">" << escape(metrics[mi])
        << "</text>\n";
  }
  legend(svg, labels, f.x0 + plot_w + 20.0, kMarginTop + 10);
  svg << "</svg>\n";
  return svg.str();
}

std::string render_boxes(const ExperimentReport& report) {
  std::vector<std::string> metrics_seen, groups_seen;
  std::map<std::pair<std::string, std::string>, std::vector<double>> values;
  for (const auto& r : report.rows()) {
    const auto g = r.extra.find("group");
    if (g == r.extra.end() || !std::holds_alternative<std::string>(g->second)) continue;
    if (!r.value || !std::isfinite(*r.value)) continue;
    const auto& group = std::get<std::string>(g->second);
    values[{r.metric, group}].push_back(*r.value);
    metrics_seen.push_back(r.metric);
    groups_seen.push_back(group);
  }
  if (values.empty()) throw Error(ErrorKind::usage, "incompatible report shape: box plot needs rows with a 'group' column");
  const auto metrics = first_seen(metrics_seen);
  const auto groups = first_seen(groups_seen);

  const double panel_w = 60.0 + 70.0 * static_cast<double>(groups.size());
  const double width = kMarginL + panel_w * static_cast<double>(metrics.size()) + kLegendW;
  const double height = kMarginTop + kPanelH + 60.0;
  std::ostringstream svg;
  svg << open_svg(width, height);
  for (std::size_t mi = 0; mi < metrics.size(); ++mi) {
    const Frame f{kMarginL + panel_w * static_cast<double>(mi), kMarginTop, panel_w - 50.0, kPanelH};
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& g : groups) {
      auto it = values.find({metrics[mi], g});
      if (it == values.end()) continue;
      for (double v : it->second) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    const Range yr = padded(lo, hi);
    svg << "<g class=\"panel\" data-metric=\"" << escape(metrics[mi]) << "\">\n";
    svg << "<text x=\"" << num(f.x0) << "\" y=\"" << num(f.y0 - 14) << "\" font-size=\"13\">" << escape(metrics[mi])
        << "</text>\n";
    y_axis(svg, f, yr);
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      auto it = values.find({metrics[mi], groups[gi]});
      if (it == values.end()) continue;
      const BoxStats b = box_stats(it->second);
      const double cx = f.x0 + 45.0 + 70.0 * static_cast<double>(gi);
      const double half = 18.0;
      svg << "<g class=\"box\" data-group=\"" << escape(groups[gi]) << "\" data-n=\"" << b.n << "\" data-median=\""
          << datum(b.median) << "\" data-q1=\"" << datum(b.q1) << "\" data-q3=\"" << datum(b.q3) << "\">\n";
      svg << "<line class=\"whisker\" x1=\"" << num(cx) << "\" y1=\"" << num(map_y(f, yr, b.whisker_low)) << "\" x2=\""
          << num(cx) << "\" y2=\"" << num(map_y(f, yr, b.whisker_high)) << "\" stroke=\"#000\"/>\n";
      svg << "<rect x=\"" << num(cx - half) << "\" y=\"" << num(map_y(f, yr, b.q3)) << "\" width=\"" << num(2 * half)
          << "\" height=\"" << num(map_y(f, yr, b.q1) - map_y(f, yr, b.q3)) << "\" fill=\"" << color(gi)
          << "\" fill-opacity=\"0.5\" stroke=\"" << color(gi) << "\"/>\n";
      svg << "<line class=\"median\" x1=\"" << num(cx - half) << "\" y1=\"" << num(map_y(f, yr, b.median)) << "\" x2=\""
          << num(cx + half) << "\" y2=\"" << num(map_y(f, yr, b.median)) << "\" stroke=\"#000\" stroke-width=\"2\"/>\n";
      for (double o : b.outliers) {
        svg << "<circle class=\"outlier\" cx=\"" << num(cx) << "\" cy=\"" << num(map_y(f, yr, o))
            << "\" r=\"2\" fill=\"none\" stroke=\"#000\"/>\n";
      }
      svg << "</g>\n";
      svg << "<text class=\"xtick\" x=\"" << num(cx) << "\" y=\"" << num(f.y0 + f.height + 16)
          << "\" font-size=\"11\" text-anchor=\"middle\">" << escape(groups[gi]) << "</text>\n";
    }
    svg << "</g>\n";
  }
  legend(svg, groups, width - kLegendW + 10.0, kMarginTop + 10);
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

BoxStats box_stats(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorKind::data, "box statistics of an empty sample");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  BoxStats b;
  b.n = v.size();
  b.min = v.front();
  b.max = v.back();
  b.q1 = quantile7(v, 0.25);
  b.median = quantile7(v, 0.5);
  b.q3 = quantile7(v, 0.75);
  b.mean = summary(values).mean;
  const double iqr = b.q3 - b.q1;
  const double lo_fence = b.q1 - 1.5 * iqr;
  const double hi_fence = b.q3 + 1.5 * iqr;
  b.whisker_low = *std::find_if(v.begin(), v.end(), [&](double x) { return x >= lo_fence; });
  b.whisker_high = *std::find_if(v.rbegin(), v.rend(), [&](double x) { return x <= hi_fence; });
  for (double x : v) {
    if (x < lo_fence || x > hi_fence) b.outliers.push_back(x);
  }
  return b;
}

std::vector<double> plot_scores(std::string_view metric, std::span<const double> raw) {
  std::vector<double> t(raw.begin(), raw.end());
  try {
    if (metric == "permtest") t = rescale_for_plot(raw, RescaleKind::inv_ln);
    if (metric == "runstest") t = rescale_for_plot(raw, RescaleKind::inv_abs);
  } catch (const Error&) {
    // Statistic outside the transform's domain (chi-square <= 1, z == 0):
    // fall back to the raw scores.
    t.assign(raw.begin(), raw.end());
  }
  if (t.empty()) return t;
  const auto [lo, hi] = std::minmax_element(t.begin(), t.end());
  if (!(*hi > *lo)) return std::vector<double>(t.size(), 1.0);
  return rescale_for_plot(t, RescaleKind::minmax);
}

std::string render_plot(const ExperimentReport& report, PlotKind kind) {
  switch (kind) {
    case PlotKind::line_by_scale: return render_lines(report);
    case PlotKind::grouped_bars: return render_bars(report);
    case PlotKind::box_by_group: return render_boxes(report);
  }
  throw Error(ErrorKind::usage, "unknown plot kind");
}

void write_plot(const ExperimentReport& report, PlotKind kind, const std::filesystem::path& path) {
  const std::string svg = render_plot(report, kind);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::data, "cannot write plot to " + path.string());
  out << svg;
  if (!out) throw Error(ErrorKind::data, "write failed for " + path.string());
}

}  // namespace tscx
