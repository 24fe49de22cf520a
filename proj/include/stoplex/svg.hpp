#pragma once

#include <algorithm>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "stoplex/corpus.hpp"
#include "stoplex/distribution.hpp"
#include "stoplex/selector.hpp"

namespace stoplex {

namespace svg_detail {

inline constexpr double kWidth = 800.0;
inline constexpr double kHeight = 500.0;
inline constexpr double kLeft = 80.0;
inline constexpr double kRight = 20.0;
inline constexpr double kTop = 30.0;
inline constexpr double kBottom = 60.0;

inline constexpr const char* kWordColor = "#1f77b4";
inline constexpr const char* kStopwordColor = "#ff7f0e";

inline std::string num(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", v);
  return buffer;
}

inline std::string sci(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3g", v);
  return buffer;
}

/// Linear map of [lo, hi] onto the horizontal or vertical plot area.
struct Axis {
  double lo;
  double hi;
  double pixel_lo;
  double pixel_hi;

  [[nodiscard]] double operator()(double v) const {
    const double span = hi > lo ? hi - lo : 1.0;
    return pixel_lo + (v - lo) / span * (pixel_hi - pixel_lo);
  }
};

class Canvas {
 public:
  Canvas(const std::string& title, const std::string& x_label, const std::string& y_label,
         Axis x, Axis y)
      : x_(x), y_(y) {
    out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(kWidth) +
            "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " +
            num(kHeight) + "\">\n";
    out_ += "<title>" + title + "</title>\n";
    out_ += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
            "\" fill=\"white\"/>\n";
    const double x0 = kLeft;
    const double x1 = kWidth - kRight;
    const double y0 = kHeight - kBottom;
    const double y1 = kTop;
    out_ += "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
    out_ += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x1) + "\" y2=\"" +
            num(y0) + "\"/>\n";
    out_ += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x0) + "\" y2=\"" +
            num(y1) + "\"/>\n";
    out_ += "</g>\n";
    out_ += "<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"11\">\n";
    out_ += text(x0, y0 + 16, sci(x.lo), "middle");
    out_ += text(x1, y0 + 16, sci(x.hi), "middle");
    out_ += text(x0 - 6, y0 + 4, sci(y.lo), "end");
    out_ += text(x0 - 6, y1 + 4, sci(y.hi), "end");
    out_ += "</g>\n";
    out_ += "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"13\">\n";
    out_ += text((x0 + x1) / 2, kHeight - 15, x_label, "middle", "x-label");
    out_ += "<text class=\"y-label\" x=\"20\" y=\"" + num((y0 + y1) / 2) +
            "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " + num((y0 + y1) / 2) + ")\">" +
            y_label + "</text>\n";
    out_ += "</g>\n";
  }

  void open_group(const std::string& cls, const std::string& attributes) {
    out_ += "<g class=\"" + cls + "\" " + attributes + ">\n";
  }
  void close_group() { out_ += "</g>\n"; }

  void point(double x, double y, double radius) {
    out_ += "<circle cx=\"" + num(x_(x)) + "\" cy=\"" + num(y_(y)) + "\" r=\"" + num(radius) + "\"/>\n";
  }

  void vertical(double x, const std::string& cls, const std::string& label) {
    const double px = x_(x);
    out_ += "<line class=\"" + cls + "\" x1=\"" + num(px) + "\" y1=\"" + num(kHeight - kBottom) +
            "\" x2=\"" + num(px) + "\" y2=\"" + num(kTop) + "\"/>\n";
    out_ += text(px, kTop - 8, label, "middle");
  }

  std::string finish() {
    out_ += "</svg>\n";
    return std::move(out_);
  }

 private:
  static std::string text(double x, double y, const std::string& s, const char* anchor,
                          const std::string& cls = {}) {
    std::string t = "<text";
    if (!cls.empty()) t += " class=\"" + cls + "\"";
    t += " x=\"" + num(x) + "\" y=\"" + num(y) + "\" text-anchor=\"" + anchor + "\">" + s + "</text>\n";
    return t;
  }

  Axis x_;
  Axis y_;
  std::string out_;
};

inline double point_radius(std::size_t n) { return n > 2000 ? 1.0 : (n > 200 ? 2.0 : 4.0); }

}  // namespace svg_detail

/// Scatter of (i, p_i) with the stop-word candidates highlighted and
/// reference lines at E - sigma, E and E + sigma.
[[nodiscard]] inline std::string emit_density_plot(const IndexDistribution& dist,
                                                   const StopwordSet& set,
                                                   const MomentSummary& summary) {
  using namespace svg_detail;
  const double first = static_cast<double>(dist.first_index);
  const double last = dist.size() > 0 ? dist.index(dist.size() - 1) : first;
  double p_max = 0.0;
  for (const double p : dist.probabilities) p_max = std::max(p_max, p);
  if (!(p_max > 0.0)) p_max = 1.0;

  const Axis x{first, last, kLeft, kWidth - kRight};
  const Axis y{0.0, p_max, kHeight - kBottom, kTop};
  Canvas canvas("Probability of unique words by first appearance", "index i",
                "probability p_i", x, y);

  const double radius = point_radius(dist.size());
  std::vector<bool> is_candidate(dist.size(), false);
  for (const auto& c : set.candidates) {
    if (c.first_index >= dist.first_index && c.first_index - dist.first_index < dist.size()) {
      is_candidate[c.first_index - dist.first_index] = true;
    }
  }

  canvas.open_group("words", std::string("fill=\"") + kWordColor + "\"");
  for (std::size_t k = 0; k < dist.size(); ++k) {
    if (!is_candidate[k]) canvas.point(dist.index(k), dist.probabilities[k], radius);
  }
  canvas.close_group();

  canvas.open_group("stopwords", std::string("fill=\"") + kStopwordColor + "\"");
  for (std::size_t k = 0; k < dist.size(); ++k) {
    if (is_candidate[k]) canvas.point(dist.index(k), dist.probabilities[k], radius);
  }
  canvas.close_group();

  const double lower = summary.expectation - summary.std_dev;
  const double upper = summary.expectation + summary.std_dev;
  auto clamp = [&](double v) { return std::clamp(v, first, last); };
  canvas.open_group("reference",
                    "stroke=\"#555555\" stroke-dasharray=\"4 3\" font-family=\"sans-serif\" "
                    "font-size=\"11\"");
  canvas.vertical(clamp(lower), "ref-lower", "E-σ");
  canvas.vertical(clamp(summary.expectation), "ref-mean", "E");
  canvas.vertical(clamp(upper), "ref-upper", "E+σ");
  canvas.close_group();
  return canvas.finish();
}

/// Probabilities in descending order with a cutoff line after rank N - k;
/// the k lowest-ranked points are the candidates.
[[nodiscard]] inline std::string emit_sorted_plot(const Lexicon& lexicon, const StopwordSet& set) {
  using namespace svg_detail;
  std::vector<double> sorted;
  sorted.reserve(lexicon.size());
  for (const auto& entry : lexicon.entries) sorted.push_back(entry.probability);
  std::ranges::sort(sorted, std::greater<>());

  const std::size_t n = sorted.size();
  const std::size_t cutoff_rank = n >= set.count() ? n - set.count() : 0;
  const double p_max = n > 0 && sorted.front() > 0.0 ? sorted.front() : 1.0;

  const Axis x{0.0, static_cast<double>(n) + 1.0, kLeft, kWidth - kRight};
  const Axis y{0.0, p_max, kHeight - kBottom, kTop};
  Canvas canvas("Unique words sorted by probability", "rank", "probability p_i", x, y);

  const double radius = point_radius(n);
  canvas.open_group("words", std::string("fill=\"") + kWordColor + "\"");
  for (std::size_t r = 0; r < cutoff_rank; ++r) canvas.point(static_cast<double>(r + 1), sorted[r], radius);
  canvas.close_group();
  canvas.open_group("stopwords", std::string("fill=\"") + kStopwordColor + "\"");
  for (std::size_t r = cutoff_rank; r < n; ++r) canvas.point(static_cast<double>(r + 1), sorted[r], radius);
  canvas.close_group();

  canvas.open_group("cutoff", "stroke=\"#d62728\" data-rank=\"" + std::to_string(cutoff_rank) +
                                  "\" font-family=\"sans-serif\" font-size=\"11\"");
  canvas.vertical(static_cast<double>(cutoff_rank) + 0.5, "cutoff-line",
                  "rank " + std::to_string(cutoff_rank));
  canvas.close_group();
  return canvas.finish();
}

}  // namespace stoplex
