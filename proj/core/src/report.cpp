#include "kemeny/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace kemeny {

std::string format_number(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.10g", v);
  return buf.data();
}

std::vector<AggregateRow> aggregate_traces(std::span<const ElicitationTrace* const> traces) {
  std::size_t longest = 0;
  for (const auto* t : traces) longest = std::max(longest, t->steps.size());

  std::vector<AggregateRow> rows;
  rows.reserve(longest);
  for (std::size_t s = 0; s < longest; ++s) {
    double bound_sum = 0.0;
    double gap_sum = 0.0;
    std::int64_t live = 0;
    std::int64_t certified = 0;
    for (const auto* t : traces) {
      if (s >= t->steps.size()) continue;
      const auto& step = t->steps[s];
      ++live;
      bound_sum += step.bound.value_or(0.0);
      if (step.true_gap) {
        gap_sum += *step.true_gap;
        ++certified;
      }
    }
    AggregateRow row{static_cast<std::int64_t>(s + 1), bound_sum / static_cast<double>(live), std::nullopt, live};
    if (certified) row.mean_true_gap = gap_sum / static_cast<double>(certified);
    rows.push_back(row);
  }
  return rows;
}

void write_trace_csv(std::ostream& out, const ElicitationTrace& trace) {
  out << "step,pair_i,pair_j,outcome,total_bound_W,true_gap,pulls_total\n";
  for (const auto& s : trace.steps) {
    out << s.step << ',' << s.pair.i << ',' << s.pair.j << ',' << (s.first_wins ? 1 : 0) << ','
        << (s.bound ? format_number(*s.bound) : "") << ',' << (s.true_gap ? format_number(*s.true_gap) : "") << ','
        << s.pulls_total << '\n';
  }
}

void write_aggregate_csv(std::ostream& out, std::string_view strategy, std::span<const AggregateRow> rows) {
  out << "step,strategy,mean_W,mean_true_gap,live_instances\n";
  for (const auto& r : rows) {
    out << r.step << ',' << strategy << ',' << format_number(r.mean_bound) << ','
        << (r.mean_true_gap ? format_number(*r.mean_true_gap) : "") << ',' << r.live_instances << '\n';
  }
}

void write_comparison_svg(std::ostream& out, std::span<const Series> series, std::optional<double> rho,
                          const std::string& title) {
  constexpr double width = 960, height = 540;
  constexpr double left = 80, right = 200, top = 50, bottom = 60;
  constexpr double plot_w = width - left - right, plot_h = height - top - bottom;
  constexpr std::array<const char*, 8> palette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                               "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

  double max_step = 1.0;
  double max_bound = rho.value_or(0.0);
  for (const auto& s : series) {
    if (!s.rows.empty()) max_step = std::max(max_step, static_cast<double>(s.rows.back().step));
    for (const auto& r : s.rows) max_bound = std::max(max_bound, r.mean_bound);
  }
  if (max_bound <= 0.0) max_bound = 1.0;
  auto px = [&](double step) { return left + plot_w * step / max_step; };
  auto py = [&](double w) { return top + plot_h * (1.0 - w / max_bound); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"960\" height=\"540\" viewBox=\"0 0 960 540\">\n";
  out << "<rect width=\"960\" height=\"540\" fill=\"white\"/>\n";
  out << "<text x=\"" << left << "\" y=\"30\" font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w << "\" y2=\""
      << top + plot_h << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + plot_h
      << "\" stroke=\"black\"/>\n";
  for (int tick = 0; tick <= 5; ++tick) {
    const double w = max_bound * tick / 5.0;
    const double step = max_step * tick / 5.0;
    out << "<text x=\"" << left - 8 << "\" y=\"" << py(w) + 4
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" << format_number(w) << "</text>\n";
    out << "<text x=\"" << px(step) << "\" y=\"" << top + plot_h + 18
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
        << format_number(std::round(step)) << "</text>\n";
  }
  out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 15
      << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">samples</text>\n";
  out << "<text x=\"20\" y=\"" << top + plot_h / 2 << "\" font-family=\"sans-serif\" font-size=\"13\" "
      << "text-anchor=\"middle\" transform=\"rotate(-90 20 " << top + plot_h / 2
      << ")\">mean certified bound</text>\n";
  if (rho) {
    out << "<line x1=\"" << left << "\" y1=\"" << py(*rho) << "\" x2=\"" << left + plot_w << "\" y2=\"" << py(*rho)
        << "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";
  }
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* colour = palette[s % palette.size()];
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& r : series[s].rows) out << px(static_cast<double>(r.step)) << ',' << py(r.mean_bound) << ' ';
    out << "\"/>\n";
    const double ly = top + 20.0 * static_cast<double>(s);
    out << "<line x1=\"" << left + plot_w + 15 << "\" y1=\"" << ly << "\" x2=\"" << left + plot_w + 40 << "\" y2=\""
        << ly << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << left + plot_w + 46 << "\" y=\"" << ly + 4 << "\" font-family=\"sans-serif\" "
        << "font-size=\"12\">" << series[s].name << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace kemeny
