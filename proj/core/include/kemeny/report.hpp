#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kemeny/elicitation.hpp"

namespace kemeny {

/// Per-step average over the instances still running at that step.
struct AggregateRow {
  std::int64_t step;
  double mean_bound;
  std::optional<double> mean_true_gap;  ///< over live instances certified at this step
  std::int64_t live_instances;
};

std::vector<AggregateRow> aggregate_traces(std::span<const ElicitationTrace* const> traces);

/// Columns: step,pair_i,pair_j,outcome,total_bound_W,true_gap,pulls_total.
/// Arms are 0-based; outcome is 1 when pair_i won.
void write_trace_csv(std::ostream& out, const ElicitationTrace& trace);

/// Columns: step,strategy,mean_W,mean_true_gap,live_instances.
void write_aggregate_csv(std::ostream& out, std::string_view strategy, std::span<const AggregateRow> rows);

struct Series {
  std::string name;
  std::vector<AggregateRow> rows;
};

/// 960x540 line chart of mean W per step, one polyline per series, with an
/// optional dashed horizontal line at rho.
void write_comparison_svg(std::ostream& out, std::span<const Series> series, std::optional<double> rho,
                          const std::string& title);

/// Shortest decimal form used in CSV cells ("%.10g").
std::string format_number(double v);

}  // namespace kemeny
