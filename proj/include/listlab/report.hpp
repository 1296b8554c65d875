#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "listlab/algorithms.hpp"
#include "listlab/list_state.hpp"

namespace listlab {

struct AlgorithmCost {
  AlgorithmKind algorithm = AlgorithmKind::FC;
  std::uint64_t total_cost = 0;

  friend bool operator==(const AlgorithmCost&, const AlgorithmCost&) = default;
};

/// One input file's results: the shape of a comparison table row.
struct ComparisonRow {
  std::string file;
  std::size_t n = 0;
  std::size_t list_size = 0;
  CostModel model = CostModel::Full;
  std::vector<AlgorithmCost> costs;

  const AlgorithmCost* find(AlgorithmKind kind) const;

  friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

inline constexpr std::string_view kCsvHeader = "file,n,list_size,algo,cost_model,total_cost";

/// Long form, one line per (row, algorithm), LF endings, header first.
std::string write_csv(std::span<const ComparisonRow> rows);

/// Inverse of write_csv. Consecutive lines sharing file, n, list_size and
/// cost_model form one row until an algorithm repeats. Throws ParseError.
std::vector<ComparisonRow> parse_csv(std::string_view text);

/// Wide form laid out like the published comparison table:
/// File Name, Size of Req Seq, Size of List, then one "Access Cost X" column per algorithm.
std::string write_wide_csv(std::span<const ComparisonRow> rows);

/// Fixed-width table for the terminal.
std::string format_summary(std::span<const ComparisonRow> rows);

/// Self-contained SVG: one bar group per row, one bar per algorithm, labelled
/// axes and a legend. Output depends only on `rows`. Throws EmptyReport.
std::string render_chart_svg(std::span<const ComparisonRow> rows);

}  // namespace listlab
