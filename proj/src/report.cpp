#include "listlab/report.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace listlab {

const AlgorithmCost* ComparisonRow::find(AlgorithmKind kind) const {
  auto it = std::find_if(costs.begin(), costs.end(),
                         [&](const AlgorithmCost& c) { return c.algorithm == kind; });
  return it == costs.end() ? nullptr : &*it;
}

namespace {

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

// Splits one record starting at `pos`; advances `pos` past the LF.
std::vector<std::string> read_record(std::string_view text, std::size_t& pos) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  while (pos < text.size()) {
    const char c = text[pos++];
    if (quoted) {
      if (c == '"') {
        if (pos < text.size() && text[pos] == '"') {
          field += '"';
          ++pos;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      break;
    } else {
      field += c;
    }
  }
  if (quoted) throw Error(Errc::ParseError, "unterminated quoted field");
  fields.push_back(std::move(field));
  return fields;
}

template <typename T>
T parse_number(const std::string& field, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
    throw Error(Errc::ParseError,
                "line " + std::to_string(line) + ": '" + field + "' is not a number");
  }
  return value;
}

std::string xml_escape(std::string_view s) {
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

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Smallest 1/2/5 x 10^k step such that five steps cover `max_value`.
std::uint64_t tick_step(std::uint64_t max_value) {
  std::uint64_t magnitude = 1;
  while (true) {
    for (std::uint64_t mult : {1u, 2u, 5u}) {
      if (mult * magnitude * 5 >= max_value) return mult * magnitude;
    }
    magnitude *= 10;
  }
}

constexpr const char* kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759"};

}  // namespace

std::string write_csv(std::span<const ComparisonRow> rows) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& row : rows) {
    for (const auto& cost : row.costs) {
      out << csv_field(row.file) << ',' << row.n << ',' << row.list_size << ','
          << to_string(cost.algorithm) << ',' << to_string(row.model) << ',' << cost.total_cost
          << '\n';
    }
  }
  return out.str();
}

std::vector<ComparisonRow> parse_csv(std::string_view text) {
  std::size_t pos = 0;
  if (text.empty()) throw Error(Errc::ParseError, "empty CSV");
  auto header = read_record(text, pos);
  std::string joined;
  for (std::size_t i = 0; i < header.size(); ++i) joined += (i ? "," : "") + header[i];
  if (joined != kCsvHeader) {
    throw Error(Errc::ParseError, "unexpected CSV header '" + joined + "'");
  }

  std::vector<ComparisonRow> rows;
  std::size_t line = 1;
  while (pos < text.size()) {
    ++line;
    auto fields = read_record(text, pos);
    if (fields.size() != 6) {
      throw Error(Errc::ParseError, "line " + std::to_string(line) + ": expected 6 fields");
    }
    const auto algo = parse_algorithm(fields[3]);
    const auto model = parse_cost_model(fields[4]);
    if (!algo || !model) {
      throw Error(Errc::ParseError, "line " + std::to_string(line) + ": bad algorithm or model");
    }
    const auto n = parse_number<std::size_t>(fields[1], line);
    const auto m = parse_number<std::size_t>(fields[2], line);
    const auto total = parse_number<std::uint64_t>(fields[5], line);

    const bool continues = !rows.empty() && rows.back().file == fields[0] && rows.back().n == n &&
                           rows.back().list_size == m && rows.back().model == *model &&
                           rows.back().find(*algo) == nullptr;
    if (!continues) rows.push_back(ComparisonRow{fields[0], n, m, *model, {}});
    rows.back().costs.push_back({*algo, total});
  }
  return rows;
}

std::string write_wide_csv(std::span<const ComparisonRow> rows) {
  std::ostringstream out;
  out << "File Name,Size of Req Seq,Size of List";
  if (!rows.empty()) {
    for (const auto& cost : rows.front().costs) {
      out << ",Access Cost " << upper(to_string(cost.algorithm));
    }
  }
  out << '\n';
  for (const auto& row : rows) {
    out << csv_field(row.file) << ',' << row.n << ',' << row.list_size;
    for (const auto& cost : row.costs) out << ',' << cost.total_cost;
    out << '\n';
  }
  return out.str();
}

std::string format_summary(std::span<const ComparisonRow> rows) {
  std::ostringstream out;
  std::size_t name_width = 9;
  for (const auto& row : rows) name_width = std::max(name_width, row.file.size());
  out << std::left << std::setw(static_cast<int>(name_width)) << "File Name" << std::right
      << std::setw(14) << "Req Seq" << std::setw(10) << "List";
  if (!rows.empty()) {
    for (const auto& cost : rows.front().costs) {
      out << std::setw(14) << upper(to_string(cost.algorithm));
    }
  }
  out << '\n';
  for (const auto& row : rows) {
    out << std::left << std::setw(static_cast<int>(name_width)) << row.file << std::right
        << std::setw(14) << row.n << std::setw(10) << row.list_size;
    for (const auto& cost : row.costs) out << std::setw(14) << cost.total_cost;
    out << '\n';
  }
  return out.str();
}

std::string render_chart_svg(std::span<const ComparisonRow> rows) {
  if (rows.empty()) throw Error(Errc::EmptyReport, "no rows to chart");

  std::vector<AlgorithmKind> algos;
  std::uint64_t max_cost = 1;
  for (const auto& row : rows) {
    for (const auto& cost : row.costs) {
      if (std::find(algos.begin(), algos.end(), cost.algorithm) == algos.end()) {
        algos.push_back(cost.algorithm);
      }
      max_cost = std::max(max_cost, cost.total_cost);
    }
  }
  const auto step = tick_step(max_cost);
  const auto y_max = step * ((max_cost + step - 1) / step);

  const double bar_w = 28.0;
  const double group_gap = 24.0;
  const double group_w = bar_w * static_cast<double>(algos.size()) + group_gap;
  const double left = 90.0, right = 150.0, top = 40.0, bottom = 90.0;
  const double plot_w = std::max(group_w * static_cast<double>(rows.size()), 200.0);
  const double plot_h = 320.0;
  const double width = left + plot_w + right;
  const double height = top + plot_h + bottom;
  auto y_of = [&](std::uint64_t v) {
    return top + plot_h - plot_h * static_cast<double>(v) / static_cast<double>(y_max);
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height)
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<title>Access cost comparison</title>\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\" fill=\"white\"/>\n";

  for (std::uint64_t v = 0; v <= y_max; v += step) {
    const double y = y_of(v);
    svg << "<line class=\"grid\" x1=\"" << fmt(left) << "\" y1=\"" << fmt(y) << "\" x2=\""
        << fmt(left + plot_w) << "\" y2=\"" << fmt(y) << "\" stroke=\"#dddddd\"/>\n"
        << "<text x=\"" << fmt(left - 6) << "\" y=\"" << fmt(y + 4)
        << "\" text-anchor=\"end\">" << v << "</text>\n";
  }
  svg << "<line x1=\"" << fmt(left) << "\" y1=\"" << fmt(top) << "\" x2=\"" << fmt(left)
      << "\" y2=\"" << fmt(top + plot_h) << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << fmt(left) << "\" y1=\"" << fmt(top + plot_h) << "\" x2=\""
      << fmt(left + plot_w) << "\" y2=\"" << fmt(top + plot_h) << "\" stroke=\"black\"/>\n";

  for (std::size_t g = 0; g < rows.size(); ++g) {
    const auto& row = rows[g];
    const double gx = left + group_w * static_cast<double>(g) + group_gap / 2;
    svg << "<g class=\"group\" data-file=\"" << xml_escape(row.file) << "\">\n";
    for (std::size_t a = 0; a < algos.size(); ++a) {
      const auto* cost = row.find(algos[a]);
      if (!cost) continue;
      const double x = gx + bar_w * static_cast<double>(a);
      const double y = y_of(cost->total_cost);
      svg << "<rect class=\"bar\" data-algo=\"" << to_string(algos[a]) << "\" x=\"" << fmt(x)
          << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(bar_w - 2) << "\" height=\""
          << fmt(top + plot_h - y) << "\" fill=\"" << kPalette[a % 4] << "\"><title>"
          << xml_escape(row.file) << ' ' << upper(to_string(algos[a])) << ": "
          << cost->total_cost << "</title></rect>\n";
    }
    const double cx = gx + bar_w * static_cast<double>(algos.size()) / 2;
    svg << "<text x=\"" << fmt(cx) << "\" y=\"" << fmt(top + plot_h + 18)
        << "\" text-anchor=\"middle\">" << xml_escape(row.file) << "</text>\n</g>\n";
  }

  svg << "<text x=\"" << fmt(left + plot_w / 2) << "\" y=\"" << fmt(height - 30)
      << "\" text-anchor=\"middle\" font-size=\"14\">Input file</text>\n"
      << "<text x=\"20\" y=\"" << fmt(top + plot_h / 2) << "\" text-anchor=\"middle\" "
      << "font-size=\"14\" transform=\"rotate(-90 20 " << fmt(top + plot_h / 2)
      << ")\">Access cost</text>\n";

  for (std::size_t a = 0; a < algos.size(); ++a) {
    const double ly = top + 20.0 * static_cast<double>(a);
    const double lx = left + plot_w + 20;
    svg << "<rect x=\"" << fmt(lx) << "\" y=\"" << fmt(ly) << "\" width=\"12\" height=\"12\" fill=\""
        << kPalette[a % 4] << "\"/>\n"
        << "<text x=\"" << fmt(lx + 18) << "\" y=\"" << fmt(ly + 10) << "\">"
        << upper(to_string(algos[a])) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace listlab
