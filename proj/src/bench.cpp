#include "listlab/bench.hpp"

#include <algorithm>
#include <charconv>
#include <future>
#include <sstream>

namespace listlab {

namespace {

template <typename T>
T parse_value(std::string_view key, std::string_view text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(Errc::InvalidConfig,
                "generator field '" + std::string(key) + "' has bad value '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

GeneratorSpec parse_generator(std::string_view text) {
  GeneratorSpec spec;
  spec.label = "gen:" + std::string(text);

  std::vector<std::string_view> parts;
  for (std::size_t start = 0;;) {
    auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }

  const auto kind = parts.front();
  double param = kind == "zipf" ? 1.0 : 4.0;
  bool have_m = false, have_n = false;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    auto eq = parts[i].find('=');
    if (eq == std::string_view::npos) {
      throw Error(Errc::InvalidConfig, "generator field '" + std::string(parts[i]) + "' lacks '='");
    }
    auto key = parts[i].substr(0, eq);
    auto value = parts[i].substr(eq + 1);
    if (key == "m") {
      spec.alphabet_size = parse_value<std::size_t>(key, value);
      have_m = true;
    } else if (key == "n") {
      spec.length = parse_value<std::size_t>(key, value);
      have_n = true;
    } else if ((key == "s" && kind == "zipf") || (key == "mean" && kind == "runs")) {
      param = parse_value<double>(key, value);
    } else {
      throw Error(Errc::InvalidConfig, "unknown generator field '" + std::string(key) + "'");
    }
  }
  if (!have_m || !have_n || spec.alphabet_size == 0) {
    throw Error(Errc::InvalidConfig, "generator needs m >= 1 and n");
  }

  if (kind == "uniform") {
    spec.distribution = Uniform{};
  } else if (kind == "zipf") {
    spec.distribution = Zipf{param};
  } else if (kind == "runs") {
    if (!(param >= 1.0)) throw Error(Errc::InvalidConfig, "runs mean must be >= 1");
    spec.distribution = RunLengths{param};
  } else {
    throw Error(Errc::InvalidConfig, "unknown generator '" + std::string(kind) + "'");
  }
  return spec;
}

void RunConfig::validate() const {
  if (algorithms.empty()) {
    throw Error(Errc::InvalidConfig, "at least one algorithm must be selected");
  }
  for (std::size_t i = 0; i < algorithms.size(); ++i) {
    if (std::find(algorithms.begin(), algorithms.begin() + static_cast<std::ptrdiff_t>(i),
                  algorithms[i]) != algorithms.begin() + static_cast<std::ptrdiff_t>(i)) {
      throw Error(Errc::InvalidConfig,
                  "algorithm '" + std::string(to_string(algorithms[i])) + "' listed twice");
    }
  }
  if (limit && *limit == 0) {
    throw Error(Errc::InvalidConfig, "--limit must be at least 1");
  }
  if (inputs.empty() && generators.empty() && !demo) {
    throw Error(Errc::InvalidConfig, "no input files, generators or demo selected");
  }
}

std::vector<Workload> load_workloads(const RunConfig& config) {
  std::vector<Workload> out;
  auto truncate = [&](RequestSequence& seq) {
    if (config.limit && seq.size() > *config.limit) seq.resize(*config.limit);
  };

  for (const auto& path : config.inputs) {
    auto text = load_corpus_file(path);
    auto seq = preprocess(text, config.strip_bytes);
    auto list = derive_list(seq, config.list_order);
    truncate(seq);
    out.push_back({text.source_name, std::move(list), std::move(seq)});
  }

  for (const auto& gen : config.generators) {
    std::vector<Symbol> alphabet;
    for (std::uint32_t i = 1; i <= gen.alphabet_size; ++i) alphabet.push_back(Symbol{i});
    auto seq = generate_sequence(alphabet, gen.length, gen.distribution, config.seed);
    truncate(seq);
    out.push_back({gen.label, ListState(alphabet), std::move(seq)});
  }

  if (config.demo) {
    auto seq = make_sequence({1, 2, 2, 3, 3, 3});
    truncate(seq);
    out.push_back({"demo", ListState::from_ids({1, 2, 3}), std::move(seq)});
  }
  return out;
}

BenchResult run_bench(const RunConfig& config) {
  config.validate();
  const auto workloads = load_workloads(config);

  struct Outcome {
    ComparisonRow row;
    std::vector<RunReport> reports;
  };

  std::vector<std::future<Outcome>> pending;
  pending.reserve(workloads.size());
  for (const auto& work : workloads) {
    pending.push_back(std::async(std::launch::async, [&config, &work] {
      Outcome outcome;
      outcome.row = ComparisonRow{work.name, work.sequence.size(), work.list.size(), config.model, {}};
      const RunOptions options{config.vfc_policy, config.trace};
      for (auto kind : config.algorithms) {
        auto report = run_algorithm(kind, work.list, work.sequence, config.model, options);
        if (config.model == CostModel::Full && report.total_cost < work.sequence.size()) {
          throw Error(Errc::InvariantBreach,
                      std::string(to_string(kind)) + " on '" + work.name + "' charged " +
                          std::to_string(report.total_cost) + " for " +
                          std::to_string(work.sequence.size()) + " requests under the full model");
        }
        outcome.row.costs.push_back({kind, report.total_cost});
        if (config.trace) outcome.reports.push_back(std::move(report));
      }
      return outcome;
    }));
  }

  BenchResult result;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    auto outcome = pending[i].get();
    result.rows.push_back(std::move(outcome.row));
    if (config.trace) {
      result.traces.push_back({workloads[i].name, std::move(outcome.reports)});
    }
  }
  return result;
}

std::string format_trace(const WorkloadTrace& trace) {
  std::ostringstream out;
  for (const auto& report : trace.reports) {
    out << "# " << trace.name << ' ' << to_string(report.kind) << " total=" << report.total_cost
        << '\n'
        << "step\trequest\tposition\tcost\tconsumed\tlist_after\n";
    for (std::size_t i = 0; i < report.trace.size(); ++i) {
      const auto& step = report.trace[i];
      out << i + 1 << '\t' << step.request.id << '\t' << step.position_before << '\t'
          << step.cost_charged << '\t' << step.requests_consumed << '\t'
          << (step.list_after ? format_order(*step.list_after) : std::string("-")) << '\n';
    }
  }
  return out.str();
}

}  // namespace listlab
