#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "listlab/algorithms.hpp"
#include "listlab/corpus.hpp"
#include "listlab/report.hpp"

namespace listlab {

/// Synthetic workload over the alphabet {1..alphabet_size}, served on the
/// list [1..alphabet_size].
struct GeneratorSpec {
  Distribution distribution;
  std::size_t alphabet_size = 0;
  std::size_t length = 0;
  std::string label;
};

/// Parses "uniform:m=8:n=1000", "zipf:m=8:n=1000:s=1.2" or
/// "runs:m=8:n=1000:mean=4". Throws InvalidConfig.
GeneratorSpec parse_generator(std::string_view text);

struct RunConfig {
  std::vector<std::filesystem::path> inputs;
  std::vector<GeneratorSpec> generators;
  bool demo = false;  // list 1 2 3, requests 1 2 2 3 3 3
  std::vector<AlgorithmKind> algorithms;
  CostModel model = CostModel::Full;
  VfcPolicy vfc_policy = VfcPolicy::Literal;
  ListOrderPolicy list_order = ListOrderPolicy::FirstOccurrence;
  std::optional<std::size_t> limit;  // keep only the first N requests
  std::set<std::uint8_t> strip_bytes = default_strip_bytes();
  std::uint64_t seed = 0;
  bool trace = false;

  /// Throws InvalidConfig: no algorithm, duplicate algorithm, limit of 0, or no workload.
  void validate() const;
};

struct Workload {
  std::string name;
  ListState list;
  RequestSequence sequence;
};

struct WorkloadTrace {
  std::string name;
  std::vector<RunReport> reports;
};

struct BenchResult {
  std::vector<ComparisonRow> rows;
  std::vector<WorkloadTrace> traces;  // filled only when config.trace is set
};

/// Loads files, generator output and the demo instance in that order. For
/// corpus files the list is derived from the whole preprocessed file before
/// `limit` truncates the requests.
std::vector<Workload> load_workloads(const RunConfig& config);

/// Runs every selected algorithm on every workload. Workloads are processed
/// concurrently; rows come back in workload order. Under the Full model a
/// total below n raises InvariantBreach.
BenchResult run_bench(const RunConfig& config);

std::string format_trace(const WorkloadTrace& trace);

}  // namespace listlab
