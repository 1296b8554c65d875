#include "listlab/algorithms.hpp"

#include <algorithm>
#include <unordered_set>

namespace listlab {

std::string_view to_string(AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::MTF: return "mtf";
    case AlgorithmKind::TRANS: return "trans";
    case AlgorithmKind::FC: return "fc";
    case AlgorithmKind::VFC: return "vfc";
  }
  return "?";
}

std::optional<AlgorithmKind> parse_algorithm(std::string_view text) {
  for (auto kind : kAllAlgorithms) {
    if (text == to_string(kind)) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(VfcPolicy policy) {
  return policy == VfcPolicy::Literal ? "literal" : "strict";
}

std::optional<VfcPolicy> parse_vfc_policy(std::string_view text) {
  if (text == "literal") return VfcPolicy::Literal;
  if (text == "strict") return VfcPolicy::StrictHomogeneous;
  return std::nullopt;
}

StepOutcome mtf_step(ListState& state, Symbol request, CostModel model) {
  const auto p = state.position_of(request);
  state.move_forward(p, 1);
  return {p, access_cost(model, p), 1};
}

StepOutcome trans_step(ListState& state, Symbol request, CostModel model) {
  const auto p = state.position_of(request);
  if (p > 1) state.move_forward(p, p - 1);
  return {p, access_cost(model, p), 1};
}

void frequency_count_reorganize(ListState& state, Symbol accessed) {
  const auto j = state.position_of(accessed);
  const auto f = state.freq_at(j);
  for (std::size_t i = 1; i < j; ++i) {
    const auto fi = state.freq_at(i);
    if (f > fi) {
      state.move_forward(j, i);
      return;
    }
    if (f == fi) {
      // i + 1 <= j <= size here, so the successor always exists.
      if (f > state.freq_at(i + 1)) {
        state.move_forward(j, i);
        return;
      }
    }
  }
}

StepOutcome fc_step(ListState& state, Symbol request, CostModel model) {
  const auto p = state.position_of(request);
  state.add_freq(p, 1);
  frequency_count_reorganize(state, request);
  return {p, access_cost(model, p), 1};
}

std::uint64_t vfc_lookahead_size(std::uint64_t f_elem, std::uint64_t f_head) {
  return (f_elem > f_head ? f_elem - f_head : f_head - f_elem) + 1;
}

namespace {

bool window_triggers(std::span<const Symbol> window, Symbol request, VfcPolicy policy) {
  if (policy == VfcPolicy::Literal) {
    return std::find(window.begin(), window.end(), request) != window.end();
  }
  return !window.empty() &&
         std::all_of(window.begin(), window.end(), [&](Symbol s) { return s == request; });
}

}  // namespace

StepOutcome vfc_step(VfcRunState& run, std::span<const Symbol> sequence, CostModel model,
                     VfcPolicy policy) {
  if (run.cursor >= sequence.size()) {
    throw Error(Errc::CursorExhausted, "no unconsumed requests remain");
  }
  auto& list = run.list;
  const Symbol request = sequence[run.cursor];
  const auto p = list.position_of(request);
  const auto f = list.freq_at(p);

  std::uint64_t block = 1;
  if (run.head_freq_cache > f) {
    const auto lookahead = vfc_lookahead_size(f, run.head_freq_cache);
    const std::size_t remaining = sequence.size() - run.cursor;
    const std::size_t window_len = static_cast<std::size_t>(
        std::min<std::uint64_t>(lookahead - 1, remaining - 1));
    if (window_triggers(sequence.subspan(run.cursor + 1, window_len), request, policy)) {
      block = std::min<std::uint64_t>(lookahead, remaining);
    }
  }

  // The first request of a block costs its position; every further request
  // in the block is charged one unit.
  const auto cost = access_cost(model, p) + (block - 1);
  list.add_freq(p, block);
  frequency_count_reorganize(list, request);
  run.head_freq_cache = list.head_freq();
  run.cursor += block;
  return {p, cost, static_cast<std::size_t>(block)};
}

namespace {

void check_alphabet(const ListState& list, std::span<const Symbol> sequence) {
  std::unordered_set<Symbol> alphabet(list.order().begin(), list.order().end());
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (!alphabet.contains(sequence[i])) {
      throw Error(Errc::SymbolNotInList, "request " + std::to_string(i) + " (symbol " +
                                             std::to_string(sequence[i].id) +
                                             ") is not in the list");
    }
  }
}

}  // namespace

RunReport run_algorithm(AlgorithmKind kind, ListState list, std::span<const Symbol> sequence,
                        CostModel model, const RunOptions& options) {
  check_alphabet(list, sequence);

  RunReport report;
  report.kind = kind;
  report.model = model;
  report.requests = sequence.size();
  report.trace.reserve(sequence.size());

  auto record = [&](Symbol request, const StepOutcome& step, const ListState& state) {
    report.total_cost += step.cost;
    StepRecord rec{request, step.position_before, step.cost, step.consumed, std::nullopt};
    if (options.record_lists) {
      rec.list_after.emplace(state.order().begin(), state.order().end());
    }
    report.trace.push_back(std::move(rec));
  };

  if (kind == AlgorithmKind::VFC) {
    VfcRunState run(std::move(list));
    while (run.cursor < sequence.size()) {
      const auto request = sequence[run.cursor];
      const auto step = vfc_step(run, sequence, model, options.vfc_policy);
      record(request, step, run.list);
    }
    report.final_list = std::move(run.list);
    return report;
  }

  for (auto request : sequence) {
    StepOutcome step;
    switch (kind) {
      case AlgorithmKind::MTF: step = mtf_step(list, request, model); break;
      case AlgorithmKind::TRANS: step = trans_step(list, request, model); break;
      case AlgorithmKind::FC: step = fc_step(list, request, model); break;
      case AlgorithmKind::VFC: break;
    }
    record(request, step, list);
  }
  report.final_list = std::move(list);
  return report;
}

}  // namespace listlab
