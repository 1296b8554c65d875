#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "listlab/list_state.hpp"

namespace listlab {

enum class AlgorithmKind { MTF, TRANS, FC, VFC };

inline constexpr AlgorithmKind kAllAlgorithms[] = {AlgorithmKind::MTF, AlgorithmKind::TRANS,
                                                   AlgorithmKind::FC, AlgorithmKind::VFC};

/// Lower-case name used on the command line and in CSV output ("mtf", "trans", "fc", "vfc").
std::string_view to_string(AlgorithmKind kind);
std::optional<AlgorithmKind> parse_algorithm(std::string_view text);

/// How VFC decides to serve a lookahead window as one batch.
///
/// Literal batches whenever the current request reappears anywhere in the
/// window; requests for other symbols inside the consumed block are swallowed.
/// StrictHomogeneous batches only when every request in the window equals the
/// current one, so each consumed request really is an access to that symbol.
enum class VfcPolicy { Literal, StrictHomogeneous };

std::string_view to_string(VfcPolicy policy);
std::optional<VfcPolicy> parse_vfc_policy(std::string_view text);

struct StepOutcome {
  std::size_t position_before = 0;
  std::uint64_t cost = 0;
  std::size_t consumed = 1;
};

// Single-request engines. Each mutates `state` in place and returns the
// access cost charged at the pre-access position. Throw SymbolNotInList.

StepOutcome mtf_step(ListState& state, Symbol request, CostModel model);
StepOutcome trans_step(ListState& state, Symbol request, CostModel model);

/// Moves `accessed` (whose counter is already updated) to the first position
/// i < j satisfying f > f_i, or f == f_i and f > f_{i+1}. f_{i+1} may be the
/// accessed element itself, which blocks the move. At most one free exchange.
void frequency_count_reorganize(ListState& state, Symbol accessed);

StepOutcome fc_step(ListState& state, Symbol request, CostModel model);

/// |f_elem - f_head| + 1.
std::uint64_t vfc_lookahead_size(std::uint64_t f_elem, std::uint64_t f_head);

struct VfcRunState {
  explicit VfcRunState(ListState initial)
      : list(std::move(initial)), head_freq_cache(list.empty() ? 0 : list.head_freq()) {}

  ListState list;
  std::size_t cursor = 0;  // 0-based index of the next unconsumed request
  std::uint64_t head_freq_cache = 0;
};

/// Serves sequence[run.cursor] and, when the lookahead branch fires, the
/// following requests of its block. Advances the cursor by `consumed`.
/// Throws CursorExhausted when the cursor is past the end.
StepOutcome vfc_step(VfcRunState& run, std::span<const Symbol> sequence, CostModel model,
                     VfcPolicy policy);

struct RunOptions {
  VfcPolicy vfc_policy = VfcPolicy::Literal;
  bool record_lists = false;
};

struct RunReport {
  AlgorithmKind kind = AlgorithmKind::MTF;
  CostModel model = CostModel::Full;
  std::uint64_t total_cost = 0;
  std::size_t requests = 0;
  std::vector<StepRecord> trace;
  ListState final_list;
};

/// Drives one engine over the whole sequence. Every request is checked
/// against the list alphabet first; the SymbolNotInList message carries the
/// 0-based index of the offending request.
RunReport run_algorithm(AlgorithmKind kind, ListState list, std::span<const Symbol> sequence,
                        CostModel model, const RunOptions& options = {});

}  // namespace listlab
