#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "listlab/algorithms.hpp"
#include "listlab/list_state.hpp"

namespace listlab::oracle {

inline constexpr std::size_t kMaxListSize = 5;
inline constexpr std::size_t kMaxSequenceLength = 10;
inline constexpr std::size_t kMaxEnumListSize = 4;
inline constexpr std::size_t kMaxEnumSequenceLength = 8;

/// Small list/sequence pair. The constructor throws InstanceTooLarge past
/// kMaxListSize symbols or kMaxSequenceLength requests.
struct SmallInstance {
  SmallInstance(ListState list, RequestSequence sequence, CostModel model = CostModel::Full);

  ListState list;
  RequestSequence sequence;
  CostModel model;

  std::string describe() const;
};

/// Frequency count re-derived from the scan rule with its own list
/// representation; shares no code with the algorithms module.
std::uint64_t naive_fc_cost(const SmallInstance& instance);

/// Minimum total access cost when, after each access, the accessed element may
/// be moved to any position nearer the front for free. Paid exchanges are not
/// considered, so this is an upper bound on the unrestricted offline optimum.
std::uint64_t opt_free_exchange_cost(const SmallInstance& instance);

/// Every sequence over {1..m} of length 0..n_max in length-then-lexicographic
/// order, each paired with the zero-frequency list [1..m]. Throws BoundsExceeded
/// past kMaxEnumListSize / kMaxEnumSequenceLength.
std::vector<SmallInstance> enumerate_instances(std::size_t m, std::size_t n_max, CostModel model);

struct VerifyOptions {
  std::size_t list_size = 3;
  std::size_t max_length = 6;
  CostModel model = CostModel::Full;
  // Added to the FC engine total before it is compared with the oracle.
  // Only used to check that the harness catches a broken engine.
  std::int64_t fc_cost_offset = 0;
  std::size_t max_reported_failures = 20;
};

struct VerifyFailure {
  std::string check;
  std::string instance;
  std::string detail;
};

struct VerifyCheck {
  std::string name;
  std::size_t evaluated = 0;
  std::size_t violations = 0;
};

struct VerifySummary {
  std::size_t instances = 0;
  std::vector<VerifyCheck> checks;
  std::vector<VerifyFailure> failures;  // capped at max_reported_failures
  // Instances where the Literal VFC policy charges less than the free-exchange
  // optimum because swallowed requests are billed one unit each. Reported, not a failure.
  std::size_t literal_vfc_below_opt = 0;

  bool passed() const;
};

/// Exhaustive property suite over enumerate_instances(list_size, max_length):
/// FC engine equals naive_fc_cost; the free-exchange optimum is at most MTF,
/// TRANS, FC and VFC (StrictHomogeneous); MTF <= 2 * OPT (Full only);
/// frequency sum equals n and the order stays a permutation after FC and VFC
/// runs; totals >= n (Full only); counters non-increasing along the list after
/// every FC/VFC reorganization.
VerifySummary verify_exhaustive(const VerifyOptions& options);

}  // namespace listlab::oracle
