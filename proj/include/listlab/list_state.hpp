#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace listlab {

enum class Errc {
  SymbolNotInList,
  PositionOutOfRange,
  BackwardMove,
  DuplicateSymbol,
  CursorExhausted,
  EmptyAfterPreprocessing,
  EmptySequence,
  EmptyAlphabet,
  InstanceTooLarge,
  BoundsExceeded,
  EmptyReport,
  InvalidConfig,
  ParseError,
  InvariantBreach,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Element identity. Byte values for corpus runs, small integers for synthetic runs.
struct Symbol {
  std::uint32_t id = 0;

  friend constexpr auto operator<=>(const Symbol&, const Symbol&) = default;
};

using RequestSequence = std::vector<Symbol>;

/// Builds a sequence from plain integer ids; convenient for small instances.
RequestSequence make_sequence(std::initializer_list<std::uint32_t> ids);

enum class CostModel { Full, Partial };

std::string_view to_string(CostModel model);
std::optional<CostModel> parse_cost_model(std::string_view text);

/// Cost of reaching the element at 1-based `position`: i under Full, i - 1 under Partial.
std::uint64_t access_cost(CostModel model, std::size_t position);

/// Ordered distinct symbols with a frequency counter per symbol.
///
/// Positions are 1-based in every public member. Counters travel with their
/// symbol when the list is reorganized. The only mutation of the order is
/// `move_forward`, so the order stays a permutation of the initial list.
class ListState {
 public:
  ListState() = default;

  /// All counters start at zero. Throws DuplicateSymbol on repeated ids.
  explicit ListState(std::vector<Symbol> order);
  ListState(std::vector<Symbol> order, std::vector<std::uint64_t> freq);

  static ListState from_ids(std::initializer_list<std::uint32_t> ids);

  std::size_t size() const noexcept { return order_.size(); }
  bool empty() const noexcept { return order_.empty(); }

  std::span<const Symbol> order() const noexcept { return order_; }
  std::span<const std::uint64_t> frequencies() const noexcept { return freq_; }

  bool contains(Symbol s) const noexcept;

  /// 1-based position of `s`. Throws SymbolNotInList.
  std::size_t position_of(Symbol s) const;

  Symbol at(std::size_t position) const;
  std::uint64_t freq_at(std::size_t position) const;
  std::uint64_t freq(Symbol s) const { return freq_at(position_of(s)); }

  Symbol head() const { return at(1); }
  std::uint64_t head_freq() const { return freq_at(1); }

  void add_freq(std::size_t position, std::uint64_t delta);
  void set_freq(Symbol s, std::uint64_t value);

  /// Free exchange: the element at `from_pos` moves to `to_pos`, elements in
  /// [to_pos, from_pos) shift back by one. Requires to_pos <= from_pos.
  void move_forward(std::size_t from_pos, std::size_t to_pos);

  /// Adjacent interchange of positions p and p + 1. Documented as the paid
  /// exchange of the cost model; no engine calls it.
  void swap_adjacent(std::size_t position);

  std::uint64_t total_frequency() const noexcept;

  friend bool operator==(const ListState&, const ListState&) = default;

 private:
  void check_position(std::size_t position) const;

  std::vector<Symbol> order_;
  std::vector<std::uint64_t> freq_;
};

std::string format_order(std::span<const Symbol> order);

/// One step of a run. VFC batch steps consume more than one request.
struct StepRecord {
  Symbol request;
  std::size_t position_before = 0;
  std::uint64_t cost_charged = 0;
  std::size_t requests_consumed = 1;
  std::optional<std::vector<Symbol>> list_after;
};

}  // namespace listlab

template <>
struct std::hash<listlab::Symbol> {
  std::size_t operator()(const listlab::Symbol& s) const noexcept {
    return std::hash<std::uint32_t>{}(s.id);
  }
};
