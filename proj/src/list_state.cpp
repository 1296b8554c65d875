#include "listlab/list_state.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace listlab {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::SymbolNotInList: return "SymbolNotInList";
    case Errc::PositionOutOfRange: return "PositionOutOfRange";
    case Errc::BackwardMove: return "BackwardMove";
    case Errc::DuplicateSymbol: return "DuplicateSymbol";
    case Errc::CursorExhausted: return "CursorExhausted";
    case Errc::EmptyAfterPreprocessing: return "EmptyAfterPreprocessing";
    case Errc::EmptySequence: return "EmptySequence";
    case Errc::EmptyAlphabet: return "EmptyAlphabet";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::BoundsExceeded: return "BoundsExceeded";
    case Errc::EmptyReport: return "EmptyReport";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::ParseError: return "ParseError";
    case Errc::InvariantBreach: return "InvariantBreach";
  }
  return "Unknown";
}

RequestSequence make_sequence(std::initializer_list<std::uint32_t> ids) {
  RequestSequence seq;
  seq.reserve(ids.size());
  for (auto id : ids) seq.push_back(Symbol{id});
  return seq;
}

std::string_view to_string(CostModel model) {
  return model == CostModel::Full ? "full" : "partial";
}

std::optional<CostModel> parse_cost_model(std::string_view text) {
  if (text == "full") return CostModel::Full;
  if (text == "partial") return CostModel::Partial;
  return std::nullopt;
}

std::uint64_t access_cost(CostModel model, std::size_t position) {
  if (position == 0) {
    throw Error(Errc::PositionOutOfRange, "positions are 1-based");
  }
  return model == CostModel::Full ? position : position - 1;
}

ListState::ListState(std::vector<Symbol> order)
    : ListState(order, std::vector<std::uint64_t>(order.size(), 0)) {}

ListState::ListState(std::vector<Symbol> order, std::vector<std::uint64_t> freq)
    : order_(std::move(order)), freq_(std::move(freq)) {
  if (order_.size() != freq_.size()) {
    throw Error(Errc::InvalidConfig, "order and frequency vectors differ in length");
  }
  std::unordered_set<Symbol> seen;
  for (auto s : order_) {
    if (!seen.insert(s).second) {
      throw Error(Errc::DuplicateSymbol, "symbol " + std::to_string(s.id) + " appears twice");
    }
  }
}

ListState ListState::from_ids(std::initializer_list<std::uint32_t> ids) {
  return ListState(make_sequence(ids));
}

bool ListState::contains(Symbol s) const noexcept {
  return std::find(order_.begin(), order_.end(), s) != order_.end();
}

std::size_t ListState::position_of(Symbol s) const {
  auto it = std::find(order_.begin(), order_.end(), s);
  if (it == order_.end()) {
    throw Error(Errc::SymbolNotInList, "symbol " + std::to_string(s.id) + " is not in the list");
  }
  return static_cast<std::size_t>(it - order_.begin()) + 1;
}

void ListState::check_position(std::size_t position) const {
  if (position < 1 || position > order_.size()) {
    throw Error(Errc::PositionOutOfRange, "position " + std::to_string(position) +
                                              " outside 1.." + std::to_string(order_.size()));
  }
}

Symbol ListState::at(std::size_t position) const {
  check_position(position);
  return order_[position - 1];
}

std::uint64_t ListState::freq_at(std::size_t position) const {
  check_position(position);
  return freq_[position - 1];
}

void ListState::add_freq(std::size_t position, std::uint64_t delta) {
  check_position(position);
  freq_[position - 1] += delta;
}

void ListState::set_freq(Symbol s, std::uint64_t value) { freq_[position_of(s) - 1] = value; }

void ListState::move_forward(std::size_t from_pos, std::size_t to_pos) {
  check_position(from_pos);
  check_position(to_pos);
  if (to_pos > from_pos) {
    throw Error(Errc::BackwardMove, "free exchange cannot move from " + std::to_string(from_pos) +
                                        " back to " + std::to_string(to_pos));
  }
  auto first = static_cast<std::ptrdiff_t>(to_pos - 1);
  auto last = static_cast<std::ptrdiff_t>(from_pos);
  std::rotate(order_.begin() + first, order_.begin() + last - 1, order_.begin() + last);
  std::rotate(freq_.begin() + first, freq_.begin() + last - 1, freq_.begin() + last);
}

void ListState::swap_adjacent(std::size_t position) {
  check_position(position);
  check_position(position + 1);
  std::swap(order_[position - 1], order_[position]);
  std::swap(freq_[position - 1], freq_[position]);
}

std::uint64_t ListState::total_frequency() const noexcept {
  return std::accumulate(freq_.begin(), freq_.end(), std::uint64_t{0});
}

std::string format_order(std::span<const Symbol> order) {
  std::ostringstream out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out << ' ';
    out << order[i].id;
  }
  return out.str();
}

}  // namespace listlab
