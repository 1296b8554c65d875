#include "listlab/list_state.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

using namespace listlab;

namespace {

std::vector<std::uint32_t> ids(const ListState& s) {
  std::vector<std::uint32_t> out;
  for (auto sym : s.order()) out.push_back(sym.id);
  return out;
}

using Ids = std::vector<std::uint32_t>;

}  // namespace

TEST(PositionOf, HeadTailAndReversed) {
  EXPECT_EQ(ListState::from_ids({1, 2, 3}).position_of(Symbol{1}), 1u);
  EXPECT_EQ(ListState::from_ids({1, 2, 3}).position_of(Symbol{3}), 3u);
  EXPECT_EQ(ListState::from_ids({3, 2, 1}).position_of(Symbol{1}), 3u);
}

TEST(PositionOf, MissingSymbolThrows) {
  try {
    ListState::from_ids({1, 2, 3}).position_of(Symbol{9});
    FAIL() << "expected SymbolNotInList";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SymbolNotInList);
  }
}

TEST(ListState, DuplicateSymbolsRejected) {
  EXPECT_THROW(ListState::from_ids({1, 2, 1}), Error);
}

TEST(AccessCost, FullAndPartial) {
  EXPECT_EQ(access_cost(CostModel::Full, 3), 3u);
  EXPECT_EQ(access_cost(CostModel::Partial, 3), 2u);
  EXPECT_EQ(access_cost(CostModel::Partial, 1), 0u);
  EXPECT_THROW(access_cost(CostModel::Full, 0), Error);
}

TEST(AccessCost, MonotoneAndFullIsPartialPlusOne) {
  for (std::size_t p = 1; p < 300; ++p) {
    EXPECT_LT(access_cost(CostModel::Full, p), access_cost(CostModel::Full, p + 1));
    EXPECT_LT(access_cost(CostModel::Partial, p), access_cost(CostModel::Partial, p + 1));
    EXPECT_EQ(access_cost(CostModel::Full, p), access_cost(CostModel::Partial, p) + 1);
  }
}

TEST(MoveForward, Examples) {
  auto a = ListState::from_ids({1, 2, 3});
  a.move_forward(2, 1);
  EXPECT_EQ(ids(a), (Ids{2, 1, 3}));

  auto b = ListState::from_ids({1, 2, 3});
  b.move_forward(3, 3);
  EXPECT_EQ(ids(b), (Ids{1, 2, 3}));

  auto c = ListState::from_ids({2, 1, 3});
  c.move_forward(3, 1);
  EXPECT_EQ(ids(c), (Ids{3, 2, 1}));
}

TEST(MoveForward, CountersTravelWithSymbols) {
  ListState s(make_sequence({1, 2, 3}), {5, 6, 7});
  s.move_forward(3, 1);
  EXPECT_EQ(s.freq(Symbol{3}), 7u);
  EXPECT_EQ(s.freq(Symbol{1}), 5u);
  EXPECT_EQ(s.head_freq(), 7u);
}

TEST(MoveForward, Errors) {
  auto s = ListState::from_ids({1, 2, 3});
  try {
    s.move_forward(1, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BackwardMove);
  }
  try {
    s.move_forward(4, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PositionOutOfRange);
  }
  EXPECT_THROW(s.move_forward(0, 0), Error);
}

TEST(SwapAdjacent, PaidExchangePrimitive) {
  auto s = ListState::from_ids({1, 2, 3});
  s.swap_adjacent(2);
  EXPECT_EQ(ids(s), (Ids{1, 3, 2}));
  EXPECT_THROW(s.swap_adjacent(3), Error);
}

// Random move_forward sequences: permutation preserved, identity moves are
// no-ops, and position_of reports the target after a move.
TEST(MoveForward, RandomizedProperties) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng() % 12;
    std::vector<Symbol> order;
    for (std::uint32_t i = 0; i < m; ++i) order.push_back(Symbol{i * 3 + 1});
    std::shuffle(order.begin(), order.end(), rng);
    ListState s(order);
    auto sorted_initial = order;
    std::sort(sorted_initial.begin(), sorted_initial.end());

    for (int step = 0; step < 50; ++step) {
      const std::size_t from = 1 + rng() % m;
      const std::size_t to = 1 + rng() % from;
      const Symbol moved = s.at(from);
      auto before = s;
      s.move_forward(from, to);
      EXPECT_EQ(s.position_of(moved), to);
      if (from == to) {
        EXPECT_EQ(s, before);
      }
      // positions outside [to, from] are untouched
      for (std::size_t p = 1; p <= m; ++p) {
        if (p < to || p > from) {
          EXPECT_EQ(s.at(p), before.at(p));
        }
      }
    }
    std::vector<Symbol> now(s.order().begin(), s.order().end());
    std::sort(now.begin(), now.end());
    EXPECT_EQ(now, sorted_initial);
  }
}
