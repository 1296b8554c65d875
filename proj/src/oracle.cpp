#include "listlab/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace listlab::oracle {

SmallInstance::SmallInstance(ListState list_in, RequestSequence sequence_in, CostModel model_in)
    : list(std::move(list_in)), sequence(std::move(sequence_in)), model(model_in) {
  if (list.size() > kMaxListSize || sequence.size() > kMaxSequenceLength) {
    throw Error(Errc::InstanceTooLarge,
                "instance exceeds m <= " + std::to_string(kMaxListSize) +
                    ", n <= " + std::to_string(kMaxSequenceLength));
  }
}

std::string SmallInstance::describe() const {
  std::ostringstream out;
  out << "list=[" << format_order(list.order()) << "] seq=(" << format_order(sequence)
      << ") model=" << to_string(model);
  return out.str();
}

std::uint64_t naive_fc_cost(const SmallInstance& instance) {
  struct Entry {
    std::uint32_t id;
    long count;
  };
  std::vector<Entry> entries;
  for (std::size_t p = 1; p <= instance.list.size(); ++p) {
    entries.push_back({instance.list.at(p).id, static_cast<long>(instance.list.freq_at(p))});
  }

  std::uint64_t total = 0;
  for (auto request : instance.sequence) {
    std::size_t j = 0;
    while (entries[j].id != request.id) ++j;  // 0-based
    total += instance.model == CostModel::Full ? j + 1 : j;
    entries[j].count += 1;

    const long f = entries[j].count;
    std::size_t target = j;
    for (std::size_t i = 0; i < j; ++i) {
      const long here = entries[i].count;
      const long next = entries[i + 1].count;
      if (f > here || (f == here && f > next)) {
        target = i;
        break;
      }
    }
    if (target != j) {
      const Entry moved = entries[j];
      entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(j));
      entries.insert(entries.begin() + static_cast<std::ptrdiff_t>(target), moved);
    }
  }
  return total;
}

std::uint64_t opt_free_exchange_cost(const SmallInstance& instance) {
  const auto& seq = instance.sequence;
  std::vector<std::uint32_t> start;
  for (auto s : instance.list.order()) start.push_back(s.id);
  for (auto s : seq) {
    if (std::find(start.begin(), start.end(), s.id) == start.end()) {
      throw Error(Errc::SymbolNotInList, "request " + std::to_string(s.id) + " not in list");
    }
  }

  std::map<std::pair<std::vector<std::uint32_t>, std::size_t>, std::uint64_t> memo;
  std::function<std::uint64_t(const std::vector<std::uint32_t>&, std::size_t)> best =
      [&](const std::vector<std::uint32_t>& order, std::size_t index) -> std::uint64_t {
    if (index == seq.size()) return 0;
    auto key = std::make_pair(order, index);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const auto p = static_cast<std::size_t>(
        std::find(order.begin(), order.end(), seq[index].id) - order.begin());
    const std::uint64_t here = access_cost(instance.model, p + 1);
    std::uint64_t result = UINT64_MAX;
    for (std::size_t target = 0; target <= p; ++target) {
      auto next = order;
      std::rotate(next.begin() + static_cast<std::ptrdiff_t>(target),
                  next.begin() + static_cast<std::ptrdiff_t>(p),
                  next.begin() + static_cast<std::ptrdiff_t>(p) + 1);
      result = std::min(result, here + best(next, index + 1));
    }
    memo.emplace(std::move(key), result);
    return result;
  };
  return best(start, 0);
}

std::vector<SmallInstance> enumerate_instances(std::size_t m, std::size_t n_max,
                                               CostModel model) {
  if (m == 0 || m > kMaxEnumListSize || n_max > kMaxEnumSequenceLength) {
    throw Error(Errc::BoundsExceeded, "enumeration supports 1 <= m <= " +
                                          std::to_string(kMaxEnumListSize) + " and n <= " +
                                          std::to_string(kMaxEnumSequenceLength));
  }
  std::vector<Symbol> ids;
  for (std::uint32_t i = 1; i <= m; ++i) ids.push_back(Symbol{i});
  const ListState list(ids);

  std::vector<SmallInstance> out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::vector<std::size_t> digits(n, 0);
    while (true) {
      RequestSequence seq;
      for (auto d : digits) seq.push_back(ids[d]);
      out.emplace_back(list, std::move(seq), model);
      // odometer increment, last position fastest
      std::size_t k = n;
      while (k > 0 && ++digits[k - 1] == m) digits[--k] = 0;
      if (k == 0) break;
    }
  }
  return out;
}

bool VerifySummary::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.violations == 0; });
}

namespace {

bool non_increasing(const ListState& list) {
  auto f = list.frequencies();
  return std::is_sorted(f.begin(), f.end(), std::greater<>{});
}

bool same_symbols(const ListState& a, const ListState& b) {
  std::vector<Symbol> x(a.order().begin(), a.order().end());
  std::vector<Symbol> y(b.order().begin(), b.order().end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

class Recorder {
 public:
  Recorder(VerifySummary& summary, std::size_t cap) : summary_(summary), cap_(cap) {}

  void check(const std::string& name, bool ok, const SmallInstance& inst,
             const std::string& detail) {
    auto it = std::find_if(summary_.checks.begin(), summary_.checks.end(),
                           [&](const VerifyCheck& c) { return c.name == name; });
    if (it == summary_.checks.end()) {
      summary_.checks.push_back({name, 0, 0});
      it = std::prev(summary_.checks.end());
    }
    ++it->evaluated;
    if (ok) return;
    ++it->violations;
    if (summary_.failures.size() < cap_) {
      summary_.failures.push_back({name, inst.describe(), detail});
    }
  }

 private:
  VerifySummary& summary_;
  std::size_t cap_;
};

std::string compare_text(std::uint64_t lhs, std::string_view op, std::uint64_t rhs) {
  std::ostringstream out;
  out << lhs << ' ' << op << ' ' << rhs;
  return out.str();
}

// Steps FC one request at a time so the sort order can be checked after each
// reorganization. Returns the total.
std::uint64_t stepped_fc(const SmallInstance& inst, bool& sorted, ListState& final_list) {
  ListState list = inst.list;
  std::uint64_t total = 0;
  for (auto r : inst.sequence) {
    total += fc_step(list, r, inst.model).cost;
    sorted = sorted && non_increasing(list);
  }
  final_list = std::move(list);
  return total;
}

std::uint64_t stepped_vfc(const SmallInstance& inst, VfcPolicy policy, bool& sorted,
                          ListState& final_list, std::size_t& consumed) {
  VfcRunState run(inst.list);
  std::uint64_t total = 0;
  consumed = 0;
  while (run.cursor < inst.sequence.size()) {
    const auto step = vfc_step(run, inst.sequence, inst.model, policy);
    total += step.cost;
    consumed += step.consumed;
    sorted = sorted && non_increasing(run.list);
  }
  final_list = std::move(run.list);
  return total;
}

}  // namespace

VerifySummary verify_exhaustive(const VerifyOptions& options) {
  const auto instances = enumerate_instances(options.list_size, options.max_length, options.model);
  VerifySummary summary;
  summary.instances = instances.size();
  Recorder rec(summary, options.max_reported_failures);
  const bool full = options.model == CostModel::Full;

  for (const auto& inst : instances) {
    const auto n = inst.sequence.size();
    const auto opt = opt_free_exchange_cost(inst);
    const auto mtf = run_algorithm(AlgorithmKind::MTF, inst.list, inst.sequence, inst.model);
    const auto trans = run_algorithm(AlgorithmKind::TRANS, inst.list, inst.sequence, inst.model);
    const auto fc = run_algorithm(AlgorithmKind::FC, inst.list, inst.sequence, inst.model);
    const auto fc_total = static_cast<std::uint64_t>(
        static_cast<std::int64_t>(fc.total_cost) + options.fc_cost_offset);

    const auto naive = naive_fc_cost(inst);
    rec.check("fc-engine-equals-naive-oracle", fc_total == naive, inst,
              compare_text(fc_total, "!=", naive));

    rec.check("opt-le-mtf", opt <= mtf.total_cost, inst, compare_text(opt, ">", mtf.total_cost));
    rec.check("opt-le-trans", opt <= trans.total_cost, inst,
              compare_text(opt, ">", trans.total_cost));
    rec.check("opt-le-fc", opt <= fc_total, inst, compare_text(opt, ">", fc_total));

    if (full) {
      rec.check("mtf-le-2opt", mtf.total_cost <= 2 * opt, inst,
                compare_text(mtf.total_cost, "> 2 *", opt));
      for (const auto* report : {&mtf, &trans}) {
        rec.check("full-total-ge-n", report->total_cost >= n, inst,
                  std::string(to_string(report->kind)) + " " +
                      compare_text(report->total_cost, "<", n));
      }
      rec.check("full-total-ge-n", fc_total >= n, inst, "fc " + compare_text(fc_total, "<", n));
    }

    bool fc_sorted = true;
    ListState fc_final;
    const auto fc_stepped = stepped_fc(inst, fc_sorted, fc_final);
    rec.check("fc-stepped-equals-run", fc_stepped == fc.total_cost, inst,
              compare_text(fc_stepped, "!=", fc.total_cost));
    rec.check("sorted-after-reorganize", fc_sorted, inst, "fc");
    rec.check("frequency-sum-equals-n", fc_final.total_frequency() == n, inst, "fc");
    rec.check("permutation-preserved", same_symbols(fc_final, inst.list), inst, "fc");

    for (auto policy : {VfcPolicy::Literal, VfcPolicy::StrictHomogeneous}) {
      const std::string tag = "vfc/" + std::string(to_string(policy));
      bool sorted = true;
      ListState final_list;
      std::size_t consumed = 0;
      const auto total = stepped_vfc(inst, policy, sorted, final_list, consumed);
      const auto run = run_algorithm(AlgorithmKind::VFC, inst.list, inst.sequence, inst.model,
                                     RunOptions{policy, false});

      rec.check("vfc-stepped-equals-run", total == run.total_cost, inst, tag);
      rec.check("consumption-equals-n", consumed == n, inst, tag);
      rec.check("sorted-after-reorganize", sorted, inst, tag);
      rec.check("frequency-sum-equals-n", final_list.total_frequency() == n, inst, tag);
      rec.check("permutation-preserved", same_symbols(final_list, inst.list), inst, tag);
      if (full) {
        rec.check("full-total-ge-n", total >= n, inst, tag + " " + compare_text(total, "<", n));
      }
      if (policy == VfcPolicy::StrictHomogeneous) {
        rec.check("opt-le-vfc", opt <= total, inst, tag + " " + compare_text(opt, ">", total));
      } else if (total < opt) {
        ++summary.literal_vfc_below_opt;
      }
    }
  }
  return summary;
}

}  // namespace listlab::oracle
