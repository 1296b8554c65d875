#include "listlab/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <random>
#include <unordered_set>

namespace listlab {

CorpusText load_corpus_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::InvalidConfig, "cannot open " + path.string());
  }
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw Error(Errc::InvalidConfig, "read error on " + path.string());
  }
  return {std::move(bytes), path.filename().string()};
}

std::set<std::uint8_t> default_strip_bytes() { return {0x20, 0x0D, 0x0A}; }

std::set<std::uint8_t> parse_strip_bytes(std::string_view text) {
  std::set<std::uint8_t> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.starts_with("0x") || item.starts_with("0X")) item.remove_prefix(2);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value, 16);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size() || value > 0xFF) {
      throw Error(Errc::InvalidConfig, "bad byte value '" + std::string(item) + "'");
    }
    out.insert(static_cast<std::uint8_t>(value));
  }
  return out;
}

RequestSequence preprocess(const CorpusText& text, const std::set<std::uint8_t>& strip) {
  RequestSequence seq;
  seq.reserve(text.bytes.size());
  for (char c : text.bytes) {
    const auto byte = static_cast<std::uint8_t>(c);
    if (!strip.contains(byte)) seq.push_back(Symbol{byte});
  }
  if (seq.empty()) {
    throw Error(Errc::EmptyAfterPreprocessing,
                "'" + text.source_name + "' has no requests after preprocessing");
  }
  return seq;
}

std::string_view to_string(ListOrderPolicy policy) {
  return policy == ListOrderPolicy::FirstOccurrence ? "first-occurrence" : "byte-value";
}

std::optional<ListOrderPolicy> parse_list_order(std::string_view text) {
  if (text == "first-occurrence") return ListOrderPolicy::FirstOccurrence;
  if (text == "byte-value") return ListOrderPolicy::ByteValueAscending;
  return std::nullopt;
}

ListState derive_list(std::span<const Symbol> sequence, ListOrderPolicy policy) {
  if (sequence.empty()) {
    throw Error(Errc::EmptySequence, "cannot derive a list from an empty sequence");
  }
  std::vector<Symbol> order;
  std::unordered_set<Symbol> seen;
  for (auto s : sequence) {
    if (seen.insert(s).second) order.push_back(s);
  }
  if (policy == ListOrderPolicy::ByteValueAscending) {
    std::sort(order.begin(), order.end());
  }
  return ListState(std::move(order));
}

RequestSequence generate_sequence(std::span<const Symbol> alphabet, std::size_t length,
                                  const Distribution& distribution, std::uint64_t seed) {
  if (alphabet.empty()) {
    throw Error(Errc::EmptyAlphabet, "alphabet must not be empty");
  }
  std::mt19937_64 rng(seed);
  RequestSequence seq;
  seq.reserve(length);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);

  if (std::holds_alternative<Uniform>(distribution)) {
    while (seq.size() < length) seq.push_back(alphabet[pick(rng)]);
  } else if (const auto* zipf = std::get_if<Zipf>(&distribution)) {
    std::vector<double> weights(alphabet.size());
    for (std::size_t k = 0; k < weights.size(); ++k) {
      weights[k] = 1.0 / std::pow(static_cast<double>(k + 1), zipf->exponent);
    }
    std::discrete_distribution<std::size_t> rank(weights.begin(), weights.end());
    while (seq.size() < length) seq.push_back(alphabet[rank(rng)]);
  } else {
    const auto& runs = std::get<RunLengths>(distribution);
    if (!(runs.mean_run >= 1.0)) {
      throw Error(Errc::InvalidConfig, "mean run length must be at least 1");
    }
    // geometric_distribution needs p < 1; mean_run == 1 means every run has length 1.
    const double p = 1.0 / runs.mean_run;
    std::geometric_distribution<std::size_t> extra(p < 1.0 ? p : 0.5);
    while (seq.size() < length) {
      const auto s = alphabet[pick(rng)];
      const std::size_t draw = p < 1.0 ? extra(rng) : 0;
      const auto run = std::min(length - seq.size(), std::size_t{1} + draw);
      seq.insert(seq.end(), run, s);
    }
  }
  return seq;
}

}  // namespace listlab
