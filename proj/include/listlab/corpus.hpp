#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "listlab/list_state.hpp"

namespace listlab {

struct CorpusText {
  std::string bytes;
  std::string source_name;
};

/// Reads a file as raw bytes. Throws InvalidConfig if it cannot be opened.
CorpusText load_corpus_file(const std::filesystem::path& path);

/// Space, carriage return and line feed.
std::set<std::uint8_t> default_strip_bytes();

/// Parses a comma separated list of hex byte values such as "20,0d,0a,09".
std::set<std::uint8_t> parse_strip_bytes(std::string_view text);

/// Drops every byte in `strip`; each remaining byte becomes one request.
/// Throws EmptyAfterPreprocessing when nothing is left.
RequestSequence preprocess(const CorpusText& text,
                           const std::set<std::uint8_t>& strip = default_strip_bytes());

enum class ListOrderPolicy { FirstOccurrence, ByteValueAscending };

std::string_view to_string(ListOrderPolicy policy);
std::optional<ListOrderPolicy> parse_list_order(std::string_view text);

/// One entry per distinct symbol of `sequence`, counters zero. Throws EmptySequence.
ListState derive_list(std::span<const Symbol> sequence, ListOrderPolicy policy);

struct Uniform {};
struct Zipf {
  double exponent = 1.0;
};
/// Runs of a single uniformly chosen symbol; run lengths are 1 + geometric
/// with mean `mean_run` (>= 1).
struct RunLengths {
  double mean_run = 4.0;
};
using Distribution = std::variant<Uniform, Zipf, RunLengths>;

/// Seeded synthetic workload; identical arguments give identical output.
/// Zipf ranks follow the alphabet order (first symbol is the most popular).
/// Throws EmptyAlphabet.
RequestSequence generate_sequence(std::span<const Symbol> alphabet, std::size_t length,
                                  const Distribution& distribution, std::uint64_t seed);

}  // namespace listlab
