#include "listlab/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

using namespace listlab;

namespace {

RequestSequence bytes(std::string_view s) {
  RequestSequence out;
  for (char c : s) out.push_back(Symbol{static_cast<std::uint8_t>(c)});
  return out;
}

std::vector<std::uint32_t> ids(const ListState& s) {
  std::vector<std::uint32_t> out;
  for (auto sym : s.order()) out.push_back(sym.id);
  return out;
}

}  // namespace

TEST(Preprocess, StripsSpacesAndLineBreaks) {
  EXPECT_EQ(preprocess({"ab cd\r\n", "t"}), bytes("abcd"));
}

TEST(Preprocess, TabIsKept) {
  EXPECT_EQ(preprocess({"aa\tb", "t"}), bytes("aa\tb"));
}

TEST(Preprocess, AllStrippedIsAnError) {
  try {
    preprocess({"   \r\n", "blank"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyAfterPreprocessing);
  }
  EXPECT_THROW(preprocess({"", "empty"}), Error);
}

TEST(Preprocess, HighBytesAreSymbols) {
  const std::string raw{"\xff\x00 \x80", 4};
  auto seq = preprocess({raw, "bin"});
  ASSERT_EQ(seq.size(), 3u);
  EXPECT_EQ(seq[0].id, 255u);
  EXPECT_EQ(seq[1].id, 0u);
  EXPECT_EQ(seq[2].id, 128u);
}

TEST(Preprocess, Idempotent) {
  const std::string samples[] = {"a b\nc\r\n d", "x\t \ty", "\x01\x02 \x03"};
  for (const auto& s : samples) {
    auto once = preprocess({s, "s"});
    std::string again;
    for (auto sym : once) again.push_back(static_cast<char>(sym.id));
    EXPECT_EQ(preprocess({again, "s"}), once);
  }
}

TEST(Preprocess, CustomStripSet) {
  auto strip = parse_strip_bytes("20,0d,0a,09");
  EXPECT_EQ(preprocess({"a\tb c", "t"}, strip), bytes("abc"));
  EXPECT_EQ(parse_strip_bytes("0x41"), (std::set<std::uint8_t>{0x41}));
  EXPECT_THROW(parse_strip_bytes("zz"), Error);
  EXPECT_THROW(parse_strip_bytes("100"), Error);
}

TEST(DeriveList, Policies) {
  const auto seq = bytes("babc");
  EXPECT_EQ(ids(derive_list(seq, ListOrderPolicy::FirstOccurrence)),
            (std::vector<std::uint32_t>{'b', 'a', 'c'}));
  EXPECT_EQ(ids(derive_list(seq, ListOrderPolicy::ByteValueAscending)),
            (std::vector<std::uint32_t>{'a', 'b', 'c'}));
  EXPECT_EQ(ids(derive_list(make_sequence({1, 2, 2, 3, 3, 3}), ListOrderPolicy::FirstOccurrence)),
            (std::vector<std::uint32_t>{1, 2, 3}));
}

TEST(DeriveList, ZeroCountersAndExactAlphabet) {
  const auto seq = bytes("the quick brown fox");
  auto list = derive_list(seq, ListOrderPolicy::FirstOccurrence);
  EXPECT_EQ(list.total_frequency(), 0u);
  for (auto s : seq) EXPECT_TRUE(list.contains(s));
  std::set<Symbol> distinct(seq.begin(), seq.end());
  EXPECT_EQ(list.size(), distinct.size());
}

TEST(DeriveList, EmptySequence) {
  try {
    derive_list({}, ListOrderPolicy::FirstOccurrence);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptySequence);
  }
}

TEST(GenerateSequence, SingletonAndEmpty) {
  const auto one = make_sequence({1});
  EXPECT_EQ(generate_sequence(one, 5, Uniform{}, 123), make_sequence({1, 1, 1, 1, 1}));
  EXPECT_TRUE(generate_sequence(make_sequence({1, 2, 3}), 0, Zipf{1.0}, 1).empty());
  EXPECT_THROW(generate_sequence({}, 3, Uniform{}, 1), Error);
}

TEST(GenerateSequence, UniformWithinThreeSigma) {
  const auto seq = generate_sequence(make_sequence({1, 2}), 10000, Uniform{}, 42);
  const auto ones = std::count(seq.begin(), seq.end(), Symbol{1});
  // binomial(10^4, 1/2): sigma = 50
  EXPECT_LE(std::abs(static_cast<double>(ones) - 5000.0), 150.0);
  EXPECT_LE(std::abs(static_cast<double>(10000 - ones) - 5000.0), 150.0);
}

TEST(GenerateSequence, DeterministicAndInAlphabet) {
  const auto alphabet = make_sequence({4, 8, 15, 16, 23, 42});
  const Distribution dists[] = {Uniform{}, Zipf{1.3}, RunLengths{6.0}, RunLengths{1.0}};
  for (const auto& d : dists) {
    auto a = generate_sequence(alphabet, 2000, d, 99);
    auto b = generate_sequence(alphabet, 2000, d, 99);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.size(), 2000u);
    for (auto s : a) EXPECT_NE(std::find(alphabet.begin(), alphabet.end(), s), alphabet.end());
  }
}

TEST(GenerateSequence, ZipfFavoursFirstRank) {
  const auto seq = generate_sequence(make_sequence({1, 2, 3, 4, 5}), 5000, Zipf{1.5}, 3);
  const auto first = std::count(seq.begin(), seq.end(), Symbol{1});
  const auto last = std::count(seq.begin(), seq.end(), Symbol{5});
  EXPECT_GT(first, 4 * last);
}

TEST(GenerateSequence, RunLengthsHaveLongRuns) {
  const auto seq = generate_sequence(make_sequence({1, 2, 3, 4, 5, 6, 7, 8}), 20000,
                                     RunLengths{8.0}, 5);
  std::size_t runs = 1;
  for (std::size_t i = 1; i < seq.size(); ++i) runs += seq[i] != seq[i - 1];
  // mean drawn run 8; adjacent runs of the same symbol merge, so observed mean is larger
  EXPECT_GT(static_cast<double>(seq.size()) / static_cast<double>(runs), 7.0);
  EXPECT_THROW(generate_sequence(make_sequence({1}), 5, RunLengths{0.5}, 1), Error);
}

TEST(LoadCorpusFile, ReadsRawBytes) {
  const auto path = std::filesystem::temp_directory_path() / "listlab_corpus_test.bin";
  {
    std::ofstream out(path, std::ios::binary);
    out << std::string("a\r\nb\0c", 6);
  }
  auto text = load_corpus_file(path);
  EXPECT_EQ(text.bytes.size(), 6u);
  EXPECT_EQ(text.source_name, "listlab_corpus_test.bin");
  EXPECT_EQ(preprocess(text).size(), 4u);
  std::filesystem::remove(path);
  EXPECT_THROW(load_corpus_file(path), Error);
}
