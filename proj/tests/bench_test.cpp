#include "listlab/bench.hpp"

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

using namespace listlab;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

}  // namespace

TEST(Bench, DemoRow) {
  RunConfig config;
  config.demo = true;
  config.algorithms = {AlgorithmKind::FC, AlgorithmKind::VFC};
  const auto result = run_bench(config);
  ASSERT_EQ(result.rows.size(), 1u);
  const auto& row = result.rows[0];
  EXPECT_EQ(row.file, "demo");
  EXPECT_EQ(row.n, 6u);
  EXPECT_EQ(row.list_size, 3u);
  EXPECT_EQ(row.find(AlgorithmKind::FC)->total_cost, 12u);
  EXPECT_EQ(row.find(AlgorithmKind::VFC)->total_cost, 9u);
}

TEST(Bench, ConfigErrors) {
  RunConfig config;
  config.demo = true;
  EXPECT_THROW(run_bench(config), Error);  // no algorithm

  config.algorithms = {AlgorithmKind::FC, AlgorithmKind::FC};
  EXPECT_THROW(config.validate(), Error);

  config.algorithms = {AlgorithmKind::FC};
  config.limit = 0;
  EXPECT_THROW(config.validate(), Error);

  RunConfig nothing;
  nothing.algorithms = {AlgorithmKind::MTF};
  EXPECT_THROW(nothing.validate(), Error);
}

TEST(Bench, FilesInInputOrder) {
  auto a = write_temp("listlab_bench_a.txt", "hello world\nhello again\n");
  auto b = write_temp("listlab_bench_b.txt", "zzz yyy\r\nxxx");
  RunConfig config;
  config.inputs = {b, a};
  config.algorithms = {AlgorithmKind::MTF, AlgorithmKind::TRANS, AlgorithmKind::FC,
                       AlgorithmKind::VFC};
  const auto result = run_bench(config);
  ASSERT_EQ(result.rows.size(), 2u);
  EXPECT_EQ(result.rows[0].file, "listlab_bench_b.txt");
  EXPECT_EQ(result.rows[0].n, 9u);
  EXPECT_EQ(result.rows[0].list_size, 3u);
  EXPECT_EQ(result.rows[1].file, "listlab_bench_a.txt");
  EXPECT_EQ(result.rows[1].n, 20u);
  for (const auto& row : result.rows) {
    EXPECT_EQ(row.costs.size(), 4u);
    for (const auto& c : row.costs) EXPECT_GE(c.total_cost, row.n);
  }
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Bench, LimitTruncatesRequestsButKeepsFileAlphabet) {
  auto path = write_temp("listlab_bench_limit.txt", "aaaaabcdef");
  RunConfig config;
  config.inputs = {path};
  config.algorithms = {AlgorithmKind::FC};
  config.limit = 4;
  const auto result = run_bench(config);
  EXPECT_EQ(result.rows[0].n, 4u);
  EXPECT_EQ(result.rows[0].list_size, 6u);
  EXPECT_EQ(result.rows[0].costs[0].total_cost, 4u);
  std::filesystem::remove(path);
}

TEST(Bench, EmptyAfterPreprocessingIsAnError) {
  auto path = write_temp("listlab_bench_blank.txt", " \n \r\n");
  RunConfig config;
  config.inputs = {path};
  config.algorithms = {AlgorithmKind::FC};
  try {
    run_bench(config);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyAfterPreprocessing);
  }
  std::filesystem::remove(path);
}

TEST(Bench, GeneratorsAreSeeded) {
  RunConfig config;
  config.generators = {parse_generator("runs:m=6:n=3000:mean=5"),
                       parse_generator("zipf:m=10:n=3000:s=1.2")};
  config.algorithms = {AlgorithmKind::FC, AlgorithmKind::VFC};
  config.seed = 17;
  const auto first = run_bench(config);
  const auto second = run_bench(config);
  EXPECT_EQ(first.rows, second.rows);
  EXPECT_EQ(first.rows[0].file, "gen:runs:m=6:n=3000:mean=5");
  EXPECT_EQ(first.rows[0].list_size, 6u);
  config.seed = 18;
  EXPECT_NE(run_bench(config).rows, first.rows);
}

TEST(Bench, GeneratorParseErrors) {
  EXPECT_THROW(parse_generator("poisson:m=3:n=4"), Error);
  EXPECT_THROW(parse_generator("uniform:m=3"), Error);
  EXPECT_THROW(parse_generator("uniform:m=0:n=3"), Error);
  EXPECT_THROW(parse_generator("uniform:m=3:n=x"), Error);
  EXPECT_THROW(parse_generator("uniform:m=3:n=4:s=2"), Error);
  EXPECT_THROW(parse_generator("runs:m=3:n=4:mean=0.5"), Error);
  const auto z = parse_generator("zipf:m=3:n=4:s=0.8");
  EXPECT_DOUBLE_EQ(std::get<Zipf>(z.distribution).exponent, 0.8);
}

TEST(Bench, TraceRecordsSteps) {
  RunConfig config;
  config.demo = true;
  config.algorithms = {AlgorithmKind::VFC};
  config.trace = true;
  const auto result = run_bench(config);
  ASSERT_EQ(result.traces.size(), 1u);
  const auto text = format_trace(result.traces[0]);
  EXPECT_NE(text.find("# demo vfc total=9"), std::string::npos);
  EXPECT_NE(text.find("3\t3\t3\t5\t3\t3 2 1"), std::string::npos);
}
