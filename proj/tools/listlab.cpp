// listlab: run list-accessing algorithms over corpus files or synthetic
// workloads, chart the results and run the exhaustive oracle checks.
//
// Exit codes: 0 success, 1 config/input error, 2 property violation (verify),
// 3 internal invariant breach.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "listlab/bench.hpp"
#include "listlab/oracle.hpp"
#include "listlab/report.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitViolation = 2;
constexpr int kExitInternal = 3;

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw listlab::Error(listlab::Errc::InvalidConfig, "cannot write " + path);
  out << content;
  if (!out) throw listlab::Error(listlab::Errc::InvalidConfig, "write failed for " + path);
}

int exit_code_for(const listlab::Error& e) {
  return e.code() == listlab::Errc::InvariantBreach ? kExitInternal : kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-organizing list laboratory: MTF, TRANS, FC and VFC"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Run algorithms and print a comparison table");
  std::vector<std::string> inputs;
  std::vector<std::string> generators;
  bool demo = false;
  std::string algos = "fc,vfc";
  std::string cost_model = "full";
  std::string vfc_policy = "literal";
  std::string list_order = "first-occurrence";
  std::optional<std::size_t> limit;
  std::string strip_bytes = "20,0d,0a";
  std::string csv_path, wide_path, chart_path;
  std::uint64_t seed = 0;
  bool trace = false;

  run->add_option("files", inputs, "Corpus files (raw bytes)")->check(CLI::ExistingFile);
  run->add_option("--generate", generators,
                  "Synthetic workload: uniform:m=M:n=N, zipf:m=M:n=N:s=S, runs:m=M:n=N:mean=L");
  run->add_flag("--demo", demo, "Add the built-in instance: list 1 2 3, requests 1 2 2 3 3 3");
  run->add_option("--algos", algos, "Comma separated subset of mtf,trans,fc,vfc")
      ->capture_default_str();
  run->add_option("--cost-model", cost_model, "full or partial")
      ->check(CLI::IsMember({"full", "partial"}))
      ->capture_default_str();
  run->add_option("--vfc-policy", vfc_policy, "literal or strict")
      ->check(CLI::IsMember({"literal", "strict"}))
      ->capture_default_str();
  run->add_option("--list-order", list_order, "first-occurrence or byte-value")
      ->check(CLI::IsMember({"first-occurrence", "byte-value"}))
      ->capture_default_str();
  run->add_option("--limit", limit, "Keep only the first N requests of each sequence");
  run->add_option("--strip-bytes", strip_bytes, "Hex bytes removed during preprocessing")
      ->capture_default_str();
  run->add_option("--csv", csv_path, "Write long-form CSV here");
  run->add_option("--wide-csv", wide_path, "Write the wide comparison table here");
  run->add_option("--chart", chart_path, "Write an SVG bar chart here");
  run->add_option("--seed", seed, "Seed for --generate")->capture_default_str();
  run->add_flag("--trace", trace, "Print every step record");

  // chart
  auto* chart = app.add_subcommand("chart", "Render an SVG chart from a long-form CSV");
  std::string chart_in, chart_out;
  chart->add_option("csv", chart_in, "CSV written by 'run --csv'")->required()->check(CLI::ExistingFile);
  chart->add_option("-o,--out", chart_out, "Output path (stdout when omitted)");

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustive engine checks against the oracles");
  std::size_t verify_m = 3, verify_n = 6;
  std::string verify_model = "full";
  std::int64_t mutate = 0;
  verify->add_option("-m,--list-size", verify_m, "List size")->capture_default_str();
  verify->add_option("-n,--max-length", verify_n, "Longest sequence")->capture_default_str();
  verify->add_option("--cost-model", verify_model, "full or partial")
      ->check(CLI::IsMember({"full", "partial"}))
      ->capture_default_str();
  verify->add_option("--mutate-fc-cost", mutate,
                     "Add this to every FC total before checking (harness self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*run) {
      listlab::RunConfig config;
      for (const auto& p : inputs) config.inputs.emplace_back(p);
      for (const auto& g : generators) config.generators.push_back(listlab::parse_generator(g));
      config.demo = demo;
      for (const auto& name : split_commas(algos)) {
        auto kind = listlab::parse_algorithm(name);
        if (!kind) throw listlab::Error(listlab::Errc::InvalidConfig, "unknown algorithm '" + name + "'");
        config.algorithms.push_back(*kind);
      }
      config.model = *listlab::parse_cost_model(cost_model);
      config.vfc_policy = *listlab::parse_vfc_policy(vfc_policy);
      config.list_order = *listlab::parse_list_order(list_order);
      config.limit = limit;
      config.strip_bytes = listlab::parse_strip_bytes(strip_bytes);
      config.seed = seed;
      config.trace = trace;

      const auto result = listlab::run_bench(config);
      std::cout << listlab::format_summary(result.rows);
      for (const auto& t : result.traces) std::cout << listlab::format_trace(t);
      if (!csv_path.empty()) write_file(csv_path, listlab::write_csv(result.rows));
      if (!wide_path.empty()) write_file(wide_path, listlab::write_wide_csv(result.rows));
      if (!chart_path.empty()) write_file(chart_path, listlab::render_chart_svg(result.rows));
      return 0;
    }

    if (*chart) {
      std::ifstream in(chart_in, std::ios::binary);
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      const auto svg = listlab::render_chart_svg(listlab::parse_csv(text));
      if (chart_out.empty()) {
        std::cout << svg;
      } else {
        write_file(chart_out, svg);
      }
      return 0;
    }

    if (*verify) {
      listlab::oracle::VerifyOptions options;
      options.list_size = verify_m;
      options.max_length = verify_n;
      options.model = *listlab::parse_cost_model(verify_model);
      options.fc_cost_offset = mutate;
      const auto summary = listlab::oracle::verify_exhaustive(options);

      std::cout << "instances: " << summary.instances << " (m=" << verify_m << ", n<=" << verify_n
                << ", " << verify_model << " cost model)\n"
                << "opt = free-exchange-only offline optimum (upper bound on the true optimum)\n";
      for (const auto& check : summary.checks) {
        std::cout << (check.violations == 0 ? "[PASS] " : "[FAIL] ") << check.name << ": "
                  << check.evaluated << " evaluated, " << check.violations << " violations\n";
      }
      std::cout << "info: literal-policy VFC below free-exchange optimum on "
                << summary.literal_vfc_below_opt << " instances (swallowed requests)\n";
      for (const auto& f : summary.failures) {
        std::cout << "counterexample [" << f.check << "] " << f.instance << ": " << f.detail
                  << '\n';
      }
      std::cout << (summary.passed() ? "verify: PASS\n" : "verify: FAIL\n");
      return summary.passed() ? 0 : kExitViolation;
    }
  } catch (const listlab::Error& e) {
    std::cerr << "error (" << listlab::to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
