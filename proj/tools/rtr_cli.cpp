#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "rtr/baselines.hpp"
#include "rtr/graph.hpp"
#include "rtr/metrics.hpp"
#include "rtr/pipeline.hpp"
#include "rtr/set_io.hpp"
#include "rtr/triangles.hpp"

namespace {

using namespace rtr;

struct ExtractArgs {
  std::string input;
  std::string out_prefix;
  double epsilon = 0.1;
  std::uint32_t grow_k = 10;
  bool no_grow = false;
  std::string two_hop = "sweep";
  double beta = 0.0;
  std::vector<double> gammas{0.5, 0.8};
  std::size_t min_size = 5;
  std::string sweep_density = "h";
  unsigned threads = 0;
  bool deterministic = false;
};

struct StatsArgs {
  std::string input;
  unsigned threads = 0;
};

struct CompareArgs {
  std::string input;
  std::vector<std::string> sets;
  std::vector<double> gammas{0.5, 0.8};
  std::size_t min_size = 5;
  std::size_t mean_min_size = 10;
};

struct BaselineArgs {
  std::string input;
  std::string out;
  std::string method = "greedy";
  std::size_t max_sets = 1000;
  std::int64_t k = -1;
};

unsigned worker_count(unsigned requested, bool deterministic) {
  if (deterministic) return 1;
  if (requested) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

template <class F>
void write_file(const std::string& path, F&& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  body(out);
  out.flush();
  if (!out) throw std::runtime_error("error writing " + path);
}

int cmd_extract(const ExtractArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  Graph g = load_edge_list_file(a.input);

  ExtractionParams params;
  params.epsilon = a.epsilon;
  params.grow_k = a.no_grow ? 0 : a.grow_k;
  params.two_hop_mode = a.two_hop == "beta" ? TwoHopMode::beta_threshold : TwoHopMode::greedy_sweep;
  params.beta = a.beta;
  params.sweep_density = a.sweep_density == "g" ? SweepDensity::g_edges : SweepDensity::h_edges;

  auto result = extract_and_grow(g, params, worker_count(a.threads, a.deterministic));

  ReportOptions options;
  options.gammas = a.gammas;
  options.min_size = a.min_size;
  auto report = family_report(g, result.grown, options);

  std::vector<std::pair<std::string, std::string>> header{
      {"epsilon", fmt(params.epsilon)},
      {"grow_k", a.no_grow ? "none" : std::to_string(params.grow_k)},
      {"two_hop", a.two_hop},
      {"sweep_density", a.sweep_density},
  };
  if (params.two_hop_mode == TwoHopMode::beta_threshold) header.emplace_back("beta", fmt(params.beta));
  header.emplace_back("sets", std::to_string(result.grown.sets.size()));

  write_file(a.out_prefix + ".sets", [&](std::ostream& out) { write_sets(g, result.grown, out, header); });
  write_file(a.out_prefix + ".report.json", [&](std::ostream& out) { write_report_json(report, out); });
  write_file(a.out_prefix + ".coverage.csv", [&](std::ostream& out) { write_report_csv(report, out); });

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("n=%zu m=%zu triangles=%llu sets=%zu singletons=%zu seconds=%.3f\n", g.num_vertices(),
              g.num_edges(), static_cast<unsigned long long>(result.triangles), result.grown.sets.size(),
              result.grown.unassigned.size(), seconds);
  return 0;
}

int cmd_stats(const StatsArgs& a) {
  Graph g = load_edge_list_file(a.input);
  const auto triangles = count_all_edge_triangles(g, worker_count(a.threads, false)).total_triangles();
  const double n = static_cast<double>(g.num_vertices());
  const double m = static_cast<double>(g.num_edges());
  const double density = n >= 2 ? m / (n * (n - 1) / 2) : 0.0;
  std::printf("n=%zu m=%zu triangles=%llu average_degree=%s edge_density=%s\n", g.num_vertices(), g.num_edges(),
              static_cast<unsigned long long>(triangles), fmt(2 * m / n).c_str(), fmt(density).c_str());
  return 0;
}

int cmd_compare(const CompareArgs& a) {
  Graph g = load_edge_list_file(a.input);
  ReportOptions options;
  options.gammas = a.gammas;
  options.min_size = a.min_size;
  options.mean_density_min_size = a.mean_min_size;
  options.largest_count = 1;

  std::vector<FamilyReport> reports;
  for (const auto& path : a.sets) reports.push_back(family_report(g, read_sets_file(g, path), options));

  std::printf("family\tsets");
  for (double gamma : a.gammas) std::printf("\tcoverage@%s", fmt(gamma).c_str());
  std::printf("\tlargest_size\tlargest_density\tmean_density_ge%zu\n", a.mean_min_size);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& report = reports[i];
    std::printf("%s\t%zu", a.sets[i].c_str(), report.num_sets);
    for (const auto& c : report.coverage) std::printf("\t%.2f", round_percent(c.percent));
    if (report.largest.empty()) {
      std::printf("\t0\t-");
    } else {
      const auto& top = report.largest.front();
      std::printf("\t%zu\t%s", top.size, top.edge_density ? fmt(*top.edge_density).c_str() : "-");
    }
    std::printf("\t%s\n", report.mean_edge_density ? fmt(*report.mean_edge_density).c_str() : "-");
  }
  return 0;
}

int cmd_baseline(const BaselineArgs& a) {
  Graph g = load_edge_list_file(a.input);
  SetFamily family;
  std::vector<std::pair<std::string, std::string>> header{{"method", a.method}};
  if (a.method == "greedy") {
    family = iterated_greedy(g, a.max_sets);
  } else {
    auto core = core_decomposition(g);
    std::uint32_t k = 0;
    if (a.k >= 0) {
      k = static_cast<std::uint32_t>(a.k);
    } else {
      for (auto c : core) k = std::max(k, c);
    }
    header.emplace_back("k", std::to_string(k));
    family = core_components(g, core, k);
  }
  write_file(a.out, [&](std::ostream& out) { write_sets(g, family, out, header); });
  std::printf("sets=%zu covered=%zu\n", family.sets.size(), g.num_vertices() - family.unassigned.size());
  return 0;
}

// Plain key=value config files: unsectioned keys belong to the subcommand
// being run, so `epsilon=0.2` means `--epsilon 0.2` for extract.
class SubcommandConfig : public CLI::ConfigBase {
 public:
  explicit SubcommandConfig(const CLI::App& app) : app_(app) {}

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    auto items = CLI::ConfigBase::from_config(input);
    auto active = app_.get_subcommands();
    if (active.empty()) return items;
    for (auto& item : items)
      if (item.parents.empty()) item.parents.push_back(active.front()->get_name());
    return items;
  }

 private:
  const CLI::App& app_;
};

void add_threads(CLI::App* cmd, unsigned& threads) {
  cmd->add_option("--threads", threads, "Triangle-counting workers (default: all cores)")
      ->envname("RTR_THREADS")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extracts disjoint families of dense, triangle-rich vertex sets from a graph."};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file with defaults for the subcommand's flags");
  app.config_formatter(std::make_shared<SubcommandConfig>(app));
  app.allow_config_extras(CLI::config_extras_mode::error);

  ExtractArgs ex;
  auto* extract = app.add_subcommand("extract", "Run the extractor and write sets, report and per-set CSV");
  extract->add_option("--input", ex.input, "Edge list")->required()->check(CLI::ExistingFile);
  extract->add_option("--out-prefix", ex.out_prefix, "Writes <prefix>.sets, .report.json, .coverage.csv")
      ->required();
  extract->add_option("--epsilon", ex.epsilon, "Cleaning threshold")->check(CLI::Range(0.0, 1.0));
  extract->add_option("--grow-k", ex.grow_k, "Growing threshold")->check(CLI::PositiveNumber);
  extract->add_flag("--no-grow", ex.no_grow, "Skip the growing pass");
  extract->add_option("--two-hop", ex.two_hop, "Two-hop selection")->check(CLI::IsMember({"sweep", "beta"}));
  extract->add_option("--beta", ex.beta, "Threshold for --two-hop beta")->check(CLI::NonNegativeNumber);
  extract->add_option("--gammas", ex.gammas, "Coverage density thresholds")->delimiter(',');
  extract->add_option("--min-size", ex.min_size, "Smallest set counted by coverage");
  extract->add_option("--sweep-density", ex.sweep_density, "Score sweep prefixes on H or G edges")
      ->check(CLI::IsMember({"h", "g"}));
  add_threads(extract, ex.threads);
  extract->add_flag("--deterministic", ex.deterministic, "Sequential triangle counting");

  StatsArgs st;
  auto* stats = app.add_subcommand("stats", "Print n, m, triangles, average degree and edge density");
  stats->add_option("--input", st.input, "Edge list")->required()->check(CLI::ExistingFile);
  add_threads(stats, st.threads);

  CompareArgs cmp;
  auto* compare = app.add_subcommand("compare", "Coverage table for one or more sets files");
  compare->add_option("--input", cmp.input, "Edge list")->required()->check(CLI::ExistingFile);
  compare->add_option("--sets", cmp.sets, "Sets files (repeatable)")->required()->check(CLI::ExistingFile);
  compare->add_option("--gammas", cmp.gammas, "Coverage density thresholds")->delimiter(',');
  compare->add_option("--min-size", cmp.min_size, "Smallest set counted by coverage");
  compare->add_option("--mean-min-size", cmp.mean_min_size, "Smallest set in the mean density");

  BaselineArgs bl;
  auto* baseline = app.add_subcommand("baseline", "Write a sets file from a baseline method");
  baseline->add_option("--input", bl.input, "Edge list")->required()->check(CLI::ExistingFile);
  baseline->add_option("--out", bl.out, "Sets file to write")->required();
  baseline->add_option("--method", bl.method, "greedy (iterated peeling) or kcore (k-core components)")
      ->check(CLI::IsMember({"greedy", "kcore"}));
  baseline->add_option("--max-sets", bl.max_sets, "Cap for iterated greedy")->check(CLI::PositiveNumber);
  baseline->add_option("--k", bl.k, "Core level for kcore (default: the maximum)")->check(CLI::NonNegativeNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*extract) return cmd_extract(ex);
    if (*stats) return cmd_stats(st);
    if (*compare) return cmd_compare(cmp);
    return cmd_baseline(bl);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
