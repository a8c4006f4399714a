// robust-sparse: run benchmark grids or estimate from a sample CSV.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rsparse/csv.hpp"
#include "rsparse/error.hpp"
#include "rsparse/experiment.hpp"
#include "rsparse/sparse_mean.hpp"
#include "rsparse/sparse_pca.hpp"

namespace fs = std::filesystem;

namespace {

struct Common {
  std::optional<std::uint64_t> seed;
  std::string out;
};

struct EstimateArgs {
  std::string input;
  long k = 0;
  double eps = 0.0;
  bool prune = false;
  bool header = false;
  int iterations = 2000;
  double step_scale = 0.0;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "Override the base seed");
  app->add_option("--out", c.out, "Output directory");
}

void add_estimate(CLI::App* app, EstimateArgs& a) {
  app->add_option("--input", a.input, "Sample CSV, one sample per row")->required()->check(CLI::ExistingFile);
  app->add_option("--k", a.k, "Sparsity")->required()->check(CLI::PositiveNumber);
  app->add_option("--eps", a.eps, "Corruption fraction")->required();
  app->add_flag("--header", a.header, "Skip the first line of the input");
  app->add_option("--iterations", a.iterations, "PGD iterations")->check(CLI::PositiveNumber);
  app->add_option("--step-scale", a.step_scale, "PGD step scale (0 = default)");
}

// Writes `v` to stdout, and to <out>/<name> when an output directory is given.
void emit_vector(const rsparse::Vector& v, const std::string& out, const std::string& name) {
  rsparse::write_vector_csv(std::cout, v);
  if (out.empty()) return;
  fs::create_directories(out);
  std::ofstream file(fs::path(out) / name);
  if (!file) throw rsparse::Error(rsparse::ErrorCode::Io, "cannot write " + (fs::path(out) / name).string());
  rsparse::write_vector_csv(file, v);
}

int run_bench(const std::string& config_path, const Common& c, std::optional<int> trials) {
  rsparse::ExperimentConfig cfg = rsparse::load_config(config_path);
  if (c.seed) cfg.seed = *c.seed;
  if (trials) cfg.trials = *trials;
  cfg.validate();

  const auto records = rsparse::run_experiment(cfg);
  const auto rows = rsparse::aggregate(records, cfg);

  const fs::path dir = c.out.empty() ? fs::path(".") : fs::path(c.out);
  fs::create_directories(dir);
  std::ofstream raw(dir / "raw.csv", std::ios::binary);
  std::ofstream agg(dir / "aggregate.csv", std::ios::binary);
  if (!raw || !agg) throw rsparse::Error(rsparse::ErrorCode::Io, "cannot write into " + dir.string());
  rsparse::write_raw_csv(raw, records);
  rsparse::write_aggregate_csv(agg, rows);
  rsparse::write_aggregate_csv(std::cout, rows);
  return 0;
}

int run_estimate_mean(const EstimateArgs& a, const Common& c) {
  const rsparse::Matrix x = rsparse::read_samples_csv(a.input, a.header);
  rsparse::SparseMeanConfig cfg;
  cfg.k = a.k;
  cfg.eps = a.eps;
  cfg.prune = a.prune;
  cfg.iterations = a.iterations;
  cfg.step_scale = a.step_scale;
  if (c.seed) cfg.seed = *c.seed;
  const auto result = rsparse::estimate_sparse_mean(x, cfg);
  emit_vector(result.mu_hat, c.out, "mean.csv");
  return 0;
}

int run_estimate_pca(const EstimateArgs& a, const Common& c) {
  const rsparse::Matrix x = rsparse::read_samples_csv(a.input, a.header);
  rsparse::SparsePcaConfig cfg;
  cfg.k = a.k;
  cfg.eps = a.eps;
  cfg.iterations = a.iterations;
  cfg.step_scale = a.step_scale;
  if (c.seed) cfg.seed = *c.seed;
  const auto result = rsparse::estimate_sparse_pca(x, cfg);
  emit_vector(result.u, c.out, "direction.csv");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Outlier-robust sparse mean estimation and sparse PCA"};
  app.require_subcommand(1);

  Common bench_common;
  std::string config_path;
  std::optional<int> trials;
  auto* bench = app.add_subcommand("bench", "Run an experiment grid and write raw.csv and aggregate.csv");
  bench->add_option("--config", config_path, "Experiment config file")->required()->check(CLI::ExistingFile);
  bench->add_option("--trials", trials, "Override the trial count")->check(CLI::PositiveNumber);
  add_common(bench, bench_common);

  Common mean_common;
  EstimateArgs mean_args;
  auto* mean = app.add_subcommand("estimate-mean", "Robust sparse mean of a sample CSV");
  add_estimate(mean, mean_args);
  mean->add_flag("--prune", mean_args.prune, "Median pruning before descent");
  add_common(mean, mean_common);

  Common pca_common;
  EstimateArgs pca_args;
  auto* pca = app.add_subcommand("estimate-pca", "Robust sparse principal direction of a sample CSV");
  add_estimate(pca, pca_args);
  add_common(pca, pca_common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (bench->parsed()) return run_bench(config_path, bench_common, trials);
    if (mean->parsed()) return run_estimate_mean(mean_args, mean_common);
    if (pca->parsed()) return run_estimate_pca(pca_args, pca_common);
  } catch (const rsparse::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
