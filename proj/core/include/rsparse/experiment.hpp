#pragma once

// Experiment runner: a grid over one swept variable (n, k or eps), several
// seeded trials per grid point, every listed estimator on the same dataset.
//
// Config files are flat `key = value` text; `#` starts a comment. Grids are
// comma-separated lists. Recognised keys:
//
//   task        sparse_mean | sparse_pca
//   noise       none | linear_hiding | tail_flipping | constant_bias
//   d, k, n     integers (k or n may be a grid)
//   eps         real (may be a grid)
//   rho         spike strength for sparse_pca (default 1)
//   trials      trials per grid point (default 10)
//   seed        base seed (default 1)
//   estimators  comma list; see estimator_names()
//   iterations, step_scale, tolerance, patience     PGD settings
//   prune, prune_radius_factor                      median pruning for sparse_gd
//   bias                                            constant-bias shift (default 2)
//   naive_radius_factor                             naive pruning radius (default 4)
//   ransac_rounds, ransac_ball                      RANSAC settings (default 50, 2)
//   flip_mode   reflect | resample
//   timing      true to record wall_ms (default false, written as 0)
//   threads     worker threads for trials (0 = hardware concurrency)

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rsparse/synthetic.hpp"
#include "rsparse/types.hpp"

namespace rsparse {

enum class Task { SparseMean, SparsePca };
enum class Noise { None, LinearHiding, TailFlipping, ConstantBias };
enum class SweptVar { N, K, Eps };

std::string to_string(Task t);
std::string to_string(Noise n);
std::string to_string(SweptVar s);

struct ExperimentConfig {
  Task task = Task::SparseMean;
  Noise noise = Noise::LinearHiding;
  Index d = 100;
  std::vector<Index> n_grid{1000};
  std::vector<Index> k_grid{5};
  std::vector<double> eps_grid{0.1};
  double rho = 1.0;
  int trials = 10;
  std::uint64_t seed = 1;
  std::vector<std::string> estimators;  // empty: task defaults

  int iterations = 2000;
  double step_scale = 0.0;
  double tolerance = 1e-8;
  int patience = 200;
  bool prune = false;
  double prune_radius_factor = 4.0;
  double bias = kDefaultBias;
  double naive_radius_factor = 4.0;
  int ransac_rounds = 50;
  double ransac_ball = 2.0;
  FlipMode flip_mode = FlipMode::Reflect;
  bool timing = false;
  int threads = 0;

  /// Throws InvalidConfig when more than one of n, k, eps is a grid or a value is out of range.
  void validate() const;
  SweptVar swept() const;
  std::vector<std::string> resolved_estimators() const;
};

/// Estimators accepted for a task.
std::vector<std::string> estimator_names(Task task);

ExperimentConfig parse_config(std::istream& in, const std::string& source = "<config>");
ExperimentConfig load_config(const std::string& path);

struct ExperimentRecord {
  std::string estimator;
  std::string noise;
  Index d = 0;
  Index k = 0;
  Index n = 0;
  double eps = 0.0;
  double rho = 0.0;
  std::uint64_t seed = 0;
  int trial = 0;
  double error = 0.0;
  double wall_ms = 0.0;
};

struct AggregateRow {
  std::string estimator;
  std::string noise;
  std::string swept_var;
  std::string swept_value;
  double median = 0.0;
  double q25 = 0.0;
  double q75 = 0.0;
  int trials = 0;
};

/// Rows in (grid point, estimator, trial) order regardless of thread scheduling.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg);

/// One row per (grid point, estimator), in record order.
std::vector<AggregateRow> aggregate(const std::vector<ExperimentRecord>& records, const ExperimentConfig& cfg);

/// Linear-interpolation quantile (the usual "type 7"); q in [0, 1].
double quantile(std::vector<double> values, double q);

void write_raw_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);
void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows);

/// Error of one estimator on one dataset (exposed for tests and the acceptance suite).
double evaluate_estimator(const std::string& name, const CorruptedDataset& data, Index k, double eps,
                          const ExperimentConfig& cfg, std::uint64_t seed);

}  // namespace rsparse
