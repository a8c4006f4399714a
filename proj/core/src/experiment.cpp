#include "rsparse/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <string_view>
#include <thread>

#include "rsparse/baselines.hpp"
#include "rsparse/csv.hpp"
#include "rsparse/dense_robust.hpp"
#include "rsparse/error.hpp"
#include "rsparse/metrics.hpp"
#include "rsparse/rng.hpp"
#include "rsparse/sparse_mean.hpp"
#include "rsparse/sparse_pca.hpp"

namespace rsparse {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    const std::string_view item = trim(s.substr(start, comma == s.npos ? s.npos : comma - start));
    out.emplace_back(item);
    if (comma == s.npos) break;
    start = comma + 1;
  }
  return out;
}

class LineError {
 public:
  LineError(std::string source, std::size_t line) : source_(std::move(source)), line_(line) {}
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::InvalidConfig, source_ + ":" + std::to_string(line_) + ": " + msg);
  }

 private:
  std::string source_;
  std::size_t line_;
};

template <class T>
T parse_number(std::string_view text, const LineError& where) {
  T value{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    where.fail("expected a number, got '" + std::string(text) + "'");
  }
  return value;
}

template <class T>
std::vector<T> parse_grid(std::string_view text, const LineError& where) {
  std::vector<T> out;
  for (const auto& item : split_list(text)) out.push_back(parse_number<T>(item, where));
  if (out.empty()) where.fail("empty list");
  return out;
}

bool parse_bool(std::string_view text, const LineError& where) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  where.fail("expected true/false, got '" + std::string(text) + "'");
}

Task parse_task(std::string_view text, const LineError& where) {
  if (text == "sparse_mean") return Task::SparseMean;
  if (text == "sparse_pca") return Task::SparsePca;
  where.fail("unknown task '" + std::string(text) + "'");
}

Noise parse_noise(std::string_view text, const LineError& where) {
  if (text == "none") return Noise::None;
  if (text == "linear_hiding") return Noise::LinearHiding;
  if (text == "tail_flipping") return Noise::TailFlipping;
  if (text == "constant_bias") return Noise::ConstantBias;
  where.fail("unknown noise '" + std::string(text) + "'");
}

struct GridPoint {
  Index n;
  Index k;
  double eps;
};

std::vector<GridPoint> grid_points(const ExperimentConfig& cfg) {
  std::vector<GridPoint> out;
  switch (cfg.swept()) {
    case SweptVar::N:
      for (Index n : cfg.n_grid) out.push_back({n, cfg.k_grid.front(), cfg.eps_grid.front()});
      break;
    case SweptVar::K:
      for (Index k : cfg.k_grid) out.push_back({cfg.n_grid.front(), k, cfg.eps_grid.front()});
      break;
    case SweptVar::Eps:
      for (double e : cfg.eps_grid) out.push_back({cfg.n_grid.front(), cfg.k_grid.front(), e});
      break;
  }
  return out;
}

std::string swept_value(const GridPoint& p, SweptVar s) {
  switch (s) {
    case SweptVar::N: return std::to_string(p.n);
    case SweptVar::K: return std::to_string(p.k);
    case SweptVar::Eps: return format_double(p.eps);
  }
  return {};
}

CorruptedDataset make_dataset(const ExperimentConfig& cfg, const GridPoint& p, std::uint64_t data_seed,
                              std::uint64_t noise_seed) {
  CorruptedDataset clean = cfg.task == Task::SparseMean ? gen_sparse_mean_data(cfg.d, p.k, p.n, data_seed)
                                                        : gen_spiked_data(cfg.d, p.k, p.n, cfg.rho, data_seed);
  switch (cfg.noise) {
    case Noise::None: return clean;
    case Noise::LinearHiding: return corrupt_linear_hiding(clean, p.eps, noise_seed);
    case Noise::TailFlipping: return corrupt_tail_flipping(clean, p.eps, noise_seed, cfg.flip_mode);
    case Noise::ConstantBias: return corrupt_constant_bias(clean, p.eps, cfg.bias, noise_seed);
  }
  return clean;
}

}  // namespace

std::string to_string(Task t) { return t == Task::SparseMean ? "sparse_mean" : "sparse_pca"; }

std::string to_string(Noise n) {
  switch (n) {
    case Noise::None: return "none";
    case Noise::LinearHiding: return "linear_hiding";
    case Noise::TailFlipping: return "tail_flipping";
    case Noise::ConstantBias: return "constant_bias";
  }
  return "none";
}

std::string to_string(SweptVar s) {
  switch (s) {
    case SweptVar::N: return "n";
    case SweptVar::K: return "k";
    case SweptVar::Eps: return "eps";
  }
  return "n";
}

std::vector<std::string> estimator_names(Task task) {
  if (task == Task::SparseMean) return {"sparse_gd", "dense_gd", "oracle", "naive_prune", "ransac", "sample_mean"};
  return {"sparse_pca", "dense_pca", "oracle"};
}

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& m) { throw Error(ErrorCode::InvalidConfig, m); };
  const int grids = (n_grid.size() > 1) + (k_grid.size() > 1) + (eps_grid.size() > 1);
  if (grids > 1) fail("at most one of n, k, eps may be a grid");
  if (n_grid.empty() || k_grid.empty() || eps_grid.empty()) fail("n, k and eps need a value");
  if (d < 1) fail("d must be >= 1");
  for (Index n : n_grid) if (n < 2) fail("n must be >= 2");
  for (Index k : k_grid) if (k < 1 || k > d) fail("k must lie in [1, d]");
  for (double e : eps_grid) if (!(e > 0.0 && e < 1.0 / 3.0)) fail("eps must lie in (0, 1/3)");
  if (trials < 1) fail("trials must be >= 1");
  if (task == Task::SparsePca && !(rho > 0.0 && rho <= 1.0)) fail("rho must lie in (0, 1]");
  if (iterations < 1) fail("iterations must be >= 1");
  if (ransac_rounds < 1) fail("ransac_rounds must be >= 1");
  const auto allowed = estimator_names(task);
  for (const auto& e : resolved_estimators()) {
    if (std::find(allowed.begin(), allowed.end(), e) == allowed.end()) {
      fail("estimator '" + e + "' is not available for task " + to_string(task));
    }
  }
}

SweptVar ExperimentConfig::swept() const {
  if (k_grid.size() > 1) return SweptVar::K;
  if (eps_grid.size() > 1) return SweptVar::Eps;
  return SweptVar::N;
}

std::vector<std::string> ExperimentConfig::resolved_estimators() const {
  if (!estimators.empty()) return estimators;
  if (task == Task::SparseMean) return {"sparse_gd", "oracle", "naive_prune", "ransac"};
  return {"sparse_pca", "dense_pca", "oracle"};
}

ExperimentConfig parse_config(std::istream& in, const std::string& source) {
  ExperimentConfig cfg;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const LineError where(source, line_no);
    std::string_view body = line;
    if (const auto hash = body.find('#'); hash != body.npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == body.npos) where.fail("expected 'key = value'");
    const std::string key(trim(body.substr(0, eq)));
    const std::string_view value = trim(body.substr(eq + 1));
    if (key.empty()) where.fail("missing key");
    if (value.empty()) where.fail("missing value for '" + key + "'");
    if (!seen.insert(key).second) where.fail("duplicate key '" + key + "'");

    if (key == "task") cfg.task = parse_task(value, where);
    else if (key == "noise") cfg.noise = parse_noise(value, where);
    else if (key == "d") cfg.d = parse_number<Index>(value, where);
    else if (key == "k") cfg.k_grid = parse_grid<Index>(value, where);
    else if (key == "n") cfg.n_grid = parse_grid<Index>(value, where);
    else if (key == "eps") cfg.eps_grid = parse_grid<double>(value, where);
    else if (key == "rho") cfg.rho = parse_number<double>(value, where);
    else if (key == "trials") cfg.trials = parse_number<int>(value, where);
    else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(value, where);
    else if (key == "estimators") cfg.estimators = split_list(value);
    else if (key == "iterations") cfg.iterations = parse_number<int>(value, where);
    else if (key == "step_scale") cfg.step_scale = parse_number<double>(value, where);
    else if (key == "tolerance") cfg.tolerance = parse_number<double>(value, where);
    else if (key == "patience") cfg.patience = parse_number<int>(value, where);
    else if (key == "prune") cfg.prune = parse_bool(value, where);
    else if (key == "prune_radius_factor") cfg.prune_radius_factor = parse_number<double>(value, where);
    else if (key == "bias") cfg.bias = parse_number<double>(value, where);
    else if (key == "naive_radius_factor") cfg.naive_radius_factor = parse_number<double>(value, where);
    else if (key == "ransac_rounds") cfg.ransac_rounds = parse_number<int>(value, where);
    else if (key == "ransac_ball") cfg.ransac_ball = parse_number<double>(value, where);
    else if (key == "flip_mode") {
      if (value == "reflect") cfg.flip_mode = FlipMode::Reflect;
      else if (value == "resample") cfg.flip_mode = FlipMode::Resample;
      else where.fail("flip_mode must be reflect or resample");
    } else if (key == "timing") cfg.timing = parse_bool(value, where);
    else if (key == "threads") cfg.threads = parse_number<int>(value, where);
    else where.fail("unknown key '" + key + "'");
  }
  try {
    cfg.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidConfig, source + ": " + e.what());
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open config " + path);
  return parse_config(in, path);
}

double evaluate_estimator(const std::string& name, const CorruptedDataset& data, Index k, double eps,
                          const ExperimentConfig& cfg, std::uint64_t seed) {
  if (cfg.task == Task::SparseMean) {
    Vector estimate;
    if (name == "sparse_gd") {
      SparseMeanConfig sc;
      sc.k = k;
      sc.eps = eps;
      sc.iterations = cfg.iterations;
      sc.step_scale = cfg.step_scale;
      sc.tolerance = cfg.tolerance;
      sc.patience = cfg.patience;
      sc.seed = seed;
      sc.prune = cfg.prune;
      sc.prune_radius_factor = cfg.prune_radius_factor;
      estimate = estimate_sparse_mean(data.x, sc).mu_hat;
    } else if (name == "dense_gd") {
      DenseConfig dc{eps, cfg.iterations, cfg.step_scale, cfg.tolerance, cfg.patience, seed};
      estimate = estimate_dense_mean(data.x, dc).mu_hat;
    } else if (name == "oracle") {
      estimate = baseline_oracle(data);
    } else if (name == "naive_prune") {
      estimate = baseline_naive_prune(data.x, cfg.naive_radius_factor);
    } else if (name == "ransac") {
      estimate = baseline_ransac(data.x, {cfg.ransac_rounds, cfg.ransac_ball, seed});
    } else if (name == "sample_mean") {
      estimate = sample_mean(data.x);
    } else {
      throw Error(ErrorCode::InvalidConfig, "unknown estimator " + name);
    }
    return sparse_error(estimate, data.truth, k);
  }

  Vector u;
  if (name == "sparse_pca") {
    SparsePcaConfig pc;
    pc.k = k;
    pc.eps = eps;
    pc.iterations = cfg.iterations;
    pc.step_scale = cfg.step_scale;
    pc.tolerance = cfg.tolerance;
    pc.patience = cfg.patience;
    pc.seed = seed;
    u = estimate_sparse_pca(data.x, pc).u;
  } else if (name == "dense_pca") {
    DenseConfig dc{eps, cfg.iterations, cfg.step_scale, cfg.tolerance, cfg.patience, seed};
    u = estimate_dense_pca(data.x, dc).u;
  } else if (name == "oracle") {
    EigenConfig e;
    e.seed = seed;
    u = baseline_oracle_pca(data, e);
  } else {
    throw Error(ErrorCode::InvalidConfig, "unknown estimator " + name);
  }
  return subspace_error(u, data.truth.v);
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::vector<GridPoint> grid = grid_points(cfg);
  const std::vector<std::string> estimators = cfg.resolved_estimators();
  const std::size_t n_est = estimators.size();
  const auto trials = static_cast<std::size_t>(cfg.trials);

  struct Outcome {
    double error = 0.0;
    double wall_ms = 0.0;
  };
  std::vector<Outcome> outcomes(grid.size() * trials * n_est);
  std::vector<std::uint64_t> data_seeds(grid.size() * trials);

  auto run_job = [&](std::size_t job) {
    const std::size_t g = job / trials;
    const std::size_t t = job % trials;
    const GridPoint& p = grid[g];
    const std::uint64_t data_seed = derive_seed(cfg.seed, g, t, 1);
    data_seeds[job] = data_seed;
    const CorruptedDataset data = make_dataset(cfg, p, data_seed, derive_seed(cfg.seed, g, t, 2));
    for (std::size_t e = 0; e < n_est; ++e) {
      const auto start = std::chrono::steady_clock::now();
      const double err = evaluate_estimator(estimators[e], data, p.k, p.eps, cfg, derive_seed(cfg.seed, g, t, 3 + e));
      const auto stop = std::chrono::steady_clock::now();
      Outcome& o = outcomes[(g * n_est + e) * trials + t];
      o.error = err;
      o.wall_ms = cfg.timing ? std::chrono::duration<double, std::milli>(stop - start).count() : 0.0;
    }
  };

  const std::size_t jobs = grid.size() * trials;
  std::size_t workers = cfg.threads > 0 ? static_cast<std::size_t>(cfg.threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, jobs);
  if (workers <= 1) {
    for (std::size_t j = 0; j < jobs; ++j) run_job(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t j = next++; j < jobs; j = next++) {
          try {
            run_job(j);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<ExperimentRecord> records;
  records.reserve(outcomes.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    for (std::size_t e = 0; e < n_est; ++e) {
      for (std::size_t t = 0; t < trials; ++t) {
        const Outcome& o = outcomes[(g * n_est + e) * trials + t];
        ExperimentRecord r;
        r.estimator = estimators[e];
        r.noise = to_string(cfg.noise);
        r.d = cfg.d;
        r.k = grid[g].k;
        r.n = grid[g].n;
        r.eps = grid[g].eps;
        r.rho = cfg.task == Task::SparsePca ? cfg.rho : 0.0;
        r.seed = data_seeds[g * trials + t];
        r.trial = static_cast<int>(t);
        r.error = o.error;
        r.wall_ms = o.wall_ms;
        records.push_back(std::move(r));
      }
    }
  }
  return records;
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw Error(ErrorCode::BadDims, "quantile of an empty set");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

std::vector<AggregateRow> aggregate(const std::vector<ExperimentRecord>& records, const ExperimentConfig& cfg) {
  const SweptVar sv = cfg.swept();
  std::vector<AggregateRow> rows;
  std::vector<std::vector<double>> groups;
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  for (const auto& r : records) {
    const std::string value = swept_value({r.n, r.k, r.eps}, sv);
    const auto key = std::make_pair(value, r.estimator);
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, rows.size()).first;
      rows.push_back({r.estimator, r.noise, to_string(sv), value, 0.0, 0.0, 0.0, 0});
      groups.emplace_back();
    }
    groups[it->second].push_back(r.error);
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].median = quantile(groups[i], 0.5);
    rows[i].q25 = quantile(groups[i], 0.25);
    rows[i].q75 = quantile(groups[i], 0.75);
    rows[i].trials = static_cast<int>(groups[i].size());
  }
  return rows;
}

void write_raw_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << "estimator,noise,d,k,n,eps,rho,seed,trial,error,wall_ms\n";
  for (const auto& r : records) {
    out << r.estimator << ',' << r.noise << ',' << r.d << ',' << r.k << ',' << r.n << ',' << format_double(r.eps)
        << ',' << format_double(r.rho) << ',' << r.seed << ',' << r.trial << ',' << format_double(r.error) << ','
        << format_double(r.wall_ms) << '\n';
  }
}

void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows) {
  out << "estimator,noise,swept_var,swept_value,median,q25,q75,trials\n";
  for (const auto& r : rows) {
    out << r.estimator << ',' << r.noise << ',' << r.swept_var << ',' << r.swept_value << ','
        << format_double(r.median) << ',' << format_double(r.q25) << ',' << format_double(r.q75) << ',' << r.trials
        << '\n';
  }
}

}  // namespace rsparse
