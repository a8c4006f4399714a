#include <gtest/gtest.h>

#include <sstream>

#include "rsparse/csv.hpp"
#include "rsparse/error.hpp"
#include "rsparse/experiment.hpp"

using namespace rsparse;

namespace {

ExperimentConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in, "test.cfg");
}

std::string error_text(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidConfig);
    return e.what();
  }
  return {};
}

const char* kSmall = R"(# tiny grid
task = sparse_mean
noise = linear_hiding
d = 12
k = 2
n = 60, 90
eps = 0.1
trials = 3
seed = 5
estimators = sparse_gd, dense_gd, oracle, naive_prune, ransac, sample_mean
iterations = 30
)";

}  // namespace

TEST(Config, ParsesKeysAndGrid) {
  const auto cfg = parse(kSmall);
  EXPECT_EQ(cfg.d, 12);
  EXPECT_EQ(cfg.n_grid, (std::vector<Index>{60, 90}));
  EXPECT_EQ(cfg.swept(), SweptVar::N);
  EXPECT_EQ(cfg.resolved_estimators().size(), 6u);
  EXPECT_EQ(parse("task = sparse_pca\nd = 10\nk = 2\n").resolved_estimators(),
            (std::vector<std::string>{"sparse_pca", "dense_pca", "oracle"}));
}

TEST(Config, LineDiagnostics) {
  EXPECT_NE(error_text("d = 10\nbogus = 3\n").find("test.cfg:2"), std::string::npos);
  EXPECT_NE(error_text("d = 10\nd = 11\n").find("duplicate"), std::string::npos);
  EXPECT_NE(error_text("d = ten\n").find("test.cfg:1"), std::string::npos);
  EXPECT_NE(error_text("just words\n").find("key = value"), std::string::npos);
  EXPECT_NE(error_text("n = 10, 20\nk = 1, 2\n").find("at most one"), std::string::npos);
  EXPECT_NE(error_text("estimators = sparse_pca\n").find("not available"), std::string::npos);
}

TEST(Quantile, EvenCountMedian) {
  const std::vector<double> v{9, 1, 8, 2, 7, 3, 6, 4, 5, 10};
  EXPECT_DOUBLE_EQ(quantile(v, 0.5), 5.5);
  EXPECT_DOUBLE_EQ(quantile(v, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(quantile(v, 1.0), 10.0);
  EXPECT_LE(quantile(v, 0.25), quantile(v, 0.5));
  EXPECT_LE(quantile(v, 0.5), quantile(v, 0.75));
}

TEST(Runner, OrderAggregatesAndDeterminism) {
  auto cfg = parse(kSmall);
  cfg.threads = 1;
  const auto serial = run_experiment(cfg);
  ASSERT_EQ(serial.size(), 2u * 6u * 3u);
  EXPECT_EQ(serial[0].estimator, "sparse_gd");
  EXPECT_EQ(serial[0].n, 60);
  EXPECT_EQ(serial[3].estimator, "dense_gd");
  EXPECT_EQ(serial[18].n, 90);
  for (const auto& r : serial) {
    EXPECT_GE(r.error, 0.0);
    EXPECT_EQ(r.wall_ms, 0.0);
  }

  cfg.threads = 3;
  const auto parallel = run_experiment(cfg);
  std::ostringstream a, b;
  write_raw_csv(a, serial);
  write_raw_csv(b, parallel);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().substr(0, a.str().find('\n')), "estimator,noise,d,k,n,eps,rho,seed,trial,error,wall_ms");

  const auto rows = aggregate(serial, cfg);
  ASSERT_EQ(rows.size(), 12u);
  for (const auto& row : rows) {
    EXPECT_LE(row.q25, row.median);
    EXPECT_LE(row.median, row.q75);
    EXPECT_EQ(row.trials, 3);
    EXPECT_EQ(row.swept_var, "n");
  }
  std::ostringstream agg;
  write_aggregate_csv(agg, rows);
  EXPECT_EQ(agg.str().substr(0, agg.str().find('\n')), "estimator,noise,swept_var,swept_value,median,q25,q75,trials");
}

TEST(Runner, PcaTask) {
  auto cfg = parse("task = sparse_pca\nnoise = constant_bias\nd = 10\nk = 2\nn = 200\neps = 0.05, 0.1\ntrials = 2\n"
                   "iterations = 20\n");
  const auto records = run_experiment(cfg);
  ASSERT_EQ(records.size(), 2u * 3u * 2u);
  EXPECT_EQ(records[0].rho, 1.0);
  EXPECT_EQ(aggregate(records, cfg)[0].swept_var, "eps");
}

TEST(Csv, ReadSamples) {
  std::istringstream in("a,b\n1,2\n3.5, -4\n\n");
  const Matrix x = read_samples_csv(in, true);
  ASSERT_EQ(x.rows(), 2);
  ASSERT_EQ(x.cols(), 2);
  EXPECT_EQ(x(1, 1), -4.0);

  std::istringstream bad("1,2\n3,x\n");
  try {
    read_samples_csv(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Io);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  std::istringstream ragged("1,2\n3\n");
  EXPECT_THROW(read_samples_csv(ragged), Error);
}

TEST(Csv, FormatRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 123456789.125, -0.0}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.1), "0.1");
}
