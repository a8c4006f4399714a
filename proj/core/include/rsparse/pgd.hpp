#pragma once

// Projected subgradient descent over the capped simplex, shared by every
// estimator. The objective is a max of smooth functions F(w, Y); the caller
// supplies f(w) and the gradient of the active F(., Y) at w.

#include <functional>
#include <vector>

#include "rsparse/simplex.hpp"
#include "rsparse/types.hpp"

namespace rsparse {

struct PgdOptions {
  int iterations = 2000;     // T; the step is xi / sqrt(T)
  double step_scale = 0.0;   // xi; <= 0 selects adaptive_step_scale at the start point
  double tolerance = 1e-8;   // relative improvement that resets the patience window
  int patience = 200;        // iterations without improvement before stopping; 0 = never
};

struct TracePoint {
  int iteration = 0;
  double objective = 0.0;
};

struct ObjectiveEval {
  double value = 0.0;
  Vector gradient;
};

using ObjectiveFn = std::function<ObjectiveEval(const WeightVector&)>;

struct PgdResult {
  WeightVector best;          // iterate with the smallest objective seen
  double best_objective = 0.0;
  std::vector<TracePoint> trace;  // f(w_tau) for every evaluated iterate
  int iterations_run = 0;
  bool stopped_early = false;
  double step = 0.0;          // eta actually used
};

/// R = 2 sqrt(eps / ((1 - eps) n)), the diameter scale of the domain.
double domain_radius(const CappedSimplex& domain);

/// Worst-case scale R / L with L = sqrt(n) max_i ||X_i||^2. Far too cautious
/// in practice (about 100x below the adaptive scale on Gaussian data).
double bound_step_scale(const Matrix& x, const CappedSimplex& domain);

/// R / ||g0|| where g0 is the subgradient at the start point; R when g0 = 0.
double adaptive_step_scale(const CappedSimplex& domain, double gradient_norm);

/// step_scale <= 0 picks adaptive_step_scale from the first subgradient.
PgdResult run_pgd(const WeightVector& start, double step_scale, const PgdOptions& options,
                  const ObjectiveFn& objective);

/// Running minimum of the trace objective values.
std::vector<double> best_so_far(const std::vector<TracePoint>& trace);

}  // namespace rsparse
