#include "rsparse/pgd.hpp"

#include <algorithm>
#include <cmath>

#include "rsparse/error.hpp"

namespace rsparse {

double domain_radius(const CappedSimplex& domain) {
  const auto n = static_cast<double>(domain.n());
  const double eps = domain.eps();
  return 2.0 * std::sqrt(eps / ((1.0 - eps) * n));
}

double bound_step_scale(const Matrix& x, const CappedSimplex& domain) {
  const double max_sq = x.cols() > 0 ? x.colwise().squaredNorm().maxCoeff() : 0.0;
  const double lipschitz = std::sqrt(static_cast<double>(domain.n())) * max_sq;
  return lipschitz > 0.0 ? domain_radius(domain) / lipschitz : domain_radius(domain);
}

double adaptive_step_scale(const CappedSimplex& domain, double gradient_norm) {
  return gradient_norm > 0.0 ? domain_radius(domain) / gradient_norm : domain_radius(domain);
}

PgdResult run_pgd(const WeightVector& start, double step_scale, const PgdOptions& options,
                  const ObjectiveFn& objective) {
  if (options.iterations < 1) throw Error(ErrorCode::InvalidConfig, "PGD needs at least one iteration");
  if (std::isnan(step_scale)) throw Error(ErrorCode::InvalidConfig, "PGD step scale is NaN");

  const double root_t = std::sqrt(static_cast<double>(options.iterations));
  double eta = step_scale > 0.0 ? step_scale / root_t : 0.0;
  PgdResult result{start, 0.0, {}, 0, false, eta};
  result.trace.reserve(static_cast<std::size_t>(options.iterations) + 1);

  WeightVector w = start;
  int stale = 0;
  for (int tau = 0;; ++tau) {
    ObjectiveEval eval = objective(w);
    if (tau == 0 && eta == 0.0) {
      eta = adaptive_step_scale(w.domain, eval.gradient.norm()) / root_t;
      result.step = eta;
    }
    result.trace.push_back({tau, eval.value});
    if (tau == 0 || eval.value < result.best_objective) {
      const bool improved = tau == 0 || eval.value < result.best_objective - options.tolerance * result.best_objective;
      result.best = w;
      result.best_objective = eval.value;
      stale = improved ? 0 : stale + 1;
    } else {
      ++stale;
    }
    result.iterations_run = tau;
    if (tau == options.iterations) break;
    if (eval.value == 0.0) {
      result.stopped_early = true;
      break;
    }
    if (options.patience > 0 && stale >= options.patience) {
      result.stopped_early = true;
      break;
    }
    w = project_capped_simplex(w.w - eta * eval.gradient, w.domain);
  }
  return result;
}

std::vector<double> best_so_far(const std::vector<TracePoint>& trace) {
  std::vector<double> out;
  out.reserve(trace.size());
  double best = 0.0;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    best = i == 0 ? trace[i].objective : std::min(best, trace[i].objective);
    out.push_back(best);
  }
  return out;
}

}  // namespace rsparse
