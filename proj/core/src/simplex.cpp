#include "rsparse/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "rsparse/error.hpp"

namespace rsparse {

namespace {

constexpr double kSumTol = 1e-11;

Vector clamp_shift(const Vector& x, double tau, double cap) {
  return (x.array() - tau).cwiseMax(0.0).cwiseMin(cap).matrix();
}

double bisect_tau(const Vector& x, double cap) {
  // h(tau) = sum clamp(x - tau, 0, cap) is nonincreasing; h(lo) = n cap >= 1, h(hi) = 0.
  double lo = x.minCoeff() - cap;
  double hi = x.maxCoeff();
  while (hi - lo > 1e-14 * std::max(1.0, std::abs(lo) + std::abs(hi))) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (clamp_shift(x, mid, cap).sum() > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

CappedSimplex::CappedSimplex(Index n, double eps) : n_(n), eps_(eps), cap_(0.0) {
  if (n < 1) throw Error(ErrorCode::InfeasibleDomain, "capped simplex needs n >= 1");
  if (!(eps >= 0.0 && eps < 1.0)) {
    throw Error(ErrorCode::InfeasibleDomain, "eps must lie in [0, 1), got " + std::to_string(eps));
  }
  cap_ = 1.0 / ((1.0 - eps) * static_cast<double>(n));
  if (cap_ > 1.0 + 1e-15) {
    throw Error(ErrorCode::InfeasibleDomain, "cap exceeds 1: (1 - eps) n < 1");
  }
  if (static_cast<double>(n) * cap_ < 1.0 - 1e-15) {
    throw Error(ErrorCode::InfeasibleDomain, "n * cap < 1");
  }
}

bool CappedSimplex::contains(const Vector& w, double tol) const {
  if (w.size() != n_) return false;
  if (std::abs(w.sum() - 1.0) > tol) return false;
  return w.minCoeff() >= -tol && w.maxCoeff() <= cap_ + tol;
}

WeightVector uniform_weights(const CappedSimplex& domain) {
  return {Vector::Constant(domain.n(), 1.0 / static_cast<double>(domain.n())), domain};
}

WeightVector project_capped_simplex(const Vector& x, const CappedSimplex& domain) {
  const Index n = domain.n();
  const double cap = domain.cap();
  if (x.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "projection input has the wrong length");
  }
  if (static_cast<double>(n) * cap < 1.0) {
    throw Error(ErrorCode::InfeasibleDomain, "n * cap < 1");
  }
  if (std::abs(static_cast<double>(n) * cap - 1.0) <= 1e-15) {
    return {Vector::Constant(n, cap), domain};
  }

  // Coordinate i is at cap for tau <= x_i - cap, free on (x_i - cap, x_i),
  // and zero beyond x_i. Each crossing changes the slope of h by -1 / +1.
  struct Event {
    double pos;
    int delta;
  };
  std::vector<Event> events;
  events.reserve(static_cast<std::size_t>(2 * n));
  for (Index i = 0; i < n; ++i) {
    events.push_back({x[i] - cap, -1});
    events.push_back({x[i], +1});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    return a.pos < b.pos || (a.pos == b.pos && a.delta < b.delta);
  });

  double h = static_cast<double>(n) * cap;
  double prev = events.front().pos;
  int slope = 0;
  double tau = events.back().pos;
  for (const Event& e : events) {
    const double h_next = h + slope * (e.pos - prev);
    if (h_next <= 1.0 && slope < 0) {
      tau = prev + (h - 1.0) / static_cast<double>(-slope);
      break;
    }
    h = h_next;
    prev = e.pos;
    slope += e.delta;
  }

  Vector w = clamp_shift(x, tau, cap);
  if (std::abs(w.sum() - 1.0) > kSumTol) {
    w = clamp_shift(x, bisect_tau(x, cap), cap);
  }
  return {std::move(w), domain};
}

WeightVector mix_weights(const WeightVector& w1, const WeightVector& w2, double eta) {
  if (!(w1.domain == w2.domain) || w1.size() != w2.size()) {
    throw Error(ErrorCode::DimensionMismatch, "mixing weights from different domains");
  }
  if (eta == 0.0) return w1;
  if (eta == 1.0) return w2;
  return {(1.0 - eta) * w1.w + eta * w2.w, w1.domain};
}

}  // namespace rsparse
