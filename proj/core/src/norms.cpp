#include "rsparse/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rsparse {

namespace {

// Picks the `k` largest keys (ties to the lower position) and returns their
// positions sorted ascending.
template <class KeyFn>
IndexList select_top(Index count, Index k, KeyFn key) {
  IndexList order(static_cast<std::size_t>(count));
  std::iota(order.begin(), order.end(), Index{0});
  k = std::clamp<Index>(k, 0, count);
  auto better = [&](Index a, Index b) {
    const double ka = key(a);
    const double kb = key(b);
    if (ka != kb) return ka > kb;
    return a < b;
  };
  if (k < count) {
    std::nth_element(order.begin(), order.begin() + k, order.end(), better);
    order.resize(static_cast<std::size_t>(k));
  }
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace

CellList MatFkk::cells() const {
  CellList out;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (Index c : cols[j]) out.push_back({rows[j], c});
  }
  return out;
}

IndexList top_magnitude_indices(const Vector& v, Index k) {
  return select_top(v.size(), k, [&](Index i) { return std::abs(v[i]); });
}

double restricted_norm(const Vector& v, const IndexList& support) {
  double sum = 0.0;
  for (Index i : support) sum += v[i] * v[i];
  return std::sqrt(sum);
}

double restricted_norm(const Matrix& a, const CellList& support) {
  double sum = 0.0;
  for (const Cell& c : support) sum += a(c.row, c.col) * a(c.row, c.col);
  return std::sqrt(sum);
}

VecTopK topk_vector_norm(const Vector& v, Index k) {
  VecTopK out;
  out.support = top_magnitude_indices(v, k);
  out.value = restricted_norm(v, out.support);
  return out;
}

MatTopS top_entries_norm(const Matrix& a, Index s) {
  const Index total = a.size();
  // Row-major linear position p maps to (p / cols, p % cols).
  const Index cols = a.cols();
  IndexList picked = select_top(total, s, [&](Index p) { return std::abs(a(p / cols, p % cols)); });
  MatTopS out;
  out.support.reserve(picked.size());
  for (Index p : picked) out.support.push_back({p / cols, p % cols});
  out.value = restricted_norm(a, out.support);
  return out;
}

MatFkk fkk_norm(const Matrix& a, Index k) {
  const Index rows = a.rows();
  std::vector<IndexList> row_cols(static_cast<std::size_t>(rows));
  Vector row_sq(rows);
  for (Index i = 0; i < rows; ++i) {
    const Vector row = a.row(i).transpose();
    auto& sel = row_cols[static_cast<std::size_t>(i)];
    sel = top_magnitude_indices(row, k);
    double sq = 0.0;
    for (Index c : sel) sq += row[c] * row[c];
    row_sq[i] = sq;
  }

  MatFkk out;
  out.rows = select_top(rows, k, [&](Index i) { return row_sq[i]; });
  out.cols.reserve(out.rows.size());
  for (Index r : out.rows) out.cols.push_back(std::move(row_cols[static_cast<std::size_t>(r)]));
  out.value = restricted_norm(a, out.cells());
  return out;
}

}  // namespace rsparse
