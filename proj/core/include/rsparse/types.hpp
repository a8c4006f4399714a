#pragma once

#include <Eigen/Dense>

#include <compare>
#include <vector>

namespace rsparse {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// A (row, col) position in a square matrix. Ordered row-major.
struct Cell {
  Index row = 0;
  Index col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

using CellList = std::vector<Cell>;
using IndexList = std::vector<Index>;

}  // namespace rsparse
