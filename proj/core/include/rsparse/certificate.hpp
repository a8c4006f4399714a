#pragma once

// The matrix Y that certifies a max-structured norm: ||A|| = Y . A with Y in
// the dual feasible set. Stored either as a sparse list of entries (for the
// sparsity-restricted Frobenius norms) or as a sum of rank-one terms (for the
// spectral and Ky Fan norms), never as a dense d x d product in the hot loop.

#include <vector>

#include "rsparse/types.hpp"

namespace rsparse {

struct CertificateEntry {
  Cell cell;
  double value = 0.0;
};

struct RankOneTerm {
  double coef = 0.0;
  Vector u;
};

class SubgradientCertificate {
 public:
  SubgradientCertificate() = default;
  explicit SubgradientCertificate(Index dim) : dim_(dim) {}

  /// Y = A_S / ||A_S||_F, or Y = 0 when A vanishes on S.
  static SubgradientCertificate normalized_restriction(const Matrix& a, const CellList& support);
  /// Y = sum_j coef_j u_j u_j^T.
  static SubgradientCertificate low_rank(Index dim, std::vector<RankOneTerm> terms);

  Index dim() const noexcept { return dim_; }
  bool is_zero() const noexcept;
  bool is_sparse() const noexcept { return terms_.empty(); }
  const std::vector<CertificateEntry>& entries() const noexcept { return entries_; }
  const std::vector<RankOneTerm>& terms() const noexcept { return terms_; }

  Matrix dense() const;
  double frobenius_norm() const;
  /// Y . A = sum_ij Y_ij A_ij.
  double inner(const Matrix& a) const;
  /// g_i = X_i^T Y X_i for every column of x.
  Vector quadratic_forms(const Matrix& x) const;
  /// (Y + Y^T) m.
  Vector symmetrized_apply(const Vector& m) const;

 private:
  Index dim_ = 0;
  std::vector<CertificateEntry> entries_;
  std::vector<RankOneTerm> terms_;
};

}  // namespace rsparse
