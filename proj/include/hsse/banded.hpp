#pragma once

#include <vector>

#include "hsse/types.hpp"

namespace hsse {

/// Complex banded matrix with half-bandwidth b, column-major band storage.
/// Factorization keeps an extra b superdiagonals for partial-pivoting fill.
class BandedMatrix {
 public:
  BandedMatrix(int n, int half_bandwidth);

  static BandedMatrix from_dense(const MatXc& a, int half_bandwidth);

  int size() const { return n_; }
  int half_bandwidth() const { return b_; }

  cplx operator()(int i, int j) const;
  void set(int i, int j, cplx v);

  MatXc to_dense() const;
  VecXc multiply(const VecXc& x) const;

  /// Words allocated by this band layout, n * (2b + 1).
  std::int64_t allocated_words() const { return std::int64_t(n_) * (2 * b_ + 1); }

  /// LU factorization with partial pivoting (LAPACK gbtrf layout).
  void factorize();
  VecXc solve(const VecXc& rhs) const;
  bool factorized() const { return factorized_; }

 private:
  int n_, b_, ld_;
  std::vector<cplx> w_;  // (3b + 1) x n, entry (i, j) at w_[j * ld_ + 2b + i - j]
  std::vector<int> piv_;
  bool factorized_ = false;

  cplx& at(int i, int j) { return w_[std::size_t(j) * ld_ + 2 * b_ + i - j]; }
  const cplx& at(int i, int j) const { return w_[std::size_t(j) * ld_ + 2 * b_ + i - j]; }
};

}  // namespace hsse
