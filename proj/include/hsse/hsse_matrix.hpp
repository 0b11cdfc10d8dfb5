#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "hsse/bem.hpp"
#include "hsse/types.hpp"

namespace hsse {

/// Compatibility maps between the FEM surface nodes and the BEM constant
/// elements: U_N = r_u U_S (displacements) and F_N = r_t t_S (forces).
struct CouplingMatrices {
  MatX r_u;  ///< 2N x 2M
  MatX r_t;  ///< 2M x 2N
};

/// Builds r_u (polyline interpolation at element midpoints) and r_t
/// (tributary-length lumping of element forces onto the flanking nodes).
/// FEM nodes must lie on the mesh polyline, ordered along it.
CouplingMatrices coupling_matrices(const BoundaryMesh& mesh,
                                   const std::vector<Vec2>& fem_surface_nodes);

/// The half-space super-element stiffness matrix.
struct HsseMatrix {
  MatXc k;
  BemFlavor flavor = BemFlavor::Direct;
  double omega = 0.0;
};

/// K = R_t H G^{-1} R_u (Direct) or K = R_t G^{-1} H R_u (Indirect).
HsseMatrix assemble_khs(const BemOperators& ops, const CouplingMatrices& coupling);

/// (K + K^T) / 2.
HsseMatrix symmetrize(const HsseMatrix& k);

enum class CompressionMethod { Threshold, HalfBand };

struct CompressionSpec {
  CompressionMethod method = CompressionMethod::Threshold;
  double value = 0.0;  // threshold fraction tau or relative half-bandwidth, in [0, 1]

  CompressionSpec() = default;
  CompressionSpec(CompressionMethod m, double v) : method(m), value(v) {
    if (!(value >= 0.0 && value <= 1.0))
      throw std::domain_error("CompressionSpec: value must lie in [0, 1]");
  }
};

struct CompressionReport {
  double rhbw = 0.0;     ///< measured relative half-bandwidth of the result
  double rst = 0.0;      ///< in-band storage words / n^2
  std::int64_t nnz = 0;  ///< retained entries
  int n = 0;             ///< matrix dimension
};

/// Zero entries with |k_ij| < tau * max|k_ij|; the diagonal is always kept.
std::pair<HsseMatrix, CompressionReport> compress_threshold(const HsseMatrix& k, double tau);

/// Zero entries with |i - j| > round(rhbw * (n - 1)).
std::pair<HsseMatrix, CompressionReport> compress_halfband(const HsseMatrix& k, double rhbw);

std::pair<HsseMatrix, CompressionReport> compress(const HsseMatrix& k,
                                                  const CompressionSpec& spec);

/// Relative band-storage requirement 2*rhbw - rhbw^2 (diagonal neglected).
double relative_storage(double rhbw);

/// Widest nonzero off-diagonal distance over (n - 1); 0 for diagonal matrices.
double measure_rhbw(const MatXc& k);

/// Exact number of stored words for an n x n matrix of half-bandwidth b.
std::int64_t band_storage_words(int n, int b);

/// Row-major (i, j, |k_ij|) triplets of the nonzero entries.
std::vector<std::tuple<int, int, double>> sparsity_triplets(const MatXc& k);

}  // namespace hsse
