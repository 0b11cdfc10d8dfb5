#include "hsse/hsse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hsse {

namespace {

// Arclength coordinates of the polyline: per-node and per-element spans.
struct Arclength {
  std::vector<double> node_s;
  std::vector<double> elem_begin, elem_end, elem_mid;
  double total = 0.0;
};

Arclength polyline_arclength(const BoundaryMesh& mesh) {
  Arclength arc;
  const int n = mesh.size();
  arc.node_s.resize(mesh.nodes.size());
  arc.elem_begin.resize(n);
  arc.elem_end.resize(n);
  arc.elem_mid.resize(n);
  double s = 0.0;
  arc.node_s[mesh.elements[0][0]] = 0.0;
  for (int e = 0; e < n; ++e) {
    arc.elem_begin[e] = s;
    arc.elem_mid[e] = s + 0.5 * mesh.lengths[e];
    s += mesh.lengths[e];
    arc.elem_end[e] = s;
    arc.node_s[mesh.elements[e][1]] = s;
  }
  arc.total = s;
  return arc;
}

// Arclength of the nearest point of the polyline, with the distance to it.
std::pair<double, double> project_to_polyline(const BoundaryMesh& mesh, const Arclength& arc,
                                              const Vec2& p) {
  double best_d = std::numeric_limits<double>::max();
  double best_s = 0.0;
  for (int e = 0; e < mesh.size(); ++e) {
    const Vec2 a = mesh.nodes[mesh.elements[e][0]];
    const Vec2 b = mesh.nodes[mesh.elements[e][1]];
    const Vec2 ab = b - a;
    const double t = std::clamp(ab.dot(p - a) / ab.squaredNorm(), 0.0, 1.0);
    const double d = (p - (a + t * ab)).norm();
    if (d < best_d) {
      best_d = d;
      best_s = arc.elem_begin[e] + t * mesh.lengths[e];
    }
  }
  return {best_s, best_d};
}

}  // namespace

CouplingMatrices coupling_matrices(const BoundaryMesh& mesh,
                                   const std::vector<Vec2>& fem_surface_nodes) {
  const int n = mesh.size();
  const int m = static_cast<int>(fem_surface_nodes.size());
  if (m == 0) throw MeshError("coupling_matrices: no FEM surface nodes");
  const Arclength arc = polyline_arclength(mesh);

  std::vector<double> s_fem(m);
  for (int j = 0; j < m; ++j) {
    const auto [s, d] = project_to_polyline(mesh, arc, fem_surface_nodes[j]);
    if (d > 1e-9 * arc.total) {
      std::ostringstream msg;
      msg << "coupling_matrices: FEM node " << j << " lies off the polyline (distance " << d
          << ")";
      throw MeshError(msg.str());
    }
    s_fem[j] = s;
  }
  if (!std::is_sorted(s_fem.begin(), s_fem.end()))
    throw MeshError("coupling_matrices: FEM surface nodes are not ordered along the polyline");

  CouplingMatrices c;
  c.r_u.setZero(2 * n, 2 * m);
  c.r_t.setZero(2 * m, 2 * n);

  // r_u: linear interpolation of the nodal field at the element midpoints
  for (int e = 0; e < n; ++e) {
    const double s = arc.elem_mid[e];
    const auto it = std::upper_bound(s_fem.begin(), s_fem.end(), s);
    int j1 = static_cast<int>(it - s_fem.begin());
    int j0 = j1 - 1;
    double w0, w1;
    if (j0 < 0) {
      j0 = j1 = 0;
      w0 = 1.0, w1 = 0.0;
    } else if (j1 >= m) {
      j0 = j1 = m - 1;
      w0 = 1.0, w1 = 0.0;
    } else {
      const double gap = s_fem[j1] - s_fem[j0];
      w1 = gap > 0.0 ? (s - s_fem[j0]) / gap : 0.0;
      w0 = 1.0 - w1;
    }
    for (int d = 0; d < 2; ++d) {
      c.r_u(2 * e + d, 2 * j0 + d) += w0;
      if (w1 != 0.0) c.r_u(2 * e + d, 2 * j1 + d) += w1;
    }
  }

  // r_t: each node owns the tributary span of the polyline between the
  // midpoints to its neighbours; element force splits by span overlap
  std::vector<double> cell(m + 1);
  cell[0] = 0.0;
  cell[m] = arc.total;
  for (int j = 1; j < m; ++j) cell[j] = 0.5 * (s_fem[j - 1] + s_fem[j]);
  for (int e = 0; e < n; ++e) {
    for (int j = 0; j < m; ++j) {
      const double lo = std::max(arc.elem_begin[e], cell[j]);
      const double hi = std::min(arc.elem_end[e], cell[j + 1]);
      const double overlap = hi - lo;
      if (overlap > 1e-14 * arc.total) {
        for (int d = 0; d < 2; ++d) c.r_t(2 * j + d, 2 * e + d) += overlap;
      }
    }
  }
  return c;
}

HsseMatrix assemble_khs(const BemOperators& ops, const CouplingMatrices& coupling) {
  const auto n = ops.g.rows();
  if (ops.h.rows() != n || ops.h.cols() != n || ops.g.cols() != n)
    throw AssemblyError("assemble_khs: operator dimensions disagree");
  if (coupling.r_u.rows() != n || coupling.r_t.cols() != n)
    throw AssemblyError("assemble_khs: coupling dimensions do not conform");

  Eigen::PartialPivLU<MatXc> lu(ops.g);
  const VecX udiag = lu.matrixLU().diagonal().cwiseAbs();
  const double dmin = udiag.minCoeff(), dmax = udiag.maxCoeff();
  if (!(dmin > 0.0) || dmax / dmin > 1e13) {
    std::ostringstream msg;
    msg << "assemble_khs: g is numerically singular (condition estimate "
        << (dmin > 0.0 ? dmax / dmin : std::numeric_limits<double>::infinity()) << ")";
    throw FactorizationError(msg.str());
  }

  HsseMatrix k;
  k.flavor = ops.flavor;
  k.omega = ops.omega;
  const MatXc ru = coupling.r_u.cast<cplx>();
  const MatXc rt = coupling.r_t.cast<cplx>();
  if (ops.flavor == BemFlavor::Direct)
    k.k = rt * (ops.h * lu.solve(ru));
  else
    k.k = rt * lu.solve(ops.h * ru);
  return k;
}

HsseMatrix symmetrize(const HsseMatrix& k) {
  HsseMatrix out = k;
  out.k = 0.5 * (k.k + k.k.transpose());
  return out;
}

namespace {

CompressionReport make_report(const MatXc& k) {
  CompressionReport rep;
  rep.n = static_cast<int>(k.rows());
  int b = 0;
  std::int64_t nnz = 0;
  for (int j = 0; j < k.cols(); ++j)
    for (int i = 0; i < k.rows(); ++i)
      if (k(i, j) != cplx(0.0, 0.0)) {
        ++nnz;
        b = std::max(b, std::abs(i - j));
      }
  rep.nnz = nnz;
  rep.rhbw = rep.n > 1 ? double(b) / double(rep.n - 1) : 0.0;
  rep.rst = double(band_storage_words(rep.n, b)) / (double(rep.n) * double(rep.n));
  return rep;
}

}  // namespace

std::pair<HsseMatrix, CompressionReport> compress_threshold(const HsseMatrix& k, double tau) {
  if (!(tau >= 0.0 && tau <= 1.0))
    throw std::domain_error("compress_threshold: tau must lie in [0, 1]");
  HsseMatrix out = k;
  const double cutoff = tau * k.k.cwiseAbs().maxCoeff();
  for (int j = 0; j < out.k.cols(); ++j)
    for (int i = 0; i < out.k.rows(); ++i)
      if (i != j && std::abs(out.k(i, j)) < cutoff) out.k(i, j) = cplx(0.0, 0.0);
  CompressionReport rep = make_report(out.k);
  return {std::move(out), rep};
}

std::pair<HsseMatrix, CompressionReport> compress_halfband(const HsseMatrix& k, double rhbw) {
  if (!(rhbw >= 0.0 && rhbw <= 1.0))
    throw std::domain_error("compress_halfband: rhbw must lie in [0, 1]");
  HsseMatrix out = k;
  const int n = static_cast<int>(out.k.rows());
  const int b = static_cast<int>(std::lround(rhbw * (n - 1)));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (std::abs(i - j) > b) out.k(i, j) = cplx(0.0, 0.0);
  CompressionReport rep = make_report(out.k);
  return {std::move(out), rep};
}

std::pair<HsseMatrix, CompressionReport> compress(const HsseMatrix& k,
                                                  const CompressionSpec& spec) {
  return spec.method == CompressionMethod::Threshold ? compress_threshold(k, spec.value)
                                                     : compress_halfband(k, spec.value);
}

double relative_storage(double rhbw) {
  if (!(rhbw >= 0.0 && rhbw <= 1.0))
    throw std::domain_error("relative_storage: rhbw must lie in [0, 1]");
  return 2.0 * rhbw - rhbw * rhbw;
}

double measure_rhbw(const MatXc& k) {
  const int n = static_cast<int>(k.rows());
  if (n != k.cols()) throw std::domain_error("measure_rhbw: matrix must be square");
  if (n <= 1) return 0.0;
  int b = 0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (k(i, j) != cplx(0.0, 0.0)) b = std::max(b, std::abs(i - j));
  return double(b) / double(n - 1);
}

std::int64_t band_storage_words(int n, int b) {
  if (b >= n) b = n - 1;
  const std::int64_t nn = n, m = n - b;
  return nn * nn - (m - 1) * m;
}

std::vector<std::tuple<int, int, double>> sparsity_triplets(const MatXc& k) {
  std::vector<std::tuple<int, int, double>> out;
  for (int i = 0; i < k.rows(); ++i)
    for (int j = 0; j < k.cols(); ++j)
      if (k(i, j) != cplx(0.0, 0.0)) out.emplace_back(i, j, std::abs(k(i, j)));
  return out;
}

}  // namespace hsse
