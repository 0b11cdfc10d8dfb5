#include "hsse/bem.hpp"

#include <cmath>
#include <sstream>

namespace hsse {

namespace {

struct GaussPoint {
  double x, w;
};

// symmetric halves of the Gauss-Legendre rules on [-1, 1]
constexpr GaussPoint kGauss8Half[] = {
    {1.83434642495649780e-01, 3.62683783378361768e-01},
    {5.25532409916328991e-01, 3.13706645877887047e-01},
    {7.96666477413626728e-01, 2.22381034453374343e-01},
    {9.60289856497536176e-01, 1.01228536290376689e-01},
};
constexpr GaussPoint kGauss16Half[] = {
    {9.50125098376374544e-02, 1.89450610455068585e-01},
    {2.81603550779258915e-01, 1.82603415044923612e-01},
    {4.58016777657227370e-01, 1.69156519395002619e-01},
    {6.17876244402643771e-01, 1.49595988816576764e-01},
    {7.55404408355002999e-01, 1.24628971255534030e-01},
    {8.65631202387831755e-01, 9.51585116824925914e-02},
    {9.44575023073232600e-01, 6.22535239386477063e-02},
    {9.89400934991649939e-01, 2.71524594117540374e-02},
};

template <typename F>
Mat2c gauss_on_element(const BoundaryMesh& mesh, int elem, bool fine, F&& kernel) {
  const Vec2 mid = mesh.midpoints[elem];
  const Vec2 tan = mesh.tangents[elem];
  const double h = 0.5 * mesh.lengths[elem];
  Mat2c acc = Mat2c::Zero();
  auto add = [&](const GaussPoint& gp) {
    acc += (gp.w * h) * kernel(Vec2(mid + (gp.x * h) * tan));
    acc += (gp.w * h) * kernel(Vec2(mid - (gp.x * h) * tan));
  };
  if (fine)
    for (const auto& gp : kGauss16Half) add(gp);
  else
    for (const auto& gp : kGauss8Half) add(gp);
  return acc;
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double t = std::clamp(ab.dot(p - a) / ab.squaredNorm(), 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

// Self-element integral of G: the log-singular part of psi integrated in
// closed form, the regular remainder (and all of chi) by Gauss quadrature.
Mat2c integrate_greens_u_singular(const BoundaryMesh& mesh, int elem, double omega,
                                  const Material& mat) {
  const double h = 0.5 * mesh.lengths[elem];
  const double kap = mat.beta / mat.alpha;
  const double c_log = 0.5 * (1.0 + kap * kap);

  cplx psi_int = -c_log * 2.0 * h * (std::log(h) - 1.0);
  cplx chi_int = 0.0;
  for (const auto& gp : kGauss16Half) {
    const double s = gp.x * h;
    const KernelParts kp = kernel_parts(s, omega, mat);
    psi_int += 2.0 * gp.w * h * (kp.psi + c_log * std::log(s));
    chi_int += 2.0 * gp.w * h * kp.chi;
  }

  const Vec2 t = mesh.tangents[elem];
  const double c = 1.0 / (2.0 * M_PI * mat.mu());
  Mat2c g;
  for (int l = 0; l < 2; ++l)
    for (int k = 0; k < 2; ++k) g(l, k) = c * (psi_int * (l == k ? 1.0 : 0.0) - chi_int * t(l) * t(k));
  return g;
}

}  // namespace

void BoundaryMesh::finalize() {
  const int n = size();
  midpoints.resize(n);
  normals.resize(n);
  tangents.resize(n);
  lengths.resize(n);
  for (int e = 0; e < n; ++e) {
    const Vec2 a = nodes[elements[e][0]];
    const Vec2 b = nodes[elements[e][1]];
    const double len = (b - a).norm();
    if (!(len > 0.0)) throw MeshError("BoundaryMesh: zero-length element " + std::to_string(e));
    midpoints[e] = 0.5 * (a + b);
    tangents[e] = (b - a) / len;
    normals[e] = Vec2(-tangents[e](1), tangents[e](0));
    lengths[e] = len;
  }
}

namespace {

// append a straight segment subdivided into n elements, reusing the last node
void append_segment(BoundaryMesh& mesh, const Vec2& a, const Vec2& b, int n) {
  int start = static_cast<int>(mesh.nodes.size()) - 1;
  if (start < 0 || (mesh.nodes.back() - a).norm() > 1e-14) {
    mesh.nodes.push_back(a);
    start = static_cast<int>(mesh.nodes.size()) - 1;
  }
  for (int i = 1; i <= n; ++i) {
    mesh.nodes.push_back(a + (b - a) * (double(i) / n));
    const int j = static_cast<int>(mesh.nodes.size()) - 1;
    mesh.elements.push_back({j - 1, j});
  }
}

int segment_count(double length, double elem_size) {
  return std::max(1, static_cast<int>(std::ceil(length / elem_size - 1e-12)));
}

}  // namespace

BoundaryMesh build_surface_mesh(const CanyonGeometry& geometry, double truncation,
                                double elem_size) {
  const double L = geometry.L;
  if (!(elem_size > 0.0)) throw MeshError("build_surface_mesh: elem_size must be > 0");
  if (!(truncation >= 4.0)) throw MeshError("build_surface_mesh: truncation must be >= 4");
  if (geometry.kind != CanyonKind::Flat && elem_size > L / 4.0 + 1e-12)
    throw MeshError("build_surface_mesh: elem_size > L/4 under-resolves the canyon");

  BoundaryMesh mesh;
  const double T = truncation * L;
  switch (geometry.kind) {
    case CanyonKind::Flat:
      append_segment(mesh, Vec2(-T, 0.0), Vec2(T, 0.0), segment_count(2.0 * T, elem_size));
      break;
    case CanyonKind::Semicircular: {
      append_segment(mesh, Vec2(-T, 0.0), Vec2(-L, 0.0), segment_count(T - L, elem_size));
      const int narc = segment_count(M_PI * L, elem_size);
      for (int i = 1; i <= narc; ++i) {
        const double th = M_PI + M_PI * double(i) / narc;  // (-L,0) -> (0,-L) -> (L,0)
        mesh.nodes.push_back(Vec2(L * std::cos(th), L * std::sin(th)));
        const int j = static_cast<int>(mesh.nodes.size()) - 1;
        mesh.elements.push_back({j - 1, j});
      }
      mesh.nodes.back() = Vec2(L, 0.0);  // exact rim
      append_segment(mesh, Vec2(L, 0.0), Vec2(T, 0.0), segment_count(T - L, elem_size));
      break;
    }
    case CanyonKind::Rectangular:
      append_segment(mesh, Vec2(-T, 0.0), Vec2(-L, 0.0), segment_count(T - L, elem_size));
      append_segment(mesh, Vec2(-L, 0.0), Vec2(-L, -L), segment_count(L, elem_size));
      append_segment(mesh, Vec2(-L, -L), Vec2(L, -L), segment_count(2.0 * L, elem_size));
      append_segment(mesh, Vec2(L, -L), Vec2(L, 0.0), segment_count(L, elem_size));
      append_segment(mesh, Vec2(L, 0.0), Vec2(T, 0.0), segment_count(T - L, elem_size));
      break;
  }
  mesh.finalize();
  return mesh;
}

ExteriorMesh build_exterior_mesh(double L, double truncation, double elem_size,
                                 double box_half_width, double box_depth, int nx_contact,
                                 int ny_contact) {
  if (!(truncation * L > box_half_width))
    throw MeshError("build_exterior_mesh: truncation must clear the box");
  ExteriorMesh ext;
  BoundaryMesh& mesh = ext.mesh;
  const double T = truncation * L, W = box_half_width, D = box_depth;

  append_segment(mesh, Vec2(-T, 0.0), Vec2(-W, 0.0), segment_count(T - W, elem_size));
  ext.contact_node_begin = static_cast<int>(mesh.nodes.size()) - 1;
  append_segment(mesh, Vec2(-W, 0.0), Vec2(-W, -D), ny_contact);
  append_segment(mesh, Vec2(-W, -D), Vec2(W, -D), nx_contact);
  append_segment(mesh, Vec2(W, -D), Vec2(W, 0.0), ny_contact);
  ext.contact_node_end = static_cast<int>(mesh.nodes.size());
  append_segment(mesh, Vec2(W, 0.0), Vec2(T, 0.0), segment_count(T - W, elem_size));

  mesh.finalize();
  return ext;
}

BemOperators assemble_operators(const BoundaryMesh& mesh, double omega, const Material& mat,
                                BemFlavor flavor) {
  if (!(omega > 0.0)) throw AssemblyError("assemble_operators: omega must be > 0");
  const int n = mesh.size();
  BemOperators ops;
  ops.flavor = flavor;
  ops.omega = omega;
  ops.g.setZero(2 * n, 2 * n);
  ops.h.setZero(2 * n, 2 * n);
  ops.free_term.assign(n, 0.5 * Mat2::Identity());

  for (int l = 0; l < n; ++l) {
    const Vec2 obs = mesh.midpoints[l];
    const Vec2 n_obs = mesh.normals[l];
    for (int k = 0; k < n; ++k) {
      Mat2c gblk, hblk;
      if (k == l) {
        gblk = integrate_greens_u_singular(mesh, k, omega, mat);
        // strongly singular part vanishes by midpoint symmetry on straight
        // elements; the symmetric rule evaluates the regular remainder
        const Vec2 n_k = mesh.normals[k];
        if (flavor == BemFlavor::Direct) {
          hblk = gauss_on_element(mesh, k, true, [&](const Vec2& x) {
            return greens_t(x, obs, n_k, omega, mat);
          });
        } else {
          hblk = gauss_on_element(mesh, k, true, [&](const Vec2& xi) {
            return greens_t(obs, xi, n_obs, omega, mat);
          });
        }
        hblk += ops.free_term[l].cast<cplx>();
      } else {
        const bool fine = point_segment_distance(obs, mesh.nodes[mesh.elements[k][0]],
                                                 mesh.nodes[mesh.elements[k][1]]) <
                          2.0 * mesh.lengths[k];
        if (flavor == BemFlavor::Direct) {
          const Vec2 n_k = mesh.normals[k];
          gblk = gauss_on_element(mesh, k, fine,
                                  [&](const Vec2& x) { return greens_u(x, obs, omega, mat); });
          hblk = gauss_on_element(mesh, k, fine, [&](const Vec2& x) {
            return greens_t(x, obs, n_k, omega, mat);
          });
        } else {
          gblk = gauss_on_element(mesh, k, fine,
                                  [&](const Vec2& xi) { return greens_u(obs, xi, omega, mat); });
          hblk = gauss_on_element(mesh, k, fine, [&](const Vec2& xi) {
            return greens_t(obs, xi, n_obs, omega, mat);
          });
        }
      }
      if (!gblk.allFinite() || !hblk.allFinite()) {
        std::ostringstream msg;
        msg << "assemble_operators: singular quadrature for element pair (" << k << ", " << l
            << ")";
        throw AssemblyError(msg.str());
      }
      if (flavor == BemFlavor::Direct) {
        // Somigliana contracts over the field index: blocks enter transposed
        ops.g.block<2, 2>(2 * l, 2 * k) = gblk.transpose();
        ops.h.block<2, 2>(2 * l, 2 * k) = hblk.transpose();
      } else {
        ops.g.block<2, 2>(2 * l, 2 * k) = gblk;
        ops.h.block<2, 2>(2 * l, 2 * k) = hblk;
      }
    }
  }
  return ops;
}

Mat2c integrate_greens_u(const BoundaryMesh& mesh, int elem, const Vec2& obs, double omega,
                         const Material& mat) {
  const bool fine = point_segment_distance(obs, mesh.nodes[mesh.elements[elem][0]],
                                           mesh.nodes[mesh.elements[elem][1]]) <
                    2.0 * mesh.lengths[elem];
  return gauss_on_element(mesh, elem, fine,
                          [&](const Vec2& x) { return greens_u(x, obs, omega, mat); });
}

}  // namespace hsse
