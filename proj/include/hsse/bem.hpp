#pragma once

#include <array>
#include <vector>

#include "hsse/kernels.hpp"
#include "hsse/types.hpp"

namespace hsse {

enum class CanyonKind { Flat, Semicircular, Rectangular };

/// Surface geometry descriptor: canyon of characteristic size L carved into the
/// flat free surface, meshed out to +-truncation*L.
struct CanyonGeometry {
  CanyonKind kind = CanyonKind::Flat;
  double L = 1.0;
};

/// Constant-element polyline discretization of a boundary. Normals point out
/// of the BEM (half-space) domain.
struct BoundaryMesh {
  std::vector<Vec2> nodes;
  std::vector<std::array<int, 2>> elements;  // (start node, end node)

  // per-element data, filled by finalize()
  std::vector<Vec2> midpoints;
  std::vector<Vec2> normals;
  std::vector<Vec2> tangents;
  std::vector<double> lengths;

  int size() const { return static_cast<int>(elements.size()); }
  void finalize();  // derives midpoints/normals/tangents/lengths, validates
};

/// Free surface from -truncation*L to +truncation*L with the canyon notch
/// carved at the origin; canyon nodes lie exactly on the analytic curve.
BoundaryMesh build_surface_mesh(const CanyonGeometry& geometry, double truncation,
                                double elem_size);

/// Boundary of the exterior domain for the coupled solve: flat free-surface
/// strips from +-truncation*L to the box walls, then down/across/up the box
/// contact boundary. Contact node spacing equals the FEM grid spacing so the
/// polyline nodes coincide bit-exactly with the FEM S nodes.
struct ExteriorMesh {
  BoundaryMesh mesh;
  int contact_node_begin = 0;  // polyline node range of the contact section
  int contact_node_end = 0;    // (half-open)
};
ExteriorMesh build_exterior_mesh(double L, double truncation, double elem_size,
                                 double box_half_width, double box_depth, int nx_contact,
                                 int ny_contact);

enum class BemFlavor { Direct, Indirect };

/// Discrete boundary operators; 2N x 2N with two dofs per constant element.
/// Direct: rows collocate the Somigliana identity (free term on the diagonal).
/// Indirect: rows evaluate the source-density representation (+1/2 jump).
struct BemOperators {
  MatXc g;
  MatXc h;
  std::vector<Mat2> free_term;
  BemFlavor flavor = BemFlavor::Direct;
  double omega = 0.0;
};

BemOperators assemble_operators(const BoundaryMesh& mesh, double omega, const Material& mat,
                                BemFlavor flavor);

/// Element integral of a kernel over element `elem` observed from `obs`
/// (regular case; quadrature order switches at close range).
Mat2c integrate_greens_u(const BoundaryMesh& mesh, int elem, const Vec2& obs, double omega,
                         const Material& mat);

}  // namespace hsse
