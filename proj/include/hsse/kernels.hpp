#pragma once

#include "hsse/types.hpp"

namespace hsse {

/// Displacement/traction Green tensors at one receiver for a unit point load.
struct KernelTensor {
  Mat2c g;       ///< G_ij: displacement i at x per unit load j at xi
  Mat2c h;       ///< H_ij: traction i at x (normal n) per unit load j at xi
  double omega;  ///< circular frequency [rad/s]
};

/// Displacement and traction of a wavefield at one point.
struct FieldVector {
  Vec2c u;  ///< displacement [m]
  Vec2c t;  ///< traction on the supplied normal [Pa]
};

/// Scalar radial factors of the 2D time-harmonic kernels and their r-derivatives.
/// Convention: e^{+i omega t}, outgoing Hankel functions of the second kind.
struct KernelParts {
  cplx psi, chi, dpsi, dchi;
};
KernelParts kernel_parts(double r, double omega, const Material& mat);

/// Full-space displacement Green's function G_ij(x, xi, omega).
Mat2c greens_u(const Vec2& x, const Vec2& xi, double omega, const Material& mat);

/// Traction counterpart H_ij(x, xi, n, omega); normal taken at the field point x.
Mat2c greens_t(const Vec2& x, const Vec2& xi, const Vec2& normal, double omega,
               const Material& mat);

/// Both kernels in one evaluation.
KernelTensor greens(const Vec2& x, const Vec2& xi, const Vec2& normal, double omega,
                    const Material& mat);

/// One plane-wave constituent of the free field: horizontal slowness p,
/// vertical slowness q (complex past critical), polarization d, amplitude a.
struct PlaneWaveComponent {
  double p;
  cplx q;
  Vec2c d;
  cplx a;
};

/// Incident + reflected constituents of the flat half-space free field,
/// with reflection amplitudes solved from the traction-free surface at y = 0.
std::array<PlaneWaveComponent, 3> free_field_components(const PlaneWave& wave,
                                                        const Material& mat);

/// Total free field (incident plus reflected) of the flat half-space at a point
/// x with y <= 0; traction evaluated on the supplied unit normal. At omega = 0
/// the static limit is returned (uniform translation, zero traction).
FieldVector free_field(const Vec2& x, const Vec2& normal, double omega, const PlaneWave& wave,
                       const Material& mat);

}  // namespace hsse
