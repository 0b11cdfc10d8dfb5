#include "hsse/kernels.hpp"

#include <cmath>

namespace hsse {

namespace {

constexpr cplx kI{0.0, 1.0};

// Hankel function of the second kind, H_n^(2)(x) = J_n(x) - i Y_n(x), x > 0.
cplx hankel2(int n, double x) {
  return cplx(std::cyl_bessel_j(double(n), x), -std::cyl_neumann(double(n), x));
}

void require_separated(const Vec2& x, const Vec2& xi) {
  if ((x - xi).norm() <= 0.0)
    throw std::domain_error("greens kernel: coincident source and receiver");
}

void require_omega(double omega) {
  if (!(omega > 0.0)) throw std::domain_error("greens kernel: omega must be > 0");
}

void require_unit(const Vec2& n) {
  if (std::abs(n.norm() - 1.0) > 1e-9)
    throw std::domain_error("greens kernel: normal must be a unit vector");
}

}  // namespace

KernelParts kernel_parts(double r, double omega, const Material& mat) {
  const double kb = omega / mat.beta;
  const double xb = kb * r;
  const double xa = omega / mat.alpha * r;
  const double kap = mat.beta / mat.alpha;

  const cplx H0b = hankel2(0, xb), H1b = hankel2(1, xb), H2b = hankel2(2, xb);
  const cplx H0a = hankel2(0, xa), H1a = hankel2(1, xa), H2a = hankel2(2, xa);

  const cplx s = -kI * M_PI / 2.0;
  KernelParts kp;
  kp.psi = s * (H0b - (H1b - kap * H1a) / xb);
  kp.chi = -s * (H2b - kap * kap * H2a);
  kp.dpsi = s * (-kb * H1b - kb * (H0b / xb - 2.0 * H1b / (xb * xb)) + kap * kap * H0a / r -
                 2.0 * kap * H1a / (xb * r));
  kp.dchi = -s * (kb * H1b - 2.0 * H2b / r - kap * kap * kap * kb * H1a + 2.0 * kap * kap * H2a / r);
  return kp;
}

Mat2c greens_u(const Vec2& x, const Vec2& xi, double omega, const Material& mat) {
  require_separated(x, xi);
  require_omega(omega);
  const Vec2 d = x - xi;
  const double r = d.norm();
  const Vec2 rd = d / r;
  const KernelParts kp = kernel_parts(r, omega, mat);
  const double c = 1.0 / (2.0 * M_PI * mat.mu());
  Mat2c g;
  for (int l = 0; l < 2; ++l)
    for (int k = 0; k < 2; ++k)
      g(l, k) = c * (kp.psi * (l == k ? 1.0 : 0.0) - kp.chi * rd(l) * rd(k));
  return g;
}

Mat2c greens_t(const Vec2& x, const Vec2& xi, const Vec2& normal, double omega,
               const Material& mat) {
  require_separated(x, xi);
  require_omega(omega);
  require_unit(normal);
  const Vec2 d = x - xi;
  const double r = d.norm();
  const Vec2 rd = d / r;
  const KernelParts kp = kernel_parts(r, omega, mat);
  const double drdn = rd.dot(normal);
  const double lam_over_mu = mat.lambda() / mat.mu();
  const cplx div_part = lam_over_mu * (kp.dpsi - kp.dchi - kp.chi / r);
  Mat2c t;
  for (int l = 0; l < 2; ++l) {
    for (int k = 0; k < 2; ++k) {
      const double dlk = (l == k) ? 1.0 : 0.0;
      t(l, k) = kp.dpsi * (drdn * dlk + rd(l) * normal(k)) - 2.0 * kp.dchi * rd(l) * rd(k) * drdn -
                (kp.chi / r) * (2.0 * normal(l) * rd(k) + normal(k) * rd(l) + dlk * drdn -
                                4.0 * rd(l) * rd(k) * drdn) +
                div_part * rd(k) * normal(l);
      t(l, k) /= 2.0 * M_PI;
    }
  }
  return t;
}

KernelTensor greens(const Vec2& x, const Vec2& xi, const Vec2& normal, double omega,
                    const Material& mat) {
  return {greens_u(x, xi, omega, mat), greens_t(x, xi, normal, omega, mat), omega};
}

namespace {

// Vertical slowness with the decaying analytic continuation past critical
// incidence (reflected components carry -q, so Im < 0 here decays with depth).
cplx vertical_slowness(double c, double p) {
  const double v = 1.0 / (c * c) - p * p;
  if (v >= 0.0) return std::sqrt(v);
  return -kI * std::sqrt(-v);
}

// Surface-traction rows [sigma_xy; sigma_yy] / (-i omega A) for a component.
Vec2c traction_rows(double p, cplx q, const Vec2c& d, const Material& mat) {
  const double mu = mat.mu(), lam = mat.lambda();
  Vec2c t;
  t(0) = mu * (q * d(0) + p * d(1));
  t(1) = lam * p * d(0) + (lam + 2.0 * mu) * q * d(1);
  return t;
}

}  // namespace

std::array<PlaneWaveComponent, 3> free_field_components(const PlaneWave& wave,
                                                        const Material& mat) {
  const double g = wave.angle_deg * M_PI / 180.0;
  const double c0 = (wave.kind == WaveKind::P) ? mat.alpha : mat.beta;
  const double p = std::sin(g) / c0;
  const double qi = std::cos(g) / c0;
  const cplx qP = vertical_slowness(mat.alpha, p);
  const cplx qS = vertical_slowness(mat.beta, p);

  // polarizations: P along the slowness vector, SV perpendicular to it
  Vec2c d_in;
  if (wave.kind == WaveKind::P)
    d_in = Vec2c(p * mat.alpha, qi * mat.alpha);
  else
    d_in = Vec2c(qi * mat.beta, -p * mat.beta);
  const Vec2c dP(cplx(p) * mat.alpha, -qP * mat.alpha);
  const Vec2c dS(qS * mat.beta, cplx(p) * mat.beta);

  // traction-free surface at y = 0 fixes the two reflection amplitudes
  Mat2c bc;
  bc.col(0) = traction_rows(p, -qP, dP, mat);
  bc.col(1) = traction_rows(p, -qS, dS, mat);
  const Vec2c rhs = -traction_rows(p, qi, d_in, mat);
  const Vec2c refl = bc.lu().solve(rhs);

  return {PlaneWaveComponent{p, cplx(qi), d_in, 1.0},
          PlaneWaveComponent{p, -qP, dP, refl(0)},
          PlaneWaveComponent{p, -qS, dS, refl(1)}};
}

FieldVector free_field(const Vec2& x, const Vec2& normal, double omega, const PlaneWave& wave,
                       const Material& mat) {
  if (x(1) > 1e-12) throw std::domain_error("free_field: point above the free surface");
  if (omega < 0.0) throw std::domain_error("free_field: omega must be >= 0");
  require_unit(normal);

  const auto comps = free_field_components(wave, mat);
  const double A = wave.amplitude;
  FieldVector f;
  f.u.setZero();
  f.t.setZero();

  if (omega == 0.0) {
    // static limit: every phase factor -> 1, strains -> 0
    for (const auto& c : comps) f.u += A * c.a * c.d;
    return f;
  }

  const double mu = mat.mu(), lam = mat.lambda();
  Mat2c sigma = Mat2c::Zero();
  for (const auto& c : comps) {
    const cplx phase = std::exp(-kI * omega * (c.p * x(0) + c.q * x(1)));
    const cplx amp = A * c.a * phase;
    f.u += amp * c.d;
    const cplx fac = -kI * omega * amp;
    const cplx exx = fac * c.p * c.d(0);
    const cplx eyy = fac * c.q * c.d(1);
    const cplx exy = fac * 0.5 * (c.q * c.d(0) + c.p * c.d(1));
    const cplx tr = exx + eyy;
    sigma(0, 0) += lam * tr + 2.0 * mu * exx;
    sigma(1, 1) += lam * tr + 2.0 * mu * eyy;
    sigma(0, 1) += 2.0 * mu * exy;
    sigma(1, 0) += 2.0 * mu * exy;
  }
  f.t = sigma * normal.cast<cplx>();
  return f;
}

}  // namespace hsse
