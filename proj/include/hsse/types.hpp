#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace hsse {

using cplx = std::complex<double>;
using Vec2 = Eigen::Vector2d;
using Vec2c = Eigen::Vector2cd;
using Mat2 = Eigen::Matrix2d;
using Mat2c = Eigen::Matrix2cd;
using MatX = Eigen::MatrixXd;
using MatXc = Eigen::MatrixXcd;
using VecX = Eigen::VectorXd;
using VecXc = Eigen::VectorXcd;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MeshError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AssemblyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FactorizationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SynthesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Homogeneous elastic half-space constants (SI units).
struct Material {
  double rho;    ///< mass density [kg/m^3]
  double alpha;  ///< P-wave speed [m/s]
  double beta;   ///< S-wave speed [m/s]

  Material(double rho_, double alpha_, double beta_) : rho(rho_), alpha(alpha_), beta(beta_) {
    if (!(rho > 0.0)) throw std::domain_error("Material: rho must be > 0");
    if (!(beta > 0.0)) throw std::domain_error("Material: beta must be > 0");
    // alpha > beta*sqrt(2) keeps lambda > 0 in plane strain
    if (!(alpha > beta * std::sqrt(2.0)))
      throw std::domain_error("Material: alpha must exceed beta*sqrt(2)");
  }

  double mu() const { return rho * beta * beta; }
  double lambda() const { return rho * (alpha * alpha - 2.0 * beta * beta); }
};

enum class WaveKind { P, SV };

/// Incident plane wave, angle measured from the vertical in degrees.
struct PlaneWave {
  WaveKind kind;
  double angle_deg;
  double amplitude;

  PlaneWave(WaveKind kind_, double angle_deg_, double amplitude_)
      : kind(kind_), angle_deg(angle_deg_), amplitude(amplitude_) {
    if (!(angle_deg >= 0.0 && angle_deg < 90.0))
      throw std::domain_error("PlaneWave: angle must lie in [0, 90)");
    if (!(amplitude > 0.0)) throw std::domain_error("PlaneWave: amplitude must be > 0");
  }
};

}  // namespace hsse
