#ifndef MONOPOLE_NONLINEAR_HPP
#define MONOPOLE_NONLINEAR_HPP

#include <utility>
#include <vector>

#include "monopole/clifford.hpp"
#include "monopole/potentials.hpp"
#include "monopole/symmetry.hpp"

// The nonlinear massive monopole: coupled chiral equations with the mass
// functional F(rho) = kappa0 rho, the plane-wave dispersion quartic with
// its bradyon/tachyon branches, the Majorana decoupling, and the
// torsion/curvature identities.
namespace monopole::nonlinear {

using clifford::Spinor4;
using clifford::cplx;
using potentials::AxialPotential;
using potentials::FourPoint;
using potentials::Vec3;
using symmetry::FourierField;

struct NonlinearParams {
  double kappa0 = 0.0;  // linear mass functional F(rho) = kappa0 * rho
  double g = 0.0;

  // kappa(rho) hook; only the homogeneous (constant) case is exercised.
  double kappa(double /*rho*/) const { return kappa0; }
};

// Two Weyl plane waves, xi ~ a exp(i(k.x - omega t)) and
// eta ~ b exp(i(k'.x - omega' t)).
struct PlaneWaveConfig {
  Eigen::Vector2cd a = Eigen::Vector2cd::Zero();
  Eigen::Vector2cd b = Eigen::Vector2cd::Zero();
  double omega = 0.0;
  Vec3 k = Vec3::Zero();
  double omega_prime = 0.0;
  Vec3 k_prime = Vec3::Zero();
};

// rho = 2 |xi^dag eta| evaluated from the amplitudes. (The factor follows
// the quadratic invariant rho^2 = 4 (xi^dag eta)(eta^dag xi); a different
// factor that appears once in prose is not used.)
double rho_density(const Eigen::Vector2cd& xi, const Eigen::Vector2cd& eta);

// Residuals of the two coupled equations
//   d_t xi  - s.grad xi  + i kappa(rho) e^{+iP} eta = 0
//   d_t eta + s.grad eta + i kappa(rho) e^{-iP} xi  = 0
// with P = arg(eta^dag xi), max over the sample points. The phase factor
// is undefined where eta^dag xi = 0; there rho = 0 and the coupling term
// is dropped (the Majorana decoupling).
std::pair<double, double> nonlinear_residual(const PlaneWaveConfig& cfg,
                                             const NonlinearParams& p,
                                             const std::vector<FourPoint>& points);

// Value of the dispersion quartic
// (w^2-k^2)(w'^2-k'^2) - 2 (w w' - k.k') kappa0^2 + kappa0^4.
double dispersion_eval(double omega, const Vec3& k, double omega_prime,
                       const Vec3& k_prime, double kappa0);

enum class DispersionMode { co_phase, anti_phase };
enum class BranchClass { bradyon, tachyon, luminal, evanescent };

struct DispersionBranch {
  DispersionMode mode = DispersionMode::co_phase;
  std::vector<double> roots;  // empty when evanescent
  BranchClass classification = BranchClass::luminal;
};

// co-phase: omega = +-sqrt(k^2 + kappa0^2) (bradyon); anti-phase:
// omega = +-sqrt(k^2 - kappa0^2), tachyon for k > kappa0, evanescent
// (imaginary omega, no real roots) for k < kappa0.
DispersionBranch dispersion_solve(const Vec3& k, DispersionMode mode,
                                  double kappa0);

// |d omega / d k| = k / |omega| on a real root. Throws on omega = 0.
double group_velocity(const DispersionBranch& branch, const Vec3& k,
                      double kappa0);

struct MajoranaCheck {
  double rho = 0.0;
  double coupling_norm = 0.0;  // |kappa0 e^{iP} eta| + |kappa0 e^{-iP} xi|
};

// Evaluates rho and the norm of the coupling terms; the coupling is zero
// whenever rho is (in particular for the Majorana form xi = s2 eta*).
MajoranaCheck majorana_decoupling_check(const PlaneWaveConfig& cfg,
                                        const NonlinearParams& p);

// Majorana partner xi = s2 eta^*; rho_density of the pair is exactly 0.
Eigen::Vector2cd majorana_partner(const Eigen::Vector2cd& eta);

struct RodichevCurvature {
  double R_bilinear = 0.0;  // (3/32 b^2) axial-current square, gamma route
  double R_omega = 0.0;     // (3/32 b^2)(Omega1^2 + Omega2^2)
};

// Curvature of the twisted space by both routes; they agree identically.
RodichevCurvature rodichev_curvature(const Spinor4& psi, double b);

struct TorsionVector {
  double phi_t = 0.0;
  Vec3 phi = Vec3::Zero();
};

// Phi_mu = 2 g B_mu at a point (hbar = c = 1). Throws on singular points.
TorsionVector torsion_from_potential(const AxialPotential& pot, const Vec3& p,
                                     double t, double g);

// Residual of the torsion-coupled equation, i.e. the gamma-matrix operator
// with coupling Phi_mu/2 in place of g B_mu; numerically identical to
// symmetry::dirac_monopole_residual.
double torsion_residual(const FourierField& field, const AxialPotential& pot,
                        double g, const std::vector<FourPoint>& points);

// Exact plane-wave solution of the coupled system with helicity h = +-1.
// co-phase: omega = +sqrt(k^2+kappa0^2), either helicity; anti-phase:
// omega = sign * sqrt(k^2-kappa0^2), helicity +1 only (the phase-factor
// consistency condition omega + h|k| > 0 selects these branches).
PlaneWaveConfig make_nonlinear_plane_wave(const Vec3& k, double kappa0,
                                          DispersionMode mode, int helicity,
                                          int sign = +1);

}  // namespace monopole::nonlinear

#endif
