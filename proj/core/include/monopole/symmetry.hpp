#ifndef MONOPOLE_SYMMETRY_HPP
#define MONOPOLE_SYMMETRY_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "monopole/clifford.hpp"
#include "monopole/potentials.hpp"

// Gauge transformations, P/T/C maps and a numerical invariance certifier
// for the chiral-gauge massless monopole equation.
//
// Test fields are finite Fourier sums so all derivatives are exact; an
// accumulated chiral phase exp(i g gamma5 phi(x,t)) is carried separately
// so local gauge transformations stay exactly representable.
namespace monopole::symmetry {

using clifford::Mat4;
using clifford::Spinor4;
using clifford::WeylPair;
using potentials::AxialPotential;
using potentials::FourPoint;
using potentials::ScalarGauge;
using potentials::Vec3;
using nlohmann::json;

struct FourierField {
  struct Mode {
    double omega = 0.0;
    Vec3 k = Vec3::Zero();
    Spinor4 amp = Spinor4::Zero();  // de Broglie representation amplitude
  };
  std::vector<Mode> modes;
  // Accumulated chiral gauge phase: psi(x,t) = exp(i g gamma5 chi(x,t)) *
  // sum of modes. xi picks up e^{+i g chi}, eta e^{-i g chi}.
  ScalarGauge chi;
  double g = 0.0;  // magnetic charge carried by the chiral phase

  struct Value {
    Spinor4 psi;
    Spinor4 dt;
    std::array<Spinor4, 3> dx;
  };
  Value eval(const Vec3& p, double t) const;

  struct WeylValue {
    Eigen::Vector2cd xi, eta;
    Eigen::Vector2cd xi_dt, eta_dt;
    std::array<Eigen::Vector2cd, 3> xi_dx, eta_dx;
  };
  WeylValue eval_weyl(const Vec3& p, double t) const;

  // Adds one mode given Weyl-representation amplitudes.
  void add_weyl_mode(double omega, const Vec3& k, const Eigen::Vector2cd& xi,
                     const Eigen::Vector2cd& eta);
};

// Helicity eigenvector of s.nhat with eigenvalue +1 or -1 (unit norm).
Eigen::Vector2cd helicity_eigenvector(const Vec3& dir, int sign);

// Exact plane-wave solution of the xi (charge +g) or eta (charge -g)
// equation in a constant potential (W0, B0); the 2x2 kernel condition is
// solved in closed form. `helicity` = +-1 picks the branch.
enum class WeylComponent { xi, eta };
FourierField make_plane_wave_solution(WeylComponent which, const Vec3& k,
                                      double g, double W0, const Vec3& B0,
                                      int helicity);

// Max over points of |gamma_mu (d_mu - g gamma5 B_mu) psi| (gamma-matrix
// route, hbar = c = 1). Throws on singular points.
double dirac_monopole_residual(const FourierField& field,
                               const AxialPotential& pot, double g,
                               const std::vector<FourPoint>& points);

// Residuals of the xi- and eta-equations separately (two-component route).
std::pair<double, double> weyl_residuals(const FourierField& field,
                                         const AxialPotential& pot, double g,
                                         const std::vector<FourPoint>& points);

struct TransformSpec {
  enum class Kind { phase, chiral, P, T, C };
  Kind kind = Kind::P;
  double theta = 0.0;  // phase gauge (constant)
  ScalarGauge phi;     // chiral gauge function

  std::string name() const;
};

// Applies a phase or chiral gauge transformation to field and potential.
std::pair<FourierField, AxialPotential> apply_gauge(const FourierField& field,
                                                    const AxialPotential& pot,
                                                    const TransformSpec& spec);

// Applies P, T or C exactly; g is unchanged in all three.
std::pair<FourierField, AxialPotential> apply_ptc(const FourierField& field,
                                                  const AxialPotential& pot,
                                                  const TransformSpec& spec);

// Time reversal with the B_k -> -B_k flip deliberately omitted; negative
// control for the certifier.
std::pair<FourierField, AxialPotential> corrupted_time_reversal(
    const FourierField& field, const AxialPotential& pot);

struct Certificate {
  std::string transform;
  double residual_before = 0.0;
  double residual_after = 0.0;
  bool pass = false;
  json to_json() const;
};

// Verdict PASS iff residual_after <= max(10 * residual_before, 1e-10).
// Throws std::invalid_argument if the input is not an approximate solution
// (residual_before > solution_threshold).
Certificate invariance_certificate(const FourierField& field,
                                   const AxialPotential& pot, double g,
                                   const TransformSpec& spec,
                                   const std::vector<FourPoint>& points,
                                   double solution_threshold = 1e-8);

// Pointwise divergence of the axial current K_mu = g Sigma_mu, from exact
// field derivatives. Returns max |d_t Kt + div Kvec| over points.
double axial_current_divergence(const FourierField& field, double g,
                                const std::vector<FourPoint>& points);

// Divergences of the two chiral currents (xi and eta), max over points.
std::pair<double, double> chiral_current_divergence(
    const FourierField& field, const std::vector<FourPoint>& points);

// Minimum over points of the sine of the Euclidean 4-angle between J_mu and
// K_mu; certifies the currents are nowhere collinear on the sample.
double min_current_angle_sine(const FourierField& field, double g,
                              const std::vector<FourPoint>& points);

}  // namespace monopole::symmetry

#endif
