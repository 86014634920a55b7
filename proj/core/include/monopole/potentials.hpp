#ifndef MONOPOLE_POTENTIALS_HPP
#define MONOPOLE_POTENTIALS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

// Electromagnetic sector: Maxwell equations with magnetic currents, the
// duality rotation, the axial pseudo-potential (B, W) and the two monopole
// gauges (Dirac string vs. axially symmetric).
//
// Units are Gaussian-like with c = 1 unless stated; 4*pi factors are kept
// explicit. Evaluation inside a declared singular set throws SingularPoint.
namespace monopole::potentials {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using nlohmann::json;

struct SingularPoint : std::runtime_error {
  explicit SingularPoint(const std::string& what) : std::runtime_error(what) {}
};

// Exclusion tube radius around singular lines/points.
inline constexpr double kSingularTube = 1e-6;

// ---------------------------------------------------------------------------
// Monopole gauge potentials (unit source strength e at the origin).

// Dirac string gauge: B = (e/r) * (-y, x, 0) / (r + z).
// Singular on the negative z-axis including the origin.
Vec3 dirac_string_potential(const Vec3& p, double e);

// Axially symmetric gauge: B = (e/r) * (yz, -xz, 0) / (x^2 + y^2).
// Singular on the whole z-axis.
Vec3 axial_gauge_potential(const Vec3& p, double e);

// ---------------------------------------------------------------------------
// Axial pseudo-potential (B, W) as a sum of closed-form terms.

// Scalar gauge function phi(x, t) = c0 + at*t + a.x + sum of cosine modes.
// All derivatives are closed-form.
struct ScalarGauge {
  double c0 = 0.0;
  double at = 0.0;
  Vec3 a = Vec3::Zero();
  struct Mode {
    double amp = 0.0;
    double omega = 0.0;
    Vec3 k = Vec3::Zero();
    double phase = 0.0;  // amp * cos(omega*t - k.x + phase)
  };
  std::vector<Mode> modes;

  double value(const Vec3& p, double t) const;
  double dt(const Vec3& p, double t) const;
  Vec3 grad(const Vec3& p, double t) const;
  Vec3 grad_dt(const Vec3& p, double t) const;  // d/dt of grad
};

struct AxialPotential {
  struct Term {
    enum class Kind {
      dirac_string,    // param e
      axial_coulomb,   // param e, gauge (5.4)
      constant,        // W0, B0
      linear_w,        // W = wg . x
      oscillating_b,   // B = B0 * sin(omega t), uniform in space
      gauge            // W += dphi/dt, B -= grad phi
    };
    Kind kind;
    double e = 0.0;
    double w0 = 0.0;
    Vec3 b0 = Vec3::Zero();
    Vec3 wg = Vec3::Zero();
    double omega = 0.0;
    ScalarGauge phi;
  };
  std::vector<Term> terms;

  struct Eval {
    double W = 0.0;
    Vec3 B = Vec3::Zero();
    Vec3 curlB = Vec3::Zero();
    Vec3 gradW = Vec3::Zero();
    Vec3 dBdt = Vec3::Zero();
  };
  Eval eval(const Vec3& p, double t) const;

  // True if p lies inside the exclusion tube of any term's singular set.
  bool singular_at(const Vec3& p) const;
  std::string singular_description() const;

  static AxialPotential coulomb_axial(double e);
  static AxialPotential coulomb_string(double e);
  static AxialPotential uniform(double W0, const Vec3& B0);

  // Appends the gauge shift W -> W + dphi/dt, B -> B - grad phi.
  void add_gauge(const ScalarGauge& phi);

  json to_json() const;
  static AxialPotential from_json(const json& j);
};

// E = curl B, H = grad W + dB/dt (c = 1), per the pseudo-potential rule.
struct EMFields {
  Vec3 E = Vec3::Zero();
  Vec3 H = Vec3::Zero();
};
EMFields fields_from_potential(const AxialPotential& pot, const Vec3& p,
                               double t);

// ---------------------------------------------------------------------------
// Analytic electromagnetic states and the Maxwell residual.

struct EMState {
  struct Term {
    enum class Kind {
      vacuum_plane_wave,  // E = pol cos(k.x - |k| t), H = khat x pol cos(..)
      coulomb_electric,   // E = e r / r^3
      coulomb_magnetic,   // H = g r / r^3
      uniform             // constant E0, H0
    };
    Kind kind;
    double charge = 0.0;
    Vec3 pol = Vec3::Zero();
    Vec3 k = Vec3::Zero();
    Vec3 E0 = Vec3::Zero();
    Vec3 H0 = Vec3::Zero();
  };
  std::vector<Term> terms;
  double duality_gamma = 0.0;

  struct Eval {
    Vec3 E, H, curlE, curlH, dEdt, dHdt, J, K;
    double divE, divH, rho_e, mu_m;
  };
  Eval eval(const Vec3& p, double t) const;
  bool singular_at(const Vec3& p) const;

  json to_json() const;
  static EMState from_json(const json& j);
};

// Rotates fields, currents and densities by gamma per the duality map.
EMState duality_rotate(const EMState& state, double gamma);

struct FourPoint {
  Vec3 r = Vec3::Zero();
  double t = 0.0;
};

// Max over points of the max-norm of the four Maxwell residuals
// (curl H - dE/dt - 4pi J, -curl E - dH/dt - 4pi K, div E - 4pi rho,
//  div H - 4pi mu).
double maxwell_residual(const EMState& state,
                        const std::vector<FourPoint>& points);

}  // namespace monopole::potentials

#endif
