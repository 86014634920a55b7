#ifndef MONOPOLE_CLASSICAL_HPP
#define MONOPOLE_CLASSICAL_HPP

#include <stdexcept>
#include <vector>

#include "monopole/potentials.hpp"

// Classical and eikonal dynamics: the Poincare equation, its first
// integrals and cone geometry, the Birkeland focusing experiment, and the
// geometric-optics Hamiltonian.
namespace monopole::classical {

using potentials::AxialPotential;
using potentials::Vec3;

struct OriginError : std::runtime_error {
  OriginError() : std::runtime_error("trajectory state at the Coulomb center") {}
};

struct TrajectoryState {
  Vec3 r = Vec3::Zero();
  Vec3 v = Vec3::Zero();
  double t = 0.0;
};

struct PoincareParams {
  double lambda = 0.0;
  enum class Side { left, right };
  Side side = Side::left;

  // lambda = e g / (m c), the massive classical form.
  static PoincareParams classical_coupling(double e, double g, double m,
                                           double c = 1.0);
  // lambda = e c g / E, the massless eikonal form.
  static PoincareParams eikonal_coupling(double e, double g, double E,
                                         double c = 1.0);
};

// Acceleration -+lambda (1/r^3) v x r (minus for the left monopole).
Vec3 poincare_rhs(const TrajectoryState& s, const PoincareParams& p,
                  double r_min = 1e-6);

// First integral Lambda = r x v + lambda r/|r| (left-monopole flow).
Vec3 poincare_integral(const TrajectoryState& s, const PoincareParams& p,
                       double r_min = 1e-6);

struct ConeParameters {
  Vec3 axis = Vec3::UnitZ();  // Lambda / |Lambda|
  Vec3 Lambda = Vec3::Zero();
  double half_angle = 0.0;    // arccos(lambda / |Lambda|)
};
ConeParameters cone_parameters(const TrajectoryState& s0,
                               const PoincareParams& p);

struct IntegratorOptions {
  double tol = 1e-10;
  double r_min = 1e-6;       // origin exclusion radius
  bool fixed_rk4 = false;    // cross-check mode
  double fixed_dt = 1e-3;
  std::size_t max_steps = 50'000'000;
};

struct Trajectory {
  std::vector<TrajectoryState> samples;
  PoincareParams params;
  std::size_t steps = 0;
  std::size_t rejected_steps = 0;
  double tol = 0.0;
  bool hit_origin = false;  // terminated inside the exclusion radius
};

// Adaptive embedded Dormand-Prince 5(4) with PI step control.
Trajectory integrate_trajectory(const TrajectoryState& s0,
                                const PoincareParams& p, double t_end,
                                const IntegratorOptions& opts = {});

struct BeamTrajectorySummary {
  double impact_parameter = 0.0;
  double min_axis_distance = 0.0;
  double z_at_min = 0.0;
  bool hit_origin = false;
};

struct BeamResult {
  std::vector<BeamTrajectorySummary> trajectories;
  // mean over trajectories of (min axis distance / impact parameter);
  // exactly 1 for lambda = 0, < 1 when the pole focuses the beam.
  double convergence_metric = 0.0;
};

struct BeamConfig {
  int n = 100;
  double spread = 0.1;     // max impact parameter
  double z0 = 5.0;         // launch height above the pole
  double speed = 1.0;      // beam speed toward the pole (along -z)
  double t_end = 12.0;
  unsigned long long seed = 1;
  IntegratorOptions integrator{};
};

BeamResult birkeland_focus(const BeamConfig& beam, const PoincareParams& p);

struct EikonalQuantities {
  double E = 0.0;  // kinetic energy c|p|
  Vec3 p = Vec3::Zero();
  double H = 0.0;  // c|p| - g W
};

// p = P + (g/c) B, H = c|p| - g W at the given point.
EikonalQuantities eikonal_hamiltonian(const Vec3& P, const AxialPotential& pot,
                                      const Vec3& point, double t, double g,
                                      double c = 1.0);

// CSV row block: t,x,y,z,vx,vy,vz,Lx,Ly,Lz,cone_angle_err (17 significant
// digits, deterministic).
std::string trajectory_csv(const Trajectory& traj);

}  // namespace monopole::classical

#endif
