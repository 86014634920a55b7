#include <doctest.h>

#include <random>

#include "monopole/classical.hpp"

namespace cl = monopole::classical;
namespace po = monopole::potentials;
using cl::PoincareParams;
using cl::TrajectoryState;
using po::Vec3;

namespace {

std::mt19937_64 rng(5150);

TrajectoryState random_state() {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  TrajectoryState s;
  do {
    s.r = Vec3(u(rng), u(rng), u(rng));
  } while (s.r.norm() < 0.3);
  s.v = Vec3(u(rng), u(rng), u(rng));
  return s;
}

double lambda_drift(const cl::Trajectory& traj) {
  const Vec3 L0 = cl::poincare_integral(traj.samples.front(), traj.params);
  double worst = 0.0;
  for (const auto& s : traj.samples)
    worst = std::max(worst,
                     (cl::poincare_integral(s, traj.params) - L0).norm());
  return worst / L0.norm();
}

double cone_drift(const cl::Trajectory& traj) {
  const auto cone = cl::cone_parameters(traj.samples.front(), traj.params);
  double worst = 0.0;
  for (const auto& s : traj.samples) {
    const double ang =
        std::acos(std::clamp(s.r.normalized().dot(cone.axis), -1.0, 1.0));
    worst = std::max(worst, std::abs(ang - cone.half_angle));
  }
  return worst;
}

}  // namespace

TEST_CASE("acceleration hand value and structure") {
  TrajectoryState s;
  s.r = Vec3(1, 0, 0);
  s.v = Vec3(0, 1, 0);
  PoincareParams p;
  p.lambda = 1.0;
  CHECK((cl::poincare_rhs(s, p) - Vec3(0, 0, 1)).norm() < 1e-15);
  p.side = PoincareParams::Side::right;
  CHECK((cl::poincare_rhs(s, p) - Vec3(0, 0, -1)).norm() < 1e-15);

  // right side with lambda equals left side with -lambda
  PoincareParams q;
  q.lambda = -1.0;
  for (int i = 0; i < 100; ++i) {
    const auto st = random_state();
    CHECK((cl::poincare_rhs(st, p) - cl::poincare_rhs(st, q)).norm() <= 1e-15);
  }

  p.lambda = 0.7;
  for (int i = 0; i < 1000; ++i) {
    const auto st = random_state();
    const Vec3 a = cl::poincare_rhs(st, p);
    const double scale = std::max(1.0, a.norm());
    CHECK(std::abs(a.dot(st.r)) <= 1e-12 * scale * st.r.norm());
    CHECK(std::abs(a.dot(st.v)) <= 1e-12 * scale * st.v.norm());
  }

  TrajectoryState origin;
  origin.r = Vec3(0, 0, 1e-9);
  CHECK_THROWS_AS(cl::poincare_rhs(origin, p), cl::OriginError);
}

TEST_CASE("first integral and cone geometry") {
  TrajectoryState s;
  s.r = Vec3(1, 0, 0);
  s.v = Vec3(0, 1, 0);
  PoincareParams p;
  p.lambda = 0.5;
  CHECK((cl::poincare_integral(s, p) - Vec3(0.5, 0, 1)).norm() < 1e-15);

  const auto cone = cl::cone_parameters(s, p);
  CHECK((cone.Lambda - Vec3(0.5, 0, 1)).norm() < 1e-15);
  CHECK(cone.half_angle == doctest::Approx(std::atan2(1.0, 0.5)).epsilon(1e-14));
  // Lambda . r_hat = lambda everywhere on the cone
  CHECK(cone.Lambda.dot(s.r.normalized()) == doctest::Approx(p.lambda));
}

TEST_CASE("lambda = 0 gives straight lines") {
  TrajectoryState s;
  s.r = Vec3(0.3, 1.0, 4.0);
  s.v = Vec3(0.1, -0.2, -1.0);
  PoincareParams p;
  const auto traj = cl::integrate_trajectory(s, p, 3.0);
  for (const auto& st : traj.samples) {
    CHECK((st.v - s.v).norm() == 0.0);
    CHECK((st.r - (s.r + st.t * s.v)).norm() <= 1e-12);
  }
}

TEST_CASE("long integration conserves the first integral and the cone") {
  TrajectoryState s;
  s.r = Vec3(1, 0, 0);
  s.v = Vec3(0, 1, 0.3);
  PoincareParams p;
  p.lambda = 0.5;
  const auto traj = cl::integrate_trajectory(s, p, 100.0);
  CHECK(!traj.hit_origin);
  CHECK(lambda_drift(traj) <= 1e-9);
  CHECK(cone_drift(traj) <= 1e-7);

  // speed is conserved by the magnetic force
  double vdrift = 0.0;
  for (const auto& st : traj.samples)
    vdrift = std::max(vdrift, std::abs(st.v.norm() - s.v.norm()));
  CHECK(vdrift <= 1e-9 * s.v.norm());
}

TEST_CASE("drift shrinks with the tolerance") {
  TrajectoryState s;
  s.r = Vec3(1, 0, 0);
  s.v = Vec3(0, 1, 0.3);
  PoincareParams p;
  p.lambda = 0.5;
  cl::IntegratorOptions loose;
  loose.tol = 1e-6;
  cl::IntegratorOptions tight;
  tight.tol = 1e-10;
  const double d_loose =
      lambda_drift(cl::integrate_trajectory(s, p, 50.0, loose));
  const double d_tight =
      lambda_drift(cl::integrate_trajectory(s, p, 50.0, tight));
  CHECK(d_loose > 10.0 * d_tight);
}

TEST_CASE("fixed-step RK4 cross-check") {
  TrajectoryState s;
  s.r = Vec3(1, 0, 0);
  s.v = Vec3(0, 1, 0.3);
  PoincareParams p;
  p.lambda = 0.5;
  const auto adaptive = cl::integrate_trajectory(s, p, 10.0);
  cl::IntegratorOptions fixed;
  fixed.fixed_rk4 = true;
  fixed.fixed_dt = 1e-3;
  const auto rk4 = cl::integrate_trajectory(s, p, 10.0, fixed);
  CHECK(adaptive.samples.back().t == doctest::Approx(10.0));
  CHECK(rk4.samples.back().t == doctest::Approx(10.0));
  CHECK((adaptive.samples.back().r - rk4.samples.back().r).norm() <= 1e-6);
  CHECK((adaptive.samples.back().v - rk4.samples.back().v).norm() <= 1e-6);
}

TEST_CASE("tolerance validation and origin passage") {
  TrajectoryState s;
  s.r = Vec3(0, 0, 5);
  s.v = Vec3(0, 0, -1);
  PoincareParams p;
  cl::IntegratorOptions bad;
  bad.tol = 1e-2;
  CHECK_THROWS_AS(cl::integrate_trajectory(s, p, 1.0, bad),
                  std::invalid_argument);
  const auto traj = cl::integrate_trajectory(s, p, 10.0);
  CHECK(traj.hit_origin);
}

TEST_CASE("beam focusing metric") {
  cl::BeamConfig beam;
  beam.n = 60;

  SUBCASE("free beam is exactly unfocused") {
    PoincareParams p;
    const auto r = cl::birkeland_focus(beam, p);
    CHECK(r.convergence_metric == 1.0);
  }
  SUBCASE("a pole focuses the beam; mirrored coupling focuses equally") {
    PoincareParams p;
    p.lambda = 0.5;
    const auto r = cl::birkeland_focus(beam, p);
    CHECK(r.convergence_metric < 0.5);
    for (const auto& tr : r.trajectories)
      CHECK(tr.min_axis_distance <= tr.impact_parameter + 1e-12);

    PoincareParams m;
    m.lambda = -0.5;
    const auto rm = cl::birkeland_focus(beam, m);
    CHECK(rm.convergence_metric ==
          doctest::Approx(r.convergence_metric).epsilon(1e-2));
  }
}

TEST_CASE("eikonal hamiltonian values") {
  po::AxialPotential none;
  const auto q = cl::eikonal_hamiltonian(Vec3(0.3, -0.4, 1.2), none,
                                         Vec3(1, 1, 1), 0.0, 0.7);
  CHECK(q.E == doctest::Approx(Vec3(0.3, -0.4, 1.2).norm()));
  CHECK(q.H == doctest::Approx(q.E));
  CHECK((q.p - Vec3(0.3, -0.4, 1.2)).norm() == 0.0);

  auto pot = po::AxialPotential::uniform(0.2, Vec3::Zero());
  const auto q2 = cl::eikonal_hamiltonian(Vec3(1, 0, 0), pot, Vec3(1, 1, 1),
                                          0.0, 0.7);
  CHECK(q2.H == doctest::Approx(1.0 - 0.7 * 0.2));

  auto mono = po::AxialPotential::coulomb_axial(1.0);
  CHECK_THROWS_AS(
      cl::eikonal_hamiltonian(Vec3(1, 0, 0), mono, Vec3(0, 0, 1), 0.0, 0.7),
      po::SingularPoint);
}

TEST_CASE("eikonal flow reproduces the classical acceleration") {
  const double e = 1.0, g = 0.7, c = 1.0;
  const auto pot = po::AxialPotential::coulomb_axial(e);
  const Vec3 r0(1.0, 0.4, 0.6);
  const Vec3 v0 = Vec3(0.2, 1.0, -0.3).normalized();  // |v| = c
  // choose the canonical momentum so the kinetic momentum points along v0
  const double E = 2.5;
  const Vec3 p_kin = (E / c) * v0;
  const Vec3 P0 = p_kin - (g / c) * pot.eval(r0, 0.0).B;

  const auto ham = [&](const Vec3& r, const Vec3& P) {
    return cl::eikonal_hamiltonian(P, pot, r, 0.0, g, c).H;
  };
  const auto flow = [&](const Vec3& r, const Vec3& P) {
    const double h = 1e-6;
    Vec3 rdot, Pdot;
    for (int j = 0; j < 3; ++j) {
      Vec3 dp = Vec3::Zero();
      dp(j) = h;
      rdot(j) = (ham(r, P + dp) - ham(r, P - dp)) / (2 * h);
      Pdot(j) = -(ham(r + dp, P) - ham(r - dp, P)) / (2 * h);
    }
    return std::make_pair(rdot, Pdot);
  };
  // one RK4 step of Hamilton's equations, either direction
  const auto step = [&](Vec3 r, Vec3 P, double h) {
    const auto [r1, P1] = flow(r, P);
    const auto [r2, P2] = flow(r + 0.5 * h * r1, P + 0.5 * h * P1);
    const auto [r3, P3] = flow(r + 0.5 * h * r2, P + 0.5 * h * P2);
    const auto [r4, P4] = flow(r + h * r3, P + h * P3);
    return std::make_pair(
        Vec3(r + h / 6.0 * (r1 + 2 * r2 + 2 * r3 + r4)),
        Vec3(P + h / 6.0 * (P1 + 2 * P2 + 2 * P3 + P4)));
  };
  const double h = 1e-3;
  const auto [rp, Pp] = step(r0, P0, h);
  const auto [rm, Pm] = step(r0, P0, -h);
  const Vec3 vp = c * cl::eikonal_hamiltonian(Pp, pot, rp, 0.0, g, c)
                          .p.normalized();
  const Vec3 vm = c * cl::eikonal_hamiltonian(Pm, pot, rm, 0.0, g, c)
                          .p.normalized();
  const Vec3 a_flow = (vp - vm) / (2 * h);

  TrajectoryState s;
  s.r = r0;
  s.v = v0 * c;
  const auto params = PoincareParams::eikonal_coupling(e, g, E, c);
  const Vec3 a_classical = cl::poincare_rhs(s, params);
  CHECK((a_flow - a_classical).norm() <= 1e-5 * a_classical.norm());
}

TEST_CASE("trajectory CSV is well formed and deterministic") {
  TrajectoryState s;
  s.r = Vec3(1, 0, 0);
  s.v = Vec3(0, 1, 0);
  PoincareParams p;
  p.lambda = 0.5;
  const auto traj = cl::integrate_trajectory(s, p, 1.0);
  const std::string csv = cl::trajectory_csv(traj);
  CHECK(csv.rfind("t,x,y,z,vx,vy,vz,Lx,Ly,Lz,cone_angle_err\n", 0) == 0);
  const auto rows = std::count(csv.begin(), csv.end(), '\n');
  CHECK(rows == static_cast<long>(traj.samples.size()) + 1);
  CHECK(csv == cl::trajectory_csv(traj));
}
