#include "monopole/classical.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <random>
#include <thread>

namespace monopole::classical {

PoincareParams PoincareParams::classical_coupling(double e, double g, double m,
                                                  double c) {
  PoincareParams p;
  p.lambda = e * g / (m * c);
  return p;
}

PoincareParams PoincareParams::eikonal_coupling(double e, double g, double E,
                                                double c) {
  PoincareParams p;
  p.lambda = e * c * g / E;
  return p;
}

Vec3 poincare_rhs(const TrajectoryState& s, const PoincareParams& p,
                  double r_min) {
  const double r = s.r.norm();
  if (r < r_min) throw OriginError();
  const double sign = (p.side == PoincareParams::Side::left) ? -1.0 : 1.0;
  return sign * p.lambda / (r * r * r) * s.v.cross(s.r);
}

Vec3 poincare_integral(const TrajectoryState& s, const PoincareParams& p,
                       double r_min) {
  const double r = s.r.norm();
  if (r < r_min) throw OriginError();
  return s.r.cross(s.v) + p.lambda * s.r / r;
}

ConeParameters cone_parameters(const TrajectoryState& s0,
                               const PoincareParams& p) {
  ConeParameters cp;
  cp.Lambda = poincare_integral(s0, p);
  const double L = cp.Lambda.norm();
  if (L == 0.0)
    throw std::invalid_argument("cone undefined: |Lambda| = 0");
  cp.axis = cp.Lambda / L;
  cp.half_angle = std::acos(std::clamp(p.lambda / L, -1.0, 1.0));
  return cp;
}

namespace {

using Vec6 = Eigen::Matrix<double, 6, 1>;

Vec6 pack(const TrajectoryState& s) {
  Vec6 y;
  y << s.r, s.v;
  return y;
}

TrajectoryState unpack(const Vec6& y, double t) {
  TrajectoryState s;
  s.r = y.head<3>();
  s.v = y.tail<3>();
  s.t = t;
  return s;
}

Vec6 rhs(const Vec6& y, const PoincareParams& p, double r_min) {
  TrajectoryState s = unpack(y, 0.0);
  Vec6 dy;
  dy.head<3>() = s.v;
  dy.tail<3>() = poincare_rhs(s, p, r_min);
  return dy;
}

// Closest approach to the origin along the straight segment a -> b; catches
// coasting trajectories whose steps jump across the exclusion radius.
double segment_origin_distance(const Eigen::Vector3d& a,
                               const Eigen::Vector3d& b) {
  const Eigen::Vector3d d = b - a;
  const double dd = d.squaredNorm();
  if (dd == 0.0) return a.norm();
  const double s = std::clamp(-a.dot(d) / dd, 0.0, 1.0);
  return (a + s * d).norm();
}

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                 a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                 e3 = 500.0 / 1113 - 7571.0 / 16695,
                 e4 = 125.0 / 192 - 393.0 / 640,
                 e5 = -2187.0 / 6784 + 92097.0 / 339200,
                 e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

}  // namespace

Trajectory integrate_trajectory(const TrajectoryState& s0,
                                const PoincareParams& p, double t_end,
                                const IntegratorOptions& opts) {
  if (opts.tol < 1e-13 || opts.tol > 1e-3)
    throw std::invalid_argument("tolerance outside [1e-13, 1e-3]");

  Trajectory traj;
  traj.params = p;
  traj.tol = opts.tol;
  traj.samples.push_back(s0);

  Vec6 y = pack(s0);
  double t = s0.t;

  if (opts.fixed_rk4) {
    const double dt = opts.fixed_dt;
    while (t < t_end - 1e-14 && traj.steps < opts.max_steps) {
      const double h = std::min(dt, t_end - t);
      const Vec6 y_old = y;
      try {
        const Vec6 k1 = rhs(y, p, opts.r_min);
        const Vec6 k2 = rhs(y + 0.5 * h * k1, p, opts.r_min);
        const Vec6 k3 = rhs(y + 0.5 * h * k2, p, opts.r_min);
        const Vec6 k4 = rhs(y + h * k3, p, opts.r_min);
        y += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
      } catch (const OriginError&) {
        traj.hit_origin = true;
        break;
      }
      if (segment_origin_distance(y_old.head<3>(), y.head<3>()) < opts.r_min) {
        traj.hit_origin = true;
        break;
      }
      t += h;
      ++traj.steps;
      traj.samples.push_back(unpack(y, t));
    }
    return traj;
  }

  double h = std::min(1e-3, t_end - t);
  double err_prev = 1.0;
  Vec6 k1;
  bool have_k1 = false;

  while (t < t_end - 1e-14) {
    if (traj.steps + traj.rejected_steps >= opts.max_steps)
      throw std::runtime_error("integrator step budget exhausted");
    h = std::min(h, t_end - t);
    if (h < 1e-15 * std::max(1.0, std::abs(t)))
      throw std::runtime_error("step size underflow");

    Vec6 k2, k3, k4, k5, k6, k7, y5;
    try {
      if (!have_k1) {
        k1 = rhs(y, p, opts.r_min);
        have_k1 = true;
      }
      k2 = rhs(y + h * (a21 * k1), p, opts.r_min);
      k3 = rhs(y + h * (a31 * k1 + a32 * k2), p, opts.r_min);
      k4 = rhs(y + h * (a41 * k1 + a42 * k2 + a43 * k3), p, opts.r_min);
      k5 = rhs(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4), p,
               opts.r_min);
      k6 = rhs(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5),
               p, opts.r_min);
      y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      k7 = rhs(y5, p, opts.r_min);  // FSAL
    } catch (const OriginError&) {
      traj.hit_origin = true;
      break;
    }

    const Vec6 errv =
        h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    double err = 0.0;
    for (int i = 0; i < 6; ++i) {
      const double sc =
          opts.tol + opts.tol * std::max(std::abs(y(i)), std::abs(y5(i)));
      err += (errv(i) / sc) * (errv(i) / sc);
    }
    err = std::sqrt(err / 6.0);

    if (err <= 1.0) {
      if (segment_origin_distance(y.head<3>(), y5.head<3>()) < opts.r_min) {
        traj.hit_origin = true;
        break;
      }
      t += h;
      y = y5;
      k1 = k7;
      ++traj.steps;
      traj.samples.push_back(unpack(y, t));
      const double fac =
          0.9 * std::pow(std::max(err, 1e-10), -0.17) * std::pow(err_prev, 0.04);
      h *= std::clamp(fac, 0.2, 5.0);
      err_prev = std::max(err, 1e-10);
    } else {
      ++traj.rejected_steps;
      h *= std::clamp(0.9 * std::pow(err, -0.2), 0.1, 1.0);
      have_k1 = true;  // k1 unchanged, step was from same state
    }
  }
  return traj;
}

namespace {

int worker_count() {
  if (const char* env = std::getenv("MONOPOLE_LAB_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

BeamResult birkeland_focus(const BeamConfig& beam, const PoincareParams& p) {
  if (beam.n < 2) throw std::invalid_argument("beam needs at least 2 rays");

  std::mt19937_64 rng(beam.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<TrajectoryState> starts(beam.n);
  std::vector<double> impact(beam.n);
  for (int i = 0; i < beam.n; ++i) {
    const double b = beam.spread * std::sqrt(0.02 + 0.98 * unit(rng));
    const double phi = 2.0 * M_PI * unit(rng);
    impact[i] = b;
    starts[i].r = Vec3(b * std::cos(phi), b * std::sin(phi), beam.z0);
    starts[i].v = Vec3(0, 0, -beam.speed);
  }

  BeamResult out;
  out.trajectories.resize(beam.n);

  const int nthreads = std::min(worker_count(), beam.n);
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next.fetch_add(1); i < beam.n; i = next.fetch_add(1)) {
      const auto traj =
          integrate_trajectory(starts[i], p, beam.t_end, beam.integrator);
      BeamTrajectorySummary s;
      s.impact_parameter = impact[i];
      s.hit_origin = traj.hit_origin;
      s.min_axis_distance = std::numeric_limits<double>::infinity();
      for (const auto& st : traj.samples) {
        const double d = std::hypot(st.r.x(), st.r.y());
        if (d < s.min_axis_distance) {
          s.min_axis_distance = d;
          s.z_at_min = st.r.z();
        }
      }
      out.trajectories[i] = s;
    }
  };
  for (int w = 0; w < nthreads; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();

  double acc = 0.0;
  for (int i = 0; i < beam.n; ++i)
    acc += out.trajectories[i].min_axis_distance / impact[i];
  out.convergence_metric = acc / beam.n;
  return out;
}

EikonalQuantities eikonal_hamiltonian(const Vec3& P, const AxialPotential& pot,
                                      const Vec3& point, double t, double g,
                                      double c) {
  if (pot.singular_at(point))
    throw potentials::SingularPoint("eikonal point inside singular set");
  const auto pe = pot.eval(point, t);
  EikonalQuantities q;
  q.p = P + (g / c) * pe.B;
  q.E = c * q.p.norm();
  q.H = q.E - g * pe.W;
  return q;
}

std::string trajectory_csv(const Trajectory& traj) {
  std::string out = "t,x,y,z,vx,vy,vz,Lx,Ly,Lz,cone_angle_err\n";
  ConeParameters cone;
  bool have_cone = false;
  if (!traj.samples.empty()) {
    try {
      cone = cone_parameters(traj.samples.front(), traj.params);
      have_cone = true;
    } catch (const std::invalid_argument&) {
    }
  }
  char buf[512];
  for (const auto& s : traj.samples) {
    const Vec3 L = s.r.cross(s.v) + traj.params.lambda * s.r / s.r.norm();
    double cone_err = 0.0;
    if (have_cone) {
      const double ang =
          std::acos(std::clamp(s.r.normalized().dot(cone.axis), -1.0, 1.0));
      cone_err = std::abs(ang - cone.half_angle);
    }
    std::snprintf(buf, sizeof buf,
                  "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                  "%.17g\n",
                  s.t, s.r.x(), s.r.y(), s.r.z(), s.v.x(), s.v.y(), s.v.z(),
                  L.x(), L.y(), L.z(), cone_err);
    out += buf;
  }
  return out;
}

}  // namespace monopole::classical
