// monopole-lab: command-line front end for the monopole numerical laboratory.
//
// Subcommands: trajectory, beam, symmetry-audit, harmonics, dispersion,
// potentials-check, identities. Exit status: 0 success, 1 invariant
// violation, 2 usage error. All randomized suites are seeded and the
// output is byte-reproducible for a fixed (config, seed).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monopole/angular.hpp"
#include "monopole/classical.hpp"
#include "monopole/clifford.hpp"
#include "monopole/nonlinear.hpp"
#include "monopole/potentials.hpp"
#include "monopole/symmetry.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using json = nlohmann::json;
using monopole::potentials::FourPoint;
using monopole::potentials::Vec3;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Vec3 parse_vec3(const std::string& s, const std::string& flag) {
  double x, y, z;
  if (std::sscanf(s.c_str(), "%lf,%lf,%lf", &x, &y, &z) != 3)
    throw CLI::ValidationError(flag, "expected three comma-separated numbers");
  return Vec3(x, y, z);
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << body;
}

std::string csv_meta(const std::string& command, const json& config,
                     long long seed) {
  std::string out;
  out += "# tool=monopole-lab version=" + std::string(kVersion) + "\n";
  out += "# command=" + command + "\n";
  out += "# seed=" + std::to_string(seed) + "\n";
  out += "# config=" + config.dump() + "\n";
  return out;
}

json json_meta(const std::string& command, const json& config,
               long long seed) {
  return json{{"tool", "monopole-lab"},
              {"version", kVersion},
              {"command", command},
              {"seed", seed},
              {"config", config}};
}

std::vector<FourPoint> random_points(std::mt19937_64& rng, int n,
                                     double box = 1.0) {
  std::uniform_real_distribution<double> u(-box, box);
  std::vector<FourPoint> pts(n);
  for (auto& p : pts) {
    p.r = Vec3(u(rng), u(rng), u(rng));
    p.t = u(rng);
  }
  return pts;
}

// ---------------------------------------------------------------------------

int run_trajectory(double lambda, const std::string& r0s,
                   const std::string& v0s, double t_end, double tol,
                   const std::string& side, const std::string& output,
                   const json& config) {
  namespace cl = monopole::classical;
  cl::TrajectoryState s0;
  s0.r = parse_vec3(r0s, "--r0");
  s0.v = parse_vec3(v0s, "--v0");
  cl::PoincareParams p;
  p.lambda = lambda;
  p.side = (side == "right") ? cl::PoincareParams::Side::right
                             : cl::PoincareParams::Side::left;
  cl::IntegratorOptions opts;
  opts.tol = tol;

  const auto traj = cl::integrate_trajectory(s0, p, t_end, opts);

  const Vec3 L0 = cl::poincare_integral(s0, p);
  const double v0n = s0.v.norm();
  double v_drift = 0.0, L_drift = 0.0, cone_err = 0.0, radial = 0.0;
  for (const auto& s : traj.samples) {
    v_drift = std::max(v_drift, std::abs(s.v.norm() - v0n) / v0n);
    const Vec3 L = cl::poincare_integral(s, p);
    if (L0.norm() > 0)
      L_drift = std::max(L_drift, (L - L0).norm() / L0.norm());
    radial = std::max(radial, std::abs(L.dot(s.r.normalized()) - lambda));
  }
  bool have_cone = false;
  try {
    const auto cone = cl::cone_parameters(s0, p);
    have_cone = true;
    for (const auto& s : traj.samples) {
      const double ang = std::acos(
          std::clamp(s.r.normalized().dot(cone.axis), -1.0, 1.0));
      cone_err = std::max(cone_err, std::abs(ang - cone.half_angle));
    }
  } catch (const std::invalid_argument&) {
  }

  std::string body = csv_meta("trajectory", config, 0);
  body += cl::trajectory_csv(traj);
  write_output(output, body);

  const double drift_thr = std::max(1e-9, 10.0 * tol);
  const double cone_thr = std::max(1e-7, 1e3 * tol);
  const bool ok = v_drift <= drift_thr && L_drift <= drift_thr &&
                  radial <= drift_thr && (!have_cone || cone_err <= cone_thr) &&
                  !traj.hit_origin;
  std::cerr << "trajectory: steps=" << traj.steps
            << " v_drift=" << fmt17(v_drift) << " L_drift=" << fmt17(L_drift)
            << " radial=" << fmt17(radial) << " cone_err=" << fmt17(cone_err)
            << (traj.hit_origin ? " hit_origin" : "")
            << (ok ? " OK" : " VIOLATION") << "\n";
  return ok ? 0 : 1;
}

int run_beam(double lambda, int n, double spread, double z0, double speed,
             double t_end, long long seed, const std::string& output,
             const json& config) {
  namespace cl = monopole::classical;
  cl::PoincareParams p;
  p.lambda = lambda;
  cl::BeamConfig beam;
  beam.n = n;
  beam.spread = spread;
  beam.z0 = z0;
  beam.speed = speed;
  beam.t_end = t_end;
  beam.seed = static_cast<unsigned long long>(seed);

  const auto res = cl::birkeland_focus(beam, p);

  json rep;
  rep["meta"] = json_meta("beam", config, seed);
  rep["lambda"] = lambda;
  rep["convergence_metric"] = res.convergence_metric;
  json rows = json::array();
  for (const auto& t : res.trajectories)
    rows.push_back(json{{"impact_parameter", t.impact_parameter},
                        {"min_axis_distance", t.min_axis_distance},
                        {"z_at_min", t.z_at_min},
                        {"hit_origin", t.hit_origin}});
  rep["trajectories"] = rows;
  write_output(output, rep.dump(2) + "\n");

  std::cerr << "beam: n=" << n
            << " convergence_metric=" << fmt17(res.convergence_metric) << "\n";
  return 0;
}

int run_symmetry_audit(double g, long long seed, const std::string& output,
                       const json& config) {
  namespace sy = monopole::symmetry;
  namespace po = monopole::potentials;

  std::mt19937_64 rng(static_cast<unsigned long long>(seed));
  const auto points = random_points(rng, 40);

  const double W0 = 0.3;
  const Vec3 B0(0.1, -0.2, 0.25);
  const Vec3 k(0.7, -0.4, 1.1);
  auto field = sy::make_plane_wave_solution(sy::WeylComponent::xi, k, g, W0,
                                            B0, +1);
  const auto eta_part = sy::make_plane_wave_solution(sy::WeylComponent::eta,
                                                     Vec3(-0.5, 0.9, 0.2), g,
                                                     W0, B0, -1);
  for (const auto& m : eta_part.modes) field.modes.push_back(m);
  const auto pot = po::AxialPotential::uniform(W0, B0);

  std::vector<sy::TransformSpec> specs;
  {
    sy::TransformSpec s;
    s.kind = sy::TransformSpec::Kind::phase;
    s.theta = 0.7;
    specs.push_back(s);
    s = {};
    s.kind = sy::TransformSpec::Kind::chiral;
    s.phi.c0 = 0.3;
    specs.push_back(s);
    s = {};
    s.kind = sy::TransformSpec::Kind::chiral;
    s.phi.a = Vec3(0.0, 0.0, 0.4);
    specs.push_back(s);
    s = {};
    s.kind = sy::TransformSpec::Kind::P;
    specs.push_back(s);
    s = {};
    s.kind = sy::TransformSpec::Kind::T;
    specs.push_back(s);
    s = {};
    s.kind = sy::TransformSpec::Kind::C;
    specs.push_back(s);
  }

  json rep;
  rep["meta"] = json_meta("symmetry-audit", config, seed);
  json certs = json::array();
  bool all_pass = true;
  for (const auto& spec : specs) {
    const auto cert = sy::invariance_certificate(field, pot, g, spec, points);
    all_pass = all_pass && cert.pass;
    certs.push_back(cert.to_json());
  }
  rep["certificates"] = certs;

  // Negative control: T with the B-flip deliberately omitted must fail.
  {
    const auto [rx, re] = sy::weyl_residuals(field, pot, g, points);
    const double before = std::max(rx, re);
    const auto [cf, cp] = sy::corrupted_time_reversal(field, pot);
    const auto [ax, ae] = sy::weyl_residuals(cf, cp, g, points);
    const double after = std::max(ax, ae);
    const bool fails = after > std::max(10.0 * before, 1e-10);
    all_pass = all_pass && fails;
    rep["negative_control"] = json{{"transform", "T-without-B-flip"},
                                   {"residual_before", before},
                                   {"residual_after", after},
                                   {"verdict", fails ? "FAIL" : "PASS"},
                                   {"expected", "FAIL"}};
  }
  rep["all_pass"] = all_pass;
  write_output(output, rep.dump(2) + "\n");
  std::cerr << "symmetry-audit: " << (all_pass ? "all PASS" : "VIOLATION")
            << "\n";
  return all_pass ? 0 : 1;
}

int run_harmonics(double j, int n_theta, const std::string& output,
                  const json& config) {
  namespace an = monopole::angular;
  const double two_j_real = 2.0 * j;
  const int two_j = static_cast<int>(std::lround(two_j_real));
  if (j < 0.0 || std::abs(two_j_real - two_j) > 1e-9) {
    std::cerr << "harmonics: j must lie on the ladder 0, 1/2, 1, 3/2, ... "
                 "(got "
              << j << ")\n";
    return 2;
  }

  const auto grid = an::ThetaGrid::gauss(n_theta);
  std::string body = csv_meta("harmonics", config, 0);
  body += "j,m_prime,m,theta,phi,ReZ,ImZ\n";

  std::vector<std::pair<int, an::AngularFunction>> family;
  double worst_sq = 0.0, worst_3 = 0.0;
  const std::vector<double> phis = {0.0, M_PI / 2, M_PI, 3 * M_PI / 2};
  for (int two_mp = -two_j; two_mp <= two_j; two_mp += 2) {
    for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
      const auto Z = an::monopole_harmonic(grid, two_j, two_mp, two_m);
      const auto [rsq, r3] =
          an::eigen_residuals(Z, two_j, two_m, 0.5 * two_mp);
      worst_sq = std::max(worst_sq, rsq);
      worst_3 = std::max(worst_3, r3);
      family.emplace_back(two_mp, Z);
      for (int i = 0; i < grid->n; ++i)
        for (double phi : phis) {
          const auto z = Z.eval(grid->theta(i), phi);
          body += fmt17(j) + "," + fmt17(0.5 * two_mp) + "," +
                  fmt17(0.5 * two_m) + "," + fmt17(grid->theta(i)) + "," +
                  fmt17(phi) + "," + fmt17(z.real()) + "," + fmt17(z.imag()) +
                  "\n";
        }
    }
  }
  write_output(output, body);

  const auto G = an::gram_lifted(family);
  const double gram_dev =
      (G - Eigen::MatrixXcd::Identity(G.rows(), G.cols())).cwiseAbs().maxCoeff();

  const bool ok = worst_sq <= 1e-8 && worst_3 <= 1e-10 && gram_dev <= 1e-10;
  std::cerr << "harmonics: j=" << j << " eigen_residual=" << fmt17(worst_sq)
            << " lambda3_residual=" << fmt17(worst_3)
            << " gram_deviation=" << fmt17(gram_dev)
            << (ok ? " OK" : " VIOLATION") << "\n";
  return ok ? 0 : 1;
}

int run_dispersion(const std::string& mode_str, double kappa0, double k_min,
                   double k_max, int k_steps, const std::string& output,
                   const json& config) {
  namespace nl = monopole::nonlinear;
  nl::DispersionMode mode;
  if (mode_str == "co-phase")
    mode = nl::DispersionMode::co_phase;
  else if (mode_str == "anti-phase")
    mode = nl::DispersionMode::anti_phase;
  else {
    std::cerr << "dispersion: mode must be co-phase or anti-phase\n";
    return 2;
  }

  std::string body = csv_meta("dispersion", config, 0);
  body += "mode,kappa0,k,omega,classification,vg\n";
  const auto cls_name = [](nl::BranchClass c) {
    switch (c) {
      case nl::BranchClass::bradyon: return "bradyon";
      case nl::BranchClass::tachyon: return "tachyon";
      case nl::BranchClass::luminal: return "luminal";
      default: return "evanescent";
    }
  };

  bool ok = true;
  for (int i = 0; i < k_steps; ++i) {
    const double kmag =
        k_min + (k_max - k_min) * (k_steps > 1 ? double(i) / (k_steps - 1) : 0);
    const Vec3 k(0, 0, kmag);
    nl::DispersionBranch br;
    try {
      br = nl::dispersion_solve(k, mode, kappa0);
    } catch (const std::logic_error& e) {
      std::cerr << "dispersion: " << e.what() << "\n";
      ok = false;
      continue;
    }
    if (br.roots.empty()) {
      body += mode_str + "," + fmt17(kappa0) + "," + fmt17(kmag) +
              ",nan," + cls_name(br.classification) + ",nan\n";
      continue;
    }
    for (double w : br.roots) {
      double vg = std::numeric_limits<double>::quiet_NaN();
      if (w != 0.0) vg = kmag / std::abs(w);
      body += mode_str + "," + fmt17(kappa0) + "," + fmt17(kmag) + "," +
              fmt17(w) + "," + cls_name(br.classification) + "," + fmt17(vg) +
              "\n";
    }
  }
  write_output(output, body);
  std::cerr << "dispersion: mode=" << mode_str << " kappa0=" << kappa0
            << " steps=" << k_steps << (ok ? " OK" : " VIOLATION") << "\n";
  return ok ? 0 : 1;
}

int run_potentials_check(double e, int n_points, long long seed,
                         const std::string& output, const json& config) {
  namespace po = monopole::potentials;

  std::mt19937_64 rng(static_cast<unsigned long long>(seed));
  std::uniform_real_distribution<double> u(-1.0, 1.0);

  // Sample points well away from both singular sets (the z-axis and the
  // origin) so the finite-difference oracle stays accurate.
  std::vector<Vec3> pts;
  while (static_cast<int>(pts.size()) < n_points) {
    const Vec3 p(2.0 * u(rng), 2.0 * u(rng), 2.0 * u(rng));
    const double axis_d = std::hypot(p.x(), p.y());
    if (axis_d > 0.5 && p.norm() > 0.7 && p.norm() < 2.0) pts.push_back(p);
  }

  const auto fd_curl = [](auto&& f, const Vec3& p) {
    const double h = 1e-3;
    Eigen::Matrix3d Jm;  // Jm(i,j) = dB_i/dx_j, 4th order central
    for (int jx = 0; jx < 3; ++jx) {
      Vec3 dp = Vec3::Zero();
      dp(jx) = h;
      const Vec3 fm2 = f(p - 2 * dp), fm1 = f(p - dp), fp1 = f(p + dp),
                 fp2 = f(p + 2 * dp);
      Jm.col(jx) = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h);
    }
    return Vec3(Jm(2, 1) - Jm(1, 2), Jm(0, 2) - Jm(2, 0), Jm(1, 0) - Jm(0, 1));
  };

  double worst_string = 0.0, worst_axial = 0.0;
  for (const auto& p : pts) {
    const Vec3 target = e * p / std::pow(p.norm(), 3);
    const Vec3 cs = fd_curl(
        [&](const Vec3& q) { return po::dirac_string_potential(q, e); }, p);
    const Vec3 ca = fd_curl(
        [&](const Vec3& q) { return po::axial_gauge_potential(q, e); }, p);
    worst_string = std::max(worst_string, (cs - target).norm());
    worst_axial = std::max(worst_axial, (ca - target).norm());
  }

  // Duality rotation must leave the Maxwell residual unchanged.
  po::EMState state;
  {
    po::EMState::Term t;
    t.kind = po::EMState::Term::Kind::coulomb_electric;
    t.charge = 1.3;
    state.terms.push_back(t);
    t = {};
    t.kind = po::EMState::Term::Kind::vacuum_plane_wave;
    t.pol = Vec3(0.4, 0.0, 0.0);
    t.k = Vec3(0.0, 0.0, 1.7);
    state.terms.push_back(t);
  }
  std::vector<FourPoint> fpts;
  for (const auto& p : pts) fpts.push_back({p, 0.3});
  const double res_before = po::maxwell_residual(state, fpts);
  const double res_after =
      po::maxwell_residual(po::duality_rotate(state, 0.37), fpts);
  const double duality_dev = std::abs(res_after - res_before);

  json rep;
  rep["meta"] = json_meta("potentials-check", config, seed);
  rep["curl_residual_string_gauge"] = worst_string;
  rep["curl_residual_axial_gauge"] = worst_axial;
  rep["maxwell_residual_before_duality"] = res_before;
  rep["maxwell_residual_after_duality"] = res_after;
  rep["duality_residual_change"] = duality_dev;
  const bool ok =
      worst_string <= 1e-8 && worst_axial <= 1e-8 && duality_dev <= 1e-12;
  rep["all_pass"] = ok;
  write_output(output, rep.dump(2) + "\n");
  std::cerr << "potentials-check: curl_string=" << fmt17(worst_string)
            << " curl_axial=" << fmt17(worst_axial)
            << " duality_dev=" << fmt17(duality_dev)
            << (ok ? " OK" : " VIOLATION") << "\n";
  return ok ? 0 : 1;
}

int run_identities(int samples, long long seed, const std::string& output,
                   const json& config) {
  namespace cf = monopole::clifford;
  namespace nl = monopole::nonlinear;

  std::mt19937_64 rng(static_cast<unsigned long long>(seed));
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto rand_spinor = [&] {
    cf::Spinor4 psi;
    for (int i = 0; i < 4; ++i) psi(i) = cf::cplx(gauss(rng), gauss(rng));
    return psi;
  };

  double darwin_dev = 0.0, chiral_dev = 0.0, rodichev_dev = 0.0;
  for (int s = 0; s < samples; ++s) {
    const cf::Spinor4 psi = rand_spinor();
    const auto bl = cf::bilinears(psi);
    const double scale = std::pow(psi.squaredNorm(), 2);
    const double rho2 = bl.omega1 * bl.omega1 + bl.omega2 * bl.omega2;
    darwin_dev = std::max(
        darwin_dev,
        std::max({std::abs(cf::lorentz_square(bl.J) - rho2),
                  std::abs(cf::lorentz_square(bl.Sigma) + rho2),
                  std::abs(cf::lorentz_dot(bl.J, bl.Sigma))}) /
            scale);

    const auto pair = cf::weyl_split(psi);
    const auto cc = cf::chiral_currents(pair);
    chiral_dev = std::max(
        chiral_dev, std::max((cf::Vec4(cc.X + cc.Y) - bl.J).norm(),
                             (cf::Vec4(cc.X - cc.Y) - bl.Sigma).norm()) /
                        scale);
    const auto [o1, o2] = cf::omega_from_weyl(pair);
    chiral_dev = std::max(chiral_dev,
                          std::max(std::abs(o1 - bl.omega1),
                                   std::abs(o2 - bl.omega2)) /
                              scale);

    const auto rc = nl::rodichev_curvature(psi, 1.0);
    rodichev_dev = std::max(
        rodichev_dev, std::abs(rc.R_bilinear - rc.R_omega) / (scale + 1.0));
  }

  json rep;
  rep["meta"] = json_meta("identities", config, seed);
  rep["samples"] = samples;
  rep["darwin_deviation"] = darwin_dev;
  rep["chiral_current_deviation"] = chiral_dev;
  rep["rodichev_deviation"] = rodichev_dev;
  const bool ok =
      darwin_dev <= 1e-12 && chiral_dev <= 1e-12 && rodichev_dev <= 1e-12;
  rep["all_pass"] = ok;
  write_output(output, rep.dump(2) + "\n");
  std::cerr << "identities: darwin=" << fmt17(darwin_dev)
            << " chiral=" << fmt17(chiral_dev)
            << " rodichev=" << fmt17(rodichev_dev)
            << (ok ? " OK" : " VIOLATION") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monopole-lab: numerical laboratory for the leptonic "
               "magnetic monopole"};
  app.set_config("--config", "", "INI config file; flags take precedence");
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string output = "-";
  app.add_option("--output", output, "output file, - for stdout")
      ->capture_default_str();

  // trajectory
  auto* traj = app.add_subcommand("trajectory", "integrate one orbit");
  double lambda = 0.0, t_end = 100.0, tol = 1e-10;
  std::string r0 = "1,0,0", v0 = "0,1,0", side = "left";
  traj->add_option("--lambda", lambda, "coupling")->required();
  traj->add_option("--r0", r0, "initial position x,y,z")
      ->capture_default_str();
  traj->add_option("--v0", v0, "initial velocity x,y,z")
      ->capture_default_str();
  traj->add_option("--t-end", t_end, "final time")->capture_default_str();
  traj->add_option("--tol", tol, "integrator tolerance")
      ->capture_default_str();
  traj->add_option("--side", side, "left or right pole")
      ->check(CLI::IsMember({"left", "right"}))
      ->capture_default_str();

  // beam
  auto* beam = app.add_subcommand("beam", "Birkeland focusing experiment");
  double b_lambda = 0.5, spread = 0.1, z0 = 5.0, speed = 1.0, b_tend = 12.0;
  int b_n = 100;
  long long b_seed = 1;
  beam->add_option("--lambda", b_lambda, "coupling")->required();
  beam->add_option("--n", b_n, "number of rays")->capture_default_str();
  beam->add_option("--spread", spread, "max impact parameter")
      ->capture_default_str();
  beam->add_option("--z0", z0, "launch height")->capture_default_str();
  beam->add_option("--speed", speed, "beam speed")->capture_default_str();
  beam->add_option("--t-end", b_tend, "final time")->capture_default_str();
  beam->add_option("--seed", b_seed, "RNG seed")->capture_default_str();

  // symmetry-audit
  auto* audit = app.add_subcommand("symmetry-audit",
                                   "P/T/C and gauge invariance certificates");
  double a_g = 0.5;
  long long a_seed = 42;
  audit->add_option("--g", a_g, "magnetic charge")->capture_default_str();
  audit->add_option("--seed", a_seed, "RNG seed")->capture_default_str();

  // harmonics
  auto* harm = app.add_subcommand("harmonics",
                                  "angular eigenfunction tables and checks");
  double h_j = 1.0;
  int n_theta = 48;
  harm->add_option("--j", h_j, "total angular momentum")->required();
  harm->add_option("--n-theta", n_theta, "Gauss-Legendre order")
      ->capture_default_str();

  // dispersion
  auto* disp = app.add_subcommand("dispersion", "nonlinear dispersion sweep");
  std::string d_mode = "co-phase";
  double kappa0 = 1.0, k_min = 0.0, k_max = 3.0;
  int k_steps = 300;
  disp->add_option("--mode", d_mode, "co-phase or anti-phase")
      ->capture_default_str();
  disp->add_option("--kappa0", kappa0, "nonlinear constant")->required();
  disp->add_option("--k-min", k_min, "lowest |k|")->capture_default_str();
  disp->add_option("--k-max", k_max, "highest |k|")->capture_default_str();
  disp->add_option("--k-steps", k_steps, "sweep length")
      ->capture_default_str();

  // potentials-check
  auto* potc = app.add_subcommand("potentials-check",
                                  "monopole gauge curls and duality");
  double p_e = 1.0;
  int p_points = 1000;
  long long p_seed = 7;
  potc->add_option("--e", p_e, "source strength")->capture_default_str();
  potc->add_option("--points", p_points, "sample count")
      ->capture_default_str();
  potc->add_option("--seed", p_seed, "RNG seed")->capture_default_str();

  // identities
  auto* idn = app.add_subcommand("identities", "algebraic identity suite");
  int i_samples = 1000;
  long long i_seed = 11;
  idn->add_option("--samples", i_samples, "random spinor count")
      ->capture_default_str();
  idn->add_option("--seed", i_seed, "RNG seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForVersion")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  json config;
  for (const auto* sub : app.get_subcommands())
    for (const auto* opt : sub->get_options())
      if (opt->count() || !opt->get_default_str().empty())
        config[opt->get_name()] = opt->count() ? opt->results().front()
                                               : opt->get_default_str();

  try {
    if (app.got_subcommand(traj))
      return run_trajectory(lambda, r0, v0, t_end, tol, side, output, config);
    if (app.got_subcommand(beam))
      return run_beam(b_lambda, b_n, spread, z0, speed, b_tend, b_seed,
                      output, config);
    if (app.got_subcommand(audit))
      return run_symmetry_audit(a_g, a_seed, output, config);
    if (app.got_subcommand(harm))
      return run_harmonics(h_j, n_theta, output, config);
    if (app.got_subcommand(disp))
      return run_dispersion(d_mode, kappa0, k_min, k_max, k_steps, output,
                            config);
    if (app.got_subcommand(potc))
      return run_potentials_check(p_e, p_points, p_seed, output, config);
    if (app.got_subcommand(idn))
      return run_identities(i_samples, i_seed, output, config);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
