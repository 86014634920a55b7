#include <doctest.h>

#include <random>

#include "monopole/nonlinear.hpp"

namespace nl = monopole::nonlinear;
namespace sy = monopole::symmetry;
namespace po = monopole::potentials;
namespace cf = monopole::clifford;
using po::FourPoint;
using po::Vec3;

namespace {

std::mt19937_64 rng(31337);

std::vector<FourPoint> sample_points(int n) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::vector<FourPoint> pts(n);
  for (auto& p : pts) {
    p.r = Vec3(u(rng), u(rng), u(rng));
    p.t = u(rng);
  }
  return pts;
}

cf::Spinor4 random_spinor() {
  std::normal_distribution<double> g(0.0, 1.0);
  cf::Spinor4 psi;
  for (int i = 0; i < 4; ++i) psi(i) = cf::cplx(g(rng), g(rng));
  return psi;
}

}  // namespace

TEST_CASE("free chiral waves at kappa0 = 0") {
  nl::NonlinearParams p;
  nl::PlaneWaveConfig cfg;
  const Vec3 k(0.6, -0.2, 1.0);
  const Vec3 kp(-0.3, 0.8, 0.4);
  cfg.a = sy::helicity_eigenvector(k.normalized(), +1);
  cfg.k = k;
  cfg.omega = -k.norm();  // xi needs omega = -h|k|
  cfg.b = sy::helicity_eigenvector(kp.normalized(), -1);
  cfg.k_prime = kp;
  cfg.omega_prime = -kp.norm();  // eta needs omega' = h'|k'|
  const auto [r1, r2] = nl::nonlinear_residual(cfg, p, sample_points(40));
  CHECK(r1 <= 1e-12);
  CHECK(r2 <= 1e-12);
}

TEST_CASE("a lone chiral component never feels the coupling") {
  nl::NonlinearParams p;
  p.kappa0 = 2.0;
  nl::PlaneWaveConfig cfg;
  const Vec3 k(0, 0, 1);
  cfg.a = sy::helicity_eigenvector(Vec3(0, 0, 1), -1);
  cfg.k = k;
  cfg.omega = 1.0;  // -h|k|
  const auto [r1, r2] = nl::nonlinear_residual(cfg, p, sample_points(20));
  CHECK(r1 <= 1e-13);
  CHECK(r2 <= 1e-13);
}

TEST_CASE("constructed plane waves solve the coupled system") {
  const double kappa0 = 0.8;
  const auto pts = sample_points(50);
  nl::NonlinearParams p;
  p.kappa0 = kappa0;

  SUBCASE("co-phase, both helicities") {
    for (int h : {+1, -1}) {
      const auto cfg = nl::make_nonlinear_plane_wave(Vec3(0.4, -0.7, 0.9),
                                                     kappa0,
                                                     nl::DispersionMode::co_phase,
                                                     h);
      CHECK(cfg.omega ==
            doctest::Approx(std::sqrt(Vec3(0.4, -0.7, 0.9).squaredNorm() +
                                      kappa0 * kappa0)));
      const auto [r1, r2] = nl::nonlinear_residual(cfg, p, pts);
      CHECK(r1 <= 1e-10);
      CHECK(r2 <= 1e-10);
    }
  }
  SUBCASE("anti-phase, both frequency signs") {
    for (int sign : {+1, -1}) {
      const auto cfg = nl::make_nonlinear_plane_wave(
          Vec3(1.1, 0.5, -0.3), kappa0, nl::DispersionMode::anti_phase, +1,
          sign);
      const auto [r1, r2] = nl::nonlinear_residual(cfg, p, pts);
      CHECK(r1 <= 1e-10);
      CHECK(r2 <= 1e-10);
    }
  }
  SUBCASE("unsupported branches are rejected") {
    CHECK_THROWS_AS(
        nl::make_nonlinear_plane_wave(Vec3(0, 0, 0.5), kappa0,
                                      nl::DispersionMode::anti_phase, +1),
        std::invalid_argument);
    CHECK_THROWS_AS(
        nl::make_nonlinear_plane_wave(Vec3(0, 0, 2), kappa0,
                                      nl::DispersionMode::anti_phase, -1),
        std::invalid_argument);
    CHECK_THROWS_AS(
        nl::make_nonlinear_plane_wave(Vec3(0, 0, 2), kappa0,
                                      nl::DispersionMode::co_phase, +1, -1),
        std::invalid_argument);
  }
}

TEST_CASE("global chiral rotation leaves the residual invariant") {
  const double kappa0 = 0.8;
  nl::NonlinearParams p;
  p.kappa0 = kappa0;
  auto cfg = nl::make_nonlinear_plane_wave(Vec3(0.4, -0.7, 0.9), kappa0,
                                           nl::DispersionMode::co_phase, +1);
  // perturb so the residual is nonzero but stable under the rotation
  cfg.omega += 0.05;
  const auto pts = sample_points(30);
  const auto [r1, r2] = nl::nonlinear_residual(cfg, p, pts);
  const cf::cplx ph = std::exp(cf::cplx(0, 0.6));
  nl::PlaneWaveConfig rot = cfg;
  rot.a = ph * cfg.a;
  rot.b = std::conj(ph) * cfg.b;
  const auto [s1, s2] = nl::nonlinear_residual(rot, p, pts);
  CHECK(s1 == doctest::Approx(r1).epsilon(1e-12));
  CHECK(s2 == doctest::Approx(r2).epsilon(1e-12));
}

TEST_CASE("dispersion quartic values") {
  CHECK(nl::dispersion_eval(1.0, Vec3(0, 0, 1), 1.0, Vec3(0, 0, 1), 0.0) ==
        0.0);
  const Vec3 k(0.3, 0.4, 0.0);  // |k| = 0.5
  const double kappa0 = 1.2;
  const double w = std::sqrt(0.25 + kappa0 * kappa0);
  CHECK(std::abs(nl::dispersion_eval(w, k, w, k, kappa0)) <= 1e-12);
  CHECK(std::abs(nl::dispersion_eval(1.7, k, 1.7, k, kappa0)) > 1e-3);
}

TEST_CASE("dispersion branches, roots and classification") {
  SUBCASE("co-phase is a massive branch") {
    const auto br =
        nl::dispersion_solve(Vec3(0, 0, 1), nl::DispersionMode::co_phase, 1.0);
    REQUIRE(br.roots.size() == 2);
    CHECK(br.roots[0] == doctest::Approx(std::sqrt(2.0)));
    CHECK(br.roots[1] == doctest::Approx(-std::sqrt(2.0)));
    CHECK(br.classification == nl::BranchClass::bradyon);
    CHECK(nl::group_velocity(br, Vec3(0, 0, 1), 1.0) ==
          doctest::Approx(1.0 / std::sqrt(2.0)));
  }
  SUBCASE("anti-phase above threshold is superluminal") {
    const auto br =
        nl::dispersion_solve(Vec3(0, 0, 2), nl::DispersionMode::anti_phase, 1.0);
    REQUIRE(br.roots.size() == 2);
    CHECK(br.roots[0] == doctest::Approx(std::sqrt(3.0)));
    CHECK(br.classification == nl::BranchClass::tachyon);
    const double vg = nl::group_velocity(br, Vec3(0, 0, 2), 1.0);
    CHECK(vg == doctest::Approx(2.0 / std::sqrt(3.0)));
    CHECK(vg > 1.0);
  }
  SUBCASE("anti-phase below threshold is evanescent") {
    const auto br =
        nl::dispersion_solve(Vec3(0, 0, 0.5), nl::DispersionMode::anti_phase,
                             1.0);
    CHECK(br.roots.empty());
    CHECK(br.classification == nl::BranchClass::evanescent);
    CHECK_THROWS_AS(nl::group_velocity(br, Vec3(0, 0, 0.5), 1.0),
                    std::domain_error);
  }
  SUBCASE("threshold gives the zero-frequency root") {
    const auto br =
        nl::dispersion_solve(Vec3(1, 0, 0), nl::DispersionMode::anti_phase,
                             1.0);
    REQUIRE(br.roots.size() == 1);
    CHECK(br.roots[0] == 0.0);
    CHECK_THROWS_AS(nl::group_velocity(br, Vec3(1, 0, 0), 1.0),
                    std::domain_error);
  }
  SUBCASE("the massless limit is luminal") {
    const auto br =
        nl::dispersion_solve(Vec3(0, 0, 1.3), nl::DispersionMode::co_phase,
                             0.0);
    CHECK(br.classification == nl::BranchClass::luminal);
    CHECK(br.roots[0] == doctest::Approx(1.3));
    CHECK(nl::group_velocity(br, Vec3(0, 0, 1.3), 0.0) ==
          doctest::Approx(1.0));
    // continuity: roots approach the luminal value as kappa0 -> 0
    double prev = 1e300;
    for (double q : {0.1, 0.01, 0.001}) {
      const auto b2 =
          nl::dispersion_solve(Vec3(0, 0, 1.3), nl::DispersionMode::co_phase, q);
      const double gap = std::abs(b2.roots[0] - 1.3);
      CHECK(gap < prev);
      prev = gap;
    }
    CHECK(prev <= 1e-6);
  }
}

TEST_CASE("Majorana decoupling") {
  Eigen::Vector2cd eta(cf::cplx(0.4, -0.3), cf::cplx(-0.1, 0.9));
  const Eigen::Vector2cd xi = nl::majorana_partner(eta);
  CHECK(nl::rho_density(xi, eta) == 0.0);

  nl::NonlinearParams p;
  p.kappa0 = 1.5;
  nl::PlaneWaveConfig cfg;
  cfg.a = xi;
  cfg.b = eta;
  const auto mc = nl::majorana_decoupling_check(cfg, p);
  CHECK(mc.rho <= 1e-13);
  CHECK(mc.coupling_norm == 0.0);

  cfg.b.setZero();
  const auto mc0 = nl::majorana_decoupling_check(cfg, p);
  CHECK(mc0.rho == 0.0);
  CHECK(mc0.coupling_norm == 0.0);

  cfg.a = Eigen::Vector2cd(1, 0);
  cfg.b = Eigen::Vector2cd(1, 0);
  const auto mcg = nl::majorana_decoupling_check(cfg, p);
  CHECK(mcg.rho == doctest::Approx(2.0));
  CHECK(mcg.coupling_norm > 0.0);

  // the Majorana pair rides the free equations despite kappa0 != 0
  nl::PlaneWaveConfig wave;
  const Vec3 k(0, 0, 0.7);
  wave.b = sy::helicity_eigenvector(Vec3(0, 0, 1), +1);
  wave.k_prime = k;
  wave.omega_prime = k.norm();
  wave.a = nl::majorana_partner(wave.b);
  wave.k = -k;  // s2 conj flips the helicity, so omega = -h|k| = -|k|
  wave.omega = -k.norm();
  const auto [r1, r2] = nl::nonlinear_residual(wave, p, sample_points(20));
  CHECK(r1 <= 1e-12);
  CHECK(r2 <= 1e-12);
}

TEST_CASE("curvature of the twisted space, two routes") {
  cf::Spinor4 e0 = cf::Spinor4::Zero();
  e0(0) = 1.0;
  const auto rc = nl::rodichev_curvature(e0, 1.0);
  CHECK(rc.R_omega == doctest::Approx(3.0 / 32.0));
  CHECK(rc.R_bilinear == doctest::Approx(3.0 / 32.0));

  for (int i = 0; i < 1000; ++i) {
    const cf::Spinor4 psi = random_spinor();
    const auto r = nl::rodichev_curvature(psi, 0.7);
    const double scale = std::max(1.0, std::pow(psi.squaredNorm(), 2));
    CHECK(std::abs(r.R_bilinear - r.R_omega) <= 1e-12 * scale);
    CHECK(r.R_omega >= 0.0);
  }
  CHECK_THROWS_AS(nl::rodichev_curvature(e0, 0.0), std::invalid_argument);
}

TEST_CASE("torsion vector from the potential") {
  const double g = 0.6;
  auto pot = po::AxialPotential::uniform(0.3, Vec3(0.1, -0.2, 0.25));
  const auto tv = nl::torsion_from_potential(pot, Vec3(1, 1, 1), 0.0, g);
  CHECK(tv.phi_t == doctest::Approx(2 * g * 0.3));
  CHECK((tv.phi - Vec3(2 * g * 0.1, -2 * g * 0.2, 2 * g * 0.25)).norm() <
        1e-15);

  auto mono = po::AxialPotential::coulomb_axial(1.0);
  CHECK_THROWS_AS(nl::torsion_from_potential(mono, Vec3(0, 0, 1), 0.0, g),
                  po::SingularPoint);
}

TEST_CASE("torsion coupling reproduces the monopole operator") {
  // generic non-solution field: both residuals are nonzero and must agree
  sy::FourierField field;
  sy::FourierField::Mode m;
  m.omega = 0.8;
  m.k = Vec3(0.2, -0.5, 0.4);
  for (int i = 0; i < 4; ++i) m.amp(i) = cf::cplx(0.3 + 0.2 * i, -0.1 * i);
  field.modes.push_back(m);
  auto pot = po::AxialPotential::uniform(0.25, Vec3(0.1, 0.3, -0.2));
  const double g = 0.7;
  const auto pts = sample_points(30);
  const double rt = nl::torsion_residual(field, pot, g, pts);
  const double rd = sy::dirac_monopole_residual(field, pot, g, pts);
  CHECK(rt > 0.1);
  CHECK(rt == doctest::Approx(rd).epsilon(1e-12));
}
