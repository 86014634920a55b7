#include <doctest.h>

#include <random>

#include "monopole/symmetry.hpp"

namespace sy = monopole::symmetry;
namespace po = monopole::potentials;
namespace cf = monopole::clifford;
using po::FourPoint;
using po::Vec3;

namespace {

std::mt19937_64 rng(2024);

std::vector<FourPoint> sample_points(int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
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

// A manufactured two-mode solution in a constant potential.
struct Setup {
  sy::FourierField field;
  po::AxialPotential pot;
  double g;
};

Setup constant_potential_solution() {
  Setup s;
  s.g = 0.5;
  const double W0 = 0.3;
  const Vec3 B0(0.1, -0.2, 0.25);
  s.field = sy::make_plane_wave_solution(sy::WeylComponent::xi,
                                         Vec3(0.7, -0.4, 1.1), s.g, W0, B0, +1);
  const auto eta = sy::make_plane_wave_solution(
      sy::WeylComponent::eta, Vec3(-0.5, 0.9, 0.2), s.g, W0, B0, -1);
  for (const auto& m : eta.modes) s.field.modes.push_back(m);
  s.pot = po::AxialPotential::uniform(W0, B0);
  return s;
}

}  // namespace

TEST_CASE("free neutrino plane wave solves the xi equation") {
  const Vec3 k(0.3, -1.2, 0.8);
  auto field = sy::make_plane_wave_solution(sy::WeylComponent::xi, k, 0.0, 0.0,
                                            Vec3::Zero(), -1);
  CHECK(field.modes.front().omega == doctest::Approx(k.norm()));
  po::AxialPotential none;
  const auto pts = sample_points(50);
  const auto [rx, re] = sy::weyl_residuals(field, none, 0.0, pts);
  CHECK(rx <= 1e-12);
  CHECK(re <= 1e-12);
  CHECK(sy::dirac_monopole_residual(field, none, 0.0, pts) <= 1e-12);
}

TEST_CASE("generic amplitude off the kernel is detected") {
  sy::FourierField field;
  sy::FourierField::Mode m;
  m.omega = 1.0;
  m.k = Vec3(0, 0, 1);
  for (int i = 0; i < 4; ++i) m.amp(i) = cf::cplx(0.5 + 0.1 * i, -0.2 * i);
  field.modes.push_back(m);
  po::AxialPotential none;
  CHECK(sy::dirac_monopole_residual(field, none, 0.0, sample_points(20)) > 0.1);
}

TEST_CASE("constant-potential kernel solutions are residual-zero") {
  const auto s = constant_potential_solution();
  const auto pts = sample_points(60);
  const auto [rx, re] = sy::weyl_residuals(s.field, s.pot, s.g, pts);
  CHECK(rx <= 1e-12);
  CHECK(re <= 1e-12);
  CHECK(sy::dirac_monopole_residual(s.field, s.pot, s.g, pts) <= 1e-12);
}

TEST_CASE("two-component and gamma-matrix residual routes agree") {
  // On a non-solution both routes must see the same defect magnitude
  // (the Weyl split is unitary).
  sy::FourierField field;
  sy::FourierField::Mode m;
  m.omega = 0.9;
  m.k = Vec3(0.2, 0.1, -0.5);
  for (int i = 0; i < 4; ++i) m.amp(i) = cf::cplx(0.3 * i - 0.2, 0.1 * i);
  field.modes.push_back(m);
  po::AxialPotential pot = po::AxialPotential::uniform(0.2, Vec3(0, 0.1, 0));
  const auto pts = sample_points(30);
  const double dirac = sy::dirac_monopole_residual(field, pot, 0.4, pts);
  double combined = 0.0;
  for (const auto& pt : pts) {
    const auto [rx, re] =
        sy::weyl_residuals(field, pot, 0.4,
                           std::vector<FourPoint>{pt});
    combined = std::max(combined, std::hypot(rx, re));
  }
  CHECK(dirac == doctest::Approx(combined).epsilon(1e-10));
}

TEST_CASE("gauge transformations preserve residuals") {
  const auto s = constant_potential_solution();
  const auto pts = sample_points(40);

  SUBCASE("zero gauge is the identity") {
    sy::TransformSpec spec;
    spec.kind = sy::TransformSpec::Kind::chiral;
    const auto [f2, p2] = sy::apply_gauge(s.field, s.pot, spec);
    const auto v1 = s.field.eval(pts[0].r, pts[0].t);
    const auto v2 = f2.eval(pts[0].r, pts[0].t);
    CHECK((v1.psi - v2.psi).norm() < 1e-15);
  }
  SUBCASE("constant chiral phase rotates xi and eta oppositely") {
    sy::TransformSpec spec;
    spec.kind = sy::TransformSpec::Kind::chiral;
    spec.phi.c0 = 0.8;
    const auto [f2, p2] = sy::apply_gauge(s.field, s.pot, spec);
    const auto w1 = s.field.eval_weyl(pts[0].r, pts[0].t);
    const auto w2 = f2.eval_weyl(pts[0].r, pts[0].t);
    const cf::cplx ph = std::exp(cf::cplx(0, s.g * 0.8));
    CHECK((w2.xi - ph * w1.xi).norm() < 1e-13);
    CHECK((w2.eta - std::conj(ph) * w1.eta).norm() < 1e-13);
    // potential unchanged by a constant gauge function
    const auto e1 = s.pot.eval(pts[0].r, pts[0].t);
    const auto e2 = p2.eval(pts[0].r, pts[0].t);
    CHECK(e1.W == doctest::Approx(e2.W));
    CHECK((e1.B - e2.B).norm() < 1e-15);
  }
  SUBCASE("linear and oscillating gauge functions preserve residuals") {
    sy::TransformSpec spec;
    spec.kind = sy::TransformSpec::Kind::chiral;
    spec.phi.a = Vec3(0, 0, 0.4);
    spec.phi.at = -0.2;
    spec.phi.modes.push_back({0.3, 0.9, Vec3(0.5, 0, -0.3), 0.2});
    const auto [f2, p2] = sy::apply_gauge(s.field, s.pot, spec);
    const auto [rx, re] = sy::weyl_residuals(f2, p2, s.g, pts);
    CHECK(rx <= 1e-12);
    CHECK(re <= 1e-12);
  }
  SUBCASE("phase gauge") {
    sy::TransformSpec spec;
    spec.kind = sy::TransformSpec::Kind::phase;
    spec.theta = 1.1;
    const auto [f2, p2] = sy::apply_gauge(s.field, s.pot, spec);
    const auto [rx, re] = sy::weyl_residuals(f2, p2, s.g, pts);
    CHECK(rx <= 1e-12);
    CHECK(re <= 1e-12);
  }
}

TEST_CASE("P composed with itself is the identity") {
  const auto s = constant_potential_solution();
  sy::TransformSpec spec;
  spec.kind = sy::TransformSpec::Kind::P;
  const auto [f1, p1] = sy::apply_ptc(s.field, s.pot, spec);
  const auto [f2, p2] = sy::apply_ptc(f1, p1, spec);
  const auto pts = sample_points(10);
  for (const auto& pt : pts) {
    const auto a = s.field.eval(pt.r, pt.t);
    const auto b = f2.eval(pt.r, pt.t);
    CHECK((a.psi - b.psi).norm() < 1e-13);
  }
}

TEST_CASE("C maps the Weyl components per the charge-conjugation rule") {
  const auto s = constant_potential_solution();
  sy::TransformSpec spec;
  spec.kind = sy::TransformSpec::Kind::C;
  const auto [f1, p1] = sy::apply_ptc(s.field, s.pot, spec);
  const auto& s2 = cf::pauli()[1];
  const auto pts = sample_points(10);
  for (const auto& pt : pts) {
    const auto a = s.field.eval_weyl(pt.r, pt.t);
    const auto b = f1.eval_weyl(pt.r, pt.t);
    const Eigen::Vector2cd want_xi =
        cf::cplx(0, -1) * (s2 * a.eta.conjugate());
    const Eigen::Vector2cd want_eta =
        cf::cplx(0, 1) * (s2 * a.xi.conjugate());
    CHECK((b.xi - want_xi).norm() < 1e-13);
    CHECK((b.eta - want_eta).norm() < 1e-13);
  }
}

TEST_CASE("P, T, C certificates pass; corrupted T fails") {
  const auto s = constant_potential_solution();
  const auto pts = sample_points(40);

  for (auto kind : {sy::TransformSpec::Kind::P, sy::TransformSpec::Kind::T,
                    sy::TransformSpec::Kind::C}) {
    sy::TransformSpec spec;
    spec.kind = kind;
    const auto cert = sy::invariance_certificate(s.field, s.pot, spec.kind ==
                                                 sy::TransformSpec::Kind::P
                                                 ? s.g : s.g,
                                                 spec, pts);
    CHECK(cert.pass);
    CHECK(cert.residual_after <= 1e-10);
  }

  const auto [cf_field, cf_pot] = sy::corrupted_time_reversal(s.field, s.pot);
  const auto [rx, re] = sy::weyl_residuals(cf_field, cf_pot, s.g, pts);
  CHECK(std::max(rx, re) > 1e-2);
}

TEST_CASE("certificate rejects non-solutions") {
  sy::FourierField junk;
  sy::FourierField::Mode m;
  m.omega = 1.0;
  m.k = Vec3(1, 0, 0);
  m.amp << 1.0, 0.5, -0.2, 0.1;
  junk.modes.push_back(m);
  po::AxialPotential none;
  sy::TransformSpec spec;
  spec.kind = sy::TransformSpec::Kind::P;
  CHECK_THROWS_AS(
      sy::invariance_certificate(junk, none, 0.0, spec, sample_points(5)),
      std::invalid_argument);
}

TEST_CASE("current conservation for manufactured solutions") {
  const auto s = constant_potential_solution();
  const auto pts = sample_points(100);
  CHECK(sy::axial_current_divergence(s.field, s.g, pts) <= 1e-12);
  const auto [dx, de] = sy::chiral_current_divergence(s.field, pts);
  CHECK(dx <= 1e-12);
  CHECK(de <= 1e-12);
}

TEST_CASE("polar and axial currents are not collinear on a generic field") {
  const auto s = constant_potential_solution();
  CHECK(sy::min_current_angle_sine(s.field, s.g, sample_points(50)) > 1e-6);
}

TEST_CASE("bilinear discrete-symmetry table") {
  const auto& gb = cf::gamma_basis();
  const cf::Mat4 Top =
      (cf::cplx(0, -1) * gb.gamma[3] * gb.gamma[1]).eval();
  for (int i = 0; i < 1000; ++i) {
    const cf::Spinor4 psi = random_spinor();
    const auto b0 = cf::bilinears(psi);
    const double scale = std::pow(psi.squaredNorm(), 2);

    const auto bp = cf::bilinears(gb.gamma[4] * psi);
    CHECK(std::abs(bp.omega1 - b0.omega1) <= 1e-12 * scale);
    CHECK(std::abs(bp.omega2 + b0.omega2) <= 1e-12 * scale);

    const auto bt = cf::bilinears(Top * psi.conjugate());
    CHECK(std::abs(bt.omega1 - b0.omega1) <= 1e-12 * scale);
    CHECK(std::abs(bt.omega2 + b0.omega2) <= 1e-12 * scale);

    const auto bc = cf::bilinears(gb.gamma[2] * psi.conjugate());
    CHECK(std::abs(bc.omega1 + b0.omega1) <= 1e-12 * scale);
    CHECK(std::abs(bc.omega2 + b0.omega2) <= 1e-12 * scale);
  }
}

TEST_CASE("helicity eigenvectors") {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto& s = cf::pauli();
  for (int i = 0; i < 100; ++i) {
    const Vec3 n = Vec3(u(rng), u(rng), u(rng)).normalized();
    const cf::Mat2 sn = n(0) * s[0] + n(1) * s[1] + n(2) * s[2];
    for (int sign : {+1, -1}) {
      const auto v = sy::helicity_eigenvector(n, sign);
      CHECK(std::abs(v.norm() - 1.0) < 1e-14);
      CHECK((sn * v - double(sign) * v).norm() < 1e-13);
    }
  }
}
