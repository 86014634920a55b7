#include "monopole/nonlinear.hpp"

#include <cmath>
#include <stdexcept>

namespace monopole::nonlinear {

namespace {

constexpr cplx I{0.0, 1.0};

Eigen::Matrix2cd spin_dot(const Vec3& v) {
  const auto s = clifford::pauli();
  return v(0) * s[0] + v(1) * s[1] + v(2) * s[2];
}

}  // namespace

double rho_density(const Eigen::Vector2cd& xi, const Eigen::Vector2cd& eta) {
  return 2.0 * std::abs(xi.dot(eta));
}

std::pair<double, double> nonlinear_residual(const PlaneWaveConfig& cfg,
                                             const NonlinearParams& p,
                                             const std::vector<FourPoint>& points) {
  const Eigen::Matrix2cd sk = spin_dot(cfg.k);
  const Eigen::Matrix2cd skp = spin_dot(cfg.k_prime);

  double r1 = 0.0, r2 = 0.0;
  for (const auto& pt : points) {
    const cplx ph_xi = std::exp(I * (cfg.k.dot(pt.r) - cfg.omega * pt.t));
    const cplx ph_eta =
        std::exp(I * (cfg.k_prime.dot(pt.r) - cfg.omega_prime * pt.t));
    const Eigen::Vector2cd xi = cfg.a * ph_xi;
    const Eigen::Vector2cd eta = cfg.b * ph_eta;

    // d_t xi - s.grad xi and d_t eta + s.grad eta, derivatives exact.
    Eigen::Vector2cd R1 = -I * cfg.omega * xi - I * (sk * xi);
    Eigen::Vector2cd R2 = -I * cfg.omega_prime * eta + I * (skp * eta);

    const cplx ip = eta.dot(xi);  // eta^dag xi
    const double rho = 2.0 * std::abs(ip);
    const double scale = cfg.a.norm() * cfg.b.norm();
    if (p.kappa0 != 0.0 && rho > 1e-13 * std::max(1.0, scale)) {
      const cplx phase = ip / std::abs(ip);  // exp(i arg(eta^dag xi))
      const double kap = p.kappa(rho);
      R1 += I * kap * phase * eta;
      R2 += I * kap * std::conj(phase) * xi;
    }
    r1 = std::max(r1, R1.norm());
    r2 = std::max(r2, R2.norm());
  }
  return {r1, r2};
}

double dispersion_eval(double omega, const Vec3& k, double omega_prime,
                       const Vec3& k_prime, double kappa0) {
  const double q2 = kappa0 * kappa0;
  return (omega * omega - k.squaredNorm()) *
             (omega_prime * omega_prime - k_prime.squaredNorm()) -
         2.0 * (omega * omega_prime - k.dot(k_prime)) * q2 + q2 * q2;
}

DispersionBranch dispersion_solve(const Vec3& k, DispersionMode mode,
                                  double kappa0) {
  if (kappa0 < 0.0) throw std::invalid_argument("kappa0 must be >= 0");
  DispersionBranch br;
  br.mode = mode;
  const double k2 = k.squaredNorm();
  if (mode == DispersionMode::co_phase) {
    const double w = std::sqrt(k2 + kappa0 * kappa0);
    br.roots = {w, -w};
    br.classification =
        (kappa0 == 0.0) ? BranchClass::luminal : BranchClass::bradyon;
  } else {
    const double d = k2 - kappa0 * kappa0;
    if (d < 0.0) {
      br.classification = BranchClass::evanescent;
      return br;
    }
    const double w = std::sqrt(d);
    if (w == 0.0)
      br.roots = {0.0};
    else
      br.roots = {w, -w};
    br.classification =
        (kappa0 == 0.0) ? BranchClass::luminal : BranchClass::tachyon;
  }
  const double scale =
      std::max({1.0, k2 * k2, std::pow(kappa0, 4.0)});
  for (double w : br.roots) {
    const Vec3 kp = (mode == DispersionMode::co_phase) ? k : Vec3(-k);
    const double wp = (mode == DispersionMode::co_phase) ? w : -w;
    if (std::abs(dispersion_eval(w, k, wp, kp, kappa0)) > 1e-12 * scale)
      throw std::logic_error("dispersion root fails the quartic");
  }
  return br;
}

double group_velocity(const DispersionBranch& branch, const Vec3& k,
                      double /*kappa0*/) {
  if (branch.roots.empty())
    throw std::domain_error("no real root on this branch");
  const double w = branch.roots.front();
  if (w == 0.0) throw std::domain_error("zero-frequency root");
  return k.norm() / std::abs(w);
}

MajoranaCheck majorana_decoupling_check(const PlaneWaveConfig& cfg,
                                        const NonlinearParams& p) {
  MajoranaCheck out;
  out.rho = rho_density(cfg.a, cfg.b);
  const double scale = cfg.a.norm() * cfg.b.norm();
  if (out.rho > 1e-13 * std::max(1.0, scale))
    out.coupling_norm = p.kappa0 * (cfg.a.norm() + cfg.b.norm());
  return out;
}

Eigen::Vector2cd majorana_partner(const Eigen::Vector2cd& eta) {
  const auto s = clifford::pauli();
  return s[1] * eta.conjugate();
}

RodichevCurvature rodichev_curvature(const Spinor4& psi, double b) {
  if (b == 0.0) throw std::invalid_argument("b must be nonzero");
  const auto& gb = clifford::gamma_basis();
  RodichevCurvature out;
  const double pref = 3.0 / (32.0 * b * b);

  const auto bl = clifford::bilinears(psi);
  out.R_omega = pref * (bl.omega1 * bl.omega1 + bl.omega2 * bl.omega2);

  // Independent route: axial sandwiches psibar gamma_mu gamma5 psi,
  // contracted so the spatial part enters with positive sign.
  const Spinor4 psibar_t = gb.gamma[4] * psi;  // gamma4 psi; sandwich via dot
  double spatial = 0.0;
  for (int k = 1; k <= 3; ++k) {
    const cplx Ak = psibar_t.dot(gb.gamma[k] * (gb.gamma[5] * psi));
    spatial += std::norm(Ak);
  }
  const cplx A4 = psibar_t.dot(gb.gamma[4] * (gb.gamma[5] * psi));
  out.R_bilinear = pref * (spatial - A4.real() * A4.real());
  return out;
}

TorsionVector torsion_from_potential(const AxialPotential& pot, const Vec3& p,
                                     double t, double g) {
  if (pot.singular_at(p))
    throw potentials::SingularPoint("torsion point inside singular set");
  const auto pe = pot.eval(p, t);
  TorsionVector out;
  out.phi_t = 2.0 * g * pe.W;
  out.phi = 2.0 * g * pe.B;
  return out;
}

double torsion_residual(const FourierField& field, const AxialPotential& pot,
                        double g, const std::vector<FourPoint>& points) {
  const auto& gb = clifford::gamma_basis();
  double worst = 0.0;
  for (const auto& pt : points) {
    const TorsionVector tv = torsion_from_potential(pot, pt.r, pt.t, g);
    const auto v = field.eval(pt.r, pt.t);
    Spinor4 r = -I * (gb.gamma[4] * v.dt) -
                0.5 * tv.phi_t * (gb.gamma[4] * (gb.gamma[5] * v.psi));
    for (int k = 0; k < 3; ++k)
      r += gb.gamma[k + 1] * v.dx[k] +
           I * 0.5 * tv.phi(k) * (gb.gamma[k + 1] * (gb.gamma[5] * v.psi));
    worst = std::max(worst, r.norm());
  }
  return worst;
}

PlaneWaveConfig make_nonlinear_plane_wave(const Vec3& k, double kappa0,
                                          DispersionMode mode, int helicity,
                                          int sign) {
  if (kappa0 <= 0.0) throw std::invalid_argument("kappa0 must be positive");
  if (helicity != 1 && helicity != -1)
    throw std::invalid_argument("helicity must be +-1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  const double kn = k.norm();
  if (kn == 0.0) throw std::invalid_argument("k must be nonzero");

  PlaneWaveConfig cfg;
  cfg.a = symmetry::helicity_eigenvector(k / kn, helicity);
  cfg.k = k;

  if (mode == DispersionMode::co_phase) {
    // Phase consistency (omega + h|k| > 0) holds on the positive root only.
    if (sign != 1)
      throw std::invalid_argument("co-phase solutions live on the + root");
    cfg.omega = std::sqrt(kn * kn + kappa0 * kappa0);
    cfg.omega_prime = cfg.omega;
    cfg.k_prime = k;
  } else {
    if (kn <= kappa0)
      throw std::invalid_argument("anti-phase needs |k| > kappa0");
    if (helicity != 1)
      throw std::invalid_argument(
          "anti-phase phase consistency needs helicity +1");
    cfg.omega = sign * std::sqrt(kn * kn - kappa0 * kappa0);
    cfg.omega_prime = -cfg.omega;
    cfg.k_prime = -k;
  }

  const double h = helicity;
  cfg.b = ((cfg.omega + h * kn) / kappa0) * cfg.a;
  const double nrm = std::sqrt(cfg.a.squaredNorm() + cfg.b.squaredNorm());
  cfg.a /= nrm;
  cfg.b /= nrm;
  return cfg;
}

}  // namespace monopole::nonlinear
