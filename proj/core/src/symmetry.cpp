#include "monopole/symmetry.hpp"

#include <cmath>
#include <stdexcept>

namespace monopole::symmetry {

namespace {
constexpr clifford::cplx I{0.0, 1.0};

// chi transforms under P and T as phi -> -phi(-x, t) and phi -> -phi(x, -t).
ScalarGauge gauge_parity(const ScalarGauge& phi) {
  ScalarGauge out;
  out.c0 = -phi.c0;
  out.at = -phi.at;
  out.a = phi.a;
  for (auto m : phi.modes) {
    m.amp = -m.amp;
    m.k = -m.k;
    out.modes.push_back(m);
  }
  return out;
}

ScalarGauge gauge_time_reversal(const ScalarGauge& phi) {
  ScalarGauge out;
  out.c0 = -phi.c0;
  out.at = phi.at;
  out.a = -phi.a;
  for (auto m : phi.modes) {
    m.amp = -m.amp;
    m.k = -m.k;
    m.phase = -m.phase;
    out.modes.push_back(m);
  }
  return out;
}

ScalarGauge gauge_sum(const ScalarGauge& a, const ScalarGauge& b) {
  ScalarGauge out = a;
  out.c0 += b.c0;
  out.at += b.at;
  out.a += b.a;
  out.modes.insert(out.modes.end(), b.modes.begin(), b.modes.end());
  return out;
}

}  // namespace

FourierField::Value FourierField::eval(const Vec3& p, double t) const {
  Value v;
  v.psi = v.dt = Spinor4::Zero();
  v.dx = {Spinor4::Zero(), Spinor4::Zero(), Spinor4::Zero()};
  for (const auto& m : modes) {
    const clifford::cplx ph = std::exp(I * (m.omega * t - m.k.dot(p)));
    v.psi += m.amp * ph;
    v.dt += m.amp * (I * m.omega * ph);
    for (int k = 0; k < 3; ++k) v.dx[k] += m.amp * (-I * m.k(k) * ph);
  }
  if (g != 0.0) {
    const auto& g5 = clifford::gamma_basis().gamma[5];
    const double alpha = g * chi.value(p, t);
    const Mat4 X = std::cos(alpha) * Mat4::Identity() + I * std::sin(alpha) * g5;
    const double a_t = g * chi.dt(p, t);
    const Vec3 a_x = g * chi.grad(p, t);
    const Spinor4 base = v.psi;
    v.psi = X * base;
    v.dt = X * v.dt + I * a_t * (g5 * v.psi);
    for (int k = 0; k < 3; ++k)
      v.dx[k] = X * v.dx[k] + I * a_x(k) * (g5 * v.psi);
  }
  return v;
}

FourierField::WeylValue FourierField::eval_weyl(const Vec3& p, double t) const {
  const auto v = eval(p, t);
  const Mat4& U = clifford::weyl_transform();
  WeylValue w;
  const Spinor4 u = U * v.psi;
  const Spinor4 ut = U * v.dt;
  w.xi = u.head<2>();
  w.eta = u.tail<2>();
  w.xi_dt = ut.head<2>();
  w.eta_dt = ut.tail<2>();
  for (int k = 0; k < 3; ++k) {
    const Spinor4 ux = U * v.dx[k];
    w.xi_dx[k] = ux.head<2>();
    w.eta_dx[k] = ux.tail<2>();
  }
  return w;
}

void FourierField::add_weyl_mode(double omega, const Vec3& k,
                                 const Eigen::Vector2cd& xi,
                                 const Eigen::Vector2cd& eta) {
  Mode m;
  m.omega = omega;
  m.k = k;
  Spinor4 w;
  w.head<2>() = xi;
  w.tail<2>() = eta;
  m.amp = clifford::weyl_transform() * w;
  modes.push_back(m);
}

Eigen::Vector2cd helicity_eigenvector(const Vec3& dir, int sign) {
  const Vec3 n = dir.normalized();
  const double theta = std::acos(std::clamp(n.z(), -1.0, 1.0));
  const double phi = std::atan2(n.y(), n.x());
  const clifford::cplx eip = std::exp(I * phi);
  if (sign > 0)
    return Eigen::Vector2cd(std::cos(theta / 2),
                            std::sin(theta / 2) * eip);
  return Eigen::Vector2cd(-std::sin(theta / 2) * std::conj(eip),
                          std::cos(theta / 2));
}

FourierField make_plane_wave_solution(WeylComponent which, const Vec3& k,
                                      double g, double W0, const Vec3& B0,
                                      int helicity) {
  FourierField f;
  f.g = g;
  if (which == WeylComponent::xi) {
    const Vec3 q = k - g * B0;
    const auto a = helicity_eigenvector(q, helicity);
    const double omega = g * W0 - helicity * q.norm();
    f.add_weyl_mode(omega, k, a, Eigen::Vector2cd::Zero());
  } else {
    const Vec3 q = k + g * B0;
    const auto b = helicity_eigenvector(q, helicity);
    const double omega = helicity * q.norm() - g * W0;
    f.add_weyl_mode(omega, k, Eigen::Vector2cd::Zero(), b);
  }
  return f;
}

double dirac_monopole_residual(const FourierField& field,
                               const AxialPotential& pot, double g,
                               const std::vector<FourPoint>& points) {
  const auto& gb = clifford::gamma_basis();
  double worst = 0.0;
  for (const auto& pt : points) {
    if (pot.singular_at(pt.r))
      throw potentials::SingularPoint("residual point inside singular set");
    const auto pe = pot.eval(pt.r, pt.t);
    const auto v = field.eval(pt.r, pt.t);
    // gamma_mu (d_mu - g gamma5 B_mu) in real (t, x) variables:
    Spinor4 r = -I * (gb.gamma[4] * v.dt) - g * pe.W * (gb.gamma[4] * (gb.gamma[5] * v.psi));
    for (int k = 0; k < 3; ++k)
      r += gb.gamma[k + 1] * v.dx[k] +
           I * g * pe.B(k) * (gb.gamma[k + 1] * (gb.gamma[5] * v.psi));
    worst = std::max(worst, r.norm());
  }
  return worst;
}

std::pair<double, double> weyl_residuals(const FourierField& field,
                                         const AxialPotential& pot, double g,
                                         const std::vector<FourPoint>& points) {
  const auto& s = clifford::pauli();
  double wx = 0.0, we = 0.0;
  for (const auto& pt : points) {
    if (pot.singular_at(pt.r))
      throw potentials::SingularPoint("residual point inside singular set");
    const auto pe = pot.eval(pt.r, pt.t);
    const auto v = field.eval_weyl(pt.r, pt.t);
    Eigen::Vector2cd rx = v.xi_dt - I * g * pe.W * v.xi;
    Eigen::Vector2cd re = v.eta_dt + I * g * pe.W * v.eta;
    for (int k = 0; k < 3; ++k) {
      rx += -(s[k] * v.xi_dx[k]) - I * g * pe.B(k) * (s[k] * v.xi);
      re += (s[k] * v.eta_dx[k]) - I * g * pe.B(k) * (s[k] * v.eta);
    }
    wx = std::max(wx, rx.norm());
    we = std::max(we, re.norm());
  }
  return {wx, we};
}

std::string TransformSpec::name() const {
  switch (kind) {
    case Kind::phase: return "phase-gauge";
    case Kind::chiral: return "chiral-gauge";
    case Kind::P: return "P";
    case Kind::T: return "T";
    case Kind::C: return "C";
  }
  return "?";
}

std::pair<FourierField, AxialPotential> apply_gauge(const FourierField& field,
                                                    const AxialPotential& pot,
                                                    const TransformSpec& spec) {
  FourierField f = field;
  AxialPotential p = pot;
  if (spec.kind == TransformSpec::Kind::phase) {
    const clifford::cplx ph = std::exp(I * spec.theta);
    for (auto& m : f.modes) m.amp *= ph;
    return {f, p};
  }
  if (spec.kind != TransformSpec::Kind::chiral)
    throw std::invalid_argument("apply_gauge: spec is not a gauge transform");
  f.chi = gauge_sum(f.chi, spec.phi);
  p.add_gauge(spec.phi);
  return {f, p};
}

namespace {

AxialPotential transform_potential(const AxialPotential& pot,
                                   TransformSpec::Kind kind, bool flip_B) {
  using K = AxialPotential::Term::Kind;
  AxialPotential out;
  for (auto t : pot.terms) {
    if (kind == TransformSpec::Kind::P) {
      switch (t.kind) {
        case K::constant: t.w0 = -t.w0; break;      // W -> -W, B -> B
        case K::linear_w: break;                    // -(-x) cancels
        case K::oscillating_b: break;
        case K::axial_coulomb: break;               // B(-x) = B(x)
        case K::dirac_string:
          throw std::invalid_argument(
              "P moves the Dirac string to the positive axis; use the axial "
              "gauge for parity checks");
        case K::gauge: t.phi = gauge_parity(t.phi); break;
      }
    } else if (kind == TransformSpec::Kind::T) {
      switch (t.kind) {
        case K::constant:
          if (flip_B) t.b0 = -t.b0;
          break;
        case K::linear_w: break;
        case K::oscillating_b:
          // -B0 sin(-wt) = +B0 sin(wt); the corrupted map misses the flip.
          if (!flip_B) t.b0 = -t.b0;
          break;
        case K::axial_coulomb:
        case K::dirac_string:
          if (flip_B) t.e = -t.e;
          break;
        case K::gauge:
          if (!flip_B)
            throw std::invalid_argument(
                "corrupted T on gauge terms not supported");
          t.phi = gauge_time_reversal(t.phi);
          break;
      }
    }
    out.terms.push_back(t);
  }
  return out;
}

}  // namespace

std::pair<FourierField, AxialPotential> apply_ptc(const FourierField& field,
                                                  const AxialPotential& pot,
                                                  const TransformSpec& spec) {
  const auto& gb = clifford::gamma_basis();
  FourierField f;
  f.g = field.g;
  AxialPotential p = pot;

  switch (spec.kind) {
    case TransformSpec::Kind::P: {
      for (auto m : field.modes) {
        m.amp = (gb.gamma[4] * m.amp).eval();
        m.k = -m.k;
        f.modes.push_back(m);
      }
      f.chi = gauge_parity(field.chi);
      p = transform_potential(pot, spec.kind, true);
      break;
    }
    case TransformSpec::Kind::T: {
      const Mat4 op = (-I * gb.gamma[3] * gb.gamma[1]).eval();
      for (auto m : field.modes) {
        m.amp = (op * m.amp.conjugate()).eval();
        m.k = -m.k;
        f.modes.push_back(m);
      }
      f.chi = gauge_time_reversal(field.chi);
      p = transform_potential(pot, spec.kind, true);
      break;
    }
    case TransformSpec::Kind::C: {
      for (auto m : field.modes) {
        m.amp = (gb.gamma[2] * m.amp.conjugate()).eval();
        m.omega = -m.omega;
        m.k = -m.k;
        f.modes.push_back(m);
      }
      f.chi = field.chi;
      break;
    }
    default:
      throw std::invalid_argument("apply_ptc: spec is not P, T or C");
  }
  return {f, p};
}

std::pair<FourierField, AxialPotential> corrupted_time_reversal(
    const FourierField& field, const AxialPotential& pot) {
  TransformSpec spec;
  spec.kind = TransformSpec::Kind::T;
  auto [f, unused] = apply_ptc(field, pot, spec);
  (void)unused;
  return {f, transform_potential(pot, spec.kind, false)};
}

json Certificate::to_json() const {
  return json{{"transform", transform},
              {"residual_before", residual_before},
              {"residual_after", residual_after},
              {"verdict", pass ? "PASS" : "FAIL"}};
}

Certificate invariance_certificate(const FourierField& field,
                                   const AxialPotential& pot, double g,
                                   const TransformSpec& spec,
                                   const std::vector<FourPoint>& points,
                                   double solution_threshold) {
  Certificate cert;
  cert.transform = spec.name();
  const auto [rx, re] = weyl_residuals(field, pot, g, points);
  cert.residual_before = std::max(rx, re);
  if (cert.residual_before > solution_threshold)
    throw std::invalid_argument(
        "invariance_certificate: input field is not a solution (residual " +
        std::to_string(cert.residual_before) + ")");

  std::pair<FourierField, AxialPotential> after;
  if (spec.kind == TransformSpec::Kind::phase ||
      spec.kind == TransformSpec::Kind::chiral)
    after = apply_gauge(field, pot, spec);
  else
    after = apply_ptc(field, pot, spec);

  const auto [ax, ae] = weyl_residuals(after.first, after.second, g, points);
  cert.residual_after = std::max(ax, ae);
  cert.pass = cert.residual_after <= std::max(10.0 * cert.residual_before, 1e-10);
  return cert;
}

double axial_current_divergence(const FourierField& field, double g,
                                const std::vector<FourPoint>& points) {
  const auto& gb = clifford::gamma_basis();
  std::array<Mat4, 3> Ak;  // gamma4 gamma_k gamma5 sandwich matrices
  for (int k = 0; k < 3; ++k)
    Ak[k] = gb.gamma[4] * gb.gamma[k + 1] * gb.gamma[5];
  double worst = 0.0;
  for (const auto& pt : points) {
    const auto v = field.eval(pt.r, pt.t);
    // d_t (psi^dag g5 psi)
    double div = 2.0 * std::real((v.dt.adjoint() * gb.gamma[5] * v.psi)(0));
    // d_k Sigma_k with Sigma_k = Re(i psi^dag A_k psi)
    for (int k = 0; k < 3; ++k)
      div += std::real(I * ((v.dx[k].adjoint() * Ak[k] * v.psi)(0) +
                            (v.psi.adjoint() * Ak[k] * v.dx[k])(0)));
    worst = std::max(worst, std::abs(g * div));
  }
  return worst;
}

std::pair<double, double> chiral_current_divergence(
    const FourierField& field, const std::vector<FourPoint>& points) {
  const auto& s = clifford::pauli();
  double wx = 0.0, we = 0.0;
  for (const auto& pt : points) {
    const auto v = field.eval_weyl(pt.r, pt.t);
    double dx = 2.0 * std::real((v.xi_dt.adjoint() * v.xi)(0));
    double de = 2.0 * std::real((v.eta_dt.adjoint() * v.eta)(0));
    for (int k = 0; k < 3; ++k) {
      dx -= 2.0 * std::real((v.xi_dx[k].adjoint() * s[k] * v.xi)(0));
      de += 2.0 * std::real((v.eta_dx[k].adjoint() * s[k] * v.eta)(0));
    }
    wx = std::max(wx, std::abs(dx));
    we = std::max(we, std::abs(de));
  }
  return {wx, we};
}

double min_current_angle_sine(const FourierField& field, double g,
                              const std::vector<FourPoint>& points) {
  double best = 1.0;
  for (const auto& pt : points) {
    const auto v = field.eval(pt.r, pt.t);
    const auto bl = clifford::bilinears(v.psi);
    const Eigen::Vector4d J = bl.J, K = g * bl.Sigma;
    const double nj = J.norm(), nk = K.norm();
    if (nj == 0.0 || nk == 0.0) continue;
    const double c = std::clamp(J.dot(K) / (nj * nk), -1.0, 1.0);
    best = std::min(best, std::sqrt(1.0 - c * c));
  }
  return best;
}

}  // namespace monopole::symmetry
