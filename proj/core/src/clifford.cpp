#include "monopole/clifford.hpp"

#include <cmath>
#include <stdexcept>

namespace monopole::clifford {

namespace {
constexpr cplx I{0.0, 1.0};
}

const std::array<Mat2, 3>& pauli() {
  static const std::array<Mat2, 3> s = [] {
    std::array<Mat2, 3> m;
    m[0] << 0, 1, 1, 0;
    m[1] << 0, -I, I, 0;
    m[2] << 1, 0, 0, -1;
    return m;
  }();
  return s;
}

double lorentz_square(const Vec4& v) {
  return v(0) * v(0) - v.tail<3>().squaredNorm();
}

double lorentz_dot(const Vec4& a, const Vec4& b) {
  return a(0) * b(0) - a.tail<3>().dot(b.tail<3>());
}

namespace {

GammaBasis build_basis() {
  GammaBasis b;
  const auto& s = pauli();

  // gamma_k = i [[0, s_k], [-s_k, 0]], gamma_4 = diag(I, -I),
  // gamma_5 = gamma_1 gamma_2 gamma_3 gamma_4 = [[0, I], [I, 0]].
  for (int k = 0; k < 3; ++k) {
    Mat4 g = Mat4::Zero();
    g.block<2, 2>(0, 2) = I * s[k];
    g.block<2, 2>(2, 0) = -I * s[k];
    b.gamma[k + 1] = g;
  }
  Mat4 g4 = Mat4::Zero();
  g4.block<2, 2>(0, 0) = Mat2::Identity();
  g4.block<2, 2>(2, 2) = -Mat2::Identity();
  b.gamma[4] = g4;
  b.gamma[5] = b.gamma[1] * b.gamma[2] * b.gamma[3] * b.gamma[4];

  int n = 0;
  auto put = [&](const Mat4& m, std::string label) {
    b.clifford16[n] = m;
    b.labels[n] = std::move(label);
    ++n;
  };
  put(Mat4::Identity(), "I");
  for (int mu = 1; mu <= 4; ++mu) put(b.gamma[mu], "g" + std::to_string(mu));
  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = mu + 1; nu <= 4; ++nu)
      put(b.gamma[mu] * b.gamma[nu],
          "g" + std::to_string(mu) + std::to_string(nu));
  // Rank-3 elements as duals: gamma_[lmn] ~ gamma_mu gamma_5 runs over the
  // four missing-index combinations.
  for (int mu = 1; mu <= 4; ++mu)
    put(b.gamma[mu] * b.gamma[5], "g" + std::to_string(mu) + "5");
  put(b.gamma[5], "g5");

  for (int N = 0; N < 16; ++N) {
    const Mat4& G = b.clifford16[N];
    // Hermiticity phase: G^dag = phase * G.
    const Mat4 Gd = G.adjoint();
    cplx phase = 0;
    double best = 0;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (std::abs(G(r, c)) > best) {
          best = std::abs(G(r, c));
          phase = Gd(r, c) / G(r, c);
        }
    if ((Gd - phase * G).norm() > 1e-12)
      throw std::logic_error("clifford element not hermitian up to a phase");
    b.hermitian_phase[N] = phase;

    for (int mu = 1; mu <= 4; ++mu) {
      const Mat4 P = b.gamma[mu] * G * b.gamma[mu];
      int sign;
      if ((P - G).norm() < 1e-12)
        sign = +1;
      else if ((P + G).norm() < 1e-12)
        sign = -1;
      else
        throw std::logic_error("gamma_mu G gamma_mu is not +-G");
      b.sign_table[mu - 1][N] = sign;
    }
  }
  return b;
}

}  // namespace

const GammaBasis& gamma_basis() {
  static const GammaBasis b = build_basis();
  return b;
}

Bilinears bilinears(const Spinor4& psi) {
  const auto& gb = gamma_basis();
  const Eigen::RowVector4cd bar = psi.adjoint() * gb.gamma[4];

  Bilinears out;
  out.omega1 = std::real((bar * psi)(0));
  out.omega2 = std::real(-I * (bar * gb.gamma[5] * psi)(0));

  out.J(0) = psi.squaredNorm();
  out.Sigma(0) = std::real((psi.adjoint() * gb.gamma[5] * psi)(0));
  for (int k = 1; k <= 3; ++k) {
    out.J(k) = std::real(I * (bar * gb.gamma[k] * psi)(0));
    out.Sigma(k) = std::real(I * (bar * gb.gamma[k] * gb.gamma[5] * psi)(0));
  }

  for (int k = 1; k <= 3; ++k) {
    out.M(0, k) = std::real((psi.adjoint() * gb.gamma[k] * psi)(0));
    out.M(k, 0) = -out.M(0, k);
    for (int l = k + 1; l <= 3; ++l) {
      out.M(k, l) = std::real(I * (bar * gb.gamma[k] * gb.gamma[l] * psi)(0));
      out.M(l, k) = -out.M(k, l);
    }
  }

  out.rho = std::hypot(out.omega1, out.omega2);
  if (out.rho > 0.0) {
    out.A = std::atan2(out.omega2, out.omega1);
    out.A_defined = true;
  }
  return out;
}

const Mat4& weyl_transform() {
  static const Mat4 U =
      ((gamma_basis().gamma[4] + gamma_basis().gamma[5]) / std::sqrt(2.0))
          .eval();
  return U;
}

WeylPair weyl_split(const Spinor4& psi) {
  const Spinor4 w = weyl_transform() * psi;
  return WeylPair{w.head<2>(), w.tail<2>()};
}

Spinor4 weyl_join(const WeylPair& pair) {
  Spinor4 w;
  w.head<2>() = pair.xi;
  w.tail<2>() = pair.eta;
  return weyl_transform() * w;  // U is an involution
}

ChiralCurrents chiral_currents(const WeylPair& pair) {
  const auto& s = pauli();
  ChiralCurrents out;
  out.X(0) = pair.xi.squaredNorm();
  out.Y(0) = pair.eta.squaredNorm();
  for (int k = 0; k < 3; ++k) {
    out.X(k + 1) = -std::real((pair.xi.adjoint() * s[k] * pair.xi)(0));
    out.Y(k + 1) = std::real((pair.eta.adjoint() * s[k] * pair.eta)(0));
  }
  return out;
}

std::pair<double, double> omega_from_weyl(const WeylPair& pair) {
  const cplx xe = pair.xi.dot(pair.eta);
  return {2.0 * std::real(xe), -2.0 * std::imag(xe)};
}

std::pair<double, double> chiral_rotate(double omega1, double omega2,
                                        double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {c * omega1 - s * omega2, s * omega1 + c * omega2};
}

Spinor4 chiral_gauge_spinor(const Spinor4& psi, double theta) {
  const auto& gb = gamma_basis();
  // exp(i gamma5 t/2) = cos(t/2) I + i sin(t/2) gamma5, since gamma5^2 = I.
  const Mat4 op = std::cos(theta / 2) * Mat4::Identity() +
                  I * std::sin(theta / 2) * gb.gamma[5];
  return op * psi;
}

}  // namespace monopole::clifford
