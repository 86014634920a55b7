#ifndef MONOPOLE_CLIFFORD_HPP
#define MONOPOLE_CLIFFORD_HPP

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

// Gamma-matrix algebra in the de Broglie representation, the 16-element
// Clifford basis, the Dirac bilinear covariants and the chiral (Weyl)
// decomposition.
//
// Conventions. Internally the index algebra is Euclidean with x4 = ict;
// all public 4-vectors are stored in real (t, x, y, z) order with the
// i-factors resolved, so J(0) = psi^dag psi is the physical density and
// the Lorentz square of a polar vector is v(0)^2 - |v|^2.
namespace monopole::clifford {

using cplx = std::complex<double>;
using Mat4 = Eigen::Matrix4cd;
using Mat2 = Eigen::Matrix2cd;
using Spinor4 = Eigen::Vector4cd;
using Vec4 = Eigen::Vector4d;

// Two 2-component spinors, eigenstates of the charge operator G = g*gamma5:
// xi carries +g, eta carries -g.
struct WeylPair {
  Eigen::Vector2cd xi;
  Eigen::Vector2cd eta;
};

// Pauli matrices s1, s2, s3.
const std::array<Mat2, 3>& pauli();

// Minkowski square v(0)^2 - |v_spatial|^2 of a (t,x,y,z) 4-vector.
double lorentz_square(const Vec4& v);
// Minkowski product a(0)b(0) - a.b.
double lorentz_dot(const Vec4& a, const Vec4& b);

struct GammaBasis {
  // gamma[1..5]; slot 0 unused.
  std::array<Mat4, 6> gamma;
  // The 16 basis elements: I, the 4 gamma_mu, the 6 gamma_[mu nu],
  // the 4 gamma_[lambda mu nu], gamma_5.
  std::array<Mat4, 16> clifford16;
  std::array<std::string, 16> labels;
  // Phase making each element hermitian: Gamma_N^dag = phase_N * Gamma_N.
  std::array<cplx, 16> hermitian_phase;
  // sign_table[mu-1][N]: the sign in gamma_mu Gamma_N gamma_mu = +-Gamma_N.
  std::array<std::array<int, 16>, 4> sign_table;
};

// Builds the basis from the de Broglie representation matrices and fills
// the sign table by explicit multiplication.
const GammaBasis& gamma_basis();

struct Bilinears {
  double omega1 = 0.0;  // scalar, psi-bar psi
  double omega2 = 0.0;  // pseudoscalar
  Vec4 J = Vec4::Zero();        // polar current, J(0) = psi^dag psi
  Vec4 Sigma = Vec4::Zero();    // axial current
  // Antisymmetric rank-2 tensor; row/col 0 is the time index.
  // M(0,k) = psi^dag gamma_k psi, M(k,l) = i psi-bar gamma_k gamma_l psi.
  Eigen::Matrix4d M = Eigen::Matrix4d::Zero();
  double rho = 0.0;             // sqrt(omega1^2 + omega2^2)
  double A = 0.0;               // Yvon-Takabayasi angle, atan2(omega2, omega1)
  bool A_defined = false;       // false when rho == 0
};

Bilinears bilinears(const Spinor4& psi);

// U = U^{-1} = (gamma4 + gamma5)/sqrt(2).
const Mat4& weyl_transform();

WeylPair weyl_split(const Spinor4& psi);
Spinor4 weyl_join(const WeylPair& pair);

// Light-like chiral currents, stored (t,x,y,z):
// X = (xi^dag xi, -xi^dag s xi), Y = (eta^dag eta, +eta^dag s eta).
// J = X + Y, Sigma = X - Y.
struct ChiralCurrents {
  Vec4 X = Vec4::Zero();
  Vec4 Y = Vec4::Zero();
};

ChiralCurrents chiral_currents(const WeylPair& pair);

// (omega1, omega2) recomputed through the Weyl components:
// omega1 = xi^dag eta + eta^dag xi, omega2 = i(xi^dag eta - eta^dag xi).
std::pair<double, double> omega_from_weyl(const WeylPair& pair);

// Rotation by theta in the chiral plane: the bilinear image of the spinor
// gauge psi -> exp(i gamma5 theta/2) psi. Leaves rho fixed, shifts A by theta.
std::pair<double, double> chiral_rotate(double omega1, double omega2,
                                        double theta);

// The spinor-level gauge exp(i gamma5 theta/2).
Spinor4 chiral_gauge_spinor(const Spinor4& psi, double theta);

}  // namespace monopole::clifford

#endif
