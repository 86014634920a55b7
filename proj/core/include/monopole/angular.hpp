#ifndef MONOPOLE_ANGULAR_HPP
#define MONOPOLE_ANGULAR_HPP

#include <map>
#include <memory>
#include <vector>

#include <Eigen/Dense>

// Angular momentum on the sphere in the presence of a pole of index D:
// ladder operators, generalized spherical functions Z^{m'm}_j (the index
// pair may be half-integral), Wigner d-matrices and quadrature tools.
//
// Functions are stored as sums over azimuthal modes e^{i m phi} with the
// theta profile tabulated on Gauss-Legendre nodes in cos(theta); theta
// derivatives use high-order local stencils. Half-integral quantum numbers
// are carried as doubled integers (two_j, two_m, ...).
namespace monopole::angular {

using cplx = std::complex<double>;

struct ThetaGrid {
  int n = 0;
  Eigen::VectorXd theta;    // increasing in (0, pi)
  Eigen::VectorXd weight;   // Gauss-Legendre weights for the cos(theta) measure
  Eigen::MatrixXd d_theta;  // first derivative in theta, local stencils

  // Gauss-Legendre nodes of order n; `stencil` points per derivative row.
  static std::shared_ptr<const ThetaGrid> gauss(int n, int stencil = 17);
};

// Sum over modes h_m(theta) e^{i m phi}, keyed by 2m.
struct AngularFunction {
  std::shared_ptr<const ThetaGrid> grid;
  std::map<int, Eigen::VectorXcd> modes;

  AngularFunction() = default;
  explicit AngularFunction(std::shared_ptr<const ThetaGrid> g) : grid(std::move(g)) {}

  Eigen::VectorXcd& mode(int two_m);
  cplx eval(double theta_val, double phi) const;  // nearest-node lookup in theta
  double norm() const;
};

AngularFunction operator+(const AngularFunction& a, const AngularFunction& b);
AngularFunction operator-(const AngularFunction& a, const AngularFunction& b);
AngularFunction operator*(cplx c, const AngularFunction& a);

// <f, g> = (1/4pi) int conj(f) g sin(theta) dtheta dphi.
cplx inner(const AngularFunction& f, const AngularFunction& g);

// Raising / lowering / z components of the angular operator at pole index D.
AngularFunction lambda_plus(const AngularFunction& f, double D);
AngularFunction lambda_minus(const AngularFunction& f, double D);
AngularFunction lambda_3(const AngularFunction& f);

// Lambda^2 = Lambda3^2 + (Lambda+ Lambda- + Lambda- Lambda+)/2.
AngularFunction lambda_squared(const AngularFunction& f, double D);

// d^j_{m'm}(beta) by the factorial sum, stabilized with log-gamma.
double wigner_d(int two_j, int two_mp, int two_m, double beta);

// True iff m' is an admissible pole index for spin j: same parity as j and
// |m'| <= j (the quantization condition on D = m').
bool dirac_condition(int two_j, int two_mp);

// The admissible pole indices D for spin j: {-j, -j+1, ..., j}, every entry
// a multiple of 1/2.
std::vector<double> admissible_pole_indices(int two_j);

// Z^{m'm}_j = sqrt(2j+1) d^j_{m'm}(theta) e^{i m phi} i^{m'-m}, unit norm
// under inner(). Throws if the index pair is inadmissible.
AngularFunction monopole_harmonic(const std::shared_ptr<const ThetaGrid>& grid,
                                  int two_j, int two_mp, int two_m);

// ||Lambda^2 f - j(j+1) f|| / ||f|| with the pole index D fixed by the caller.
double eigen_residual(const AngularFunction& f, int two_j, double D);

// (Lambda^2, Lambda3) residual pair against eigenvalues j(j+1) and m.
std::pair<double, double> eigen_residuals(const AngularFunction& f, int two_j,
                                          int two_m, double D);

// Gram matrix of a family under inner().
Eigen::MatrixXcd gram(const std::vector<AngularFunction>& fs);

// Gram under the full rotation-group (Haar) measure: each function is
// labelled by its 2m' index, whose chi-phase integrates to a Kronecker
// delta, so entries with different labels vanish exactly.
Eigen::MatrixXcd gram_lifted(
    const std::vector<std::pair<int, AngularFunction>>& fs);

// Two-component function for total J = Lambda + s/2; the up component
// carries azimuthal index m, the down component m+1, so both sit in the
// same J3 = m + 1/2 sector.
struct SpinorAngularFunction {
  AngularFunction up, down;
};

// Sign of the pole term: +D for the xi sector, -D for eta.
SpinorAngularFunction total_j_plus(const SpinorAngularFunction& f, double D);
SpinorAngularFunction total_j_minus(const SpinorAngularFunction& f, double D);
SpinorAngularFunction total_j_3(const SpinorAngularFunction& f);
SpinorAngularFunction total_j_squared(const SpinorAngularFunction& f, double D);

cplx spinor_inner(const SpinorAngularFunction& f, const SpinorAngularFunction& g);
double spinor_norm(const SpinorAngularFunction& f);

}  // namespace monopole::angular

#endif
