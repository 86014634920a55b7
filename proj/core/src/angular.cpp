#include "monopole/angular.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace monopole::angular {

namespace {

// Fornberg weights for the first derivative at z over arbitrary nodes.
Eigen::VectorXd fornberg_first(double z, const Eigen::VectorXd& x) {
  const int n = static_cast<int>(x.size());
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, 2);
  double c1 = 1.0;
  double c4 = x(0) - z;
  c(0, 0) = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, 1);
    double c2 = 1.0;
    double c5 = c4;
    c4 = x(i) - z;
    for (int j = 0; j < i; ++j) {
      const double c3 = x(i) - x(j);
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c(i, k) = c1 * (k * c(i - 1, k - 1) - c5 * c(i - 1, k)) / c2;
        c(i, 0) = -c1 * c5 * c(i - 1, 0) / c2;
      }
      for (int k = mn; k >= 1; --k) c(j, k) = (c4 * c(j, k) - k * c(j, k - 1)) / c3;
      c(j, 0) = c4 * c(j, 0) / c3;
    }
    c1 = c2;
  }
  return c.col(1);
}

void check_same_grid(const AngularFunction& a, const AngularFunction& b) {
  if (a.grid != b.grid)
    throw std::invalid_argument("angular functions live on different grids");
}

}  // namespace

std::shared_ptr<const ThetaGrid> ThetaGrid::gauss(int n, int stencil) {
  if (n < 4) throw std::invalid_argument("grid needs at least 4 nodes");
  stencil = std::min(stencil, n);

  auto grid = std::make_shared<ThetaGrid>();
  grid->n = n;
  grid->theta.resize(n);
  grid->weight.resize(n);

  for (int i = 0; i < n; ++i) {
    // Newton iteration for the i-th Legendre root, largest root first so
    // theta comes out increasing.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    grid->theta(i) = std::acos(x);
    grid->weight(i) = 2.0 / ((1.0 - x * x) * dp * dp);
  }

  grid->d_theta = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const int lo = std::clamp(i - stencil / 2, 0, n - stencil);
    const Eigen::VectorXd w =
        fornberg_first(grid->theta(i), grid->theta.segment(lo, stencil));
    grid->d_theta.row(i).segment(lo, stencil) = w.transpose();
  }
  return grid;
}

Eigen::VectorXcd& AngularFunction::mode(int two_m) {
  auto it = modes.find(two_m);
  if (it == modes.end())
    it = modes.emplace(two_m, Eigen::VectorXcd::Zero(grid->n)).first;
  return it->second;
}

cplx AngularFunction::eval(double theta_val, double phi) const {
  int best = 0;
  double dist = std::abs(grid->theta(0) - theta_val);
  for (int i = 1; i < grid->n; ++i) {
    const double d = std::abs(grid->theta(i) - theta_val);
    if (d < dist) {
      dist = d;
      best = i;
    }
  }
  cplx out = 0.0;
  for (const auto& [two_m, h] : modes)
    out += h(best) * std::exp(cplx(0.0, 0.5 * two_m * phi));
  return out;
}

double AngularFunction::norm() const {
  return std::sqrt(std::abs(inner(*this, *this)));
}

AngularFunction operator+(const AngularFunction& a, const AngularFunction& b) {
  check_same_grid(a, b);
  AngularFunction out = a;
  for (const auto& [two_m, h] : b.modes) out.mode(two_m) += h;
  return out;
}

AngularFunction operator-(const AngularFunction& a, const AngularFunction& b) {
  check_same_grid(a, b);
  AngularFunction out = a;
  for (const auto& [two_m, h] : b.modes) out.mode(two_m) -= h;
  return out;
}

AngularFunction operator*(cplx c, const AngularFunction& a) {
  AngularFunction out = a;
  for (auto& [two_m, h] : out.modes) h *= c;
  return out;
}

cplx inner(const AngularFunction& f, const AngularFunction& g) {
  check_same_grid(f, g);
  cplx acc = 0.0;
  for (const auto& [two_m, hf] : f.modes) {
    const auto it = g.modes.find(two_m);
    if (it == g.modes.end()) continue;
    for (int i = 0; i < f.grid->n; ++i)
      acc += 0.5 * f.grid->weight(i) * std::conj(hf(i)) * it->second(i);
  }
  return acc;
}

namespace {

enum class Ladder { plus, minus };

AngularFunction apply_ladder(const AngularFunction& f, double D, Ladder which) {
  const auto& g = *f.grid;
  AngularFunction out(f.grid);
  const double sgn = (which == Ladder::plus) ? 1.0 : -1.0;
  for (const auto& [two_m, h] : f.modes) {
    const double m = 0.5 * two_m;
    const Eigen::VectorXcd dh = g.d_theta * h;
    Eigen::VectorXcd& o = out.mode(two_m + (which == Ladder::plus ? 2 : -2));
    for (int i = 0; i < g.n; ++i) {
      const double th = g.theta(i);
      const double s = std::sin(th);
      o(i) += (-m * std::cos(th) / s + D / s) * h(i) + sgn * dh(i);
    }
  }
  return out;
}

}  // namespace

AngularFunction lambda_plus(const AngularFunction& f, double D) {
  return apply_ladder(f, D, Ladder::plus);
}

AngularFunction lambda_minus(const AngularFunction& f, double D) {
  return apply_ladder(f, D, Ladder::minus);
}

AngularFunction lambda_3(const AngularFunction& f) {
  AngularFunction out(f.grid);
  for (const auto& [two_m, h] : f.modes) out.mode(two_m) = 0.5 * two_m * h;
  return out;
}

AngularFunction lambda_squared(const AngularFunction& f, double D) {
  AngularFunction out(f.grid);
  for (const auto& [two_m, h] : f.modes)
    out.mode(two_m) = 0.25 * two_m * two_m * h;
  const AngularFunction pm = lambda_plus(lambda_minus(f, D), D);
  const AngularFunction mp = lambda_minus(lambda_plus(f, D), D);
  return out + cplx(0.5) * (pm + mp);
}

double wigner_d(int two_j, int two_mp, int two_m, double beta) {
  if ((two_j - two_mp) % 2 != 0 || (two_j - two_m) % 2 != 0 ||
      std::abs(two_mp) > two_j || std::abs(two_m) > two_j)
    throw std::invalid_argument("bad (j, m', m) triple");

  const int jpm = (two_j + two_m) / 2, jmm = (two_j - two_m) / 2;
  const int jpp = (two_j + two_mp) / 2, jmp = (two_j - two_mp) / 2;
  const int dm = (two_mp - two_m) / 2;

  const double logpre = 0.5 * (std::lgamma(jpp + 1.0) + std::lgamma(jmp + 1.0) +
                               std::lgamma(jpm + 1.0) + std::lgamma(jmm + 1.0));
  const double c = std::cos(0.5 * beta);
  const double s = std::sin(0.5 * beta);

  double sum = 0.0;
  const int s_lo = std::max(0, -dm);
  const int s_hi = std::min(jpm, jmp);
  for (int k = s_lo; k <= s_hi; ++k) {
    const double logden = std::lgamma(jpm - k + 1.0) + std::lgamma(k + 1.0) +
                          std::lgamma(dm + k + 1.0) + std::lgamma(jmp - k + 1.0);
    const int cpow = jpm + jmp - 2 * k;  // 2j + m - m' - 2k
    const int spow = dm + 2 * k;
    double term = std::exp(logpre - logden);
    term *= std::pow(c, cpow) * std::pow(s, spow);
    if ((dm + k) % 2 != 0) term = -term;
    sum += term;
  }
  return sum;
}

bool dirac_condition(int two_j, int two_mp) {
  return two_j >= 0 && (two_j - two_mp) % 2 == 0 && std::abs(two_mp) <= two_j;
}

std::vector<double> admissible_pole_indices(int two_j) {
  if (two_j < 0) throw std::invalid_argument("negative spin");
  std::vector<double> out;
  for (int two_mp = -two_j; two_mp <= two_j; two_mp += 2)
    out.push_back(0.5 * two_mp);
  return out;
}

AngularFunction monopole_harmonic(const std::shared_ptr<const ThetaGrid>& grid,
                                  int two_j, int two_mp, int two_m) {
  if (!dirac_condition(two_j, two_mp) || !dirac_condition(two_j, two_m))
    throw std::invalid_argument("indices violate the quantization condition");
  if (grid->n < two_j + 2)
    throw std::invalid_argument("grid too coarse for this spin");
  AngularFunction out(grid);
  Eigen::VectorXcd& h = out.mode(two_m);
  const double scale = std::sqrt(two_j + 1.0);
  const int k = ((two_mp - two_m) / 2 % 4 + 4) % 4;
  static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int i = 0; i < grid->n; ++i)
    h(i) = scale * wigner_d(two_j, two_mp, two_m, grid->theta(i)) * ipow[k];
  return out;
}

double eigen_residual(const AngularFunction& f, int two_j, double D) {
  const double j = 0.5 * two_j;
  const AngularFunction r = lambda_squared(f, D) - cplx(j * (j + 1.0)) * f;
  const double nf = f.norm();
  if (nf == 0.0) throw std::invalid_argument("zero function");
  return r.norm() / nf;
}

std::pair<double, double> eigen_residuals(const AngularFunction& f, int two_j,
                                          int two_m, double D) {
  const double nf = f.norm();
  if (nf == 0.0) throw std::invalid_argument("zero function");
  const AngularFunction r3 = lambda_3(f) - cplx(0.5 * two_m) * f;
  return {eigen_residual(f, two_j, D), r3.norm() / nf};
}

Eigen::MatrixXcd gram(const std::vector<AngularFunction>& fs) {
  const int n = static_cast<int>(fs.size());
  Eigen::MatrixXcd G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = inner(fs[i], fs[j]);
  return G;
}

Eigen::MatrixXcd gram_lifted(
    const std::vector<std::pair<int, AngularFunction>>& fs) {
  const int n = static_cast<int>(fs.size());
  Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (fs[i].first == fs[j].first)
        G(i, j) = inner(fs[i].second, fs[j].second);
  return G;
}

SpinorAngularFunction total_j_plus(const SpinorAngularFunction& f, double D) {
  SpinorAngularFunction out;
  out.up = lambda_plus(f.up, D) + f.down;
  out.down = lambda_plus(f.down, D);
  return out;
}

SpinorAngularFunction total_j_minus(const SpinorAngularFunction& f, double D) {
  SpinorAngularFunction out;
  out.up = lambda_minus(f.up, D);
  out.down = lambda_minus(f.down, D) + f.up;
  return out;
}

SpinorAngularFunction total_j_3(const SpinorAngularFunction& f) {
  SpinorAngularFunction out;
  out.up = lambda_3(f.up) + cplx(0.5) * f.up;
  out.down = lambda_3(f.down) - cplx(0.5) * f.down;
  return out;
}

SpinorAngularFunction total_j_squared(const SpinorAngularFunction& f, double D) {
  const SpinorAngularFunction z = total_j_3(total_j_3(f));
  const SpinorAngularFunction pm = total_j_plus(total_j_minus(f, D), D);
  const SpinorAngularFunction mp = total_j_minus(total_j_plus(f, D), D);
  SpinorAngularFunction out;
  out.up = z.up + cplx(0.5) * (pm.up + mp.up);
  out.down = z.down + cplx(0.5) * (pm.down + mp.down);
  return out;
}

cplx spinor_inner(const SpinorAngularFunction& f, const SpinorAngularFunction& g) {
  return inner(f.up, g.up) + inner(f.down, g.down);
}

double spinor_norm(const SpinorAngularFunction& f) {
  return std::sqrt(std::abs(spinor_inner(f, f)));
}

}  // namespace monopole::angular
