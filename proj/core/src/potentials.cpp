#include "monopole/potentials.hpp"

#include <cmath>

namespace monopole::potentials {

namespace {

void require_off_string(const Vec3& p) {
  const double rho2 = p.x() * p.x() + p.y() * p.y();
  if (p.z() <= 0.0 && std::sqrt(rho2) < kSingularTube)
    throw SingularPoint("point on the Dirac string (negative z-axis)");
  if (p.norm() < kSingularTube)
    throw SingularPoint("point at the Coulomb center");
}

void require_off_axis(const Vec3& p) {
  if (std::hypot(p.x(), p.y()) < kSingularTube)
    throw SingularPoint("point on the z-axis");
}

}  // namespace

Vec3 dirac_string_potential(const Vec3& p, double e) {
  require_off_string(p);
  const double r = p.norm();
  const double denom = r * (r + p.z());
  return Vec3(-e * p.y() / denom, e * p.x() / denom, 0.0);
}

Vec3 axial_gauge_potential(const Vec3& p, double e) {
  require_off_axis(p);
  const double r = p.norm();
  const double rho2 = p.x() * p.x() + p.y() * p.y();
  return Vec3(e * p.y() * p.z() / (r * rho2), -e * p.x() * p.z() / (r * rho2),
              0.0);
}

double ScalarGauge::value(const Vec3& p, double t) const {
  double v = c0 + at * t + a.dot(p);
  for (const auto& m : modes)
    v += m.amp * std::cos(m.omega * t - m.k.dot(p) + m.phase);
  return v;
}

double ScalarGauge::dt(const Vec3& p, double t) const {
  double v = at;
  for (const auto& m : modes)
    v += -m.amp * m.omega * std::sin(m.omega * t - m.k.dot(p) + m.phase);
  return v;
}

Vec3 ScalarGauge::grad(const Vec3& p, double t) const {
  Vec3 v = a;
  for (const auto& m : modes)
    v += m.amp * std::sin(m.omega * t - m.k.dot(p) + m.phase) * m.k;
  return v;
}

Vec3 ScalarGauge::grad_dt(const Vec3& p, double t) const {
  Vec3 v = Vec3::Zero();
  for (const auto& m : modes)
    v += m.amp * m.omega * std::cos(m.omega * t - m.k.dot(p) + m.phase) * m.k;
  return v;
}

AxialPotential::Eval AxialPotential::eval(const Vec3& p, double t) const {
  Eval out;
  for (const auto& term : terms) {
    switch (term.kind) {
      case Term::Kind::dirac_string:
        out.B += dirac_string_potential(p, term.e);
        out.curlB += term.e * p / std::pow(p.norm(), 3);
        break;
      case Term::Kind::axial_coulomb:
        out.B += axial_gauge_potential(p, term.e);
        out.curlB += term.e * p / std::pow(p.norm(), 3);
        break;
      case Term::Kind::constant:
        out.W += term.w0;
        out.B += term.b0;
        break;
      case Term::Kind::linear_w:
        out.W += term.wg.dot(p);
        out.gradW += term.wg;
        break;
      case Term::Kind::oscillating_b:
        out.B += term.b0 * std::sin(term.omega * t);
        out.dBdt += term.b0 * term.omega * std::cos(term.omega * t);
        break;
      case Term::Kind::gauge:
        out.W += term.phi.dt(p, t);
        out.B -= term.phi.grad(p, t);
        out.gradW += term.phi.grad_dt(p, t);
        out.dBdt -= term.phi.grad_dt(p, t);
        break;
    }
  }
  return out;
}

bool AxialPotential::singular_at(const Vec3& p) const {
  for (const auto& term : terms) {
    if (term.kind == Term::Kind::dirac_string) {
      if (p.norm() < kSingularTube) return true;
      if (p.z() <= 0.0 && std::hypot(p.x(), p.y()) < kSingularTube)
        return true;
    }
    if (term.kind == Term::Kind::axial_coulomb &&
        std::hypot(p.x(), p.y()) < kSingularTube)
      return true;
  }
  return false;
}

std::string AxialPotential::singular_description() const {
  std::string out;
  for (const auto& term : terms) {
    if (term.kind == Term::Kind::dirac_string)
      out += "negative z-axis incl. origin; ";
    if (term.kind == Term::Kind::axial_coulomb) out += "z-axis; ";
  }
  if (out.empty()) out = "none";
  return out;
}

AxialPotential AxialPotential::coulomb_axial(double e) {
  AxialPotential pot;
  Term t;
  t.kind = Term::Kind::axial_coulomb;
  t.e = e;
  pot.terms.push_back(t);
  return pot;
}

AxialPotential AxialPotential::coulomb_string(double e) {
  AxialPotential pot;
  Term t;
  t.kind = Term::Kind::dirac_string;
  t.e = e;
  pot.terms.push_back(t);
  return pot;
}

AxialPotential AxialPotential::uniform(double W0, const Vec3& B0) {
  AxialPotential pot;
  Term t;
  t.kind = Term::Kind::constant;
  t.w0 = W0;
  t.b0 = B0;
  pot.terms.push_back(t);
  return pot;
}

void AxialPotential::add_gauge(const ScalarGauge& phi) {
  Term t;
  t.kind = Term::Kind::gauge;
  t.phi = phi;
  terms.push_back(t);
}

namespace {
json vec_to_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }
Vec3 vec_from_json(const json& j) { return Vec3(j.at(0), j.at(1), j.at(2)); }

const char* kind_name(AxialPotential::Term::Kind k) {
  using K = AxialPotential::Term::Kind;
  switch (k) {
    case K::dirac_string: return "dirac_string";
    case K::axial_coulomb: return "axial_coulomb";
    case K::constant: return "constant";
    case K::linear_w: return "linear_w";
    case K::oscillating_b: return "oscillating_b";
    case K::gauge: return "gauge";
  }
  return "?";
}
}  // namespace

json AxialPotential::to_json() const {
  json arr = json::array();
  for (const auto& t : terms) {
    json jt{{"kind", kind_name(t.kind)}};
    switch (t.kind) {
      case Term::Kind::dirac_string:
      case Term::Kind::axial_coulomb:
        jt["e"] = t.e;
        break;
      case Term::Kind::constant:
        jt["W0"] = t.w0;
        jt["B0"] = vec_to_json(t.b0);
        break;
      case Term::Kind::linear_w:
        jt["grad"] = vec_to_json(t.wg);
        break;
      case Term::Kind::oscillating_b:
        jt["B0"] = vec_to_json(t.b0);
        jt["omega"] = t.omega;
        break;
      case Term::Kind::gauge: {
        json jp{{"c0", t.phi.c0}, {"at", t.phi.at}, {"a", vec_to_json(t.phi.a)}};
        json jm = json::array();
        for (const auto& m : t.phi.modes)
          jm.push_back({{"amp", m.amp},
                        {"omega", m.omega},
                        {"k", vec_to_json(m.k)},
                        {"phase", m.phase}});
        jp["modes"] = jm;
        jt["phi"] = jp;
        break;
      }
    }
    arr.push_back(jt);
  }
  return json{{"type", "axial_potential"},
              {"terms", arr},
              {"singular_set", singular_description()}};
}

AxialPotential AxialPotential::from_json(const json& j) {
  AxialPotential pot;
  for (const auto& jt : j.at("terms")) {
    Term t;
    const std::string kind = jt.at("kind");
    if (kind == "dirac_string") {
      t.kind = Term::Kind::dirac_string;
      t.e = jt.at("e");
    } else if (kind == "axial_coulomb") {
      t.kind = Term::Kind::axial_coulomb;
      t.e = jt.at("e");
    } else if (kind == "constant") {
      t.kind = Term::Kind::constant;
      t.w0 = jt.at("W0");
      t.b0 = vec_from_json(jt.at("B0"));
    } else if (kind == "linear_w") {
      t.kind = Term::Kind::linear_w;
      t.wg = vec_from_json(jt.at("grad"));
    } else if (kind == "oscillating_b") {
      t.kind = Term::Kind::oscillating_b;
      t.b0 = vec_from_json(jt.at("B0"));
      t.omega = jt.at("omega");
    } else if (kind == "gauge") {
      t.kind = Term::Kind::gauge;
      const json& jp = jt.at("phi");
      t.phi.c0 = jp.at("c0");
      t.phi.at = jp.at("at");
      t.phi.a = vec_from_json(jp.at("a"));
      for (const auto& jm : jp.at("modes")) {
        ScalarGauge::Mode m;
        m.amp = jm.at("amp");
        m.omega = jm.at("omega");
        m.k = vec_from_json(jm.at("k"));
        m.phase = jm.at("phase");
        t.phi.modes.push_back(m);
      }
    } else {
      throw std::runtime_error("unknown axial potential term kind: " + kind);
    }
    pot.terms.push_back(t);
  }
  return pot;
}

EMFields fields_from_potential(const AxialPotential& pot, const Vec3& p,
                               double t) {
  if (pot.singular_at(p))
    throw SingularPoint("field evaluation inside singular set");
  const auto ev = pot.eval(p, t);
  EMFields f;
  f.E = ev.curlB;
  f.H = ev.gradW + ev.dBdt;
  return f;
}

// ---------------------------------------------------------------------------

EMState::Eval EMState::eval(const Vec3& p, double t) const {
  Eval s{};
  s.E = s.H = s.curlE = s.curlH = s.dEdt = s.dHdt = s.J = s.K = Vec3::Zero();
  s.divE = s.divH = s.rho_e = s.mu_m = 0.0;

  for (const auto& term : terms) {
    switch (term.kind) {
      case Term::Kind::vacuum_plane_wave: {
        const double w = term.k.norm();
        const Vec3 khat = term.k / w;
        const Vec3 hpol = khat.cross(term.pol);
        const double ph = term.k.dot(p) - w * t;
        const double c = std::cos(ph), sn = std::sin(ph);
        s.E += term.pol * c;
        s.H += hpol * c;
        s.curlE += (-sn) * term.k.cross(term.pol);
        s.curlH += (-sn) * term.k.cross(hpol);
        s.dEdt += term.pol * w * sn;
        s.dHdt += hpol * w * sn;
        s.divE += -sn * term.k.dot(term.pol);
        s.divH += -sn * term.k.dot(hpol);
        break;
      }
      case Term::Kind::coulomb_electric: {
        if (p.norm() < kSingularTube)
          throw SingularPoint("Coulomb center");
        s.E += term.charge * p / std::pow(p.norm(), 3);
        break;  // div and curl vanish off the origin
      }
      case Term::Kind::coulomb_magnetic: {
        if (p.norm() < kSingularTube)
          throw SingularPoint("Coulomb center");
        s.H += term.charge * p / std::pow(p.norm(), 3);
        break;
      }
      case Term::Kind::uniform:
        s.E += term.E0;
        s.H += term.H0;
        break;
    }
  }

  // Duality rotation mixes every (electric, magnetic) pair the same way.
  const double c = std::cos(duality_gamma), sn = std::sin(duality_gamma);
  auto rot = [&](Vec3& e, Vec3& h) {
    const Vec3 e2 = c * e + sn * h;
    const Vec3 h2 = -sn * e + c * h;
    e = e2;
    h = h2;
  };
  rot(s.E, s.H);
  rot(s.curlE, s.curlH);
  rot(s.dEdt, s.dHdt);
  rot(s.J, s.K);
  const double re2 = c * s.rho_e + sn * s.mu_m;
  const double mu2 = -sn * s.rho_e + c * s.mu_m;
  s.rho_e = re2;
  s.mu_m = mu2;
  const double de2 = c * s.divE + sn * s.divH;
  const double dh2 = -sn * s.divE + c * s.divH;
  s.divE = de2;
  s.divH = dh2;
  return s;
}

bool EMState::singular_at(const Vec3& p) const {
  for (const auto& term : terms)
    if ((term.kind == Term::Kind::coulomb_electric ||
         term.kind == Term::Kind::coulomb_magnetic) &&
        p.norm() < kSingularTube)
      return true;
  return false;
}

json EMState::to_json() const {
  json arr = json::array();
  for (const auto& t : terms) {
    switch (t.kind) {
      case Term::Kind::vacuum_plane_wave:
        arr.push_back({{"kind", "vacuum_plane_wave"},
                       {"pol", vec_to_json(t.pol)},
                       {"k", vec_to_json(t.k)}});
        break;
      case Term::Kind::coulomb_electric:
        arr.push_back({{"kind", "coulomb_electric"}, {"charge", t.charge},
                       {"singular_set", "origin"}});
        break;
      case Term::Kind::coulomb_magnetic:
        arr.push_back({{"kind", "coulomb_magnetic"}, {"charge", t.charge},
                       {"singular_set", "origin"}});
        break;
      case Term::Kind::uniform:
        arr.push_back({{"kind", "uniform"},
                       {"E0", vec_to_json(t.E0)},
                       {"H0", vec_to_json(t.H0)}});
        break;
    }
  }
  return json{{"type", "em_state"},
              {"duality_gamma", duality_gamma},
              {"terms", arr}};
}

EMState EMState::from_json(const json& j) {
  EMState s;
  s.duality_gamma = j.value("duality_gamma", 0.0);
  for (const auto& jt : j.at("terms")) {
    Term t;
    const std::string kind = jt.at("kind");
    if (kind == "vacuum_plane_wave") {
      t.kind = Term::Kind::vacuum_plane_wave;
      t.pol = vec_from_json(jt.at("pol"));
      t.k = vec_from_json(jt.at("k"));
    } else if (kind == "coulomb_electric") {
      t.kind = Term::Kind::coulomb_electric;
      t.charge = jt.at("charge");
    } else if (kind == "coulomb_magnetic") {
      t.kind = Term::Kind::coulomb_magnetic;
      t.charge = jt.at("charge");
    } else if (kind == "uniform") {
      t.kind = Term::Kind::uniform;
      t.E0 = vec_from_json(jt.at("E0"));
      t.H0 = vec_from_json(jt.at("H0"));
    } else {
      throw std::runtime_error("unknown em term kind: " + kind);
    }
    s.terms.push_back(t);
  }
  return s;
}

EMState duality_rotate(const EMState& state, double gamma) {
  EMState out = state;
  out.duality_gamma += gamma;
  return out;
}

double maxwell_residual(const EMState& state,
                        const std::vector<FourPoint>& points) {
  constexpr double fourpi = 4.0 * M_PI;
  double worst = 0.0;
  for (const auto& pt : points) {
    if (state.singular_at(pt.r))
      throw SingularPoint("maxwell_residual point inside singular set");
    const auto s = state.eval(pt.r, pt.t);
    const Vec3 r1 = s.curlH - s.dEdt - fourpi * s.J;
    const Vec3 r2 = -s.curlE - s.dHdt - fourpi * s.K;
    const double r3 = s.divE - fourpi * s.rho_e;
    const double r4 = s.divH - fourpi * s.mu_m;
    worst = std::max({worst, r1.lpNorm<Eigen::Infinity>(),
                      r2.lpNorm<Eigen::Infinity>(), std::abs(r3),
                      std::abs(r4)});
  }
  return worst;
}

}  // namespace monopole::potentials
