#include "dissipa/models.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace dissipa {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::domain_error("model parameters: " + what);
}

/// Accumulates L^alpha entries; absent indices stay zero.
class SystemBuilder {
 public:
  SystemBuilder(int n, int d) : n_(n), d_(d) {}

  Matrix& at(const MultiIndex& alpha) {
    auto it = coeffs_.find(alpha);
    if (it == coeffs_.end()) it = coeffs_.emplace(alpha, Matrix::Zero(n_, n_)).first;
    return it->second;
  }

  /// Adds L^alpha contributions for a third-order term c * |xi|^2 xi_j at
  /// entry (row, col) of the symbol (sign convention of the right-hand side:
  /// the stored coefficient is -c).
  void korteweg_column(int j, int row, int col, double c) {
    at(MultiIndex::unit(d_, j, 3))(row, col) -= c;
    for (int i = 0; i < d_; ++i) {
      if (i == j) continue;
      std::vector<int> e(static_cast<std::size_t>(d_), 0);
      e[static_cast<std::size_t>(j)] = 1;
      e[static_cast<std::size_t>(i)] = 2;
      at(MultiIndex(e))(row, col) -= c;
    }
  }

  CoefficientSystem finish(Matrix mass) { return {n_, d_, std::move(coeffs_), std::move(mass)}; }
  CoefficientSystem finish() { return {n_, d_, std::move(coeffs_)}; }

 private:
  int n_, d_;
  std::map<MultiIndex, Matrix> coeffs_;
};

Vector resized_velocity(const Vector& u, int d) {
  if (u.size() == 0) return Vector::Zero(d);
  if (u.size() != d) throw std::domain_error("model parameters: velocity dimension mismatch");
  return u;
}

}  // namespace

// ---------------------------------------------------------------------------
// NSK 2D
// ---------------------------------------------------------------------------

ModelBundle build_nsk2d(const NskParams& params) {
  require(params.rho > 0.0, "rho > 0");
  require(params.p_rho > 0.0, "p_rho > 0");
  require(params.capillarity > 0.0, "capillarity > 0");
  require(params.nu > 0.0, "nu > 0");
  require(2.0 * params.nu + params.lambda_visc > 0.0, "2 nu + lambda_visc > 0");
  const double rho = params.rho, pr = params.p_rho, k = params.capillarity;
  const double nu = params.nu, la = params.lambda_visc;
  const Vector u = resized_velocity(params.u, 2);

  SystemBuilder b(3, 2);
  // Convective blocks A^1, A^2.
  for (int j = 0; j < 2; ++j) {
    Matrix& a = b.at(MultiIndex::unit(2, j));
    a(0, 0) = u[j];
    a(0, 1 + j) = rho;
    a(1 + j, 0) = pr;
    a(1, 1) = rho * u[j];
    a(2, 2) = rho * u[j];
  }
  // Viscous blocks: symbol nu |xi|^2 I + (nu+la) xi (x) xi on the velocity part.
  {
    Matrix& m20 = b.at(MultiIndex({2, 0}));
    m20(1, 1) -= 2.0 * nu + la;
    m20(2, 2) -= nu;
    Matrix& m02 = b.at(MultiIndex({0, 2}));
    m02(1, 1) -= nu;
    m02(2, 2) -= 2.0 * nu + la;
    Matrix& m11 = b.at(MultiIndex({1, 1}));
    m11(1, 2) -= nu + la;
    m11(2, 1) -= nu + la;
  }
  // Korteweg third-order column: k rho |xi|^2 xi_j at (u_j row, rho column).
  b.korteweg_column(0, 1, 0, k * rho);
  b.korteweg_column(1, 2, 0, k * rho);

  Matrix mass = Vector{{1.0, rho, rho}}.asDiagonal();

  ModelBundle out{"nsk2d", b.finish(std::move(mass)), std::nullopt, nullptr, {}};
  const auto beta = [pr, k, rho](double r) { return pr + k * rho * r * r; };
  out.symmetrizer = SymmetrizerFn{
      [beta, rho](const FrequencyPoint& p) {
        return Matrix(Vector{{beta(p.radius) / rho, 1.0, 1.0}}.asDiagonal());
      },
      "nsk2d beta(xi)/rho symbol symmetrizer", false};
  out.reference_compensator = [beta, rho, nu, la](const FrequencyPoint& p) {
    const double f = (2.0 * nu + la) / (4.0 * std::sqrt(beta(p.radius)) * rho);
    Matrix k_s = Matrix::Zero(3, 3);
    k_s(0, 1) = f * p.direction[0];
    k_s(0, 2) = f * p.direction[1];
    k_s(1, 0) = -k_s(0, 1);
    k_s(2, 0) = -k_s(0, 2);
    return k_s;
  };
  out.expected = {true, std::make_pair(1, 0), Feasibility::Infeasible};
  return out;
}

// ---------------------------------------------------------------------------
// NSFK 3D / EFK (EFK = inviscid NSFK; shared assembly)
// ---------------------------------------------------------------------------

namespace {

ModelBundle build_fourier_korteweg(int d, double rho, double theta, double pr, double pt,
                                   double et, double nu, double la, double k, double alpha,
                                   const Vector& uvec, bool viscous) {
  require(rho > 0.0, "rho > 0");
  require(theta > 0.0, "theta > 0");
  require(pr > 0.0, "p_rho > 0");
  require(pt > 0.0, "p_theta > 0");
  require(et > 0.0, "e_theta > 0");
  require(k > 0.0, "capillarity > 0");
  require(alpha > 0.0, "alpha > 0");
  if (viscous) {
    require(nu > 0.0, "nu > 0");
    require(2.0 * nu + la > 0.0, "2 nu + lambda_visc > 0");
  }

  const int n = d + 2;
  SystemBuilder b(n, d);
  for (int j = 0; j < d; ++j) {
    Matrix& a = b.at(MultiIndex::unit(d, j));
    a(0, 0) = uvec[j];
    a(0, 1 + j) = rho;
    a(1 + j, 0) = pr;
    for (int i = 0; i < d; ++i) a(1 + i, 1 + i) = rho * uvec[j];
    a(1 + j, n - 1) = pt;
    a(n - 1, 1 + j) = theta * pt;
    a(n - 1, n - 1) = rho * et * uvec[j];
  }
  for (int i = 0; i < d; ++i) {
    Matrix& m = b.at(MultiIndex::unit(d, i, 2));
    if (viscous) {
      for (int r = 0; r < d; ++r) m(1 + r, 1 + r) -= nu;
      m(1 + i, 1 + i) -= nu + la;
    }
    m(n - 1, n - 1) -= alpha;
    if (viscous) {
      for (int j = i + 1; j < d; ++j) {
        std::vector<int> e(static_cast<std::size_t>(d), 0);
        e[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(j)] = 1;
        Matrix& mm = b.at(MultiIndex(e));
        mm(1 + i, 1 + j) -= nu + la;
        mm(1 + j, 1 + i) -= nu + la;
      }
    }
  }
  for (int j = 0; j < d; ++j) b.korteweg_column(j, 1 + j, 0, k * rho);

  Vector mass_diag = Vector::Constant(n, rho);
  mass_diag[0] = 1.0;
  mass_diag[n - 1] = rho * et;
  Matrix mass = mass_diag.asDiagonal();

  ModelBundle out{"", b.finish(std::move(mass)), std::nullopt, nullptr, {}};
  const auto beta = [pr, k, rho](double r) { return pr + k * rho * r * r; };
  out.symmetrizer = SymmetrizerFn{
      [beta, rho, theta, n](const FrequencyPoint& p) {
        Vector s = Vector::Ones(n);
        s[0] = beta(p.radius) / rho;
        s[n - 1] = 1.0 / theta;
        return Matrix(s.asDiagonal());
      },
      "beta(xi)/rho Fourier-Korteweg symbol symmetrizer", false};
  return out;
}

}  // namespace

ModelBundle build_nsfk3d(const NsfkParams& params) {
  const Vector u = resized_velocity(params.u, 3);
  ModelBundle out = build_fourier_korteweg(3, params.rho, params.theta, params.p_rho,
                                           params.p_theta, params.e_theta, params.nu,
                                           params.lambda_visc, params.capillarity, params.alpha,
                                           u, /*viscous=*/true);
  out.name = "nsfk3d";
  const double gamma =
      std::sqrt(params.theta) * params.p_theta / (std::sqrt(params.e_theta) * params.rho);
  const double rho = params.rho, pr = params.p_rho, k = params.capillarity;
  const double delta = params.inspection_delta;
  require(delta > 0.0, "inspection_delta > 0");
  // Inspection compensator: a = 1, b = gamma / sqrt(beta), scaled by delta/rho.
  out.reference_compensator = [rho, pr, k, gamma, delta](const FrequencyPoint& p) {
    const double beta = pr + k * rho * p.radius * p.radius;
    const double sb = std::sqrt(beta);
    Matrix k_s = Matrix::Zero(5, 5);
    for (int j = 0; j < 3; ++j) {
      const double w = p.direction[j] * delta / (rho * sb);
      k_s(0, 1 + j) += w;
      k_s(1 + j, 0) -= w;
      k_s(1 + j, 4) += w * gamma / sb;
      k_s(4, 1 + j) -= w * gamma / sb;
    }
    return k_s;
  };
  out.expected = {true, std::make_pair(1, 0), Feasibility::Infeasible};
  return out;
}

ModelBundle build_efk1d(const EfkParams& params) {
  const Vector u = resized_velocity(params.u, 1);
  ModelBundle out =
      build_fourier_korteweg(1, params.rho, params.theta, params.p_rho, params.p_theta,
                             params.e_theta, 0.0, 0.0, params.capillarity, params.alpha, u,
                             /*viscous=*/false);
  out.name = "efk1d";
  const double gamma =
      std::sqrt(params.theta) * params.p_theta / (std::sqrt(params.e_theta) * params.rho);
  const double rho = params.rho, pr = params.p_rho, k = params.capillarity;
  const double alpha = params.alpha, et = params.e_theta;
  // Drazin closed form; odd in the direction omega = +/-1.
  out.reference_compensator = [rho, pr, k, gamma, alpha, et](const FrequencyPoint& p) {
    const double beta = pr + k * rho * p.radius * p.radius;
    const double g2 = gamma * gamma;
    const double c = alpha / (4.0 * (beta + g2) * (beta + g2) * rho * et);
    Matrix k_s = Matrix::Zero(3, 3);
    k_s(0, 1) = c * 3.0 * std::sqrt(beta) * g2;
    k_s(1, 2) = c * gamma * (4.0 * beta + g2);
    k_s(1, 0) = -k_s(0, 1);
    k_s(2, 1) = -k_s(1, 2);
    return Matrix(p.direction[0] * k_s);
  };
  out.expected = {true, std::make_pair(1, 1), Feasibility::Infeasible};
  return out;
}

ModelBundle build_efk_md(int d, const EfkParams& params) {
  require(d >= 2, "efk-md needs d >= 2");
  require(d <= 3, "efk-md supports d <= 3");
  const Vector u = resized_velocity(params.u, d);
  ModelBundle out =
      build_fourier_korteweg(d, params.rho, params.theta, params.p_rho, params.p_theta,
                             params.e_theta, 0.0, 0.0, params.capillarity, params.alpha, u,
                             /*viscous=*/false);
  out.name = "efk-md";
  out.expected = {false, std::nullopt, Feasibility::Infeasible};
  return out;
}

// ---------------------------------------------------------------------------
// DNSF (Levermore-Sun dispersive Navier-Stokes-Fourier)
// ---------------------------------------------------------------------------

ModelBundle build_dnsf(int d, const DnsfParams& params) {
  require(d == 1 || d == 3, "dnsf supports d in {1,3}");
  require(params.rho > 0.0, "rho > 0");
  require(params.theta > 0.0, "theta > 0");
  require(params.mu > 0.0, "mu > 0");
  require(params.alpha > 0.0, "alpha > 0");
  require(params.tau4 > 0.0, "tau4 > 0");
  const double rho = params.rho, theta = params.theta, mu = params.mu, alpha = params.alpha;
  const double tau4 = params.tau4;
  const double tau1 = 2.0 * tau4 / theta;  // tau4 = (theta/2) tau1
  const Vector u = resized_velocity(params.u, d);
  const int n = d + 2;

  SystemBuilder b(n, d);
  for (int j = 0; j < d; ++j) {
    Matrix& a = b.at(MultiIndex::unit(d, j));
    a(0, 0) = u[j];
    a(0, 1 + j) = rho;
    a(1 + j, 0) = theta / rho;
    for (int i = 0; i < d; ++i) a(1 + i, 1 + i) = u[j];
    a(1 + j, n - 1) = 1.0;
    a(n - 1, 1 + j) = (2.0 / 3.0) * theta;
    a(n - 1, n - 1) = u[j];
  }
  for (int i = 0; i < d; ++i) {
    Matrix& m = b.at(MultiIndex::unit(d, i, 2));
    for (int r = 0; r < d; ++r) m(1 + r, 1 + r) -= mu / rho;
    m(1 + i, 1 + i) -= mu / (3.0 * rho);
    m(n - 1, n - 1) -= (2.0 / 3.0) * alpha / rho;
    for (int j = i + 1; j < d; ++j) {
      std::vector<int> e(static_cast<std::size_t>(d), 0);
      e[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(j)] = 1;
      Matrix& mm = b.at(MultiIndex(e));
      mm(1 + i, 1 + j) -= mu / (3.0 * rho);
      mm(1 + j, 1 + i) -= mu / (3.0 * rho);
    }
  }
  for (int j = 0; j < d; ++j) {
    b.korteweg_column(j, 1 + j, n - 1, (2.0 / (3.0 * rho)) * tau1);   // u_j row, theta column
    b.korteweg_column(j, n - 1, 1 + j, (8.0 / (9.0 * rho)) * tau4);   // theta row, u_j column
  }

  ModelBundle out{d == 1 ? "dnsf1d" : "dnsf3d", b.finish(), std::nullopt, nullptr, {}};
  {
    Vector s = Vector::Constant(n, (2.0 / 3.0) * theta);
    s[0] = (2.0 / 3.0) * theta * theta / (rho * rho);
    s[n - 1] = 1.0;
    Matrix sm = s.asDiagonal();
    out.symmetrizer =
        SymmetrizerFn{[sm](const FrequencyPoint&) { return sm; },
                      "dnsf constant Friedrichs symmetrizer", true};
  }
  const double delta = params.inspection_delta;
  require(delta > 0.0, "inspection_delta > 0");
  out.reference_compensator = [rho, theta, tau4, delta, d, n](const FrequencyPoint& p) {
    const double beta2 = (2.0 / 3.0) * theta + (8.0 / (9.0 * rho)) * tau4 * p.radius * p.radius;
    const double beta = std::sqrt(1.5 / theta) * beta2;
    const double a = 1.0 / (beta * beta);
    const double bb = 1.0 / std::pow(beta, 1.5);
    Matrix k_s = Matrix::Zero(n, n);
    for (int j = 0; j < d; ++j) {
      const double w = p.direction[j] * delta;
      k_s(0, 1 + j) += w * a;
      k_s(1 + j, 0) -= w * a;
      k_s(1 + j, n - 1) += w * bb;
      k_s(n - 1, 1 + j) -= w * bb;
    }
    return k_s;
  };
  out.expected = {true, std::make_pair(1, 2), Feasibility::Feasible};
  return out;
}

// ---------------------------------------------------------------------------
// Quantum hydrodynamics
// ---------------------------------------------------------------------------

ModelBundle build_qhd_iso(const QhdIsoParams& params) {
  require(params.n > 0.0, "n > 0");
  require(params.p_n > 0.0, "p_n > 0");
  require(params.mu_int > 0.0, "mu_int > 0");
  require(params.eps > 0.0, "eps > 0");
  require(params.tau > 0.0, "tau > 0");
  const double nb = params.n, pn = params.p_n, mu = params.mu_int, eps = params.eps;
  const double tau = params.tau;

  SystemBuilder b(4, 3);
  b.at(MultiIndex::zero(3)) = Vector{{0.0, 1.0 / tau, 1.0 / tau, 1.0 / tau}}.asDiagonal();
  for (int j = 0; j < 3; ++j) {
    Matrix& a = b.at(MultiIndex::unit(3, j));
    a(0, 1 + j) = nb;
    a(1 + j, 0) = (pn + mu) / nb;
  }
  for (int j = 0; j < 3; ++j) b.korteweg_column(j, 1 + j, 0, eps * eps / (12.0 * nb));

  ModelBundle out{"qhd-iso", b.finish(), std::nullopt, nullptr, {}};
  const auto big_theta = [pn, mu, eps](double r) { return pn + mu + eps * eps * r * r / 12.0; };
  out.symmetrizer = SymmetrizerFn{
      [big_theta, nb](const FrequencyPoint& p) {
        return Matrix(
            Vector{{big_theta(p.radius) / (nb * nb), 1.0, 1.0, 1.0}}.asDiagonal());
      },
      "qhd-iso Theta(xi)/n^2 symbol symmetrizer", false};
  out.reference_compensator = [big_theta, tau](const FrequencyPoint& p) {
    const double f = 1.0 / (6.0 * std::sqrt(big_theta(p.radius)) * tau);
    Matrix k_s = Matrix::Zero(4, 4);
    for (int j = 0; j < 3; ++j) {
      k_s(0, 1 + j) = f * p.direction[j];
      k_s(1 + j, 0) = -f * p.direction[j];
    }
    return k_s;
  };
  out.expected = {true, std::make_pair(1, 1), Feasibility::Infeasible};
  return out;
}

ModelBundle build_qhd_full(const QhdFullParams& params) {
  require(params.n > 0.0, "n > 0");
  require(params.theta0 > 0.0, "theta0 > 0");
  require(params.hbar > 0.0, "hbar > 0");
  require(params.kappa > 0.0, "kappa > 0");
  require(params.tau_p > 0.0, "tau_p > 0");
  require(params.tau_w > 0.0, "tau_w > 0");
  const double nb = params.n, h2 = params.hbar * params.hbar, kap = params.kappa;
  const double g = 1.5 * params.theta0;  // equilibrium g

  SystemBuilder b(5, 3);
  {
    Matrix& l0 = b.at(MultiIndex::zero(3));
    l0 = Matrix::Zero(5, 5);
    for (int j = 0; j < 3; ++j) l0(1 + j, 1 + j) = nb / params.tau_p;
    l0(4, 4) = nb / params.tau_w;
  }
  for (int j = 0; j < 3; ++j) {
    Matrix& a = b.at(MultiIndex::unit(3, j));
    a(0, 1 + j) = nb;
    a(1 + j, 0) = (2.0 / 3.0) * g;
    a(1 + j, 4) = (2.0 / 3.0) * nb;
    a(4, 1 + j) = (2.0 / 3.0) * nb * g;
  }
  for (int i = 0; i < 3; ++i) b.at(MultiIndex::unit(3, i, 2))(4, 4) -= (2.0 / 3.0) * kap;
  for (int j = 0; j < 3; ++j) b.korteweg_column(j, 1 + j, 0, h2 / 18.0);
  // Fourth-order correction: kappa hbar^2/(36 n) |xi|^4 at the (g, n) entry.
  {
    const double c = kap * h2 / (36.0 * nb);
    for (int i = 0; i < 3; ++i) {
      b.at(MultiIndex::unit(3, i, 4))(4, 0) -= c;
      for (int j = i + 1; j < 3; ++j) {
        std::vector<int> e = {0, 0, 0};
        e[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(j)] = 2;
        b.at(MultiIndex(e))(4, 0) -= 2.0 * c;
      }
    }
  }

  Matrix mass = Vector{{1.0, nb, nb, nb, nb}}.asDiagonal();
  ModelBundle out{"qhd-full", b.finish(std::move(mass)), std::nullopt, nullptr, {}};
  out.expected = {std::nullopt, std::nullopt, Feasibility::Infeasible};
  return out;
}

// ---------------------------------------------------------------------------

ModelBundle build_heat1d(double diffusivity) {
  require(diffusivity > 0.0, "diffusivity > 0");
  SystemBuilder b(1, 1);
  b.at(MultiIndex::unit(1, 0, 2))(0, 0) = -diffusivity;
  ModelBundle out{"heat", b.finish(), identity_symmetrizer(1), nullptr, {}};
  out.expected = {true, std::make_pair(1, 0), Feasibility::Feasible};
  return out;
}

std::vector<std::string> model_names() {
  return {"nsk2d", "nsfk3d", "efk1d", "efk-md", "dnsf1d", "dnsf3d", "qhd-iso", "qhd-full",
          "heat"};
}

namespace {

class Overrides {
 public:
  explicit Overrides(const std::map<std::string, double>& kv) : kv_(kv) {}

  double get(const std::string& key, double fallback) {
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    used_.insert(key);
    return it->second;
  }

  void get_velocity(Vector& u, int d) {
    for (int j = 0; j < d; ++j) {
      const std::string key = "u" + std::to_string(j + 1);
      auto it = kv_.find(key);
      if (it != kv_.end()) {
        if (u.size() != d) u = Vector::Zero(d);
        u[j] = it->second;
        used_.insert(key);
      }
    }
  }

  void finish(const std::string& model) const {
    for (const auto& [key, value] : kv_)
      if (!used_.count(key))
        throw std::invalid_argument("unknown parameter '" + key + "' for model " + model);
  }

 private:
  const std::map<std::string, double>& kv_;
  std::set<std::string> used_;
};

}  // namespace

ModelBundle build_by_name(const std::string& name,
                          const std::map<std::string, double>& overrides) {
  Overrides ov(overrides);
  auto done = [&](ModelBundle bundle) {
    ov.finish(name);
    return bundle;
  };
  if (name == "nsk2d") {
    NskParams p;
    p.rho = ov.get("rho", p.rho);
    p.p_rho = ov.get("p_rho", p.p_rho);
    p.capillarity = ov.get("capillarity", p.capillarity);
    p.nu = ov.get("nu", p.nu);
    p.lambda_visc = ov.get("lambda_visc", p.lambda_visc);
    ov.get_velocity(p.u, 2);
    return done(build_nsk2d(p));
  }
  if (name == "nsfk3d") {
    NsfkParams p;
    p.rho = ov.get("rho", p.rho);
    p.theta = ov.get("theta", p.theta);
    p.p_rho = ov.get("p_rho", p.p_rho);
    p.p_theta = ov.get("p_theta", p.p_theta);
    p.e_theta = ov.get("e_theta", p.e_theta);
    p.nu = ov.get("nu", p.nu);
    p.lambda_visc = ov.get("lambda_visc", p.lambda_visc);
    p.capillarity = ov.get("capillarity", p.capillarity);
    p.alpha = ov.get("alpha", p.alpha);
    p.inspection_delta = ov.get("inspection_delta", p.inspection_delta);
    ov.get_velocity(p.u, 3);
    return done(build_nsfk3d(p));
  }
  if (name == "efk1d" || name == "efk-md" || name == "efk2d" || name == "efk3d") {
    EfkParams p;
    p.rho = ov.get("rho", p.rho);
    p.theta = ov.get("theta", p.theta);
    p.p_rho = ov.get("p_rho", p.p_rho);
    p.p_theta = ov.get("p_theta", p.p_theta);
    p.e_theta = ov.get("e_theta", p.e_theta);
    p.capillarity = ov.get("capillarity", p.capillarity);
    p.alpha = ov.get("alpha", p.alpha);
    if (name == "efk1d") {
      ov.get_velocity(p.u, 1);
      return done(build_efk1d(p));
    }
    const int d = name == "efk3d" ? 3 : static_cast<int>(ov.get("d", 2.0));
    ov.get_velocity(p.u, d);
    return done(build_efk_md(d, p));
  }
  if (name == "dnsf1d" || name == "dnsf3d") {
    DnsfParams p;
    p.rho = ov.get("rho", p.rho);
    p.theta = ov.get("theta", p.theta);
    p.mu = ov.get("mu", p.mu);
    p.alpha = ov.get("alpha", p.alpha);
    p.tau4 = ov.get("tau4", p.tau4);
    p.inspection_delta = ov.get("inspection_delta", p.inspection_delta);
    const int d = name == "dnsf1d" ? 1 : 3;
    ov.get_velocity(p.u, d);
    return done(build_dnsf(d, p));
  }
  if (name == "qhd-iso") {
    QhdIsoParams p;
    p.n = ov.get("n", p.n);
    p.p_n = ov.get("p_n", p.p_n);
    p.mu_int = ov.get("mu_int", p.mu_int);
    p.eps = ov.get("eps", p.eps);
    p.tau = ov.get("tau", p.tau);
    return done(build_qhd_iso(p));
  }
  if (name == "qhd-full") {
    QhdFullParams p;
    p.n = ov.get("n", p.n);
    p.theta0 = ov.get("theta0", p.theta0);
    p.hbar = ov.get("hbar", p.hbar);
    p.kappa = ov.get("kappa", p.kappa);
    p.tau_p = ov.get("tau_p", p.tau_p);
    p.tau_w = ov.get("tau_w", p.tau_w);
    return done(build_qhd_full(p));
  }
  if (name == "heat") return done(build_heat1d(ov.get("diffusivity", 1.0)));
  throw std::invalid_argument("unknown model '" + name + "'");
}

}  // namespace dissipa
