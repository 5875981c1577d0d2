#include "dissipa/structure.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "dissipa/denselin.hpp"
#include "dissipa/errors.hpp"

namespace dissipa {

SymmetrizerFn identity_symmetrizer(int n) {
  return SymmetrizerFn{[n](const FrequencyPoint&) { return Matrix::Identity(n, n); },
                       "identity", true};
}

SymmetrizerReport verify_symmetrizer(const CoefficientSystem& sys, const SymmetrizerFn& s,
                                     std::span<const FrequencyPoint> grid) {
  if (grid.empty()) throw std::invalid_argument("verify_symmetrizer: empty grid");
  SymmetrizerReport report;
  report.pass = true;
  report.min_sb_eig = std::numeric_limits<double>::infinity();
  for (const FrequencyPoint& p : grid) {
    SymmetrizerCheck c;
    c.at = p;
    const Matrix sm = s.eval(p);
    const SymbolPair sp = assemble_symbols(sys, p);
    const Matrix sa = sm * sp.a_sym;
    const Matrix sb = sm * sp.b_sym;

    c.s_asymmetry = asymmetry(sm);
    c.s_min_eig = min_eig_sym(sm);
    c.sa_asymmetry = asymmetry(sa);
    c.sb_asymmetry = asymmetry(sb);
    c.sb_min_eig = min_eig_sym(sb);
    if (!sys.mass_is_identity()) c.w_asymmetry = asymmetry(Matrix(sm * sys.mass()));

    c.pass = true;
    if (c.s_asymmetry > 1e-10 * (1.0 + sm.norm())) {
      c.pass = false;
      c.reason = "S not symmetric";
    } else if (!(c.s_min_eig > 0.0)) {
      c.pass = false;
      c.reason = "S not positive definite";
    } else if (c.sa_asymmetry > 1e-10 * (1.0 + sa.norm())) {
      c.pass = false;
      c.reason = "S*A(xi) not symmetric";
    } else if (c.sb_asymmetry > 1e-10 * (1.0 + sb.norm())) {
      c.pass = false;
      c.reason = "S*B(xi) not symmetric";
    } else if (c.sb_min_eig < -1e-10 * (1.0 + sb.norm())) {
      c.pass = false;
      c.reason = "S*B(xi) not positive semi-definite";
    } else if (c.w_asymmetry > 1e-10 * (1.0 + sm.norm() * sys.mass().norm())) {
      c.pass = false;
      c.reason = "S*A0 not symmetric";
    }

    report.max_sa_asymmetry = std::max(report.max_sa_asymmetry, c.sa_asymmetry);
    report.max_sb_asymmetry = std::max(report.max_sb_asymmetry, c.sb_asymmetry);
    report.min_sb_eig = std::min(report.min_sb_eig, c.sb_min_eig);
    if (!c.pass && report.pass) {
      report.pass = false;
      report.first_failure = c;
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

SymmetrizedPair symmetrize(const CoefficientSystem& sys, const SymmetrizerFn& s,
                           const FrequencyPoint& p) {
  const Matrix sm = s.eval(p);
  const SymbolPair sp = assemble_symbols(sys, p);
  const Matrix w = sym_part(Matrix(sm * sys.mass()));
  const Matrix w_sqrt = spd_sqrt(w);
  // W^{-1/2} X W^{-1/2} via two SPD solves.
  const auto conj = [&](const Matrix& x) {
    const Matrix y = w_sqrt.ldlt().solve(x);
    return Matrix(w_sqrt.ldlt().solve(y.transpose()).transpose());
  };
  SymmetrizedPair out;
  out.a_s = sym_part(conj(sm * sp.a_sym));
  out.b_s = sym_part(conj(sm * sp.b_sym));
  out.weight_sqrt = w_sqrt;
  out.at = p;
  return out;
}

CouplingVerdict genuine_coupling(const Matrix& a_s, const Matrix& b_s,
                                 const CouplingTols& tols) {
  CouplingVerdict out;
  const double eps = std::numeric_limits<double>::epsilon();
  const double tol = tols.coupling_tol >= 0.0
                         ? tols.coupling_tol
                         : 16.0 * static_cast<double>(a_s.rows()) * eps * b_s.norm();
  const SymmetricDecomposition dec = eig_symmetric(a_s);
  const SymmetricClusterSet clusters = cluster_projections(dec, tols.cluster_rel_gap);

  Matrix pi = Matrix::Zero(a_s.rows(), a_s.cols());
  for (const auto& c : clusters.clusters) pi += c.projection * b_s * c.projection;
  out.theta_tilde = min_eig_sym(pi);
  out.coupled = out.theta_tilde > tol;
  if (out.coupled) return out;

  // Witness: in some eigenspace of A_S find the direction most annihilated by
  // B_S (smallest singular direction of B_S restricted to the eigenspace).
  double best = std::numeric_limits<double>::infinity();
  Eigen::Index col = 0;
  for (const auto& c : clusters.clusters) {
    const Eigen::Index m = c.multiplicity;
    const Matrix q = dec.vectors.middleCols(col, m);
    col += m;
    Eigen::JacobiSVD<Matrix> svd(Matrix(b_s * q), Eigen::ComputeFullV);
    const Eigen::Index last = svd.singularValues().size() - 1;
    const double sigma = svd.singularValues()[last];
    if (sigma < best) {
      best = sigma;
      CouplingWitness w;
      w.mu = c.representative;
      w.psi = q * svd.matrixV().col(last);
      w.psi /= w.psi.norm();
      out.witness = std::move(w);
    }
  }
  return out;
}

CouplingVerdict genuine_coupling(const SymmetrizedPair& sp, const CouplingTols& tols) {
  return genuine_coupling(sp.a_s, sp.b_s, tols);
}

Matrix pi_projection(const Matrix& a, const Matrix& b, double rel_gap) {
  const SymmetricDecomposition dec = eig_symmetric(a);
  const SymmetricClusterSet clusters = cluster_projections(dec, rel_gap);
  Matrix pi = Matrix::Zero(a.rows(), a.cols());
  for (const auto& c : clusters.clusters) pi += c.projection * b * c.projection;
  return sym_part(pi);
}

CompensatorResult drazin_compensator(const Matrix& a, const Matrix& b, const DrazinTols& tols) {
  const SymmetricDecomposition dec = eig_symmetric(a);
  const SymmetricClusterSet clusters = cluster_projections(dec, tols.cluster_rel_gap);
  const double gap_floor = tols.gap_floor_rel * (1.0 + clusters.diameter);

  const auto& cl = clusters.clusters;
  for (std::size_t i = 0; i < cl.size(); ++i)
    for (std::size_t j = i + 1; j < cl.size(); ++j)
      if (std::abs(cl[i].representative - cl[j].representative) < gap_floor)
        throw ConditioningError("drazin_compensator: cluster gap " +
                                std::to_string(std::abs(cl[i].representative -
                                                        cl[j].representative)) +
                                " below floor " + std::to_string(gap_floor));

  const Eigen::Index n = a.rows();
  Matrix k = Matrix::Zero(n, n);
  Matrix pi = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < cl.size(); ++i) {
    pi += cl[i].projection * b * cl[i].projection;
    for (std::size_t j = 0; j < cl.size(); ++j) {
      if (i == j) continue;
      k += cl[i].projection * b * cl[j].projection /
           (cl[i].representative - cl[j].representative);
    }
  }

  CompensatorResult out;
  out.identity_residual = (b - pi - (a * k - k * a)).norm();
  if (out.identity_residual > 1e-6 * (1.0 + b.norm()))
    throw std::runtime_error("drazin_compensator: commutator identity residual " +
                             std::to_string(out.identity_residual));
  out.k_matrix = std::move(k);
  out.skew_residual = (out.k_matrix + out.k_matrix.transpose()).norm();
  out.theta = min_eig_sym(Matrix(sym_part(Matrix(out.k_matrix * a)) + b));
  return out;
}

CompensatorResult validate_compensator(const Matrix& k, const Matrix& a_s, const Matrix& b_s) {
  CompensatorResult out;
  out.k_matrix = k;
  out.skew_residual = (k + k.transpose()).norm();
  out.theta = min_eig_sym(Matrix(sym_part(Matrix(k * a_s)) + b_s));
  return out;
}

CompensatorResult validate_compensator(const Matrix& k, const Matrix& s, const Matrix& a0,
                                       const Matrix& a, const Matrix& b) {
  CompensatorResult out;
  out.k_matrix = k;
  const Matrix kw = k * s * a0;
  out.skew_residual = (kw + kw.transpose()).norm();
  out.theta = min_eig_sym(Matrix(sym_part(Matrix(k * s * a)) + s * b));
  return out;
}

Matrix lift_compensator(const Matrix& k_s, const Matrix& s, const Matrix& a0) {
  const Matrix w_sqrt = spd_sqrt(sym_part(Matrix(s * a0)));
  return w_sqrt * k_s * w_sqrt.inverse();
}

namespace {

// phi1 + phi2 = 1 on (0, inf); phi1 supported in (0, 1+eps), phi2 in (1, inf),
// joined by a cubic smoothstep on the overlap.
double phi1_profile(double r, double eps) {
  if (r <= 1.0) return 1.0;
  if (r >= 1.0 + eps) return 0.0;
  const double x = (r - 1.0) / eps;
  return 1.0 - x * x * (3.0 - 2.0 * x);
}

}  // namespace

SecondOrderLift second_order_lift(const std::function<Matrix(const Vector&)>& k_omega,
                                  const std::function<Matrix(const Vector&)>& a_omega,
                                  const std::function<Matrix(const Vector&)>& b_omega,
                                  const Matrix& relaxation, std::span<const Vector> directions,
                                  std::span<const double> radii, double c, double eps) {
  if (directions.empty() || radii.empty())
    throw std::invalid_argument("second_order_lift: empty verification grid");
  if (!(eps > 0.0)) throw std::invalid_argument("second_order_lift: eps > 0 required");

  SecondOrderLift out;
  out.sigma_bar = std::numeric_limits<double>::infinity();
  for (const Vector& omega : directions) {
    const double m = min_eig_sym(
        Matrix(sym_part(Matrix(k_omega(omega) * a_omega(omega))) + relaxation + b_omega(omega)));
    out.sigma_bar = std::min(out.sigma_bar, m);
  }
  if (!(out.sigma_bar > 0.0))
    throw std::domain_error(
        "second_order_lift: [K(w)A(w)]^s + L + B(w) not positive on the sphere grid");

  out.c = c > 0.0 ? std::min(c, 1.0) : 1.0 / ((1.0 + eps) * (1.0 + eps));
  const double cc = out.c;
  const double sigma = out.sigma_bar;

  auto profile = [eps](double r) { return r * r * phi1_profile(r, eps) + (1.0 - phi1_profile(r, eps)); };
  out.k_tilde = [k_omega, cc, profile](const FrequencyPoint& p) {
    return Matrix(cc * profile(p.radius) * k_omega(p.direction));
  };
  out.margin = [sigma, cc, eps, profile](double r) {
    if (r >= 1.0) return sigma * cc * profile(r);
    return sigma * cc * r * r * phi1_profile(r, eps);
  };

  out.worst_gap = std::numeric_limits<double>::infinity();
  for (double r : radii) {
    for (const Vector& omega : directions) {
      const FrequencyPoint p = FrequencyPoint::from_polar(r, omega);
      const Matrix kt = out.k_tilde(p);
      const double lam = min_eig_sym(
          Matrix(sym_part(Matrix(kt * a_omega(omega))) + relaxation + r * r * b_omega(omega)));
      out.worst_gap = std::min(out.worst_gap, lam - out.margin(r));
    }
  }
  out.verified = out.worst_gap >= -1e-10 * (1.0 + std::abs(out.sigma_bar));
  return out;
}

double spectral_bound_from_theta(double theta, double k_norm, double b_norm, double xi_norm) {
  if (!(theta > 0.0)) throw std::domain_error("spectral_bound_from_theta: theta > 0 required");
  const double num = -3.0 * xi_norm * xi_norm * theta * theta;
  const double den = 4.0 * xi_norm * k_norm * theta + 4.0 * xi_norm * xi_norm * theta +
                     4.0 * k_norm * k_norm * b_norm;
  return num / den;
}

std::string to_string(Feasibility f) {
  switch (f) {
    case Feasibility::Feasible: return "feasible";
    case Feasibility::Infeasible: return "infeasible";
    default: return "unknown";
  }
}

}  // namespace dissipa
