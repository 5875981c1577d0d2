#include "dissipa/dissipativity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <thread>

#include "dissipa/denselin.hpp"
#include "dissipa/errors.hpp"

namespace dissipa {

namespace {

int resolve_threads(int requested) {
  int want = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (want < 1) want = 1;
  if (const char* env = std::getenv("DISSIPA_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) want = std::min(want, cap);
  }
  return std::min(want, 256);
}

template <typename F>
void parallel_for(std::size_t count, int threads, F&& body) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
  };
  std::vector<std::thread> pool;
  const int n = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  pool.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

double theta_at(const CoefficientSystem& sys, const SymmetrizerFn& s, const FrequencyPoint& p,
                const SweepOptions& opts, bool barred) {
  const SymmetrizedPair sp = symmetrize(sys, s, p);
  const Matrix b_eff = barred ? Matrix(sp.b_s / (p.radius * p.radius)) : sp.b_s;
  switch (opts.strategy) {
    case CompensatorStrategy::Drazin:
      return drazin_compensator(sp.a_s, b_eff, DrazinTols{opts.cluster_rel_gap, 1e-8}).theta;
    case CompensatorStrategy::Reference:
      return validate_compensator(opts.reference(p), sp.a_s, b_eff).theta;
    case CompensatorStrategy::DrazinOrReference:
      try {
        return drazin_compensator(sp.a_s, b_eff, DrazinTols{opts.cluster_rel_gap, 1e-8}).theta;
      } catch (const ConditioningError&) {
        if (opts.reference) return validate_compensator(opts.reference(p), sp.a_s, b_eff).theta;
        throw;
      }
    default:
      return 0.0;
  }
}

}  // namespace

std::vector<SweepRecord> sweep(const CoefficientSystem& sys,
                               const std::optional<SymmetrizerFn>& s, const FrequencyGrid& grid,
                               const SweepOptions& opts) {
  if (grid.points.empty()) throw std::invalid_argument("sweep: empty grid");
  const bool want_theta = s.has_value() && opts.strategy != CompensatorStrategy::None;
  const bool barred = !sys.has_relaxation();

  std::vector<SweepRecord> records(grid.points.size());
  parallel_for(grid.points.size(), resolve_threads(opts.threads), [&](std::size_t i) {
    const FrequencyPoint& p = grid.points[i];
    SweepRecord rec;
    rec.at = p;
    try {
      DispersionResult dr = dispersion_eigenvalues(sys, p);
      rec.ok = dr.ok;
      rec.message = dr.message;
      rec.max_re = dr.values.size() ? dr.max_re() : 0.0;
      rec.eigenvalues = std::move(dr.values);
      if (rec.ok && want_theta) rec.theta = theta_at(sys, *s, p, opts, barred);
    } catch (const std::exception& e) {
      rec.ok = false;
      rec.message = e.what();
    }
    records[i] = std::move(rec);
  });
  return records;
}

StrictVerdict certify_strict(const std::vector<SweepRecord>& records, double tol) {
  if (records.empty()) throw std::invalid_argument("certify_strict: no records");
  StrictVerdict v;
  v.pass = true;
  double worst_margin = -std::numeric_limits<double>::infinity();
  for (const SweepRecord& r : records) {
    const double r2 = r.at.radius * r.at.radius;
    const double normalizer = r2 / ((1.0 + r2) * (1.0 + r2));
    const double margin = r.max_re / normalizer;  // must stay below -tol
    if (!r.ok || margin >= -tol) v.pass = false;
    if (margin > worst_margin) {
      worst_margin = margin;
      v.worst = r;
    }
  }
  return v;
}

std::string to_string(DecayKind k) {
  switch (k) {
    case DecayKind::RegularityGain: return "regularity-gain";
    case DecayKind::RegularityLoss: return "regularity-loss";
    default: return "standard";
  }
}

namespace {

double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return sxy / sxx;
}

}  // namespace

DecayClassification classify_type(const std::vector<SweepRecord>& records) {
  // Envelope over directions: worst (largest) max_re at each radius.
  std::map<double, double> envelope;
  for (const SweepRecord& r : records) {
    if (!r.ok) throw std::invalid_argument("classify_type: failed record in sweep");
    auto [it, inserted] = envelope.emplace(r.at.radius, r.max_re);
    if (!inserted) it->second = std::max(it->second, r.max_re);
  }
  if (envelope.size() < 2) throw std::invalid_argument("classify_type: need more radii");
  const double r_min = envelope.begin()->first;
  const double r_max = envelope.rbegin()->first;
  const double decades = std::log10(r_max / r_min);
  if (decades < 4.0 - 1e-9)
    throw std::invalid_argument("classify_type: radii must span at least 4 decades");
  if (static_cast<double>(envelope.size() - 1) / decades < 10.0 - 1e-9)
    throw std::invalid_argument("classify_type: need at least 10 radii per decade");

  std::vector<double> lo_x, lo_y, hi_x, hi_y;
  for (const auto& [r, max_re] : envelope) {
    if (!(max_re < 0.0))
      throw std::invalid_argument("classify_type: max_re >= 0 at |xi| = " + std::to_string(r) +
                                  "; system not strictly dissipative on the grid");
    const double lx = std::log(r);
    const double ly = std::log(-max_re);
    if (r <= r_min * 10.0 * (1.0 + 1e-12)) {
      lo_x.push_back(lx);
      lo_y.push_back(ly);
    }
    if (r >= r_max / 10.0 * (1.0 - 1e-12)) {
      hi_x.push_back(lx);
      hi_y.push_back(ly);
    }
  }

  DecayClassification out;
  out.low_slope = ols_slope(lo_x, lo_y);
  out.high_slope = ols_slope(hi_x, hi_y);
  if (!std::isfinite(out.low_slope) || !std::isfinite(out.high_slope))
    throw ClassificationError("classify_type: non-finite fitted slopes", out.low_slope,
                              out.high_slope);

  const double p_raw = out.low_slope / 2.0;
  const double diff_raw = out.high_slope / 2.0;
  const int p = static_cast<int>(std::lround(p_raw));
  const int diff = static_cast<int>(std::lround(diff_raw));
  if (std::abs(p_raw - p) > 0.25 || std::abs(diff_raw - diff) > 0.25)
    throw ClassificationError("classify_type: slopes " + std::to_string(out.low_slope) + ", " +
                                  std::to_string(out.high_slope) +
                                  " not within 0.25 of even integers",
                              out.low_slope, out.high_slope);
  out.p = p;
  out.q = p - diff;
  if (out.p < 0 || out.q < 0)
    throw ClassificationError("classify_type: negative type exponents", out.low_slope,
                              out.high_slope);
  out.kind = out.p > out.q   ? DecayKind::RegularityGain
             : out.p < out.q ? DecayKind::RegularityLoss
                             : DecayKind::Standard;

  out.c_fit = std::numeric_limits<double>::infinity();
  for (const auto& [r, max_re] : envelope) {
    const double c = -max_re * std::pow(1.0 + r * r, out.q) / std::pow(r, 2 * out.p);
    out.c_fit = std::min(out.c_fit, c);
  }
  return out;
}

namespace {

// Minimal-cost assignment of new eigenvalues to branches (n <= 6: brute force).
std::vector<int> match_branches(const CVector& prev, const CVector& next, double radius) {
  const int n = static_cast<int>(prev.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = perm;
  double best_cost = std::numeric_limits<double>::infinity();
  double best_maxmove = 0.0;
  do {
    double cost = 0.0, maxmove = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = std::abs(next[perm[static_cast<std::size_t>(i)]] - prev[i]);
      cost += d;
      maxmove = std::max(maxmove, d);
    }
    if (cost < best_cost) {
      best_cost = cost;
      best = perm;
      best_maxmove = maxmove;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  double spacing = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) spacing = std::min(spacing, std::abs(next[i] - next[j]));
  if (n > 1 && best_maxmove > 0.5 * spacing)
    throw TrackingError("asymptotic_fit: branch continuation ambiguous (move " +
                            std::to_string(best_maxmove) + " vs spacing " +
                            std::to_string(spacing) + ")",
                        radius);
  return best;
}

}  // namespace

AsymptoticFit asymptotic_fit(const CoefficientSystem& sys, int direction,
                             const std::vector<int>& orders, const std::vector<double>& radii) {
  if (sys.space_dim() != 1) throw std::invalid_argument("asymptotic_fit: 1-D systems only");
  if (direction != 1 && direction != -1)
    throw std::invalid_argument("asymptotic_fit: direction must be +1 or -1");
  if (radii.size() < orders.size() + 2)
    throw std::invalid_argument("asymptotic_fit: need more radii than basis orders");
  if (!std::is_sorted(radii.begin(), radii.end()))
    throw std::invalid_argument("asymptotic_fit: radii must be ascending");
  if (sys.state_dim() > 6)
    throw std::invalid_argument("asymptotic_fit: branch tracking supports n <= 6");

  const int n = sys.state_dim();
  const auto n_r = static_cast<Eigen::Index>(radii.size());
  CMatrix lambda(n_r, n);  // row = radius, col = branch

  Vector omega = Vector::Constant(1, static_cast<double>(direction));
  for (Eigen::Index k = 0; k < n_r; ++k) {
    DispersionResult dr =
        dispersion_eigenvalues(sys, FrequencyPoint::from_polar(radii[static_cast<std::size_t>(k)], omega));
    if (!dr.ok) throw std::runtime_error("asymptotic_fit: " + dr.message);
    if (k == 0) {
      lambda.row(0) = dr.values.transpose();
    } else {
      const CVector prev = lambda.row(k - 1).transpose();
      const std::vector<int> perm =
          match_branches(prev, dr.values, radii[static_cast<std::size_t>(k)]);
      for (int b = 0; b < n; ++b) lambda(k, b) = dr.values[perm[static_cast<std::size_t>(b)]];
    }
  }

  AsymptoticFit out;
  out.radii = radii;
  const auto n_c = static_cast<Eigen::Index>(orders.size());

  // Column-equilibrated complex Vandermonde in (i xi)^order.
  CMatrix v(n_r, n_c);
  Vector scale(n_c);
  for (Eigen::Index c = 0; c < n_c; ++c) {
    for (Eigen::Index k = 0; k < n_r; ++k) {
      const Complex ix(0.0, direction * radii[static_cast<std::size_t>(k)]);
      v(k, c) = std::pow(ix, orders[static_cast<std::size_t>(c)]);
    }
    scale[c] = v.col(c).cwiseAbs().maxCoeff();
    v.col(c) /= scale[c];
  }

  for (int b = 0; b < n; ++b) {
    BranchFit fit;
    fit.lambda = lambda.col(b);
    // Rows weighted by 1/|lambda| so the fit controls the relative misfit
    // across the decades the branch magnitude spans.
    const double floor = 1e-12 * std::max(fit.lambda.cwiseAbs().maxCoeff(), 1e-300);
    Vector w(n_r);
    for (Eigen::Index k = 0; k < n_r; ++k)
      w[k] = 1.0 / std::max(std::abs(fit.lambda[k]), floor);
    const CMatrix vw = w.asDiagonal() * v;
    const CVector lw = w.asDiagonal() * fit.lambda;
    const CVector sol = vw.colPivHouseholderQr().solve(lw);
    for (Eigen::Index c = 0; c < n_c; ++c)
      fit.coefficients[orders[static_cast<std::size_t>(c)]] = sol[c] / scale[c];
    fit.residual = (vw * sol - lw).norm() / std::max(lw.norm(), 1e-300);
    out.branches.push_back(std::move(fit));
  }
  return out;
}

double projection_jump_diagnostic(const CoefficientSystem& sys, const SymmetrizerFn& s,
                                  const Vector& direction, const std::vector<double>& radii,
                                  double rel_gap) {
  double worst = 0.0;
  SymmetricClusterSet prev;
  bool have_prev = false;
  for (double r : radii) {
    const SymmetrizedPair sp = symmetrize(sys, s, FrequencyPoint::from_polar(r, direction));
    SymmetricClusterSet cur = cluster_projections(eig_symmetric(sp.a_s), rel_gap);
    if (have_prev) {
      if (cur.clusters.size() != prev.clusters.size()) {
        worst = std::numeric_limits<double>::infinity();  // multiplicity change between nodes
      } else {
        for (std::size_t j = 0; j < cur.clusters.size(); ++j)
          worst = std::max(worst,
                           (cur.clusters[j].projection - prev.clusters[j].projection).norm());
      }
    }
    prev = std::move(cur);
    have_prev = true;
  }
  return worst;
}

}  // namespace dissipa
