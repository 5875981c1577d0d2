#include "dissipa/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "dissipa/denselin.hpp"
#include "dissipa/errors.hpp"

namespace dissipa {

CVector propagate_point(const Matrix& a_s, const Matrix& b_s, double radius, const CVector& v0,
                        double t) {
  if (t < 0.0) throw std::invalid_argument("propagate_point: t >= 0 required");
  const Complex i(0.0, 1.0);
  const CMatrix gen = i * radius * a_s.cast<Complex>() + b_s.cast<Complex>();
  return matrix_exp(gen, -t) * v0;
}

CVector propagate_point(const SymmetrizedPair& sp, const CVector& v0, double t) {
  return propagate_point(sp.a_s, sp.b_s, sp.at.radius, v0, t);
}

double EnvelopeSpec::rate(const FrequencyPoint& p) const {
  const double r2 = p.radius * p.radius;
  const double m = margin_fn(p);
  return kind == Kind::Full ? r2 * m / (1.0 + r2) : r2 * m;
}

EnvelopeReport verify_envelope(const CoefficientSystem& sys, const SymmetrizerFn& s,
                               const EnvelopeSpec& spec, const FrequencyGrid& grid,
                               const EnvelopeOptions& opts) {
  if (grid.points.empty()) throw std::invalid_argument("verify_envelope: empty grid");
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> normal;

  struct Sample {
    double depth;  // rate(xi) * t
    double log_ratio;
  };
  std::vector<Sample> samples;
  samples.reserve(grid.points.size() * opts.depth_levels.size() *
                  static_cast<std::size_t>(opts.vectors_per_point));

  for (const FrequencyPoint& p : grid.points) {
    const double rate = spec.rate(p);
    if (!(rate > 0.0))
      throw std::domain_error("verify_envelope: margin function not positive at |xi| = " +
                              std::to_string(p.radius));
    const SymmetrizedPair sp = symmetrize(sys, s, p);
    for (int v = 0; v < opts.vectors_per_point; ++v) {
      CVector v0(sys.state_dim());
      for (Eigen::Index k = 0; k < v0.size(); ++k) v0[k] = Complex(normal(rng), normal(rng));
      v0 /= v0.norm();
      for (double x : opts.depth_levels) {
        const double t = x / rate;
        const double ratio = propagate_point(sp, v0, t).norm();
        samples.push_back({x, std::log(std::max(ratio, 1e-300))});
      }
    }
  }

  EnvelopeReport rep;
  rep.samples = static_cast<int>(samples.size());

  double k_fit, c_fit;
  if (opts.assert_k) {
    k_fit = *opts.assert_k;
    c_fit = opts.assert_c.value_or(1.0);
  } else {
    // Largest k with log|V| <= log C - k x supportable: on the deepest level,
    // each trajectory bounds k from above by -log_ratio / x (up to C).
    k_fit = std::numeric_limits<double>::infinity();
    const double deepest =
        *std::max_element(opts.depth_levels.begin(), opts.depth_levels.end());
    for (const Sample& smp : samples)
      if (smp.depth >= deepest * (1.0 - 1e-12))
        k_fit = std::min(k_fit, -smp.log_ratio / smp.depth);
    if (!(k_fit > 0.0)) k_fit = 0.0;
    // Smallest admissible C for that k.
    double log_c = 0.0;
    for (const Sample& smp : samples)
      log_c = std::max(log_c, smp.log_ratio + k_fit * smp.depth);
    c_fit = std::exp(log_c);
  }
  rep.k_fit = k_fit;
  rep.c_fit = c_fit;

  rep.worst_excess = -std::numeric_limits<double>::infinity();
  for (const Sample& smp : samples) {
    const double excess = std::exp(smp.log_ratio) - c_fit * std::exp(-k_fit * smp.depth);
    rep.worst_excess = std::max(rep.worst_excess, excess);
    if (excess > 1e-9) ++rep.violations;
  }
  if (!(rep.k_fit > 0.0)) rep.violations = rep.samples;  // no positive decay certified
  return rep;
}

double InitialData::radial(double r) const {
  const double x = r / width;
  switch (profile) {
    case Profile::Gaussian:
      return amplitude * std::exp(-x * x);
    case Profile::CompactBump:
      return x < 1.0 ? amplitude * std::exp(1.0 - 1.0 / (1.0 - x * x)) : 0.0;
    default:  // InversePoly
      return amplitude / ((1.0 + x * x) * (1.0 + x * x));
  }
}

namespace {

struct QuadGrid {
  std::vector<double> radii;
  std::vector<double> radial_weights;  // includes r^{d-1} * dr and angular measure
  std::vector<Vector> directions;
};

QuadGrid make_quad_grid(int d, const QuadratureOptions& opts, int refine) {
  QuadGrid g;
  const int per_decade = opts.points_per_decade * refine;
  g.radii = log_radii(opts.r_min, opts.r_max, per_decade);
  const std::size_t n_r = g.radii.size();
  // Trapezoid in u = log r: dr = r du; measure r^{d-1} dr = r^d du.
  const double du = std::log(g.radii[1] / g.radii[0]);
  g.radial_weights.resize(n_r);
  for (std::size_t i = 0; i < n_r; ++i) {
    const double w = (i == 0 || i + 1 == n_r) ? 0.5 : 1.0;
    g.radial_weights[i] = w * du * std::pow(g.radii[i], d);
  }
  int n_dir = opts.directions;
  if (n_dir <= 0) n_dir = d == 1 ? 1 : d == 2 ? 16 : 32;
  g.directions = sphere_directions(d, d == 1 ? 2 : n_dir);
  // Uniform angular weights: total sphere measure 2 (d=1), 2 pi (d=2), 4 pi (d=3).
  return g;
}

double sphere_measure(int d) {
  return d == 1 ? 2.0 : d == 2 ? 2.0 * std::numbers::pi : 4.0 * std::numbers::pi;
}

}  // namespace

DecaySeries l2_decay(const CoefficientSystem& sys, const SymmetrizerFn& s,
                     const InitialData& init, int ell, const std::vector<double>& times,
                     const QuadratureOptions& opts) {
  if (times.empty()) throw std::invalid_argument("l2_decay: no times");
  if (ell < 0) throw std::invalid_argument("l2_decay: ell >= 0 required");
  const int d = sys.space_dim();
  const int n = sys.state_dim();

  Vector weights = init.component_weights;
  if (weights.size() == 0) weights = Vector::Ones(n);
  if (weights.size() != n) throw std::invalid_argument("l2_decay: component weight size");
  weights /= weights.norm();

  auto run = [&](int refine, DecaySeries& out) {
    const QuadGrid g = make_quad_grid(d, opts, refine);
    const double ang_w = sphere_measure(d) / static_cast<double>(g.directions.size());
    std::vector<double> norm2(times.size(), 0.0);
    double l1 = 0.0;

    for (const Vector& omega : g.directions) {
      for (std::size_t ir = 0; ir < g.radii.size(); ++ir) {
        const double r = g.radii[ir];
        const FrequencyPoint p = FrequencyPoint::from_polar(r, omega);
        const double amp = init.radial(r);
        if (amp == 0.0) continue;
        l1 = std::max(l1, std::abs(amp));
        const SymmetrizedPair sp = symmetrize(sys, s, p);
        const CVector u0 = (amp * weights).cast<Complex>();
        const CVector v0 = sp.weight_sqrt.cast<Complex>() * u0;
        const double cell = g.radial_weights[ir] * ang_w * std::pow(r, 2 * ell);
        const Complex i(0.0, 1.0);
        const CMatrix gen = i * r * sp.a_s.cast<Complex>() + sp.b_s.cast<Complex>();
        const CMatrix w_inv = sp.weight_sqrt.inverse().cast<Complex>();
        for (std::size_t it = 0; it < times.size(); ++it) {
          const CVector v = matrix_exp(gen, -times[it]) * v0;
          const CVector u = w_inv * v;
          double point = 0.0;
          for (int c = 0; c < n; ++c) {
            const double w2 =
                c == opts.weighted_component ? 1.0 + r * r : 1.0;
            point += w2 * std::norm(u[c]);
          }
          norm2[it] += cell * point;
        }
      }
    }
    out.times = times;
    out.norms.resize(times.size());
    for (std::size_t it = 0; it < times.size(); ++it) out.norms[it] = std::sqrt(norm2[it]);
    out.l1_surrogate = l1;
  };

  DecaySeries coarse, fine;
  run(1, coarse);
  run(2, fine);
  const double peak = *std::max_element(fine.norms.begin(), fine.norms.end());
  double worst = 0.0;
  for (std::size_t it = 0; it < times.size(); ++it)
    worst = std::max(worst,
                     std::abs(fine.norms[it] - coarse.norms[it]) /
                         std::max(fine.norms[it], 1e-12 * peak + 1e-300));
  fine.doubling_error = worst;
  if (worst > opts.doubling_tol)
    throw ResolutionError("l2_decay: grid-doubling discrepancy " + std::to_string(worst) +
                          " above budget " + std::to_string(opts.doubling_tol));

  // Running slope between consecutive times, and OLS fit on the last decade.
  fine.running_rate.assign(times.size(), 0.0);
  for (std::size_t it = 1; it < times.size(); ++it) {
    const double dx = std::log1p(times[it]) - std::log1p(times[it - 1]);
    fine.running_rate[it] =
        (std::log(fine.norms[it]) - std::log(fine.norms[it - 1])) / dx;
  }
  const double t_max = times.back();
  std::vector<double> xs, ys;
  for (std::size_t it = 0; it < times.size(); ++it) {
    if (times[it] >= t_max / 10.0) {
      xs.push_back(std::log1p(times[it]));
      ys.push_back(std::log(fine.norms[it]));
    }
  }
  if (xs.size() >= 2) {
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxx += (xs[i] - mx) * (xs[i] - mx);
      sxy += (xs[i] - mx) * (ys[i] - my);
    }
    fine.fitted_rate = sxy / sxx;
  }
  return fine;
}

}  // namespace dissipa
