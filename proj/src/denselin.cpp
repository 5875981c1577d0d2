#include "dissipa/denselin.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dissipa/errors.hpp"

namespace dissipa {

namespace {

Vector pair_residuals(const CMatrix& m, const CVector& values, const CMatrix& vectors) {
  const Eigen::Index n = m.rows();
  Vector r(n);
  for (Eigen::Index k = 0; k < n; ++k)
    r[k] = (m * vectors.col(k) - values[k] * vectors.col(k)).norm();
  return r;
}

void sort_pairs(CVector& values, CMatrix& vectors) {
  const Eigen::Index n = values.size();
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (values[a].real() != values[b].real()) return values[a].real() < values[b].real();
    return values[a].imag() < values[b].imag();
  });
  CVector sv(n);
  CMatrix sm(vectors.rows(), n);
  for (Eigen::Index k = 0; k < n; ++k) {
    sv[k] = values[idx[static_cast<std::size_t>(k)]];
    sm.col(k) = vectors.col(idx[static_cast<std::size_t>(k)]);
  }
  values = std::move(sv);
  vectors = std::move(sm);
}

/// Merge points into single-linkage clusters at an absolute threshold.
/// Returns the cluster label of each point, labels in order of first member.
std::vector<int> single_linkage(const CVector& values, double threshold) {
  const auto n = static_cast<std::size_t>(values.size());
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(values[static_cast<Eigen::Index>(i)] -
                   values[static_cast<Eigen::Index>(j)]) <= threshold) {
        auto a = find(i), b = find(j);
        if (a != b) parent[b] = a;
      }
  std::vector<int> label(n, -1);
  int next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto r = find(i);
    if (label[r] < 0) label[r] = next++;
    label[i] = label[r];
  }
  return label;
}

double spectral_diameter(const CVector& values) {
  double diam = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i)
    for (Eigen::Index j = i + 1; j < values.size(); ++j)
      diam = std::max(diam, std::abs(values[i] - values[j]));
  return diam;
}

}  // namespace

SpectralDecomposition eig_general(const CMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw std::invalid_argument("eig_general: square matrix of order >= 1 required");
  SpectralDecomposition out;
  Eigen::ComplexEigenSolver<CMatrix> es;
  es.setMaxIterations(200 * static_cast<int>(m.rows()));
  es.compute(m, /*computeEigenvectors=*/true);
  if (es.info() != Eigen::Success) {
    out.converged = false;
    out.diagnostic = "eigensolver did not converge within 200*n QR iterations";
    return out;
  }
  out.values = es.eigenvalues();
  out.vectors = es.eigenvectors();
  for (Eigen::Index k = 0; k < out.vectors.cols(); ++k) {
    const double nk = out.vectors.col(k).norm();
    if (nk > 0.0) out.vectors.col(k) /= nk;
  }
  sort_pairs(out.values, out.vectors);
  out.residuals = pair_residuals(m, out.values, out.vectors);
  const double bound = 1e-9 * std::max(m.norm(), 1e-300);
  if (out.residuals.maxCoeff() > bound) {
    out.converged = false;
    out.diagnostic = "residual " + std::to_string(out.residuals.maxCoeff()) +
                     " above 1e-9*||A|| = " + std::to_string(bound);
  }
  return out;
}

SpectralDecomposition eig_general(const Matrix& m) {
  return eig_general(CMatrix(m.cast<Complex>()));
}

SpectralDecomposition eig_hermitian(const CMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw std::invalid_argument("eig_hermitian: square matrix of order >= 1 required");
  if (non_hermiticity(m) > 1e-10 * std::max(m.norm(), 1e-300))
    throw std::invalid_argument("eig_hermitian: input is not Hermitian within 1e-10*||M||");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(herm_part(m));
  if (es.info() != Eigen::Success) {
    SpectralDecomposition out;
    out.converged = false;
    out.diagnostic = "self-adjoint eigensolver did not converge";
    return out;
  }
  SpectralDecomposition out;
  out.values = es.eigenvalues().cast<Complex>();
  out.vectors = es.eigenvectors();
  out.residuals = pair_residuals(m, out.values, out.vectors);
  return out;
}

SymmetricDecomposition eig_symmetric(const Matrix& m) {
  if (asymmetry(m) > 1e-10 * std::max(m.norm(), 1e-300))
    throw std::invalid_argument("eig_symmetric: input is not symmetric within 1e-10*||M||");
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym_part(m));
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eig_symmetric: eigensolver did not converge");
  return SymmetricDecomposition{es.eigenvalues(), es.eigenvectors()};
}

EigenClusterSet cluster_projections(const SpectralDecomposition& dec, double rel_gap) {
  if (!dec.converged)
    throw std::invalid_argument("cluster_projections: decomposition did not converge");
  Eigen::JacobiSVD<CMatrix> svd(dec.vectors);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  if (!(smin > 0.0) || smax / smin > 1e8)
    throw DefectiveMatrixError(
        "cluster_projections: eigenvector basis condition number above 1e8 "
        "(matrix numerically defective)");

  EigenClusterSet out;
  out.diameter = spectral_diameter(dec.values);
  out.threshold = rel_gap * (out.diameter + 1.0);
  const std::vector<int> label = single_linkage(dec.values, out.threshold);
  const int k = 1 + *std::max_element(label.begin(), label.end());

  const CMatrix vinv = dec.vectors.inverse();
  out.clusters.resize(static_cast<std::size_t>(k));
  const Eigen::Index n = dec.values.size();
  for (int c = 0; c < k; ++c) {
    CMatrix p = CMatrix::Zero(n, n);
    Complex rep(0, 0);
    int mult = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (label[static_cast<std::size_t>(i)] != c) continue;
      p += dec.vectors.col(i) * vinv.row(i);
      rep += dec.values[i];
      ++mult;
    }
    out.clusters[static_cast<std::size_t>(c)] = {rep / static_cast<double>(mult), p, mult};
  }
  return out;
}

SymmetricClusterSet cluster_projections(const SymmetricDecomposition& dec, double rel_gap) {
  SymmetricClusterSet out;
  const Eigen::Index n = dec.values.size();
  out.diameter = dec.values[n - 1] - dec.values[0];
  out.threshold = rel_gap * (out.diameter + 1.0);
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= n; ++i) {
    if (i < n && dec.values[i] - dec.values[i - 1] <= out.threshold) continue;
    SymmetricCluster c;
    c.multiplicity = static_cast<int>(i - start);
    c.representative = dec.values.segment(start, i - start).mean();
    const auto block = dec.vectors.middleCols(start, i - start);
    c.projection = block * block.transpose();
    out.clusters.push_back(std::move(c));
    start = i;
  }
  return out;
}

Matrix spd_sqrt(const Matrix& m) {
  if (asymmetry(m) > 1e-10 * std::max(m.norm(), 1e-300))
    throw std::domain_error("spd_sqrt: input not symmetric");
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym_part(m));
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::domain_error("spd_sqrt: input not positive definite");
  Matrix r = es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() *
             es.eigenvectors().transpose();
  return sym_part(r);
}

namespace {

template <typename Mat>
Mat kernel_basis_impl(const Mat& m, double rank_tol) {
  if (rank_tol < 0.0) rank_tol = 1e-10 * static_cast<double>(m.rows());
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double norm = sv.size() > 0 ? sv[0] : 0.0;
  const double threshold = rank_tol * norm;
  Eigen::Index dim = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] <= threshold) ++dim;
  return svd.matrixV().rightCols(dim);
}

}  // namespace

CMatrix kernel_basis(const CMatrix& m, double rank_tol) { return kernel_basis_impl(m, rank_tol); }
Matrix kernel_basis(const Matrix& m, double rank_tol) { return kernel_basis_impl(m, rank_tol); }

CMatrix matrix_exp(const CMatrix& m, double t) {
  if (!m.allFinite() || !std::isfinite(t))
    throw std::invalid_argument("matrix_exp: non-finite input");
  CMatrix e = (t * m).exp();
  if (!e.allFinite())
    throw std::range_error("matrix_exp: overflow for ||tM|| = " + std::to_string(t * m.norm()));
  return e;
}

Matrix matrix_exp(const Matrix& m, double t) {
  if (!m.allFinite() || !std::isfinite(t))
    throw std::invalid_argument("matrix_exp: non-finite input");
  Matrix e = (t * m).exp();
  if (!e.allFinite())
    throw std::range_error("matrix_exp: overflow for ||tM|| = " + std::to_string(t * m.norm()));
  return e;
}

double min_eig_sym(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(herm_part(m), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double min_eig_sym(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym_part(m), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace dissipa
