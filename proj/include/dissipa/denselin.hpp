#pragma once

#include <string>
#include <vector>

#include "dissipa/types.hpp"

namespace dissipa {

/// Full eigendecomposition with per-pair backward errors.
struct SpectralDecomposition {
  CVector values;
  CMatrix vectors;    // unit columns
  Vector residuals;   // ||A v_k - lambda_k v_k||
  bool converged = true;
  std::string diagnostic;  // set when !converged
};

/// General complex eigendecomposition (Schur-style iteration).
/// Non-convergence is reported as converged = false, never thrown.
SpectralDecomposition eig_general(const CMatrix& m);
SpectralDecomposition eig_general(const Matrix& m);

/// Hermitian eigendecomposition: real eigenvalues ascending, unitary vectors.
/// Rejects inputs with ||M - M*|| > 1e-10 ||M||.
SpectralDecomposition eig_hermitian(const CMatrix& m);

/// Real-symmetric fast path (values ascending, orthonormal vectors).
struct SymmetricDecomposition {
  Vector values;
  Matrix vectors;
};
SymmetricDecomposition eig_symmetric(const Matrix& m);

/// One group of eigenvalues with its spectral projection.
struct EigenCluster {
  Complex representative;  // mean of the clustered eigenvalues
  CMatrix projection;
  int multiplicity = 0;
};
struct EigenClusterSet {
  std::vector<EigenCluster> clusters;
  double diameter = 0.0;   // spectral diameter of the input values
  double threshold = 0.0;  // absolute clustering threshold used
};

/// Single-linkage clustering at rel_gap * (spectral diameter + 1); projections
/// from the eigenvector basis and its inverse. Throws DefectiveMatrixError when
/// the eigenvector matrix has condition number above 1e8.
EigenClusterSet cluster_projections(const SpectralDecomposition& dec, double rel_gap = 1e-6);

/// Same clustering for a real symmetric decomposition; projections orthogonal.
struct SymmetricCluster {
  double representative = 0.0;
  Matrix projection;
  int multiplicity = 0;
};
struct SymmetricClusterSet {
  std::vector<SymmetricCluster> clusters;
  double diameter = 0.0;
  double threshold = 0.0;
};
SymmetricClusterSet cluster_projections(const SymmetricDecomposition& dec,
                                        double rel_gap = 1e-6);

/// Symmetric positive definite square root. Throws std::domain_error unless
/// lambda_min(M) > 0.
Matrix spd_sqrt(const Matrix& m);

/// Orthonormal basis of the numerical kernel: columns v with
/// ||M v|| <= rank_tol * ||M||. rank_tol < 0 selects the default 1e-10 * n.
CMatrix kernel_basis(const CMatrix& m, double rank_tol = -1.0);
Matrix kernel_basis(const Matrix& m, double rank_tol = -1.0);

/// exp(t M) by scaling-and-squaring with a Pade approximant.
/// Throws std::range_error when the result overflows.
CMatrix matrix_exp(const CMatrix& m, double t);
Matrix matrix_exp(const Matrix& m, double t);

/// Smallest eigenvalue of the Hermitian part of M (exact for Hermitian input).
double min_eig_sym(const CMatrix& m);
double min_eig_sym(const Matrix& m);

}  // namespace dissipa
