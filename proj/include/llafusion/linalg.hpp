#pragma once

#include <string_view>

#include <Eigen/Cholesky>
#include <Eigen/Core>

namespace llafusion {

/// Jitter levels tried in order, relative to the mean diagonal magnitude of
/// the matrix being factorized (absolute when that mean is zero).
inline constexpr double kJitterLadder[] = {0.0, 1e-12, 1e-9, 1e-6};

struct Cholesky {
  Eigen::LLT<Eigen::MatrixXd> llt;
  double jitter = 0.0;  // absolute value added to the diagonal
};

/// Cholesky factorization of a symmetric matrix with the jitter ladder.
/// Throws NumericalError (with an eigenvalue condition estimate) if every
/// level fails. `what` names the matrix in the error message.
Cholesky robust_cholesky(const Eigen::MatrixXd& a, std::string_view what);

/// Returns S with S Sᵀ = a for a symmetric PSD matrix, including singular
/// ones (zero rows of S for null directions). Tries LLT first and falls back
/// to a pivoted LDLT with tiny negative pivots clipped to zero.
Eigen::MatrixXd psd_square_root(const Eigen::MatrixXd& a, std::string_view what);

/// Inverse via Cholesky solves against the identity.
Eigen::MatrixXd spd_inverse(const Eigen::MatrixXd& a, std::string_view what);

/// Projects a symmetric matrix onto the PSD cone by clipping eigenvalues at 0.
/// Returns the input unchanged (bitwise) when it is already PSD.
Eigen::MatrixXd project_psd(const Eigen::MatrixXd& a);

double symmetry_error(const Eigen::MatrixXd& a);

/// max|λ| / min|λ| of the symmetric part.
double condition_estimate(const Eigen::MatrixXd& a);

/// True when a + eps·I admits a Cholesky factorization.
bool is_psd(const Eigen::MatrixXd& a, double eps = 1e-12);

Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& a);

}  // namespace llafusion
