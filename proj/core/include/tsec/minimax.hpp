#pragma once

#include <Eigen/Core>

namespace tsec {

/// Result of a discrete linear Chebyshev (min-max) fit.
struct MinimaxFit {
    Eigen::VectorXd x;         ///< fitted parameters
    double max_residual = 0.0;  ///< max_k |b_k - <A_k, x>| evaluated at x
    int iterations = 0;
    bool optimal = false;  ///< false when the simplex hit its iteration cap
};

/// Solves min_x max_k |b_k - <A_k, x>| for a tall matrix A (rows = samples).
///
/// A least-squares solution seeds the report; the exact min-max optimum is
/// then obtained by a revised simplex method on the dual linear program
///
///     max  sum_k b_k (y+_k - y-_k)
///     s.t. sum_k (y+_k + y-_k) = 1,  sum_k A_k (y+_k - y-_k) = 0,  y >= 0,
///
/// whose simplex multipliers are (t, x). Bland's rule takes over after a run
/// of degenerate pivots, so the method terminates on degenerate data.
MinimaxFit minimax_fit(const Eigen::MatrixXd& A, const Eigen::VectorXd& b);

}  // namespace tsec
