#include "tsec/minimax.hpp"

#include "tsec/types.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <vector>

namespace tsec {

namespace {

double max_abs_residual(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& x) {
    return (b - A * x).cwiseAbs().maxCoeff();
}

// Revised simplex on the dual of the Chebyshev problem. Columns 0..N-1 are
// y+ (cost b_k), N..2N-1 are y- (cost -b_k), 2N..2N+m-1 are artificials.
class ChebyshevDual {
public:
    ChebyshevDual(const Eigen::MatrixXd& A, const Eigen::VectorXd& b)
        : A_(A), b_(b), n_(static_cast<int>(A.rows())), m_(static_cast<int>(A.cols()) + 1) {
        const double bmax = b.cwiseAbs().maxCoeff();
        rc_tol_ = 1e-12 * (bmax > 0.0 ? bmax : 1.0);
        rhs_ = Eigen::VectorXd::Zero(m_);
        rhs_[0] = 1.0;
        basis_.resize(m_);
        for (int i = 0; i < m_; ++i) basis_[i] = 2 * n_ + i;
        binv_ = Eigen::MatrixXd::Identity(m_, m_);
        xb_ = rhs_;
    }

    bool solve(int max_iterations) {
        // Phase I: minimise the sum of artificials.
        if (!run(/*phase_one=*/true, max_iterations)) return false;
        drive_out_artificials();
        // Phase II: maximise sum c_j y_j, i.e. minimise -c.
        return run(/*phase_one=*/false, max_iterations);
    }

    // Simplex multipliers for the maximisation: (t, x).
    Eigen::VectorXd multipliers() const {
        Eigen::RowVectorXd cb(m_);
        for (int i = 0; i < m_; ++i) cb[i] = max_cost(basis_[i]);
        return (cb * binv_).transpose();
    }

    int iterations() const { return iterations_; }

private:
    Eigen::VectorXd column(int j) const {
        Eigen::VectorXd col(m_);
        if (j >= 2 * n_) {
            col.setZero();
            col[j - 2 * n_] = 1.0;
            return col;
        }
        const bool minus = j >= n_;
        const int k = minus ? j - n_ : j;
        col[0] = 1.0;
        col.tail(m_ - 1) = minus ? Eigen::VectorXd(-A_.row(k).transpose()) : Eigen::VectorXd(A_.row(k).transpose());
        return col;
    }

    double max_cost(int j) const {
        if (j >= 2 * n_) return 0.0;
        return j >= n_ ? -b_[j - n_] : b_[j];
    }

    double min_cost(int j, bool phase_one) const {
        if (phase_one) return j >= 2 * n_ ? 1.0 : 0.0;
        return -max_cost(j);
    }

    bool is_basic(int j) const {
        for (int v : basis_) {
            if (v == j) return true;
        }
        return false;
    }

    void refactor() {
        Eigen::MatrixXd B(m_, m_);
        for (int i = 0; i < m_; ++i) B.col(i) = column(basis_[i]);
        binv_ = B.inverse();
        xb_ = binv_ * rhs_;
        for (int i = 0; i < m_; ++i) {
            if (xb_[i] < 0.0 && xb_[i] > -1e-13) xb_[i] = 0.0;
        }
    }

    void pivot(int r, int j, const Eigen::VectorXd& w) {
        const double theta = xb_[r] / w[r];
        xb_ -= theta * w;
        xb_[r] = theta;
        const Eigen::RowVectorXd pivot_row = binv_.row(r) / w[r];
        for (int i = 0; i < m_; ++i) {
            if (i != r) binv_.row(i) -= w[i] * pivot_row;
        }
        binv_.row(r) = pivot_row;
        basis_[r] = j;
        if (++since_refactor_ >= 32) {
            refactor();
            since_refactor_ = 0;
        }
    }

    bool run(bool phase_one, int max_iterations) {
        const double tol = phase_one ? 1e-12 : rc_tol_;
        const int candidates = phase_one ? 2 * n_ + m_ : 2 * n_;
        bool bland = false;
        int degenerate_run = 0;
        while (iterations_ < max_iterations) {
            Eigen::RowVectorXd cb(m_);
            for (int i = 0; i < m_; ++i) cb[i] = min_cost(basis_[i], phase_one);
            const Eigen::RowVectorXd pi = cb * binv_;

            int entering = -1;
            double best = -tol;
            for (int j = 0; j < candidates; ++j) {
                if (is_basic(j)) continue;
                double d = min_cost(j, phase_one) - pi[0];
                if (j < 2 * n_) {
                    const int k = j >= n_ ? j - n_ : j;
                    const double s = j >= n_ ? -1.0 : 1.0;
                    d -= s * pi.tail(m_ - 1).dot(A_.row(k));
                } else {
                    d = min_cost(j, phase_one) - pi[j - 2 * n_];
                }
                if (d < best) {
                    entering = j;
                    best = d;
                    if (bland) break;
                }
            }
            if (entering < 0) return true;

            const Eigen::VectorXd w = binv_ * column(entering);
            int leave = -1;
            double ratio = std::numeric_limits<double>::infinity();
            for (int i = 0; i < m_; ++i) {
                if (w[i] <= 1e-12) continue;
                const double q = std::max(xb_[i], 0.0) / w[i];
                if (leave < 0 || q < ratio - 1e-15) {
                    ratio = q;
                    leave = i;
                } else if (q <= ratio + 1e-15 && basis_[i] < basis_[leave]) {
                    leave = i;
                }
            }
            if (leave < 0) return false;  // unbounded; impossible for a feasible Chebyshev dual
            degenerate_run = ratio <= 1e-14 ? degenerate_run + 1 : 0;
            if (degenerate_run > 20) bland = true;
            pivot(leave, entering, w);
            ++iterations_;
        }
        return false;
    }

    void drive_out_artificials() {
        for (int r = 0; r < m_; ++r) {
            if (basis_[r] < 2 * n_) continue;
            for (int j = 0; j < 2 * n_; ++j) {
                if (is_basic(j)) continue;
                const Eigen::VectorXd w = binv_ * column(j);
                if (std::abs(w[r]) > 1e-9) {
                    pivot(r, j, w);
                    break;
                }
            }
        }
        refactor();
        since_refactor_ = 0;
    }

    const Eigen::MatrixXd& A_;
    const Eigen::VectorXd& b_;
    int n_;
    int m_;
    double rc_tol_ = 1e-12;
    Eigen::VectorXd rhs_;
    std::vector<int> basis_;
    Eigen::MatrixXd binv_;
    Eigen::VectorXd xb_;
    int iterations_ = 0;
    int since_refactor_ = 0;
};

}  // namespace

MinimaxFit minimax_fit(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
    if (A.rows() != b.size() || A.rows() == 0 || A.cols() == 0) {
        throw InputError("bad-fit", "minimax fit needs a non-empty system with matching sizes");
    }
    MinimaxFit fit;
    fit.x = A.colPivHouseholderQr().solve(b);
    fit.max_residual = max_abs_residual(A, b, fit.x);

    ChebyshevDual dual(A, b);
    const bool ok = dual.solve(20000);
    fit.iterations = dual.iterations();
    if (ok) {
        const Eigen::VectorXd pi = dual.multipliers();
        const Eigen::VectorXd x = pi.tail(A.cols());
        const double r = max_abs_residual(A, b, x);
        if (x.allFinite() && r <= fit.max_residual) {
            fit.x = x;
            fit.max_residual = r;
        }
        fit.optimal = true;
    }
    return fit;
}

}  // namespace tsec
