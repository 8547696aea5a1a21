#pragma once

#include <functional>

namespace tsec {

struct Minimum1D {
    double x = 0.0;
    double value = 0.0;
    int evaluations = 0;
};

/// Minimizes a convex coercive function on the real line.
///
/// The bracket starts at [-step, step] and is doubled outward until the
/// function rises on both sides; golden-section search then shrinks it to
/// `x_tol * (1 + |x|)` and a final parabolic step polishes the result.
/// Throws GeometryError("degenerate-section") if the minimizer escapes past
/// `max_abs_x`.
Minimum1D minimize_convex(const std::function<double(double)>& f, double step = 1.0,
                          double x_tol = 1e-10, double max_abs_x = 1e9);

/// Root of a nondecreasing function on [lo, hi] with f(lo) <= 0 <= f(hi),
/// by bisection down to floating-point resolution.
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double x_tol = 0.0);

/// Adaptive 15-point Gauss-Kronrod quadrature. `rel_tol` is relative to the
/// integral of |f|; subdivision stops at `max_depth` levels.
double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                 int max_depth = 15);

}  // namespace tsec
