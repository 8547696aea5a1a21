#include "tsec/minimize.hpp"

#include "tsec/types.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

namespace tsec {

Minimum1D minimize_convex(const std::function<double(double)>& f, double step, double x_tol,
                          double max_abs_x) {
    int evals = 0;
    auto F = [&](double x) {
        ++evals;
        return f(x);
    };

    // Bracket: find lo < mid < hi with f(mid) <= f(lo), f(mid) <= f(hi).
    double mid = 0.0;
    double fmid = F(mid);
    double lo = -step, hi = step;
    double flo = F(lo), fhi = F(hi);
    while (flo < fmid || fhi < fmid) {
        if (flo < fmid) {
            hi = mid, fhi = fmid;
            mid = lo, fmid = flo;
            lo = mid - 2.0 * (hi - mid);
            flo = F(lo);
        } else {
            lo = mid, flo = fmid;
            mid = hi, fmid = fhi;
            hi = mid + 2.0 * (mid - lo);
            fhi = F(hi);
        }
        if (std::abs(lo) > max_abs_x || std::abs(hi) > max_abs_x || !std::isfinite(flo) ||
            !std::isfinite(fhi)) {
            throw GeometryError("degenerate-section", "one-dimensional minimizer diverges");
        }
    }

    // Golden-section search on [lo, hi].
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    double f1 = F(x1), f2 = F(x2);
    double best_x = mid, best_f = fmid;
    auto track = [&](double x, double fx) {
        if (fx < best_f) best_x = x, best_f = fx;
    };
    track(x1, f1);
    track(x2, f2);
    while (b - a > x_tol * (1.0 + std::abs(best_x))) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1, f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = F(x1);
            track(x1, f1);
        } else {
            a = x1;
            x1 = x2, f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = F(x2);
            track(x2, f2);
        }
        if (evals > 400) break;
    }

    // Parabolic polish through the two interior probes and the best point.
    const double p = x1, q = x2, r = best_x;
    const double fp = f1, fq = f2, fr = best_f;
    const double num = (q - p) * (q - p) * (fq - fr) - (q - r) * (q - r) * (fq - fp);
    const double den = (q - p) * (fq - fr) - (q - r) * (fq - fp);
    if (std::abs(den) > 0.0) {
        const double vx = q - 0.5 * num / den;
        if (std::isfinite(vx) && vx > a && vx < b) track(vx, F(vx));
    }
    return {best_x, best_f, evals};
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double x_tol) {
    double flo = f(lo);
    if (flo > 0.0) return lo;
    if (f(hi) < 0.0) return hi;
    for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (lo + hi);
        if (m <= lo || m >= hi || hi - lo <= x_tol) break;
        const double fm = f(m);
        if (fm < 0.0) {
            lo = m;
        } else if (fm > 0.0) {
            hi = m;
        } else {
            return m;
        }
    }
    return 0.5 * (lo + hi);
}

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol, int max_depth) {
    if (a == b) return 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, max_depth, rel_tol);
}

}  // namespace tsec
