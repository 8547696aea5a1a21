#include "tsec/floating.hpp"

#include "tsec/grids.hpp"
#include "tsec/minimax.hpp"
#include "tsec/minimize.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

namespace tsec {

namespace {

void require_planar(const ConvexBody& body) {
    if (body.dim() != 2) throw InputError("bad-dimension", "operation needs a planar body");
}

}  // namespace

double cap_area(const ConvexBody& body, const Direction& u, double t, double tol) {
    require_planar(body);
    if (tol <= 0.0) tol = 1e-12;
    const double h = body.eval_unit(u.vec()).value;
    const double floor = -body.eval_unit(-u.vec()).value;
    t = std::max(t, floor);
    if (t >= h) return 0.0;
    const Vec3 n = u.vec();
    // Above mid the distance from the top is s^4, below it the distance from the bottom.
    const double mid = 0.5 * (h + floor);
    const auto from_top = [&](double s) {
        const double s2 = s * s;
        return chord_length(body, n, h - s2 * s2) * 4.0 * s2 * s;
    };
    const auto from_bottom = [&](double s) {
        const double s2 = s * s;
        return chord_length(body, n, floor + s2 * s2) * 4.0 * s2 * s;
    };
    double area = integrate(from_top, 0.0, std::sqrt(std::sqrt(h - std::max(t, mid))), tol);
    if (t < mid) {
        area += integrate(from_bottom, std::sqrt(std::sqrt(t - floor)), std::sqrt(std::sqrt(mid - floor)), tol);
    }
    return area;
}

double body_area(const ConvexBody& body) {
    require_planar(body);
    const Direction ex(Vec3::UnitX());
    return cap_area(body, ex, -body.eval_unit(-ex.vec()).value);
}

double cut_offset(const ConvexBody& body, const Direction& u, double delta) {
    require_planar(body);
    double lo = -body.eval_unit(-u.vec()).value;
    double hi = body.eval_unit(u.vec()).value;
    const double step_tol = 1e-12 * body.scale();
    double t = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200 && hi - lo > step_tol; ++iter) {
        const double f = cap_area(body, u, t) - delta;
        if (f > 0.0) lo = t; else hi = t;
        const double len = chord_length(body, u.vec(), t);
        double next = len > 0.0 ? t + f / len : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const double step = std::abs(next - t);
        t = next;
        if (step <= step_tol) break;
    }
    return t;
}

FloatingBody2D::FloatingBody2D(ConvexBody parent, double delta, std::vector<Direction> directions,
                               std::vector<double> offsets)
    : parent_(std::move(parent)), delta_(delta), directions_(std::move(directions)), offsets_(std::move(offsets)) {}

ConvexBody FloatingBody2D::as_body() const {
    const ConvexBody parent = parent_;
    const double delta = delta_;
    auto eval = [parent, delta](const Vec3& u) {
        const double t = cut_offset(parent, Direction::normalized(u), delta);
        const Vec3 d(-u.y(), u.x(), 0.0);
        const Vec3 p = t * u;
        const Vec3 mid = 0.5 * (line_exit_point(parent, p, d) + line_exit_point(parent, p, -d));
        return SupportPoint{t, mid};
    };
    std::ostringstream label;
    label << "floating(" << parent_.label() << "," << std::setprecision(17) << delta_ << ")";
    return make_custom({2, parent_.strictly_convex(), parent_.o_symmetric()}, eval, label.str());
}

FloatingBody2D floating_body(const ConvexBody& body, double delta, int grid, int threads) {
    require_planar(body);
    if (!body.strictly_convex()) throw GeometryError("not-strict", "floating bodies need a strictly convex body");
    if (grid < 1) throw InputError("bad-grid", "floating body grid must be positive");
    const double area = body_area(body);
    if (!(delta > 0.0) || !(delta < 0.5 * area)) {
        throw InputError("delta-out-of-range", "delta must lie in (0, area/2)");
    }
    std::vector<Direction> dirs = circle_directions(grid);
    std::vector<double> offsets(grid);
    parallel_for(grid, threads, [&](int k) { offsets[k] = cut_offset(body, dirs[k], delta); });
    return FloatingBody2D(body, delta, std::move(dirs), std::move(offsets));
}

void write_floating_csv(std::ostream& os, const FloatingBody2D& fb) {
    os << "angle,offset\r\n" << std::setprecision(17);
    for (std::size_t k = 0; k < fb.directions().size(); ++k) {
        const Direction& u = fb.directions()[k];
        os << std::atan2(u[1], u[0]) << ',' << fb.offsets()[k] << "\r\n";
    }
}

namespace {

HomothetyFit fit_homothety(const std::vector<Direction>& dirs, const std::vector<double>& ha,
                           const std::vector<double>& hb, double scale) {
    const int n = static_cast<int>(dirs.size());
    Eigen::MatrixXd A(n, 3);
    Eigen::VectorXd rhs(n);
    for (int k = 0; k < n; ++k) {
        A(k, 0) = ha[k];
        A(k, 1) = dirs[k][0];
        A(k, 2) = dirs[k][1];
        rhs[k] = hb[k];
    }
    const MinimaxFit fit = minimax_fit(A, rhs);
    HomothetyFit out;
    out.ratio = fit.x[0];
    out.translation = Vec2(fit.x[1], fit.x[2]);
    if (std::abs(1.0 - out.ratio) > 1e-9) out.center = out.translation / (1.0 - out.ratio);
    out.defect_abs = fit.max_residual;
    out.defect = fit.max_residual / scale;
    return out;
}

}  // namespace

HomothetyFit homothety_defect(const ConvexBody& a, const ConvexBody& b, int grid) {
    require_planar(a);
    require_planar(b);
    if (grid < 16) throw InputError("bad-grid", "homothety grid needs at least 16 directions");
    const std::vector<Direction> dirs = circle_directions(grid);
    std::vector<double> ha(grid), hb(grid);
    for (int k = 0; k < grid; ++k) {
        ha[k] = a.eval_unit(dirs[k].vec()).value;
        hb[k] = b.eval_unit(dirs[k].vec()).value;
    }
    return fit_homothety(dirs, ha, hb, a.scale());
}

HomothetyFit homothety_to_parent(const FloatingBody2D& fb) {
    if (fb.directions().size() < 16) throw InputError("bad-grid", "homothety grid needs at least 16 directions");
    std::vector<double> ha;
    ha.reserve(fb.directions().size());
    for (const Direction& v : fb.directions()) ha.push_back(fb.parent().eval_unit(v.vec()).value);
    return fit_homothety(fb.directions(), ha, fb.offsets(), fb.parent().scale());
}

HomothetyFit homothety_defect(const SectionBody& a, const SectionBody& b, int grid) {
    return homothety_defect(a.body(), b.body(), grid);
}

EllipseFit ellipse_fit(const ConvexBody& body, int grid) {
    require_planar(body);
    if (grid < 8) throw InputError("bad-grid", "ellipse fit needs at least 8 directions");
    const auto contact_at = [&](double angle) { return body.eval_unit(Direction::planar(angle).vec()).contact; };
    Eigen::MatrixXd A(grid, 3);
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(grid);
    for (int k = 0; k < grid; ++k) {
        const Vec3 x = contact_at(2.0 * std::numbers::pi * k / grid);
        A(k, 0) = x.x() * x.x();
        A(k, 1) = 2.0 * x.x() * x.y();
        A(k, 2) = x.y() * x.y();
    }
    const Eigen::Vector3d c = A.colPivHouseholderQr().solve(ones);
    EllipseFit fit;
    fit.q << c[0], c[1], c[1], c[2];
    fit.elliptic = c[0] > 0.0 && fit.q.determinant() > 0.0;
    if (!fit.elliptic) {
        fit.residual = std::numeric_limits<double>::infinity();
        return fit;
    }
    for (int k = 0; k < grid; ++k) {
        const Vec3 x = contact_at(2.0 * std::numbers::pi * (k + 0.5) / grid);
        const Vec2 y = x.head<2>();
        fit.residual = std::max(fit.residual, std::abs(y.dot(fit.q * y) - 1.0));
    }
    return fit;
}

double ellipse_residual(const ConvexBody& body, int grid) { return ellipse_fit(body, grid).residual; }

double disk_residual(const ConvexBody& body, int grid) {
    require_planar(body);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const Direction& v : circle_directions(grid)) {
        const double h = body.eval_unit(v.vec()).value;
        lo = std::min(lo, h);
        hi = std::max(hi, h);
    }
    return hi - lo;
}

double revolution_residual(const ConvexBody& body, const Direction& axis, int grid) {
    if (body.dim() != 3) throw InputError("bad-dimension", "revolution residual needs a 3-D body");
    if (grid < 4) throw InputError("bad-grid", "revolution grid needs at least 4 angles");
    const auto [e1, e2] = orthonormal_frame(axis.vec());
    double worst = 0.0;
    for (int j = 1; j < grid; ++j) {
        const double theta = std::numbers::pi * j / grid;
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (int k = 0; k < grid; ++k) {
            const double phi = 2.0 * std::numbers::pi * k / grid;
            const Vec3 u = (std::cos(theta) * axis.vec() +
                            std::sin(theta) * (std::cos(phi) * e1 + std::sin(phi) * e2)).normalized();
            const double h = body.eval_unit(u).value;
            lo = std::min(lo, h);
            hi = std::max(hi, h);
        }
        worst = std::max(worst, hi - lo);
    }
    return worst;
}

}  // namespace tsec
