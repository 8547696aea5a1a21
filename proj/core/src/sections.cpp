#include "tsec/sections.hpp"

#include "tsec/minimize.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace tsec {

namespace {

class SectionModel final : public BodyModel {
public:
    SectionModel(ConvexBody parent, Hyperplane plane) : parent_(std::move(parent)), plane_(std::move(plane)) {}

    SupportPoint eval(const Vec3& u) const override {
        const SectionPoint s = section_support_point(parent_, plane_, plane_.lift_direction(u.head<2>()));
        const Vec2 y = plane_.coordinates(s.contact);
        return {s.value, Vec3(y.x(), y.y(), 0.0)};
    }

private:
    ConvexBody parent_;
    Hyperplane plane_;
};

ConvexBody make_section_body(const ConvexBody& parent, const Hyperplane& plane) {
    const double tiny = 1e-12 * parent.scale();
    BodyTraits traits{2, parent.strictly_convex(),
                      parent.o_symmetric() && std::abs(plane.offset()) <= tiny && plane.base().norm() <= tiny};
    return ConvexBody(std::make_shared<SectionModel>(parent, plane), traits, "section(" + parent.label() + ")");
}

}  // namespace

Hyperplane tangent_plane(const Ball& ball, const Direction& u) {
    if (!(ball.radius > 0.0)) throw InputError("non-positive-parameter", "ball radius must be positive");
    return Hyperplane(u, ball.center.dot(u.vec()) + ball.radius, ball.center + ball.radius * u.vec());
}

void require_plane_meets_interior(const ConvexBody& body, const Vec3& normal, double offset) {
    const double tol = 1e-12 * body.scale();
    const double above = body.eval_unit(normal).value - offset;   // room on the +n side
    const double below = body.eval_unit(-normal).value + offset;  // room on the -n side
    if (above < -tol || below < -tol) throw GeometryError("empty-section", "plane misses the body");
    if (above <= tol || below <= tol) throw GeometryError("degenerate-section", "plane only touches the body");
}

SectionPoint section_support_point(const ConvexBody& body, const Hyperplane& plane, const Vec3& v) {
    if (body.dim() != 3) throw InputError("bad-dimension", "sections by planes need a 3-D body");
    if (std::abs(v.norm() - 1.0) > kUnitTolerance || std::abs(v.dot(plane.normal())) > 1e-9) {
        throw InputError("non-unit", "section direction must be a unit vector in the plane");
    }
    const Vec3& n = plane.normal();
    const double offset = plane.offset();
    require_plane_meets_interior(body, n, offset);

    const auto lifted = [&](double s) { return body.support_homogeneous(v + s * n) - s * offset; };
    const Minimum1D m = minimize_convex(lifted, 1.0, 1e-10, 1e9);
    const Vec3 w = (v + m.x * n).normalized();
    return {m.value - plane.base().dot(v), body.eval_unit(w).contact};
}

double section_support(const ConvexBody& body, const Hyperplane& plane, const Vec3& v) {
    return section_support_point(body, plane, v).value;
}

double section_support(const ConvexBody& body, const Hyperplane& plane, const Direction& v) {
    if (!v.is_planar()) throw InputError("bad-direction", "frame direction must be planar");
    return section_support(body, plane, plane.lift_direction(v.vec().head<2>()));
}

SectionBody::SectionBody(ConvexBody parent, Hyperplane plane)
    : parent_(std::move(parent)), plane_(std::move(plane)), body_(make_section_body(parent_, plane_)) {}

SectionBody section_as_body(const ConvexBody& body, const Hyperplane& plane, int grid_size) {
    if (grid_size < 16) throw InputError("bad-grid", "section grid must have at least 16 directions");
    if (body.dim() != 3) throw InputError("bad-dimension", "sections by planes need a 3-D body");
    require_plane_meets_interior(body, plane.normal(), plane.offset());
    SectionBody section(body, plane);
    double min_width = std::numeric_limits<double>::infinity();
    for (int k = 0; k < grid_size; ++k) {
        const Direction v = Direction::planar(std::numbers::pi * k / grid_size);
        min_width = std::min(min_width, section.support(v) + section.support(-v));
    }
    if (!(min_width > 1e-12 * body.scale())) {
        throw GeometryError("degenerate-section", "section has empty relative interior");
    }
    return section;
}

TangentFamily make_tangent_family(const Ball& ball, std::vector<Direction> normals) {
    TangentFamily family{ball, std::move(normals), {}};
    family.planes.reserve(family.normals.size());
    for (const Direction& u : family.normals) family.planes.push_back(tangent_plane(ball, u));
    return family;
}

Vec3 line_exit_point(const ConvexBody& body, const Vec3& point, const Vec3& dir) {
    if (body.dim() != 2) throw InputError("bad-dimension", "line sections need a planar body");
    const Vec3 d = Direction::normalized(Vec3(dir.x(), dir.y(), 0.0)).vec();
    const Vec3 nu(-d.y(), d.x(), 0.0);
    const double offset = point.dot(nu);
    const double tol = 1e-12 * body.scale();
    if (body.eval_unit(nu).value - offset <= tol || body.eval_unit(-nu).value + offset <= tol) {
        throw GeometryError("grazing", "line does not cross the interior of the body");
    }
    const auto contact = [&](double theta) {
        return body.eval_unit(std::cos(theta) * d + std::sin(theta) * nu).contact;
    };
    // Bisection down to adjacent doubles; near flat boundary points the
    // contact moves much faster than the angle, so the final answer is the
    // crossing of the line with the short secant between the bracket contacts.
    double lo = -std::numbers::pi / 2.0, hi = std::numbers::pi / 2.0;
    Vec3 x_lo = contact(lo), x_hi = contact(hi);
    double g_lo = x_lo.dot(nu) - offset, g_hi = x_hi.dot(nu) - offset;
    while (g_lo < 0.0 && g_hi > 0.0) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        const Vec3 x = contact(mid);
        const double g = x.dot(nu) - offset;
        if (g < 0.0) {
            lo = mid, x_lo = x, g_lo = g;
        } else {
            hi = mid, x_hi = x, g_hi = g;
        }
    }
    if (g_lo >= 0.0) return x_lo;
    if (g_hi <= 0.0) return x_hi;
    if ((x_hi - x_lo).norm() > 1e-4 * body.scale()) {
        throw GeometryError("grazing", "line meets the boundary along a flat piece");
    }
    return x_lo + (-g_lo / (g_hi - g_lo)) * (x_hi - x_lo);
}

double chord_length(const ConvexBody& body, const Vec3& normal, double offset) {
    const double tol = 1e-12 * body.scale();
    if (body.eval_unit(normal).value - offset <= tol || body.eval_unit(-normal).value + offset <= tol) {
        return 0.0;
    }
    const Vec3 d(normal.y(), -normal.x(), 0.0);
    const Vec3 p = offset * normal;
    return (line_exit_point(body, p, d) - line_exit_point(body, p, -d)).norm();
}

}  // namespace tsec
