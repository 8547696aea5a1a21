#include "tsec/shadow.hpp"

#include "tsec/metrics.hpp"
#include "tsec/sections.hpp"
#include "tsec/grids.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <iomanip>
#include <numbers>
#include <optional>

namespace tsec {

PlaneFit fit_plane(const std::vector<Vec3>& points) {
    if (points.size() < 3) throw InputError("bad-grid", "plane fit needs at least three points");
    Vec3 mean = Vec3::Zero();
    for (const Vec3& p : points) mean += p;
    mean /= static_cast<double>(points.size());
    Mat3 cov = Mat3::Zero();
    for (const Vec3& p : points) cov += (p - mean) * (p - mean).transpose();
    const Eigen::SelfAdjointEigenSolver<Mat3> eig(cov);
    // Eigenvalues are sorted ascending.
    PlaneFit fit;
    fit.normal = eig.eigenvectors().col(0).normalized();
    fit.offset = mean.dot(fit.normal);
    for (const Vec3& p : points) fit.max_residual = std::max(fit.max_residual, std::abs(p.dot(fit.normal) - fit.offset));
    return fit;
}

ShadowSample shadow_boundary(const ConvexBody& body, const Direction& u, int grid) {
    if (body.dim() != 3) throw InputError("bad-dimension", "shadow boundaries need a 3-D body");
    if (!body.strictly_convex()) throw GeometryError("shadow-ambiguous", "shadow of a non-strictly convex body is not a curve");
    if (grid < 8) throw InputError("bad-grid", "shadow grid needs at least 8 normals");
    const auto [e1, e2] = orthonormal_frame(u.vec());
    ShadowSample s;
    s.direction = u;
    s.normals.reserve(grid);
    s.points.reserve(grid);
    for (int k = 0; k < grid; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / grid;
        const Vec3 v = (std::cos(phi) * e1 + std::sin(phi) * e2).normalized();
        s.normals.push_back(v);
        s.points.push_back(body.eval_unit(v).contact);
    }
    s.planarity = fit_plane(s.points);
    return s;
}

void write_shadow_csv(std::ostream& os, const ShadowSample& sample) {
    const auto [e1, e2] = orthonormal_frame(sample.direction.vec());
    os << "angle,x,y,z\r\n" << std::setprecision(17);
    for (std::size_t k = 0; k < sample.points.size(); ++k) {
        const Vec3& v = sample.normals[k];
        const Vec3& p = sample.points[k];
        os << std::atan2(v.dot(e2), v.dot(e1)) << ',' << p.x() << ',' << p.y() << ',' << p.z() << "\r\n";
    }
}

CentralShadow central_plane_shadow(const ConvexBody& body, const Direction& plane_normal, int grid) {
    CentralShadow out;
    out.touch_plus = body.contact(plane_normal);
    out.touch_minus = body.contact(-plane_normal);
    out.shadow = shadow_boundary(body, Direction::normalized(out.touch_plus - out.touch_minus), grid);
    for (const Vec3& p : out.shadow.points) {
        out.max_distance = std::max(out.max_distance, std::abs(p.dot(plane_normal.vec())));
    }
    return out;
}

namespace {

struct FittedCenter {
    Vec3 center;
    double defect;
};

FittedCenter fit_section_center(const ConvexBody& body, const Hyperplane& plane, int section_grid) {
    const SectionBody section = section_as_body(body, plane);
    const SymmetryReport rep = symmetry_fit(section, section_grid);
    return {section.to_space(rep.center), rep.defect};
}

}  // namespace

CenterLocus section_center_locus(const ConvexBody& body, const Ball& ball, const Direction& plane_normal,
                                 int family_size, int section_grid, int threads) {
    if (body.dim() != 3) throw InputError("bad-dimension", "center locus needs a 3-D body");
    if (family_size < 1) throw InputError("bad-grid", "family needs at least one plane");
    CenterLocus out;
    out.plane_normal = plane_normal;
    out.gamma_center = fit_section_center(body, tangent_plane(ball, plane_normal), section_grid).center;
    out.translation = -2.0 * out.gamma_center;
    const double len = out.translation.norm();
    if (len <= 1e-9 * body.scale()) {
        throw GeometryError("degenerate-translation", "section centre is at O");
    }
    const Vec3 u = out.translation / len;
    // Distance from the ball centre to the line O + t u.
    const Vec3 c = ball.center;
    out.origin_outside_projection = (c - c.dot(u) * u).norm() > ball.radius;

    const auto [e1, e2] = orthonormal_frame(u);
    std::vector<std::optional<LocusEntry>> slots(family_size);
    parallel_for(family_size, threads, [&](int k) {
        const double phi = 2.0 * std::numbers::pi * k / family_size;
        const Direction n = Direction::normalized(std::cos(phi) * e1 + std::sin(phi) * e2);
        const Hyperplane plane = tangent_plane(ball, n);
        const FittedCenter fc = fit_section_center(body, plane, section_grid);
        slots[k] = LocusEntry{plane, fc.center, fc.defect, fc.center.dot(plane_normal.vec())};
    });
    out.entries.reserve(family_size);
    for (auto& e : slots) {
        out.max_abs_distance = std::max(out.max_abs_distance, std::abs(e->distance));
        out.entries.push_back(std::move(*e));
    }
    return out;
}

}  // namespace tsec
