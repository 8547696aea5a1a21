#pragma once

#include "tsec/body.hpp"
#include "tsec/geometry.hpp"

#include <optional>
#include <vector>

namespace tsec {

/// Supporting plane of `ball` with outer normal u:
/// {x : <x,u> = <center,u> + radius}; the frame base point is the tangency
/// point center + radius * u, and the ball lies on the negative side.
Hyperplane tangent_plane(const Ball& ball, const Direction& u);

/// Throws GeometryError("empty-section") when the hyperplane {<x,n> = offset}
/// misses K and GeometryError("degenerate-section") when it only touches K.
void require_plane_meets_interior(const ConvexBody& body, const Vec3& normal, double offset);

struct SectionPoint {
    double value = 0.0;          ///< h_{P cap K}(v) - <base, v>
    Vec3 contact = Vec3::Zero();  ///< extreme point of P cap K in direction v
};

/// Support function of the section P cap K about the frame base point b0, in
/// the in-plane unit direction v (a 3-D vector orthogonal to the normal n):
///
///     h(v) = inf_s [ h_K(v + s n) - s <b0, n> ] - <b0, v>.
///
/// The infimum is a convex problem in s, solved by bracketing and
/// golden-section search with a parabolic polish.
SectionPoint section_support_point(const ConvexBody& body, const Hyperplane& plane, const Vec3& v);
double section_support(const ConvexBody& body, const Hyperplane& plane, const Vec3& v);
/// Same, with v given in the plane's frame (a planar Direction).
double section_support(const ConvexBody& body, const Hyperplane& plane, const Direction& v);

/// The section P cap K as a planar body in the frame of P (coordinates are
/// relative to the frame base point).
class SectionBody {
public:
    SectionBody(ConvexBody parent, Hyperplane plane);

    const ConvexBody& parent() const noexcept { return parent_; }
    const Hyperplane& plane() const noexcept { return plane_; }
    /// Planar body whose support function is the section support in frame
    /// coordinates; usable with every 2-D operation.
    const ConvexBody& body() const noexcept { return body_; }
    double support(const Direction& v) const { return body_.support(v); }
    /// Maps frame coordinates back to space.
    Vec3 to_space(const Vec2& y) const { return plane_.lift(y); }

    std::optional<Vec2> center_estimate;

private:
    ConvexBody parent_;
    Hyperplane plane_;
    ConvexBody body_;
};

/// Builds a SectionBody after checking that the plane meets int K and that
/// the section has positive width on a grid of `grid_size` (>= 16) in-plane
/// directions.
SectionBody section_as_body(const ConvexBody& body, const Hyperplane& plane, int grid_size = 64);

/// Supporting planes of a ball for a list of outer normals.
struct TangentFamily {
    Ball ball;
    std::vector<Direction> normals;
    std::vector<Hyperplane> planes;
};

TangentFamily make_tangent_family(const Ball& ball, std::vector<Direction> normals);

/// Boundary point of a planar body reached from `point` by moving along the
/// line in direction `dir` (the far endpoint of the chord in that direction).
///
/// Found by bisection on the angle theta of the normal
/// w = cos(theta) dir + sin(theta) nu, where nu is the line normal: the
/// signed offset <contact(w), nu> - <point, nu> is nondecreasing in theta and
/// its root is the wanted contact point. The last bracket is closed with a
/// secant between its two contacts. Throws GeometryError("grazing") when the
/// line does not cross the interior or meets a flat boundary piece.
Vec3 line_exit_point(const ConvexBody& body, const Vec3& point, const Vec3& dir);

/// Length of the chord of a planar body cut by {x : <x, normal> = offset};
/// zero when the line misses the interior.
double chord_length(const ConvexBody& body, const Vec3& normal, double offset);

}  // namespace tsec
