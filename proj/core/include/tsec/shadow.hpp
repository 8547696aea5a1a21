#pragma once

#include "tsec/body.hpp"
#include "tsec/geometry.hpp"

#include <ostream>
#include <vector>

namespace tsec {

/// Least-squares plane {x : <x, normal> = offset} through a point cloud.
struct PlaneFit {
    Vec3 normal = Vec3::UnitZ();
    double offset = 0.0;
    double max_residual = 0.0;  ///< max |<x, normal> - offset|
};

/// Normal is the smallest-variance direction of the centred cloud.
PlaneFit fit_plane(const std::vector<Vec3>& points);

/// Boundary points of K whose supporting plane is parallel to `direction`.
struct ShadowSample {
    Direction direction = Direction(Vec3::UnitZ());
    std::vector<Vec3> normals;  ///< outer normals v, orthogonal to direction
    std::vector<Vec3> points;   ///< contact(v)
    PlaneFit planarity;
};

/// Samples the shadow boundary on `grid` (>= 8) normals of the great circle
/// orthogonal to u. Throws GeometryError("shadow-ambiguous") when K is not
/// strictly convex and InputError("bad-dimension") for planar bodies.
ShadowSample shadow_boundary(const ConvexBody& body, const Direction& u, int grid);

/// CSV with header angle,x,y,z (angle of the normal in the frame of u^perp).
void write_shadow_csv(std::ostream& os, const ShadowSample& sample);

/// Touch points x1, x2 of the supporting planes parallel to the central plane
/// with normal m, and the shadow boundary w.r.t. the line L through them.
struct CentralShadow {
    Vec3 touch_plus = Vec3::Zero();
    Vec3 touch_minus = Vec3::Zero();
    ShadowSample shadow;
    /// max |<p, m>| over shadow points p: zero iff the shadow lies in the
    /// central plane.
    double max_distance = 0.0;
};

CentralShadow central_plane_shadow(const ConvexBody& body, const Direction& plane_normal, int grid);

struct LocusEntry {
    Hyperplane plane;
    Vec3 center = Vec3::Zero();  ///< fitted symmetry centre of the section
    double symmetry_defect = 0.0;
    double distance = 0.0;  ///< signed distance of the centre to the central plane
};

/// Section centres for the tangent planes of B parallel to a translation
/// vector u.
///
/// The central plane P has normal m; G is the supporting plane of B with
/// outer normal m. When G cap K has centre z, -(G cap K) = u + (G cap K) with
/// u = -2z. The family consists of tangent planes of B whose normals are
/// orthogonal to u; each section's centre is fitted and its signed distance
/// to P reported.
struct CenterLocus {
    Direction plane_normal = Direction(Vec3::UnitZ());
    Vec3 gamma_center = Vec3::Zero();
    Vec3 translation = Vec3::Zero();  ///< u = -2 * gamma_center
    /// The projection of B onto P along u misses O.
    bool origin_outside_projection = false;
    std::vector<LocusEntry> entries;
    double max_abs_distance = 0.0;
};

/// Throws GeometryError("degenerate-translation") when G cap K is centred at
/// O (u vanishes).
CenterLocus section_center_locus(const ConvexBody& body, const Ball& ball, const Direction& plane_normal,
                                 int family_size, int section_grid = 512, int threads = 1);

}  // namespace tsec
