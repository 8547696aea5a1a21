#pragma once

#include "tsec/body.hpp"
#include "tsec/sections.hpp"

#include <Eigen/Core>

#include <optional>
#include <ostream>
#include <vector>

namespace tsec {

/// Area of a planar body, integrating chord lengths across the x direction.
double body_area(const ConvexBody& body);

/// Area of the cap {x in K : <x, u> >= t} of a planar body, by adaptive
/// quadrature of the chord length with relative tolerance `tol` (default
/// 1e-12). Distance to the nearer supporting line is written as s^4, which
/// keeps the integrand smooth at curved tips (chord ~ s^2) and at flat points
/// of l4-type bodies (chord ~ s).
double cap_area(const ConvexBody& body, const Direction& u, double t, double tol = -1.0);

/// Offset t(u) whose cap has area delta. Bracketed Newton iteration on
/// t -> cap_area(t) - delta, whose derivative is minus the chord length;
/// falls back to bisection whenever a step leaves the bracket.
double cut_offset(const ConvexBody& body, const Direction& u, double delta);

/// Floating body of a planar body: the intersection of the half-planes
/// <x, u> <= t(u) that cut off area delta.
class FloatingBody2D {
public:
    FloatingBody2D(ConvexBody parent, double delta, std::vector<Direction> directions, std::vector<double> offsets);

    const ConvexBody& parent() const noexcept { return parent_; }
    double delta() const noexcept { return delta_; }
    const std::vector<Direction>& directions() const noexcept { return directions_; }
    const std::vector<double>& offsets() const noexcept { return offsets_; }

    /// Planar body with support value t(u) (computed on demand) and contact
    /// point at the midpoint of the cutting chord. For O-symmetric parents
    /// every cutting line touches the floating body at that midpoint, so
    /// t(u) is its support function.
    ConvexBody as_body() const;

private:
    ConvexBody parent_;
    double delta_;
    std::vector<Direction> directions_;
    std::vector<double> offsets_;
};

/// Throws InputError("delta-out-of-range") unless 0 < delta < area / 2 and
/// GeometryError("not-strict") for bodies that are not strictly convex.
FloatingBody2D floating_body(const ConvexBody& body, double delta, int grid, int threads = 1);

/// CSV with header angle,offset.
void write_floating_csv(std::ostream& os, const FloatingBody2D& fb);

/// Fit of B ~ rho A + (1 - rho) c (dilation about c, no rotation).
///
/// Minimizes max_k |h_B(v_k) - rho h_A(v_k) - <w, v_k>| over (rho, w) and
/// sets c = w / (1 - rho). `defect` is that minimum divided by the scale of A.
struct HomothetyFit {
    double ratio = 1.0;
    Vec2 translation = Vec2::Zero();  ///< w = (1 - rho) c
    std::optional<Vec2> center;       ///< unset when rho is 1 (pure translation)
    double defect_abs = 0.0;
    double defect = 0.0;
};

/// Planar bodies (or sections) on a grid of `grid` (>= 16) directions.
HomothetyFit homothety_defect(const ConvexBody& a, const ConvexBody& b, int grid = 256);
HomothetyFit homothety_defect(const SectionBody& a, const SectionBody& b, int grid = 256);
/// Fit of the tabulated offsets of a floating body against its parent.
HomothetyFit homothety_to_parent(const FloatingBody2D& fb);

/// Centred conic <x, Q x> = 1 fitted to contact points by least squares.
struct EllipseFit {
    Eigen::Matrix2d q = Eigen::Matrix2d::Identity();
    bool elliptic = false;  ///< Q positive definite
    /// max |<x, Q x> - 1| over a validation grid offset by half a step;
    /// +infinity when Q is not positive definite.
    double residual = 0.0;
};

EllipseFit ellipse_fit(const ConvexBody& body, int grid = 256);
double ellipse_residual(const ConvexBody& body, int grid = 256);

/// max h - min h over `grid` directions; zero iff the body is a disk about O.
double disk_residual(const ConvexBody& body, int grid = 256);

/// Max over polar angles of the spread of h over azimuths about `axis`.
double revolution_residual(const ConvexBody& body, const Direction& axis, int grid = 64);

}  // namespace tsec
