#pragma once

#include "tsec/types.hpp"

#include <utility>

namespace tsec {

inline constexpr double kUnitTolerance = 1e-12;

/// A unit vector in R^2 (embedded with z = 0) or R^3.
class Direction {
public:
    /// Validates |v| = 1 within 1e-12; throws InputError("non-unit") otherwise.
    explicit Direction(const Vec3& v);

    /// Normalizes v; throws InputError("zero-vector") when |v| is tiny.
    static Direction normalized(const Vec3& v);
    /// The planar direction (cos angle, sin angle, 0).
    static Direction planar(double angle);

    const Vec3& vec() const noexcept { return v_; }
    double operator[](int i) const noexcept { return v_[i]; }
    Direction operator-() const noexcept { return Direction(-v_, Unchecked{}); }
    bool is_planar() const noexcept { return v_.z() == 0.0; }

private:
    struct Unchecked {};
    Direction(const Vec3& v, Unchecked) : v_(v) {}

    Vec3 v_;
};

/// Canonical orthonormal basis (e1, e2) of the plane orthogonal to n, with
/// (e1, e2, n) right-handed. For n = e_z this is (e_x, e_y).
std::pair<Vec3, Vec3> orthonormal_frame(const Vec3& n);

/// Solid ball (disk in the plane) used as the interior ball B.
struct Ball {
    Vec3 center = Vec3::Zero();
    double radius = 0.0;

    /// Central reflection -B.
    Ball reflected() const { return {-center, radius}; }
    bool contains_origin() const { return center.norm() <= radius; }
};

/// Oriented hyperplane {x : <x, normal> = offset} in R^3 with an in-plane
/// orthonormal frame anchored at `base`.
class Hyperplane {
public:
    /// Frame base point defaults to offset * normal (the foot of O).
    Hyperplane(const Direction& normal, double offset);
    /// `base` must lie on the plane (within 1e-9 relative).
    Hyperplane(const Direction& normal, double offset, const Vec3& base);

    const Vec3& normal() const noexcept { return normal_; }
    double offset() const noexcept { return offset_; }
    const Vec3& base() const noexcept { return base_; }
    const Vec3& e1() const noexcept { return e1_; }
    const Vec3& e2() const noexcept { return e2_; }

    /// Same plane, frame axes rotated by `angle` about the normal.
    Hyperplane with_frame_rotation(double angle) const;
    /// Same plane and axes, different base point (projected onto the plane).
    Hyperplane with_base(const Vec3& base) const;

    Vec3 lift(const Vec2& y) const { return base_ + y.x() * e1_ + y.y() * e2_; }
    Vec3 lift_direction(const Vec2& v) const { return v.x() * e1_ + v.y() * e2_; }
    Vec2 coordinates(const Vec3& x) const {
        const Vec3 d = x - base_;
        return {d.dot(e1_), d.dot(e2_)};
    }
    double signed_distance(const Vec3& x) const { return x.dot(normal_) - offset_; }

private:
    Vec3 normal_;
    double offset_;
    Vec3 base_;
    Vec3 e1_;
    Vec3 e2_;
};

/// Oriented line {x : <x, normal> = offset} in the plane; `direction` is the
/// normal rotated clockwise so that (direction, normal) is a right frame.
struct Line2 {
    Vec3 normal = Vec3::UnitY();
    double offset = 0.0;

    static Line2 through(const Vec3& p, const Vec3& q);
    Vec3 direction() const { return {normal.y(), -normal.x(), 0.0}; }
    double distance_to(const Vec3& x) const { return std::abs(x.dot(normal) - offset); }
};

/// 2-D cross product of the xy components.
inline double cross2(const Vec3& a, const Vec3& b) { return a.x() * b.y() - a.y() * b.x(); }

}  // namespace tsec
