#include "tsec/geometry.hpp"

#include <Eigen/Geometry>

#include <cmath>

namespace tsec {

Direction::Direction(const Vec3& v) : v_(v) {
    if (!v.allFinite() || std::abs(v.norm() - 1.0) > kUnitTolerance) {
        throw InputError("non-unit", "direction must have unit norm");
    }
}

Direction Direction::normalized(const Vec3& v) {
    const double n = v.norm();
    if (!(n > 1e-300) || !std::isfinite(n)) {
        throw InputError("zero-vector", "cannot normalize a zero or non-finite vector");
    }
    return Direction(Vec3(v / n), Unchecked{});
}

Direction Direction::planar(double angle) {
    return Direction(Vec3(std::cos(angle), std::sin(angle), 0.0), Unchecked{});
}

std::pair<Vec3, Vec3> orthonormal_frame(const Vec3& n) {
    // Gram-Schmidt against e_x, falling back to e_y when n is close to e_x.
    Vec3 seed = Vec3::UnitX();
    if (std::abs(n.x()) > 0.9) seed = Vec3::UnitY();
    Vec3 e1 = seed - seed.dot(n) * n;
    e1.normalize();
    Vec3 e2 = n.cross(e1);
    e2.normalize();
    return {e1, e2};
}

Hyperplane::Hyperplane(const Direction& normal, double offset)
    : Hyperplane(normal, offset, offset * normal.vec()) {}

Hyperplane::Hyperplane(const Direction& normal, double offset, const Vec3& base)
    : normal_(normal.vec()), offset_(offset), base_(base) {
    if (!std::isfinite(offset) || !base.allFinite()) {
        throw InputError("bad-plane", "plane offset and base must be finite");
    }
    if (std::abs(base.dot(normal_) - offset) > 1e-9 * (1.0 + std::abs(offset) + base.norm())) {
        throw InputError("bad-plane", "frame base point is not on the plane");
    }
    std::tie(e1_, e2_) = orthonormal_frame(normal_);
}

Hyperplane Hyperplane::with_frame_rotation(double angle) const {
    Hyperplane out = *this;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    out.e1_ = c * e1_ + s * e2_;
    out.e2_ = -s * e1_ + c * e2_;
    return out;
}

Hyperplane Hyperplane::with_base(const Vec3& base) const {
    Hyperplane out = *this;
    out.base_ = base - (base.dot(normal_) - offset_) * normal_;
    return out;
}

Line2 Line2::through(const Vec3& p, const Vec3& q) {
    Vec3 d = q - p;
    d.z() = 0.0;
    const double len = d.norm();
    if (!(len > 0.0)) throw GeometryError("degenerate-line", "line through coincident points");
    d /= len;
    Line2 line;
    line.normal = Vec3(-d.y(), d.x(), 0.0);
    line.offset = p.dot(line.normal);
    return line;
}

}  // namespace tsec
