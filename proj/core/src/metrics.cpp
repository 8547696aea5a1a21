#include "tsec/metrics.hpp"

#include "tsec/minimax.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <numbers>

namespace tsec {

namespace {

void require_planar(const ConvexBody& body) {
    if (body.dim() != 2) throw InputError("bad-dimension", "metric needs a planar body");
}

void require_grid(int grid_size, int minimum) {
    if (grid_size < minimum || grid_size % 2 != 0) {
        throw InputError("bad-grid", "grid must be even and at least " + std::to_string(minimum));
    }
}

// Support values on the half grid and at the antipodes.
struct AntipodalSamples {
    std::vector<Direction> dirs;
    std::vector<double> plus;
    std::vector<double> minus;
};

AntipodalSamples sample_antipodal(const ConvexBody& body, int grid_size, double phase) {
    const int half = grid_size / 2;
    AntipodalSamples s;
    s.dirs.reserve(half);
    s.plus.resize(half);
    s.minus.resize(half);
    for (int k = 0; k < half; ++k) {
        const Direction v = Direction::planar(phase + 2.0 * std::numbers::pi * k / grid_size);
        s.dirs.push_back(v);
        s.plus[k] = body.eval_unit(v.vec()).value;
        s.minus[k] = body.eval_unit(-v.vec()).value;
    }
    return s;
}

}  // namespace

SymmetryReport symmetry_fit(const ConvexBody& body, int grid_size, double phase) {
    require_planar(body);
    require_grid(grid_size, 32);
    const AntipodalSamples s = sample_antipodal(body, grid_size, phase);
    const int half = grid_size / 2;
    Eigen::MatrixXd A(half, 2);
    Eigen::VectorXd b(half);
    for (int k = 0; k < half; ++k) {
        A(k, 0) = 2.0 * s.dirs[k][0];
        A(k, 1) = 2.0 * s.dirs[k][1];
        b[k] = s.plus[k] - s.minus[k];
    }
    const MinimaxFit fit = minimax_fit(A, b);
    return {Vec2(fit.x[0], fit.x[1]), fit.max_residual, grid_size};
}

SymmetryReport symmetry_fit(const SectionBody& section, int grid_size, double phase) {
    return symmetry_fit(section.body(), grid_size, phase);
}

double width(const ConvexBody& body, const Direction& v) {
    require_planar(body);
    return body.support(v) + body.support(-v);
}

double width(const SectionBody& section, const Direction& v) { return width(section.body(), v); }

WidthReport width_report(const ConvexBody& body, int grid_size, double phase) {
    require_planar(body);
    require_grid(grid_size, 64);
    const AntipodalSamples s = sample_antipodal(body, grid_size, phase);
    WidthReport r;
    r.grid_size = grid_size;
    r.min_width = std::numeric_limits<double>::infinity();
    r.max_width = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < s.dirs.size(); ++k) {
        const double w = s.plus[k] + s.minus[k];
        if (w < r.min_width) r.min_width = w, r.min_direction = s.dirs[k];
        if (w > r.max_width) r.max_width = w, r.max_direction = s.dirs[k];
    }
    r.defect = r.max_width - r.min_width;
    return r;
}

WidthReport width_report(const SectionBody& section, int grid_size, double phase) {
    return width_report(section.body(), grid_size, phase);
}

BinormalChord binormal_chord(const ConvexBody& body, const Direction& v) {
    require_planar(body);
    if (!body.strictly_convex()) {
        throw GeometryError("ambiguous-contact", "contact points of a non-strictly convex body are not unique");
    }
    const Vec3 p = body.contact(v);
    const Vec3 q = body.contact(-v);
    BinormalChord chord;
    chord.p = p.head<2>();
    chord.q = q.head<2>();
    const Vec3 d = p - q;
    chord.length = d.norm();
    chord.residual = chord.length > 0.0 ? std::abs(cross2(d, v.vec())) / chord.length : 0.0;
    return chord;
}

BinormalChord binormal_chord(const SectionBody& section, const Direction& v) {
    return binormal_chord(section.body(), v);
}

}  // namespace tsec
