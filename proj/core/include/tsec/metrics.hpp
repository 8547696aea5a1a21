#pragma once

#include "tsec/body.hpp"
#include "tsec/sections.hpp"

namespace tsec {

/// Best symmetry centre of a planar body and its Chebyshev defect.
///
/// Over the grid v_k, the body is symmetric about z iff
/// h(v) - h(-v) = 2 <z, v> for all v; `defect` is
/// min_z max_k |h(v_k) - h(-v_k) - 2 <z, v_k>|, which equals the smallest
/// support-uniform (Hausdorff) distance between the body and a reflection
/// of itself through a point.
struct SymmetryReport {
    Vec2 center = Vec2::Zero();  ///< in the body's (frame) coordinates
    double defect = 0.0;
    int grid_size = 0;
};

/// grid_size must be even and >= 32; directions are phase + 2 pi k / n.
SymmetryReport symmetry_fit(const ConvexBody& body, int grid_size, double phase = 0.0);
SymmetryReport symmetry_fit(const SectionBody& section, int grid_size, double phase = 0.0);

/// h(v) + h(-v).
double width(const ConvexBody& body, const Direction& v);
double width(const SectionBody& section, const Direction& v);

struct WidthReport {
    double min_width = 0.0;
    double max_width = 0.0;
    double defect = 0.0;  ///< max_width - min_width
    Direction min_direction = Direction::planar(0.0);
    Direction max_direction = Direction::planar(0.0);
    int grid_size = 0;
};

/// grid_size must be even and >= 64.
WidthReport width_report(const ConvexBody& body, int grid_size, double phase = 0.0);
WidthReport width_report(const SectionBody& section, int grid_size, double phase = 0.0);

/// Chord joining the contact points in directions v and -v.
struct BinormalChord {
    Vec2 p = Vec2::Zero();  ///< contact(v)
    Vec2 q = Vec2::Zero();  ///< contact(-v)
    double length = 0.0;
    /// |sin| of the angle between the chord and v; zero iff both supporting
    /// lines (normal to v) are perpendicular to the chord.
    double residual = 0.0;
};

/// Throws GeometryError("ambiguous-contact") unless the body is strictly convex.
BinormalChord binormal_chord(const ConvexBody& body, const Direction& v);
BinormalChord binormal_chord(const SectionBody& section, const Direction& v);

}  // namespace tsec
