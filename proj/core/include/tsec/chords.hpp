#pragma once

#include "tsec/body.hpp"
#include "tsec/geometry.hpp"

#include <optional>
#include <ostream>
#include <vector>

namespace tsec {

/// Which circle the chord is tangent to.
enum class ChordPhase { kBall, kReflectedBall };

/// One chord [a, b] of the alternating construction.
struct ChordState {
    Vec3 a = Vec3::Zero();
    Vec3 b = Vec3::Zero();
    int step_index = 0;
    ChordPhase which = ChordPhase::kBall;
    double dist_to_origin = 0.0;     ///< distance of the line L(a,b) to O
    double tangency_residual = 0.0;  ///< |dist(L(a,b), circle centre) - r|
};

struct ChordTrace {
    std::vector<ChordState> states;
    /// Final chord line when the run stopped on the distance criterion.
    std::optional<Line2> limit_line;
};

/// From a boundary point `from` of the planar body M, draws the tangent line
/// to `circle` that keeps the circle on its left (for orientation +1; right
/// for -1) and returns the second boundary point on that line.
///
/// With d the unit direction from `from` to the result and u = d rotated by
/// +90 degrees, {d, u} is a right frame and <c - from, u> > 0.
/// Throws InputError("interior-start") if `from` is not outside the circle
/// and GeometryError("grazing") if the line does not cut M transversally.
Vec3 tangent_step(const ConvexBody& body, const Ball& circle, const Vec3& from, int orientation = 1);

struct ChordOptions {
    int max_steps = 10000;
    double stop_tol = 1e-9;
    ChordPhase first = ChordPhase::kBall;
};

/// Alternates tangent_step with B and -B starting from `start` on bd M and
/// stops once a chord line passes within stop_tol of O.
///
/// Requires M planar, O-symmetric and strictly convex, O outside B and B
/// inside int M (HypothesisError "not-centered", "not-strict",
/// "ball-contains-O", "ball-not-interior"); `start` must lie on bd M
/// (InputError "start-not-on-boundary").
ChordTrace iterate_chords(const ConvexBody& body, const Ball& ball, const Vec3& start,
                          const ChordOptions& options = {});

struct LimitLineResidual {
    double to_ball = 0.0;            ///< |dist(line, c) - r|
    double to_reflected_ball = 0.0;  ///< |dist(line, -c) - r|
    double to_origin = 0.0;          ///< dist(line, O)
    double max() const { return std::max({to_ball, to_reflected_ball, to_origin}); }
};

LimitLineResidual line_residuals(const Line2& line, const Ball& ball);
/// Throws GeometryError("not-converged") when the trace has no limit line.
LimitLineResidual limit_line_check(const ChordTrace& trace, const Ball& ball);

/// Boundary point of a planar body containing O on the ray of angle `angle`.
Vec3 radial_boundary_point(const ConvexBody& body, double angle);
/// Distance from x to the boundary point on the ray from O through x.
double boundary_residual(const ConvexBody& body, const Vec3& x);

/// CSV (RFC 4180) with header step,ax,ay,bx,by,dist_to_O,tangency_residual.
void write_trace_csv(std::ostream& os, const ChordTrace& trace);

}  // namespace tsec
