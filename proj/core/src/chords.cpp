#include "tsec/chords.hpp"

#include "tsec/sections.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>

namespace tsec {

namespace {

Vec3 rotate(const Vec3& v, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * v.x() - s * v.y(), s * v.x() + c * v.y(), 0.0};
}

void require_planar_ball(const Ball& ball) {
    if (ball.center.z() != 0.0 || !(ball.radius > 0.0)) {
        throw InputError("bad-ball", "planar ball needs z = 0 and a positive radius");
    }
}

}  // namespace

Vec3 tangent_step(const ConvexBody& body, const Ball& circle, const Vec3& from, int orientation) {
    if (body.dim() != 2) throw InputError("bad-dimension", "tangent steps need a planar body");
    if (orientation != 1 && orientation != -1) throw InputError("bad-orientation", "orientation must be +1 or -1");
    require_planar_ball(circle);
    const Vec3 to_center = circle.center - from;
    const double dist = to_center.norm();
    if (!(dist > circle.radius * (1.0 + 1e-12))) {
        throw InputError("interior-start", "tangent step must start outside the circle");
    }
    // Rotating the centre direction clockwise by asin(r/d) puts the circle on the left.
    const double alpha = std::asin(circle.radius / dist);
    const Vec3 d = rotate(to_center / dist, -orientation * alpha);
    return line_exit_point(body, from, d);
}

Vec3 radial_boundary_point(const ConvexBody& body, double angle) {
    return line_exit_point(body, Vec3::Zero(), Vec3(std::cos(angle), std::sin(angle), 0.0));
}

double boundary_residual(const ConvexBody& body, const Vec3& x) {
    const double r = x.head<2>().norm();
    if (r == 0.0) return body.scale();
    return (radial_boundary_point(body, std::atan2(x.y(), x.x())) - x).norm();
}

LimitLineResidual line_residuals(const Line2& line, const Ball& ball) {
    return {std::abs(line.distance_to(ball.center) - ball.radius),
            std::abs(line.distance_to(-ball.center) - ball.radius), std::abs(line.offset)};
}

ChordTrace iterate_chords(const ConvexBody& body, const Ball& ball, const Vec3& start,
                          const ChordOptions& options) {
    if (body.dim() != 2) throw InputError("bad-dimension", "chord dynamics needs a planar body");
    require_planar_ball(ball);
    if (!body.o_symmetric()) throw HypothesisError("not-centered", "body must be O-symmetric");
    if (!body.strictly_convex()) throw HypothesisError("not-strict", "body must be strictly convex");
    if (ball.contains_origin()) throw HypothesisError("ball-contains-O", "O must lie outside the ball");
    for (int k = 0; k < 720; ++k) {
        const double t = 2.0 * std::numbers::pi * k / 720;
        const Vec3 u(std::cos(t), std::sin(t), 0.0);
        if (!(body.eval_unit(u).value - ball.center.dot(u) - ball.radius > 0.0)) {
            throw HypothesisError("ball-not-interior", "ball must lie in the interior of the body");
        }
    }
    if (start.z() != 0.0 || boundary_residual(body, start) > 1e-9 * body.scale()) {
        throw InputError("start-not-on-boundary", "start point must lie on the boundary");
    }
    if (options.max_steps < 1 || !(options.stop_tol > 0.0)) {
        throw InputError("bad-options", "max_steps must be positive and stop_tol > 0");
    }

    const Ball reflected = ball.reflected();
    ChordTrace trace;
    Vec3 a = start;
    ChordPhase phase = options.first;
    for (int step = 0; step < options.max_steps; ++step) {
        const Ball& circle = phase == ChordPhase::kBall ? ball : reflected;
        const Vec3 b = tangent_step(body, circle, a, 1);
        const Line2 line = Line2::through(a, b);
        ChordState state{a, b, step, phase, std::abs(line.offset),
                         std::abs(line.distance_to(circle.center) - circle.radius)};
        trace.states.push_back(state);
        if (state.dist_to_origin <= options.stop_tol) {
            trace.limit_line = line;
            break;
        }
        a = b;
        phase = phase == ChordPhase::kBall ? ChordPhase::kReflectedBall : ChordPhase::kBall;
    }
    return trace;
}

LimitLineResidual limit_line_check(const ChordTrace& trace, const Ball& ball) {
    if (!trace.limit_line) throw GeometryError("not-converged", "trace has no limit line");
    return line_residuals(*trace.limit_line, ball);
}

void write_trace_csv(std::ostream& os, const ChordTrace& trace) {
    os << "step,ax,ay,bx,by,dist_to_O,tangency_residual\r\n";
    os << std::setprecision(17);
    for (const ChordState& s : trace.states) {
        os << s.step_index << ',' << s.a.x() << ',' << s.a.y() << ',' << s.b.x() << ',' << s.b.y() << ','
           << s.dist_to_origin << ',' << s.tangency_residual << "\r\n";
    }
}

}  // namespace tsec
