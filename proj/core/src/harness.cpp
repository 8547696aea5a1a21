#include "tsec/harness.hpp"

#include "tsec/grids.hpp"
#include "tsec/metrics.hpp"
#include "tsec/sections.hpp"

#include <functional>

namespace tsec {

std::string condition_name(Condition c) { return c == Condition::kBarkerLarman ? "BL" : "MONTEJANO"; }

GateReport evaluate_gates(const ConvexBody& body, const Ball& ball) {
    GateReport g;
    g.o_symmetric = body.o_symmetric();
    g.strictly_convex = body.strictly_convex();
    g.origin_outside_ball = !ball.contains_origin();
    g.ball_interior = ball.radius > 0.0;
    const double margin = 1e-12 * body.scale();
    if (g.ball_interior) {
        for (const Direction& u : fibonacci_sphere(2000)) {
            Vec3 v = u.vec();
            if (body.dim() == 2) {
                if (v.head<2>().norm() < 1e-3) continue;
                v = Vec3(v.x(), v.y(), 0.0).normalized();
            }
            if (!(body.eval_unit(v).value - ball.center.dot(v) - ball.radius > margin)) {
                g.ball_interior = false;
                break;
            }
        }
    }
    return g;
}

void require_gates(const ConvexBody& body, const Ball& ball, Condition condition) {
    const GateReport g = evaluate_gates(body, ball);
    if (!g.o_symmetric) throw HypothesisError("not-centered", "body must be O-symmetric");
    if (!g.ball_interior) throw HypothesisError("ball-not-interior", "ball must lie in the interior of the body");
    if (!g.origin_outside_ball) throw HypothesisError("ball-contains-O", "O must lie outside the ball");
    if (condition == Condition::kBarkerLarman && !g.strictly_convex) {
        throw HypothesisError("not-strict", "body must be strictly convex");
    }
}

namespace {

ConditionVerdict sweep(const ConvexBody& body, const Ball& ball, const SweepOptions& options, Condition condition,
                       const std::function<double(const SectionBody&, int)>& defect) {
    if (body.dim() != 3) throw InputError("bad-dimension", "condition sweeps need a 3-D body");
    if (options.grid < 1) throw InputError("bad-grid", "tangent grid must be positive");
    require_gates(body, ball, condition);
    const std::vector<Direction> normals = tangent_normal_grid(options.grid, options.seed);
    std::vector<double> defects(normals.size());
    parallel_for(static_cast<int>(normals.size()), options.threads, [&](int k) {
        const SectionBody section = section_as_body(body, tangent_plane(ball, normals[k]));
        defects[k] = defect(section, options.section_grid);
    });

    ConditionVerdict v;
    v.condition = condition;
    v.body_spec = body.label();
    v.ball = ball;
    v.grid = options.grid;
    v.section_grid = options.section_grid;
    v.scale = body.scale();
    v.per_plane.reserve(normals.size());
    for (std::size_t k = 0; k < normals.size(); ++k) {
        v.per_plane.push_back({normals[k], defects[k]});
        if (k == 0 || defects[k] > v.sup_defect) {
            v.sup_defect = defects[k];
            v.worst_normal = normals[k];
        }
    }
    v.sup_defect_rel = v.sup_defect / v.scale;
    return v;
}

}  // namespace

ConditionVerdict barker_larman_defect(const ConvexBody& body, const Ball& ball, const SweepOptions& options) {
    return sweep(body, ball, options, Condition::kBarkerLarman,
                 [](const SectionBody& s, int grid) { return symmetry_fit(s, grid).defect; });
}

ConditionVerdict montejano_defect(const ConvexBody& body, const Ball& ball, const SweepOptions& options) {
    return sweep(body, ball, options, Condition::kMontejano,
                 [](const SectionBody& s, int grid) { return width_report(s, grid).defect; });
}

}  // namespace tsec
