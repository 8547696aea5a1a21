#include "support.hpp"

#include "tsec/chords.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

using namespace tsec;

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 rotate(const Vec3& v, double a) {
    return {std::cos(a) * v.x() - std::sin(a) * v.y(), std::sin(a) * v.x() + std::cos(a) * v.y(), 0.0};
}

Mat3 rotation_z(double a) {
    Mat3 r = Mat3::Identity();
    r.topLeftCorner<2, 2>() << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
    return r;
}

// Oracle step on the ellipse x^2/A^2 + y^2/B^2 = 1: Thales tangency point, then
// the second root of the quadratic along the tangent.
Vec2 oracle_step(double A, double B, const Vec2& a, const Vec2& c, double r) {
    const Vec2 t = oracle::left_tangent_point(a, c, r);
    return oracle::ellipse_second_hit(A, B, a, (t - a).normalized());
}

}  // namespace

TEST_CASE("single tangent steps against the Thales construction") {
    SUBCASE("disk") {
        const ConvexBody disk = make_ball(2, 2.0);
        const Ball b{Vec3(0.8, 0, 0), 0.3};
        for (double t : {0.3, 1.2, 2.5, 4.0, 5.9}) {
            const Vec3 a(2 * std::cos(t), 2 * std::sin(t), 0);
            const Vec3 next = tangent_step(disk, b, a);
            CHECK((next.head<2>() - oracle_step(2, 2, a.head<2>(), b.center.head<2>(), b.radius)).norm() <= 1e-10);
        }
    }
    SUBCASE("ellipse") {
        const ConvexBody e = body_from_spec("ellipsoid(2,1)");
        const Ball b{Vec3(0.5, 0.2, 0), 0.2};
        for (double t : {0.1, 1.0, 2.0, 3.3, 4.4}) {
            const Vec3 a(2 * std::cos(t), std::sin(t), 0);
            const Vec3 next = tangent_step(e, b, a);
            CHECK((next.head<2>() - oracle_step(2, 1, a.head<2>(), b.center.head<2>(), b.radius)).norm() <= 1e-10);
            // The circle sits on the left of the travel direction, at distance r.
            const Line2 l = Line2::through(a, next);
            CHECK(l.distance_to(b.center) == doctest::Approx(b.radius).epsilon(1e-10));
            CHECK(l.normal.dot(b.center) - l.offset == doctest::Approx(b.radius).epsilon(1e-10));
        }
    }
    SUBCASE("negative orientation is the mirror image") {
        const ConvexBody disk = make_ball(2, 2.0);
        const Ball b{Vec3(0.8, 0.3, 0), 0.3};
        const Ball mirrored{Vec3(0.8, -0.3, 0), 0.3};
        const Vec3 a(2 * std::cos(2.0), 2 * std::sin(2.0), 0);
        const Vec3 am(a.x(), -a.y(), 0);
        const Vec3 p = tangent_step(disk, b, a, -1);
        const Vec3 q = tangent_step(disk, mirrored, am, 1);
        CHECK((p - Vec3(q.x(), -q.y(), 0)).norm() <= 1e-10);
    }
}

TEST_CASE("disk run follows the oracle step by step") {
    const ConvexBody disk = make_ball(2, 2.0);
    const Ball b{Vec3(0.8, 0, 0), 0.3};
    const Vec3 start(0, 2, 0);
    ChordOptions opt;
    opt.max_steps = 200;
    opt.stop_tol = 1e-300;  // stops only when the line hits O exactly
    const ChordTrace trace = iterate_chords(disk, b, start, opt);
    REQUIRE(trace.states.size() >= 40);
    Vec2 a = start.head<2>();
    double worst = 0.0;
    for (std::size_t i = 0; i < trace.states.size(); ++i) {
        const Vec2 c = (i % 2 == 0 ? b.center : Vec3(-b.center)).head<2>();
        a = oracle_step(2, 2, a, c, b.radius);
        worst = std::max(worst, (trace.states[i].b.head<2>() - a).norm());
        // Project back onto the circle so both runs share rounding drift only.
        a = 2.0 * a.normalized();
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("disk limit line makes angle asin(r/|c|) with the centre direction") {
    const ConvexBody disk = make_ball(2, 2.0);
    for (const Ball& b : {Ball{Vec3(0.8, 0, 0), 0.3}, Ball{Vec3(0.5, 0.9, 0), 0.4}}) {
        ChordOptions opt;
        opt.stop_tol = 1e-8;
        const ChordTrace trace = iterate_chords(disk, b, Vec3(0, -2, 0), opt);
        REQUIRE(trace.limit_line);
        const LimitLineResidual r = limit_line_check(trace, b);
        CHECK(r.max() <= 1e-6);
        const Vec3 dir = trace.limit_line->direction();
        const double sin_angle = std::abs(dir.x() * b.center.y() - dir.y() * b.center.x()) / b.center.norm();
        CHECK(sin_angle == doctest::Approx(b.radius / b.center.norm()).epsilon(1e-6));
    }
}

TEST_CASE("trace certificates") {
    for (const auto& spec : testing::catalog2()) {
        const ConvexBody m = body_from_spec(spec, 2);
        const Ball b{Vec3(0.3, 0.2, 0) * m.scale() / 2.0, 0.1 * m.scale() / 2.0};
        ChordOptions opt;
        opt.stop_tol = 1e-8;
        const ChordTrace trace = iterate_chords(m, b, radial_boundary_point(m, 1.0), opt);
        INFO(spec);
        REQUIRE(trace.limit_line);
        for (std::size_t i = 0; i < trace.states.size(); ++i) {
            const ChordState& s = trace.states[i];
            CHECK(s.step_index == static_cast<int>(i));
            CHECK(s.which == (i % 2 == 0 ? ChordPhase::kBall : ChordPhase::kReflectedBall));
            CHECK(s.tangency_residual <= 1e-9 * m.scale());
            CHECK(boundary_residual(m, s.b) <= 1e-9 * m.scale());
            if (i + 1 < trace.states.size()) CHECK(s.b == trace.states[i + 1].a);
        }
        CHECK(trace.states.back().dist_to_origin <= 1e-8);
    }
}

TEST_CASE("property: rotating the configuration rotates the trace") {
    std::mt19937_64 gen(71);
    std::uniform_real_distribution<double> U(0.0, 2 * kPi);
    const ConvexBody e = body_from_spec("ellipsoid(2,1)");
    const Ball b{Vec3(0.4, 0.3, 0), 0.15};
    const Vec3 start = radial_boundary_point(e, 2.2);
    ChordOptions opt;
    opt.max_steps = 40;
    opt.stop_tol = 1e-300;
    const ChordTrace base = iterate_chords(e, b, start, opt);
    for (int trial = 0; trial < 5; ++trial) {
        const double a = U(gen);
        const ConvexBody er = affine_image(e, rotation_z(a));
        const ChordTrace rt = iterate_chords(er, Ball{rotate(b.center, a), b.radius}, rotate(start, a), opt);
        REQUIRE(rt.states.size() == base.states.size());
        for (std::size_t i = 0; i < base.states.size(); ++i) {
            CHECK((rt.states[i].b - rotate(base.states[i].b, a)).norm() <= 1e-8);
        }
    }
}

TEST_CASE("property: swapping the ball for its reflection mirrors the trace through O") {
    const ConvexBody m = body_from_spec("lp_ball(4,1.5)", 2);
    const Ball b{Vec3(0.3, -0.2, 0), 0.1};
    const Vec3 start = radial_boundary_point(m, 0.7);
    ChordOptions opt;
    opt.max_steps = 30;
    opt.stop_tol = 1e-300;
    const ChordTrace t1 = iterate_chords(m, b, start, opt);
    const ChordTrace t2 = iterate_chords(m, b.reflected(), -start, opt);
    for (std::size_t i = 0; i < t1.states.size(); ++i) CHECK((t1.states[i].b + t2.states[i].b).norm() <= 1e-8);
}

TEST_CASE("chord hypotheses and input errors") {
    const ConvexBody disk = make_ball(2, 2.0);
    const Vec3 start(0, 2, 0);
    CHECK(testing::error_code([&] { iterate_chords(disk, Ball{Vec3(0.1, 0, 0), 0.3}, start); }) ==
          "ball-contains-O");
    CHECK(testing::error_code([&] { iterate_chords(disk, Ball{Vec3(1.9, 0, 0), 0.3}, start); }) ==
          "ball-not-interior");
    CHECK(testing::error_code([&] {
              iterate_chords(body_from_spec("translate(ball(2),0.1,0)", 2), Ball{Vec3(0.8, 0, 0), 0.3}, start);
          }) == "not-centered");
    const ConvexBody flat = make_custom(BodyTraits{2, false, true}, [](const Vec3& u) {
        return SupportPoint{2.0, 2.0 * u};
    });
    CHECK(testing::error_code([&] { iterate_chords(flat, Ball{Vec3(0.8, 0, 0), 0.3}, start); }) == "not-strict");
    CHECK(testing::error_code([&] { iterate_chords(disk, Ball{Vec3(0.8, 0, 0), 0.3}, Vec3(0, 1.9, 0)); }) ==
          "start-not-on-boundary");
    ChordOptions bad;
    bad.max_steps = 0;
    CHECK(testing::error_code([&] { iterate_chords(disk, Ball{Vec3(0.8, 0, 0), 0.3}, start, bad); }) ==
          "bad-options");
    CHECK(testing::error_code([&] { tangent_step(disk, Ball{Vec3(0.8, 0, 0), 0.3}, Vec3(0.8, 0.1, 0)); }) ==
          "interior-start");
    CHECK(testing::error_code([&] { tangent_step(disk, Ball{Vec3(0.8, 0, 0), 0.3}, start, 0); }) ==
          "bad-orientation");
    CHECK(testing::error_code([&] { tangent_step(disk, Ball{Vec3(0.8, 0, 0.1), 0.3}, start); }) == "bad-ball");
    // The hypothesis errors are input errors.
    CHECK_THROWS_AS(iterate_chords(disk, Ball{Vec3(0.1, 0, 0), 0.3}, start), InputError);
    ChordOptions few;
    few.max_steps = 3;
    few.stop_tol = 1e-300;
    const ChordTrace short_trace = iterate_chords(disk, Ball{Vec3(0.8, 0, 0), 0.3}, start, few);
    CHECK(testing::error_code([&] { limit_line_check(short_trace, Ball{Vec3(0.8, 0, 0), 0.3}); }) == "not-converged");
}

TEST_CASE("trace CSV") {
    const ConvexBody disk = make_ball(2, 2.0);
    ChordOptions opt;
    opt.max_steps = 5;
    opt.stop_tol = 1e-300;
    const ChordTrace trace = iterate_chords(disk, Ball{Vec3(0.8, 0, 0), 0.3}, Vec3(0, 2, 0), opt);
    std::ostringstream os;
    write_trace_csv(os, trace);
    const std::string csv = os.str();
    CHECK(csv.rfind("step,ax,ay,bx,by,dist_to_O,tangency_residual\r\n", 0) == 0);
    int lines = 0;
    for (std::size_t p = csv.find("\r\n"); p != std::string::npos; p = csv.find("\r\n", p + 2)) ++lines;
    CHECK(lines == 6);
}
