#include "support.hpp"

#include "tsec/sections.hpp"
#include "tsec/shadow.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

using namespace tsec;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("plane fit") {
    std::mt19937_64 gen(81);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    const Vec3 n = Vec3(1, -2, 0.5).normalized();
    const auto [e1, e2] = orthonormal_frame(n);
    std::vector<Vec3> pts;
    for (int i = 0; i < 100; ++i) pts.push_back(0.7 * n + U(gen) * e1 + U(gen) * e2);
    const PlaneFit fit = fit_plane(pts);
    CHECK(std::abs(std::abs(fit.normal.dot(n)) - 1.0) <= 1e-12);
    CHECK(std::abs(std::abs(fit.offset) - 0.7) <= 1e-12);
    CHECK(fit.max_residual <= 1e-12);
    pts.push_back(0.7 * n + 0.01 * n);
    CHECK(fit_plane(pts).max_residual > 1e-3);
    CHECK(testing::error_code([] { fit_plane({Vec3::Zero(), Vec3::UnitX()}); }) == "bad-grid");
}

TEST_CASE("ellipsoid shadows lie in the plane conjugate to the direction") {
    // Contacts x = Q^-1 v / |.| with <v, u> = 0 satisfy <x, Q u> = 0.
    const Vec3 axes(1, 2, 3);
    const ConvexBody k = make_ellipsoid(axes, 3);
    std::mt19937_64 gen(82);
    for (int i = 0; i < 16; ++i) {
        const Direction u(testing::random_unit(gen, 3));
        const ShadowSample s = shadow_boundary(k, u, 128);
        CHECK(s.points.size() == 128);
        CHECK(s.planarity.max_residual <= 1e-8 * k.scale());
        const Vec3 expected = u.vec().cwiseQuotient(axes.cwiseProduct(axes)).normalized();
        CHECK(std::abs(std::abs(s.planarity.normal.dot(expected)) - 1.0) <= 1e-10);
        for (const Vec3& v : s.normals) CHECK(std::abs(v.dot(u.vec())) <= 1e-14);
    }
}

TEST_CASE("l4 ball shadows") {
    const ConvexBody k = body_from_spec("lp_ball(4,1)");
    SUBCASE("points agree with the radial bisection oracle") {
        const Direction u = Direction::normalized(Vec3(1, 2, 3));
        const auto [e1, e2] = orthonormal_frame(u.vec());
        for (int j = 0; j < 12; ++j) {
            const double t = 2 * kPi * j / 12;
            const Vec3 w = std::cos(t) * e1 + std::sin(t) * e2;
            const Vec3 x = oracle::lp_shadow_point(4.0, 1.0, u.vec(), w);
            Vec3 g;
            for (int i = 0; i < 3; ++i) g[i] = std::copysign(std::pow(std::abs(x[i]), 3.0), x[i]);
            const Vec3 v = g.normalized();
            CHECK(std::abs(v.dot(u.vec())) <= 1e-12);
            CHECK((k.eval_unit(v).contact - x).norm() <= 1e-8);
        }
    }
    SUBCASE("some shadow is far from planar") {
        double worst = 0.0;
        std::mt19937_64 gen(83);
        for (int i = 0; i < 16; ++i) worst = std::max(worst, shadow_boundary(k, Direction(testing::random_unit(gen, 3)), 128).planarity.max_residual);
        CHECK(worst >= 1e-3);
    }
    SUBCASE("coordinate directions give planar shadows by symmetry") {
        CHECK(shadow_boundary(k, Direction(Vec3::UnitZ()), 64).planarity.max_residual <= 1e-12);
    }
}

TEST_CASE("central plane shadow of an ellipsoid") {
    const ConvexBody k = body_from_spec("ellipsoid(1,2,3)");
    std::mt19937_64 gen(84);
    for (int i = 0; i < 10; ++i) {
        const Direction m(testing::random_unit(gen, 3));
        const CentralShadow cs = central_plane_shadow(k, m, 128);
        CHECK(cs.max_distance <= 1e-7 * k.scale());
        CHECK((cs.touch_plus + cs.touch_minus).norm() <= 1e-12);
    }
    const CentralShadow lp = central_plane_shadow(body_from_spec("lp_ball(4,1)"), Direction::normalized(Vec3(1, 2, 3)), 128);
    CHECK(lp.max_distance >= 1e-3);
}

TEST_CASE("shadow errors and CSV") {
    CHECK(testing::error_code([] { shadow_boundary(body_from_spec("ellipsoid(2,1)"), Direction(Vec3::UnitX()), 16); }) ==
          "bad-dimension");
    CHECK(testing::error_code([] { shadow_boundary(make_ball(3, 1), Direction(Vec3::UnitX()), 4); }) == "bad-grid");
    const ConvexBody flat = make_custom(BodyTraits{3, false, true}, [](const Vec3& u) { return SupportPoint{1.0, u}; });
    CHECK(testing::error_code([&] { shadow_boundary(flat, Direction(Vec3::UnitX()), 16); }) == "shadow-ambiguous");
    std::ostringstream os;
    write_shadow_csv(os, shadow_boundary(make_ball(3, 1), Direction(Vec3::UnitZ()), 8));
    CHECK(os.str().rfind("angle,x,y,z\r\n0,1,0,0\r\n", 0) == 0);
}

TEST_CASE("section centres of an ellipsoid stay on the central plane") {
    const Vec3 axes(1, 2, 3);
    const ConvexBody k = make_ellipsoid(axes, 3);
    const Ball b{Vec3(0.3, 0.2, -0.1), 0.2};
    const Direction m = Direction::normalized(Vec3(0.2, 1, 0.4));
    const CenterLocus locus = section_center_locus(k, b, m, 16, 256);
    const Hyperplane gamma = tangent_plane(b, m);
    const oracle::EllipseSection eg = oracle::ellipsoid_section(axes, gamma.base(), gamma.e1(), gamma.e2());
    CHECK((locus.gamma_center - gamma.lift(eg.center)).norm() <= 1e-9);
    CHECK(locus.translation.isApprox(-2.0 * locus.gamma_center));
    CHECK(locus.entries.size() == 16);
    for (const LocusEntry& e : locus.entries) {
        const oracle::EllipseSection es = oracle::ellipsoid_section(axes, e.plane.base(), e.plane.e1(), e.plane.e2());
        CHECK((e.center - e.plane.lift(es.center)).norm() <= 1e-9);
        CHECK(std::abs(e.plane.normal().dot(locus.translation)) <= 1e-12);
        CHECK(std::abs(e.distance) <= 1e-6 * k.scale());
        CHECK(e.symmetry_defect <= 1e-9);
    }
    CHECK(locus.max_abs_distance <= 1e-6 * k.scale());
}

TEST_CASE("centre locus is independent of the thread count") {
    const ConvexBody k = body_from_spec("lp_ball(4,1)");
    const Ball b{Vec3(0.3, 0.1, 0.2), 0.1};
    const Direction m = Direction::normalized(Vec3(1, 0.3, 0.2));
    const CenterLocus one = section_center_locus(k, b, m, 12, 128, 1);
    const CenterLocus four = section_center_locus(k, b, m, 12, 128, 4);
    for (std::size_t i = 0; i < one.entries.size(); ++i) CHECK(one.entries[i].center == four.entries[i].center);
    CHECK(one.max_abs_distance == four.max_abs_distance);
}

TEST_CASE("degenerate translation") {
    CHECK(testing::error_code([] {
              section_center_locus(body_from_spec("ellipsoid(1,2,3)"), Ball{Vec3(0, 0, -0.2), 0.2},
                                   Direction(Vec3::UnitZ()), 8);
          }) == "degenerate-translation");
}
