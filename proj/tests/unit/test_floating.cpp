#include "support.hpp"

#include "tsec/floating.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

using namespace tsec;

namespace {
constexpr double kPi = std::numbers::pi;

double segment_area(double t) { return std::acos(t) - t * std::sqrt(1.0 - t * t); }
}  // namespace

TEST_CASE("areas") {
    CHECK(body_area(make_ball(2, 1.0)) == doctest::Approx(kPi).epsilon(1e-11));
    CHECK(body_area(body_from_spec("ellipsoid(2,1)")) == doctest::Approx(2 * kPi).epsilon(1e-11));
    CHECK(body_area(make_reuleaux(1.0)) == doctest::Approx((kPi - std::sqrt(3.0)) / 2).epsilon(1e-10));
    const double lp4 = 4 * std::pow(std::tgamma(1.25), 2) / std::tgamma(1.5);
    CHECK(body_area(body_from_spec("lp_ball(4,1)", 2)) == doctest::Approx(lp4).epsilon(1e-10));
}

TEST_CASE("cap areas of the unit disk") {
    const ConvexBody disk = make_ball(2, 1.0);
    for (double t : {-0.9, -0.3, 0.0, 0.4, 0.95, 0.999}) {
        CHECK(std::abs(cap_area(disk, Direction::planar(0.7), t) - segment_area(t)) <= 1e-11);
    }
    CHECK(cap_area(disk, Direction::planar(0.0), 1.5) == 0.0);
    CHECK(cap_area(disk, Direction::planar(0.0), -1.5) == doctest::Approx(kPi).epsilon(1e-11));
}

TEST_CASE("unit disk floating body against the segment root") {
    const double expected = oracle::circular_segment_offset(0.1);
    const FloatingBody2D fb = floating_body(make_ball(2, 1.0), 0.1, 256);
    REQUIRE(fb.offsets().size() == 256);
    for (double t : fb.offsets()) CHECK(std::abs(t - expected) <= 1e-8);
    CHECK(std::abs(cut_offset(make_ball(2, 1.0), Direction::planar(1.0), 0.1) - expected) <= 1e-10);
}

TEST_CASE("ellipse floating bodies are scaled copies") {
    // The ellipse is diag(1,2) applied to the disk, which doubles every area:
    // t_E(u) = t_D(delta / 2) h_E(u).
    const double delta = 0.2;
    const double ratio = oracle::circular_segment_offset(delta / 2);
    const ConvexBody e = body_from_spec("ellipsoid(1,2)");
    const FloatingBody2D fb = floating_body(e, delta, 256);
    for (std::size_t k = 0; k < fb.directions().size(); ++k) {
        CHECK(std::abs(fb.offsets()[k] - ratio * e.support(fb.directions()[k])) <= 1e-8);
    }
    const HomothetyFit fit = homothety_to_parent(fb);
    CHECK(fit.ratio == doctest::Approx(ratio).epsilon(1e-8));
    CHECK(fit.defect <= 1e-8);
    REQUIRE(fit.center);
    CHECK(fit.center->norm() <= 1e-8);
}

TEST_CASE("floating body as a convex body") {
    const ConvexBody parent = body_from_spec("lp_ball(4,1.5)", 2);
    const FloatingBody2D fb = floating_body(parent, 0.3, 64);
    const ConvexBody k = fb.as_body();
    CHECK(k.dim() == 2);
    for (int j = 0; j < 16; ++j) {
        const Direction u = Direction::planar(0.37 * j);
        const SupportPoint sp = k.eval_unit(u.vec());
        CHECK(sp.value == doctest::Approx(cut_offset(parent, u, 0.3)).epsilon(1e-12));
        CHECK(std::abs(sp.contact.dot(u.vec()) - sp.value) <= 1e-9);
    }
}

TEST_CASE("l4 floating body is not homothetic to its parent") {
    const FloatingBody2D fb = floating_body(body_from_spec("lp_ball(4,1)", 2), 0.3, 256);
    CHECK(homothety_to_parent(fb).defect >= 1e-4);
}

TEST_CASE("homothety fits") {
    const ConvexBody a = body_from_spec("lp_ball(4,1)", 2);
    const HomothetyFit half = homothety_defect(a, dilate_body(a, 0.5));
    CHECK(half.ratio == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(half.defect <= 1e-12);
    const HomothetyFit moved = homothety_defect(a, translate_body(dilate_body(a, 0.5), Vec3(0.3, 0.1, 0)));
    REQUIRE(moved.center);
    CHECK((*moved.center - Vec2(0.6, 0.2)).norm() <= 1e-10);
    const HomothetyFit shift = homothety_defect(a, translate_body(a, Vec3(0.3, 0.1, 0)));
    CHECK(shift.ratio == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(shift.center);
    CHECK(homothety_defect(a, body_from_spec("ellipsoid(2,1)")).defect > 0.01);
}

TEST_CASE("ellipse, disk and revolution residuals") {
    const EllipseFit e = ellipse_fit(body_from_spec("ellipsoid(2,1)"));
    CHECK(e.elliptic);
    CHECK(e.residual <= 1e-10);
    CHECK(e.q(0, 0) == doctest::Approx(0.25));
    CHECK(e.q(1, 1) == doctest::Approx(1.0));
    CHECK(std::abs(e.q(0, 1)) <= 1e-10);
    CHECK(ellipse_residual(body_from_spec("affine(ball(1),mat(1,0.4,0,2))")) <= 1e-10);
    CHECK(ellipse_residual(body_from_spec("lp_ball(4,1)", 2)) > 0.01);
    CHECK(disk_residual(make_ball(2, 1.7)) <= 1e-14);
    CHECK(disk_residual(body_from_spec("ellipsoid(2,1)")) == doctest::Approx(1.0));
    CHECK(revolution_residual(body_from_spec("ellipsoid(1,1,2)"), Direction(Vec3::UnitZ())) <= 1e-12);
    CHECK(revolution_residual(body_from_spec("ellipsoid(1,2,3)"), Direction(Vec3::UnitZ())) > 0.1);
}

TEST_CASE("floating body errors and CSV") {
    const ConvexBody disk = make_ball(2, 1.0);
    CHECK(testing::error_code([&] { floating_body(disk, 0.0, 16); }) == "delta-out-of-range");
    CHECK(testing::error_code([&] { floating_body(disk, kPi / 2, 16); }) == "delta-out-of-range");
    CHECK(testing::error_code([&] { floating_body(disk, 0.1, 0); }) == "bad-grid");
    CHECK(testing::error_code([] { floating_body(make_ball(3, 1.0), 0.1, 16); }) == "bad-dimension");
    const ConvexBody flat = make_custom(BodyTraits{2, false, true}, [](const Vec3& u) { return SupportPoint{1.0, u}; });
    CHECK(testing::error_code([&] { floating_body(flat, 0.1, 16); }) == "not-strict");
    std::ostringstream os;
    write_floating_csv(os, floating_body(disk, 0.1, 4));
    CHECK(os.str().rfind("angle,offset\r\n0,", 0) == 0);
}

TEST_CASE("property: offsets shrink with delta and respect symmetry") {
    std::mt19937_64 gen(91);
    for (const auto& spec : testing::catalog2()) {
        const ConvexBody k = body_from_spec(spec, 2);
        const double area = body_area(k);
        for (int trial = 0; trial < 10; ++trial) {
            const Direction u(testing::random_unit(gen, 2));
            const double t1 = cut_offset(k, u, 0.05 * area);
            const double t2 = cut_offset(k, u, 0.2 * area);
            CHECK(t2 < t1);
            CHECK(t1 < k.support(u));
            CHECK(t2 + cut_offset(k, -u, 0.2 * area) > 0.0);
            CHECK(std::abs(t1 - cut_offset(k, -u, 0.05 * area)) <= 1e-9 * k.scale());
            CHECK(std::abs(cap_area(k, u, t1) - 0.05 * area) <= 1e-9 * area);
        }
    }
}
