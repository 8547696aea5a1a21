#pragma once

#include "tsec/body.hpp"
#include "tsec/body_spec.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>
#include <random>
#include <string>
#include <vector>

namespace testing {

inline tsec::Vec3 random_unit(std::mt19937_64& gen, int dim) {
    std::normal_distribution<double> n(0.0, 1.0);
    tsec::Vec3 v(n(gen), n(gen), dim == 3 ? n(gen) : 0.0);
    return v.normalized();
}

/// Catalog bodies used by property tests.
inline std::vector<std::string> catalog3() {
    return {"ball(1.3)",
            "ellipsoid(1,2,3)",
            "ellipsoid(1,1.5,2)",
            "lp_ball(4,1)",
            "lp_ball(3,2)",
            "msum(ellipsoid(1,2,3),ball(0.2))",
            "affine(lp_ball(4,1),mat(1,0.2,0,0,1.5,0.1,0,0,0.8))"};
}

/// Boundary parametrizations of the catalog3 bodies, written independently of
/// the descriptor grammar.
inline oracle::ParametricBody parametric(const std::string& spec) {
    using K = oracle::ParametricBody::Kind;
    oracle::ParametricBody b;
    const auto lp = [&](double p, double scale) {
        b.kind = K::kLp;
        b.p = p;
        b.scale = scale;
    };
    if (spec == "ball(1.3)") {
        b.axes = tsec::Vec3::Constant(1.3);
    } else if (spec == "ellipsoid(1,2,3)") {
        b.axes = tsec::Vec3(1, 2, 3);
    } else if (spec == "ellipsoid(1,1.5,2)") {
        b.axes = tsec::Vec3(1, 1.5, 2);
    } else if (spec == "lp_ball(4,1)") {
        lp(4, 1);
    } else if (spec == "lp_ball(3,2)") {
        lp(3, 2);
    } else if (spec == "msum(ellipsoid(1,2,3),ball(0.2))") {
        b.axes = tsec::Vec3(1, 2, 3);
        b.pad = 0.2;
    } else if (spec == "affine(lp_ball(4,1),mat(1,0.2,0,0,1.5,0.1,0,0,0.8))") {
        lp(4, 1);
        b.map << 1, 0.2, 0, 0, 1.5, 0.1, 0, 0, 0.8;
    } else {
        throw std::invalid_argument("no parametrization for " + spec);
    }
    return b;
}

inline std::vector<std::string> catalog2() {
    return {"ball(2)", "ellipsoid(2,1)", "lp_ball(4,1.5)", "msum(ellipsoid(1,2),ball(0.3))"};
}

/// Exception code thrown by f, or "" if nothing was thrown.
template <class F>
std::string error_code(F&& f) {
    try {
        f();
    } catch (const tsec::Error& e) {
        return e.code();
    }
    return "";
}

}  // namespace testing
