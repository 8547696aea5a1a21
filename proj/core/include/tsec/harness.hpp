#pragma once

#include "tsec/body.hpp"
#include "tsec/geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tsec {

enum class Condition { kBarkerLarman, kMontejano };

/// "BL" or "MONTEJANO".
std::string condition_name(Condition c);

/// Hypothesis flags of a (K, B) configuration.
struct GateReport {
    bool o_symmetric = false;
    bool strictly_convex = false;
    bool origin_outside_ball = false;
    bool ball_interior = false;  ///< checked on 2000 Fibonacci directions
};

GateReport evaluate_gates(const ConvexBody& body, const Ball& ball);

/// Throws HypothesisError naming the first failing gate, in the order
/// "not-centered", "ball-not-interior", "ball-contains-O", "not-strict".
/// Strictness is only required for the Barker-Larman condition.
void require_gates(const ConvexBody& body, const Ball& ball, Condition condition);

struct PlaneDefect {
    Direction normal;
    double defect = 0.0;
};

struct SweepOptions {
    int grid = 512;          ///< number of tangent normals
    int section_grid = 512;  ///< in-plane directions per section
    std::uint64_t seed = 0;  ///< rotation of the normal lattice; 0 keeps it fixed
    int threads = 1;
};

struct ConditionVerdict {
    Condition condition = Condition::kBarkerLarman;
    std::string body_spec;
    Ball ball;
    int grid = 0;
    int section_grid = 0;
    double scale = 1.0;
    double sup_defect = 0.0;      ///< absolute, in length units
    double sup_defect_rel = 0.0;  ///< sup_defect / scale
    Direction worst_normal = Direction(Vec3::UnitZ());
    std::vector<PlaneDefect> per_plane;
};

/// Symmetry defect of every section of K by a supporting plane of B, over a
/// Fibonacci lattice of outer normals.
ConditionVerdict barker_larman_defect(const ConvexBody& body, const Ball& ball, const SweepOptions& options = {});

/// Width defect (max - min width) of the same sections.
ConditionVerdict montejano_defect(const ConvexBody& body, const Ball& ball, const SweepOptions& options = {});

}  // namespace tsec
