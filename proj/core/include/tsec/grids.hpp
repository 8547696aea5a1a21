#pragma once

#include "tsec/geometry.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace tsec {

/// n points of the Fibonacci (golden-angle) lattice on S^2.
std::vector<Direction> fibonacci_sphere(int n);

/// Rotation drawn from `seed` with a fixed-width generator, so the same
/// seed gives the same matrix on every platform. Seed 0 is the identity.
Mat3 seeded_rotation(std::uint64_t seed);

/// Fibonacci lattice rotated by seeded_rotation(seed).
std::vector<Direction> tangent_normal_grid(int n, std::uint64_t seed);

/// n planar directions at angles phase + 2 pi k / n.
std::vector<Direction> circle_directions(int n, double phase = 0.0);

/// Runs body(i) for i in [0, count) on up to `threads` workers. Each index is
/// handled exactly once; callers write results by index.
void parallel_for(int count, int threads, const std::function<void(int)>& body);

}  // namespace tsec
