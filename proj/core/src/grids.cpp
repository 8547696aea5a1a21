#include "tsec/grids.hpp"

#include <Eigen/Geometry>

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>

namespace tsec {

std::vector<Direction> fibonacci_sphere(int n) {
    if (n < 1) throw InputError("bad-grid", "sphere grid needs at least one point");
    std::vector<Direction> out;
    out.reserve(n);
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < n; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / n;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double t = golden_angle * i;
        out.push_back(Direction::normalized(Vec3(r * std::cos(t), r * std::sin(t), z)));
    }
    return out;
}

Mat3 seeded_rotation(std::uint64_t seed) {
    if (seed == 0) return Mat3::Identity();
    // mt19937_64 output is fully specified; map raw words to [0,1) by hand
    // instead of relying on implementation-defined distributions.
    std::mt19937_64 gen(seed);
    const auto uniform = [&] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
    // Uniform random unit quaternion (Shoemake).
    const double u1 = uniform(), u2 = uniform(), u3 = uniform();
    const double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
    const double t1 = 2.0 * std::numbers::pi * u2, t2 = 2.0 * std::numbers::pi * u3;
    const Eigen::Quaterniond q(b * std::cos(t2), a * std::sin(t1), a * std::cos(t1), b * std::sin(t2));
    return q.normalized().toRotationMatrix();
}

std::vector<Direction> tangent_normal_grid(int n, std::uint64_t seed) {
    std::vector<Direction> grid = fibonacci_sphere(n);
    if (seed == 0) return grid;
    const Mat3 rot = seeded_rotation(seed);
    for (Direction& d : grid) d = Direction::normalized(rot * d.vec());
    return grid;
}

std::vector<Direction> circle_directions(int n, double phase) {
    if (n < 1) throw InputError("bad-grid", "circle grid needs at least one point");
    std::vector<Direction> out;
    out.reserve(n);
    for (int k = 0; k < n; ++k) out.push_back(Direction::planar(phase + 2.0 * std::numbers::pi * k / n));
    return out;
}

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
    if (count <= 0) return;
    const int workers = std::max(1, std::min(threads, count));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto run = [&] {
        for (int i = next++; i < count; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = count;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace tsec
