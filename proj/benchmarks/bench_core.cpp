// Micro benchmarks for the hot paths: support evaluation, section support,
// the symmetry fit of a tangent section and one chord step.

#include "tsec/body_spec.hpp"
#include "tsec/chords.hpp"
#include "tsec/metrics.hpp"
#include "tsec/sections.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <string>

namespace {

const char* const kBodies[] = {"ball(1)", "ellipsoid(1,1.5,2)", "lp_ball(4,1)", "msum(ball(1),ellipsoid(0.5,1,0.7))"};

void BM_SupportEval(benchmark::State& state) {
    const tsec::ConvexBody body = tsec::body_from_spec(kBodies[state.range(0)], 3);
    state.SetLabel(body.label());
    double a = 0.0;
    for (auto _ : state) {
        a += 0.001;
        const tsec::Direction u = tsec::Direction::normalized({std::cos(a), std::sin(a), 0.3});
        benchmark::DoNotOptimize(body.eval(u));
    }
}
BENCHMARK(BM_SupportEval)->DenseRange(0, 3);

void BM_SectionSupport(benchmark::State& state) {
    const tsec::ConvexBody body = tsec::body_from_spec(kBodies[state.range(0)], 3);
    state.SetLabel(body.label());
    const tsec::Ball ball{{0.3, 0.1, 0.2}, 0.2};
    const tsec::Hyperplane plane = tsec::tangent_plane(ball, tsec::Direction::normalized({0.2, -0.4, 1.0}));
    const tsec::Direction v = tsec::Direction::planar(0.7);
    for (auto _ : state) benchmark::DoNotOptimize(tsec::section_support(body, plane, v));
}
BENCHMARK(BM_SectionSupport)->DenseRange(0, 3);

void BM_SymmetryFit(benchmark::State& state) {
    const tsec::ConvexBody body = tsec::body_from_spec("lp_ball(4,1)", 3);
    const tsec::Ball ball{{0.3, 0.1, 0.2}, 0.2};
    const tsec::Hyperplane plane = tsec::tangent_plane(ball, tsec::Direction::normalized({0.2, -0.4, 1.0}));
    const tsec::SectionBody section = tsec::section_as_body(body, plane);
    const int grid = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tsec::symmetry_fit(section, grid));
}
BENCHMARK(BM_SymmetryFit)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_TangentStep(benchmark::State& state) {
    const tsec::ConvexBody body = tsec::body_from_spec("ellipsoid(2,1)", 2);
    const tsec::Ball ball{{0.6, 0.1, 0.0}, 0.2};
    tsec::Vec3 x = tsec::radial_boundary_point(body, 0.0);
    for (auto _ : state) {
        x = tsec::tangent_step(body, ball, x);
        x = tsec::tangent_step(body, ball.reflected(), x);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_TangentStep);

}  // namespace

BENCHMARK_MAIN();
