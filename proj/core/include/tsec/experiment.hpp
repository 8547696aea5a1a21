#pragma once

#include "tsec/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tsec {

/// Flat experiment description, normally read from a JSON object with the
/// same keys. Unknown keys are rejected.
///
/// Pipelines: bl-sweep, mw-sweep, chords, shadow, floating, centers,
/// projection-induction.
struct ExperimentConfig {
    std::string pipeline;
    std::string body;
    std::vector<double> ball_center;  ///< 2 or 3 entries
    double ball_radius = 0.0;
    int grid = 512;
    int section_grid = 512;
    std::optional<double> tol;      ///< relative; pipeline default when unset
    std::string expect = "satisfied";  ///< or "violated"
    std::uint64_t seed = 0;
    int threads = 1;
    std::vector<double> start;      ///< chords: start point on bd M
    std::vector<double> direction;  ///< shadow: u; centers: central-plane normal
    double delta = 0.1;             ///< floating
    std::string condition = "bl";   ///< projection-induction: bl or mw
    int projections = 8;            ///< projection-induction: directions
    int max_steps = 10000;          ///< chords
    std::optional<double> stop_tol; ///< chords; default tol / 10
    std::string out_json;
    std::string out_csv;

    /// Throws InputError("bad-config") on malformed JSON, unknown keys or
    /// wrongly typed values.
    static ExperimentConfig from_json(const std::string& text);
};

/// Exit-code contract: 0 pass, 1 error or tolerance failure, 2 hypothesis
/// failure.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitHypothesis = 2 };

struct ExperimentResult {
    int exit_code = kExitPass;
    std::string json;  ///< verdict document, byte-stable for a given config
    std::string csv;   ///< trace or table, may be empty
};

/// Runs the pipeline and writes out_json / out_csv when they are set.
/// The thread count does not affect any output byte.
ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace tsec
