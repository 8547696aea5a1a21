// Command line front end: body queries, section tables and the experiment
// pipelines. Every checker subcommand builds an ExperimentConfig so that the
// CLI and `experiment run` produce identical verdicts.

#include "tsec/body_spec.hpp"
#include "tsec/experiment.hpp"
#include "tsec/floating.hpp"
#include "tsec/metrics.hpp"
#include "tsec/sections.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

namespace {

using tsec::Vec3;

struct Common {
    int grid = 512;
    std::optional<double> tol;
    std::uint64_t seed = 0;
    std::string out;
    int threads = 1;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--grid", c.grid, "Sampling density")->capture_default_str();
    cmd->add_option("--tol", c.tol, "Relative tolerance (pipeline default when omitted)");
    cmd->add_option("--seed", c.seed, "Seed for the tangent-normal lattice rotation")->capture_default_str();
    cmd->add_option("--out", c.out, "Write the primary output to this file instead of stdout");
    cmd->add_option("--threads", c.threads, "Worker threads")->capture_default_str();
}

Vec3 to_vec(const std::vector<double>& v, const char* name) {
    if (v.size() == 2) return {v[0], v[1], 0.0};
    if (v.size() == 3) return {v[0], v[1], v[2]};
    throw tsec::InputError("bad-argument", std::string(name) + " needs 2 or 3 comma-separated values");
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!(f << text)) throw tsec::Error("io-error", "cannot write " + path);
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

nlohmann::ordered_json vec_json(const Vec3& v, int dim) {
    auto a = nlohmann::ordered_json::array();
    for (int i = 0; i < dim; ++i) a.push_back(v[i]);
    return a;
}

int run_config(tsec::ExperimentConfig cfg, const Common& c, const std::string& csv_path) {
    cfg.grid = c.grid;
    cfg.tol = c.tol;
    cfg.seed = c.seed;
    cfg.threads = c.threads;
    cfg.out_json = c.out;
    cfg.out_csv = csv_path;
    const tsec::ExperimentResult r = tsec::run_experiment(cfg);
    if (c.out.empty()) std::cout << r.json;
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sections of convex bodies by tangent planes of an interior ball"};
    app.require_subcommand(1);

    // body eval
    Common body_common;
    std::string body_spec;
    std::vector<double> dir;
    int dim = 3;
    auto* body_cmd = app.add_subcommand("body", "Body queries");
    body_cmd->require_subcommand(1);
    auto* eval_cmd = body_cmd->add_subcommand("eval", "Support value and contact point");
    eval_cmd->add_option("--body", body_spec, "Body descriptor")->required();
    eval_cmd->add_option("--dir", dir, "Unit direction x,y[,z]")->delimiter(',')->required();
    eval_cmd->add_option("--dim", dim, "Dimension for ball and lp_ball")->capture_default_str();
    add_common(eval_cmd, body_common);

    // section
    Common sec_common;
    std::vector<double> sec_normal;
    double sec_offset = 0.0;
    auto* sec_cmd = app.add_subcommand("section", "Support table of a plane section (CSV)");
    sec_cmd->add_option("--body", body_spec, "Body descriptor")->required();
    sec_cmd->add_option("--normal", sec_normal, "Plane normal x,y,z")->delimiter(',')->required();
    sec_cmd->add_option("--offset", sec_offset, "Plane offset <x,n> = offset")->required();
    add_common(sec_cmd, sec_common);

    // condition checks and pipelines
    Common chk_common;
    tsec::ExperimentConfig cfg;
    std::string csv_path;
    std::vector<double> ball_center, vec_arg;
    const auto add_ball = [&](CLI::App* cmd) {
        cmd->add_option("--ball-center", ball_center, "Ball centre x,y[,z]")->delimiter(',')->required();
        cmd->add_option("--ball-radius", cfg.ball_radius, "Ball radius")->required();
    };
    const auto add_pipeline = [&](const char* name, const char* help) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("--body", cfg.body, "Body descriptor")->required();
        cmd->add_option("--expect", cfg.expect, "satisfied or violated")->capture_default_str();
        cmd->add_option("--csv", csv_path, "Write the per-sample table to this CSV file");
        add_common(cmd, chk_common);
        return cmd;
    };
    auto* bl_cmd = add_pipeline("bl-check", "Central symmetry of tangent sections");
    add_ball(bl_cmd);
    bl_cmd->add_option("--section-grid", cfg.section_grid, "Directions per section")->capture_default_str();
    auto* mw_cmd = add_pipeline("mw-check", "Constant width of tangent sections");
    add_ball(mw_cmd);
    mw_cmd->add_option("--section-grid", cfg.section_grid, "Directions per section")->capture_default_str();
    auto* ch_cmd = add_pipeline("chords", "Alternating tangent chords in a planar body");
    add_ball(ch_cmd);
    ch_cmd->add_option("--start", vec_arg, "Start point x,y on the boundary")->delimiter(',')->required();
    ch_cmd->add_option("--max-steps", cfg.max_steps, "Step limit")->capture_default_str();
    ch_cmd->add_option("--stop-tol", cfg.stop_tol, "Stop once a chord passes this close to O");
    auto* sh_cmd = add_pipeline("shadow", "Shadow boundary planarity");
    sh_cmd->add_option("--direction", vec_arg, "Direction x,y,z")->delimiter(',')->required();
    auto* fl_cmd = add_pipeline("floating", "Floating body of a planar body");
    fl_cmd->add_option("--delta", cfg.delta, "Cut-off area")->capture_default_str();
    auto* ce_cmd = add_pipeline("centers", "Centres of sections parallel to the translation vector");
    add_ball(ce_cmd);
    ce_cmd->add_option("--direction", vec_arg, "Central-plane normal x,y,z")->delimiter(',')->required();
    ce_cmd->add_option("--section-grid", cfg.section_grid, "Directions per section")->capture_default_str();
    auto* pr_cmd = add_pipeline("project", "Projections along a separating plane");
    add_ball(pr_cmd);
    pr_cmd->add_option("--condition", cfg.condition, "bl (ellipse residual) or mw (disk residual)")
        ->capture_default_str();
    pr_cmd->add_option("--projections", cfg.projections, "Number of projection directions")->capture_default_str();

    // experiment run
    std::string config_path;
    std::optional<int> exp_threads;
    std::string exp_out;
    auto* exp_cmd = app.add_subcommand("experiment", "Config-driven pipelines");
    exp_cmd->require_subcommand(1);
    auto* run_cmd = exp_cmd->add_subcommand("run", "Run an experiment config file");
    run_cmd->add_option("file", config_path, "Flat JSON config")->required();
    run_cmd->add_option("--threads", exp_threads, "Override the worker thread count");
    run_cmd->add_option("--out", exp_out, "Override out_json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (eval_cmd->parsed()) {
            const tsec::ConvexBody body = tsec::body_from_spec(body_spec, dim);
            const Vec3 u = to_vec(dir, "--dir");
            const tsec::SupportPoint sp = tsec::support_eval(body, u);
            nlohmann::ordered_json j;
            j["body"] = body.label();
            j["direction"] = vec_json(u, body.dim());
            j["value"] = sp.value;
            j["contact"] = vec_json(sp.contact, body.dim());
            emit(dump(j), body_common.out);
            return 0;
        }
        if (sec_cmd->parsed()) {
            const tsec::ConvexBody body = tsec::body_from_spec(body_spec, 3);
            const tsec::Direction n = tsec::Direction::normalized(to_vec(sec_normal, "--normal"));
            const tsec::SectionBody s = tsec::section_as_body(body, tsec::Hyperplane(n, sec_offset));
            std::ostringstream csv;
            csv.precision(17);
            csv << "angle,value,x,y,z\r\n";
            for (int k = 0; k < sec_common.grid; ++k) {
                const double a = 2.0 * std::numbers::pi * k / sec_common.grid;
                const tsec::SupportPoint sp = s.body().eval(tsec::Direction::planar(a));
                const Vec3 x = s.to_space(sp.contact.head<2>());
                csv << a << ',' << sp.value << ',' << x.x() << ',' << x.y() << ',' << x.z() << "\r\n";
            }
            emit(csv.str(), sec_common.out);
            return 0;
        }
        if (run_cmd->parsed()) {
            std::ifstream f(config_path, std::ios::binary);
            if (!f) throw tsec::Error("io-error", "cannot read " + config_path);
            std::stringstream ss;
            ss << f.rdbuf();
            tsec::ExperimentConfig c = tsec::ExperimentConfig::from_json(ss.str());
            if (exp_threads) c.threads = *exp_threads;
            if (!exp_out.empty()) c.out_json = exp_out;
            const tsec::ExperimentResult r = tsec::run_experiment(c);
            if (c.out_json.empty()) std::cout << r.json;
            return r.exit_code;
        }
        const std::pair<CLI::App*, const char*> pipelines[] = {
            {bl_cmd, "bl-sweep"}, {mw_cmd, "mw-sweep"}, {ch_cmd, "chords"},  {sh_cmd, "shadow"},
            {fl_cmd, "floating"}, {ce_cmd, "centers"},  {pr_cmd, "projection-induction"}};
        for (const auto& [cmd, name] : pipelines) {
            if (!cmd->parsed()) continue;
            cfg.pipeline = name;
            if (!ball_center.empty()) cfg.ball_center = ball_center;
            if (cmd == ch_cmd) cfg.start = vec_arg;
            if (cmd == sh_cmd || cmd == ce_cmd) cfg.direction = vec_arg;
            if (cmd == ch_cmd && cfg.ball_center.size() == 3 && cfg.ball_center[2] != 0.0) {
                throw tsec::InputError("bad-argument", "planar ball centre needs z = 0");
            }
            return run_config(cfg, chk_common, csv_path);
        }
    } catch (const tsec::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
