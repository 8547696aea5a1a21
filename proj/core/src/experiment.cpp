#include "tsec/experiment.hpp"

#include "tsec/body_spec.hpp"
#include "tsec/chords.hpp"
#include "tsec/floating.hpp"
#include "tsec/harness.hpp"
#include "tsec/shadow.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace tsec {

using ojson = nlohmann::ordered_json;

namespace {

ojson vec_json(const Vec3& v, int dim = 3) {
    ojson a = ojson::array();
    for (int i = 0; i < dim; ++i) a.push_back(v[i]);
    return a;
}

Vec3 vec_from(const std::vector<double>& v, const char* name) {
    if (v.size() == 2) return {v[0], v[1], 0.0};
    if (v.size() == 3) return {v[0], v[1], v[2]};
    throw InputError("bad-config", std::string(name) + " needs 2 or 3 coordinates");
}

Ball ball_from(const ExperimentConfig& c) { return {vec_from(c.ball_center, "ball_center"), c.ball_radius}; }

bool expects_violation(const ExperimentConfig& c) {
    if (c.expect == "satisfied") return false;
    if (c.expect == "violated") return true;
    throw InputError("bad-config", "expect must be 'satisfied' or 'violated'");
}

double tol_or(const ExperimentConfig& c, double satisfied, double violated) {
    if (c.tol) return *c.tol;
    return expects_violation(c) ? violated : satisfied;
}

bool judge(const ExperimentConfig& c, double value, double tol) {
    return expects_violation(c) ? value >= tol : value <= tol;
}

ojson gates_json(const ConvexBody& body, const Ball& ball) {
    const GateReport g = evaluate_gates(body, ball);
    return {{"o_symmetric", g.o_symmetric},
            {"strictly_convex", g.strictly_convex},
            {"origin_outside_ball", g.origin_outside_ball},
            {"ball_interior", g.ball_interior}};
}

ojson ball_json(const Ball& b, int dim) { return {{"center", vec_json(b.center, dim)}, {"radius", b.radius}}; }

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

struct Outcome {
    ojson json;
    std::string csv;
    bool pass = false;
};

Outcome run_sweep(const ExperimentConfig& c, Condition cond, ojson doc) {
    const ConvexBody body = body_from_spec(c.body, 3);
    const Ball ball = ball_from(c);
    doc["body"] = body.label();
    doc["ball"] = ball_json(ball, 3);
    doc["gates"] = gates_json(body, ball);
    const ConditionVerdict v = cond == Condition::kBarkerLarman
                                   ? barker_larman_defect(body, ball, {c.grid, c.section_grid, c.seed, c.threads})
                                   : montejano_defect(body, ball, {c.grid, c.section_grid, c.seed, c.threads});
    const double tol = tol_or(c, 1e-6, 1e-3);
    Outcome out;
    out.pass = judge(c, v.sup_defect_rel, tol);
    doc["condition"] = condition_name(cond);
    doc["grid"] = v.grid;
    doc["section_grid"] = v.section_grid;
    doc["seed"] = c.seed;
    doc["scale"] = v.scale;
    doc["sup_defect"] = v.sup_defect;
    doc["sup_defect_rel"] = v.sup_defect_rel;
    doc["worst_normal"] = vec_json(v.worst_normal.vec());
    doc["expect"] = c.expect;
    doc["tol"] = tol;
    std::ostringstream csv;
    csv << "nx,ny,nz,defect\r\n";
    for (const PlaneDefect& p : v.per_plane) {
        csv << fmt(p.normal[0]) << ',' << fmt(p.normal[1]) << ',' << fmt(p.normal[2]) << ',' << fmt(p.defect) << "\r\n";
    }
    out.json = std::move(doc);
    out.csv = csv.str();
    return out;
}

Outcome run_chords(const ExperimentConfig& c, ojson doc) {
    const ConvexBody body = body_from_spec(c.body, 2);
    const Ball ball = ball_from(c);
    if (body.dim() != 2) throw InputError("bad-config", "chords pipeline needs a planar body");
    if (c.start.empty()) throw InputError("bad-config", "chords pipeline needs a start point");
    const Vec3 start = vec_from(c.start, "start");
    doc["body"] = body.label();
    doc["ball"] = ball_json(ball, 2);
    doc["gates"] = gates_json(body, ball);
    const double tol = tol_or(c, 1e-6, 1e-6);
    ChordOptions opt;
    opt.max_steps = c.max_steps;
    opt.stop_tol = c.stop_tol.value_or(tol / 10.0);
    const ChordTrace trace = iterate_chords(body, ball, start, opt);
    Outcome out;
    doc["start"] = vec_json(start, 2);
    doc["max_steps"] = c.max_steps;
    doc["stop_tol"] = opt.stop_tol;
    doc["steps"] = trace.states.size();
    doc["converged"] = trace.limit_line.has_value();
    doc["final_dist_to_O"] = trace.states.back().dist_to_origin;
    if (trace.limit_line) {
        const LimitLineResidual r = line_residuals(*trace.limit_line, ball);
        doc["limit_line"] = {{"normal", vec_json(trace.limit_line->normal, 2)}, {"offset", trace.limit_line->offset}};
        doc["residuals"] = {{"to_ball", r.to_ball}, {"to_reflected_ball", r.to_reflected_ball}, {"to_origin", r.to_origin}};
        out.pass = r.max() <= tol;
    }
    doc["tol"] = tol;
    std::ostringstream csv;
    write_trace_csv(csv, trace);
    out.json = std::move(doc);
    out.csv = csv.str();
    return out;
}

Outcome run_shadow(const ExperimentConfig& c, ojson doc) {
    const ConvexBody body = body_from_spec(c.body, 3);
    if (c.direction.empty()) throw InputError("bad-config", "shadow pipeline needs a direction");
    const Direction u = Direction::normalized(vec_from(c.direction, "direction"));
    doc["body"] = body.label();
    const ShadowSample s = shadow_boundary(body, u, c.grid);
    const CentralShadow central = central_plane_shadow(body, u, c.grid);
    const double tol = tol_or(c, 1e-8, 1e-3);
    const double rel = s.planarity.max_residual / body.scale();
    Outcome out;
    out.pass = judge(c, rel, tol);
    doc["direction"] = vec_json(u.vec());
    doc["grid"] = c.grid;
    doc["scale"] = body.scale();
    doc["plane_normal"] = vec_json(s.planarity.normal);
    doc["plane_offset"] = s.planarity.offset;
    doc["planarity_residual"] = s.planarity.max_residual;
    doc["planarity_residual_rel"] = rel;
    doc["central_plane_distance"] = central.max_distance;
    doc["expect"] = c.expect;
    doc["tol"] = tol;
    std::ostringstream csv;
    write_shadow_csv(csv, s);
    out.json = std::move(doc);
    out.csv = csv.str();
    return out;
}

Outcome run_floating(const ExperimentConfig& c, ojson doc) {
    const ConvexBody body = body_from_spec(c.body, 2);
    if (body.dim() != 2) throw InputError("bad-config", "floating pipeline needs a planar body");
    doc["body"] = body.label();
    const FloatingBody2D fb = floating_body(body, c.delta, c.grid, c.threads);
    const HomothetyFit h = homothety_to_parent(fb);
    const double tol = tol_or(c, 1e-6, 1e-3);
    Outcome out;
    out.pass = judge(c, h.defect, tol);
    doc["delta"] = c.delta;
    doc["grid"] = c.grid;
    doc["area"] = body_area(body);
    doc["ratio"] = h.ratio;
    doc["center"] = h.center ? ojson(vec_json(Vec3(h.center->x(), h.center->y(), 0.0), 2)) : ojson(nullptr);
    doc["homothety_defect"] = h.defect;
    doc["expect"] = c.expect;
    doc["tol"] = tol;
    std::ostringstream csv;
    write_floating_csv(csv, fb);
    out.json = std::move(doc);
    out.csv = csv.str();
    return out;
}

Outcome run_centers(const ExperimentConfig& c, ojson doc) {
    const ConvexBody body = body_from_spec(c.body, 3);
    const Ball ball = ball_from(c);
    if (c.direction.empty()) throw InputError("bad-config", "centers pipeline needs a central-plane normal");
    const Direction m = Direction::normalized(vec_from(c.direction, "direction"));
    doc["body"] = body.label();
    doc["ball"] = ball_json(ball, 3);
    doc["gates"] = gates_json(body, ball);
    require_gates(body, ball, Condition::kMontejano);
    const CenterLocus locus = section_center_locus(body, ball, m, c.grid, c.section_grid, c.threads);
    const double tol = tol_or(c, 1e-6, 1e-3);
    const double rel = locus.max_abs_distance / body.scale();
    Outcome out;
    out.pass = judge(c, rel, tol);
    doc["plane_normal"] = vec_json(m.vec());
    doc["translation"] = vec_json(locus.translation);
    doc["origin_outside_projection"] = locus.origin_outside_projection;
    doc["family_size"] = c.grid;
    doc["section_grid"] = c.section_grid;
    doc["scale"] = body.scale();
    doc["max_abs_distance"] = locus.max_abs_distance;
    doc["max_abs_distance_rel"] = rel;
    doc["expect"] = c.expect;
    doc["tol"] = tol;
    std::ostringstream csv;
    csv << "nx,ny,nz,cx,cy,cz,distance\r\n";
    for (const LocusEntry& e : locus.entries) {
        const Vec3& n = e.plane.normal();
        csv << fmt(n.x()) << ',' << fmt(n.y()) << ',' << fmt(n.z()) << ',' << fmt(e.center.x()) << ','
            << fmt(e.center.y()) << ',' << fmt(e.center.z()) << ',' << fmt(e.distance) << "\r\n";
    }
    out.json = std::move(doc);
    out.csv = csv.str();
    return out;
}

Outcome run_projection(const ExperimentConfig& c, ojson doc) {
    const ConvexBody body = body_from_spec(c.body, 3);
    const Ball ball = ball_from(c);
    Condition cond;
    if (c.condition == "bl") cond = Condition::kBarkerLarman;
    else if (c.condition == "mw") cond = Condition::kMontejano;
    else throw InputError("bad-config", "condition must be 'bl' or 'mw'");
    if (c.projections < 1) throw InputError("bad-config", "projections must be positive");
    doc["body"] = body.label();
    doc["ball"] = ball_json(ball, 3);
    doc["gates"] = gates_json(body, ball);
    require_gates(body, ball, cond);
    // Plane through the midpoint of O and the nearest point of B, normal along the ball centre.
    const double dist = ball.center.norm();
    const Direction n = Direction::normalized(ball.center);
    const double offset = 0.5 * (dist - ball.radius);
    const auto [e1, e2] = orthonormal_frame(n.vec());
    const double tol = tol_or(c, 1e-5, 1e-3);
    std::ostringstream csv;
    csv << "angle,residual\r\n";
    double worst = 0.0;
    for (int k = 0; k < c.projections; ++k) {
        const double phi = std::numbers::pi * k / c.projections;
        const Direction w = Direction::normalized(std::cos(phi) * e1 + std::sin(phi) * e2);
        const ConvexBody shadow = project_body(body, w);
        const double r = cond == Condition::kBarkerLarman ? ellipse_residual(shadow, 256)
                                                          : disk_residual(shadow, 256) / body.scale();
        worst = std::max(worst, r);
        csv << fmt(phi) << ',' << fmt(r) << "\r\n";
    }
    Outcome out;
    out.pass = judge(c, worst, tol);
    doc["condition"] = condition_name(cond);
    doc["separating_plane"] = {{"normal", vec_json(n.vec())}, {"offset", offset}};
    doc["projections"] = c.projections;
    doc["max_residual"] = std::isfinite(worst) ? ojson(worst) : ojson("inf");
    doc["expect"] = c.expect;
    doc["tol"] = tol;
    out.json = std::move(doc);
    out.csv = csv.str();
    return out;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("io-error", "cannot open " + path);
    f << text;
    if (!f) throw Error("io-error", "cannot write " + path);
}

template <class T>
T get_as(const ojson& v, const std::string& key) {
    try {
        return v.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InputError("bad-config", "wrong type for key '" + key + "'");
    }
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("bad-config", e.what());
    }
    if (!j.is_object()) throw InputError("bad-config", "config must be a JSON object");
    ExperimentConfig c;
    for (const auto& [key, v] : j.items()) {
        if (key == "pipeline") c.pipeline = get_as<std::string>(v, key);
        else if (key == "body") c.body = get_as<std::string>(v, key);
        else if (key == "ball_center") c.ball_center = get_as<std::vector<double>>(v, key);
        else if (key == "ball_radius") c.ball_radius = get_as<double>(v, key);
        else if (key == "grid") c.grid = get_as<int>(v, key);
        else if (key == "section_grid") c.section_grid = get_as<int>(v, key);
        else if (key == "tol") c.tol = get_as<double>(v, key);
        else if (key == "expect") c.expect = get_as<std::string>(v, key);
        else if (key == "seed") c.seed = get_as<std::uint64_t>(v, key);
        else if (key == "threads") c.threads = get_as<int>(v, key);
        else if (key == "start") c.start = get_as<std::vector<double>>(v, key);
        else if (key == "direction") c.direction = get_as<std::vector<double>>(v, key);
        else if (key == "delta") c.delta = get_as<double>(v, key);
        else if (key == "condition") c.condition = get_as<std::string>(v, key);
        else if (key == "projections") c.projections = get_as<int>(v, key);
        else if (key == "max_steps") c.max_steps = get_as<int>(v, key);
        else if (key == "stop_tol") c.stop_tol = get_as<double>(v, key);
        else if (key == "out_json") c.out_json = get_as<std::string>(v, key);
        else if (key == "out_csv") c.out_csv = get_as<std::string>(v, key);
        else throw InputError("bad-config", "unknown key '" + key + "'");
    }
    if (c.pipeline.empty()) throw InputError("bad-config", "missing key 'pipeline'");
    if (c.body.empty()) throw InputError("bad-config", "missing key 'body'");
    return c;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    ExperimentResult result;
    ojson doc;
    doc["pipeline"] = config.pipeline;
    doc["body"] = config.body;
    try {
        Outcome out;
        const auto& p = config.pipeline;
        if (p == "bl-sweep") out = run_sweep(config, Condition::kBarkerLarman, doc);
        else if (p == "mw-sweep") out = run_sweep(config, Condition::kMontejano, doc);
        else if (p == "chords") out = run_chords(config, doc);
        else if (p == "shadow") out = run_shadow(config, doc);
        else if (p == "floating") out = run_floating(config, doc);
        else if (p == "centers") out = run_centers(config, doc);
        else if (p == "projection-induction") out = run_projection(config, doc);
        else throw InputError("bad-config", "unknown pipeline '" + p + "'");
        out.json["verdict"] = out.pass ? "pass" : "fail";
        result.exit_code = out.pass ? kExitPass : kExitFail;
        result.json = out.json.dump(2) + "\n";
        result.csv = std::move(out.csv);
    } catch (const HypothesisError& e) {
        doc["verdict"] = "hypothesis-failed";
        doc["gate"] = e.code();
        result.exit_code = kExitHypothesis;
        result.json = doc.dump(2) + "\n";
    } catch (const Error& e) {
        doc["verdict"] = "error";
        doc["error"] = e.code();
        doc["message"] = e.what();
        result.exit_code = kExitFail;
        result.json = doc.dump(2) + "\n";
    }
    if (!config.out_json.empty()) write_file(config.out_json, result.json);
    if (!config.out_csv.empty() && !result.csv.empty()) write_file(config.out_csv, result.csv);
    return result;
}

}  // namespace tsec
