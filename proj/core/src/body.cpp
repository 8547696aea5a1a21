#include "tsec/body.hpp"

#include <Eigen/LU>

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace tsec {

namespace {

std::string fmt_number(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

void require_dim(int dim) {
    if (dim != 2 && dim != 3) throw InputError("bad-dimension", "dimension must be 2 or 3");
}

void require_positive(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw InputError("non-positive-parameter", std::string(what) + " must be positive");
    }
}

class BallModel final : public BodyModel {
public:
    explicit BallModel(double r) : r_(r) {}
    SupportPoint eval(const Vec3& u) const override { return {r_, r_ * u}; }

private:
    double r_;
};

class EllipsoidModel final : public BodyModel {
public:
    explicit EllipsoidModel(const Vec3& axes) : sq_(axes.cwiseProduct(axes)) {}
    SupportPoint eval(const Vec3& u) const override {
        const Vec3 w = sq_.cwiseProduct(u);
        const double h = std::sqrt(w.dot(u));
        return {h, w / h};
    }

private:
    Vec3 sq_;
};

class LpBallModel final : public BodyModel {
public:
    LpBallModel(double p, double scale) : q_(p / (p - 1.0)), scale_(scale) {}
    SupportPoint eval(const Vec3& u) const override {
        // h = scale |u|_q; contact = scale * grad |u|_q.
        Vec3 pw;
        double sum = 0.0;
        for (int i = 0; i < 3; ++i) {
            const double a = std::abs(u[i]);
            pw[i] = a > 0.0 ? std::pow(a, q_ - 1.0) : 0.0;
            sum += pw[i] * a;
        }
        const double norm = std::pow(sum, 1.0 / q_);
        const double denom = std::pow(norm, q_ - 1.0);
        Vec3 grad;
        for (int i = 0; i < 3; ++i) grad[i] = std::copysign(pw[i], u[i]) / denom;
        return {scale_ * norm, scale_ * grad};
    }

private:
    double q_;
    double scale_;
};

class ReuleauxModel final : public BodyModel {
public:
    explicit ReuleauxModel(double width) : width_(width) {
        const double radius = width / std::sqrt(3.0);
        for (int k = 0; k < 3; ++k) {
            const double t = std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * k / 3.0;
            vertices_[k] = Vec3(radius * std::cos(t), radius * std::sin(t), 0.0);
        }
    }
    SupportPoint eval(const Vec3& u) const override {
        // Six normal cones of 60 degrees: three vertices, three arcs centred at
        // the opposite vertex.
        const double cos30 = std::sqrt(3.0) / 2.0;
        for (const Vec3& v : vertices_) {
            if (-u.dot(v.normalized()) >= cos30) return {v.dot(u) + width_, v + width_ * u};
        }
        int best = 0;
        for (int k = 1; k < 3; ++k) {
            if (vertices_[k].dot(u) > vertices_[best].dot(u)) best = k;
        }
        return {vertices_[best].dot(u), vertices_[best]};
    }

private:
    double width_;
    std::array<Vec3, 3> vertices_;
};

class CustomModel final : public BodyModel {
public:
    explicit CustomModel(std::function<SupportPoint(const Vec3&)> fn) : fn_(std::move(fn)) {}
    SupportPoint eval(const Vec3& u) const override { return fn_(u); }

private:
    std::function<SupportPoint(const Vec3&)> fn_;
};

class SumModel final : public BodyModel {
public:
    SumModel(std::shared_ptr<const BodyModel> a, std::shared_ptr<const BodyModel> b)
        : a_(std::move(a)), b_(std::move(b)) {}
    SupportPoint eval(const Vec3& u) const override {
        const SupportPoint x = a_->eval(u);
        const SupportPoint y = b_->eval(u);
        return {x.value + y.value, x.contact + y.contact};
    }

private:
    std::shared_ptr<const BodyModel> a_, b_;
};

class LinearModel final : public BodyModel {
public:
    LinearModel(std::shared_ptr<const BodyModel> inner, const Mat3& map)
        : inner_(std::move(inner)), map_(map), transpose_(map.transpose()) {}
    SupportPoint eval(const Vec3& u) const override {
        const Vec3 w = transpose_ * u;
        const double n = w.norm();
        const SupportPoint s = inner_->eval(w / n);
        return {n * s.value, map_ * s.contact};
    }

private:
    std::shared_ptr<const BodyModel> inner_;
    Mat3 map_, transpose_;
};

class TranslateModel final : public BodyModel {
public:
    TranslateModel(std::shared_ptr<const BodyModel> inner, const Vec3& t)
        : inner_(std::move(inner)), t_(t) {}
    SupportPoint eval(const Vec3& u) const override {
        const SupportPoint s = inner_->eval(u);
        return {s.value + t_.dot(u), s.contact + t_};
    }

private:
    std::shared_ptr<const BodyModel> inner_;
    Vec3 t_;
};

class ReflectModel final : public BodyModel {
public:
    explicit ReflectModel(std::shared_ptr<const BodyModel> inner) : inner_(std::move(inner)) {}
    SupportPoint eval(const Vec3& u) const override {
        const SupportPoint s = inner_->eval(-u);
        return {s.value, -s.contact};
    }

private:
    std::shared_ptr<const BodyModel> inner_;
};

class ProjectModel final : public BodyModel {
public:
    ProjectModel(std::shared_ptr<const BodyModel> inner, const Vec3& e1, const Vec3& e2)
        : inner_(std::move(inner)), e1_(e1), e2_(e2) {}
    SupportPoint eval(const Vec3& u) const override {
        const SupportPoint s = inner_->eval(u.x() * e1_ + u.y() * e2_);
        return {s.value, Vec3(s.contact.dot(e1_), s.contact.dot(e2_), 0.0)};
    }

private:
    std::shared_ptr<const BodyModel> inner_;
    Vec3 e1_, e2_;
};

}  // namespace

ConvexBody::ConvexBody(std::shared_ptr<const BodyModel> model, BodyTraits traits,
                       std::string label)
    : model_(std::move(model)), traits_(traits), label_(std::move(label)) {
    require_dim(traits_.dim);
    if (!model_) throw InputError("null-model", "body model must not be null");
    scale_ = 0.0;
    for (int i = 0; i < traits_.dim; ++i) {
        const Vec3 e = Vec3::Unit(i);
        scale_ = std::max({scale_, model_->eval(e).value, model_->eval(-e).value});
    }
    if (!(scale_ > 0.0)) scale_ = 1.0;
}

SupportPoint ConvexBody::eval(const Direction& u) const {
    if (traits_.dim == 2 && !u.is_planar()) {
        throw InputError("bad-direction", "planar body queried with a non-planar direction");
    }
    return model_->eval(u.vec());
}

double ConvexBody::support_homogeneous(const Vec3& x) const {
    const double n = x.norm();
    if (n == 0.0) return 0.0;
    return n * model_->eval(x / n).value;
}

SupportPoint support_eval(const ConvexBody& body, const Vec3& u) {
    return body.eval(Direction(u));
}

ConvexBody make_ball(int dim, double radius) {
    require_dim(dim);
    require_positive(radius, "ball radius");
    return ConvexBody(std::make_shared<BallModel>(radius), {dim, true, true},
                      "ball(" + fmt_number(radius) + ")");
}

ConvexBody make_ellipsoid(const Vec3& semi_axes, int dim) {
    require_dim(dim);
    Vec3 axes = semi_axes;
    if (dim == 2) axes.z() = 1.0;
    for (int i = 0; i < dim; ++i) require_positive(axes[i], "ellipsoid semi-axis");
    std::string label = "ellipsoid(" + fmt_number(axes.x()) + "," + fmt_number(axes.y());
    if (dim == 3) label += "," + fmt_number(axes.z());
    return ConvexBody(std::make_shared<EllipsoidModel>(axes), {dim, true, true}, label + ")");
}

ConvexBody make_lp_ball(int dim, double p, double scale) {
    require_dim(dim);
    require_positive(scale, "lp_ball scale");
    if (!(p >= 2.0) || !std::isfinite(p)) {
        throw InputError("non-positive-parameter", "lp_ball requires finite p >= 2");
    }
    return ConvexBody(std::make_shared<LpBallModel>(p, scale), {dim, true, true},
                      "lp_ball(" + fmt_number(p) + "," + fmt_number(scale) + ")");
}

ConvexBody make_reuleaux(double width) {
    require_positive(width, "reuleaux width");
    // Constant width figures are strictly convex; the triangle is not O-symmetric.
    return ConvexBody(std::make_shared<ReuleauxModel>(width), {2, true, false},
                      "reuleaux(" + fmt_number(width) + ")");
}

ConvexBody make_custom(BodyTraits traits, std::function<SupportPoint(const Vec3&)> eval,
                       std::string label) {
    if (!eval) throw InputError("null-model", "custom body needs an evaluator");
    return ConvexBody(std::make_shared<CustomModel>(std::move(eval)), traits, std::move(label));
}

ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b) {
    if (a.dim() != b.dim()) throw InputError("dimension-mismatch", "msum of bodies of different dimension");
    const BodyTraits t{a.dim(), a.strictly_convex() || b.strictly_convex(),
                       a.o_symmetric() && b.o_symmetric()};
    return ConvexBody(std::make_shared<SumModel>(a.model(), b.model()), t,
                      "msum(" + a.label() + "," + b.label() + ")");
}

ConvexBody affine_image(const ConvexBody& body, const Mat3& map) {
    Mat3 m = map;
    if (body.dim() == 2) {
        m.row(2).setZero();
        m.col(2).setZero();
        m(2, 2) = 1.0;
    }
    const double det = m.determinant();
    if (!std::isfinite(det) || std::abs(det) < 1e-14 * std::pow(m.norm() + 1e-300, 3)) {
        throw InputError("singular-map", "affine map must be invertible");
    }
    std::ostringstream label;
    label.precision(17);
    label << "affine(" << body.label() << ",mat(";
    const int n = body.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) label << (i + j ? "," : "") << m(i, j);
    }
    label << "))";
    return ConvexBody(std::make_shared<LinearModel>(body.model(), m), body.traits(), label.str());
}

ConvexBody translate_body(const ConvexBody& body, const Vec3& offset) {
    Vec3 t = offset;
    if (body.dim() == 2 && t.z() != 0.0) throw InputError("bad-direction", "planar translation needs z = 0");
    BodyTraits traits = body.traits();
    traits.o_symmetric = traits.o_symmetric && t.norm() == 0.0;
    std::string label = "translate(" + body.label() + "," + fmt_number(t.x()) + "," + fmt_number(t.y());
    if (body.dim() == 3) label += "," + fmt_number(t.z());
    return ConvexBody(std::make_shared<TranslateModel>(body.model(), t), traits, label + ")");
}

ConvexBody dilate_body(const ConvexBody& body, double factor) {
    require_positive(factor, "dilation factor");
    return affine_image(body, factor * Mat3::Identity());
}

ConvexBody reflect_body(const ConvexBody& body) {
    return ConvexBody(std::make_shared<ReflectModel>(body.model()), body.traits(),
                      "reflect(" + body.label() + ")");
}

ConvexBody project_body(const ConvexBody& body, const Direction& u) {
    if (body.dim() != 3) throw InputError("bad-dimension", "projection needs a 3-D body");
    const auto [e1, e2] = orthonormal_frame(u.vec());
    BodyTraits traits = body.traits();
    traits.dim = 2;
    std::ostringstream label;
    label.precision(17);
    label << "project(" << body.label() << "," << u[0] << "," << u[1] << "," << u[2] << ")";
    return ConvexBody(std::make_shared<ProjectModel>(body.model(), e1, e2), traits, label.str());
}

}  // namespace tsec
